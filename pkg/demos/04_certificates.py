"""
Certificates and edge lists
===========================

"""

import tempfile
from pathlib import Path

from dscayley.constructions import build_construction2, pad_to_degree
from dscayley.graph import (certify_spec, export_certificate, export_edges, load_certificate,
                            verify_certificate)

out = Path(tempfile.mkdtemp())

# certify, write, reload and re-verify
cert = certify_spec(build_construction2(1))
export_certificate(cert, out / "rds4_m1.json")
print((out / "rds4_m1.json").read_text())
print("reloaded ok:", verify_certificate(load_certificate(out / "rds4_m1.json")))

# 16 vertices of degree 6 give 48 edges
print(export_edges(cert, out / "rds4_m1.edges"), "edges")

# padding keeps the diameter at 2
padded = certify_spec(pad_to_degree(build_construction2(1), 8))
print(padded.degree, padded.diameter, padded.provenance["notes"])
