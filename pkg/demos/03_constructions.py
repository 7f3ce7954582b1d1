"""
Building diameter-2 Cayley graphs
=================================

"""

from dscayley.constructions import build_construction1, build_construction2, build_example31
from dscayley.graph import certify_spec

# the twisted-group construction reaches 4/9 d^2 exactly
for m in (1, 3, 5):
    cert = certify_spec(build_construction2(m))
    print(f"m={m}: order {cert.order}, degree {cert.degree}, diameter {cert.diameter}, "
          f"4/9 d^2 = {4 * cert.degree**2 / 9:g}")

# the neofield construction over Z5 x Z5 gives order 25 (q - 1)^2
for q in (3, 4, 5, 8):
    spec = build_construction1(q)
    cert = certify_spec(spec)
    print(f"q={q}: order {cert.order}, measured degree {cert.degree}, "
          f"quoted {spec.claimed_degree}, diameter {cert.diameter}")

# the Z6 direct-product build; the identity in (N_1, 0) is dropped
spec = build_example31(5)
print(spec.degree, spec.notes)
