"""Cayley graph diameter certification and export.

Vertex g is adjacent to g*s for s in S.  Cayley graphs are vertex-transitive,
so the eccentricity of the identity is the diameter; ``all_pairs_diameter``
checks that on small graphs with scipy's all-pairs BFS.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from . import groupring as gr
from .algebra import group_from_descriptor
from .bounds import ac_upper

ALL_PAIRS_LIMIT = 2000
_CHUNK = 1 << 22  # neighbour evaluations per vectorised step


class DisconnectedGraphError(ValueError):
    """S does not generate the group."""


class CertificateError(ValueError):
    pass


def _check_generators(group, S):
    S = np.unique(np.asarray(S, dtype=np.int64))
    if S.size and (S.min() < 0 or S.max() >= group.order):
        raise ValueError("generator index out of range")
    if 0 in S:
        raise ValueError("S must not contain the identity")
    if set(np.asarray(group.inv(S)).tolist()) != set(S.tolist()):
        raise ValueError("S must be closed under inversion")
    return S


def bfs_levels(group, S):
    """Distance from the identity to every vertex (-1 when unreachable)."""
    S = _check_generators(group, S)
    level = np.full(group.order, -1, dtype=np.int16)
    level[0] = 0
    frontier = np.array([0], dtype=np.int64)
    depth = 0
    while frontier.size and S.size:
        depth += 1
        reached = np.zeros(group.order, dtype=bool)
        step = max(1, _CHUNK // S.size)
        for start in range(0, frontier.size, step):
            block = frontier[start:start + step]
            reached[np.ravel(group.op(block[:, None], S[None, :]))] = True
        reached &= level < 0
        frontier = np.flatnonzero(reached)
        level[frontier] = depth
    return level


def diameter_bfs(group, S):
    """Eccentricity of the identity by breadth-first search."""
    level = bfs_levels(group, S)
    if np.any(level < 0):
        raise DisconnectedGraphError(f"{int(np.sum(level < 0))} vertices unreachable")
    return int(level.max())


def diameter_groupring(group, S):
    """Decide diameter <= 2 from ``e + S + S*S >= G`` in Z[G].

    Returns 0, 1 or 2, or None when the diameter exceeds 2.
    """
    S = _check_generators(group, S)
    if group.order == 1:
        return 0
    A = gr.from_subset(group, S)
    one = gr.identity(group)
    if gr.covers_group(one + A)[0]:
        return 1
    if gr.covers_group(one + A + gr.mul(A, A))[0]:
        return 2
    return None


def neighbour_table(group, S):
    S = _check_generators(group, S)
    return np.asarray(group.op(group.elements()[:, None], S[None, :]))


def all_pairs_diameter(group, S):
    """Diameter from BFS at every vertex (scipy), for groups of order <= 2000."""
    if group.order > ALL_PAIRS_LIMIT:
        raise ValueError(f"all-pairs check limited to order {ALL_PAIRS_LIMIT}")
    nbrs = neighbour_table(group, S)
    v = group.order
    rows = np.repeat(np.arange(v), nbrs.shape[1])
    adj = csr_matrix((np.ones(rows.size), (rows, nbrs.ravel())), shape=(v, v))
    dist = shortest_path(adj, directed=True, unweighted=True)
    if np.isinf(dist).any():
        raise DisconnectedGraphError("graph is disconnected")
    return int(dist.max())


def edges(group, S):
    """Sorted array of edges (u, v), u < v."""
    nbrs = neighbour_table(group, S)
    u = np.repeat(np.arange(group.order), nbrs.shape[1])
    v = nbrs.ravel()
    keep = u < v
    pairs = np.stack([u[keep], v[keep]], axis=1)
    return pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]


@dataclass
class CayleyCertificate:
    group: dict            # group descriptor
    generators: list
    order: int
    degree: int
    diameter: int | None = None
    provenance: dict = field(default_factory=dict)
    methods: list = field(default_factory=list)
    claimed_degree: int | None = None

    @property
    def verified(self):
        return self.diameter is not None and bool(self.methods)

    def to_text(self):
        payload = {
            "group": self.group,
            "generators": self.generators,
            "order": self.order,
            "degree": self.degree,
            "diameter": self.diameter,
            "provenance": self.provenance,
            "methods": self.methods,
            "claimed_degree": self.claimed_degree,
        }
        return json.dumps(payload, indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_text(cls, text):
        data = json.loads(text)
        return cls(**{k: data.get(k) for k in (
            "group", "generators", "order", "degree", "diameter",
            "provenance", "methods", "claimed_degree")})

    def build_group(self, max_order=None):
        return group_from_descriptor(self.group, max_order=max_order)


def certify(group, S, *, provenance=None, claimed_degree=None, all_pairs=None):
    """Verify the diameter of Cayley(group, S) and return a certificate.

    BFS always runs.  The group-ring decision runs as a second method and
    must agree whenever BFS gives a diameter of at most 2; the all-pairs
    check runs by default for groups of order <= 2000.
    """
    S = _check_generators(group, S)
    k = diameter_bfs(group, S)
    methods = ["bfs"]
    gr_k = diameter_groupring(group, S)
    if (gr_k is None) != (k > 2) or (gr_k is not None and gr_k != k):
        raise CertificateError(f"group-ring decision {gr_k} disagrees with BFS diameter {k}")
    methods.append("groupring")
    if all_pairs is None:
        all_pairs = group.order <= ALL_PAIRS_LIMIT
    if all_pairs:
        ap = all_pairs_diameter(group, S)
        if ap != k:
            raise CertificateError(f"all-pairs diameter {ap} != BFS diameter {k}")
        methods.append("all_pairs")
    d = int(S.size)
    if k <= 2 and group.order > d * d + 1:
        raise CertificateError("order exceeds the Moore bound; implementation bug")
    if k <= 2 and group.order > ac_upper(d):
        raise CertificateError("order exceeds the abelian counting bound; implementation bug")
    return CayleyCertificate(group.descriptor(), S.tolist(), group.order, d, k,
                             dict(provenance or {}), methods, claimed_degree)


def certify_spec(spec, **kwargs):
    """Certificate for a ``GeneratingSpec`` from the constructions module."""
    return certify(spec.group, spec.generators, provenance=spec.provenance(),
                   claimed_degree=spec.claimed_degree, **kwargs)


def verify_certificate(cert, max_order=None):
    """Recompute the diameter from the stored group and generators."""
    group = cert.build_group(max_order)
    if group.order != cert.order or len(cert.generators) != cert.degree:
        return False
    try:
        return diameter_bfs(group, cert.generators) == cert.diameter
    except (ValueError, DisconnectedGraphError):
        return False


def export_certificate(cert, path):
    if not cert.verified:
        raise CertificateError("certificate has not been verified")
    Path(path).write_text(cert.to_text())


def load_certificate(path):
    return CayleyCertificate.from_text(Path(path).read_text())


def export_edges(cert, path, max_order=None):
    """Write the edge list, one ``u v`` line per edge with u < v."""
    if not cert.verified:
        raise CertificateError("certificate has not been verified")
    pairs = edges(cert.build_group(max_order), cert.generators)
    with open(path, "w") as fh:
        for u, v in pairs:
            fh.write(f"{u} {v}\n")
    return len(pairs)
