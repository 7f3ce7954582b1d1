"""Generating sets S in G x H built from difference sets.

Every construction has the shape

    S = sum_{g in Psi} (D, g) + (D^(-1), -g) + sum_i sum_{h in Lambda_i} (N_i, h) + Upsilon

and is returned as a ``GeneratingSpec``.  The layers are kept so the
group-ring multiset (which may contain the identity or repeated elements)
can be inspected; ``generators`` is the actual Cayley set, duplicate-free
and without the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import groupring as gr
from .algebra import cyclic_group, direct_product, prime_power
from .covering import check_cover, construction1_config
from .diffsets import dpds, lemma34_identity, neofield_gds, trivial_planar_rds


class ConstructionError(ValueError):
    """Raised when parameters do not admit the requested construction."""


@dataclass(frozen=True)
class Layer:
    label: str
    subset: tuple  # indices in the base group G
    h: int         # index in the auxiliary group H


@dataclass
class GeneratingSpec:
    name: str
    base: object        # G
    aux: object         # H
    group: object       # G x H
    layers: list
    upsilon: tuple      # indices in G x H
    generators: tuple
    params: dict = field(default_factory=dict)
    claimed_degree: int | None = None
    notes: list = field(default_factory=list)

    @property
    def order(self):
        return self.group.order

    @property
    def degree(self):
        return len(self.generators)

    def multiset(self):
        """S as written in the group ring, identity and overlaps included."""
        G, H = self.base, self.aux
        idx = [self.group.compose(np.asarray(l.subset, dtype=np.int64), l.h)
               for l in self.layers if l.subset]
        idx.append(np.asarray(self.upsilon, dtype=np.int64))
        return gr.from_subset(self.group, np.concatenate(idx) if idx else [])

    def provenance(self):
        return {"construction": self.name, "params": self.params,
                "claimed_degree": self.claimed_degree, "notes": list(self.notes)}


def is_symmetric(group, S):
    S = np.asarray(S, dtype=np.int64)
    return set(np.asarray(group.inv(S)).tolist()) == set(S.tolist())


def assemble(name, G, H, layers, upsilon=(), **kwargs):
    """Build a GeneratingSpec, dropping the identity and duplicates from the Cayley set."""
    GH = direct_product(G, H)
    spec = GeneratingSpec(name, G, H, GH, list(layers), tuple(int(x) for x in upsilon), (),
                          **kwargs)
    mult = spec.multiset()
    if mult[0]:
        spec.notes.append("identity removed from S")
    if np.any(mult.coeffs > 1):
        spec.notes.append(f"{int((mult.coeffs[mult.coeffs > 1] - 1).sum())} repeated elements merged")
    support = mult.support
    spec.generators = tuple(int(x) for x in support if x != 0)
    if not is_symmetric(GH, spec.generators):
        raise ConstructionError(f"{name}: S is not closed under inversion")
    return spec


def _psi_lambda_layers(G, H, D, Ns, config):
    Dinv = tuple(int(x) for x in np.asarray(G.inv(np.asarray(D, dtype=np.int64))))
    layers = []
    for g in config.psi:
        layers.append(Layer("D", tuple(D), g))
        layers.append(Layer("D^-1", Dinv, int(H.inv(g))))
    for i, (N, lam) in enumerate(zip(Ns, config.lambdas), start=1):
        for h in lam:
            layers.append(Layer(f"N_{i}", tuple(N), h))
    return layers


def build_example31(q):
    """Direct product difference set in (F_q,+) x (F_q*,*) with H = Z6.

    Psi = {1}, Lambda_1 = {0}, Lambda_2 = {3} and
    Upsilon = {(0, 1, 1), (0, 1, -1)}.
    """
    if prime_power(q) is None or q < 3:
        raise ConstructionError("q must be a prime power >= 3")
    desc = dpds(q)
    G = desc.group
    H = cyclic_group(6)
    N1, N2 = (s.elements for s in desc.subgroups)
    layers = [Layer("D", desc.D, 1),
              Layer("D^-1", tuple(np.asarray(G.inv(np.array(desc.D))).tolist()), 5),
              Layer("N_1", N1, 0),
              Layer("N_2", N2, 3)]
    GH = direct_product(G, H)
    # (0, 1) is the identity of (F_q,+) x (F_q*,*)
    upsilon = (GH.compose(0, 1), GH.compose(0, 5))
    return assemble("example31", G, H, layers, upsilon, params={"q": q},
                    claimed_degree=4 * q - 2)


def construction1_claimed_degree(q):
    return 8 * q - 6 if q % 2 == 0 else 8 * q - 4


def build_construction1(q, config=None, *, literal=False):
    """Neofield construction over (F_q*)^2 x H, H = Z5 x Z5 by default.

    D~ is D plus (1, 1), and also (1, -1) when q is odd.  The covering
    config must satisfy the covering condition; ``literal=True`` selects the
    printed d = a_1 = (1, 0) values, which are rejected.
    """
    if prime_power(q) is None or q < 3:
        raise ConstructionError("q must be a prime power >= 3")
    if config is None:
        config = construction1_config(literal=literal)
    if config.k != 3:
        raise ConstructionError("construction I needs three Lambda sets")
    ok, uncovered = check_cover(config)
    if not ok:
        raise ConstructionError(f"covering config fails; uncovered elements of H: {uncovered}")
    desc = neofield_gds(q)
    G, F = desc.group, desc.group.factors[0].field
    D = list(desc.D) + [0]
    if q % 2:
        D.append(G.compose(0, F.neg(1) - 1))
    Ns = [s.elements for s in desc.subgroups]
    layers = _psi_lambda_layers(G, config.H, D, Ns, config)
    return assemble("construction1", G, config.H, layers,
                    params={"q": q, "psi": list(config.psi),
                            "lambdas": [list(l) for l in config.lambdas]},
                    claimed_degree=construction1_claimed_degree(q))


def build_construction2(m, *, pad=True):
    """Twisted-group RDS construction S = (D,1) + (D^(-1),-1) + (N,0) in Z4^m x Z4.

    The written S contains the identity (through N at 0), so the Cayley set
    has 3q - 1 elements.  With ``pad=True`` one element is added back by
    ``pad_to_degree`` so the certificate has the stated degree 3q.
    """
    if m < 1:
        raise ConstructionError("m must be >= 1")
    if m % 2 == 0:
        holds, defect = lemma34_identity(m)
        witness = defect.items()[:5]
        raise ConstructionError(
            f"m={m} is even: D*D + D^(-1)*D^(-1) != 2G, defect terms (index:coeff) {witness}")
    desc = trivial_planar_rds(m)
    G = desc.group
    H = cyclic_group(4)
    Dinv = tuple(np.asarray(G.inv(np.array(desc.D))).tolist())
    layers = [Layer("D", desc.D, 1), Layer("D^-1", Dinv, 3),
              Layer("N", desc.subgroups[0].elements, 0)]
    q = 2**m
    spec = assemble("construction2", G, H, layers, params={"m": m}, claimed_degree=3 * q)
    if pad:
        spec = pad_to_degree(spec, 3 * q)
    return spec


def pad_generators(group, S, d):
    """Add elements in index order until |S| = d, keeping S symmetric.

    Involutions are used first, then inverse pairs ``{g, g^-1}``.
    """
    S = sorted(int(x) for x in S)
    if not len(S) <= d <= group.order - 1:
        raise ConstructionError(f"target degree {d} outside [{len(S)}, {group.order - 1}]")
    taken = set(S) | {0}
    deficit = d - len(S)
    if deficit == 0:
        return tuple(S)
    elems = group.elements()
    invs = np.asarray(group.inv(elems))
    involutions = [int(g) for g in np.flatnonzero(invs == elems) if int(g) not in taken]
    # as many involutions as possible while leaving an even remainder for pairs
    t = min(len(involutions), deficit)
    t -= (deficit - t) % 2
    if t < 0:
        raise ConstructionError(f"cannot reach degree {d}: odd deficit and no free involution")
    added = involutions[:t]
    taken.update(added)
    deficit -= t
    for g in range(1, group.order):
        if deficit < 2:
            break
        h = int(invs[g])
        if g in taken or h in taken or g == h:
            continue
        added += [g, h]
        taken |= {g, h}
        deficit -= 2
    if deficit:
        raise ConstructionError(f"cannot reach degree {d} symmetrically")
    return tuple(sorted(S + added))


def pad_to_degree(spec, d):
    """Return a copy of spec whose generating set has been padded to degree d."""
    if d == spec.degree:
        return spec
    gens = pad_generators(spec.group, spec.generators, d)
    out = GeneratingSpec(spec.name, spec.base, spec.aux, spec.group, list(spec.layers),
                         spec.upsilon, gens, dict(spec.params), spec.claimed_degree,
                         list(spec.notes))
    out.notes.append(f"padded from {spec.degree} to {d}")
    out.params["padded_to"] = d
    return out


def _prime_powers(lo, hi):
    return [q for q in range(lo, hi + 1) if prime_power(q) is not None]


def base_candidates(d):
    """(order, name, parameter, unpadded degree) for every base construction fitting degree d."""
    out = []
    for q in _prime_powers(3, d // 8 + 2):
        deg = 8 * q - 8 if q % 2 == 0 else 8 * q - 6
        if deg <= d:
            out.append((25 * (q - 1) ** 2, "construction1", q, deg))
    m = 1
    while 3 * 2**m - 1 <= d:
        out.append((4 ** (m + 1), "construction2", m, 3 * 2**m - 1))
        m += 2
    for q in _prime_powers(3, d // 4 + 1):
        if 4 * q - 2 <= d:
            out.append((6 * q * (q - 1), "example31", q, 4 * q - 2))
    return out


def best_for_degree(d):
    """Largest base construction with unpadded degree <= d, padded to exactly d.

    Candidates whose padding is blocked by parity (odd deficit, no free
    involution) are skipped in favour of the next largest.
    """
    if d < 5:
        raise ConstructionError("no base construction fits degree < 5")
    builders = {"construction1": build_construction1,
                "construction2": lambda m: build_construction2(m, pad=False),
                "example31": build_example31}
    for order, name, param, _ in sorted(base_candidates(d), key=lambda c: (-c[0], c[3], c[1])):
        try:
            return pad_to_degree(builders[name](param), d)
        except ConstructionError:
            continue
    raise ConstructionError(f"no base construction fits degree {d}")
