"""The covering condition on the auxiliary group H and the search over small H.

A covering configuration is a set Psi and inverse-closed sets Lambda_1..Lambda_k
in an abelian group H such that

    H <= Psi Psi^(-1) + sum_i Psi Lambda_i + sum_i Psi^(-1) Lambda_i
         + sum_{i != j} Lambda_i Lambda_j          in Z[H].

Its cost is s = 2|Psi| + sum |Lambda_i| and its score is |H| / s^2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import groupring as gr
from .algebra import cyclic_group, direct_product


class SearchTooLargeError(ValueError):
    """Raised when a search would enumerate more candidates than allowed."""


def abelian_groups(n):
    """Invariant factor lists ``[d_1, ..., d_r]`` with d_i | d_{i+1}, product n, d_1 > 1.

    The trivial group is ``[]``.
    """
    if n == 1:
        return [[]]
    out = []

    def rec(remaining, prefix):
        if remaining == 1:
            out.append(list(reversed(prefix)))
            return
        # build from the largest factor down; each new factor divides the previous
        for d in range(2, remaining + 1):
            if remaining % d:
                continue
            if prefix and prefix[-1] % d:
                continue
            rest = remaining // d
            # every later factor divides d, so rest must be a product of divisors of d
            if _product_of_divisors(rest, d):
                rec(rest, prefix + [d])

    rec(n, [])
    return sorted(out, key=lambda fs: (len(fs), fs))


def _product_of_divisors(n, d):
    return all(d % p == 0 for p in _prime_factors(n))


def _prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def abelian_group(factors):
    """The group Z_{d_1} x ... x Z_{d_r}; ``[]`` gives the trivial group."""
    if not factors:
        return cyclic_group(1)
    if len(factors) == 1:
        return cyclic_group(factors[0])
    return direct_product(*(cyclic_group(d) for d in factors))


def group_label(H):
    desc = H.descriptor()
    if desc["kind"] == "cyclic":
        return f"Z{desc['n']}"
    return "x".join(f"Z{f['n']}" for f in desc["factors"])


@dataclass(frozen=True)
class CoveringConfig:
    H: object
    psi: tuple
    lambdas: tuple

    def __post_init__(self):
        object.__setattr__(self, "psi", tuple(sorted(int(x) for x in self.psi)))
        object.__setattr__(self, "lambdas", tuple(tuple(sorted(int(x) for x in lam))
                                                  for lam in self.lambdas))
        for lam in self.lambdas:
            if len(set(lam)) != len(lam):
                raise ValueError("Lambda sets must not repeat elements")
            inv = {int(self.H.inv(x)) for x in lam}
            if inv != set(lam):
                raise ValueError(f"Lambda {lam} is not closed under inversion")

    @property
    def k(self):
        return len(self.lambdas)

    @property
    def thetas(self):
        return tuple(len(lam) for lam in self.lambdas)

    @property
    def s(self):
        return 2 * len(self.psi) + sum(self.thetas)

    @property
    def score(self):
        return Fraction(self.H.order, self.s**2)

    def row(self):
        """Fields for the tab-separated search table."""
        lams = ";".join("{" + ",".join(map(str, lam)) + "}" for lam in self.lambdas)
        return [group_label(self.H), "{" + ",".join(map(str, self.psi)) + "}", lams,
                str(self.s), str(self.score)]


def coverage(c):
    """The left-hand side of the covering condition as an element of Z[H]."""
    H = c.H
    P = gr.from_subset(H, c.psi)
    Pinv = gr.inv_image(P)
    Ls = [gr.from_subset(H, lam) for lam in c.lambdas]
    total = gr.mul(P, Pinv)
    for L in Ls:
        total = total + gr.mul(P, L) + gr.mul(Pinv, L)
    for i, j in itertools.permutations(range(len(Ls)), 2):
        total = total + gr.mul(Ls[i], Ls[j])
    return total


def check_cover(c):
    """Return ``(ok, uncovered)`` for the covering condition."""
    return gr.covers_group(coverage(c))


def _z5z5_config(a1):
    H = abelian_group([5, 5])
    pt = lambda x, y: H.compose(x % 5, y % 5)
    d = pt(1, 0)
    a = [a1, (0, 1), (0, 2)]
    lambdas = [(pt(*v), pt(-v[0], -v[1])) for v in a]
    return CoveringConfig(H, (d,), lambdas)


def construction1_config(literal=False):
    """Covering config on Z5 x Z5 for the neofield construction.

    ``literal=True`` uses d = a_1 = (1, 0) as printed, which does not cover;
    the default moves a_1 to (2, 0), which covers exactly.
    """
    return _z5z5_config((1, 0) if literal else (2, 0))


def example31_config():
    """H = Z6, Psi = {1}, Lambda_1 = {0}, Lambda_2 = {3}."""
    return CoveringConfig(cyclic_group(6), (1,), ((0,), (3,)))


def coverage_upper_bound(psi, thetas):
    """Most distinct elements the covering sum can reach in an abelian H."""
    pairs = sum(a * b for a, b in itertools.combinations(thetas, 2))
    return 1 + psi * (psi - 1) + 2 * psi * sum(thetas) + pairs


def _inverse_closed_subsets(H, max_size):
    orbits = sorted({tuple(sorted({h, int(H.inv(h))})) for h in range(H.order)})
    out = []
    for r in range(len(orbits) + 1):
        found = False
        for combo in itertools.combinations(orbits, r):
            size = sum(len(o) for o in combo)
            if size <= max_size:
                out.append(tuple(sorted(x for o in combo for x in o)))
                found = True
        if not found and r > max_size:
            break
    return sorted(out, key=lambda s: (len(s), s))


def _profile_count(by_size, thetas):
    count = 1
    for size in set(thetas):
        count *= math.comb(len(by_size[size]) + thetas.count(size) - 1, thetas.count(size))
    return count


def _profile_tuples(by_size, thetas):
    """All Lambda index tuples whose sizes match the sorted profile ``thetas``."""
    sizes = sorted(set(thetas))
    parts = [list(itertools.combinations_with_replacement(by_size[z], thetas.count(z)))
             for z in sizes]
    for combo in itertools.product(*parts):
        yield tuple(i for part in combo for i in part)


def _mask(elements):
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def best_cover_for_group(H, k=3, max_psi=1, max_theta=2, min_psi=1, max_candidates=10**8):
    """Smallest-s covering config for H within the bounds, or None.

    Candidates are tried in order of increasing s; within one (psi, theta)
    profile the Lambda tuples are scanned in chunks and Psi sets in
    lexicographic order, and the first cover found is returned.  Lambda tuples
    are enumerated as multisets since the condition is symmetric in them.
    """
    n = H.order
    lams = _inverse_closed_subsets(H, max_theta)
    by_size = {}
    for i, lam in enumerate(lams):
        by_size.setdefault(len(lam), []).append(i)
    profiles = list(itertools.combinations_with_replacement(sorted(by_size), k))
    plan = []
    for r in range(min_psi, max_psi + 1):
        for thetas in profiles:
            if r > n or coverage_upper_bound(r, thetas) < n:
                continue
            plan.append((2 * r + sum(thetas), r, thetas))
    plan.sort()
    total = sum(math.comb(n, r) * _profile_count(by_size, th) for _, r, th in plan)
    if total > max_candidates:
        raise SearchTooLargeError(f"{total} candidates for |H|={n} exceed {max_candidates}")
    if not plan:
        return None

    table = H.op(H.elements()[:, None], H.elements()[None, :]).tolist()
    inv = [int(H.inv(h)) for h in range(n)]
    # uint64 bitmasks while they fit, Python ints otherwise
    dtype = np.uint64 if n <= 64 else object
    full = _as_mask((1 << n) - 1, dtype)
    L = len(lams)
    pair_masks = np.empty((L, L), dtype=dtype)
    for a, b in itertools.combinations_with_replacement(range(L), 2):
        pair_masks[a, b] = pair_masks[b, a] = _as_mask(
            _mask(table[x][y] for x in lams[a] for y in lams[b]), dtype)

    for _, r, thetas in plan:
        for chunk in _chunks(_profile_tuples(by_size, thetas), 1 << 16):
            T = np.array(chunk, dtype=np.int64).reshape(-1, k)
            pairs = np.zeros(len(T), dtype=dtype)
            for i, j in itertools.combinations(range(k), 2):
                pairs |= pair_masks[T[:, i], T[:, j]]
            for p in itertools.combinations(range(n), r):
                pm = _mask(table[x][inv[y]] for x in p for y in p)
                pl = np.array([_as_mask(_mask([table[x][y] for x in p for y in lam]
                                              + [table[inv[x]][y] for x in p for y in lam]),
                                        dtype) for lam in lams], dtype=dtype)
                m = pairs | _as_mask(pm, dtype)
                for i in range(k):
                    m |= pl[T[:, i]]
                hits = np.flatnonzero(m == full)
                if hits.size:
                    return CoveringConfig(H, p, [lams[i] for i in T[hits[0]]])
    return None


def _as_mask(value, dtype):
    return np.uint64(value) if dtype is np.uint64 else value


def _chunks(iterable, size):
    it = iter(iterable)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def search_cover(max_order, k=3, max_psi=1, max_theta=2, *, min_order=1, min_psi=1,
                 max_candidates=10**8):
    """Best covering config for every abelian group of order <= max_order.

    Cost is roughly ``sum_H C(|H|, <=max_psi) * C(L + k - 1, k)`` mask
    evaluations, where L is the number of inverse-closed subsets of size
    <= max_theta; the count bound prunes every (psi, theta) profile that
    cannot reach |H| elements.  Results are sorted by score (descending),
    then by group order and label.  Every returned config has been
    re-verified through the group-ring path.
    """
    found = []
    for n in range(min_order, max_order + 1):
        for factors in abelian_groups(n):
            H = abelian_group(factors)
            c = best_cover_for_group(H, k, max_psi, max_theta, min_psi, max_candidates)
            if c is None:
                continue
            ok, _ = check_cover(c)
            if not ok:
                raise AssertionError(f"search produced a non-covering config {c}")
            found.append(c)
    return sorted(found, key=lambda c: (-c.score, c.H.order, group_label(c.H), c.psi, c.lambdas))


SEARCH_HEADER = ["H", "psi", "lambdas", "s", "score"]


def format_search_table(configs):
    lines = ["\t".join(SEARCH_HEADER)]
    lines += ["\t".join(c.row()) for c in configs]
    return "\n".join(lines) + "\n"


def tau_bound(s):
    """Closed-form upper bound ((2s - 1/2)^2 / 10 + 1) / s^2 as an exact fraction."""
    s = Fraction(s)
    return ((2 * s - Fraction(1, 2)) ** 2 / 10 + 1) / s**2


def tau_value(psi, theta):
    s = 2 * psi + theta
    return Fraction(1 + psi * (psi - 1) + psi * (psi + 1) // 2 + 2 * psi * theta, s * s)


def tau_exhaustive(s):
    """Max of the counting ratio over psi >= 1, theta >= 0 with 2 psi + theta = s."""
    if s < 2:
        raise ValueError("s must be at least 2")
    return max(tau_value(psi, s - 2 * psi) for psi in range(1, s // 2 + 1))


def tau_argmax(s):
    return max(range(1, s // 2 + 1), key=lambda psi: tau_value(psi, s - 2 * psi))

