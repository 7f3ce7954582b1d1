"""Upper bounds on graph orders for given degree and diameter, and comparison tables."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


class BoundViolation(AssertionError):
    """A certified order exceeded an upper bound."""


def moore(d, k):
    """Moore bound on the order of a graph with max degree d and diameter k."""
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    if d == 2:
        return 2 * k + 1
    return 1 + d * ((d - 1) ** k - 1) // (d - 2)


def ac_upper(d):
    """floor(d^2/2 + d + 1): abelian Cayley graphs of degree d and diameter 2."""
    return d * d // 2 + d + 1


def df_upper(delta, k):
    """Lattice-covering bound for abelian Cayley graphs of degree 2*delta, diameter k."""
    return sum(2**i * comb(delta, i) * comb(k, i) for i in range(delta + 1))


def asymptotic_lower(d):
    """25/64 d^2 - 2.1 d^1.525, valid only for sufficiently large d."""
    return 25 / 64 * d * d - 2.1 * d**1.525


@dataclass
class BoundRow:
    d: int
    k: int
    moore: int
    ac_upper: int
    df_upper: int | None
    lower: int | None
    construction: str

    def fields(self):
        return [str(self.d), str(self.k), str(self.moore), str(self.ac_upper),
                "" if self.df_upper is None else str(self.df_upper),
                "" if self.lower is None else str(self.lower), self.construction]


TABLE_HEADER = ["d", "k", "moore", "ac_upper", "df_upper", "certified_order", "construction"]


def table(degrees, certificates=()):
    """One row per degree with the best certified diameter-2 order of that exact degree.

    Raises ``BoundViolation`` if any certificate beats an upper bound.
    """
    best = {}
    for cert in certificates:
        if cert.diameter is None or cert.diameter > 2:
            continue
        name = (cert.provenance or {}).get("construction", "")
        if cert.degree not in best or cert.order > best[cert.degree][0]:
            best[cert.degree] = (cert.order, name)
    rows = []
    for d in degrees:
        lower, name = best.get(d, (None, ""))
        row = BoundRow(d, 2, moore(d, 2), ac_upper(d),
                       df_upper(d // 2, 2) if d % 2 == 0 else None, lower, name)
        if lower is not None:
            if lower > row.ac_upper or row.ac_upper > row.moore:
                raise BoundViolation(f"bound chain broken at d={d}: {row}")
            if row.df_upper is not None and lower > row.df_upper:
                raise BoundViolation(f"order {lower} exceeds lattice bound at d={d}")
        rows.append(row)
    return rows


def format_table(rows):
    lines = ["\t".join(TABLE_HEADER)] + ["\t".join(r.fields()) for r in rows]
    return "\n".join(lines) + "\n"
