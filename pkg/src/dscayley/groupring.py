"""The integer group ring Z[G] on top of the indexed groups in ``algebra``.

Elements are dense int64 coefficient vectors.  Products iterate only over
support pairs, so multiplying two sets of size ~sqrt(|G|) is cheap even
for groups with millions of elements.
"""

from __future__ import annotations

import numpy as np

_INT64_MAX = np.iinfo(np.int64).max


class GroupRingElement:
    """A formal sum ``sum(a_g g)`` with integer coefficients."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group, coeffs):
        coeffs = np.array(coeffs, dtype=np.int64)
        if coeffs.shape != (group.order,):
            raise ValueError(f"expected {group.order} coefficients, got {coeffs.shape}")
        coeffs.setflags(write=False)
        self.group = group
        self.coeffs = coeffs

    def _same_group(self, other):
        if not isinstance(other, GroupRingElement):
            raise TypeError("expected a GroupRingElement")
        if other.group is not self.group and other.group != self.group:
            raise ValueError("group ring elements live over different groups")

    def __add__(self, other):
        if isinstance(other, (int, np.integer)):
            other = other * identity(self.group)
        self._same_group(other)
        return GroupRingElement(self.group, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, np.integer)):
            other = other * identity(self.group)
        self._same_group(other)
        return GroupRingElement(self.group, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-1) * self + other

    def __neg__(self):
        return GroupRingElement(self.group, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.group, self.coeffs * int(other))
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GroupRingElement(self.group, self.coeffs * int(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        terms = ", ".join(f"{i}:{c}" for i, c in self.items())
        return f"GroupRingElement({{{terms}}})"

    def __getitem__(self, g):
        return int(self.coeffs[g])

    @property
    def support(self):
        return np.flatnonzero(self.coeffs)

    def items(self):
        """(index, coefficient) pairs over the support, sorted by index."""
        return [(int(i), int(self.coeffs[i])) for i in self.support]

    def augmentation(self):
        return int(self.coeffs.sum())

    def is_zero(self):
        return not self.coeffs.any()

    def dump(self):
        """Text form: one ``index:coefficient`` line per nonzero term."""
        return "".join(f"{i}:{c}\n" for i, c in self.items())


def from_subset(group, elements):
    """Group ring element of a subset or multiset of element indices."""
    idx = np.asarray(list(elements), dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= group.order):
        raise IndexError("element index out of range")
    return GroupRingElement(group, np.bincount(idx, minlength=group.order))


def zero(group):
    return GroupRingElement(group, np.zeros(group.order, dtype=np.int64))


def identity(group):
    return from_subset(group, [0])


def whole_group(group):
    """The element G = sum of all group elements."""
    return GroupRingElement(group, np.ones(group.order, dtype=np.int64))


def mul(a, b):
    """Convolution: the coefficient of g is ``sum_h a_h * b_{h^-1 g}``."""
    a._same_group(b)
    bound = int(np.abs(a.coeffs).sum()) * int(np.abs(b.coeffs).sum())
    if bound > _INT64_MAX:
        raise OverflowError("product coefficients may exceed int64")
    group = a.group
    out = np.zeros(group.order, dtype=np.int64)
    sa, sb = a.support, b.support
    if sa.size <= sb.size:
        cb = b.coeffs[sb]
        for h in sa:
            np.add.at(out, group.op(int(h), sb), a.coeffs[h] * cb)
    else:
        ca = a.coeffs[sa]
        for k in sb:
            np.add.at(out, group.op(sa, int(k)), ca * b.coeffs[k])
    return GroupRingElement(group, out)


def power_image(a, t):
    """``A^(t) = sum(a_g g^t)``; coefficients landing on the same element add."""
    out = np.zeros(a.group.order, dtype=np.int64)
    s = a.support
    if s.size:
        np.add.at(out, a.group.power(s, t), a.coeffs[s])
    return GroupRingElement(a.group, out)


def inv_image(a):
    """``A^(-1)``: move every coefficient to the inverse element."""
    out = np.zeros(a.group.order, dtype=np.int64)
    s = a.support
    if s.size:
        np.add.at(out, a.group.inv(s), a.coeffs[s])
    return GroupRingElement(a.group, out)


def leq(a, b):
    """The coefficientwise order A <= B."""
    a._same_group(b)
    return bool(np.all(a.coeffs <= b.coeffs))


def covers_group(a):
    """Return ``(ok, uncovered)``: ok iff every coefficient is at least 1."""
    uncovered = np.flatnonzero(a.coeffs < 1)
    return uncovered.size == 0, uncovered.tolist()
