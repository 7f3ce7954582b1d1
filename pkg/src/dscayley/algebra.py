"""Finite fields GF(q) and the finite abelian groups used by the constructions.

Every field and group element is an integer index.  Field elements with
coefficient vector ``(c_0, ..., c_{e-1})`` over GF(p) have index
``sum(c_i * p**i)``, so index 0 is zero and index 1 is one.  Every group has
its identity at index 0.  Group operations are computed by formula and
accept numpy integer arrays as well as plain ints, which is what the
BFS and the group-ring convolution rely on.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

DEFAULT_MAX_ORDER = 2**22

# Reduction polynomials for GF(2^m), low-order coefficient first.
_BINARY_POLYS = {
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    7: (1, 1, 0, 0, 0, 0, 0, 1),
    9: (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    11: (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
}


class SizeGuardError(ValueError):
    """Raised when a field or group would exceed the configured maximum order."""


def _check_guard(order, max_order):
    limit = DEFAULT_MAX_ORDER if max_order is None else max_order
    if order > limit:
        raise SizeGuardError(f"order {order} exceeds size guard {limit}")


def prime_power(q):
    """Return ``(p, e)`` with ``q == p**e`` and p prime, or None."""
    if q < 2:
        return None
    p = next(d for d in itertools.count(2) if q % d == 0 or d * d > q)
    if q % p:
        p = q
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# --- polynomials over GF(p), coefficient lists low-order first -------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a = _poly_trim(a)
    return a


def _monic_polys(p, degree):
    for low in itertools.product(range(p), repeat=degree):
        yield list(reversed(low)) + [1]


def is_irreducible(poly, p):
    """Trial division against every monic polynomial of degree <= deg/2."""
    poly = _poly_trim(poly)
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def smallest_irreducible(p, e):
    """Monic irreducible of degree e with the smallest base-p encoding of its lower coefficients."""
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        poly = low + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")


def reduction_polynomial(p, e):
    if e == 1:
        return (0, 1)
    if p == 2 and e in _BINARY_POLYS:
        return _BINARY_POLYS[e]
    return smallest_irreducible(p, e)


class FiniteField:
    """GF(q) with q = p**e, using a fixed reduction polynomial.

    Arithmetic methods accept ints or integer numpy arrays.  Multiplication
    goes through log/exp tables built from the first primitive element.
    """

    def __init__(self, p, e, poly=None, *, max_order=None):
        self.p = p
        self.e = e
        self.q = p**e
        _check_guard(self.q, max_order)
        self.poly = tuple(poly) if poly is not None else reduction_polynomial(p, e)
        if len(self.poly) != e + 1 or self.poly[-1] != 1:
            raise ValueError("reduction polynomial must be monic of degree e")
        if e > 1 and not is_irreducible(self.poly, p):
            raise ValueError(f"{self.poly} is reducible over GF({p})")
        self._build_tables()

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.e, self.poly) == (
            other.p, other.e, other.poly)

    def __hash__(self):
        return hash((self.p, self.e, self.poly))

    # scalar polynomial arithmetic, used only to build the tables
    def _digits(self, x):
        return [(x // self.p**i) % self.p for i in range(self.e)]

    def _from_digits(self, digits):
        return sum(int(c) * self.p**i for i, c in enumerate(digits))

    def _slow_mul(self, x, y):
        a, b = self._digits(x), self._digits(y)
        prod = [0] * (2 * self.e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        rem = _poly_mod(prod, self.poly, self.p) if self.e > 1 else [c % self.p for c in prod]
        return self._from_digits(rem + [0] * (self.e - len(rem)))

    def _build_tables(self):
        q = self.q
        if q == 2:
            self.primitive = 1
            self._exp = np.array([1, 1], dtype=np.int64)
            self._log = np.array([0, 0], dtype=np.int64)
            return
        for g in range(2, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._slow_mul(x, g)
            if len(powers) == q - 1:
                break
        self.primitive = g
        exp = np.array(powers + powers, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        self._exp, self._log = exp, log

    # vectorised arithmetic
    def add(self, x, y):
        if self.p == 2:
            return x ^ y
        if self.e == 1:
            return (x + y) % self.p
        return self._digitwise(x, y, 1)

    def sub(self, x, y):
        if self.p == 2:
            return x ^ y
        if self.e == 1:
            return (x - y) % self.p
        return self._digitwise(x, y, -1)

    def neg(self, x):
        return self.sub(0, x)

    def _digitwise(self, x, y, sign):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        for i in range(self.e):
            w = self.p**i
            out += ((x // w + sign * (y // w)) % self.p) * w
        return out if out.ndim else int(out)

    def mul(self, x, y):
        if np.ndim(x) == 0 and np.ndim(y) == 0:
            if x == 0 or y == 0:
                return 0
            return int(self._exp[self._log[x] + self._log[y]])
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = self._exp[self._log[x] + self._log[y]]
        return np.where((x == 0) | (y == 0), 0, out)

    def inv(self, x):
        if np.any(np.asarray(x) == 0):
            raise ZeroDivisionError("zero has no inverse")
        out = self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]
        return out if np.ndim(x) else int(out)

    def pow(self, x, t):
        if x == 0:
            if t < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if t == 0 else 0
        return int(self._exp[(self._log[x] * t) % (self.q - 1)])

    def elements(self):
        return range(self.q)


def field_make(q, *, max_order=None):
    """Return GF(q) with the module's fixed reduction polynomial."""
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    _check_guard(q, max_order)
    return _field_cached(*pe, max_order)


_FIELDS = {}


def _field_cached(p, e, max_order):
    key = (p, e)
    if key not in _FIELDS:
        _FIELDS[key] = FiniteField(p, e, max_order=max_order)
    return _FIELDS[key]


# --- groups -----------------------------------------------------------------

class FiniteGroup:
    """Finite group on indices ``0 .. order-1`` with identity 0.

    Subclasses implement ``op`` and ``inv`` vectorised over numpy arrays and
    ``descriptor`` for serialization.
    """

    order: int

    identity = 0

    def op(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def power(self, x, t):
        """Elementwise ``x**t`` by square-and-multiply."""
        x = np.asarray(x, dtype=np.int64)
        if t < 0:
            x, t = self.inv(x), -t
        result = np.zeros_like(x)
        base = x
        while t:
            if t & 1:
                result = self.op(result, base)
            base = self.op(base, base)
            t >>= 1
        return result if result.ndim else int(result)

    def element_order(self, x):
        n, y = 1, x
        while y != 0:
            y = int(self.op(y, x))
            n += 1
        return n

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(repr(self.descriptor()))

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor()})"


class CyclicGroup(FiniteGroup):
    def __init__(self, n, *, max_order=None):
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        _check_guard(n, max_order)
        self.n = self.order = n

    def op(self, x, y):
        return (x + y) % self.n

    def inv(self, x):
        return (-np.asarray(x)) % self.n if np.ndim(x) else (-x) % self.n

    def descriptor(self):
        return {"kind": "cyclic", "n": self.n}


class ProductGroup(FiniteGroup):
    """Direct product with lexicographic (mixed-radix) indexing.

    For two factors the index of ``(i, j)`` is ``i * |G2| + j``.
    """

    def __init__(self, factors, *, max_order=None):
        self.factors = tuple(factors)
        if len(self.factors) < 2:
            raise ValueError("a product needs at least two factors")
        order = 1
        for f in self.factors:
            order *= f.order
        _check_guard(order, max_order)
        self.order = order
        self._radix = []
        w = 1
        for f in reversed(self.factors):
            self._radix.append(w)
            w *= f.order
        self._radix.reverse()

    def split(self, x):
        """Component indices of x (each an int or array)."""
        return tuple((x // w) % f.order for f, w in zip(self.factors, self._radix))

    def compose(self, *parts):
        out = 0
        for part, w in zip(parts, self._radix):
            out = out + np.asarray(part, dtype=np.int64) * w if np.ndim(part) else out + part * w
        return out

    def op(self, x, y):
        xs, ys = self.split(x), self.split(y)
        return self.compose(*(f.op(a, b) for f, a, b in zip(self.factors, xs, ys)))

    def inv(self, x):
        return self.compose(*(f.inv(a) for f, a in zip(self.factors, self.split(x))))

    def descriptor(self):
        return {"kind": "product", "factors": [f.descriptor() for f in self.factors]}


class AdditiveGroup(FiniteGroup):
    """(GF(q), +); group index equals field index."""

    def __init__(self, field):
        self.field = field
        self.order = field.q

    def op(self, x, y):
        return self.field.add(x, y)

    def inv(self, x):
        return self.field.neg(x)

    def descriptor(self):
        return {"kind": "additive", "q": self.field.q}


class UnitGroup(FiniteGroup):
    """(GF(q)*, *); group index ``i`` is the field element with index ``i + 1``.

    The shift puts the field's one at group index 0.
    """

    def __init__(self, field):
        self.field = field
        self.order = field.q - 1

    def to_field(self, x):
        return x + 1

    def from_field(self, a):
        if np.any(np.asarray(a) == 0):
            raise ValueError("zero is not a unit")
        return a - 1

    def op(self, x, y):
        return self.field.mul(x + 1, y + 1) - 1

    def inv(self, x):
        return self.field.inv(x + 1) - 1

    def descriptor(self):
        return {"kind": "units", "q": self.field.q}


class TwistedGroup(FiniteGroup):
    """GF(2^m) x GF(2^m) under ``(a, b) * (c, d) = (a + c, b + d + a c)``.

    Isomorphic to Z4^m.  The pair ``(a, b)`` has index ``a * 2^m + b``.
    """

    def __init__(self, m, *, max_order=None):
        if m < 1:
            raise ValueError("m must be >= 1")
        _check_guard(4**m, max_order)
        self.m = m
        self.field = field_make(2**m, max_order=max_order)
        self.q = 2**m
        self.order = 4**m

    def pair(self, a, b):
        return a * self.q + b

    def unpair(self, x):
        return x // self.q, x % self.q

    def op(self, x, y):
        a, b = self.unpair(x)
        c, d = self.unpair(y)
        return self.pair(a ^ c, b ^ d ^ self.field.mul(a, c))

    def inv(self, x):
        a, b = self.unpair(x)
        return self.pair(a, b ^ self.field.mul(a, a))

    def descriptor(self):
        return {"kind": "twisted", "m": self.m}


def cyclic_group(n, *, max_order=None):
    return CyclicGroup(n, max_order=max_order)


def direct_product(*groups, max_order=None):
    """Direct product; nested products are not flattened."""
    return ProductGroup(groups, max_order=max_order)


def additive_group(field):
    return AdditiveGroup(field)


def unit_group(field):
    """Cyclic group of order q - 1 on the nonzero elements of ``field``."""
    return UnitGroup(field)


def twisted_group(m, *, max_order=None):
    return TwistedGroup(m, max_order=max_order)


def group_from_descriptor(desc, *, max_order=None):
    """Rebuild a group from the dict produced by ``FiniteGroup.descriptor``."""
    kind = desc["kind"]
    if kind == "cyclic":
        return CyclicGroup(desc["n"], max_order=max_order)
    if kind == "product":
        return ProductGroup([group_from_descriptor(d, max_order=max_order)
                             for d in desc["factors"]], max_order=max_order)
    if kind == "additive":
        return AdditiveGroup(field_make(desc["q"], max_order=max_order))
    if kind == "units":
        return UnitGroup(field_make(desc["q"], max_order=max_order))
    if kind == "twisted":
        return TwistedGroup(desc["m"], max_order=max_order)
    raise ValueError(f"unknown group kind {kind!r}")


def group_from_string(text, *, max_order=None):
    """Parse shorthand such as ``z7``, ``z4xz4``, ``add9``, ``units7``, ``tw3``."""
    parts = [p.strip().lower() for p in text.split("x") if p.strip()]
    groups = []
    for part in parts:
        if part.startswith("z"):
            groups.append(CyclicGroup(int(part[1:]), max_order=max_order))
        elif part.startswith("add"):
            groups.append(AdditiveGroup(field_make(int(part[3:]), max_order=max_order)))
        elif part.startswith("units"):
            groups.append(UnitGroup(field_make(int(part[5:]), max_order=max_order)))
        elif part.startswith("tw"):
            groups.append(TwistedGroup(int(part[2:]), max_order=max_order))
        else:
            raise ValueError(f"cannot parse group component {part!r}")
    if not groups:
        raise ValueError("empty group description")
    return groups[0] if len(groups) == 1 else ProductGroup(groups, max_order=max_order)


class Subgroup:
    """A subgroup given by its sorted element indices; closure is checked."""

    def __init__(self, group, elements):
        self.group = group
        self.elements = tuple(sorted({int(x) for x in elements}))
        members = set(self.elements)
        if 0 not in members:
            raise ValueError("subgroup must contain the identity")
        arr = np.array(self.elements, dtype=np.int64)
        prods = group.op(arr[:, None], arr[None, :])
        if not set(np.ravel(prods).tolist()) <= members:
            raise ValueError("subset is not closed under the group operation")
        if not set(np.ravel(group.inv(arr)).tolist()) <= members:
            raise ValueError("subset is not closed under inversion")

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, x):
        return int(x) in self._set

    @cached_property
    def _set(self):
        return frozenset(self.elements)

    def __repr__(self):
        return f"Subgroup(order={self.order})"
