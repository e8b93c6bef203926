"""Exact arithmetic in finite fields built as explicit quotient towers.

A field is described by its prime characteristic p and a tower of monic
irreducible defining polynomials: level 1 extends F_p, level 2 extends
level 1, and so on.  Elements are coordinate vectors over F_p with respect
to the product power basis, flattened with the level-1 exponent varying
fastest.  For a single extension F_p[x]/(f) the coordinates are simply the
coefficients of the residue representative, so alpha + 3 in F_25 is (3, 1).

The representation is caller-controlled on purpose: reproducing a worked
computation requires pinning the defining polynomial (here F_25 is always
built from x^2 + 4x + 2), not just the abstract field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    ReducibleDefiningPolynomial,
    ZeroArgument,
)

Vec = tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldSpec:
    """A finite field F_{p^k} given by a quotient-ring tower over F_p.

    Instances are immutable after construction and safe to share between
    workers; all caches are append-only.
    """

    def __init__(self, p: int, tower=(), *, _trusted: bool = False):
        if not _trusted and not _is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.p = p
        self.tower: tuple[tuple[Vec, ...], ...] = ()
        self.subfield: FieldSpec | None = None
        self.degree = 1
        if tower:
            sub = FieldSpec(p, tuple(tower[:-1]), _trusted=_trusted)
            level = len(tower)
            raw = tower[-1]
            coeffs = tuple(sub._normalize_coord(c, level) for c in raw)
            if len(coeffs) < 2:
                raise ReducibleDefiningPolynomial(level, "defining polynomial must have degree >= 1")
            if coeffs[-1] != sub.one:
                raise ReducibleDefiningPolynomial(level, f"defining polynomial at level {level} is not monic")
            if not _trusted and not sub._poly_is_irreducible(list(coeffs)):
                raise ReducibleDefiningPolynomial(level)
            self.subfield = sub
            self.tower = sub.tower + (coeffs,)
            self.degree = sub.degree * (len(coeffs) - 1)
        self.cardinality = p ** self.degree
        self.zero: Vec = (0,) * self.degree
        self.one: Vec = (1,) + (0,) * (self.degree - 1)
        self._top_deg = 0 if self.subfield is None else self.degree // self.subfield.degree
        self._red_rows: tuple[tuple[Vec, ...], ...] | None = None
        self._generator: Vec | None = None
        self._baby_steps: dict[Vec, int] | None = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p and self.tower == other.tower

    def __hash__(self):
        return hash((self.p, self.tower))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})" if self.degree > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (FieldSpec, (self.p, self.tower))

    def serialize(self) -> dict:
        return {"p": self.p, "tower": [[list(c) for c in lvl] for lvl in self.tower]}

    @staticmethod
    def deserialize(doc: dict) -> "FieldSpec":
        return FieldSpec(doc["p"], tuple(tuple(tuple(c) if isinstance(c, (list, tuple)) else (c,) for c in lvl) for lvl in doc["tower"]))

    # -- construction helpers ----------------------------------------------

    def _normalize_coord(self, c, level: int) -> Vec:
        """Accept an int (prime subfield) or a coordinate vector for a tower coefficient."""
        if isinstance(c, int):
            v = (c % self.p,) + (0,) * (self.degree - 1)
            return v
        v = tuple(int(x) % self.p for x in c)
        if len(v) > self.degree:
            raise ReducibleDefiningPolynomial(level, "coefficient vector longer than subfield degree")
        return v + (0,) * (self.degree - len(v))

    # -- raw vector arithmetic ----------------------------------------------

    def add(self, a: Vec, b: Vec) -> Vec:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: Vec, b: Vec) -> Vec:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Vec) -> Vec:
        p = self.p
        return tuple((-x) % p for x in a)

    def scalar_mul(self, c: int, a: Vec) -> Vec:
        p = self.p
        c %= p
        return tuple((c * x) % p for x in a)

    def _chunks(self, a: Vec) -> list[Vec]:
        m = self.subfield.degree
        return [a[i * m:(i + 1) * m] for i in range(self._top_deg)]

    def _reduction_rows(self):
        # x^(n+k) mod f_top for k = 0..n-2, as coefficient chunks over the subfield
        if self._red_rows is None:
            sub = self.subfield
            n = self._top_deg
            f = self.tower[-1]
            rows = []
            cur = [sub.neg(c) for c in f[:-1]]  # x^n = -(f - x^n)
            rows.append(tuple(cur))
            for _ in range(n - 2):
                shifted = [sub.zero] + cur[:-1]
                top = cur[-1]
                cur = [sub.add(shifted[j], sub.mul(top, rows[0][j])) for j in range(n)]
                rows.append(tuple(cur))
            self._red_rows = tuple(rows)
        return self._red_rows

    def mul(self, a: Vec, b: Vec) -> Vec:
        if self.subfield is None:
            return ((a[0] * b[0]) % self.p,)
        sub = self.subfield
        n = self._top_deg
        ac = self._chunks(a)
        bc = self._chunks(b)
        prod = [sub.zero] * (2 * n - 1)
        for i, ai in enumerate(ac):
            if ai == sub.zero:
                continue
            for j, bj in enumerate(bc):
                if bj == sub.zero:
                    continue
                prod[i + j] = sub.add(prod[i + j], sub.mul(ai, bj))
        rows = self._reduction_rows()
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k]
            if c == sub.zero:
                continue
            row = rows[k - n]
            for j in range(n):
                if row[j] != sub.zero:
                    prod[j] = sub.add(prod[j], sub.mul(c, row[j]))
        out = []
        for j in range(n):
            out.extend(prod[j])
        return tuple(out)

    def pow(self, a: Vec, e: int) -> Vec:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: Vec) -> Vec:
        if a == self.zero:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.cardinality - 2)

    def div(self, a: Vec, b: Vec) -> Vec:
        return self.mul(a, self.inv(b))

    # -- element catalogue ----------------------------------------------------

    def vectors(self):
        """All coordinate vectors in ascending lexicographic order."""
        return itertools.product(range(self.p), repeat=self.degree)

    def from_int(self, c: int) -> Vec:
        return (c % self.p,) + (0,) * (self.degree - 1)

    def coerce(self, value) -> Vec:
        if isinstance(value, FFElem):
            if value.field != self:
                raise FieldMismatch(f"element of {value.field} used in {self}")
            return value.coords
        if isinstance(value, int):
            return self.from_int(value)
        v = tuple(int(x) % self.p for x in value)
        if len(v) > self.degree:
            raise FieldMismatch("coordinate vector too long")
        return v + (0,) * (self.degree - len(v))

    def elem(self, value) -> "FFElem":
        return FFElem(self, self.coerce(value))

    # -- multiplicative structure -----------------------------------------------

    def multiplicative_order(self, a: Vec) -> int:
        if a == self.zero:
            raise ZeroArgument("order of zero is undefined")
        order = self.cardinality - 1
        for q in _prime_factors(self.cardinality - 1):
            while order % q == 0 and self.pow(a, order // q) == self.one:
                order //= q
        return order

    @property
    def generator(self) -> Vec:
        """Canonical generator of the unit group: the lexicographically smallest
        coordinate vector of full multiplicative order."""
        if self._generator is None:
            for v in self.vectors():
                if v == self.zero:
                    continue
                if self.multiplicative_order(v) == self.cardinality - 1:
                    self._generator = v
                    break
            else:  # pragma: no cover - cannot happen, unit group is cyclic
                raise AssertionError("no generator found")
        return self._generator

    def dlog(self, a: Vec) -> int:
        """Discrete log to the canonical generator, by baby-step giant-step."""
        if a == self.zero:
            raise ZeroArgument("dlog of zero")
        n = self.cardinality - 1
        m = int(n ** 0.5) + 1
        if self._baby_steps is None:
            steps = {}
            cur = self.one
            for j in range(m):
                steps.setdefault(cur, j)
                cur = self.mul(cur, self.generator)
            self._baby_steps = steps
        giant = self.inv(self.pow(self.generator, m))
        cur = a
        for i in range(m + 1):
            if cur in self._baby_steps:
                return (i * m + self._baby_steps[cur]) % n
            cur = self.mul(cur, giant)
        raise AssertionError("BSGS failed")  # pragma: no cover

    # -- subfield embedding -------------------------------------------------------

    def extends(self, other: "FieldSpec") -> bool:
        return self.p == other.p and self.tower[:len(other.tower)] == other.tower

    def embed(self, a: Vec, subfield: "FieldSpec") -> Vec:
        """Coordinates of a subfield element inside this field.

        Requires this field's tower to extend the subfield's tower; the
        product-basis flattening puts the subfield in the leading slots.
        """
        if not self.extends(subfield):
            raise FieldMismatch(f"{self} does not extend {subfield}")
        return tuple(a) + (0,) * (self.degree - subfield.degree)

    def restrict(self, a: Vec, subfield: "FieldSpec") -> Vec:
        if not self.extends(subfield):
            raise FieldMismatch(f"{self} does not extend {subfield}")
        if any(x != 0 for x in a[subfield.degree:]):
            raise FieldMismatch("element does not lie in the subfield")
        return a[:subfield.degree]

    def in_subfield(self, a: Vec, subfield: "FieldSpec") -> bool:
        return self.extends(subfield) and all(x == 0 for x in a[subfield.degree:])

    # -- internal polynomial helpers (tower validation only) ------------------------

    def _poly_mulmod(self, a: list[Vec], b: list[Vec], f: list[Vec]) -> list[Vec]:
        n = len(f) - 1
        prod = [self.zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == self.zero:
                continue
            for j, bj in enumerate(b):
                if bj == self.zero:
                    continue
                prod[i + j] = self.add(prod[i + j], self.mul(ai, bj))
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c == self.zero:
                continue
            prod[k] = self.zero
            for j in range(n):
                prod[k - n + j] = self.sub(prod[k - n + j], self.mul(c, f[j]))
        out = prod[:n]
        out += [self.zero] * (n - len(out))
        return out

    def _poly_powmod_q(self, a: list[Vec], e: int, f: list[Vec]) -> list[Vec]:
        result = [self.one] + [self.zero] * (len(f) - 2)
        base = list(a)
        while e:
            if e & 1:
                result = self._poly_mulmod(result, base, f)
            base = self._poly_mulmod(base, base, f)
            e >>= 1
        return result

    def _poly_gcd_is_one(self, a: list[Vec], f: list[Vec]) -> bool:
        def strip(v):
            while v and v[-1] == self.zero:
                v.pop()
            return v

        x, y = strip(list(f)), strip(list(a))
        while y:
            inv_lead = self.inv(y[-1])
            r = list(x)
            while len(r) >= len(y):
                c = self.mul(r[-1], inv_lead)
                shift = len(r) - len(y)
                for j in range(len(y)):
                    r[shift + j] = self.sub(r[shift + j], self.mul(c, y[j]))
                r = strip(r)
                if not r:
                    break
            x, y = y, r
        return len(x) == 1

    def _poly_is_irreducible(self, f: list[Vec]) -> bool:
        """x^(Q^d) == x mod f and gcd(x^(Q^(d/l)) - x, f) = 1 for prime l | d."""
        d = len(f) - 1
        if d == 1:
            return True
        q = self.cardinality
        x = [self.zero, self.one]
        xqd = self._poly_powmod_q(x, q ** d, f)
        if xqd != x + [self.zero] * (d - 2):
            return False
        for ell in _prime_factors(d):
            g = self._poly_powmod_q(x, q ** (d // ell), f)
            diff = [self.sub(g[j], x[j] if j < 2 else self.zero) for j in range(d)]
            if not self._poly_gcd_is_one(diff, f):
                return False
        return True


@dataclass(frozen=True)
class FFElem:
    """An element of a FieldSpec, as a flat coordinate vector over F_p."""

    field: FieldSpec
    coords: Vec

    def _check(self, other: "FFElem") -> None:
        if not isinstance(other, FFElem) or other.field != self.field:
            raise FieldMismatch("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FFElem(self.field, self.field.add(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return FFElem(self.field, self.field.sub(self.coords, other.coords))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.coords))

    def __mul__(self, other):
        self._check(other)
        return FFElem(self.field, self.field.mul(self.coords, other.coords))

    def __truediv__(self, other):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("division by zero field element")
        return FFElem(self.field, self.field.div(self.coords, other.coords))

    def __pow__(self, e: int):
        if self.is_zero:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return FFElem(self.field, self.field.one if e == 0 else self.field.zero)
        return FFElem(self.field, self.field.pow(self.coords, e))

    @property
    def is_zero(self) -> bool:
        return self.coords == self.field.zero

    def serialize(self) -> list[int]:
        return list(self.coords)

    def __repr__(self):
        return f"FF{list(self.coords)}"


def field_make(p: int, tower=()) -> FieldSpec:
    """Validating constructor: p prime, every tower level monic irreducible."""
    return FieldSpec(p, tuple(tuple(lvl) for lvl in tower))


def frobenius(a: FFElem, q: int) -> FFElem:
    """a |-> a^q, the Frobenius of the declared base field F_q."""
    return FFElem(a.field, a.field.pow(a.coords, q))


def is_dth_power(a: FFElem, d: int) -> bool:
    """Membership of a in the subgroup of d-th powers of the unit group."""
    if a.is_zero:
        raise ZeroArgument("zero is not in the unit group")
    n = a.field.cardinality - 1
    e = n // _gcd(d, n)
    return a.field.pow(a.coords, e) == a.field.one


def is_cube_in_base(c: FFElem) -> bool:
    if c.is_zero:
        raise ZeroArgument("zero argument")
    n = c.field.cardinality - 1
    e = n // _gcd(3, n)
    return c.field.pow(c.coords, e) == c.field.one


def coset_class(a: FFElem, d: int) -> int:
    """Canonical label of a modulo d-th powers: dlog to the canonical generator,
    reduced mod gcd(d, |L*|).  Equal labels iff the two elements differ by a
    d-th power (the power test is the normative definition; the unit group is
    cyclic so the dlog label agrees with it)."""
    if a.is_zero:
        raise ZeroArgument("zero argument")
    e = _gcd(d, a.field.cardinality - 1)
    return a.field.dlog(a.coords) % e


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
