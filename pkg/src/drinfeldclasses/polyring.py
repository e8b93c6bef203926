"""Univariate polynomial arithmetic over a finite field, places and residue fields.

The ring A = F_q[T] underlies everything: coefficients of characteristic
polynomials live here, finite places of F_q(T) are monic irreducible
elements, and the place at infinity is handled through the substitution
u = 1/T (so polynomials in u use the same class with a different variable
label).  The same dense representation doubles as the polynomial ring over
any residue field, which is what the local factorization works with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import DivisionByZero, FieldMismatch, NotIrreducible, ZeroArgument
from .fields import FFElem, FieldSpec, Vec

INF = math.inf


@dataclass(frozen=True)
class Poly:
    """Dense polynomial: coefficient vectors ascending in degree, leading one nonzero."""

    field: FieldSpec
    coeffs: tuple[Vec, ...]
    var: str = "T"

    @staticmethod
    def make(field: FieldSpec, coeffs, var: str = "T") -> "Poly":
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        return Poly(field, tuple(cs), var)

    @staticmethod
    def zero(field: FieldSpec, var: str = "T") -> "Poly":
        return Poly(field, (), var)

    @staticmethod
    def one(field: FieldSpec, var: str = "T") -> "Poly":
        return Poly(field, (field.one,), var)

    @staticmethod
    def gen(field: FieldSpec, var: str = "T") -> "Poly":
        return Poly(field, (field.zero, field.one), var)

    @staticmethod
    def constant(field: FieldSpec, c, var: str = "T") -> "Poly":
        return Poly.make(field, [c], var)

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with deg 0 = -1 by convention (callers wanting -inf use valuation)."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Vec:
        if self.is_zero:
            raise ZeroArgument("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == self.field.one

    def coeff(self, i: int) -> Vec:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def _check(self, other: "Poly") -> None:
        if self.field != other.field or self.var != other.var:
            raise FieldMismatch("polynomials over different rings")

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [F.add(self.coeff(i), other.coeff(i)) for i in range(n)]
        while cs and cs[-1] == F.zero:
            cs.pop()
        return Poly(F, tuple(cs), self.var)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [F.sub(self.coeff(i), other.coeff(i)) for i in range(n)]
        while cs and cs[-1] == F.zero:
            cs.pop()
        return Poly(F, tuple(cs), self.var)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, tuple(F.neg(c) for c in self.coeffs), self.var)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if self.is_zero or other.is_zero:
            return Poly(F, (), self.var)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == F.zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b == F.zero:
                    continue
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, tuple(out), self.var)

    def scale(self, c: Vec) -> "Poly":
        F = self.field
        if c == F.zero:
            return Poly(F, (), self.var)
        return Poly(F, tuple(F.mul(c, a) for a in self.coeffs), self.var)

    def __pow__(self, e: int) -> "Poly":
        result = Poly.one(self.field, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.leading)
        quo = [F.zero] * max(0, len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == F.zero:
                continue
            q = F.mul(c, inv_lead)
            quo[k - d] = q
            for j in range(d + 1):
                rem[k - d + j] = F.sub(rem[k - d + j], F.mul(q, other.coeffs[j]))
        while rem and rem[-1] == F.zero:
            rem.pop()
        while quo and quo[-1] == F.zero:
            quo.pop()
        return Poly(F, tuple(quo), self.var), Poly(F, tuple(rem), self.var)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading))

    def derivative(self) -> "Poly":
        F = self.field
        cs = [F.scalar_mul(i, self.coeffs[i]) for i in range(1, len(self.coeffs))]
        while cs and cs[-1] == F.zero:
            cs.pop()
        return Poly(F, tuple(cs), self.var)

    def shift(self, k: int) -> "Poly":
        """Multiply by var^k; negative k must divide exactly."""
        F = self.field
        if self.is_zero:
            return self
        if k >= 0:
            return Poly(F, (F.zero,) * k + self.coeffs, self.var)
        if any(c != F.zero for c in self.coeffs[:-k]):
            raise ZeroArgument("inexact shift")
        return Poly(F, self.coeffs[-k:], self.var)

    def evaluate(self, x, field: FieldSpec | None = None) -> Vec:
        """Horner evaluation at an element of `field` (default: the coefficient field).

        When `field` is an extension, coefficients are embedded into it first.
        """
        target = field or self.field
        xv = target.coerce(x) if not isinstance(x, tuple) else x
        acc = target.zero
        for c in reversed(self.coeffs):
            cv = target.embed(c, self.field) if target != self.field else c
            acc = target.add(target.mul(acc, xv), cv)
        return acc

    def substitute_powers(self, k: int) -> "Poly":
        """Return self(var^k)."""
        F = self.field
        if self.is_zero:
            return self
        out = [F.zero] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(F, tuple(out), self.var)

    # -- display / io -----------------------------------------------------------

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        F = self.field
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c == F.zero:
                continue
            if F.degree == 1:
                cs = str(c[0])
                plain_one = c[0] == 1
            else:
                cs = "(" + ",".join(str(x) for x in c) + ")"
                plain_one = c == F.one
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{self.var}" if plain_one else f"{cs}*{self.var}")
            else:
                parts.append(f"{self.var}^{i}" if plain_one else f"{cs}*{self.var}^{i}")
        return "+".join(parts)

    def serialize(self) -> list[list[int]]:
        return [list(c) for c in self.coeffs]

    @staticmethod
    def deserialize(field: FieldSpec, doc, var: str = "T") -> "Poly":
        return Poly.make(field, [tuple(c) if isinstance(c, (list, tuple)) else c for c in doc], var)

    def __repr__(self):
        return self.to_text()


# -- gcd machinery -----------------------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero:
        f, g = g, f % g
    return f.monic() if not f.is_zero else f


def poly_xgcd(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Monic gcd d plus Bezout cofactors (d, s, t) with s f + t g = d."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(F, f.var), Poly.zero(F, f.var)
    t0, t1 = Poly.zero(F, f.var), Poly.one(F, f.var)
    while not r1.is_zero:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return r0, s0, t0
    c = F.inv(r0.leading)
    return r0.scale(c), s0.scale(c), t0.scale(c)


# -- squarefree and full factorization ------------------------------------------------


def _pth_root_coeff(F: FieldSpec, c: Vec) -> Vec:
    return F.pow(c, F.cardinality // F.p)


def squarefree_decomposition(b: Poly) -> tuple[Vec, list[tuple[Poly, int]]]:
    """b = unit * prod b_i^i with the b_i monic, squarefree, pairwise coprime."""
    if b.is_zero:
        raise ZeroArgument("squarefree decomposition of zero")
    F = b.field
    unit = b.leading
    out: dict[int, Poly] = {}
    p = F.p

    def accumulate(g: Poly, mult: int) -> None:
        if g.degree >= 1:
            out[mult] = out.get(mult, Poly.one(F, b.var)) * g

    def pth_root(f: Poly) -> Poly:
        assert all(f.coeff(i) == F.zero for i in range(len(f.coeffs)) if i % p), "not a p-th power"
        return Poly(F, tuple(_pth_root_coeff(F, f.coeffs[i]) for i in range(0, len(f.coeffs), p)), b.var)

    def sff(f: Poly, stride: int) -> None:
        if f.degree < 1:
            return
        fp = f.derivative()
        if fp.is_zero:
            sff(pth_root(f), stride * p)
            return
        c = poly_gcd(f, fp)
        w = f // c
        i = 1
        while w.degree >= 1:
            y = poly_gcd(w, c)
            accumulate(w // y, i * stride)
            w, c = y, c // y
            i += 1
        if c.degree >= 1:
            sff(pth_root(c), stride * p)

    sff(b.monic(), 1)
    parts = sorted(((g, m) for m, g in out.items() if g.degree >= 1), key=lambda t: t[1])
    return unit, parts


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    F = f.field
    q = F.cardinality
    out = []
    x = Poly.gen(F, f.var)
    h = x
    rest = f
    d = 0
    while rest.degree >= 1:
        d += 1
        if 2 * d > rest.degree:
            out.append((rest, rest.degree))
            break
        h = _powmod(h, q, rest)
        g = poly_gcd(h - x, rest)
        if g.degree >= 1:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    return out


def _powmod(a: Poly, e: int, m: Poly) -> Poly:
    result = Poly.one(a.field, a.var)
    base = a % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def _probe_polys(F: FieldSpec, max_degree: int, var: str) -> Iterator[Poly]:
    """Deterministic probe sequence for equal-degree splitting: all polynomials
    of degree < max_degree in canonical order, repeated with increasing degree."""
    import itertools as it
    for deg in range(1, max_degree + 1):
        for tail in it.product(list(F.vectors()), repeat=deg):
            cs = list(tail)
            yield Poly(F, tuple(cs), var) if cs[-1] != F.zero else Poly.make(F, cs, var)


def _equal_degree_split(f: Poly, d: int) -> list[Poly]:
    """Cantor-Zassenhaus with a deterministic probe sequence (reproducible runs)."""
    F = f.field
    if f.degree == d:
        return [f.monic()]
    q = F.cardinality
    for probe in _probe_polys(F, f.degree, f.var):
        if probe.degree < 1:
            continue
        g = poly_gcd(probe, f)
        if 1 <= g.degree < f.degree:
            return _equal_degree_split(g, d) + _equal_degree_split(f // g, d)
        if F.p == 2:
            # trace map probe: probe + probe^2 + ... + probe^(2^(k d - 1))
            k = _int_log(q, 2)
            t = Poly.zero(F, f.var)
            cur = probe % f
            for _ in range(k * d):
                t = (t + cur) % f
                cur = (cur * cur) % f
            g = poly_gcd(t, f)
        else:
            e = (q ** d - 1) // 2
            g = poly_gcd(_powmod(probe, e, f) - Poly.one(F, f.var), f)
        if 1 <= g.degree < f.degree:
            return _equal_degree_split(g, d) + _equal_degree_split(f // g, d)
    raise AssertionError("equal-degree splitting exhausted its probes")  # pragma: no cover


def _int_log(n: int, base: int) -> int:
    out = 0
    while n > 1:
        n //= base
        out += 1
    return out


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Full factorization into monic irreducibles with exponents.

    The product of the factors matches f up to its leading unit.
    """
    if f.is_zero:
        raise ZeroArgument("factorization of zero")
    out: list[tuple[Poly, int]] = []
    _, parts = squarefree_decomposition(f)
    for g, mult in parts:
        for h, d in _distinct_degree(g):
            for irr in _equal_degree_split(h, d):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].serialize()))
    return out


def is_irreducible(f: Poly) -> bool:
    if f.degree < 1:
        return False
    F = f.field
    return F._poly_is_irreducible([c for c in f.monic().coeffs])


def irreducible_polys(F: FieldSpec, degree: int, var: str = "T") -> Iterator[Poly]:
    """Monic irreducibles of the given degree in canonical order."""
    import itertools as it
    for tail in it.product(list(F.vectors()), repeat=degree):
        f = Poly(F, tuple(tail) + (F.one,), var)
        if is_irreducible(f):
            yield f


# -- places and valuations ----------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A place of F_q(T): finite (monic irreducible generator) or infinity."""

    field: FieldSpec
    gen: Poly | None  # None = place at infinity
    var: str = "T"

    @staticmethod
    def finite(gen: Poly) -> "Place":
        g = gen.monic()
        if not is_irreducible(g):
            raise NotIrreducible(f"{g.to_text()} is not irreducible")
        return Place(g.field, g, g.var)

    @staticmethod
    def infinity(field: FieldSpec, var: str = "T") -> "Place":
        return Place(field, None, var)

    @property
    def is_infinity(self) -> bool:
        return self.gen is None

    @property
    def degree(self) -> int:
        return 1 if self.is_infinity else self.gen.degree

    def __repr__(self):
        return "Place(oo)" if self.is_infinity else f"Place({self.gen.to_text()})"


def valuation(f: Poly, place: Place):
    """Discrete valuation of f at the place; +inf for the zero polynomial."""
    if f.is_zero:
        return INF
    if place.is_infinity:
        return -f.degree
    v = 0
    while True:
        q, r = f.divmod(place.gen)
        if not r.is_zero:
            return v
        v += 1
        f = q


def residue_field(place: Place) -> tuple[FieldSpec, Callable[[Poly], FFElem]]:
    """The residue field A/p_v together with the reduction homomorphism."""
    if place.is_infinity:
        raise ZeroArgument("residue field is defined for finite places here")
    F = place.field
    gen = place.gen
    if gen.degree == 1:
        root = F.neg(gen.coeffs[0])

        def reduce_linear(f: Poly) -> FFElem:
            return FFElem(F, f.evaluate(root))

        return F, reduce_linear

    ext = FieldSpec(F.p, F.tower + (tuple(gen.coeffs),), _trusted=True)

    def reduce_ext(f: Poly) -> FFElem:
        r = f % gen
        flat: list[int] = []
        for i in range(gen.degree):
            flat.extend(r.coeff(i))
        return FFElem(ext, tuple(flat))

    return ext, reduce_ext
