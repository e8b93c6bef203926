"""Monic polynomials in x with F_q[T] coefficients: the Weil-candidate carrier.

Provides exact resultants and discriminants (Sylvester matrix with
fraction-free Bareiss elimination, so everything stays inside A), the shape
validation against the Weil template, the inseparability split
M(x) = f(x^{p^n}), the normalization at infinity, and truncation modulo a
power of a finite place.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .context import ClassContext
from .errors import (
    BadConstantTerm,
    DegreeBoundViolated,
    DegreeTooSmall,
    FieldMismatch,
    NotIntegralAtInfinity,
    RankMismatch,
    ZeroArgument,
)
from .fields import FieldSpec, Vec
from .polyring import INF, Place, Poly, valuation


@dataclass(frozen=True)
class XPoly:
    """Polynomial in x over a univariate coefficient ring, ascending coefficients."""

    coeffs: tuple[Poly, ...]

    @staticmethod
    def make(coeffs) -> "XPoly":
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        return XPoly(tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def base(self) -> Poly:
        if self.is_zero:
            raise ZeroArgument("zero polynomial")
        return self.coeffs[0]

    @property
    def field(self) -> FieldSpec:
        return self.coeffs[0].field

    @property
    def var(self) -> str:
        return self.coeffs[0].var

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == Poly.one(self.field, self.var)

    def coeff(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        if self.is_zero:
            raise ZeroArgument("zero polynomial has no ring")
        return Poly.zero(self.field, self.var)

    def _check(self, other: "XPoly") -> None:
        if self.is_zero or other.is_zero:
            return
        if self.field != other.field or self.var != other.var:
            raise FieldMismatch("x-polynomials over different coefficient rings")

    def __add__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly.make([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return XPoly.make([-c for c in other.coeffs])
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly.make([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __mul__(self, other: "XPoly") -> "XPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return XPoly(())
        zero = Poly.zero(self.field, self.var)
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                out[i + j] = out[i + j] + a * b
        return XPoly.make(out)

    def divmod_monic(self, other: "XPoly") -> tuple["XPoly", "XPoly"]:
        """Division with remainder by a monic divisor; stays inside the ring."""
        self._check(other)
        assert other.is_monic
        rem = list(self.coeffs)
        d = other.degree
        zero = Poly.zero(other.field, other.var)
        quo = [zero] * max(0, len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c.is_zero:
                continue
            quo[k - d] = c
            for j in range(d + 1):
                rem[k - d + j] = rem[k - d + j] - c * other.coeffs[j]
        return XPoly.make(quo), XPoly.make(rem)

    def derivative(self) -> "XPoly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.coeffs[i].scale(F.from_int(i)))
        return XPoly.make(out)

    def substitute_x_power(self, k: int) -> "XPoly":
        """Return self(x^k)."""
        if self.is_zero:
            return self
        zero = Poly.zero(self.field, self.var)
        out = [zero] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return XPoly.make(out)

    def map_coeffs(self, fn) -> "XPoly":
        return XPoly.make([fn(c) for c in self.coeffs])

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeff(i)
            if c.is_zero:
                continue
            cs = c.to_text()
            if i == 0:
                parts.append(cs)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                parts.append(xs if cs == "1" else f"({cs})*{xs}")
        return "+".join(parts)

    def serialize(self) -> list:
        return [c.serialize() for c in self.coeffs]

    @staticmethod
    def deserialize(field: FieldSpec, doc, var: str = "T") -> "XPoly":
        return XPoly.make([Poly.deserialize(field, c, var) for c in doc])

    def __repr__(self):
        return self.to_text()


def xpoly_make(field: FieldSpec, rows, var: str = "T") -> XPoly:
    """Convenience: rows are coefficient lists for the Poly ring, ascending in x."""
    return XPoly.make([Poly.make(field, row, var) if not isinstance(row, Poly) else row for row in rows])


# -- resultants --------------------------------------------------------------------


def resultant(f: XPoly, g: XPoly) -> Poly:
    """Res_x(f, g) in the coefficient ring, by fraction-free Bareiss elimination
    of the Sylvester matrix.  Zero iff f and g share a factor over Frac(A)."""
    if f.is_zero or g.is_zero:
        raise ZeroArgument("resultant of the zero polynomial")
    m, n = f.degree, g.degree
    F = f.field
    var = f.var
    one = Poly.one(F, var)
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    zero = Poly.zero(F, var)
    rows = []
    for i in range(n):
        row = [zero] * i + [f.coeff(m - j) for j in range(m + 1)] + [zero] * (size - m - 1 - i)
        rows.append(row)
    for i in range(m):
        row = [zero] * i + [g.coeff(n - j) for j in range(n + 1)] + [zero] * (size - n - 1 - i)
        rows.append(row)
    # Bareiss: division-free up to exact divisions by the previous pivot
    sign = 1
    prev = one
    for k in range(size - 1):
        if rows[k][k].is_zero:
            for swap in range(k + 1, size):
                if not rows[swap][k].is_zero:
                    rows[k], rows[swap] = rows[swap], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pk = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = rows[i][j] * pk - rows[i][k] * rows[k][j]
                quo, rem = num.divmod(prev)
                assert rem.is_zero, "Bareiss exact division failed"
                rows[i][j] = quo
            rows[i][k] = zero
        prev = pk
    det = rows[size - 1][size - 1]
    return det if sign == 1 else -det


def discriminant(M: XPoly) -> Poly:
    """disc(M) = (-1)^(d(d-1)/2) Res(M, M') / lc(M)."""
    d = M.degree
    if d < 2:
        raise DegreeTooSmall("discriminant needs degree >= 2")
    Mp = M.derivative()
    if Mp.is_zero:
        return Poly.zero(M.field, M.var)
    res = resultant(M, Mp)
    lead = M.coeffs[-1]
    res, rem = res.divmod(lead)
    assert rem.is_zero
    if (d * (d - 1) // 2) % 2 == 1:
        res = -res
    return res


def disc_or_one(M: XPoly) -> Poly:
    """Discriminant with the degree-1 convention disc = 1 (empty root-pair product)."""
    if M.degree == 1:
        return Poly.one(M.field, M.var)
    return discriminant(M)


# -- the Weil template -----------------------------------------------------------------


@dataclass(frozen=True)
class WeilShape:
    r1: int
    r2: int
    mu: Vec  # unit of F_q
    m: int
    s: int
    n: int | None = None  # finite-place precision, v(disc)+1
    h: int | None = None  # infinity precision

    def with_precisions(self, n: int, h: int) -> "WeilShape":
        return replace(self, n=n, h=h)

    def serialize(self) -> dict:
        return {"r1": self.r1, "r2": self.r2, "mu": list(self.mu), "m": self.m,
                "s": self.s, "n": self.n, "h": self.h}


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def shape_check(M: XPoly, ctx: ClassContext) -> WeilShape:
    """Validate the candidate template x^r1 + a_1 x^(r1-1) + ... + mu p_v^(m/r2)
    together with the coefficient degree bounds deg a_i <= i m deg(p_v) / r."""
    if not M.is_monic:
        raise BadConstantTerm("candidate must be monic")
    if M.field != ctx.fq:
        raise FieldMismatch("candidate coefficients must live over F_q")
    r1 = M.degree
    if r1 < 1 or ctx.r % r1 != 0:
        raise RankMismatch(f"deg M = {r1} does not divide r = {ctx.r}")
    r2 = ctx.r // r1
    if ctx.m % r2 != 0:
        raise RankMismatch(f"r2 = {r2} does not divide m = {ctx.m}")
    const = M.coeff(0)
    if const.is_zero:
        raise BadConstantTerm("constant term is zero")
    e = ctx.m // r2
    pv_pow = ctx.p_v.gen ** e
    quo, rem = const.divmod(pv_pow)
    if not rem.is_zero or quo.degree != 0:
        raise BadConstantTerm("constant term is not a unit times p_v^(m/r2)")
    mu = quo.coeffs[0]
    md = ctx.m * ctx.deg_pv
    for i in range(1, r1):
        a_i = M.coeff(r1 - i)
        if not a_i.is_zero and a_i.degree * ctx.r > i * md:
            raise DegreeBoundViolated(i)
    s = ceil_div(md, ctx.r)
    return WeilShape(r1=r1, r2=r2, mu=mu, m=ctx.m, s=s)


def separability_split(M: XPoly, p: int) -> tuple[XPoly, int]:
    """Write M(x) = f(x^(p^n)) with n maximal by exponent divisibility.

    For irreducible M the extracted f is automatically separable; the caller
    verifies disc(f) != 0 where it matters.
    """
    exps = [i for i in range(1, len(M.coeffs)) if not M.coeffs[i].is_zero]
    if not exps:
        return M, 0
    n = 0
    while all(e % (p ** (n + 1)) == 0 for e in exps):
        n += 1
    if n == 0:
        return M, 0
    step = p ** n
    f = XPoly.make([M.coeff(i) for i in range(0, M.degree + 1, step)])
    return f, n


def infinity_normalize(M: XPoly, s: int) -> XPoly:
    """The paper's M_0: coefficient i of x^(r1-i) becomes a_i / T^(s i), rewritten
    as a polynomial in u = 1/T.  Requires the degree bounds deg a_i <= s i."""
    F = M.field
    r1 = M.degree
    out = []
    for i in range(r1 + 1):
        a = M.coeff(r1 - i)  # coefficient of x^(r1-i) is a_i
        if a.is_zero:
            out.append(Poly.zero(F, "u"))
            continue
        if a.degree > s * i:
            raise NotIntegralAtInfinity(f"coefficient {i} has degree {a.degree} > {s * i}")
        # a(T)/T^(s i) = sum_j a_j u^(s i - j)
        cs = [F.zero] * (s * i + 1)
        for j, c in enumerate(a.coeffs):
            cs[s * i - j] = c
        out.append(Poly.make(F, cs, "u"))
    return XPoly.make([out[r1 - k] for k in range(r1 + 1)])


def infinity_denormalize(M0: XPoly, s: int) -> XPoly:
    """Inverse of infinity_normalize: substitute u = 1/T and clear T^(s r1)."""
    F = M0.field
    r1 = M0.degree
    out = []
    for k in range(r1 + 1):
        i = r1 - k
        c = M0.coeff(k)  # polynomial in u, degree <= s*i
        cs = [F.zero] * (s * i + 1)
        for j, cj in enumerate(c.coeffs):
            cs[s * i - j] = cj
        out.append(Poly.make(F, cs, "T"))
    return XPoly.make(out)


@dataclass(frozen=True)
class TruncatedXPoly:
    """M mod p_v^n: canonical representatives plus the p_v-adic digit view."""

    place: Place
    precision: int
    coeffs: tuple[Poly, ...]

    def digits(self) -> list[list[list[list[int]]]]:
        """Per coefficient: n digits, each a residue representative (coefficient list)."""
        out = []
        for c in self.coeffs:
            digs = []
            cur = c
            for _ in range(self.precision):
                cur, rem = cur.divmod(self.place.gen)
                digs.append(rem.serialize())
            out.append(digs)
        return out

    def to_xpoly(self) -> XPoly:
        return XPoly.make(self.coeffs)


def reduce_mod_power(M: XPoly, place: Place, n: int) -> TruncatedXPoly:
    if n < 1:
        raise ZeroArgument("precision must be >= 1")
    mod = place.gen ** n
    return TruncatedXPoly(place, n, tuple(c % mod for c in M.coeffs))
