"""The ambient data of a classification run: the A-field L and its structure map.

A ClassContext fixes F_q, the finite place p_v, the field L with the
F_q-algebra map gamma (pinned by the image of T), and the rank r.  The
kernel condition gamma(p_v) = 0 and the cardinality relation
|L| = |A/p_v|^m are checked at construction, so downstream code can
assume a consistent context.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import FieldMismatch
from .fields import FFElem, FieldSpec, Vec, field_make
from .polyring import Place, Poly


@dataclass(frozen=True)
class ClassContext:
    fq: FieldSpec
    p_v: Place
    m: int
    L: FieldSpec
    gamma_T: FFElem
    r: int

    def __post_init__(self):
        if self.p_v.is_infinity or self.p_v.field != self.fq:
            raise FieldMismatch("p_v must be a finite place over F_q")
        if not self.L.extends(self.fq):
            raise FieldMismatch("the tower of L must extend the tower of F_q")
        if self.gamma_T.field != self.L:
            raise FieldMismatch("gamma_T must live in L")
        if self.m < 1 or self.r < 1:
            raise ValueError("m and r must be positive")
        d = self.p_v.degree
        if self.L.cardinality != self.fq.cardinality ** (d * self.m):
            raise ValueError("|L| must equal |A/p_v|^m")
        if self.gamma(self.p_v.gen) != self.L.zero:
            raise ValueError("gamma(p_v) must vanish: gamma_T is not a root of p_v")

    # -- derived quantities -------------------------------------------------

    @property
    def q(self) -> int:
        return self.fq.cardinality

    @property
    def l(self) -> int:
        """|L|."""
        return self.L.cardinality

    @property
    def deg_pv(self) -> int:
        return self.p_v.degree

    @property
    def s_frob(self) -> int:
        """[L : F_q], the tau-exponent of the Frobenius endomorphism."""
        return self.m * self.deg_pv

    # -- the structure map -----------------------------------------------------

    def embed(self, a) -> Vec:
        """Image of an F_q element inside L."""
        av = self.fq.coerce(a)
        return self.L.embed(av, self.fq)

    def gamma(self, f: Poly) -> Vec:
        """gamma(f) = f(gamma_T) with coefficients embedded into L."""
        if f.field != self.fq:
            raise FieldMismatch("gamma expects a polynomial over F_q")
        return f.evaluate(self.gamma_T.coords, self.L)

    # -- io ------------------------------------------------------------------------

    def serialize(self) -> dict:
        return {
            "p": self.fq.p,
            "q_tower": [[list(c) for c in lvl] for lvl in self.fq.tower],
            "p_v": self.p_v.gen.serialize(),
            "m": self.m,
            "L_tower": [[list(c) for c in lvl] for lvl in self.L.tower],
            "gamma_T": self.gamma_T.serialize(),
            "r": self.r,
        }

    @staticmethod
    def from_config(doc: dict) -> "ClassContext":
        p = int(doc["p"])
        fq = field_make(p, [tuple(tuple(c) if isinstance(c, (list, tuple)) else (c,) for c in lvl) for lvl in doc.get("q_tower", [])])
        p_v = Place.finite(Poly.deserialize(fq, doc["p_v"]))
        L = field_make(p, [tuple(tuple(c) if isinstance(c, (list, tuple)) else (c,) for c in lvl) for lvl in doc.get("L_tower", [])])
        gamma_T = L.elem(doc["gamma_T"])
        return ClassContext(fq=fq, p_v=p_v, m=int(doc["m"]), L=L, gamma_T=gamma_T, r=int(doc["r"]))
