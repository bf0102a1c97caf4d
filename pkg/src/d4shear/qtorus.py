"""Quantum torus with Weyl-ordered exponentials.

An element is a finite sum ``c * q^{qh/2} * X^a`` where ``X^a`` is the
Weyl-ordered exponential ``e^{a . Y}`` (``a`` in whole Y units) and ``c`` a
polynomial in ``G_1, G_2, G_3`` over the rationals.  The twisted product is

    X^a X^b = q^{omega(a, b)/2} X^{a+b},   omega(a, b) = a^T M b,

so ``X^{(1,0,0)} X^{(0,1,0)} = q^{1/2} X^{(1,1,0)}``.  This is the ordering
under which the q-commutation relations of the geodesic operators close.

Keys are 7-tuples ``(a1, a2, a3, qh, g1, g2, g3)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import NamedTuple, Sequence

from .exactalg import LaurentPoly, SparsePoly, skew_y_units


class QExponent(NamedTuple):
    a: tuple
    qh: int = 0


class QTorusElement(SparsePoly):
    __slots__ = ()
    NVARS = 7
    # X^a X^b = q^{TWIST * omega(a,b) / 2} X^{a+b}
    TWIST = 1

    def _check_key(self, key):
        if key[4] < 0 or key[5] < 0 or key[6] < 0:
            raise ValueError("parameter symbols G_i cannot carry negative powers")

    def _mul_key(self, k1, k2):
        w = skew_y_units(k1, k2)
        return (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2],
                k1[3] + k2[3] + self.TWIST * w,
                k1[4] + k2[4], k1[5] + k2[5], k1[6] + k2[6])

    @classmethod
    def x(cls, a: Sequence[int], qh: int = 0, g=(0, 0, 0), coeff=1) -> "QTorusElement":
        """``coeff * q^{qh/2} * G^g * X^a``."""
        a = tuple(int(v) for v in a)
        return cls({a + (int(qh),) + tuple(g): coeff})

    @classmethod
    def qpow(cls, half_units: int) -> "QTorusElement":
        """The central scalar ``q^{half_units/2}``."""
        return cls.x((0, 0, 0), qh=half_units)

    @classmethod
    def param(cls, i: int, power: int = 1) -> "QTorusElement":
        g = [0, 0, 0]
        g[i - 1] = power
        return cls.x((0, 0, 0), g=g)

    @classmethod
    def from_laurent(cls, f: LaurentPoly) -> "QTorusElement":
        """Weyl quantisation of a classical polynomial with whole-unit Y
        exponents and no P dependence (each term becomes ``X^a``)."""
        terms = {}
        for k, c in f.items():
            if any(k[3:6]) or any(v % 2 for v in k[:3]):
                raise ValueError("only whole-unit Y exponents without P can be quantised")
            terms[(k[0] // 2, k[1] // 2, k[2] // 2, 0) + k[6:9]] = c
        return cls(terms)

    def commutator(self, other: "QTorusElement") -> "QTorusElement":
        return self * other - other * self

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            bits = [str(c)]
            if k[3]:
                bits.append(f"q^({Fraction(k[3], 2)})")
            bits += [f"G{i + 1}^{k[4 + i]}" for i in range(3) if k[4 + i]]
            if any(k[:3]):
                bits.append(f"X{k[:3]}")
            parts.append("*".join(bits))
        return " + ".join(parts)

    def to_json_obj(self) -> list:
        out = []
        for k, c in self.items():
            out.append({"coeff": [{"coeff": f"{c.numerator}/{c.denominator}", "g": list(k[4:7])}],
                        "qh": k[3], "a": list(k[:3])})
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "QTorusElement":
        terms: dict = {}
        for t in obj:
            for pc in t["coeff"]:
                key = tuple(t["a"]) + (t["qh"],) + tuple(pc["g"])
                terms[key] = terms.get(key, 0) + Fraction(pc["coeff"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "QTorusElement":
        return cls.from_json_obj(json.loads(text))


def qmul(A: QTorusElement, B: QTorusElement) -> QTorusElement:
    return A * B


def dagger(A: QTorusElement) -> QTorusElement:
    """Hermitian anti-involution: ``q^{1/2} -> q^{-1/2}``, ``X^a`` and rational
    coefficients fixed."""
    return A.map_keys(lambda k: k[:3] + (-k[3],) + k[4:])


def classical_limit(A: QTorusElement) -> LaurentPoly:
    """Specialise ``q -> 1`` and ``X^a -> e^{a.Y}``."""
    terms: dict = {}
    for k, c in A.items():
        key = (2 * k[0], 2 * k[1], 2 * k[2], 0, 0, 0) + k[4:7]
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly(terms)


def specialize_q(A: QTorusElement, qh_value=None) -> QTorusElement:
    """Collapse all powers of ``q^{1/2}`` to 1 while keeping ``X^a`` (q = 1)."""
    return A.map_keys(lambda k: k[:3] + (0,) + k[4:])
