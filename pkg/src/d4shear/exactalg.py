"""Exact arithmetic kernel.

Coefficients are :class:`fractions.Fraction` (arbitrary precision, always
reduced).  Polynomials are sparse maps from integer exponent tuples to
non-zero coefficients, so structural equality is mathematical equality.

The six exponential variables are stored in *half units*: the exponent
vector entry ``n`` in a Y- or P-slot stands for ``e^{n Y/2}`` (resp.
``e^{n P/2}``).  The three parameter symbols ``G_1, G_2, G_3`` only appear
with non-negative powers.
"""

from __future__ import annotations

import cmath
import json
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

BigRational = Fraction

# skew form on the Y directions, {Y_i, Y_{i+1}} = 1 cyclically
SKEW = ((0, 1, -1), (-1, 0, 1), (1, -1, 0))


class DomainError(ValueError):
    """Raised when an evaluation point is outside the domain of a Laurent monomial."""


def _int_tuple(values, n, name):
    t = tuple(int(v) for v in values)
    if len(t) != n:
        raise ValueError(f"{name} must have {n} components, got {len(t)}")
    return t


class ExponentVector(NamedTuple):
    """Exponent of ``e^{sum y_i Y_i/2 + sum p_i P_i/2} G^g``; y and p in half units."""

    y: tuple = (0, 0, 0)
    p: tuple = (0, 0, 0)
    g: tuple = (0, 0, 0)

    @classmethod
    def make(cls, y=(0, 0, 0), p=(0, 0, 0), g=(0, 0, 0)) -> "ExponentVector":
        g = _int_tuple(g, 3, "g")
        if min(g) < 0:
            raise ValueError("parameter powers must be non-negative")
        return cls(_int_tuple(y, 3, "y"), _int_tuple(p, 3, "p"), g)

    @classmethod
    def from_key(cls, key: Sequence[int]) -> "ExponentVector":
        return cls(tuple(key[0:3]), tuple(key[3:6]), tuple(key[6:9]))

    @property
    def key(self) -> tuple:
        return self.y + self.p + self.g

    def __add__(self, other):  # type: ignore[override]
        return ExponentVector.from_key(tuple(a + b for a, b in zip(self.key, other.key)))


def skew_y_units(a: Sequence[int], b: Sequence[int]) -> int:
    """``a^T M b`` for the first three components of ``a`` and ``b``."""
    a1, a2, a3 = a[0], a[1], a[2]
    b1, b2, b3 = b[0], b[1], b[2]
    return a1 * (b2 - b3) + a2 * (b3 - b1) + a3 * (b1 - b2)


def symplectic_form(a, b) -> Fraction:
    """Constant Poisson pairing of two exponent vectors (half-unit storage).

    Only Y-components contribute; P and parameter directions are central.

    >>> symplectic_form(ExponentVector((2, 0, 0)), ExponentVector((0, 2, 0)))
    Fraction(1, 1)
    """
    a = a.key if isinstance(a, ExponentVector) else a
    b = b.key if isinstance(b, ExponentVector) else b
    return Fraction(skew_y_units(a, b), 4)


class SparsePoly:
    """Finite linear combination of monomials labelled by integer tuples.

    Subclasses fix ``NVARS`` and may override :meth:`_mul_key` to twist the
    product (the quantum torus does this).  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")
    NVARS = 0

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                key = tuple(key.key if isinstance(key, ExponentVector) else key)
                if len(key) != self.NVARS:
                    raise ValueError(f"expected {self.NVARS} exponents, got {len(key)}")
                self._check_key(key)
                c = clean.get(key, 0) + Fraction(c)
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    def _check_key(self, key):
        pass

    @classmethod
    def _raw(cls, d: dict):
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c=1):
        c = Fraction(c)
        return cls._raw({(0,) * cls.NVARS: c} if c else {})

    @classmethod
    def zero(cls):
        return cls._raw({})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return self.const(other)
        return NotImplemented

    @staticmethod
    def _mul_key(k1: tuple, k2: tuple) -> tuple:
        return tuple(a + b for a, b in zip(k1, k2))

    # -- container protocol --------------------------------------------------
    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list:
        """Terms in canonical (lexicographic) order."""
        return sorted(self._terms.items())

    def coefficient(self, key) -> Fraction:
        key = tuple(key.key if isinstance(key, ExponentVector) else key)
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(k) for k in self._terms)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._terms)
        for k, c in other._terms.items():
            s = d.get(k, 0) + c
            if s:
                d[k] = s
            else:
                d.pop(k, None)
        return self._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return self.zero()
        return self._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict = {}
        mk = self._mul_key
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = mk(k1, k2)
                s = d.get(k, 0) + c1 * c2
                if s:
                    d[k] = s
                else:
                    del d[k]
        return self._raw(d)

    def __rmul__(self, other):
        # scalars are central, so left and right scaling agree
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        result = self.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.const(other)
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def map_keys(self, fn):
        """Relabel monomials; ``fn`` maps a key tuple to a key tuple."""
        d: dict = {}
        for k, c in self._terms.items():
            k2 = fn(k)
            s = d.get(k2, 0) + c
            if s:
                d[k2] = s
            else:
                d.pop(k2, None)
        return self._raw(d)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def _fmt_coeff(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    return sign + (str(a) if a != 1 else "")


class LaurentPoly(SparsePoly):
    """Laurent polynomial in ``e^{Y_i/2}, e^{P_i/2}`` with polynomial
    dependence on the parameter symbols ``G_1, G_2, G_3``.

    Keys are 9-tuples ``(y1, y2, y3, p1, p2, p3, g1, g2, g3)``.
    """

    __slots__ = ()
    NVARS = 9

    def _check_key(self, key):
        if key[6] < 0 or key[7] < 0 or key[8] < 0:
            raise ValueError("parameter symbols G_i cannot carry negative powers")

    # -- constructors --------------------------------------------------------
    @classmethod
    def monomial(cls, y=(0, 0, 0), p=(0, 0, 0), g=(0, 0, 0), coeff=1) -> "LaurentPoly":
        """Monomial with exponents given in half units."""
        return cls({ExponentVector.make(y, p, g).key: coeff})

    @classmethod
    def exp_y(cls, coeffs: Sequence, coeff=1) -> "LaurentPoly":
        """``e^{sum c_i Y_i}`` with ``coeffs`` in whole Y units."""
        return cls.monomial(y=tuple(2 * int(c) for c in coeffs), coeff=coeff)

    @classmethod
    def exp_p(cls, i: int, half_units: int = 1) -> "LaurentPoly":
        p = [0, 0, 0]
        p[i - 1] = half_units
        return cls.monomial(p=p)

    @classmethod
    def param(cls, i: int, power: int = 1) -> "LaurentPoly":
        """Parameter symbol ``G_i`` (1-based)."""
        g = [0, 0, 0]
        g[i - 1] = power
        return cls.monomial(g=g)

    def exponents(self) -> list:
        return [ExponentVector.from_key(k) for k, _ in self.items()]

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for n, (k, c) in enumerate(self.items()):
            factors = []
            for i in range(3):
                if k[i]:
                    factors.append(f"Y{i + 1}*{Fraction(k[i], 2)}")
            for i in range(3):
                if k[3 + i]:
                    factors.append(f"P{i + 1}*{Fraction(k[3 + i], 2)}")
            mono = ""
            if factors:
                mono = "e^(" + "+".join(factors) + ")"
            gs = "".join(f"G{i + 1}" + (f"^{k[6 + i]}" if k[6 + i] > 1 else "")
                         for i in range(3) if k[6 + i])
            body = "*".join(x for x in (gs, mono) if x)
            cs = _fmt_coeff(c, n == 0)
            if not body:
                cs = ("-" if c < 0 else ("" if n == 0 else "+")) + str(abs(c))
                out.append(cs)
            else:
                out.append(cs + ("*" if cs not in ("", "-", "+") else "") + body)
        return " ".join(out)

    # -- structural maps -----------------------------------------------------
    def substitute_tilde(self, inverse: bool = False) -> "LaurentPoly":
        """Rewrite ``e^{Y~_i}`` as ``e^{Y_i - P_i/2}`` (``inverse`` undoes it).

        Each Y half-unit exponent ``n`` drags ``-n/2`` half units of its own
        P partner along; only even Y exponents keep the result on the lattice.
        """
        sgn = 1 if inverse else -1

        def shift(k):
            for i in range(3):
                if k[i] % 2:
                    raise ValueError("substitute_tilde needs whole Y units")
            return (k[0], k[1], k[2],
                    k[3] + sgn * (k[0] // 2), k[4] + sgn * (k[1] // 2), k[5] + sgn * (k[2] // 2),
                    k[6], k[7], k[8])

        return self.map_keys(shift)

    def params_to_perimeters(self) -> "LaurentPoly":
        """Substitute ``G_i -> e^{P_i/2} + e^{-P_i/2}``."""
        gvals = [LaurentPoly.exp_p(i, 1) + LaurentPoly.exp_p(i, -1) for i in (1, 2, 3)]
        out = LaurentPoly.zero()
        cache: dict = {}
        for k, c in self._terms.items():
            g = k[6:9]
            if g not in cache:
                f = LaurentPoly.const(1)
                for i in range(3):
                    if g[i]:
                        f = f * gvals[i] ** g[i]
                cache[g] = f
            base = LaurentPoly._raw({k[:6] + (0, 0, 0): c})
            out = out + base * cache[g]
        return out

    def specialize_params(self, values: Sequence) -> "LaurentPoly":
        """Substitute rational values for ``G_1, G_2, G_3``."""
        vals = [Fraction(v) for v in values]
        d: dict = {}
        for k, c in self._terms.items():
            f = c
            for i in range(3):
                if k[6 + i]:
                    f *= vals[i] ** k[6 + i]
            key = k[:6] + (0, 0, 0)
            s = d.get(key, 0) + f
            if s:
                d[key] = s
            else:
                d.pop(key, None)
        return LaurentPoly._raw(d)

    # -- numerics ------------------------------------------------------------
    def evaluate(self, point: "EvalPoint") -> complex:
        return evaluate(self, point)

    # -- serialisation -------------------------------------------------------
    def to_json_obj(self) -> list:
        return [{"coeff": f"{c.numerator}/{c.denominator}",
                 "y": list(k[0:3]), "p": list(k[3:6]), "g": list(k[6:9])}
                for k, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "LaurentPoly":
        terms = {}
        for t in obj:
            key = ExponentVector.make(t["y"], t["p"], t["g"]).key
            if key in terms:
                raise ValueError(f"duplicate term {key}")
            terms[key] = Fraction(t["coeff"])
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))


class EvalPoint(NamedTuple):
    """Numeric values of ``e^{Y_i/2}``, ``e^{P_i/2}`` and ``G_i``."""

    ey: tuple
    ep: tuple = (1, 1, 1)
    g: tuple = (0, 0, 0)

    @classmethod
    def from_logs(cls, Y, P=(0, 0, 0), G=(0, 0, 0)) -> "EvalPoint":
        return cls(tuple(cmath.exp(complex(v) / 2) for v in Y),
                   tuple(cmath.exp(complex(v) / 2) for v in P),
                   tuple(complex(v) for v in G))


def evaluate(f: LaurentPoly, point: EvalPoint) -> complex:
    """Substitute complex values; the six exponential values must be nonzero."""
    base = tuple(complex(v) for v in point.ey) + tuple(complex(v) for v in point.ep)
    for v in base:
        if v == 0:
            raise DomainError("exponential values must be nonzero")
    gv = tuple(complex(v) for v in point.g)
    total = 0j
    for k, c in f._terms.items():
        term = complex(c)
        for i in range(6):
            if k[i]:
                term *= base[i] ** k[i]
        for i in range(3):
            if k[6 + i]:
                term *= gv[i] ** k[6 + i]
        total += term
    return total


def poisson_bracket(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Log-canonical bracket ``{x^a, x^b} = omega(a, b) x^{a+b}``, extended bilinearly."""
    d: dict = {}
    for k1, c1 in f._terms.items():
        for k2, c2 in g._terms.items():
            w = skew_y_units(k1, k2)
            if not w:
                continue
            k = tuple(a + b for a, b in zip(k1, k2))
            s = d.get(k, 0) + c1 * c2 * Fraction(w, 4)
            if s:
                d[k] = s
            else:
                del d[k]
    return LaurentPoly._raw(d)


def substitute_tilde(f: LaurentPoly, inverse: bool = False) -> LaurentPoly:
    return f.substitute_tilde(inverse=inverse)
