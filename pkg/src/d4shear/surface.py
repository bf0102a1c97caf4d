"""Geodesic functions on the four-holed sphere and the D4 cubic surface.

The classical geodesic functions live in :class:`LaurentPoly` with the
Y-slots holding the shifted shear coordinates and the parameter slots
holding ``G_1, G_2, G_3``; the quantum ones are Weyl-ordered elements of
the quantum torus.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .exactalg import EvalPoint, LaurentPoly, evaluate, poisson_bracket
from .qtorus import QTorusElement, classical_limit, dagger
from .report import CheckResult, exact_result, numeric_result

PAIRS = ((1, 2), (2, 3), (1, 3))

# 2cos(2 pi / k) is rational only for these orders (k >= 3)
_RATIONAL_ORBIFOLD = {3: Fraction(-1), 4: Fraction(0), 6: Fraction(1)}


@dataclass(frozen=True)
class Hole:
    """A boundary component; ``value`` is the trace parameter ``G_i`` or
    ``None`` for a free symbol."""

    value: object = None


@dataclass(frozen=True)
class Orbifold:
    order: int

    def __post_init__(self):
        if int(self.order) != self.order:
            raise ValueError("orbifold order must be an integer")
        if self.order < 3:
            raise ValueError(
                f"orbifold order {self.order} < 3 is not supported; order-2 points "
                "(G = -2) need the separate treatment of their own fat graphs")

    @property
    def value(self) -> float:
        return 2.0 * math.cos(2.0 * math.pi / self.order)

    @property
    def exact_value(self):
        return _RATIONAL_ORBIFOLD.get(self.order)


class HoleParams(NamedTuple):
    """Puncture data for the three petals (the fourth hole is ``G_inf``)."""

    kinds: tuple = (Hole(), Hole(), Hole())

    @classmethod
    def symbolic(cls) -> "HoleParams":
        return cls()

    @classmethod
    def values(cls, g: Sequence) -> "HoleParams":
        return cls(tuple(Hole(v) for v in g))

    @classmethod
    def orbifold(cls, orders: Sequence[int]) -> "HoleParams":
        return cls(tuple(Orbifold(int(k)) for k in orders))

    @property
    def is_orbifold(self) -> bool:
        return any(isinstance(k, Orbifold) for k in self.kinds)

    def exact_values(self) -> list:
        """Rational value per puncture, or ``None`` where it stays symbolic."""
        out = []
        for k in self.kinds:
            if isinstance(k, Orbifold):
                out.append(k.exact_value)
            elif isinstance(k.value, (int, Fraction)):
                out.append(Fraction(k.value))
            else:
                out.append(None)
        return out

    def numeric(self) -> tuple:
        vals = []
        for k in self.kinds:
            if k.value is None:
                raise ValueError("numeric evaluation needs every G_i to have a value")
            vals.append(complex(k.value))
        return tuple(vals)


class GeodesicTriple(NamedTuple):
    g12: object
    g23: object
    g31: object

    @property
    def g13(self):
        return self.g31


def _geodesic_terms(i: int, j: int) -> list:
    """(Y-unit exponent, parameter index or None) for the five terms of G_{i,j}."""

    def vec(si, sj):
        a = [0, 0, 0]
        a[i - 1] += si
        a[j - 1] += sj
        return a

    return [(vec(1, 1), None), (vec(-1, -1), None), (vec(-1, 1), None),
            (vec(0, 1), i), (vec(-1, 0), j)]


def _specialize_q(elem: QTorusElement, values: Sequence) -> QTorusElement:
    terms: dict = {}
    for k, c in elem.items():
        g = list(k[4:7])
        for n, v in enumerate(values):
            if v is not None and g[n]:
                c = c * v ** g[n]
                g[n] = 0
        key = k[:4] + tuple(g)
        terms[key] = terms.get(key, 0) + c
    return QTorusElement(terms)


def _specialize(f, params: HoleParams | None):
    if params is None:
        return f
    vals = params.exact_values()
    if all(v is None for v in vals):
        return f
    if isinstance(f, QTorusElement):
        return _specialize_q(f, vals)
    if all(v is not None for v in vals):
        return f.specialize_params(vals)
    # partial: substitute one symbol at a time
    out = LaurentPoly.zero()
    for k, c in f.items():
        g = list(k[6:9])
        for n, v in enumerate(vals):
            if v is not None and g[n]:
                c = c * v ** g[n]
                g[n] = 0
        out = out + LaurentPoly({k[:6] + tuple(g): c})
    return out


def geodesic_function(i: int, j: int, mode: str = "classical"):
    """``G_{i,j}`` for ``(i, j)`` in ``(1,2), (2,3), (3,1)`` with parameter symbols."""
    if mode == "classical":
        f = LaurentPoly.zero()
        for a, p in _geodesic_terms(i, j):
            term = LaurentPoly.exp_y(a)
            f = f + (term if p is None else LaurentPoly.param(p) * term)
        return f
    if mode == "quantum":
        f = QTorusElement.zero()
        for a, p in _geodesic_terms(i, j):
            term = QTorusElement.x(a)
            f = f + (term if p is None else QTorusElement.param(p) * term)
        return f
    raise ValueError(f"unknown mode {mode!r}")


def geodesic_functions(params: HoleParams | None = None, mode: str = "classical") -> GeodesicTriple:
    """The three generators ``G_{1,2}, G_{2,3}, G_{3,1}``.

    Puncture values that are rational (boundary values given as ints or
    Fractions, orbifold orders 3, 4, 6) are substituted exactly; everything
    else stays a symbol ``G_i`` and is supplied at evaluation time.
    """
    t = GeodesicTriple(geodesic_function(1, 2, mode), geodesic_function(2, 3, mode),
                       geodesic_function(3, 1, mode))
    return GeodesicTriple(*(_specialize(f, params) for f in t))


def g_infinity(mode: str = "classical"):
    if mode == "classical":
        return LaurentPoly.exp_y((1, 1, 1)) + LaurentPoly.exp_y((-1, -1, -1))
    if mode == "quantum":
        return QTorusElement.x((1, 1, 1)) + QTorusElement.x((-1, -1, -1))
    raise ValueError(f"unknown mode {mode!r}")


def omega(i: int, j: int, params: HoleParams | None = None, mode: str = "classical"):
    """``omega_{ij} = G_i G_j + G_k G_inf`` with ``k`` the remaining index."""
    i, j = sorted((i, j))
    (k,) = {1, 2, 3} - {i, j}
    cls = LaurentPoly if mode == "classical" else QTorusElement
    f = cls.param(i) * cls.param(j) + cls.param(k) * g_infinity(mode)
    return _specialize(f, params)


def omegas(params: HoleParams | None = None, mode: str = "classical") -> tuple:
    """``(omega_12, omega_23, omega_13)``."""
    return tuple(omega(i, j, params, mode) for i, j in PAIRS)


def central_element(triple: GeodesicTriple, oms: Sequence):
    """``G12^2 + G23^2 + G13^2 - G12 G23 G13 + sum G_ij omega_ij``.

    Works on anything with ring operations (polynomials or numbers).
    """
    g12, g23, g13 = triple
    w12, w23, w13 = oms
    return (g12 * g12 + g23 * g23 + g13 * g13 - g12 * g23 * g13
            + g12 * w12 + g23 * w23 + g13 * w13)


def fricke_value(params: HoleParams | None = None) -> LaurentPoly:
    """``4 - G1 G2 G3 G_inf - G1^2 - G2^2 - G3^2 - G_inf^2``."""
    G = LaurentPoly.param
    ginf = g_infinity()
    f = 4 - G(1) * G(2) * G(3) * ginf - G(1) ** 2 - G(2) ** 2 - G(3) ** 2 - ginf * ginf
    return _specialize(f, params)


def fricke_check(params: HoleParams | None = None) -> CheckResult:
    t = geodesic_functions(params)
    residual = central_element(t, omegas(params)) - fricke_value(params)
    return exact_result("fricke", residual, "C = 4 - G1G2G3Ginf - sum Gi^2 - Ginf^2")


def goldman_checks(params: HoleParams | None = None) -> list:
    """The three bracket relations and centrality of the Casimir, exactly."""
    g12, g23, g13 = geodesic_functions(params)
    w12, w23, w13 = omegas(params)
    pb = poisson_bracket
    out = [
        exact_result("bracket_12_23", pb(g12, g23) - (g12 * g23 - 2 * g13 - w13),
                     "{G12,G23} = G12G23 - 2G13 - w13"),
        exact_result("bracket_23_13", pb(g23, g13) - (g23 * g13 - 2 * g12 - w12),
                     "{G23,G13} = G23G13 - 2G12 - w12"),
        exact_result("bracket_13_12", pb(g13, g12) - (g12 * g13 - 2 * g23 - w23),
                     "{G13,G12} = G12G13 - 2G23 - w23"),
    ]
    c = central_element((g12, g23, g13), (w12, w23, w13))
    for name, g in (("12", g12), ("23", g23), ("13", g13)):
        out.append(exact_result(f"casimir_central_{name}", pb(c, g), f"{{C,G{name}}} = 0"))
    return out


# ---------------------------------------------------------------------------
# the cubic surface

@dataclass(frozen=True)
class SurfacePoint:
    u: complex
    v: complex
    w: complex
    r1: complex
    r2: complex
    r3: complex
    r4: complex

    @property
    def residual(self) -> complex:
        return cubic(self.u, self.v, self.w, (self.r1, self.r2, self.r3, self.r4))

    @property
    def scale(self) -> float:
        """Largest monomial magnitude in the cubic at this point."""
        u, v, w = self.u, self.v, self.w
        mons = (u * u, v * v, w * w, u * v * w, self.r1 * u, self.r2 * v, self.r3 * w, self.r4)
        return max(abs(m) for m in mons)

    def to_dict(self) -> dict:
        def c(z):
            z = complex(z)
            return [z.real, z.imag]
        return {k: c(getattr(self, k)) for k in ("u", "v", "w", "r1", "r2", "r3", "r4")} | {
            "residual": c(self.residual)}


def cubic(u, v, w, r) -> complex:
    r1, r2, r3, r4 = r
    return u * u + v * v + w * w - u * v * w + r1 * u + r2 * v + r3 * w + r4


def _numeric_point(Y, params: HoleParams) -> tuple:
    G = params.numeric()
    return EvalPoint.from_logs(Y, G=G), G


def mu_eval(Y: Sequence, params: HoleParams) -> SurfacePoint:
    """Map shifted shear coordinates to the cubic:
    ``u = G12, v = G13, w = G23, (r1, r2, r3) = (w12, w13, w23)`` and
    ``r4 = -(4 - G1G2G3Ginf - sum G_i^2 - Ginf^2)``."""
    pt, G = _numeric_point(Y, params)
    g12, g23, g13 = (evaluate(f, pt) for f in geodesic_functions())
    ginf = evaluate(g_infinity(), pt)
    g1, g2, g3 = G
    w12 = g1 * g2 + g3 * ginf
    w13 = g1 * g3 + g2 * ginf
    w23 = g2 * g3 + g1 * ginf
    r4 = -4 + g1 * g2 * g3 * ginf + g1 * g1 + g2 * g2 + g3 * g3 + ginf * ginf
    return SurfacePoint(g12, g13, g23, w12, w13, w23, r4)


def eg_bracket(p: SurfacePoint) -> tuple:
    """``({u,v}, {v,w}, {w,u}) = (d/dw, d/du, d/dv)`` of the cubic."""
    u, v, w = p.u, p.v, p.w
    return (2 * w - u * v + p.r3, 2 * u - v * w + p.r1, 2 * v - u * w + p.r2)


# EG pair -> (Goldman pair, sign); which geodesic function sits in u, v, w
_COORD = {"u": (1, 2), "v": (1, 3), "w": (2, 3)}
_EG_PAIRS = (("u", "v"), ("v", "w"), ("w", "u"))


def goldman_pair_values(Y: Sequence, params: HoleParams) -> dict:
    """Evaluated Goldman brackets ``{G_a, G_b}`` for every ordered pair of generators."""
    pt, _ = _numeric_point(Y, params)
    funcs = dict(zip(PAIRS, geodesic_functions()))
    out = {}
    for a, b in itertools.permutations(PAIRS, 2):
        out[(a, b)] = evaluate(poisson_bracket(funcs[a], funcs[b]), pt)
    return out


def resolve_eg_dictionary(samples: Sequence, rel_tol: float = 1e-9) -> dict:
    """Find, for each EG bracket, the signed Goldman bracket it equals on all samples.

    ``samples`` are ``(Y, HoleParams)`` pairs.  The result maps ``"u,v"`` to
    ``["12", "13", sign]`` and so on; a pair with no consistent choice is
    mapped to ``None``.
    """
    goldman = [goldman_pair_values(Y, p) for Y, p in samples]
    eg = [eg_bracket(mu_eval(Y, p)) for Y, p in samples]
    result = {}
    for n, (x, y) in enumerate(_EG_PAIRS):
        found = None
        # the variable dictionary's own pairing is tried first
        natural = (_COORD[x], _COORD[y])
        order = [natural] + [ab for ab in itertools.permutations(PAIRS, 2) if ab != natural]
        for a, b in order:
            for sign in (1, -1):
                if all(abs(e[n] - sign * g[(a, b)]) <= rel_tol * max(1.0, abs(e[n]))
                       for e, g in zip(eg, goldman)):
                    found = [f"{a[0]}{a[1]}", f"{b[0]}{b[1]}", sign]
                    break
            if found:
                break
        result[f"{x},{y}"] = found
    return result


# ---------------------------------------------------------------------------
# degenerate leaves (all G_i = 0)

def degenerate_leaf_casimir(n: int) -> Fraction:
    """Exact Casimir at ``G_i = 0`` on the leaf ``Y1 + Y2 + Y3 = i n pi``.

    With ``G_i = 0`` the Casimir reduces to ``4 - G_inf^2`` and each monomial
    ``e^{k (Y1+Y2+Y3)}`` of ``G_inf`` specialises to ``(-1)^{k n}``.
    """
    zero = HoleParams.values((0, 0, 0))
    c = central_element(geodesic_functions(zero), omegas(zero))
    total = Fraction(0)
    for k, coeff in c.items():
        y = k[:3]
        if len(set(y)) != 1 or y[0] % 2:
            raise ValueError("Casimir is not a function of Y1+Y2+Y3 alone")
        total += coeff * (-1) ** ((y[0] // 2) * n % 2)
    return total


def is_degenerate_leaf(Y: Sequence, params: HoleParams, tol: float = 1e-12) -> int | None:
    """Leaf index ``n`` if ``G_i = 0`` and ``sum Y = i n pi``, else ``None``."""
    try:
        G = params.numeric()
    except ValueError:
        return None
    if any(abs(g) > tol for g in G):
        return None
    s = sum(complex(y) for y in Y)
    n = s.imag / math.pi
    if abs(s.real) <= tol and abs(n - round(n)) <= tol:
        return int(round(n))
    return None


# ---------------------------------------------------------------------------
# quantum relations

def quantum_triple(params: HoleParams | None = None) -> GeodesicTriple:
    return geodesic_functions(params, mode="quantum")


def _q(h: int) -> QTorusElement:
    return QTorusElement.qpow(h)


def quantum_relations_check(qtriple: GeodesicTriple | None = None,
                            params: HoleParams | None = None) -> list:
    """The three q-commutation relations and Hermiticity of each generator.

    ``q^{-1/2} A B - q^{1/2} B A = (q^{-1} - q) C + (q^{-1/2} - q^{1/2}) omega``
    for the cyclic triples ``(A, B, C)``.
    """
    if qtriple is None:
        qtriple = quantum_triple(params)
    g12, g23, g13 = qtriple
    w12, w23, w13 = omegas(params, mode="quantum")
    out = []
    rels = (("12_23", g12, g23, g13, w13, "13"),
            ("23_13", g23, g13, g12, w12, "12"),
            ("13_12", g13, g12, g23, w23, "23"))
    for name, a, b, c, w, k in rels:
        lhs = _q(-1) * a * b - _q(1) * b * a
        rhs = (_q(-2) - _q(2)) * c + (_q(-1) - _q(1)) * w
        # at q = 1 both sides vanish identically
        at_one = not classical_limit(lhs) and not classical_limit(rhs)
        out.append(exact_result(f"qcomm_{name}", lhs - rhs,
                                f"q^-1/2 AB - q^1/2 BA = (q^-1-q)G{k} + (q^-1/2-q^1/2)w{k}",
                                classical_limit_zero=at_one))
    for name, g in (("12", g12), ("23", g23), ("13", g13)):
        out.append(exact_result(f"hermitian_G{name}", dagger(g) - g, "G^dagger = G"))
    return out


# quantum Casimir as published: (q-power in half units, sign, monomial)
PRINTED_CASIMIR = (
    (-1, 1, "G12G23G13"),
    (-2, -1, "G12^2"),
    (2, -1, "G23^2"),
    (-2, -1, "G13^2"),
    (-1, -1, "w12G12"),
    (1, -1, "w23G23"),
    (-1, -1, "w13G13"),
)


def casimir_monomials(qtriple: GeodesicTriple, oms: Sequence) -> dict:
    g12, g23, g13 = qtriple
    w12, w23, w13 = oms
    return {"G12G23G13": g12 * g23 * g13, "G12^2": g12 * g12, "G23^2": g23 * g23,
            "G13^2": g13 * g13, "w12G12": w12 * g12, "w23G23": w23 * g23,
            "w13G13": w13 * g13}


def quantum_casimir(qtriple: GeodesicTriple, oms: Sequence, powers=PRINTED_CASIMIR) -> QTorusElement:
    mons = casimir_monomials(qtriple, oms)
    out = QTorusElement.zero()
    for h, sign, name in powers:
        out = out + (_q(h) * mons[name]).scale(sign)
    return out


def _rref(rows: list, ncols: int) -> list:
    """Reduced row echelon form over the rationals (rows are lists of Fractions)."""
    rows = [r[:] for r in rows if any(r)]
    piv_rows = []
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_rows.append(rows[r])
        r += 1
        col += 1
    return piv_rows


def fit_quantum_casimir(qtriple: GeodesicTriple, oms: Sequence, require_hermitian: bool = True) -> dict:
    """Fit ``C = sum_i sign_i q^{alpha_i} m_i`` over ``alpha_i in {-1,-1/2,0,1/2,1}``.

    The centrality conditions ``[C, G_ij] = 0`` are linear in the 35 unknown
    coefficients (7 monomials times 5 q-powers); candidates with one power
    per monomial and the printed signs are screened against the solution
    space and confirmed exactly.
    """
    g12, g23, g13 = qtriple
    mons = casimir_monomials(qtriple, oms)
    names = [n for _, _, n in PRINTED_CASIMIR]
    signs = [s for _, s, _ in PRINTED_CASIMIR]
    powers = (-2, -1, 0, 1, 2)
    cols = []
    for name in names:
        comms = [mons[name] * g - g * mons[name] for g in (g12, g23, g13)]
        for h in powers:
            vec = {}
            for n, cm in enumerate(comms):
                for k, c in (_q(h) * cm).items():
                    vec[(n,) + k] = c
            if require_hermitian:
                e = _q(h) * mons[name]
                for k, c in (e - dagger(e)).items():
                    vec[(3,) + k] = c
            cols.append(vec)
    keys = sorted(set().union(*cols))
    index = {k: i for i, k in enumerate(keys)}
    rows = [[Fraction(0)] * len(cols) for _ in keys]
    for j, vec in enumerate(cols):
        for k, c in vec.items():
            rows[index[k]][j] = c
    red = _rref(rows, len(cols))
    mat = np.array([[float(x) for x in r] for r in red]) if red else np.zeros((0, len(cols)))
    nullity = len(cols) - len(red)

    solutions = []
    for alphas in itertools.product(range(len(powers)), repeat=len(names)):
        idx = [5 * i + a for i, a in enumerate(alphas)]
        v = mat[:, idx] @ np.array(signs, dtype=float) if len(red) else np.zeros(0)
        if np.all(np.abs(v) < 1e-9):
            exact = all(sum(r[j] * s for j, s in zip(idx, signs)) == 0 for r in red)
            if exact:
                solutions.append(tuple((powers[a], s, n) for a, s, n in zip(alphas, signs, names)))
    return {"nullity": nullity, "solutions": solutions}


def quantum_casimir_check(qtriple: GeodesicTriple | None = None,
                          params: HoleParams | None = None) -> list:
    """Centrality and Hermiticity of the printed quantum Casimir; falls back to
    fitting the q-powers if the printed form is not central."""
    if qtriple is None:
        qtriple = quantum_triple(params)
    oms = omegas(params, mode="quantum")
    powers = PRINTED_CASIMIR
    c = quantum_casimir(qtriple, oms, powers)
    comm = [c * g - g * c for g in qtriple]
    fitted = None
    if any(comm):
        fit = fit_quantum_casimir(qtriple, oms)
        if fit["solutions"]:
            fitted = fit["solutions"][0]
            powers = fitted
            c = quantum_casimir(qtriple, oms, powers)
            comm = [c * g - g * c for g in qtriple]
    details = {"powers": [[h, s, n] for h, s, n in powers], "refitted": fitted is not None}
    out = [exact_result(f"quantum_casimir_central_{n}", cm, f"[C_q, G{n}] = 0", **details)
           for n, cm in zip(("12", "23", "13"), comm)]
    out.append(exact_result("quantum_casimir_hermitian", dagger(c) - c, "C_q^dagger = C_q"))
    classical = central_element(geodesic_functions(params), omegas(params))
    out.append(exact_result("quantum_casimir_classical_limit", classical_limit(c) + classical,
                            "C_q at q=1 equals -C"))
    return out


def eg_goldman_agreement(samples: Sequence, rel_tol: float = 1e-9,
                         dictionary: dict | None = None) -> CheckResult:
    """Largest relative mismatch between EG partials and the paired Goldman brackets."""
    from ._constants import EG_DICTIONARY

    dictionary = dictionary or EG_DICTIONARY
    worst = 0.0
    for Y, p in samples:
        eg = eg_bracket(mu_eval(Y, p))
        gb = goldman_pair_values(Y, p)
        for n, (x, y) in enumerate(_EG_PAIRS):
            a, b, s = dictionary[f"{x},{y}"]
            g = s * gb[((int(a[0]), int(a[1])), (int(b[0]), int(b[1])))]
            worst = max(worst, abs(eg[n] - g) / max(1.0, abs(eg[n])))
    return numeric_result("eg_goldman_agreement", worst, rel_tol, "{u,v} = d(phi)/dw etc.")


def random_surface_samples(rng: np.random.Generator, n: int) -> list:
    """Complex shear coordinates with moderate real parts and ``G_i in [0, 2)``."""
    out = []
    for _ in range(n):
        Y = rng.uniform(-1.0, 1.0, 3) + 1j * rng.uniform(-1.0, 1.0, 3)
        G = rng.uniform(0.0, 2.0, 3)
        out.append((tuple(complex(y) for y in Y), HoleParams.values(tuple(float(g) for g in G))))
    return out


def cubic_membership(samples: Sequence, rel_tol: float = 1e-9) -> CheckResult:
    worst = 0.0
    for Y, p in samples:
        pt = mu_eval(Y, p)
        worst = max(worst, abs(pt.residual) / (1.0 + pt.scale))
    return numeric_result("cubic_membership", worst, rel_tol, "phi(mu(Y)) = 0")


def degenerate_leaf_report(Y: Sequence, params: HoleParams) -> dict | None:
    n = is_degenerate_leaf(Y, params)
    if n is None:
        return None
    c = mu_eval(Y, params)
    return {"n": n, "casimir": float(degenerate_leaf_casimir(n)),
            "casimir_numeric": [(-c.r4).real, (-c.r4).imag],
            "note": "degenerate leaf, C in {0,4}"}

def write_constants(path=None, seed: int = 0, n: int = 20) -> dict:
    """Resolve the EG/Goldman pairing on seeded samples and write it to ``_constants.py``."""
    from pathlib import Path

    d = resolve_eg_dictionary(random_surface_samples(np.random.default_rng(seed), n))
    if any(v is None for v in d.values()):
        raise RuntimeError(f"no consistent EG/Goldman pairing: {d}")
    path = Path(path) if path else Path(__file__).with_name("_constants.py")
    lines = ["# Generated by d4shear.surface.write_constants; do not edit.",
             "# EG bracket -> (Goldman generator, Goldman generator, sign)",
             "EG_DICTIONARY = {"]
    lines += [f"    {k!r}: {v!r}," for k, v in d.items()]
    lines += ["}", ""]
    path.write_text("\n".join(lines))
    return d


if __name__ == "__main__":
    print(write_constants())
