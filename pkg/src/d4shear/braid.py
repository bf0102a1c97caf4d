"""Braid group action on geodesic triples.

Three realisations share one value-level rule: a generator maps the six
values ``(x12, x23, x13; w12, w23, w13)`` to new values built from ring
operations only, so the same code acts on abstract polynomials, Laurent
polynomials, quantum-torus elements (with q-weights) and complex numbers.
A fourth realisation flips shear coordinates directly.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .exactalg import DomainError, SparsePoly
from .qtorus import QTorusElement, classical_limit
from .report import CheckResult, exact_result, numeric_result
from .surface import HoleParams, central_element, omegas, quantum_triple

GENERATORS = ("12", "23", "12i", "23i")
_INVERSE = {"12": "12i", "12i": "12", "23": "23i", "23i": "23"}


class BraidWordError(ValueError):
    pass


class BraidWord:
    """Freely reduced word in ``12``, ``23`` and their inverses ``12i``, ``23i``.

    Generators are applied left to right.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Sequence[str] = ()):
        out: list = []
        for g in letters:
            if g not in _INVERSE:
                raise BraidWordError(f"unknown generator {g!r}")
            if out and out[-1] == _INVERSE[g]:
                out.pop()
            else:
                out.append(g)
        self.letters = tuple(out)

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        """``"12,23,12i"``; blanks and a leading ``b``/``beta`` are tolerated."""
        tokens = [t.strip().lower() for t in text.split(",") if t.strip()]
        clean = []
        for t in tokens:
            for prefix in ("beta", "b"):
                if t.startswith(prefix):
                    t = t[len(prefix):]
                    break
            clean.append(t)
        return cls(clean)

    def inverse(self) -> "BraidWord":
        return BraidWord([_INVERSE[g] for g in reversed(self.letters)])

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, BraidWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __str__(self):
        return ",".join(self.letters)

    def __repr__(self):
        return f"BraidWord({str(self)!r})"


def words_up_to(length: int) -> list:
    """All freely reduced words of length at most ``length`` in canonical order."""
    out = [BraidWord()]
    for n in range(1, length + 1):
        for letters in itertools.product(GENERATORS, repeat=n):
            w = BraidWord(letters)
            if len(w) == n:
                out.append(w)
    return out


# ---------------------------------------------------------------------------
# abstract polynomial model

_GEN_NAMES = ("u", "v", "w", "r12", "r23", "r13")


class GenPoly(SparsePoly):
    """Commutative polynomial in ``u, v, w`` with coefficients in
    ``Q[r12, r23, r13]``; keys are 6-tuples of non-negative exponents."""

    __slots__ = ()
    NVARS = 6

    def _check_key(self, key):
        if any(e < 0 for e in key):
            raise ValueError("generator exponents must be non-negative")

    @classmethod
    def gen(cls, name: str) -> "GenPoly":
        key = [0] * 6
        key[_GEN_NAMES.index(name)] = 1
        return cls({tuple(key): 1})

    def degree_uvw(self) -> int:
        return max((sum(k[:3]) for k in self._terms), default=0)

    def degree_r(self) -> int:
        return max((sum(k[3:]) for k in self._terms), default=0)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self.items():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(_GEN_NAMES, k) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


class AbstractTriple(NamedTuple):
    x12: object
    x23: object
    x13: object
    w12: object
    w23: object
    w13: object

    @classmethod
    def symbolic(cls) -> "AbstractTriple":
        """``x12 = u``, ``x13 = v``, ``x23 = w``, omegas ``r12, r23, r13``."""
        g = GenPoly.gen
        return cls(g("u"), g("w"), g("v"), g("r12"), g("r23"), g("r13"))

    @property
    def geodesics(self) -> tuple:
        return (self.x12, self.x23, self.x13)

    @property
    def omegas(self) -> tuple:
        return (self.w12, self.w23, self.w13)

    def casimir(self):
        return central_element(self.geodesics, self.omegas)


def _apply(g: str, t: AbstractTriple) -> AbstractTriple:
    x12, x23, x13, w12, w23, w13 = t
    if g == "12":
        return AbstractTriple(x12, x13, x12 * x13 - x23 - w23, w12, w13, w23)
    if g == "23":
        return AbstractTriple(x23 * x12 - x13 - w13, x23, x12, w13, w23, w12)
    if g == "12i":
        return AbstractTriple(x12, x12 * x23 - x13 - w13, x23, w12, w13, w23)
    if g == "23i":
        return AbstractTriple(x13, x23, x23 * x13 - x12 - w12, w13, w23, w12)
    raise BraidWordError(f"unknown generator {g!r}")


def act_classical(g, t: AbstractTriple) -> AbstractTriple:
    """Apply a generator or a whole :class:`BraidWord` (any commutative ring)."""
    if isinstance(g, BraidWord):
        for letter in g:
            t = _apply(letter, t)
        return t
    return _apply(g, AbstractTriple(*t))


act_numeric = act_classical


def _diff_size(a: AbstractTriple, b: AbstractTriple) -> int:
    return sum(len(x - y) for x, y in zip(a, b))


def braid_relation_check(include_aba: bool = True) -> list:
    t = AbstractTriple.symbolic()
    c0 = t.casimir()
    out = []
    six = BraidWord.parse("12,23,12,23,12,23")
    out.append(exact_result("braid_hexagon_abstract", _diff_size(act_classical(six, t), t),
                            "(b12 b23)^3 = Id"))
    for g in GENERATORS:
        out.append(exact_result(f"casimir_invariant_{g}", act_classical(g, t).casimir() - c0,
                                "C(beta t) = C(t)"))
        # letter by letter: a BraidWord would cancel the pair before acting
        back = _apply(_INVERSE[g], _apply(g, t))
        out.append(exact_result(f"inverse_roundtrip_{g}", _diff_size(back, t), "beta beta^-1 = Id"))
    twice = act_classical(BraidWord(["12", "12"]), t)
    size = _diff_size(twice, t)
    out.append(exact_result("b12_squared_not_identity", 0 if size else 1,
                            "beta12^2 != Id", residual_terms=size))
    if include_aba:
        lhs = act_classical(BraidWord.parse("12,23,12"), t)
        rhs = act_classical(BraidWord.parse("23,12,23"), t)
        out.append(exact_result("braid_relation_aba_bab", _diff_size(lhs, rhs),
                                "b12 b23 b12 = b23 b12 b23"))
    return out


# ---------------------------------------------------------------------------
# quantum action

def _qs(h: int) -> QTorusElement:
    return QTorusElement.qpow(h)


def _apply_quantum(g: str, t: AbstractTriple) -> AbstractTriple:
    """First printed form of each image, with ``q^{1/2}`` on the omega term
    of the ``23`` image."""
    x12, x23, x13, w12, w23, w13 = t
    if g == "12":
        return AbstractTriple(x12, x13, _qs(1) * x12 * x13 - _qs(2) * x23 - _qs(1) * w23, w12, w13, w23)
    if g == "23":
        return AbstractTriple(_qs(1) * x23 * x12 - _qs(2) * x13 - _qs(1) * w13, x23, x12, w13, w23, w12)
    if g == "12i":
        return AbstractTriple(x12, _qs(-1) * x12 * x23 - _qs(-2) * x13 - _qs(-1) * w13, x23, w12, w13, w23)
    if g == "23i":
        return AbstractTriple(x13, x23, _qs(-1) * x23 * x13 - _qs(-2) * x12 - _qs(-1) * w12, w13, w23, w12)
    raise BraidWordError(f"unknown generator {g!r}")


def act_quantum(g, t: AbstractTriple) -> AbstractTriple:
    if isinstance(g, BraidWord):
        for letter in g:
            t = _apply_quantum(letter, t)
        return t
    return _apply_quantum(g, AbstractTriple(*t))


def quantum_abstract_triple(params: HoleParams | None = None) -> AbstractTriple:
    q = quantum_triple(params)
    w12, w23, w13 = omegas(params, mode="quantum")
    return AbstractTriple(q.g12, q.g23, q.g31, w12, w23, w13)


def quantum_forms(t: AbstractTriple) -> dict:
    """Both printed forms of the two forward images, plus the printed omega
    coefficient of the ``23`` image, as quantum-torus elements."""
    x12, x23, x13, w12, w23, w13 = t
    return {
        "12": (_qs(1) * x12 * x13 - _qs(2) * x23 - _qs(1) * w23,
               _qs(-1) * x13 * x12 - _qs(-2) * x23 - _qs(-1) * w23),
        "23": (_qs(1) * x23 * x12 - _qs(2) * x13 - _qs(1) * w13,
               _qs(-1) * x12 * x23 - _qs(-2) * x13 - _qs(-1) * w13),
        "23_printed": (_qs(1) * x23 * x12 - _qs(2) * x13 - _qs(-1) * w13,
                       _qs(-1) * x12 * x23 - _qs(-2) * x13 - _qs(-1) * w13),
    }


def quantum_braid_check(t: AbstractTriple | None = None) -> list:
    if t is None:
        t = quantum_abstract_triple()
    out = []
    forms = quantum_forms(t)
    for g in ("12", "23"):
        a, b = forms[g]
        out.append(exact_result(f"quantum_two_forms_{g}", a - b, "q^1/2 A B - ... = q^-1/2 B A - ..."))
    a, b = forms["23_printed"]
    printed = a - b
    out.append(CheckResult("quantum_printed_omega_coefficient_23", "exact-zero", 0,
                           "printed q^-1/2 w13 in the first form of beta23",
                           details={"printed_form_residual_terms": len(printed),
                                    "used_coefficient": "q^1/2"}))
    six = BraidWord.parse("12,23,12,23,12,23")
    out.append(exact_result("quantum_braid_hexagon", _diff_size(act_quantum(six, t), t),
                            "(b12 b23)^3 = Id (quantum torus)"))
    for g in GENERATORS:
        back = _apply_quantum(_INVERSE[g], _apply_quantum(g, t))
        out.append(exact_result(f"quantum_inverse_roundtrip_{g}", _diff_size(back, t), "beta beta^-1 = Id"))
        qimg = tuple(classical_limit(x) for x in _apply_quantum(g, t))
        cimg = _apply(g, AbstractTriple(*(classical_limit(x) for x in t)))
        out.append(exact_result(f"quantum_classical_limit_{g}", _diff_size(AbstractTriple(*qimg), cimg),
                                "q -> 1 commutes with beta"))
    return out


# ---------------------------------------------------------------------------
# shear coordinates

BRANCH_TOL = 1e-12


class BranchError(DomainError):
    pass


@dataclass(frozen=True)
class ShearState:
    """Shear coordinates ``Y`` with boundary parameters ``G`` (both in petal
    order) and the hole labels currently sitting at each petal."""

    Y: tuple
    G: tuple
    labels: tuple = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.labels) != [1, 2, 3]:
            raise ValueError(f"labels must be a permutation of 1,2,3, got {self.labels}")
        object.__setattr__(self, "Y", tuple(complex(y) for y in self.Y))
        object.__setattr__(self, "G", tuple(complex(g) for g in self.G))

    def permuted(self, perm: Sequence[int]) -> "ShearState":
        """New petal ``k`` takes old petal ``perm[k]`` (0-based)."""
        return ShearState(tuple(self.Y[p] for p in perm), tuple(self.G[p] for p in perm),
                          tuple(self.labels[p] for p in perm))

    def values(self) -> AbstractTriple:
        """Evaluated ``(G12, G23, G13, w12, w23, w13)`` at this point; the
        third geodesic uses the cyclic ``(3, 1)`` ordering of the formula."""
        e = cmath.exp
        Y, G = self.Y, self.G

        def gij(i, j):
            return e(Y[i] + Y[j]) + e(-Y[i] - Y[j]) + e(-Y[i] + Y[j]) + G[i] * e(Y[j]) + G[j] * e(-Y[i])

        s = sum(Y)
        ginf = e(s) + e(-s)
        return AbstractTriple(gij(0, 1), gij(1, 2), gij(2, 0),
                              G[0] * G[1] + G[2] * ginf, G[1] * G[2] + G[0] * ginf,
                              G[0] * G[2] + G[1] * ginf)

    def g_infinity(self) -> complex:
        s = sum(self.Y)
        return cmath.exp(s) + cmath.exp(-s)

    def casimir(self) -> complex:
        return self.values().casimir()

    def to_dict(self) -> dict:
        return {"Y": [[y.real, y.imag] for y in self.Y], "G": [[g.real, g.imag] for g in self.G],
                "labels": list(self.labels)}


def _safe_log(z: complex) -> complex:
    if abs(z) < BRANCH_TOL:
        raise BranchError(f"logarithm argument {z} too close to zero")
    return cmath.log(z)


def _flip_logs(y2: complex, g2: complex) -> tuple:
    a = _safe_log(1 + g2 * cmath.exp(y2) + cmath.exp(2 * y2))
    b = _safe_log(1 + g2 * cmath.exp(-y2) + cmath.exp(-2 * y2))
    return a, b


def _flip(s: ShearState, signs=(1, 1, 1)) -> ShearState:
    Y, G = s.Y, s.G
    a, b = _flip_logs(Y[1], G[1])
    s1, s2, s3 = signs
    newY = (Y[0] + s1 * a, Y[2] - s2 * b, -s3 * Y[1])
    newG = (G[0], G[2], G[1])
    return ShearState(newY, newG, (s.labels[0], s.labels[2], s.labels[1]))


def _unflip(s: ShearState) -> ShearState:
    Y, G = s.Y, s.G
    y2, g2 = -Y[2], G[2]
    a, b = _flip_logs(y2, g2)
    return ShearState((Y[0] - a, y2, Y[1] + b), (G[0], G[2], G[1]),
                      (s.labels[0], s.labels[2], s.labels[1]))


def braid_shear(s: ShearState, g: str) -> ShearState:
    """The displayed two-flip transformation (``12``) and its inverse (``12i``),
    taken literally on principal logarithms."""
    if g == "12":
        return _flip(s)
    if g == "12i":
        return _unflip(s)
    raise BraidWordError(f"shear flips are provided for 12 and 12i only, got {g!r}")


# the correspondence found by realization_search: relabel petals 1<->2, flip,
# then relabel petals 2<->3
_SWAP12 = (1, 0, 2)
_SWAP23 = (0, 2, 1)


def braid_shear_realized(s: ShearState, g: str) -> ShearState:
    """Shear-level map whose induced action on geodesic functions is exactly
    the polynomial generator ``12`` (or ``12i``)."""
    if g == "12":
        return _flip(s.permuted(_SWAP12)).permuted(_SWAP23)
    if g == "12i":
        return _unflip(s.permuted(_SWAP23)).permuted(_SWAP12)
    raise BraidWordError(f"shear flips are provided for 12 and 12i only, got {g!r}")


def random_shear_states(rng: np.random.Generator, n: int) -> list:
    out = []
    for _ in range(n):
        Y = rng.uniform(-1.0, 1.0, 3) + 1j * rng.uniform(-0.5, 0.5, 3)
        G = rng.uniform(0.0, 1.9, 3)
        out.append(ShearState(tuple(Y), tuple(G)))
    return out


def shear_invariance_check(samples: Sequence[ShearState], rel_tol: float = 1e-9) -> list:
    worst_inf = worst_c = 0.0
    for s in samples:
        t = braid_shear(s, "12")
        worst_inf = max(worst_inf, abs(t.g_infinity() - s.g_infinity()) / max(1.0, abs(s.g_infinity())))
        c = s.casimir()
        worst_c = max(worst_c, abs(t.casimir() - c) / max(1.0, abs(c)))
    return [numeric_result("shear_flip_preserves_Ginf", worst_inf, rel_tol, "Ginf'' = Ginf"),
            numeric_result("shear_flip_preserves_casimir", worst_c, rel_tol, "C'' = C")]


@dataclass
class RealizationReport:
    matches: list = field(default_factory=list)
    candidates: int = 0
    words: int = 0
    literal_vs_b12: float = 0.0
    residual_table: list = field(default_factory=list)
    message: str = ""

    def to_dict(self) -> dict:
        return {"matches": self.matches, "candidates": self.candidates, "words": self.words,
                "literal_vs_b12_max_rel": float(f"{self.literal_vs_b12:.3e}"),
                "residual_table": self.residual_table, "message": self.message}


def _rel_gap(a: Sequence, b: Sequence) -> float:
    return max(abs(x - y) / max(1.0, abs(y)) for x, y in zip(a, b))


def realization_search(samples: Sequence[ShearState], max_length: int = 3,
                       rel_tol: float = 1e-9) -> RealizationReport:
    """Find which braid words the flip formulas realise.

    A candidate is (input relabelling, sign pattern of the three displayed
    terms, output relabelling).  It matches a word when the geodesic
    functions of the flipped point equal the word's polynomial image of the
    original values on every sample.
    """
    if len(samples) < 20:
        raise ValueError("realization_search needs at least 20 samples")
    words = words_up_to(max_length)
    targets = {}
    base = [s.values() for s in samples]
    for w in words:
        targets[str(w)] = [act_classical(w, v)[:3] for v in base]
    perms = list(itertools.permutations(range(3)))
    signs = list(itertools.product((1, -1), repeat=3))
    report = RealizationReport(candidates=len(perms) ** 2 * len(signs), words=len(words))
    best: dict = {}
    for pin, sg, pout in itertools.product(perms, signs, perms):
        try:
            images = [_flip(s.permuted(pin), sg).permuted(pout).values()[:3] for s in samples]
        except BranchError:
            continue
        for name, tgt in targets.items():
            gap = max(_rel_gap(a, b) for a, b in zip(images, tgt))
            if gap <= rel_tol:
                report.matches.append({"input_perm": [p + 1 for p in pin], "signs": list(sg),
                                       "output_perm": [p + 1 for p in pout], "word": name,
                                       "max_rel_residual": float(f"{gap:.3e}")})
            if name not in best or gap < best[name]:
                best[name] = gap
    literal = [_flip(s).values()[:3] for s in samples]
    report.literal_vs_b12 = max(_rel_gap(a, b) for a, b in zip(literal, targets["12"]))
    report.residual_table = [{"word": k, "best_max_rel": float(f"{v:.3e}")} for k, v in sorted(best.items())]
    if report.matches:
        report.message = f"{len(report.matches)} candidate(s) match a braid word"
    else:
        report.message = "no candidate matches; flip formulas inconsistent as transcribed"
    return report


def realization_report(seed: int, n: int = 20, rel_tol: float = 1e-9) -> CheckResult:
    rng = np.random.default_rng([seed, 7])
    rep = realization_search(random_shear_states(rng, n), rel_tol=rel_tol)
    # cross-validate the adopted correspondence on fresh samples
    fresh = random_shear_states(rng, n)
    worst = 0.0
    for s in fresh:
        a = braid_shear_realized(s, "12").values()
        b = act_classical("12", s.values())
        worst = max(worst, _rel_gap(a[:3], b[:3]))
        worst = max(worst, abs(a.casimir() - s.casimir()) / max(1.0, abs(s.casimir())))
    return CheckResult("shear_realization_search", "within-tol" if worst <= rel_tol else "failed",
                       float(f"{worst:.3e}"), "flip formulas vs beta12 on (G12, G23, G13)",
                       details=rep.to_dict())


__all__ = [
    "AbstractTriple", "BraidWord", "BraidWordError", "BranchError", "GenPoly", "ShearState",
    "act_classical", "act_numeric", "act_quantum", "braid_relation_check", "braid_shear",
    "braid_shear_realized", "quantum_braid_check", "realization_search", "words_up_to",
]
