"""Identity suites aggregated into deterministic reports."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import braid, monodromy, surface
from .exactalg import LaurentPoly
from .report import CheckResult, exact_result, numeric_result, timed

SUITES = ("classical", "quantum", "braid", "monodromy")
SCHEMA = 1


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    seed: int = 0
    samples: int = 200
    abs_tol: float = 1e-12
    rel_tol: float = 1e-9

    def __post_init__(self):
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")

    def rng(self, stream: int) -> np.random.Generator:
        # one independent stream per numeric check
        return np.random.default_rng([self.seed, stream])


def classical_suite(cfg: SuiteConfig) -> list:
    out = []
    with timed(out):
        out += surface.goldman_checks()
        out.append(surface.fricke_check())
    for kind in ("hyperbolic", "orbifold"):
        with timed(out):
            out += monodromy.block_identity_check(kind)
            out += monodromy.trace_geodesic_check(monodromy.build_generators(kind))
    with timed(out):
        out += monodromy.tilde_g13_report()
        t = monodromy.build_generators("orbifold")
        out.append(exact_result("skein_gamma_words", monodromy.skein_check(t.g1 @ t.g2, t.g3),
                                "Tr(AB) + Tr(AB^-1) = TrA TrB"))
    with timed(out):
        samples = surface.random_surface_samples(cfg.rng(1), cfg.samples)
        out.append(surface.cubic_membership(samples, cfg.rel_tol))
        out.append(surface.eg_goldman_agreement(samples, cfg.rel_tol))
    with timed(out):
        for n in range(4):
            out.append(exact_result(f"degenerate_leaf_casimir_n{n}",
                                    LaurentPoly.const(surface.degenerate_leaf_casimir(n)),
                                    "C = 4 - Ginf^2 on sum Y = i n pi, G_i = 0"))
    return out


def quantum_suite(cfg: SuiteConfig) -> list:
    out = []
    with timed(out):
        out += surface.quantum_relations_check()
    with timed(out):
        out += surface.quantum_casimir_check()
    with timed(out):
        out += braid.quantum_braid_check()
    return out


def _matrix_vs_abstract(cfg: SuiteConfig) -> list:
    worst = worst_inf = 0.0
    for n in range(cfg.samples):
        m = monodromy.sample_triple(cfg.seed, index=n)
        before = braid.AbstractTriple(*m.trace_coordinates())
        tinf = np.trace(m.m1 @ m.m2 @ m.m3)
        for g in braid.GENERATORS:
            after = monodromy.braid_matrices(m, g)
            want = braid.act_classical(g, before)
            got = after.trace_coordinates()
            worst = max(worst, max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(got, want)))
            t2 = np.trace(after.m1 @ after.m2 @ after.m3)
            worst_inf = max(worst_inf, abs(t2 - tinf) / max(1.0, abs(tinf)))
    return [numeric_result("matrix_braid_vs_polynomial", worst, cfg.rel_tol,
                           "traces of conjugated triples follow the polynomial braid action"),
            numeric_result("matrix_braid_Minf_trace", worst_inf, cfg.rel_tol,
                           "Tr(M1 M2 M3) is braid invariant")]


def braid_suite(cfg: SuiteConfig) -> list:
    out = []
    with timed(out):
        out += braid.braid_relation_check()
    with timed(out):
        out += _matrix_vs_abstract(cfg)
    with timed(out):
        states = braid.random_shear_states(cfg.rng(2), cfg.samples)
        out += braid.shear_invariance_check(states, cfg.rel_tol)
    with timed(out):
        out.append(braid.realization_report(cfg.seed, 20, cfg.rel_tol))
    return out


def monodromy_suite(cfg: SuiteConfig) -> list:
    out = []
    with timed(out):
        out.append(monodromy.ks_goldman_agreement(cfg.seed, cfg.samples, cfg.rel_tol))
    with timed(out):
        anti = inter = 0.0
        for n in range(cfg.samples):
            m = monodromy.sample_triple(cfg.seed, index=n)
            a = monodromy.ks_bracket(m, ((1, 2), (2, 3)))
            b = monodromy.ks_bracket(m, ((2, 3), (1, 2)))
            anti = max(anti, abs(a + b) / max(1.0, abs(a)))
            inter = max(inter, abs(a - monodromy.ks_intermediate(m)) / max(1.0, abs(a)))
        out.append(numeric_result("ks_antisymmetry", anti, cfg.rel_tol, "{G12,G23} = -{G23,G12}"))
        out.append(numeric_result("ks_intermediate_trace", inter, cfg.rel_tol,
                                  "{G12,G23} = Tr(M1M2M3M2 - M1M2M2M3)"))
    with timed(out):
        out.append(monodromy.skein_random_check(cfg.seed, 5 * cfg.samples, cfg.abs_tol))
    with timed(out):
        thetas = (0.3, 0.45, 0.7)
        worst = 0.0
        for n in range(cfg.samples):
            m = monodromy.sample_triple(cfg.seed, thetas, index=n)
            for th, mat in zip(thetas, m.mats):
                worst = max(worst, abs(np.trace(mat) - 2 * np.cos(np.pi * th)))
        out.append(numeric_result("constrained_sample_traces", worst, cfg.abs_tol,
                                  "Tr M_j = 2 cos(pi theta_j)"))
    return out


_RUNNERS = {"classical": classical_suite, "quantum": quantum_suite,
            "braid": braid_suite, "monodromy": monodromy_suite}


def run(cfg: SuiteConfig, timings: bool = False) -> dict:
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    suites = {}
    ok = True
    for name in names:
        results: list[CheckResult] = _RUNNERS[name](cfg)
        ok = ok and all(r.ok for r in results)
        suites[name] = [r.to_dict(timings) for r in results]
    return {"schema": SCHEMA,
            "config": {"suite": cfg.suite, "seed": cfg.seed, "samples": cfg.samples,
                       "abs_tol": cfg.abs_tol, "rel_tol": cfg.rel_tol},
            "ok": ok, "suites": suites}
