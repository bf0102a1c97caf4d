"""Acceptance criteria, one test and one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed in the
"acceptance criteria" section of the terminal summary.  Running this file as
a script prints the same lines.
"""

import io
from contextlib import redirect_stdout

import numpy as np
import pytest

from d4shear import braid, cli, monodromy, surface

from conftest import ACCEPTANCE_LINES

REL = 1e-9
ABS = 1e-12
SEED = 2024


def record(label: str, ok: bool, detail: str = "") -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def _exact(results) -> bool:
    return all(r.status == "exact-zero" for r in results)


def test_c01_goldman_bracket_identities():
    res = [r for r in surface.goldman_checks() if r.identity_name.startswith("bracket")]
    assert record("1 Goldman bracket relations exact, symbolic in G1,G2,G3", len(res) == 3 and _exact(res))


def test_c02_central_element_and_fricke():
    res = [r for r in surface.goldman_checks() if r.identity_name.startswith("casimir")]
    res.append(surface.fricke_check())
    assert record("2 central element Poisson-commutes exactly; Fricke identity exact", len(res) == 4 and _exact(res))


def test_c03_trace_realisation():
    res = []
    for kind in ("hyperbolic", "orbifold"):
        res += monodromy.trace_geodesic_check(monodromy.build_generators(kind))
    ok = _exact(res) and any(r.identity_name == "trace_Ginf_orbifold" for r in res)
    assert record("3 -Tr(g_i g_j) and -Tr(g1 g2 g3) match the Laurent formulas (both kinds)", ok)


def test_c04a_cubic_membership():
    samples = surface.random_surface_samples(np.random.default_rng([SEED, 4]), 100)
    r = surface.cubic_membership(samples, REL)
    assert record("4a cubic membership on 100 random points, rel 1e-9", r.ok, f"max {r.residual}")


@pytest.mark.xfail(strict=True, reason="G_inf = 2(-1)^n on these leaves, so C = 4 - G_inf^2 = 0 for every n")
def test_c04b_degenerate_leaf_parity():
    values = {n: surface.degenerate_leaf_casimir(n) for n in range(4)}
    claimed = {n: (4 if n % 2 == 0 else 0) for n in range(4)}
    ok = values == claimed
    record("4b degenerate leaves: C = 4 for n even, 0 for n odd", ok,
           "computed " + ", ".join(f"n={n}: {v}" for n, v in values.items()))
    assert ok


def test_c05_eg_goldman_agreement():
    samples = surface.random_surface_samples(np.random.default_rng([SEED, 5]), 100)
    r = surface.eg_goldman_agreement(samples, REL)
    assert record("5 EG partials equal paired Goldman brackets on 100 points, rel 1e-9", r.ok, f"max {r.residual}")


def test_c06_braid_group():
    exact = braid.braid_relation_check()
    worst = 0.0
    for n in range(200):
        m = monodromy.sample_triple(SEED, index=n)
        before = braid.AbstractTriple(*m.trace_coordinates())
        for g in ("12", "23"):
            got = monodromy.braid_matrices(m, g).trace_coordinates()
            want = braid.act_classical(g, before)
            worst = max(worst, max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(got, want)))
    ok = _exact(exact) and worst <= REL
    assert record("6 (b12 b23)^3 = Id and C invariance exact; matrix braid matches on 200 triples",
                  ok, f"max {worst:.1e}")


def test_c07_quantum():
    res = surface.quantum_relations_check() + surface.quantum_casimir_check() + braid.quantum_braid_check()
    ok = _exact(res) and any(r.identity_name == "quantum_braid_hexagon" for r in res)
    assert record("7 q-commutation, dagger invariance, two forms, quantum hexagon, q->1 limits", ok)


def test_c08_korotkin_samtleben_and_skein():
    ks = monodromy.ks_goldman_agreement(SEED, 200, REL)
    sk = monodromy.skein_random_check(SEED, 1000, ABS)
    ok = ks.ok and sk.ok
    assert record("8 KS contraction = Goldman rhs on 200 triples; skein on 1000 pairs <= 1e-12", ok,
                  f"ks {ks.residual}, skein {sk.residual}")


def test_c09_shear_level_braid():
    states = braid.random_shear_states(np.random.default_rng([SEED, 9]), 100)
    inv = braid.shear_invariance_check(states, REL)
    rep = braid.realization_report(SEED, 20, REL)
    ok = all(r.ok for r in inv) and bool(rep.details["message"])
    assert record("9 flips preserve G_inf and C on 100 samples; realization search reports", ok,
                  rep.details["message"])


def test_c10_determinism():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli.main(["verify", "--suite", "all", "--seed", str(SEED)])
        outs.append((code, buf.getvalue()))
    ok = outs[0] == outs[1] and outs[0][0] == 0
    assert record("10 two verify --suite all runs are byte-identical", ok)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                pass
