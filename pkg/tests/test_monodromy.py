import numpy as np
import pytest

from d4shear import braid as B
from d4shear import monodromy as M
from d4shear.exactalg import LaurentPoly


def test_fixed_matrices():
    assert M.R @ M.R @ M.R == -M.Mat2.exact(((1, 0), (0, 1)))
    assert M.L == M.R @ M.R
    assert M.L == -M.R.inverse()


@pytest.mark.parametrize("kind", ["hyperbolic", "orbifold"])
def test_block_and_trace_identities(kind):
    results = M.block_identity_check(kind) + M.trace_geodesic_check(M.build_generators(kind))
    assert all(r.status == "exact-zero" for r in results)


def test_unknown_kind():
    with pytest.raises(ValueError):
        M.build_generators("torus")


def test_tilde_g13_variants():
    d = M.tilde_g13_checks()
    assert d["closing"] == ["12,23 -Tr"]
    assert d["variants"]["12,13 +Tr"]["product_residual_terms"] > 0
    assert all(r.ok for r in M.tilde_g13_report())


def test_skein_identity_and_exact_words():
    one = M.Mat2.identity()
    assert M.skein_residual(one, one) == 0
    t = M.build_generators("orbifold")
    assert M.skein_check(t.g1 @ t.g2, t.g3 @ t.g1).is_zero()
    assert M.skein_random_check(0, 1000).ok


def test_exact_inverse_requires_unit_determinant():
    with pytest.raises(ValueError):
        M.Mat2.exact(((2, 0), (0, 1))).inverse()


def test_sample_triple_deterministic_and_unimodular():
    a, b = M.sample_triple(4, index=2), M.sample_triple(4, index=2)
    assert all(np.array_equal(x, y) for x, y in zip(a.mats, b.mats))
    for m in a.mats:
        assert abs(np.linalg.det(m) - 1) < 1e-12
    assert a.product_check() < 1e-12


def test_constrained_sample_traces():
    thetas = (0.25, 0.5, 0.1)
    m = M.sample_triple(1, thetas)
    for th, mat in zip(thetas, m.mats):
        assert abs(np.trace(mat) - 2 * np.cos(np.pi * th)) < 1e-12


def test_ks_bracket_matches_goldman():
    assert M.ks_goldman_agreement(3, 50).ok


def test_ks_antisymmetry_and_intermediate():
    m = M.sample_triple(9)
    a = M.ks_bracket(m, ((1, 2), (2, 3)))
    assert abs(a + M.ks_bracket(m, ((2, 3), (1, 2)))) < 1e-10
    assert abs(a - M.ks_intermediate(m)) < 1e-10 * max(1, abs(a))


def test_ks_bracket_rejects_other_patterns():
    with pytest.raises(ValueError):
        M.ks_bracket(M.sample_triple(0), ((1, 4), (2, 3)))


def test_exchange_matrix_swaps_factors():
    a, b = np.arange(4.0).reshape(2, 2), np.eye(2) + 1
    assert np.allclose(M.OMEGA @ np.kron(a, b) @ M.OMEGA, np.kron(b, a))


@pytest.mark.parametrize("g", B.GENERATORS)
def test_matrix_braid_induces_polynomial_action(g):
    for n in range(20):
        m = M.sample_triple(2, index=n)
        got = M.braid_matrices(m, g).trace_coordinates()
        want = B.act_classical(g, B.AbstractTriple(*m.trace_coordinates()))
        assert np.allclose(got, want, rtol=1e-9, atol=1e-9)


def test_matrix_braid_identity_word_and_minf():
    m = M.sample_triple(5)
    same = M.braid_matrices_word(m, B.BraidWord())
    assert all(np.array_equal(x, y) for x, y in zip(m.mats, same.mats))
    b = M.braid_matrices(m, "23")
    assert np.allclose(b.mats[1], m.m2 @ m.m3 @ np.linalg.inv(m.m2))
    assert np.isclose(np.trace(b.m1 @ b.m2 @ b.m3), np.trace(m.m1 @ m.m2 @ m.m3))


def test_matrix_json_layout():
    m = M.Mat2(1 + 2j, 0, 0, 1)
    assert m.to_json_obj()[0] == [1.0, 2.0]
    exact = M.Mat2.exact(((1, 0), (0, 1))).to_json_obj()
    assert LaurentPoly.from_json_obj(exact[0]) == 1
