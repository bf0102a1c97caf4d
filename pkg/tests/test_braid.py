import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from d4shear import braid as B

letters = st.lists(st.sampled_from(B.GENERATORS), max_size=6)


def test_parse_and_free_reduction():
    assert B.BraidWord.parse("12,23,12i").letters == ("12", "23", "12i")
    assert B.BraidWord.parse("12, 12i, 23").letters == ("23",)
    assert B.BraidWord.parse("b12,beta23").letters == ("12", "23")
    assert len(B.BraidWord.parse("")) == 0
    with pytest.raises(B.BraidWordError):
        B.BraidWord.parse("12,13")


@given(letters)
def test_word_inverse(ls):
    w = B.BraidWord(ls)
    assert len(w * w.inverse()) == 0
    assert all(w.letters[i] != B._INVERSE[w.letters[i + 1]] for i in range(len(w) - 1))


def test_words_up_to_counts():
    assert [len(w) for w in B.words_up_to(2)].count(2) == 12
    assert len(B.words_up_to(3)) == 1 + 4 + 12 + 36


def test_symbolic_b12_moves_g13_into_g23():
    t = B.AbstractTriple.symbolic()
    assert B.act_classical("12", t).x23 == t.x13


def test_numeric_b12_example():
    t = B.act_classical("12", B.AbstractTriple(3, 3, 3, 0, 0, 0))
    assert (t.x12, t.x13, t.x23) == (3, 6, 3)


def test_inverse_formula():
    t = B.AbstractTriple.symbolic()
    s = B.act_classical("12i", t)
    assert s.x13 == t.x23
    assert s.x23 == t.x12 * t.x23 - t.x13 - t.w13


@given(st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
                min_size=6, max_size=6), letters)
def test_numeric_word_round_trip(vals, ls):
    t = B.AbstractTriple(*vals)
    back = t
    for g in ls:
        back = B.act_numeric(g, back)
    for g in reversed(ls):
        back = B.act_numeric(B._INVERSE[g], back)
    scale = max(1.0, max(abs(v) for v in vals)) ** (2 ** len(ls))
    assert all(abs(a - b) <= 1e-9 * scale for a, b in zip(back, t))


def test_degree_bookkeeping():
    t = B.act_classical(B.BraidWord.parse("12,12"), B.AbstractTriple.symbolic())
    assert t.x13.degree_uvw() == 3
    assert t.x13.degree_r() == 1
    # omega symbols enter linearly and multiply at most one generator
    assert all(sum(k[3:]) == 0 or sum(k[:3]) <= 1 for k, _ in t.x13.items())
    assert t.w13.degree_uvw() == 0


def test_relation_checks_all_exact():
    results = B.braid_relation_check()
    assert all(r.status == "exact-zero" for r in results)
    neg = [r for r in results if r.identity_name == "b12_squared_not_identity"][0]
    assert neg.details["residual_terms"] > 0


def test_quantum_checks():
    results = {r.identity_name: r for r in B.quantum_braid_check()}
    assert all(r.status == "exact-zero" for r in results.values())
    # the printed omega coefficient of the second image does not agree
    assert results["quantum_printed_omega_coefficient_23"].details["printed_form_residual_terms"] > 0


def test_quantum_hexagon_abstract_output_is_input():
    t = B.quantum_abstract_triple()
    assert B.act_quantum(B.BraidWord.parse("12,23,12,23,12,23"), t) == t


def test_literal_flip_at_origin():
    s = B.braid_shear(B.ShearState((0, 0, 0), (0, 0, 0)), "12")
    assert s.Y[0] == pytest.approx(math.log(2))
    assert s.Y[1] == pytest.approx(-math.log(2))
    assert s.Y[2] == 0
    assert s.labels == (1, 3, 2)
    vals = s.values()
    assert [vals.x12, vals.x23, vals.x13] == pytest.approx([2.25, 4.5, 4.5])
    assert s.g_infinity() == pytest.approx(2)
    assert abs(s.casimir()) < 1e-12


def test_flip_small_limit():
    s = B.ShearState((0.3, -40, 0.2), (0.5, 0, 0.7))
    f = B.braid_shear(s, "12")
    assert f.Y[0] == pytest.approx(0.3)


def test_flip_inverse():
    rng = np.random.default_rng(3)
    for s in B.random_shear_states(rng, 10):
        back = B.braid_shear(B.braid_shear(s, "12"), "12i")
        assert np.allclose(back.Y, s.Y, atol=1e-12)
        assert back.G == s.G and back.labels == s.labels


def test_branch_error_near_zero_argument():
    # 1 + e^{y} + e^{2y} vanishes at y = 2 pi i / 3 with G = 1
    s = B.ShearState((0, 2j * math.pi / 3, 0), (0, 1, 0))
    with pytest.raises(B.BranchError):
        B.braid_shear(s, "12")


def test_labels_must_be_permutation():
    with pytest.raises(ValueError):
        B.ShearState((0, 0, 0), (0, 0, 0), (1, 1, 2))


def test_shear_invariants():
    samples = B.random_shear_states(np.random.default_rng(11), 100)
    assert all(r.ok for r in B.shear_invariance_check(samples))


def test_realization_search_finds_b12():
    samples = B.random_shear_states(np.random.default_rng(12), 20)
    rep = B.realization_search(samples)
    assert rep.literal_vs_b12 > 1e-3
    assert {"input_perm": [2, 1, 3], "signs": [1, 1, 1], "output_perm": [1, 3, 2], "word": "12"} in [
        {k: m[k] for k in ("input_perm", "signs", "output_perm", "word")} for m in rep.matches]
    ident = [m for m in rep.matches if m["word"] == ""]
    assert ident == []


def test_realization_needs_samples():
    with pytest.raises(ValueError):
        B.realization_search(B.random_shear_states(np.random.default_rng(0), 5))


def test_identity_word_matches_identity_action():
    s = B.random_shear_states(np.random.default_rng(1), 1)[0]
    v = s.values()
    assert B.act_classical(B.BraidWord(), v) == v


def test_realized_flip_matches_polynomial_and_preserves_casimir():
    for s in B.random_shear_states(np.random.default_rng(13), 30):
        a = B.braid_shear_realized(s, "12").values()
        b = B.act_classical("12", s.values())
        assert all(cmath.isclose(x, y, rel_tol=1e-9, abs_tol=1e-9) for x, y in zip(a[:3], b[:3]))
        assert cmath.isclose(a.casimir(), s.casimir(), rel_tol=1e-9, abs_tol=1e-9)
        back = B.braid_shear_realized(B.braid_shear_realized(s, "12"), "12i")
        assert np.allclose(back.Y, s.Y, atol=1e-10)


def test_realization_report_cross_validates():
    r = B.realization_report(0)
    assert r.ok and r.details["matches"]
