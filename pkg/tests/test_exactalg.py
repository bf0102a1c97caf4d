import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from d4shear.exactalg import (DomainError, EvalPoint, ExponentVector, LaurentPoly, evaluate,
                              poisson_bracket, substitute_tilde, symplectic_form)

from conftest import laurent

E = LaurentPoly.exp_y


def test_symplectic_cyclic_pair():
    assert symplectic_form(ExponentVector.make(y=(2, 0, 0)), ExponentVector.make(y=(0, 2, 0))) == 1


def test_symplectic_sum_pair():
    a = ExponentVector.make(y=(2, 2, 0))
    b = ExponentVector.make(y=(0, 2, 2))
    assert symplectic_form(a, b) == 1


def test_symplectic_perimeter_direction_is_central():
    a = ExponentVector.make(y=(2, 0, 0))
    b = ExponentVector.make(p=(1, 0, 0))
    assert symplectic_form(a, b) == 0


@given(st.tuples(*[st.integers(-4, 4)] * 3), st.tuples(*[st.integers(-4, 4)] * 3))
def test_symplectic_antisymmetric(y1, y2):
    a, b = ExponentVector.make(y=y1), ExponentVector.make(y=y2)
    assert symplectic_form(a, a) == 0
    assert symplectic_form(a, b) == -symplectic_form(b, a)


def test_bracket_of_two_exponentials():
    assert poisson_bracket(E((1, 0, 0)), E((0, 1, 0))) == E((1, 1, 0))


def test_negative_parameter_power_rejected():
    with pytest.raises(ValueError):
        LaurentPoly({(0,) * 6 + (-1, 0, 0): 1})


def test_wrong_key_length_rejected():
    with pytest.raises(ValueError):
        LaurentPoly({(0, 0): 1})


def test_canonical_form_cancels_and_orders():
    f = LaurentPoly([((2, 0, 0, 0, 0, 0, 0, 0, 0), 1), ((0,) * 9, 3)])
    g = LaurentPoly([((0,) * 9, 3), ((2, 0, 0, 0, 0, 0, 0, 0, 0), 1)])
    assert f == g and hash(f) == hash(g)
    assert (f - g).is_zero()
    assert [k for k, _ in f.items()] == sorted(k for k, _ in f.items())


def test_evaluate_examples():
    g12 = E((1, 1, 0)) + E((-1, -1, 0)) + E((-1, 1, 0)) + LaurentPoly.param(1) * E((0, 1, 0)) \
        + LaurentPoly.param(2) * E((-1, 0, 0))
    assert evaluate(g12, EvalPoint.from_logs((0, 0, 0))) == pytest.approx(3)
    assert evaluate(LaurentPoly.const(1), EvalPoint.from_logs((0.3, 1j, -2))) == 1
    assert evaluate(E((1, 0, 0)), EvalPoint.from_logs((math.log(2), 0, 0))) == pytest.approx(2)


def test_evaluate_zero_exponential_is_domain_error():
    with pytest.raises(DomainError):
        evaluate(E((-1, 0, 0)), EvalPoint((0, 1, 1)))


def test_substitute_tilde_shifts_perimeter():
    assert substitute_tilde(E((1, 0, 0))) == LaurentPoly.monomial(y=(2, 0, 0), p=(-1, 0, 0))
    assert substitute_tilde(LaurentPoly.const(7)) == 7


@given(laurent(with_p=True))
def test_substitute_tilde_round_trip(f):
    f = f.map_keys(lambda k: (2 * k[0], 2 * k[1], 2 * k[2]) + k[3:])
    assert substitute_tilde(substitute_tilde(f), inverse=True) == f


def test_params_to_perimeters():
    g = LaurentPoly.param(2).params_to_perimeters()
    assert g == LaurentPoly.exp_p(2, 1) + LaurentPoly.exp_p(2, -1)


@given(laurent(), laurent())
def test_bracket_antisymmetric(f, g):
    assert poisson_bracket(f, f).is_zero()
    assert poisson_bracket(f, g) == -poisson_bracket(g, f)


@given(laurent(3), laurent(3), laurent(3))
def test_bracket_jacobi(f, g, h):
    pb = poisson_bracket
    assert (pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g))).is_zero()


@given(laurent(3), laurent(3), laurent(3))
def test_bracket_leibniz(f, g, h):
    assert poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h)


@given(laurent(3), laurent(3), laurent(3))
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


# finite-difference oracle: {f, g} = sum_ij {Y_i, Y_j} df/dY_i dg/dY_j with
# {Y1, Y2} = {Y2, Y3} = {Y3, Y1} = 1
_B = ((0, 1, -1), (-1, 0, 1), (1, -1, 0))


def _grad(f, Y, P, G, h=1e-6):
    out = []
    for i in range(3):
        up = list(Y)
        dn = list(Y)
        up[i] += h
        dn[i] -= h
        out.append((evaluate(f, EvalPoint.from_logs(up, P, G))
                    - evaluate(f, EvalPoint.from_logs(dn, P, G))) / (2 * h))
    return out


@given(laurent(3), laurent(3), st.tuples(*[st.floats(-0.5, 0.5)] * 3))
def test_bracket_matches_finite_differences(f, g, Y):
    P, G = (0.2, -0.1, 0.3), (0.7, 1.1, 0.4)
    df, dg = _grad(f, Y, P, G), _grad(g, Y, P, G)
    oracle = sum(_B[i][j] * df[i] * dg[j] for i in range(3) for j in range(3))
    value = evaluate(poisson_bracket(f, g), EvalPoint.from_logs(Y, P, G))
    assert abs(value - oracle) <= 1e-5 * max(1.0, abs(oracle))


@given(laurent())
def test_json_round_trip(f):
    assert LaurentPoly.from_json(f.to_json()) == f


def test_json_coefficients_are_exact():
    f = LaurentPoly.monomial(y=(1, 0, 0), coeff=Fraction(1, 3))
    assert LaurentPoly.from_json(f.to_json()).coefficient((1,) + (0,) * 8) == Fraction(1, 3)


def test_half_unit_evaluation():
    f = LaurentPoly.monomial(y=(1, 0, 0), p=(0, 0, -1))
    pt = EvalPoint.from_logs((1.0, 0, 0), (0, 0, 2.0))
    assert evaluate(f, pt) == pytest.approx(cmath.exp(0.5 - 1.0))
