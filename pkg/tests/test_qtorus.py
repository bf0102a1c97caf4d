from fractions import Fraction

from hypothesis import given

from d4shear.exactalg import LaurentPoly
from d4shear.qtorus import QTorusElement, classical_limit, dagger, qmul, specialize_q
from d4shear.surface import geodesic_functions, omegas, quantum_relations_check, quantum_triple

from conftest import qtorus

X = QTorusElement.x
q = QTorusElement.qpow


def test_adjacent_product_normal_order():
    # ordering under which the q-commutation relations close
    assert qmul(X((1, 0, 0)), X((0, 1, 0))) == q(1) * X((1, 1, 0))


def test_inverse_exponential():
    assert X((1, -2, 1)) * X((-1, 2, -1)) == 1


def test_exchange_relation():
    assert X((1, 0, 0)) * X((0, 1, 0)) == q(2) * X((0, 1, 0)) * X((1, 0, 0))


def test_total_exponential_is_central():
    ginf = X((1, 1, 1))
    for a in ((1, 0, 0), (0, 1, 0), (2, -1, 3)):
        assert ginf.commutator(X(a)).is_zero()


def test_dagger_examples():
    assert dagger(q(1) * X((1, 1, 0))) == q(-1) * X((1, 1, 0))
    assert dagger(QTorusElement.const(1)) == 1
    g12 = quantum_triple().g12
    assert dagger(g12) == g12


@given(qtorus(), qtorus())
def test_dagger_anti_automorphism(a, b):
    assert dagger(a * b) == dagger(b) * dagger(a)
    assert dagger(dagger(a)) == a


@given(qtorus(), qtorus(), qtorus())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(qtorus(), qtorus())
def test_classical_limit_multiplicative(a, b):
    assert classical_limit(a * b) == classical_limit(a) * classical_limit(b)


def test_classical_limit_examples():
    assert classical_limit(q(1) * X((1, 1, 0))) == LaurentPoly.exp_y((1, 1, 0))
    assert classical_limit(quantum_triple().g12) == geodesic_functions().g12


def test_specialize_q_drops_q_powers():
    assert specialize_q(q(3) * X((1, 0, 0)) + X((1, 0, 0))) == 2 * X((1, 0, 0))


@given(qtorus())
def test_json_round_trip(a):
    assert QTorusElement.from_json(a.to_json()) == a


def test_from_laurent_rejects_half_units():
    import pytest

    with pytest.raises(ValueError):
        QTorusElement.from_laurent(LaurentPoly.monomial(y=(1, 0, 0)))
    f = LaurentPoly.exp_y((1, -1, 0), coeff=Fraction(2, 3))
    assert classical_limit(QTorusElement.from_laurent(f)) == f


class _OppositeTwist(QTorusElement):
    __slots__ = ()
    TWIST = -1


def _retwist(elem):
    return _OppositeTwist(dict(elem.items()))


def test_opposite_twist_breaks_q_commutation():
    # the displayed normal-order example corresponds to the opposite twist;
    # with it the three relations no longer close
    t = quantum_triple()
    assert all(r.ok for r in quantum_relations_check(t))
    flipped = type(t)(*(_retwist(x) for x in t))
    g12, g23, g13 = flipped
    w13 = _retwist(omegas(mode="quantum")[2])
    qq = lambda h: _OppositeTwist.qpow(h)
    lhs = qq(-1) * g12 * g23 - qq(1) * g23 * g12
    rhs = (qq(-2) - qq(2)) * g13 + (qq(-1) - qq(1)) * w13
    assert not (lhs - rhs).is_zero()
