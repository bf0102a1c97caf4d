from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from d4shear.exactalg import LaurentPoly
from d4shear.qtorus import QTorusElement

settings.register_profile("d4shear", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("d4shear")

small = st.integers(-3, 3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool)


@st.composite
def laurent(draw, max_terms=4, with_p=True, with_g=True):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        y = tuple(draw(small) for _ in range(3))
        p = tuple(draw(small) for _ in range(3)) if with_p else (0, 0, 0)
        g = tuple(draw(st.integers(0, 2)) for _ in range(3)) if with_g else (0, 0, 0)
        terms[y + p + g] = draw(coeffs)
    return LaurentPoly(terms)


@st.composite
def qtorus(draw, max_terms=3):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        a = tuple(draw(st.integers(-2, 2)) for _ in range(3))
        qh = draw(st.integers(-3, 3))
        g = tuple(draw(st.integers(0, 1)) for _ in range(3))
        terms[a + (qh,) + g] = draw(coeffs)
    return QTorusElement(terms)


def frac(x):
    return Fraction(x)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
