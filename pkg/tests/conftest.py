import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from admissible.cyclotomic import Cyclo  # noqa: E402
from admissible.polynomial import Poly2, RatFunc  # noqa: E402

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cyclos(draw, order=None):
    m = order or draw(st.sampled_from([1, 3, 4, 6, 8, 12]))
    coeffs = draw(st.lists(small_q, min_size=1, max_size=6))
    return Cyclo(coeffs, m)


@st.composite
def polys(draw, order=1, max_terms=4, max_deg=3, nonzero=False):
    keys = draw(st.lists(st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)),
                         min_size=1 if nonzero else 0, max_size=max_terms, unique=True))
    terms = {k: draw(cyclos(order)) for k in keys}
    p = Poly2(terms)
    if nonzero and p.is_zero():
        p = Poly2.const(1)
    return p


@st.composite
def ratfuncs(draw, order=1, nonzero=False):
    return RatFunc(draw(polys(order, nonzero=nonzero)), draw(polys(order, nonzero=True)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
