import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qcox.laurent import LaurentPoly, RatFunc

settings.register_profile(
    "qcox", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("qcox")

# the rank <= 3 sweep (plus G2) used for the symbolic checks
SYMBOLIC = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent_polys(draw, max_terms=4, span=6):
    terms = draw(st.dictionaries(st.integers(-span, span), small_fracs, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def nonzero_laurent(draw, **kw):
    p = draw(laurent_polys(**kw))
    if not p:
        p = LaurentPoly({draw(st.integers(-3, 3)): draw(st.sampled_from([1, -2, Fraction(1, 3)]))})
    return p


@st.composite
def ratfuncs(draw):
    return RatFunc(draw(laurent_polys(max_terms=3, span=4)), draw(nonzero_laurent(max_terms=3, span=4)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(RESULTS.values(), key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
