import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from homly.coeff import GaussRational, Scalar

sys.path.insert(0, str(Path(__file__).parent))

PARAMS = ("a", "b", "l")

# lines recorded by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gauss = st.builds(GaussRational, small_fractions, small_fractions)
monomials = st.tuples(*[st.integers(0, 2)] * len(PARAMS))


@st.composite
def scalars(draw, params=PARAMS, max_terms=4):
    terms = draw(st.dictionaries(st.tuples(*[st.integers(0, 2)] * len(params)),
                                 gauss, max_size=max_terms))
    return Scalar(params, terms)


@pytest.fixture
def P():
    return PARAMS
