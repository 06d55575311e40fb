import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def homogeneous(draw, ring, degree=None, max_terms=4):
    """A nonzero homogeneous polynomial of the given (or a drawn) degree."""
    d = draw(st.integers(1, 3)) if degree is None else degree
    monos = ring.monomials_of_degree(d)
    picks = draw(st.lists(st.sampled_from(range(len(monos))), min_size=1, max_size=max_terms, unique=True))
    coeffs = draw(st.lists(st.integers(1, ring.p - 1), min_size=len(picks), max_size=len(picks)))
    f = ring.zero()
    for i, c in zip(picks, coeffs):
        f = f + monos[i].scale(c)
    return f


ACCEPTANCE_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = {}


@pytest.fixture
def acceptance(request):
    """Record one summary line per acceptance criterion."""
    return request.config.stash[ACCEPTANCE_KEY]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines):
        terminalreporter.write_line(lines[key])
