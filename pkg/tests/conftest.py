import random
from fractions import Fraction
from pathlib import Path

import pnsoft
from pnsoft import PnsSet

FIXTURES = Path(pnsoft.__file__).parent / "fixtures"

# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE = []


def fixture(name):
    return FIXTURES / name


def load_fixture(name):
    return pnsoft.load_pns(fixture(name))


def random_degree(rng):
    # denominators divide 20, so every value survives a decimal round trip
    return Fraction(rng.randrange(21), 20)


def random_set(rng, n_params=None, n_elems=None):
    np = n_params or rng.randint(1, 3)
    ne = n_elems or rng.randint(1, 3)
    params = [f"e{k + 1}" for k in range(np)]
    elems = [f"u{k + 1}" for k in range(ne)]
    rows = [[(random_degree(rng), random_degree(rng), random_degree(rng),
              random_degree(rng)) for _ in elems] for _ in params]
    return PnsSet.from_rows(params, elems, rows)


def random_pair(rng, n_params=None, n_elems=None):
    a = random_set(rng, n_params, n_elems)
    b = random_set(rng, len(a.parameters), len(a.universe))
    return a, b


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)
