import pytest

from oracles import ACCEPTANCE_RESULTS
from thedron.matroid import Presentation, canonical_form
from thedron.verify import random_presentations

# Table of bases of the worked example: basis -> (type sequence, ep).
GOLDEN_BASES = {
    (1, 3): ((1, 1, 0), 0), (1, 4): ((1, 1, 0), 1), (1, 5): ((1, 1, 0), 2),
    (1, 6): ((1, 0, 1), 3), (1, 7): ((1, 0, 1), 4), (1, 8): ((1, 0, 1), 5),
    (1, 9): ((1, 0, 1), 6), (2, 3): ((1, 1, 0), 1), (2, 4): ((1, 1, 0), 2),
    (2, 5): ((1, 1, 0), 3), (2, 6): ((1, 0, 1), 4), (2, 7): ((1, 0, 1), 5),
    (2, 8): ((1, 0, 1), 6), (2, 9): ((1, 0, 1), 7), (3, 6): ((0, 1, 1), 2),
    (3, 7): ((0, 1, 1), 3), (3, 8): ((0, 1, 1), 4), (3, 9): ((0, 1, 1), 5),
    (4, 6): ((0, 1, 1), 3), (4, 7): ((0, 1, 1), 4), (4, 8): ((0, 1, 1), 5),
    (4, 9): ((0, 1, 1), 6), (5, 6): ((0, 1, 1), 4), (5, 7): ((0, 1, 1), 5),
    (5, 8): ((0, 1, 1), 6), (5, 9): ((0, 1, 1), 7), (6, 7): ((0, 0, 2), 5),
    (6, 8): ((0, 0, 2), 6), (6, 9): ((0, 0, 2), 7), (7, 8): ((0, 0, 2), 6),
    (7, 9): ((0, 0, 2), 7), (8, 9): ((0, 0, 2), 7),
}

GOLDEN_JSON = '{"n": 9, "r": 2, "members": [[1, 2, 6, 7, 8, 9], [3, 4, 5, 6, 7, 8, 9]]}'

RANDOM_SEED = 7
RANDOM_COUNT = 200


def golden_presentation():
    return Presentation.from_lists(9, [[1, 2, 6, 7, 8, 9], [3, 4, 5, 6, 7, 8, 9]])


@pytest.fixture
def golden():
    return canonical_form(golden_presentation())


@pytest.fixture
def u24():
    return canonical_form(Presentation.from_lists(4, [[1, 2, 3, 4], [1, 2, 3, 4]]))


@pytest.fixture
def free2():
    return canonical_form(Presentation.from_lists(2, [[1], [2]]))


@pytest.fixture(scope="session")
def random_instances():
    return random_presentations(RANDOM_COUNT, RANDOM_SEED)


@pytest.fixture(scope="session")
def small_random_instances():
    return random_presentations(40, 1234, max_n=7, max_r=3)



def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        passed, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {key}: {text}")
