import pytest

from autolab.automaton import Automaton
from autolab.families import corpus, load_corpus_automaton


@pytest.fixture(scope="session")
def corpus_entries():
    return corpus()


@pytest.fixture(scope="session")
def ex6():
    return load_corpus_automaton("example6")


@pytest.fixture(scope="session")
def ex8():
    return load_corpus_automaton("example8")


@pytest.fixture(scope="session")
def ex3():
    return load_corpus_automaton("example3")


@pytest.fixture(scope="session")
def ex4_fold():
    return load_corpus_automaton("example4-fold")


@pytest.fixture(scope="session")
def ex4_irr():
    return load_corpus_automaton("example4-irr")


def permutation_automaton(n=2):
    """Two letters, both permutations: never synchronizing."""
    swap = tuple(range(1, n)) + (0,)
    return Automaton(n, ("a", "b"), (swap, tuple(range(n))))


# --- acceptance criteria log ---------------------------------------------------------
# test_acceptance.py appends one line per criterion; the lines are printed in the
# terminal summary so they show up even when output capture is on.

ACCEPTANCE_LOG = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_LOG] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE_LOG]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LOG, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
