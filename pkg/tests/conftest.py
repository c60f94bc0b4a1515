import pytest

from affsemi import AffineSemigroup

EX_A = [(2, 0, 3), (4, 0, 1), (0, 2, 3), (1, 3, 1)]
EX_B = EX_A + [(1, 2, 2)]
GOR_B = [(1, 0, 0), (0, 2, 0), (0, 0, 2), (1, 0, 1), (0, 1, 1)]
NONBUCHS_B = [(1, 0, 0), (0, 1, 0), (0, 0, 2), (1, 0, 1), (0, 1, 1)]


def monomial_curve(alpha):
    """Generators (alpha,0),(alpha-1,1),(1,alpha-1),(0,alpha), without repeats."""
    gens = [(alpha, 0), (alpha - 1, 1), (1, alpha - 1), (0, alpha)]
    return list(dict.fromkeys(gens))


@pytest.fixture
def four_gen_pair():
    return AffineSemigroup(EX_A), AffineSemigroup(EX_B)


@pytest.fixture
def gorenstein_b():
    return AffineSemigroup(GOR_B)


@pytest.fixture
def nonbuchsbaum_b():
    return AffineSemigroup(NONBUCHS_B)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}")
