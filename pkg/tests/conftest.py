"""Shared fixtures, a deterministic random-birack pool, and the acceptance summary."""

import random
import re

import pytest

from biracks import (
    Cochain2,
    add_positive_kink,
    check_axioms,
    from_tables,
    load_diagram,
    tsr_birack,
)
from biracks.errors import BirackError

# 4-element birack with kink map (1 4)(2 3); tables are alpha rows then beta rows
A14 = (2, 4, 1, 3)
A23 = (3, 1, 4, 2)
AB4_ALPHA = (A14, A23, A23, A14)
AB4_BETA = (A23, A14, A14, A23)

# 5-element biquandle (kink map is the identity)
A15 = (4, 3, 2, 5, 1)
A25 = (1, 3, 2, 4, 5)
B15 = (4, 2, 3, 5, 1)
AB5_ALPHA = (A15, A25, A25, A15, A15)
AB5_BETA = (B15, A25, A25, B15, B15)

PHI4_PAIRS = [(2, 1), (2, 4), (3, 1), (3, 4)]
PHI5_PAIRS = [(1, 4), (1, 5), (5, 4)]


def dihedral_tables(n):
    """alpha_x = id and beta_y(x) = 2y - x mod n, the dihedral quandle."""
    ident = tuple(range(1, n + 1))
    alpha = tuple(ident for _ in range(n))
    beta = tuple(tuple((2 * y - x) % n + 1 for x in range(n)) for y in range(n))
    return alpha, beta


@pytest.fixture(scope="session")
def ab4():
    return from_tables(AB4_ALPHA, AB4_BETA)


@pytest.fixture(scope="session")
def ab5():
    return from_tables(AB5_ALPHA, AB5_BETA)


@pytest.fixture(scope="session")
def phi4():
    return Cochain2.from_pairs(4, PHI4_PAIRS)


@pytest.fixture(scope="session")
def phi5():
    return Cochain2.from_pairs(5, PHI5_PAIRS)


@pytest.fixture(scope="session")
def tsr3():
    return tsr_birack(3, 1, 2, 2)


@pytest.fixture(scope="session")
def dih3():
    return from_tables(*dihedral_tables(3))


@pytest.fixture(scope="session")
def one_element():
    return from_tables(((1,),), ((1,),))


@pytest.fixture(scope="session")
def kinked_unknot():
    return add_positive_kink(load_diagram("unknot"), 0)


def _perm_power(p, k):
    n = len(p)
    out = tuple(range(1, n + 1))
    for _ in range(k):
        out = tuple(p[v - 1] for v in out)
    return out


def _constant_action_tables(rng, n):
    # powers of one permutation commute, which is all a constant action needs
    base = list(range(1, n + 1))
    rng.shuffle(base)
    sigma = _perm_power(tuple(base), rng.randrange(1, n + 2))
    tau = _perm_power(tuple(base), rng.randrange(1, n + 2))
    return tuple(sigma for _ in range(n)), tuple(tau for _ in range(n))


def _conjugate_tables(rng, alpha, beta):
    n = len(alpha)
    p = list(range(1, n + 1))
    rng.shuffle(p)
    inv = [0] * n
    for i, v in enumerate(p):
        inv[v - 1] = i + 1

    def conj(table):
        return tuple(
            tuple(p[table[inv[x - 1] - 1][inv[y - 1] - 1] - 1] for y in range(1, n + 1))
            for x in range(1, n + 1)
        )

    return conj(alpha), conj(beta)


def random_validated_biracks(count=20, max_size=4, seed=2026):
    """A reproducible pool of randomly generated, axiom-checked biracks."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_size)
        kind = rng.randrange(3)
        if kind == 0:
            alpha, beta = _constant_action_tables(rng, n)
        elif kind == 1:
            try:
                out.append(tsr_birack(n, rng.randrange(n), rng.randrange(n), rng.randrange(n)))
            except BirackError:
                pass
            continue
        else:
            if max_size < 4:
                continue
            alpha, beta = _conjugate_tables(rng, AB4_ALPHA, AB4_BETA)
        if check_axioms(alpha, beta).ok:
            out.append(from_tables(alpha, beta))
    return out


@pytest.fixture(scope="session")
def random_biracks():
    return random_validated_biracks(count=20, max_size=4, seed=2026)


ACCEPTANCE_CRITERIA = {
    1: "4-element birack passes the axioms with kink map (1 4)(2 3) and N = 2",
    2: "Hopf link over the 4-element birack: per-framing counts 0,0,0,16 and counting invariant 16",
    3: "phi4 is reduced; weight polynomials are 16 for l0a1, 8+8u for l2a1, 8+8u^2 for l4a1",
    4: "5-element birack reproduces the classical link table (l2a1 through l6a5)",
    5: "virtual knots v2_1, v3_1, v3_2 and classical k3_1, k4_1 match the table",
    6: "positive Hopf link gives 7+6u and reversing one component gives 6u^-1+7",
    7: "boundary of boundary vanishes in degrees 2..4 on fixed and 20 random biracks",
    8: "degenerate 2- and 3-generator boundaries land in the lower degenerate span",
    9: "coboundary weights vanish and cohomologous cocycles agree on every bundled diagram",
    10: "labeling counts are periodic with period N in each framing coordinate",
    11: "backtracking enumeration matches brute-force filtering on small diagrams",
    12: "Smith decompositions are valid for every boundary matrix from criterion 7",
}

_CRITERION_RE = re.compile(r"test_criterion_0*(\d+)")
_acceptance_outcomes = {}


def pytest_runtest_logreport(report):
    m = _CRITERION_RE.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call":
        _acceptance_outcomes[k] = report.passed
    elif report.failed or report.skipped:
        # setup/teardown problems count as a failed criterion
        _acceptance_outcomes[k] = False


def pytest_terminal_summary(terminalreporter):
    seen = [k for k in sorted(ACCEPTANCE_CRITERIA) if k in _acceptance_outcomes]
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for k in seen:
        verdict = "PASS" if _acceptance_outcomes[k] else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {k}: {verdict} — {ACCEPTANCE_CRITERIA[k]}"
        )
