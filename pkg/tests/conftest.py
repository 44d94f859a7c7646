import itertools

import pytest

from twovalued.core import Pair, Table, pair_make


def zmod_oracle(m: int) -> Table:
    """Z/m reduced by negation, straight from integer arithmetic.

    Class ``{r, m - r}`` gets index ``r`` for ``0 <= r <= m // 2``.
    """

    def cls(a: int) -> int:
        a %= m
        return min(a, m - a) if a else 0

    k = m // 2 + 1
    return Table.from_function(k, lambda r, s: (cls(r + s), cls(r - s)))


def elementary_abelian_oracle(rank: int) -> Table:
    """(Z/2)^rank: every class is a singleton and ``[a]*[b] = [a+b, a+b]``."""
    k = 2 ** rank
    return Table.from_function(k, lambda a, b: (a ^ b, a ^ b))


def permutation_cayley(perms: list) -> list:
    """Cayley table (as nested lists of indices) of a list of permutations, identity first."""
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[i]] for i in range(len(p)))] for q in perms] for p in perms]


@pytest.fixture
def trivial():
    return Table.trivial()


@pytest.fixture
def z2():
    return zmod_oracle(2)


@pytest.fixture
def z3():
    return zmod_oracle(3)


@pytest.fixture
def z5():
    return zmod_oracle(5)


def random_table(rng, n: int, identity: bool = True) -> Table:
    pairs = [Pair(a, b) for a in range(n) for b in range(a, n)]
    cells = [[rng.choice(pairs) for _ in range(n)] for _ in range(n)]
    if identity:
        for x in range(n):
            cells[0][x] = cells[x][0] = Pair(x, x)
    return Table(n, tuple(map(tuple, cells)))


def all_relabelings(n: int):
    for p in itertools.permutations(range(1, n)):
        yield (0,) + p


__all__ = ["zmod_oracle", "elementary_abelian_oracle", "permutation_cayley", "random_table", "pair_make"]


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
