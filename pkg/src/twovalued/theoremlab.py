"""Instance checks for the lemmas and the key identity behind commutativity,
plus a census of how each ordered pair falls into the proof's case split.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import Verdict
from .core import IDENTITY, Multiset, Table, mset_product
from .powers import order, power_sequence


def lemma1_holds(t: Table) -> Verdict:
    """``z in x*y`` iff ``y in z*x``, for all triples. Witness: first failing ``(x, y, z)``."""
    c = t.cells
    n = t.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if (z in c[x][y]) != (y in c[z][x]):
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def lemma2_holds(t: Table) -> Verdict:
    """Every element of order 2 multiplies every ``y`` symmetrically to a doubled pair."""
    c = t.cells
    for x in range(t.n):
        if order(t, x) != 2:
            continue
        for y in range(t.n):
            p = c[x][y]
            if not p.doubled or c[y][x] != p:
                return Verdict(False, (x, y))
    return Verdict(True)


def main_identity_sides(t: Table, x: int, y: int) -> tuple:
    """Both sides of ``(x*y)*(y*x) = [e, e, x^2, x^2] + x*y^2*x`` as multisets."""
    x2 = power_sequence(t, x, 2).terms[2]
    y2 = power_sequence(t, y, 2).terms[2]
    lhs = mset_product(t, t.cells[x][y], t.cells[y][x])
    rhs = Multiset([IDENTITY, IDENTITY, x2, x2]) + mset_product(t, mset_product(t, [x], [y2]), [x])
    return lhs, rhs


def main_identity_check(t: Table) -> Verdict:
    for x in range(t.n):
        for y in range(t.n):
            lhs, rhs = main_identity_sides(t, x, y)
            if lhs != rhs:
                return Verdict(False, (x, y, lhs, rhs))
    return Verdict(True)


CASES = ("case1", "case2", "case3", "other")


@dataclass
class CaseCensus:
    case1: int = 0
    case2: int = 0
    case3: int = 0
    other: int = 0
    examples: dict = field(default_factory=dict)

    @property
    def counts(self) -> tuple:
        return (self.case1, self.case2, self.case3, self.other)

    @property
    def all_case1(self) -> bool:
        return self.case2 == self.case3 == self.other == 0

    def as_dict(self) -> dict:
        out = dict(zip(CASES, self.counts))
        out["examples"] = {k: list(v) for k, v in self.examples.items()}
        return out


def classify_pair(t: Table, x: int, y: int, orders: list) -> str:
    """Which case of the proof the ordered pair ``(x, y)`` falls into.

    Priority is case1 > case2 > case3 so degenerate overlaps are deterministic.
    """
    p = t.cells[x][y]
    q = t.cells[y][x]
    if p == q:
        return "case1"
    # three of z1, z2, w1, w2 equal: one side doubled and its element shared with the other
    if (p.doubled and p.lo in q) or (q.doubled and q.lo in p):
        return "case2"
    if any(z in q and orders[z] == 2 for z in set(p)):
        return "case3"
    return "other"


def case_census(t: Table) -> CaseCensus:
    orders = [order(t, z) for z in range(t.n)]
    census = CaseCensus()
    for x in range(t.n):
        for y in range(t.n):
            case = classify_pair(t, x, y, orders)
            setattr(census, case, getattr(census, case) + 1)
            census.examples.setdefault(case, (x, y))
    return census
