"""Decide the defining properties of an involutive two-valued group.

Each check scans in lexicographic order and reports the first violating
tuple, so witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .core import IDENTITY, Multiset, Pair, Table


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check. Truthiness follows ``holds``."""

    holds: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class AssociativityWitness:
    x: int
    y: int
    z: int
    lhs: Multiset  # (x*y)*z
    rhs: Multiset  # x*(y*z)


@dataclass(frozen=True)
class AxiomReport:
    associative: Verdict
    strong_identity: Verdict
    involutive: Verdict
    commutative: Verdict

    @property
    def is_involutive_2vg(self) -> bool:
        return bool(self.associative and self.strong_identity and self.involutive)

    def as_dict(self) -> dict:
        def wit(v: Verdict):
            w = v.witness
            if isinstance(w, AssociativityWitness):
                return {"x": w.x, "y": w.y, "z": w.z, "lhs": list(w.lhs), "rhs": list(w.rhs)}
            return None if w is None else list(w)

        out = {}
        for name in ("associative", "strong_identity", "involutive", "commutative"):
            v = getattr(self, name)
            out[name] = v.holds
            out[name + "_witness"] = wit(v)
        out["is_involutive_2vg"] = self.is_involutive_2vg
        return out


def triple_sides(cells, x: int, y: int, z: int) -> tuple:
    """Sorted 4-tuples for ``(x*y)*z`` and ``x*(y*z)`` over raw ``cells``."""
    a, b = cells[x][y]
    c, d = cells[y][z]
    lhs = sorted(cells[a][z] + cells[b][z])
    rhs = sorted(cells[x][c] + cells[x][d])
    return lhs, rhs


def check_associativity(t: Table) -> Verdict:
    cells = t.cells
    n = t.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs, rhs = triple_sides(cells, x, y, z)
                if lhs != rhs:
                    return Verdict(False, AssociativityWitness(x, y, z, Multiset(lhs), Multiset(rhs)))
    return Verdict(True)


def check_strong_identity(t: Table) -> Verdict:
    for x in range(t.n):
        p = Pair(x, x)
        if t.cells[x][IDENTITY] != p or t.cells[IDENTITY][x] != p:
            return Verdict(False, (x,))
    return Verdict(True)


def check_involutivity(t: Table) -> Verdict:
    for x in range(t.n):
        for y in range(t.n):
            if (IDENTITY in t.cells[x][y]) != (x == y):
                return Verdict(False, (x, y))
    return Verdict(True)


def check_commutativity(t: Table) -> Verdict:
    for x in range(t.n):
        for y in range(x + 1, t.n):
            if t.cells[x][y] != t.cells[y][x]:
                return Verdict(False, (x, y))
    return Verdict(True)


def verify_all(t: Table) -> AxiomReport:
    return AxiomReport(
        associative=check_associativity(t),
        strong_identity=check_strong_identity(t),
        involutive=check_involutivity(t),
        commutative=check_commutativity(t),
    )


def is_involutive_2vg(t: Table) -> bool:
    return bool(check_strong_identity(t) and check_involutivity(t) and check_associativity(t))
