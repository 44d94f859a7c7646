"""Exhaustive search for involutive two-valued groups of a given order.

Backtracking over the non-identity cells. Strong identity and involutivity
are built into the cell domains, associativity is checked incrementally on
every triple whose six products are known, and isomorphic copies are cut by
orderly generation (a partial table survives only if no identity-fixing
relabeling makes it lexicographically smaller). Commutativity is never
imposed: ``x*y`` and ``y*x`` are independent unknowns.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .axioms import verify_all
from .core import Pair, Table
from .io import serialize_table
from .powers import order, verify_power_relation
from .theoremlab import case_census, lemma1_holds, lemma2_holds, main_identity_check

MAX_ORDER = 6


def _relabelings(n: int) -> list:
    return [(0,) + p for p in itertools.permutations(range(1, n))]


def canonical_form(t: Table) -> Table:
    """The relabeling (fixing 0) with the smallest row-major key; names are dropped."""
    best = None
    for perm in _relabelings(t.n):
        r = t.relabel(perm)
        if best is None or r.key() < best.key():
            best = r
    return best


def are_isomorphic(a: Table, b: Table) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def table_digest(t: Table) -> str:
    return hashlib.sha256(serialize_table(t).encode("ascii")).hexdigest()[:16]


@dataclass(frozen=True)
class CensusEntry:
    table: Table
    associative: bool
    strong_identity: bool
    involutive: bool
    commutative: bool
    lemma1: bool
    lemma2: bool
    main_identity: bool
    case_counts: tuple
    power_relation: bool
    order_spectrum: tuple  # sorted element orders, None for unbounded

    @classmethod
    def from_table(cls, t: Table) -> "CensusEntry":
        report = verify_all(t)
        orders = [order(t, x) for x in range(t.n)]
        horizon = 2 * t.n * t.n
        return cls(
            table=t,
            associative=report.associative.holds,
            strong_identity=report.strong_identity.holds,
            involutive=report.involutive.holds,
            commutative=report.commutative.holds,
            lemma1=lemma1_holds(t).holds,
            lemma2=lemma2_holds(t).holds,
            main_identity=main_identity_check(t).holds,
            case_counts=case_census(t).counts,
            power_relation=all(verify_power_relation(t, x, horizon) for x in range(t.n)),
            order_spectrum=tuple(sorted(orders, key=lambda k: (k is None, k))),
        )

    @property
    def file_name(self) -> str:
        return f"2vg-n{self.table.n}-{table_digest(self.table)}.2vg"

    def as_dict(self) -> dict:
        return {
            "order": self.table.n,
            "file": self.file_name,
            "associative": self.associative,
            "strong_identity": self.strong_identity,
            "involutive": self.involutive,
            "commutative": self.commutative,
            "lemma1": self.lemma1,
            "lemma2": self.lemma2,
            "main_identity": self.main_identity,
            "case_census": list(self.case_counts),
            "power_relation": self.power_relation,
            "order_spectrum": list(self.order_spectrum),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


# -- search -----------------------------------------------------------------


def cell_order(n: int) -> list:
    """Decision cells: ``(x, y)`` with ``x <= y`` lexicographically, each followed by its mirror."""
    out = []
    for x in range(1, n):
        for y in range(x, n):
            out.append((x, y))
            if x != y:
                out.append((y, x))
    return out


def cell_domain(n: int, x: int, y: int) -> list:
    if x == y:
        return [Pair(0, k) for k in range(n)]
    return [Pair(a, b) for a in range(1, n) for b in range(a, n)]


class _Search:
    def __init__(self, n: int, orderly: bool):
        self.n = n
        self.orderly = orderly
        self.cells = [[Pair(y, y) if x == 0 else (Pair(x, x) if y == 0 else None) for y in range(n)] for x in range(n)]
        self.order = cell_order(n)
        self.domains = [cell_domain(n, x, y) for x, y in self.order]
        self.perms = [(p, _inverse(p)) for p in _relabelings(n)[1:]]
        self.results: list = []

    def run(self, depth: int = 0) -> None:
        if depth == len(self.order):
            self.results.append(Table(self.n, tuple(tuple(row) for row in self.cells)))
            return
        x, y = self.order[depth]
        cells = self.cells
        for value in self.domains[depth]:
            cells[x][y] = value
            if self._consistent(x, y) and (not self.orderly or self._minimal()):
                self.run(depth + 1)
        cells[x][y] = None

    def prefixes(self, depth: int) -> list:
        """All consistent assignments of the first ``depth`` decision cells."""
        out = []

        def walk(d: int) -> None:
            if d == depth:
                out.append(tuple(self.cells[x][y] for x, y in self.order[:depth]))
                return
            x, y = self.order[d]
            for value in self.domains[d]:
                self.cells[x][y] = value
                if self._consistent(x, y) and (not self.orderly or self._minimal()):
                    walk(d + 1)
            self.cells[x][y] = None

        walk(0)
        return out

    def run_from(self, prefix: tuple) -> None:
        for (x, y), value in zip(self.order, prefix):
            self.cells[x][y] = value
        self.run(len(prefix))
        for x, y in self.order[: len(prefix)]:
            self.cells[x][y] = None

    def _consistent(self, p: int, q: int) -> bool:
        """Check every fully determined triple that uses the cell ``(p, q)``."""
        c = self.cells
        rng = range(1, self.n)
        triples = [(p, q, z) for z in rng]
        triples += [(x, p, q) for x in rng]
        for x in rng:
            for y in rng:
                v = c[x][y]
                if v is not None and p in v:
                    triples.append((x, y, q))
        for y in rng:
            for z in rng:
                v = c[y][z]
                if v is not None and q in v:
                    triples.append((p, y, z))
        for x, y, z in triples:
            xy = c[x][y]
            yz = c[y][z]
            if xy is None or yz is None:
                continue
            az, bz = c[xy[0]][z], c[xy[1]][z]
            xc, xd = c[x][yz[0]], c[x][yz[1]]
            if az is None or bz is None or xc is None or xd is None:
                continue
            if sorted(az + bz) != sorted(xc + xd):
                return False
        return True

    def _minimal(self) -> bool:
        """False if some relabeling provably yields a smaller row-major key."""
        c = self.cells
        n = self.n
        for perm, inv in self.perms:
            for i in range(1, n):
                for j in range(1, n):
                    mine = c[i][j]
                    theirs = c[inv[i]][inv[j]]
                    if mine is None or theirs is None:
                        break
                    a, b = perm[theirs[0]], perm[theirs[1]]
                    if a > b:
                        a, b = b, a
                    if (a, b) != mine:
                        if (a, b) < mine:
                            return False
                        break
                else:
                    continue
                break
        return True


def _inverse(perm: tuple) -> tuple:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def _search_subtree(args: tuple) -> list:
    n, orderly, prefix = args
    s = _Search(n, orderly)
    s.run_from(prefix)
    return s.results


SPLIT_DEPTH = 2


def search_tables(n: int, raw: bool = False, jobs: int = 1) -> list:
    """Labeled tables satisfying strong identity, involutivity and associativity.

    With ``raw`` every labeling is returned; otherwise one representative per
    isomorphism class, in canonical form. The result is sorted by key and does
    not depend on ``jobs``.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    orderly = not raw
    root = _Search(n, orderly)
    depth = min(SPLIT_DEPTH, len(root.order))
    tasks = [(n, orderly, prefix) for prefix in root.prefixes(depth)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_search_subtree, tasks))
    else:
        chunks = [_search_subtree(task) for task in tasks]
    tables = [t for chunk in chunks for t in chunk]
    if not raw:
        tables = list({canonical_form(t) for t in tables})
    return sorted(tables, key=Table.key)


def enumerate_structures(
    n: int, raw: bool = False, jobs: int = 1, out_dir: Optional[os.PathLike] = None
) -> list:
    """All involutive two-valued groups of order ``n`` as :class:`CensusEntry` records.

    Every flag is recomputed post hoc by the checkers, independently of the
    pruning used in the search. With ``out_dir`` set, each table is written
    as a ``2vg 1`` file and the records go to ``census-n<n>.jsonl``.
    """
    entries = [CensusEntry.from_table(t) for t in search_tables(n, raw=raw, jobs=jobs)]
    if out_dir is not None:
        write_census(entries, Path(out_dir), f"census-n{n}.jsonl")
    return entries


def write_census(entries: Iterable[CensusEntry], out_dir: Path, census_name: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    lines = []
    for entry in entries:
        (out_dir / entry.file_name).write_bytes(serialize_table(entry.table).encode("ascii"))
        lines.append(entry.to_json() + "\n")
    path = out_dir / census_name
    path.write_bytes("".join(lines).encode("ascii"))
    return path


def brute_force_structures(n: int) -> list:
    """Unpruned reference search: every filling of the non-identity cells by any pair.

    Candidates are filtered with :func:`verify_all` and deduplicated by
    canonical form. Only feasible for ``n <= 3``.
    """
    pairs = [Pair(a, b) for a in range(n) for b in range(a, n)]
    free = [(x, y) for x in range(1, n) for y in range(1, n)]
    found = set()
    for values in itertools.product(pairs, repeat=len(free)):
        cells = [[Pair(max(x, y), max(x, y)) if x == 0 or y == 0 else None for y in range(n)] for x in range(n)]
        for (x, y), v in zip(free, values):
            cells[x][y] = v
        t = Table(n, tuple(map(tuple, cells)))
        if verify_all(t).is_involutive_2vg:
            found.add(canonical_form(t))
    return sorted(found, key=Table.key)
