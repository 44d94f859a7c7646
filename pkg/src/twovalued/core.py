"""Value types: unordered pairs, multisets and two-valued multiplication tables.

Elements are plain ints in ``range(n)``; index 0 is always the identity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence

IDENTITY = 0


class Pair(NamedTuple):
    """An unordered pair ``[lo, hi]`` with ``lo <= hi``. Build it with :func:`pair_make`."""

    lo: int
    hi: int

    def __contains__(self, x: object) -> bool:
        return x == self.lo or x == self.hi

    def __repr__(self) -> str:
        return f"Pair({self.lo}, {self.hi})"

    @property
    def doubled(self) -> bool:
        return self.lo == self.hi


def pair_make(a: int, b: int) -> Pair:
    return Pair(a, b) if a <= b else Pair(b, a)


class Multiset:
    """Immutable finite multiset of elements.

    Equality ignores insertion order; iteration yields elements in sorted
    order, repeated according to multiplicity.
    """

    __slots__ = ("_counts", "_size")

    def __init__(self, items: Iterable[int] = ()):
        counts = Counter(items)
        self._counts = {k: counts[k] for k in sorted(counts) if counts[k] > 0}
        self._size = sum(self._counts.values())

    @classmethod
    def from_counts(cls, counts: dict) -> "Multiset":
        for v in counts.values():
            if v != int(v) or v < 0:
                raise ValueError(f"illegal multiplicity {v!r}")
        return cls(Counter({k: int(v) for k, v in counts.items()}).elements())

    @property
    def counts(self) -> dict:
        return dict(self._counts)

    @property
    def size(self) -> int:
        return self._size

    def count(self, x: int) -> int:
        return self._counts.get(x, 0)

    def remove_one(self, x: int) -> "Multiset":
        """Return a copy with one occurrence of ``x`` removed (KeyError if absent)."""
        if x not in self._counts:
            raise KeyError(x)
        counts = dict(self._counts)
        counts[x] -= 1
        return Multiset.from_counts(counts)

    def __add__(self, other: "Multiset") -> "Multiset":
        if not isinstance(other, Multiset):
            return NotImplemented
        return Multiset.from_counts(Counter(self._counts) + Counter(other._counts))

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[int]:
        for k, v in self._counts.items():
            for _ in range(v):
                yield k

    def __contains__(self, x: object) -> bool:
        return x in self._counts

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Multiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def as_tuple(self) -> tuple:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Multiset({list(self)})"


@dataclass(frozen=True)
class Table:
    """A candidate two-valued multiplication on ``{0, ..., n-1}``.

    ``cells[x][y]`` is the :class:`Pair` ``x*y``. No axiom is assumed; use
    :mod:`twovalued.axioms` to decide validity.
    """

    n: int
    cells: tuple
    names: Optional[tuple] = None

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise ValueError("order must be at least 1")
        cells = tuple(tuple(pair_make(*p) for p in row) for row in self.cells)
        if len(cells) != n or any(len(row) != n for row in cells):
            raise ValueError(f"cells must be an {n}x{n} array")
        for x, row in enumerate(cells):
            for y, p in enumerate(row):
                if not (0 <= p.lo and p.hi < n):
                    raise ValueError(f"cell ({x}, {y}) = {p} has an element outside range({n})")
        object.__setattr__(self, "cells", cells)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be n distinct strings")
            if any(not s or any(c.isspace() for c in s) for s in names):
                raise ValueError("names must be non-empty tokens without whitespace")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_function(
        cls, n: int, f: Callable[[int, int], Sequence[int]], names: Optional[Sequence[str]] = None
    ) -> "Table":
        cells = tuple(tuple(pair_make(*f(x, y)) for y in range(n)) for x in range(n))
        return cls(n, cells, None if names is None else tuple(names))

    @classmethod
    def trivial(cls) -> "Table":
        return cls(1, ((Pair(0, 0),),))

    def __getitem__(self, xy: tuple) -> Pair:
        x, y = xy
        return self.cells[x][y]

    def key(self) -> tuple:
        """Row-major flat tuple ``(lo, hi, lo, hi, ...)``; orders tables like their serialization."""
        return tuple(v for row in self.cells for p in row for v in p)

    def relabel(self, perm: Sequence[int]) -> "Table":
        """Image of the table under the bijection ``x -> perm[x]`` (names are dropped)."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of range(n)")
        cells = [[None] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                a, b = self.cells[x][y]
                cells[perm[x]][perm[y]] = pair_make(perm[a], perm[b])
        return Table(n, tuple(map(tuple, cells)))

    def label(self, x: int) -> str:
        if self.names is not None:
            return self.names[x]
        return "e" if x == IDENTITY else str(x)


def mul(t: Table, x: int, y: int) -> Pair:
    if not (0 <= x < t.n and 0 <= y < t.n):
        raise IndexError(f"element out of range for order {t.n}: ({x}, {y})")
    return t.cells[x][y]


def mset_product(t: Table, a: Iterable[int], b: Iterable[int]) -> Multiset:
    """Multiset product: the union of ``x*y`` over all pairs ``x`` in ``a``, ``y`` in ``b``."""
    bs = list(b)
    out: list = []
    for x in a:
        for y in bs:
            out.extend(mul(t, x, y))
    return Multiset(out)
