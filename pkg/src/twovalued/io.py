"""Text formats for two-valued tables (``2vg 1``) and group Cayley tables (``grp 1``).

Both formats share the same layout::

    2vg 1                 # or: grp 1
    order <n>
    names <n tokens>      # optional
    <i> <j> : <k> <l>     # one line per cell, any order (grp: <i> <j> : <k>)

``#`` starts a comment, blank lines are ignored. Output is ASCII with LF line
endings, cells in row-major order and no trailing newline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .core import Pair, Table

TABLE_HEADER = "2vg 1"
GROUP_HEADER = "grp 1"

_TOKEN = re.compile(r"\S+")
_NUMBER = re.compile(r"[0-9]+")


class ParseError(ValueError):
    """Malformed input. ``line`` and ``column`` are 1-based (0 when not applicable)."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class NotAGroupError(ValueError):
    """A Cayley table that does not define a group; ``witness`` locates the failure."""

    def __init__(self, message: str, kind: str, witness: tuple):
        self.kind = kind
        self.witness = witness
        super().__init__(f"{message} (witness {witness})")


@dataclass(frozen=True)
class GroupTable:
    """Single-valued Cayley table of a finite group with identity at index 0."""

    n: int
    cells: tuple
    names: Optional[tuple] = None

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise ValueError("order must be at least 1")
        cells = tuple(tuple(int(v) for v in row) for row in self.cells)
        if len(cells) != n or any(len(row) != n for row in cells):
            raise ValueError(f"cells must be an {n}x{n} array")
        if any(not 0 <= v < n for row in cells for v in row):
            raise ValueError(f"entries must lie in range({n})")
        object.__setattr__(self, "cells", cells)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be n distinct strings")
            object.__setattr__(self, "names", names)
        _check_group(cells)

    @classmethod
    def from_function(
        cls, n: int, f: Callable[[int, int], int], names: Optional[Sequence[str]] = None
    ) -> "GroupTable":
        cells = tuple(tuple(f(x, y) for y in range(n)) for x in range(n))
        return cls(n, cells, None if names is None else tuple(names))

    def inverse(self, a: int) -> int:
        return self.cells[a].index(0)

    @property
    def is_abelian(self) -> bool:
        c = self.cells
        return all(c[a][b] == c[b][a] for a in range(self.n) for b in range(a))


def _check_group(cells: tuple) -> None:
    n = len(cells)
    for x in range(n):
        if cells[0][x] != x or cells[x][0] != x:
            raise NotAGroupError("index 0 is not a two-sided identity", "identity", (x,))
    for x in range(n):
        cx = cells[x]
        for y in range(n):
            cxy = cells[cx[y]]
            cy = cells[y]
            for z in range(n):
                if cxy[z] != cx[cy[z]]:
                    raise NotAGroupError("multiplication is not associative", "associativity", (x, y, z))
    for x in range(n):
        if 0 not in cells[x] or 0 not in (cells[y][x] for y in range(n)):
            raise NotAGroupError("element has no inverse", "inverse", (x,))


class _Lines:
    """Meaningful (non-blank, comment-stripped) lines with their 1-based numbers."""

    def __init__(self, text):
        if isinstance(text, (bytes, bytearray)):
            try:
                text = bytes(text).decode("utf-8")
            except UnicodeDecodeError as exc:
                raise ParseError(f"input is not valid UTF-8 ({exc.reason})") from None
        self.items = []
        for lineno, raw in enumerate(text.split("\n"), start=1):
            body = raw.split("#", 1)[0]
            tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
            if tokens:
                self.items.append((lineno, tokens))
        self.pos = 0

    def next(self, what: str):
        if self.pos >= len(self.items):
            raise ParseError(f"unexpected end of input, expected {what}")
        item = self.items[self.pos]
        self.pos += 1
        return item

    def peek_keyword(self) -> Optional[str]:
        if self.pos < len(self.items):
            return self.items[self.pos][1][0][0]
        return None


def _number(tok: tuple, lineno: int, limit: Optional[int] = None) -> int:
    text, col = tok
    if not _NUMBER.fullmatch(text):
        raise ParseError(f"expected a non-negative integer, got {text!r}", lineno, col)
    if len(text) > 9:
        raise ParseError(f"number {text[:12]}... is too large", lineno, col)
    value = int(text)
    if limit is not None and value >= limit:
        raise ParseError(f"index {value} out of range for order {limit}", lineno, col)
    return value


def _parse_header(lines: _Lines, header: str):
    lineno, tokens = lines.next(f"header {header!r}")
    if " ".join(t for t, _ in tokens) != header:
        raise ParseError(f"expected header {header!r}", lineno, tokens[0][1])
    lineno, tokens = lines.next("'order <n>'")
    if tokens[0][0] != "order" or len(tokens) != 2:
        raise ParseError("expected 'order <n>'", lineno, tokens[0][1])
    n = _number(tokens[1], lineno)
    if n < 1:
        raise ParseError("order must be at least 1", lineno, tokens[1][1])
    names = None
    if lines.peek_keyword() == "names":
        lineno, tokens = lines.next("names")
        names = tuple(t for t, _ in tokens[1:])
        if len(names) != n:
            raise ParseError(f"expected {n} names, got {len(names)}", lineno, tokens[0][1])
        if len(set(names)) != n:
            raise ParseError("names must be distinct", lineno, tokens[0][1])
    return n, names


def _parse_cells(lines: _Lines, n: int, n_values: int) -> list:
    data = lines.items[lines.pos:]
    width = 3 + n_values
    for lineno, tokens in data:
        if len(tokens) != width or tokens[2][0] != ":":
            col = tokens[min(len(tokens) - 1, 2)][1]
            shape = "<i> <j> : " + " ".join(["<k>", "<l>"][:n_values])
            raise ParseError(f"expected data line '{shape}'", lineno, col)
    if len(data) != n * n:
        # checked before allocating the grid so that a huge order cannot exhaust memory
        seen = set()
        for lineno, tokens in data:
            cell = (_number(tokens[0], lineno, n), _number(tokens[1], lineno, n))
            if cell in seen:
                raise ParseError(f"duplicate cell {cell}", lineno, tokens[0][1])
            seen.add(cell)
        raise ParseError(f"expected {n * n} data lines for order {n}, got {len(data)}")
    grid = [[None] * n for _ in range(n)]
    for lineno, tokens in data:
        i = _number(tokens[0], lineno, n)
        j = _number(tokens[1], lineno, n)
        values = tuple(_number(tok, lineno, n) for tok in tokens[3:])
        if grid[i][j] is not None:
            raise ParseError(f"duplicate cell ({i}, {j})", lineno, tokens[0][1])
        if n_values == 2 and values[0] > values[1]:
            raise ParseError(f"pair must be written with k <= l, got {values[0]} {values[1]}", lineno, tokens[3][1])
        grid[i][j] = (lineno, tokens[0][1], values)
    return grid


def parse_table(text) -> Table:
    """Parse a ``2vg 1`` document.

    Only structure is validated: grammar, ranges, completeness, and the
    identity row/column ``x*e = e*x = [x, x]``. Axioms are left to
    :func:`twovalued.axioms.verify_all`.
    """
    lines = _Lines(text)
    n, names = _parse_header(lines, TABLE_HEADER)
    grid = _parse_cells(lines, n, 2)
    for x in range(n):
        for lineno, col, (k, l) in (grid[x][0], grid[0][x]):
            if (k, l) != (x, x):
                raise ParseError(f"identity cell must be [{x}, {x}], got [{k}, {l}]", lineno, col)
    cells = tuple(tuple(Pair(*grid[i][j][2]) for j in range(n)) for i in range(n))
    return Table(n, cells, names)


def serialize_table(t: Table) -> str:
    out = [TABLE_HEADER, f"order {t.n}"]
    if t.names is not None:
        out.append("names " + " ".join(t.names))
    for i, row in enumerate(t.cells):
        for j, p in enumerate(row):
            out.append(f"{i} {j} : {p.lo} {p.hi}")
    return "\n".join(out)


def parse_group(text) -> GroupTable:
    """Parse a ``grp 1`` document and check the group axioms.

    Raises :class:`ParseError` on malformed text and :class:`NotAGroupError`
    (with a witness) when the table is not a group with identity 0.
    """
    lines = _Lines(text)
    n, names = _parse_header(lines, GROUP_HEADER)
    grid = _parse_cells(lines, n, 1)
    cells = tuple(tuple(grid[i][j][2][0] for j in range(n)) for i in range(n))
    return GroupTable(n, cells, names)


def serialize_group(g: GroupTable) -> str:
    out = [GROUP_HEADER, f"order {g.n}"]
    if g.names is not None:
        out.append("names " + " ".join(g.names))
    for i, row in enumerate(g.cells):
        for j, v in enumerate(row):
            out.append(f"{i} {j} : {v}")
    return "\n".join(out)
