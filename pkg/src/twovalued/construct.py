"""Two-valued tables from ordinary groups via the quotient by inversion.

On the classes ``[a] = {a, a^-1}`` define ``[a]*[b] = [[ab], [ab^-1]]``. For an
abelian group this is always an involutive two-valued group. For a nonabelian
group the product is computed from the minimal representative of each class
and carries no guarantee at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core import Table
from .io import GroupTable


@dataclass(frozen=True)
class AbelianSpec:
    """The group ``Z/f1 + Z/f2 + ...``."""

    factors: tuple

    def __post_init__(self) -> None:
        factors = tuple(int(f) for f in self.factors)
        if not factors or any(f < 1 for f in factors):
            raise ValueError(f"factors must be a nonempty list of integers >= 1, got {self.factors!r}")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f
        return out


def abelian_specs(max_order: int) -> Iterator[AbelianSpec]:
    """Every factor multiset (factors >= 2, nondecreasing) with product <= ``max_order``, plus ``[1]``."""
    yield AbelianSpec((1,))

    def extend(prefix: tuple, product: int) -> Iterator[tuple]:
        start = prefix[-1] if prefix else 2
        for f in range(start, max_order // product + 1):
            yield prefix + (f,)
            yield from extend(prefix + (f,), product * f)

    yield from (AbelianSpec(fs) for fs in extend((), 1))


def abelian_classes(spec: AbelianSpec) -> list:
    """Minimal representatives of the classes ``{a, -a}``, in carrier order."""
    fs = spec.factors
    reps = set()
    for a in itertools.product(*(range(f) for f in fs)):
        neg = tuple((-v) % f for v, f in zip(a, fs))
        reps.add(min(a, neg))
    return sorted(reps)


def abelian_coset(spec: AbelianSpec) -> Table:
    fs = spec.factors
    reps = abelian_classes(spec)
    index = {}
    for i, a in enumerate(reps):
        index[a] = i
        index[tuple((-v) % f for v, f in zip(a, fs))] = i

    def product(i: int, j: int):
        a, b = reps[i], reps[j]
        s = tuple((u + v) % f for u, v, f in zip(a, b, fs))
        d = tuple((u - v) % f for u, v, f in zip(a, b, fs))
        return index[s], index[d]

    return Table.from_function(len(reps), product)


def cyclic_group(m: int) -> GroupTable:
    return GroupTable.from_function(m, lambda a, b: (a + b) % m)


def dihedral_group(m: int) -> GroupTable:
    """Dihedral group of order ``2m``; index ``j*m + i`` is ``s^j r^i``."""

    def mul(p: int, q: int) -> int:
        j, i = divmod(p, m)
        k, l = divmod(q, m)
        return ((j + k) % 2) * m + ((-i if k else i) + l) % m

    names = [("s" if j else "") + (f"r{i}" if i else "") or "e" for j in range(2) for i in range(m)]
    return GroupTable.from_function(2 * m, mul, names)


def _qmul(p: tuple, q: tuple) -> tuple:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion_group() -> GroupTable:
    """``Q8`` in the order ``1, -1, i, -i, j, -j, k, -k``."""
    units = []
    for axis in range(4):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[axis] = sign
            units.append(tuple(v))
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return GroupTable.from_function(8, lambda p, q: units.index(_qmul(units[p], units[q])), names)


def group_classes(g: GroupTable) -> list:
    """Minimal-index representatives of the classes ``{a, a^-1}``, in carrier order."""
    return sorted({min(a, g.inverse(a)) for a in range(g.n)})


def group_coset_attempt(g: GroupTable) -> Table:
    reps = group_classes(g)
    index = {}
    for i, a in enumerate(reps):
        index[a] = i
        index[g.inverse(a)] = i
    c = g.cells

    def product(i: int, j: int):
        a, b = reps[i], reps[j]
        return index[c[a][b]], index[c[a][g.inverse(b)]]

    return Table.from_function(len(reps), product)
