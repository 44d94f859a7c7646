"""Power sequences and element orders.

The sequence is generated by the ``m = 1`` case of ``x^k * x^m = [x^|k-m|, x^(k+m)]``:
``x^(k+1)`` is what remains of ``x^k * x`` after removing one copy of ``x^(k-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .axioms import Verdict
from .core import IDENTITY, Pair, Table, pair_make


class IllFormedError(ValueError):
    """``x^(k-1)`` does not occur in ``x^k * x``: the table is not a valid structure."""

    def __init__(self, base: int, k: int, product: Pair, expected: int):
        self.base = base
        self.k = k
        self.product = product
        self.expected = expected
        super().__init__(
            f"power sequence of {base} is ill-formed at k={k}: "
            f"x^{k - 1}={expected} is not in x^{k}*x={list(product)}"
        )


@dataclass(frozen=True)
class PowerSeq:
    base: int
    terms: tuple

    @property
    def horizon(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, k: int) -> int:
        return self.terms[k]


def power_sequence(t: Table, x: int, horizon: int) -> PowerSeq:
    if not 0 <= x < t.n:
        raise IndexError(f"element {x} out of range for order {t.n}")
    if horizon < 0:
        raise ValueError("horizon must be non-negative")
    terms = [IDENTITY, x][: horizon + 1]
    for k in range(1, horizon):
        prev, cur = terms[k - 1], terms[k]
        lo, hi = t.cells[cur][x]
        if lo == prev:
            terms.append(hi)
        elif hi == prev:
            terms.append(lo)
        else:
            raise IllFormedError(x, k, Pair(lo, hi), prev)
    return PowerSeq(x, tuple(terms))


def order(t: Table, x: int) -> Optional[int]:
    """Least ``k >= 1`` with ``x^k = e``, or ``None`` if no such ``k`` exists.

    ``x^(k+1)`` depends only on ``(x^(k-1), x^k)``, so the first ``n**2`` terms
    already contain every value the sequence ever takes. The step can also be
    undone (``x^(k-1)`` is ``x^k * x`` minus ``x^(k+1)``), so a well-formed
    sequence always comes back to ``e``; ``None`` is kept as a defensive result.
    """
    terms = power_sequence(t, x, t.n * t.n).terms
    for k in range(1, len(terms)):
        if terms[k] == IDENTITY:
            return k
    return None


def verify_power_relation(t: Table, x: int, max_total: int) -> Verdict:
    """Check ``x^k * x^m == [x^|k-m|, x^(k+m)]`` for all ``k + m <= max_total``.

    The witness is the first failing ``(k, m)``.
    """
    terms = power_sequence(t, x, max_total).terms
    for k in range(max_total + 1):
        for m in range(max_total + 1 - k):
            if t.cells[terms[k]][terms[m]] != pair_make(terms[abs(k - m)], terms[k + m]):
                return Verdict(False, (k, m))
    return Verdict(True)
