"""Exact two-phase simplex over the rationals.

Solves ``max c.x  s.t.  A x = b, x >= 0`` with ``Fraction`` arithmetic and a
sparse dict-of-rows tableau. Pivoting uses the largest reduced cost and
falls back to Bland's rule after a run of degenerate pivots, which rules
out cycling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import Infeasible

DEGENERATE_RUN = 20


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: tuple[Fraction, ...]
    pivots: int


class _Tableau:
    def __init__(self, rows: list[dict[int, Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, j: int, cost: dict[int, Fraction]) -> Fraction:
        """Pivot column ``j`` into row ``r``; updates ``cost`` in place, returns the objective shift."""
        row = self.rows[r]
        p = row[j]
        if p != 1:
            inv = 1 / p
            for k in row:
                row[k] *= inv
            self.rhs[r] *= inv
        b = self.rhs[r]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            a = other.get(j)
            if a is None:
                continue
            for k, v in row.items():
                nv = other.get(k, 0) - a * v
                if nv:
                    other[k] = nv
                else:
                    other.pop(k, None)
            self.rhs[i] -= a * b
        shift = Fraction(0)
        a = cost.get(j)
        if a is not None:
            for k, v in row.items():
                nv = cost.get(k, 0) - a * v
                if nv:
                    cost[k] = nv
                else:
                    cost.pop(k, None)
            shift = a * b
        self.basis[r] = j
        self.pivots += 1
        return shift

    def optimize(self, cost: dict[int, Fraction], allowed) -> Fraction:
        """Maximize; ``cost`` holds reduced costs (positive means improving). Returns objective gain."""
        gain = Fraction(0)
        degenerate = 0
        while True:
            candidates = [k for k, v in cost.items() if v > 0 and allowed(k)]
            if not candidates:
                return gain
            if degenerate >= DEGENERATE_RUN:
                j = min(candidates)
            else:
                j = max(candidates, key=lambda k: (cost[k], -k))
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(j)
                if a is not None and a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                raise ArithmeticError("unbounded linear program")
            degenerate = degenerate + 1 if best[0][0] == 0 else 0
            gain += self.pivot(best[1], j, cost)


def solve_lp(
    n_cols: int,
    rows: Sequence[Mapping[int, Fraction | int]],
    rhs: Sequence[Fraction | int],
    objective: Mapping[int, Fraction | int],
) -> LPSolution:
    """Exact optimum of ``max objective.x`` subject to ``rows . x = rhs``, ``x >= 0``.

    Raises Infeasible when no nonnegative solution exists.
    """
    t_rows: list[dict[int, Fraction]] = []
    t_rhs: list[Fraction] = []
    for row, b in zip(rows, rhs):
        sign = -1 if b < 0 else 1
        t_rows.append({k: Fraction(sign * v) for k, v in row.items() if v})
        t_rhs.append(Fraction(sign * b))
    m = len(t_rows)
    artificial = list(range(n_cols, n_cols + m))
    for i, row in enumerate(t_rows):
        row[artificial[i]] = Fraction(1)
    tab = _Tableau(t_rows, t_rhs, list(artificial))

    # phase 1: maximize -sum(artificials); reduced costs are the column sums
    cost: dict[int, Fraction] = {}
    for row in t_rows:
        for k, v in row.items():
            if k < n_cols:
                cost[k] = cost.get(k, 0) + v
    cost = {k: v for k, v in cost.items() if v}
    infeasibility = sum(t_rhs, Fraction(0))
    infeasibility -= tab.optimize(cost, lambda k: k < n_cols)
    if infeasibility != 0:
        raise Infeasible(f"phase 1 optimum leaves infeasibility {infeasibility}")

    # drive remaining (zero-level) artificials out, dropping redundant rows
    dead = []
    for i in range(m):
        if tab.basis[i] >= n_cols:
            col = next((k for k in sorted(tab.rows[i]) if k < n_cols), None)
            if col is None:
                dead.append(i)
            else:
                tab.pivot(i, col, {})
    for i in reversed(dead):
        del tab.rows[i], tab.rhs[i], tab.basis[i]
    for row in tab.rows:
        for k in [k for k in row if k >= n_cols]:
            del row[k]

    # phase 2: reduced costs of the real objective w.r.t. the current basis
    cost = {k: Fraction(v) for k, v in objective.items() if v}
    value = Fraction(0)
    for i, j in enumerate(tab.basis):
        a = cost.get(j)
        if a:
            for k, v in tab.rows[i].items():
                nv = cost.get(k, 0) - a * v
                if nv:
                    cost[k] = nv
                else:
                    cost.pop(k, None)
            value += a * tab.rhs[i]
    value += tab.optimize(cost, lambda k: k < n_cols)

    x = [Fraction(0)] * n_cols
    for i, j in enumerate(tab.basis):
        x[j] = tab.rhs[i]
    return LPSolution(value, tuple(x), tab.pivots)
