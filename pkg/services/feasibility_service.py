"""
Exact feasibility of A x = b, x >= 0 over the rationals.

Phase I of the simplex method on a tableau of Fractions, with one artificial
variable per row and Bland's smallest-index rule for both the entering and
the leaving variable, so the method terminates on degenerate problems and
never answers "unknown". No floating point is involved.
"""
import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

logger = logging.getLogger(__name__)


class RationalTableau:
    """Simplex tableau for minimizing the sum of the artificial variables."""

    def __init__(self, matrix: Sequence[Sequence[int]], rhs: Sequence[int]):
        self.m = len(matrix)
        self.n = len(matrix[0]) if matrix else 0
        width = self.n + self.m
        self.rows: List[List[Fraction]] = []
        for r, (row, b) in enumerate(zip(matrix, rhs)):
            if len(row) != self.n:
                raise ValueError("ragged constraint matrix")
            sign = -1 if b < 0 else 1
            tableau_row = [Fraction(sign * a) for a in row] + [Fraction(0)] * self.m
            tableau_row[self.n + r] = Fraction(1)
            tableau_row.append(Fraction(sign * b))
            self.rows.append(tableau_row)
        self.basis = [self.n + r for r in range(self.m)]
        # Reduced costs of the Phase I objective; the last entry is minus its value.
        self.cost = [Fraction(0)] * (width + 1)
        for row in self.rows:
            for j in range(self.n):
                self.cost[j] -= row[j]
            self.cost[-1] -= row[-1]
        self.pivots = 0

    def _pivot(self, r: int, e: int) -> None:
        pivot_row = self.rows[r]
        piv = pivot_row[e]
        pivot_row[:] = [v / piv for v in pivot_row]
        for k, row in enumerate(self.rows):
            if k != r and row[e]:
                f = row[e]
                row[:] = [a - f * b for a, b in zip(row, pivot_row)]
        if self.cost[e]:
            f = self.cost[e]
            self.cost = [a - f * b for a, b in zip(self.cost, pivot_row)]
        self.basis[r] = e
        self.pivots += 1

    def _entering(self) -> Optional[int]:
        for j, c in enumerate(self.cost[:-1]):
            if c < 0:
                return j
        return None

    def _leaving(self, e: int) -> Optional[int]:
        best = None
        for r, row in enumerate(self.rows):
            if row[e] > 0:
                key = (row[-1] / row[e], self.basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        return None if best is None else best[1]

    def solve(self) -> Optional[List[Fraction]]:
        while True:
            e = self._entering()
            if e is None:
                break
            r = self._leaving(e)
            if r is None:
                # Phase I objective is bounded below by zero.
                raise ArithmeticError("unbounded Phase I objective")
            self._pivot(r, e)
        if self.cost[-1] != 0:
            return None
        solution = [Fraction(0)] * self.n
        for r, var in enumerate(self.basis):
            if var < self.n:
                solution[var] = self.rows[r][-1]
        return solution


def find_nonnegative_solution(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> Optional[List[Fraction]]:
    """An exact vertex solution of A x = b, x >= 0, or None when infeasible."""
    if len(matrix) != len(rhs):
        raise ValueError("matrix and right-hand side disagree in row count")
    if not matrix:
        return []
    tableau = RationalTableau(matrix, rhs)
    solution = tableau.solve()
    logger.debug("Phase I finished after %d pivots, feasible=%s", tableau.pivots, solution is not None)
    return solution


def convex_combination_below(points: Sequence[Sequence[int]], target: Sequence[int], total: int = 1) -> Optional[List[Fraction]]:
    """
    Weights lambda_i >= 0 with sum(lambda) = total and sum(lambda_i * p_i) <= target
    componentwise, or None. Slack variables turn the inequalities into equations.
    """
    k = len(points)
    d = len(target)
    if k == 0:
        return None
    matrix = []
    for j in range(d):
        row = [p[j] for p in points] + [0] * d
        row[k + j] = 1
        matrix.append(row)
    matrix.append([1] * k + [0] * d)
    solution = find_nonnegative_solution(matrix, list(target) + [total])
    return None if solution is None else solution[:k]


def common_denominator(values: Sequence[Fraction]) -> int:
    return lcm(*(v.denominator for v in values)) if values else 1
