"""Exact rational feasibility for homogeneous systems of the shape

    E t  = 0        (equations)
    G t >= 1        (homogenized strict inequalities)

over free variables t. Equations are removed first by exact Gaussian
elimination (substituting t = N z for a nullspace basis N), then a phase-1
simplex with Bland's rule decides feasibility of the inequality system.
All pivots are Fraction-exact; floats never appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class SimplexStats:
    pivots: int = 0
    equations: int = 0
    inequalities: int = 0


def _rref(rows: list[list[Fraction]], ncols: int):
    """In-place reduced row echelon form; returns the pivot column list."""
    piv_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == len(rows):
            break
    del rows[r:]
    return piv_cols


def _nullspace(equations, nvars: int) -> list[list[Fraction]]:
    """Columns of N span {t : E t = 0}; returns N as nvars x nfree."""
    rows = [[Fraction(c) for c in eq] for eq in equations]
    piv_cols = _rref(rows, nvars)
    free_cols = [c for c in range(nvars) if c not in piv_cols]
    N = [[Fraction(0)] * len(free_cols) for _ in range(nvars)]
    for jf, fc in enumerate(free_cols):
        N[fc][jf] = Fraction(1)
        for r, pc in enumerate(piv_cols):
            N[pc][jf] = -rows[r][fc]
    return N


def _phase1(ineqs: list[list[Fraction]], nfree: int, stats: SimplexStats):
    """Solve {G z >= 1, z free} by minimizing artificial infeasibility.

    z splits into u - v with u, v >= 0, plus one surplus per row. Artificial
    variables form the initial basis implicitly: they carry labels past the
    real columns and are never eligible to re-enter. Returns z or None.
    """
    m = len(ineqs)
    if m == 0:
        return [Fraction(0)] * nfree
    ncols = 2 * nfree + m
    rows = []
    for i, g in enumerate(ineqs):
        row = [Fraction(x) for x in g] + [Fraction(-x) for x in g] + [Fraction(0)] * m
        row[2 * nfree + i] = Fraction(-1)
        row.append(Fraction(1))  # rhs
        rows.append(row)
    basis = [ncols + i for i in range(m)]  # artificial labels
    cost = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for j in range(ncols + 1):
            cost[j] -= row[j]
    zero = Fraction(0)
    while True:
        enter = next((j for j in range(ncols) if cost[j] < zero), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > zero:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # phase-1 objective is bounded below by 0, so this cannot happen
            raise RuntimeError("phase-1 simplex detected an unbounded direction")
        stats.pivots += 1
        prow = rows[leave]
        inv = prow[enter]
        if inv != 1:
            prow = [x / inv for x in prow]
            rows[leave] = prow
        for i, row in enumerate(rows):
            if i != leave and row[enter]:
                f = row[enter]
                rows[i] = [a - f * b for a, b in zip(row, prow)]
        f = cost[enter]
        if f:
            cost = [a - f * b for a, b in zip(cost, prow)]
        basis[leave] = enter
    if -cost[-1] != 0:
        return None  # residual infeasibility
    z = [Fraction(0)] * nfree
    for i, b in enumerate(basis):
        if b < nfree:
            z[b] += rows[i][-1]
        elif b < 2 * nfree:
            z[b - nfree] -= rows[i][-1]
    return z


def feasible_point(equations, inequalities, nvars: int):
    """A rational t with E t = 0 and G t >= 1, or None if none exists.

    Returns (t, stats). Coefficient rows may be ints or Fractions.
    """
    stats = SimplexStats(equations=len(equations), inequalities=len(inequalities))
    N = _nullspace(equations, nvars)
    nfree = len(N[0]) if N else 0
    reduced = []
    seen = set()
    for g in inequalities:
        row = [
            sum((Fraction(c) * N[i][j] for i, c in enumerate(g) if c), Fraction(0))
            for j in range(nfree)
        ]
        if all(x == 0 for x in row):
            return None, stats  # 0 >= 1: equations force this constraint empty
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            reduced.append(row)
    z = _phase1(reduced, nfree, stats)
    if z is None:
        return None, stats
    t = [
        sum((N[i][j] * z[j] for j in range(nfree) if z[j]), Fraction(0))
        for i in range(nvars)
    ]
    return t, stats
