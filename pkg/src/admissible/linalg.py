"""Fraction-free linear algebra over F = Q(zeta)(f, t).

Rows are first cleared of denominators, then reduced with Bareiss
elimination over the polynomial ring. Every division in Bareiss is exact, so
entries stay polynomials whose size grows linearly rather than exponentially.
"""

from __future__ import annotations

from .polynomial import Poly2, RatFunc, poly_exact_divide

__all__ = ["bareiss", "solve", "kernel_vector", "rank"]


def _exact(p: Poly2, d: Poly2) -> Poly2:
    q = poly_exact_divide(p, d)
    if q is None:
        raise ArithmeticError("inexact division during fraction-free elimination")
    return q


def clear_denominators(rows: list[list[RatFunc]]) -> list[list[Poly2]]:
    out = []
    for row in rows:
        common = Poly2.const(1)
        for x in row:
            if x.is_zero() or x.den.is_one():
                continue
            if poly_exact_divide(common, x.den) is None:
                common = common * x.den
        out.append([
            Poly2() if x.is_zero() else x.num * _exact(common, x.den)
            for x in row
        ])
    return out


def bareiss(M: list[list[Poly2]], ncols: int | None = None) -> tuple[list[list[Poly2]], list[int]]:
    """Row echelon form by Bareiss elimination, in place on a copy.

    Pivots are searched only among the first `ncols` columns (default: all),
    which lets an augmented column ride along. Returns (matrix, pivot columns).
    """
    M = [list(r) for r in M]
    nrows = len(M)
    width = len(M[0]) if M else 0
    ncols = width if ncols is None else ncols
    prev = Poly2.const(1)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if not M[i][c].is_zero()), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, nrows):
            e = M[i][c]
            row = M[i]
            for j in range(c + 1, width):
                v = p * row[j]
                if not e.is_zero() and not M[r][j].is_zero():
                    v = v - e * M[r][j]
                row[j] = _exact(v, prev) if not v.is_zero() else v
            row[c] = Poly2()
        prev = p
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A: list[list[RatFunc]]) -> int:
    if not A:
        return 0
    _, pivots = bareiss(clear_denominators(A))
    return len(pivots)


def solve(A: list[list[RatFunc]], b: list[RatFunc]) -> list[RatFunc] | None:
    """Unique solution of A x = b for square A, or None when A is singular."""
    n = len(A)
    aug = clear_denominators([list(A[i]) + [b[i]] for i in range(n)])
    M, pivots = bareiss(aug, ncols=n)
    if len(pivots) < n:
        return None
    D = M[n - 1][n - 1]
    y = [Poly2()] * n
    for i in range(n - 1, -1, -1):
        acc = D * M[i][n]
        for j in range(i + 1, n):
            if not M[i][j].is_zero() and not y[j].is_zero():
                acc = acc - M[i][j] * y[j]
        y[i] = _exact(acc, M[i][i]) if not acc.is_zero() else acc
    return [RatFunc(yi, D) for yi in y]


def kernel_vector(A: list[list[RatFunc]]) -> list[RatFunc] | None:
    """A nonzero x with A x = 0, or None when the columns are independent."""
    ncols = len(A[0])
    M, pivots = bareiss(clear_denominators(A))
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    r = len(pivots)
    D = M[r - 1][pivots[r - 1]] if r else Poly2.const(1)
    x = [Poly2()] * ncols
    x[c0] = D
    for i in range(r - 1, -1, -1):
        acc = -(D * M[i][c0])
        for k in range(i + 1, r):
            pc = pivots[k]
            if not M[i][pc].is_zero() and not x[pc].is_zero():
                acc = acc - M[i][pc] * x[pc]
        x[pivots[i]] = _exact(acc, M[i][pivots[i]]) if not acc.is_zero() else acc
    return [RatFunc(v) for v in x]
