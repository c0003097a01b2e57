"""Exact Gaussian elimination over a field (Q(q) or Q).

Entries only need ``+ - * /`` and truthiness for the zero test, so the same
routines run on RatFunc and on Fraction matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class InconsistentSystemError(ArithmeticError):
    """The right-hand side is not in the column space."""


def cost(x) -> int:
    size = getattr(x, "size", None)
    if size is not None:
        return size()
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    return 0


@dataclass
class LinearSolution:
    """Result of :func:`solve_linear`.

    ``solutions`` holds one particular solution per right-hand side (free
    variables set to zero); ``kernel`` is a basis of the null space.
    """

    rank: int
    pivots: list  # (row, col) pairs in elimination order
    solutions: list = field(default_factory=list)
    kernel: list = field(default_factory=list)

    @property
    def solution(self):
        return self.solutions[0]

    @property
    def unique(self) -> bool:
        return not self.kernel


def _field(x):
    return Fraction(x) if isinstance(x, int) else x


def _zero_like(rows, rhs):
    for r in rows:
        for x in r:
            return x * 0
    for col in rhs:
        for x in col:
            return x * 0
    return Fraction(0)


def solve_linear(M, b=None, *, rhs=None, kernel: bool = False, zero=None) -> LinearSolution:
    """Gauss-Jordan elimination with full pivoting on ``M x = b``.

    ``b`` is a single right-hand side; ``rhs`` a list of them.  Raises
    :class:`InconsistentSystemError` when some right-hand side has no
    solution.  Rank deficiency is not an error: it shows up as a nonempty
    ``kernel`` (when requested) and ``rank < ncols``.
    """
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    columns = []
    if b is not None:
        columns.append(list(b))
    if rhs is not None:
        columns.extend(list(c) for c in rhs)
    for c in columns:
        if len(c) != nrows:
            raise ValueError("right-hand side length does not match the matrix")
    k = len(columns)
    A = [[_field(x) for x in M[r]] + [_field(columns[j][r]) for j in range(k)] for r in range(nrows)]
    if zero is None:
        zero = _zero_like(A, [])
    for r in A:
        if len(r) != ncols + k:
            raise ValueError("ragged matrix")

    free_rows = set(range(nrows))
    free_cols = set(range(ncols))
    pivots = []
    while free_rows and free_cols:
        best = None
        for r in free_rows:
            row = A[r]
            for c in free_cols:
                x = row[c]
                if x:
                    key = (cost(x), c, r)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pc, pr = best
        row = A[pr]
        inv = 1 / row[pc]
        A[pr] = row = [x * inv if x else x for x in row]
        for r in range(nrows):
            if r == pr:
                continue
            f = A[r][pc]
            if f:
                other = A[r]
                A[r] = [o - f * p if p else o for o, p in zip(other, row)]
        pivots.append((pr, pc))
        free_rows.discard(pr)
        free_cols.discard(pc)

    for r in free_rows:
        for j in range(k):
            if A[r][ncols + j]:
                raise InconsistentSystemError(f"right-hand side {j} is inconsistent (row {r})")

    solutions = []
    for j in range(k):
        x = [zero] * ncols
        for pr, pc in pivots:
            x[pc] = A[pr][ncols + j]
        solutions.append(x)

    kern = []
    if kernel:
        pivot_of_col = {pc: pr for pr, pc in pivots}
        for f in sorted(free_cols):
            v = [zero] * ncols
            v[f] = zero + 1
            for pc, pr in pivot_of_col.items():
                v[pc] = -A[pr][f]
            kern.append(v)
    return LinearSolution(rank=len(pivots), pivots=pivots, solutions=solutions, kernel=kern)


def kernel_basis(M, zero=None) -> list:
    if not M:
        return []
    return solve_linear(M, kernel=True, zero=zero).kernel


def rank(M) -> int:
    if not M or not M[0]:
        return 0
    return solve_linear(M).rank


def column_basis(M) -> list[int]:
    """Indices of the leftmost maximal set of linearly independent columns."""
    if not M:
        return []
    A = [[_field(x) for x in r] for r in M]
    nrows, ncols = len(A), len(A[0])
    used = [False] * nrows
    cols = []
    for c in range(ncols):
        best = None
        for r in range(nrows):
            if not used[r] and A[r][c]:
                key = (cost(A[r][c]), r)
                if best is None or key < best:
                    best = key
        if best is None:
            continue
        pr = best[1]
        used[pr] = True
        cols.append(c)
        prow = A[pr]
        inv = 1 / prow[c]
        for r in range(nrows):
            if used[r] or not A[r][c]:
                continue
            f = A[r][c] * inv
            row = A[r]
            A[r] = row[:c] + [row[j] - f * prow[j] if prow[j] else row[j] for j in range(c, ncols)]
        if len(cols) == nrows:
            break
    return cols


def solve_square(M, rhs_columns) -> list:
    """Solve M X = B for invertible M; returns the columns of X."""
    res = solve_linear(M, rhs=rhs_columns)
    if res.rank != len(M):
        raise ArithmeticError("matrix is singular")
    return res.solutions


def inverse(M) -> list:
    """Inverse of a square matrix (rows)."""
    n = len(M)
    zero = _zero_like([[_field(x) for x in r] for r in M], [])
    eye = [[zero + 1 if i == j else zero for i in range(n)] for j in range(n)]
    cols = solve_square(M, eye)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def transpose(M) -> list:
    return [list(r) for r in zip(*M)] if M else []


def matmul(A, B, zero) -> list:
    Bt = transpose(B)
    out = []
    for row in A:
        out.append([dot(row, col, zero) for col in Bt])
    return out


def dot(u, v, zero):
    acc = zero
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc
