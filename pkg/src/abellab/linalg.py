"""Exact dense linear algebra over the scalar field.

Everything here is plain Gaussian elimination with field divisions and
first-nonzero pivoting: deterministic, exact, and fast enough for the
matrix sizes this package ever builds (tens of rows/columns).
"""

from __future__ import annotations

from .field import ONE, ZERO, Scalar


class Matrix:
    """Immutable row-major matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = [Scalar.coerce(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError(
                "entry count %d does not match %dx%d" % (len(entries), rows, cols)
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @staticmethod
    def from_rows(rows) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        flat = [e for r in rows for e in r]
        return Matrix(n, m, flat)

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = ZERO
            for x, y in zip(self.row(i), v):
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.rows, self.cols)


def rref(rows):
    """Reduced row echelon form of a list-of-rows; returns (rows, pivot_cols).

    Pivot choice is the first nonzero entry of the first unfinished row,
    which makes every downstream basis deterministic.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        if pv != ONE:
            rows[r] = [e / pv for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    # drop all-zero rows
    rows = [row for row in rows if any(row)]
    return rows, pivots


def rank(M: Matrix) -> int:
    return len(rref(M.to_rows())[1])


def kernel_basis(M: Matrix):
    """Exact basis of the right null space {v : M v = 0}.

    Basis vectors come from the reduced echelon form: one per free column,
    with a 1 in the free slot and the negated pivot-column entries above.
    dim(kernel) = cols - rank.
    """
    rows, pivots = rref(M.to_rows())
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            if rows[r][f]:
                v[pc] = -rows[r][f]
        basis.append(v)
    return basis


def solve(M: Matrix, b):
    """One exact solution of M x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != M.rows:
        raise ValueError("dimension mismatch")
    aug = [M.row(i) + [b[i]] for i in range(M.rows)]
    rows, pivots = rref(aug)
    n = M.cols
    for row, pc in zip(rows, pivots):
        if pc == n:  # pivot in the augmented column: 0 = 1
            return None
    x = [ZERO] * n
    for row, pc in zip(rows, pivots):
        x[pc] = row[n]
    return x


def span_rref(vectors):
    """Canonical (RREF) basis of the span of the given coefficient vectors.

    Two subspaces are equal exactly when their span_rref outputs are equal,
    which is how subspace comparisons are done throughout.
    """
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return []
    rows, _ = rref(vecs)
    return rows
