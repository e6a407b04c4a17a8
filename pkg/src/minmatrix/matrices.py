"""Construction of the min-matrix family in exact integer arithmetic.

The basic object is the n x n matrix with entry min(i, j), together with
its shifted variant (top-left entry k) and two cumulative-prefix-sum
generalizations parameterized by an increment list (i_1, ..., i_n).
"""

from itertools import accumulate


class ExactMatrix:
    """Dense square matrix of arbitrary-precision integers.

    Public entry access is 1-based to match the usual mathematical
    indexing of these matrices. Instances are treated as immutable.
    """

    __slots__ = ("dim", "_rows")

    def __init__(self, rows):
        rows = [list(map(int, row)) for row in rows]
        if not rows:
            raise ValueError("matrix must have at least one row")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "dim", len(rows))
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    def entry(self, r, c):
        """Entry at 1-based position (r, c)."""
        if not (1 <= r <= self.dim and 1 <= c <= self.dim):
            raise IndexError(f"entry ({r}, {c}) out of bounds for dim {self.dim}")
        return self._rows[r - 1][c - 1]

    def to_lists(self):
        """Entries as a fresh list of row lists."""
        return [row[:] for row in self._rows]

    def is_symmetric(self):
        rows = self._rows
        n = self.dim
        return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))

    def submatrix(self, indices):
        """Principal submatrix on the given 1-based row/column indices."""
        idx = [i - 1 for i in indices]
        if not idx:
            raise ValueError("index set must be nonempty")
        if any(not 0 <= i < self.dim for i in idx):
            raise IndexError("submatrix index out of bounds")
        rows = self._rows
        return ExactMatrix([[rows[i][j] for j in idx] for i in idx])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self._rows))

    def __repr__(self):
        return f"ExactMatrix({self._rows!r})"


def _check_increments(inc, minimum_length=1):
    values = [int(v) for v in inc]
    if len(values) < minimum_length:
        raise ValueError(
            f"increment list needs at least {minimum_length} entries, got {len(values)}"
        )
    return values


def prefix_sums(inc):
    """Partial sums [i_1, i_1+i_2, ...] of an increment list."""
    values = _check_increments(inc)
    return list(accumulate(values))


def build_min_matrix(n):
    """The n x n matrix with entry(i, j) = min(i, j)."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return ExactMatrix([[min(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])


def build_c_matrix(n, k):
    """The (n-k+1) x (n-k+1) shifted min matrix with top-left entry k.

    The shift parameter is restricted to 1 < k < n; outside that range
    use build_delta_matrix((k, 1, ..., 1)) to explore the same pattern.
    """
    if not 1 < k < n:
        raise ValueError(f"require 1 < k < n, got k={k}, n={n}")
    dim = n - k + 1
    return ExactMatrix(
        [[k - 1 + min(r, c) for c in range(1, dim + 1)] for r in range(1, dim + 1)]
    )


def build_delta_matrix(inc):
    """Cumulative matrix with entry(r, c) = P[min(r, c)], P the prefix sums.

    With unit increments this reproduces build_min_matrix; with
    (k, 1, ..., 1) it reproduces the shifted matrix for any k.
    """
    sums = prefix_sums(inc)
    n = len(sums)
    return ExactMatrix(
        [[sums[min(r, c)] for c in range(n)] for r in range(n)]
    )


def build_theta_matrix(inc):
    """Companion cumulative matrix of dimension len(inc) - 1.

    Column 1 is constant P[1]; for c >= 2 the entry at (r, c) is
    P[min(r+1, c+1)]. Requires at least three increments (the smallest
    instance is 2 x 2).
    """
    values = _check_increments(inc, minimum_length=3)
    sums = list(accumulate(values))
    n = len(values) - 1
    rows = []
    for r in range(1, n + 1):
        row = [sums[0]]
        row.extend(sums[min(r + 1, c + 1) - 1] for c in range(2, n + 1))
        rows.append(row)
    return ExactMatrix(rows)
