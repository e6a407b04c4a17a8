"""Exact determinants: closed forms and a fraction-free elimination oracle.

The closed forms cost O(n) multiplications; the Bareiss elimination is the
independent O(n^3) check. Both stay in integer arithmetic throughout, so
every comparison is an exact equality.
"""

from math import prod

from .matrices import _check_increments


def det_bareiss(matrix):
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate division is exact over the integers. Zero pivots
    are handled by row swap with sign tracking; if no nonzero pivot
    exists the determinant is 0.
    """
    # Rows shrink as elimination proceeds: at each step the active block's
    # pivot column is index 0 of every remaining row.
    rows = matrix.to_lists()
    n = len(rows)
    sign = 1
    prev = 1
    for step in range(n - 1):
        if rows[step][0] == 0:
            for r in range(step + 1, n):
                if rows[r][0] != 0:
                    rows[step], rows[r] = rows[r], rows[step]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = rows[step]
        pivot = pivot_row[0]
        pivot_tail = pivot_row[1:]
        for r in range(step + 1, n):
            row = rows[r]
            lead = row[0]
            rows[r] = [
                (pivot * x - lead * y) // prev
                for x, y in zip(row[1:], pivot_tail)
            ]
        prev = pivot
    return sign * rows[n - 1][0]


def delta_det_closed(inc):
    """Determinant of build_delta_matrix(inc): the product of the increments."""
    values = _check_increments(inc)
    return prod(values)


def theta_det_closed(inc):
    """Determinant of build_theta_matrix(inc): i_1 times the product of
    i_3, ..., i_{n+1}. The second increment drops out."""
    values = _check_increments(inc, minimum_length=3)
    return values[0] * prod(values[2:])


def det_min_matrix(n):
    """Determinant of the min matrix, always 1."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    return 1


def det_c_matrix(n, k):
    """Determinant of the shifted min matrix, always k."""
    if not 1 < k < n:
        raise ValueError(f"require 1 < k < n, got k={k}, n={n}")
    return k
