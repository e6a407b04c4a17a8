"""Elementary symmetric functions of the eigenvalues of the min matrix.

For the n x n min matrix the k-th elementary symmetric function of the
eigenvalues equals C(n+k, n-k). This module computes it six independent
ways and assembles the exact characteristic polynomial from the values:

  closed   the binomial closed form C(n+k, n-k)
  minors   brute-force sum of all k x k principal minors (exponential)
  nested   sum of products over compositions of total <= n into k parts
  rec6     weighted recurrence over the first part of the composition
  rec7     difference recurrence, one step down in n
  ratio    multiplicative recurrence (n+k)/(n-k), every division exact

The eigenvalues themselves are never computed; only their symmetric
functions have closed forms here.
"""

import functools
import itertools
import math
from dataclasses import dataclass

from .determinants import det_bareiss
from .matrices import ExactMatrix, build_min_matrix

#: Largest n accepted by the brute-force minor enumeration by default.
BRUTE_FORCE_CAP = 14

METHODS = ("closed", "minors", "nested", "rec6", "rec7", "ratio")


class BruteForceCapExceeded(ValueError):
    """Raised when the exponential minor enumeration is asked for an n
    above the configured cap."""


def binomial(a, b):
    """Binomial coefficient C(a, b), exact.

    For a >= 0 this is the usual convention: 0 when b < 0 or b > a.
    Negative a is supported through the falling-factorial definition
    a(a-1)...(a-b+1)/b!, which the identity checks below rely on.
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b) if b <= a else 0
    # C(a, b) = (-1)^b C(b - a - 1, b) for a < 0
    return (-1 if b % 2 else 1) * math.comb(b - a - 1, b)


def _check_nk(n, k):
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"require 0 <= k <= n, got n={n}, k={k}")


def symfun_closed(n, k):
    """Closed form C(n+k, n-k); also equals C(n+k, 2k)."""
    _check_nk(n, k)
    return binomial(n + k, n - k)


def symfun_minor_sum(n, k, cap=BRUTE_FORCE_CAP):
    """Sum of all C(n, k) principal k x k minors of the min matrix.

    Exponential in n; refuses n above `cap`.
    """
    _check_nk(n, k)
    if n > cap:
        raise BruteForceCapExceeded(
            f"minor enumeration capped at n={cap} (got n={n}); raise `cap` to override"
        )
    if k == 0:
        return 1
    matrix = build_min_matrix(n)
    return sum(
        det_bareiss(matrix.submatrix(subset))
        for subset in itertools.combinations(range(1, n + 1), k)
    )


def symfun_nested(n, k):
    """Sum of products i_1 * ... * i_k over all compositions with each
    part >= 1 and total at most n."""
    _check_nk(n, k)

    @functools.lru_cache(maxsize=None)
    def tail(parts, budget):
        if parts == 0:
            return 1
        return sum(i * tail(parts - 1, budget - i) for i in range(1, budget - parts + 2))

    result = tail(k, n)
    tail.cache_clear()
    return result


def symfun_rec6(n, k):
    """Weighted recurrence S(n, k) = sum_i i * S(n-i, k-1), i = 1..n-k+1."""
    _check_nk(n, k)
    table = {}

    def value(m, j):
        if j == 0:
            return 1
        if (m, j) not in table:
            table[m, j] = sum(i * value(m - i, j - 1) for i in range(1, m - j + 2))
        return table[m, j]

    return value(n, k)


def symfun_rec7(n, k):
    """Difference recurrence S(n, k) = S(n-1, k) + sum_i S(n-i, k-1).

    The recurrence needs n - 1 >= k; the diagonal S(k, k) = 1 (the
    determinant of the full matrix) serves as its base instead.
    """
    _check_nk(n, k)
    table = {}

    def value(m, j):
        if j == 0 or j == m:
            return 1
        if (m, j) not in table:
            table[m, j] = value(m - 1, j) + sum(
                value(m - i, j - 1) for i in range(1, m - j + 2)
            )
        return table[m, j]

    return value(n, k)


def symfun_ratio(n, k):
    """Multiplicative recurrence S(m, k) = (m+k)/(m-k) * S(m-1, k) from the
    base S(k, k) = 1. Every division must be exact; a remainder signals an
    implementation bug, not bad input."""
    _check_nk(n, k)
    if k == 0 or k == n:
        return 1
    value = 1
    for m in range(k + 1, n + 1):
        numerator = value * (m + k)
        quotient, remainder = divmod(numerator, m - k)
        if remainder:
            raise ArithmeticError(
                f"inexact division in ratio recurrence at m={m}, k={k}"
            )
        value = quotient
    return value


_DISPATCH = {
    "closed": symfun_closed,
    "minors": symfun_minor_sum,
    "nested": symfun_nested,
    "rec6": symfun_rec6,
    "rec7": symfun_rec7,
    "ratio": symfun_ratio,
}


def symfun(n, k, method="closed"):
    """Dispatch to one of the six computation methods by name."""
    try:
        fn = _DISPATCH[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}") from None
    return fn(n, k)


@dataclass(frozen=True)
class SymTable:
    """Immutable snapshot of S(n, k) values for all 0 <= k <= n <= n_max,
    computed by a single method."""

    n_max: int
    method: str
    values: dict

    def __getitem__(self, nk):
        return self.values[nk]


def build_sym_table(n_max, method="closed", cap=BRUTE_FORCE_CAP):
    """Fill a SymTable bottom-up for the given method.

    Much cheaper than repeated single-value calls when sweeping a whole
    (n, k) range: the per-method work is shared across entries.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    values = {}
    if method == "closed":
        for n in range(n_max + 1):
            for k in range(n + 1):
                values[n, k] = binomial(n + k, n - k)
    elif method == "minors":
        for n in range(n_max + 1):
            for k in range(n + 1):
                values[n, k] = symfun_minor_sum(n, k, cap=cap)
    elif method == "nested":
        # One shared composition-sum cache serves every (n, k): the value
        # at (n, k) is the k-part sum with budget n.
        @functools.lru_cache(maxsize=None)
        def tail(parts, budget):
            if parts == 0:
                return 1
            return sum(
                i * tail(parts - 1, budget - i) for i in range(1, budget - parts + 2)
            )

        for n in range(n_max + 1):
            for k in range(n + 1):
                values[n, k] = tail(k, n)
        tail.cache_clear()
    elif method == "rec6":
        for n in range(n_max + 1):
            values[n, 0] = 1
        for k in range(1, n_max + 1):
            for n in range(k, n_max + 1):
                values[n, k] = sum(
                    i * values[n - i, k - 1] for i in range(1, n - k + 2)
                )
    elif method == "rec7":
        for n in range(n_max + 1):
            values[n, 0] = 1
            if n > 0:
                values[n, n] = 1
        for k in range(1, n_max + 1):
            for n in range(k + 1, n_max + 1):
                values[n, k] = values[n - 1, k] + sum(
                    values[n - i, k - 1] for i in range(1, n - k + 2)
                )
    else:  # ratio
        for n in range(n_max + 1):
            values[n, 0] = 1
        for k in range(1, n_max + 1):
            value = 1
            values[k, k] = 1
            for m in range(k + 1, n_max + 1):
                numerator = value * (m + k)
                quotient, remainder = divmod(numerator, m - k)
                if remainder:
                    raise ArithmeticError(
                        f"inexact division in ratio recurrence at m={m}, k={k}"
                    )
                value = quotient
                values[m, k] = value
    return SymTable(n_max=n_max, method=method, values=values)


def binomial_identity_check(n, k):
    """Check the binomial identity underlying the difference recurrence:

    C(n+k, n-k) = C(n+k-1, n-k-1) + sum_{i=1}^{n-k+1} C(n+k-1-i, n-k+1-i)
    """
    _check_nk(n, k)
    left = binomial(n + k, n - k)
    right = binomial(n + k - 1, n - k - 1) + sum(
        binomial(n + k - 1 - i, n - k + 1 - i) for i in range(1, n - k + 2)
    )
    return left == right


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial with exact integer coefficients.

    coeffs[j] is the coefficient of lambda^j; coeffs[n] == 1.
    """

    n: int
    coeffs: tuple

    def __call__(self, lam):
        result = 0
        for c in reversed(self.coeffs):
            result = result * lam + c
        return result


def charpoly(n):
    """Characteristic polynomial of the n x n min matrix via Vieta's
    formulas over the closed-form symmetric functions."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    coeffs = [0] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = (-1) ** k * symfun_closed(n, k)
    return CharPoly(n=n, coeffs=tuple(coeffs))


def char_matrix(n, lam):
    """The exact integer matrix lam*I - A_n, for checking charpoly against
    the elimination oracle."""
    base = build_min_matrix(n)
    rows = base.to_lists()
    shifted = [
        [(lam if r == c else 0) - rows[r][c] for c in range(n)] for r in range(n)
    ]
    return ExactMatrix(shifted)
