"""Acceptance suite: one test per exit criterion, each printing a
pass/fail line with its measured runtime. Run with `pytest -s
tests/test_acceptance.py` to see the lines as they complete."""

import random
import time

import pytest

from minmatrix import (
    build_c_matrix,
    build_delta_matrix,
    build_min_matrix,
    build_theta_matrix,
    build_sym_table,
    char_matrix,
    charpoly,
    covariance_deviation,
    delta_det_closed,
    det_bareiss,
    fib,
    binomial_identity_check,
    simulate_covariance,
    symfun_closed,
    symfun_minor_sum,
    symfun_ratio,
    theta_det_closed,
    SimConfig,
)


class _Criterion:
    """Times a criterion body and prints its pass/fail line."""

    def __init__(self, number, label, budget_seconds=None):
        self.number = number
        self.label = label
        self.budget = budget_seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"ACCEPTANCE {self.number}: {self.label} ... {status} ({elapsed:.2f}s)")
        if exc_type is None and self.budget is not None:
            assert elapsed < self.budget, (
                f"criterion {self.number} exceeded its {self.budget}s budget: {elapsed:.2f}s"
            )
        return False


def test_criterion_1_determinant_corollary():
    with _Criterion(1, "det(A_n)=1 for n<=200 and det(C_{n,k})=k for n<=100", 120):
        for n in range(1, 201):
            assert det_bareiss(build_min_matrix(n)) == 1
        for n in range(3, 101):
            for k in range(2, n):
                assert det_bareiss(build_c_matrix(n, k)) == k


def test_criterion_2_closed_forms_vs_oracle():
    with _Criterion(2, "closed-form determinants match elimination on 200 random lists", 10):
        rng = random.Random(20240817)
        for low, high in ((1, 9), (-4, 4)):
            for _ in range(100):
                inc = [rng.randint(low, high) for _ in range(rng.randint(1, 12))]
                assert delta_det_closed(inc) == det_bareiss(build_delta_matrix(inc))
                inc = [rng.randint(low, high) for _ in range(rng.randint(3, 13))]
                assert theta_det_closed(inc) == det_bareiss(build_theta_matrix(inc))


def test_criterion_3a_six_way_agreement_to_12():
    with _Criterion(3, "six-way symmetric-function agreement, n<=12", 60):
        for n in range(1, 13):
            for k in range(1, n + 1):
                expected = symfun_closed(n, k)
                assert symfun_minor_sum(n, k) == expected
        tables = [
            build_sym_table(12, m) for m in ("closed", "nested", "rec6", "rec7", "ratio")
        ]
        for n in range(1, 13):
            for k in range(1, n + 1):
                assert len({t[n, k] for t in tables}) == 1


def test_criterion_3b_five_way_agreement_to_60():
    with _Criterion(3, "five polynomial methods agree, 12<n<=60", 10):
        tables = [
            build_sym_table(60, m) for m in ("closed", "nested", "rec6", "rec7", "ratio")
        ]
        for n in range(13, 61):
            for k in range(1, n + 1):
                assert len({t[n, k] for t in tables}) == 1


def test_criterion_4_trace_and_top_identities():
    with _Criterion(4, "S_1 = n(n+1)/2 and S_n = 1 for n<=60"):
        for n in range(1, 61):
            assert symfun_closed(n, 1) == n * (n + 1) // 2
            assert symfun_closed(n, n) == 1


def test_criterion_5_binomial_identity():
    with _Criterion(5, "difference-recurrence binomial identity, 0<=k<=n<=60"):
        for n in range(61):
            for k in range(n + 1):
                assert binomial_identity_check(n, k)


def test_criterion_6_fibonacci_identity():
    with _Criterion(6, "sum of C(n+k,2k) equals F(2n+1) for n<=200", 5):
        for n in range(201):
            total = sum(symfun_closed(n, k) for k in range(n + 1))
            assert total == fib(2 * n + 1)


def test_criterion_7_characteristic_polynomial():
    with _Criterion(7, "Vieta charpoly matches det(lambda*I - A_n), n<=12"):
        for n in range(1, 13):
            p = charpoly(n)
            for lam in (-2, -1, 0, 1, 2):
                assert p(lam) == det_bareiss(char_matrix(n, lam))


def test_criterion_8_covariance_simulation():
    with _Criterion(8, "random-walk covariance within 0.2 of min matrix", 30):
        cfg = SimConfig(n=8, m=200000, sigma=1.0, seed=42)
        first = simulate_covariance(cfg)
        assert covariance_deviation(first) <= 0.2
        second = simulate_covariance(cfg)
        assert (first.matrix == second.matrix).all()


def test_criterion_9_ratio_recurrence_exactness():
    with _Criterion(9, "every ratio-recurrence division exact, n<=60"):
        for n in range(2, 61):
            for k in range(1, n):
                try:
                    symfun_ratio(n, k)
                except ArithmeticError as exc:  # pragma: no cover
                    pytest.fail(f"inexact division: {exc}")
