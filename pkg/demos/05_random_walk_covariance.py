"""The min matrix as a random-walk covariance.

A walk X_t = e_1 + ... + e_t whose steps are independent, zero-mean
and share a variance sigma^2 has Cov(X_i, X_j) = sigma^2 * min(i, j):
the overlap of two partial sums is exactly the shorter prefix. The
demo estimates the covariance from simulated paths and watches the
deviation from the min matrix shrink as the sample grows.
"""

import numpy as np

from minmatrix import SimConfig, covariance_deviation, simulate_covariance

n = 6
cfg = SimConfig(n=n, m=200000, sigma=1.0, seed=42, dist="gaussian")
estimate = simulate_covariance(cfg)

print(f"Empirical covariance from {cfg.m} paths of length {n}:\n")
with np.printoptions(precision=3, suppress=True):
    print(estimate.matrix)
print(f"\nmax deviation from min(i, j): {covariance_deviation(estimate):.4f}")

print("\nDeviation vs. sample size (seed fixed at 42):")
for m in (200, 2000, 20000, 200000):
    est = simulate_covariance(SimConfig(n=n, m=m, sigma=1.0, seed=42))
    print(f"   m = {m:6d}: {covariance_deviation(est):.4f}")

print("\nThe step distribution does not matter, only its variance:")
for dist in ("rademacher", "uniform", "gaussian"):
    est = simulate_covariance(SimConfig(n=n, m=100000, sigma=1.0, seed=7, dist=dist))
    print(f"   {dist:>10}: deviation {covariance_deviation(est):.4f}")
