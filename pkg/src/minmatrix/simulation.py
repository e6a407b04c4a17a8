"""Monte-Carlo check that the min matrix is a random-walk covariance.

A walk X_t = e_1 + ... + e_t with independent zero-mean steps of common
variance sigma^2 has Cov(X_i, X_j) = sigma^2 * min(i, j). This module
estimates the covariance empirically and measures the deviation from
that target. It is the only part of the package that uses floating
point; everything else is exact.
"""

from dataclasses import dataclass

import numpy as np

DISTRIBUTIONS = ("rademacher", "uniform", "gaussian")


@dataclass(frozen=True)
class SimConfig:
    """Parameters of a covariance estimation run.

    Reproducibility contract: results are a deterministic function of
    (seed, chunks); each chunk of sample paths draws from its own
    spawned substream.
    """

    n: int
    m: int
    sigma: float = 1.0
    seed: int = 0
    dist: str = "gaussian"
    chunks: int = 8

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"process length must be >= 1, got {self.n}")
        if self.m < 2:
            raise ValueError(f"sample count must be >= 2, got {self.m}")
        if not self.sigma > 0:
            raise ValueError(f"sigma must be > 0, got {self.sigma}")
        if self.dist not in DISTRIBUTIONS:
            raise ValueError(f"dist must be one of {DISTRIBUTIONS}, got {self.dist!r}")
        if self.chunks < 1:
            raise ValueError(f"chunks must be >= 1, got {self.chunks}")


@dataclass(frozen=True)
class CovEstimate:
    """Empirical covariance matrix with its sample count and config echo."""

    matrix: np.ndarray
    m: int
    config: SimConfig


def _draw_steps(rng, count, n, sigma, dist):
    if dist == "rademacher":
        return sigma * (2.0 * rng.integers(0, 2, size=(count, n)) - 1.0)
    if dist == "uniform":
        half_width = sigma * np.sqrt(3.0)
        return rng.uniform(-half_width, half_width, size=(count, n))
    return rng.normal(0.0, sigma, size=(count, n))


def simulate_covariance(cfg):
    """Estimate the covariance of the cumulative-sum process.

    Steps are generated with exactly zero mean, so the estimator is the
    uncentered (1/m) * sum of outer products. Chunk accumulators are
    merged by plain summation; the result depends on the seed and the
    chunk count only.
    """
    if not isinstance(cfg, SimConfig):
        cfg = SimConfig(**cfg)
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.chunks)
    base, extra = divmod(cfg.m, cfg.chunks)
    accumulator = np.zeros((cfg.n, cfg.n))
    for index, child in enumerate(children):
        count = base + (1 if index < extra else 0)
        if count == 0:
            continue
        rng = np.random.default_rng(child)
        steps = _draw_steps(rng, count, cfg.n, cfg.sigma, cfg.dist)
        paths = np.cumsum(steps, axis=1)
        accumulator += paths.T @ paths
    matrix = accumulator / cfg.m
    matrix = (matrix + matrix.T) / 2.0  # kill float round-off asymmetry
    return CovEstimate(matrix=matrix, m=cfg.m, config=cfg)


def min_matrix_float(n):
    """The min matrix as a float array, the simulation's target."""
    idx = np.arange(1, n + 1)
    return np.minimum.outer(idx, idx).astype(float)


def covariance_deviation(est):
    """Max absolute entrywise gap between the sigma^2-normalized estimate
    and the min matrix."""
    target = min_matrix_float(est.config.n)
    normalized = est.matrix / est.config.sigma**2
    return float(np.max(np.abs(normalized - target)))
