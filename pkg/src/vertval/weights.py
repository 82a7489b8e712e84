"""Importance weights for generated samples via kernel mean matching.

The estimator matches the RBF kernel mean of the weighted generated sample
to that of the held-out sample on the 1-D split-property values:

    min_beta  1/2 beta' K beta - kappa' beta
    s.t.      0 <= beta_i <= B,   |sum(beta) - n_gen| <= n_gen * slack

with K the kernel matrix over generated values and kappa_i the scaled
cross-kernel sums against held-out values. Duplicate values are collapsed
before solving: rows of K coincide within a duplicate group, so an optimal
solution exists that is constant per group, and the reduced problem over
group sums is exactly equivalent while shrinking the QP from n_gen to the
number of distinct values (graph properties are often integer-valued).

The solver is plain projected gradient descent with step 1/L, L being the
Gershgorin row-sum bound on K, and an exact Euclidean projection onto the
box-plus-sum-slab feasible set. Weights are rescaled to mean 1 before being
returned; downstream statistics (weighted KS, effective sample size) are
scale-invariant, so this only stabilizes reporting.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import AllZeroWeights, DegenerateHeld, NonConvergenceWarning

__all__ = [
    "KmmConfig",
    "KmmResult",
    "WeightedSample",
    "rbf_kernel",
    "estimate_weights",
    "effective_sample_size",
]


@dataclass(frozen=True)
class KmmConfig:
    """Kernel and solver parameters for weight estimation.

    ``bandwidth`` is either the string "ten-over-sigma", which sets the RBF
    gamma to 10 / std(held values), or an explicit positive gamma. Note the
    convention: gamma multiplies the squared distance directly,
    k(x, y) = exp(-gamma * (x - y)^2).
    """

    bandwidth: float | str = "ten-over-sigma"
    weight_bound: float = 1000.0
    sum_slack: float = 0.05
    max_iters: int = 5000
    tolerance: float = 1e-7

    def __post_init__(self):
        if isinstance(self.bandwidth, str):
            if self.bandwidth != "ten-over-sigma":
                raise ValueError(f"unknown bandwidth rule {self.bandwidth!r}")
        elif not self.bandwidth > 0:
            raise ValueError(f"explicit bandwidth must be positive, got {self.bandwidth}")
        if not self.weight_bound > 0:
            raise ValueError(f"weight_bound must be positive, got {self.weight_bound}")
        if not 0.0 < self.sum_slack < 1.0:
            raise ValueError(f"sum_slack must be in (0, 1), got {self.sum_slack}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")


@dataclass(frozen=True)
class KmmResult:
    weights: np.ndarray = field(repr=False)
    converged: bool
    iterations: int
    objective: float
    gamma: float


@dataclass(frozen=True)
class WeightedSample:
    """A generated graph's property vector with its importance weight."""

    property_vector: np.ndarray
    weight: float
    graph_id: str = ""

    def __post_init__(self):
        if not (np.isfinite(self.weight) and self.weight >= 0):
            raise ValueError(f"weight must be finite and >= 0, got {self.weight}")


def rbf_kernel(x, y, gamma: float):
    """exp(-gamma * (x - y)^2); in (0, 1] for finite inputs."""
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.exp(-gamma * (x - y) ** 2)


def _project_box_slab(x: np.ndarray, upper: np.ndarray, lo: float, hi: float) -> np.ndarray:
    """Exact Euclidean projection onto {0 <= y <= upper, lo <= sum(y) <= hi}.

    The projection is clip(x - lam, 0, upper) for a scalar shift lam found
    by bisection; sum(clip(x - lam)) is non-increasing in lam.
    """
    y = np.clip(x, 0.0, upper)
    total = float(y.sum())
    if lo <= total <= hi:
        return y
    target = hi if total > hi else lo
    lam_lo = float(np.min(x - upper))  # sum == sum(upper) >= target
    lam_hi = float(np.max(x))  # sum == 0 <= target
    for _ in range(200):
        lam = 0.5 * (lam_lo + lam_hi)
        if float(np.clip(x - lam, 0.0, upper).sum()) > target:
            lam_lo = lam
        else:
            lam_hi = lam
    for lam in (lam_hi, lam_lo):
        y = np.clip(x - lam, 0.0, upper)
        if lo <= float(y.sum()) <= hi:
            return y
    return np.clip(x - lam_hi, 0.0, upper)


def estimate_weights(
    gen_z, held_z, cfg: KmmConfig | None = None, *, full_result: bool = False
):
    """Mean-1 importance weights for generated values against held-out values.

    Returns the weight array, or a KmmResult when ``full_result`` is set.
    Emits NonConvergenceWarning (and returns the best iterate) if the
    iteration cap is reached before the step tolerance.
    """
    cfg = cfg or KmmConfig()
    gen = np.asarray(gen_z, dtype=float).ravel()
    held = np.asarray(held_z, dtype=float).ravel()
    if gen.size == 0 or held.size == 0:
        raise ValueError("gen_z and held_z must be non-empty")
    if not (np.all(np.isfinite(gen)) and np.all(np.isfinite(held))):
        raise ValueError("gen_z and held_z must be finite")

    if isinstance(cfg.bandwidth, str):
        sigma = float(held.std())
        if sigma == 0.0:
            raise DegenerateHeld(
                "held-out values are constant; pass an explicit bandwidth"
            )
        gamma = 10.0 / sigma
    else:
        gamma = float(cfg.bandwidth)

    n_gen = gen.size
    gen_vals, gen_counts = np.unique(gen, return_counts=True)
    held_vals, held_counts = np.unique(held, return_counts=True)

    K = rbf_kernel(gen_vals[:, None], gen_vals[None, :], gamma)
    kappa = (n_gen / held.size) * (
        rbf_kernel(gen_vals[:, None], held_vals[None, :], gamma) @ held_counts
    )

    upper = gen_counts * cfg.weight_bound
    lo = n_gen * (1.0 - cfg.sum_slack)
    hi = n_gen * (1.0 + cfg.sum_slack)
    if float(upper.sum()) < lo:
        raise ValueError(
            f"weight_bound={cfg.weight_bound} cannot satisfy the sum constraint"
        )
    lipschitz = float(np.max(K.sum(axis=1)))

    def objective(s):
        return float(0.5 * s @ (K @ s) - kappa @ s)

    s = _project_box_slab(gen_counts.astype(float), upper, lo, hi)
    obj = objective(s)
    converged = False
    iterations = 0
    for iterations in range(1, cfg.max_iters + 1):
        grad = K @ s - kappa
        s_next = _project_box_slab(s - grad / lipschitz, upper, lo, hi)
        obj_next = objective(s_next)
        # descent step with exact projection cannot increase the objective
        assert obj_next <= obj + 1e-9 * (1.0 + abs(obj)), "objective increased"
        step = float(np.max(np.abs(s_next - s)))
        s, obj = s_next, obj_next
        if step <= cfg.tolerance * max(1.0, float(np.max(np.abs(s)))):
            converged = True
            break
    if not converged:
        warnings.warn(
            f"weight solver stopped at max_iters={cfg.max_iters}; "
            "returning the best iterate",
            NonConvergenceWarning,
            stacklevel=2,
        )

    beta_per_value = s / gen_counts
    weights = beta_per_value[np.searchsorted(gen_vals, gen)]
    weights = weights / weights.mean()
    if full_result:
        return KmmResult(
            weights=weights,
            converged=converged,
            iterations=iterations,
            objective=obj,
            gamma=gamma,
        )
    return weights


def effective_sample_size(weights) -> float:
    """(sum W)^2 / sum W^2; between 1 and len(weights)."""
    w = np.asarray(weights, dtype=float).ravel()
    if w.size == 0:
        raise AllZeroWeights("effective sample size of an empty weight vector")
    if not np.all(np.isfinite(w)) or np.any(w < 0):
        raise ValueError("weights must be finite and non-negative")
    sum_sq = float((w**2).sum())
    if sum_sq == 0.0:
        raise AllZeroWeights("all weights are zero")
    return float(w.sum()) ** 2 / sum_sq
