"""Projection of 1-D property values onto (0, 1) via a generalized ECDF.

Each test value is snapped to its nearest base value and spread across the
ECDF step of that base value. The deterministic spread places the points of
an equivalence class on a centered lattice, so projecting the base dataset
onto itself yields exactly {(i - 0.5)/n : i = 1..n}. A randomized spread is
available behind a flag for comparison, but the lattice is the production
path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyBase, EmptyTest
from .rng import index_stream

__all__ = ["EcdfModel", "fit_ecdf", "project"]


@dataclass(frozen=True)
class EcdfModel:
    """Left/right empirical CDF levels of a base dataset."""

    unique_values: np.ndarray = field(repr=False)
    counts: np.ndarray = field(repr=False)
    size: int

    def f_minus(self, x) -> np.ndarray:
        """Left ECDF: fraction of base values strictly below x."""
        x = np.asarray(x, dtype=float)
        idx = np.searchsorted(self.unique_values, x, side="left")
        return self._cum_below[idx] / self.size

    def f_plus(self, x) -> np.ndarray:
        """Right ECDF: fraction of base values at or below x."""
        x = np.asarray(x, dtype=float)
        idx = np.searchsorted(self.unique_values, x, side="right")
        return self._cum_below[idx] / self.size

    @property
    def _cum_below(self) -> np.ndarray:
        return np.concatenate(([0], np.cumsum(self.counts)))


def fit_ecdf(base) -> EcdfModel:
    """Fit the left/right ECDF levels of a non-empty base dataset."""
    values = np.asarray(base, dtype=float).ravel()
    if values.size == 0:
        raise EmptyBase("cannot fit an ECDF on an empty base dataset")
    if not np.all(np.isfinite(values)):
        raise ValueError("base dataset contains non-finite values")
    unique, counts = np.unique(values, return_counts=True)
    return EcdfModel(unique_values=unique, counts=counts, size=values.size)


def _nearest_base_index(model: EcdfModel, values: np.ndarray) -> np.ndarray:
    """Index of the closest base value; distance ties pick the smaller value."""
    uv = model.unique_values
    last = uv.size - 1
    pos = np.searchsorted(uv, values, side="left")
    left = np.clip(pos - 1, 0, last)
    right = np.clip(pos, 0, last)
    pick_left = np.abs(values - uv[left]) <= np.abs(uv[right] - values)
    return np.where(pick_left, left, right)


def project(model: EcdfModel, test, *, randomize: bool = False, seed: int | None = None) -> np.ndarray:
    """Map test values into (0, 1) over the ECDF steps of their nearest base values.

    All test values sharing a nearest base value form an equivalence class;
    the class is ordered by value (ties by input position) and spread over
    the [F-, F+] interval of that base value on the centered lattice
    (rank - 0.5)/class_size. With ``randomize=True`` the lattice offsets are
    replaced by uniform draws from the (seed, index) stream.
    """
    values = np.asarray(test, dtype=float).ravel()
    if values.size == 0:
        raise EmptyTest("cannot project an empty test dataset")
    if not np.all(np.isfinite(values)):
        raise ValueError("test dataset contains non-finite values")
    if randomize and seed is None:
        raise ValueError("randomized projection requires an explicit seed")

    group = _nearest_base_index(model, values)
    cum_below = model._cum_below[:-1]

    # order by (group, value, original position); ranks are per-group
    order = np.lexsort((np.arange(values.size), values, group))
    sorted_group = group[order]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(sorted_group)) + 1))
    sizes = np.diff(np.concatenate((starts, [values.size])))

    rank = np.empty(values.size, dtype=float)  # 1-based rank within the class
    class_size = np.empty(values.size, dtype=float)
    for start, size in zip(starts, sizes):
        rank[order[start : start + size]] = np.arange(1, size + 1)
        class_size[order[start : start + size]] = size

    if randomize:
        rng = index_stream(seed, 0)
        offsets = (rng.integers(0, 1 << 53, size=values.size) + 0.5) / (1 << 53)
        spread = model.counts[group] * offsets
    else:
        # multiply before dividing: when the class is the base value itself
        # (counts == class_size) the quotient is exactly rank - 0.5, which
        # makes self-projection reproduce the lattice bit for bit
        spread = model.counts[group] * (rank - 0.5) / class_size

    return (cum_below[group] + spread) / model.size
