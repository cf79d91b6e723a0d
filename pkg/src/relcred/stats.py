"""Spearman rank correlation with average ranks for ties."""

from __future__ import annotations

import warnings
from typing import Sequence

import numpy as np

from .model import DegenerateInputWarning


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based fractional ranks; tied values share their average rank."""
    a = np.asarray(values, dtype=np.float64)
    order = np.argsort(a, kind="mergesort")
    ranks = np.empty(a.size, dtype=np.float64)
    i = 0
    while i < a.size:
        j = i
        while j + 1 < a.size and a[order[j + 1]] == a[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of the two sequences' average-fractional ranks.

    Returns nan (with a warning) when fewer than two pairs are given or when
    either sequence has zero rank variance.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        warnings.warn("spearman undefined for fewer than two pairs",
                      DegenerateInputWarning, stacklevel=2)
        return float("nan")
    rx = average_ranks(x)
    ry = average_ranks(y)
    rx -= rx.mean()
    ry -= ry.mean()
    denom = np.sqrt(np.sum(rx * rx) * np.sum(ry * ry))
    if denom == 0.0:
        warnings.warn("spearman undefined: zero rank variance",
                      DegenerateInputWarning, stacklevel=2)
        return float("nan")
    return float(np.sum(rx * ry) / denom)
