"""Exhaustive search for the worst attainable rank errors.

Verifies that the closed-form normalization constants really bound (and are
reached by) the raw errors, by sweeping every pair of ideal-position
assignments for a list of n documents. Both error formulas depend only on
the two ideal-position permutations relative to the input order, so the
search space is (n!)^2; permutations sharing an error vector are collapsed
first, which keeps n = 7 tractable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_N = 7


@dataclass(frozen=True)
class MaxErrorReport:
    """Exact maxima over all ideal-permutation pairs, with witnesses.

    Witness entries are the ideal positions of the documents at input ranks
    1..n (the first maximizing pair in lexicographic permutation order).
    """

    n: int
    mu: float
    nu: float
    max_lre: float
    argmax_lre: tuple[tuple[int, ...], tuple[int, ...]]
    max_gre: float
    argmax_gre: tuple[tuple[int, ...], tuple[int, ...]]


def _error_vector(positions: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        max(0, positions[i] - positions[i + 1]) for i in range(len(positions) - 1)
    )


@lru_cache(maxsize=None)
def _distinct_vectors(n: int) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    """Distinct error vectors over all n! permutations, with one witness each."""
    witnesses: dict[tuple[int, ...], tuple[int, ...]] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        vec = _error_vector(perm)
        if vec not in witnesses:
            witnesses[vec] = perm
    vectors = np.array(list(witnesses.keys()), dtype=np.float64)
    return tuple(witnesses.values()), vectors


def max_rank_errors(n: int, mu: float, nu: float) -> MaxErrorReport:
    """Exact maxima of the local and global rank errors for n documents.

    Expanding the local penalty gives, for discounted error sums a_r, a_c and
    cross term b = sum_i d_i * err_r_i * err_c_i:

        local  = nu * a_r + mu * a_c + b
        global = (1 + mu * a_r)(1 + nu * a_c) - 1

    which lets every pair be evaluated with two matrix products.
    """
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must lie in [2, {MAX_N}], got {n}")
    if mu < 0 or nu < 0 or mu + nu <= 0:
        raise ValueError("mu and nu must be non-negative with mu + nu > 0")

    perms, vectors = _distinct_vectors(n)
    discounts = 1.0 / np.log2(np.arange(2, n + 1, dtype=np.float64))
    a = vectors @ discounts
    b = (vectors * discounts) @ vectors.T

    local = nu * a[:, None] + mu * a[None, :] + b
    i, j = np.unravel_index(int(np.argmax(local)), local.shape)
    max_lre = float(local[i, j])
    argmax_lre = (perms[i], perms[j])

    glob = (1.0 + mu * a[:, None]) * (1.0 + nu * a[None, :]) - 1.0
    i, j = np.unravel_index(int(np.argmax(glob)), glob.shape)
    max_gre = float(glob[i, j])
    argmax_gre = (perms[i], perms[j])

    return MaxErrorReport(n, mu, nu, max_lre, argmax_lre, max_gre, argmax_gre)
