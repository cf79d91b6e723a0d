"""Rank-error measures NLRE and NGRE with their normalization constants.

Both measures compare an input ranking against two independent ideal
orderings (by relevance, by credibility) and turn the accumulated position
errors into a score in [0, 1], where 1 means no error of either kind.

The local variant couples the two error kinds at every rank through the
per-position penalty (mu + err_r)(nu + err_c) - mu*nu; the global variant
accumulates each kind separately and combines the two sums once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .model import CREDIBILITY, RELEVANCE, EvalUnit, MeasureConfig, StructuralError
from .rank_errors import ideal_positions, pairwise_errors


@dataclass(frozen=True)
class RankMeasureResult:
    """A raw accumulated error, its normalizer, and the normalized score.

    ``clamped`` is set when 1 - raw_error/normalizer fell outside [0, 1] and
    was clipped; it should never fire if the normalizer truly bounds the
    error, so it doubles as a tripwire.
    """

    raw_error: float
    normalizer: float
    score: float
    clamped: bool


def _check_pair(err_r: Sequence[int], err_c: Sequence[int]) -> None:
    if len(err_r) != len(err_c):
        raise StructuralError(
            f"error vectors differ in length: {len(err_r)} vs {len(err_c)}"
        )


def lre(err_r: Sequence[int], err_c: Sequence[int], mu: float, nu: float) -> float:
    """Local rank error: discounted sum of coupled per-position penalties.

    sum_i [(mu + err_r_i)(nu + err_c_i) - mu*nu] / log2(1 + i), i from 1.
    Zero when the list has a single document (empty vectors).
    """
    _check_pair(err_r, err_c)
    return sum(
        ((mu + r) * (nu + c) - mu * nu) / math.log2(1 + i)
        for i, (r, c) in enumerate(zip(err_r, err_c), start=1)
    )


def c_lre(n: int, mu: float, nu: float) -> float:
    """Normalization constant bounding the local rank error for n documents.

    sum over j = 0..floor(n/2 - 1) of
    [(n-2j-1)^2 + (mu+nu)(n-2j-1)] / (1 + log2(1+j)).
    Note the denominator differs deliberately from the running discount of
    the error sum; it corresponds to the odd input positions 1, 3, 5, ...
    where the worst-case drops land.
    """
    if n < 2:
        raise ValueError("normalizer is defined for n >= 2")
    jmax = math.floor(n / 2 - 1)
    return sum(
        ((n - 2 * j - 1) ** 2 + (mu + nu) * (n - 2 * j - 1)) / (1 + math.log2(1 + j))
        for j in range(jmax + 1)
    )


def gre(err_r: Sequence[int], err_c: Sequence[int], mu: float, nu: float) -> float:
    """Global rank error: the two error kinds accumulate separately.

    (1 + mu * sum_i err_r_i/log2(1+i)) * (1 + nu * sum_i err_c_i/log2(1+i)) - 1.
    """
    _check_pair(err_r, err_c)
    a = sum(r / math.log2(1 + i) for i, r in enumerate(err_r, start=1))
    b = sum(c / math.log2(1 + i) for i, c in enumerate(err_c, start=1))
    return (1 + mu * a) * (1 + nu * b) - 1


def c_gre(n: int, mu: float, nu: float) -> float:
    """Normalization constant bounding the global rank error for n documents.

    With s = sum over j = 0..floor(n/2 - 1) of (n-2j-1)/(1 + log2(1+j)):
    mu*nu*s^2 + (mu+nu)*s, the global error of a ranking whose discounted
    error sum reaches s in both dimensions at once.
    """
    if n < 2:
        raise ValueError("normalizer is defined for n >= 2")
    jmax = math.floor(n / 2 - 1)
    s = sum((n - 2 * j - 1) / (1 + math.log2(1 + j)) for j in range(jmax + 1))
    return mu * nu * s * s + (mu + nu) * s


def _normalize(raw: float, normalizer: float) -> RankMeasureResult:
    score = 1.0 - raw / normalizer
    clamped = score < 0.0 or score > 1.0
    if clamped:
        score = min(1.0, max(0.0, score))
    return RankMeasureResult(raw, normalizer, score, clamped)


def _unit_errors(unit: EvalUnit) -> tuple[tuple[int, ...], tuple[int, ...]]:
    err_r = pairwise_errors(ideal_positions(unit, RELEVANCE), unit)
    err_c = pairwise_errors(ideal_positions(unit, CREDIBILITY), unit)
    return err_r, err_c


def nlre(unit: EvalUnit, config: MeasureConfig) -> RankMeasureResult:
    """Normalized local rank error of a unit; 1 is error-free, 0 is worst."""
    if unit.n == 1:
        return RankMeasureResult(0.0, 1.0, 1.0, False)
    err_r, err_c = _unit_errors(unit)
    return _normalize(lre(err_r, err_c, config.mu, config.nu),
                      c_lre(unit.n, config.mu, config.nu))


def ngre(unit: EvalUnit, config: MeasureConfig) -> RankMeasureResult:
    """Normalized global rank error of a unit; 1 is error-free, 0 is worst."""
    if unit.n == 1:
        return RankMeasureResult(0.0, 1.0, 1.0, False)
    err_r, err_c = _unit_errors(unit)
    return _normalize(gre(err_r, err_c, config.mu, config.nu),
                      c_gre(unit.n, config.mu, config.nu))
