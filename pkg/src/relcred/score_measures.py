"""Document-score measures: NWCS plus the CAM and WHAM aggregators.

These operate on per-document (relevance, credibility) score pairs or on the
values of two existing single-aspect measures, never on rank positions.
"""

from __future__ import annotations

import math
import warnings
from typing import Sequence

from .model import DegenerateInputWarning, EvalUnit

ScorePair = tuple[float, float]


def unit_scores(unit: EvalUnit) -> tuple[ScorePair, ...]:
    """A unit's per-position (relevance, credibility) grades as score pairs."""
    return tuple(
        (float(r), float(c)) for r, c in zip(unit.relevance, unit.credibility)
    )


def _check_scores(pairs: Sequence[ScorePair]) -> None:
    for zr, zc in pairs:
        if not (math.isfinite(zr) and math.isfinite(zc)):
            raise ValueError(f"scores must be finite, got ({zr}, {zc})")


def wcs(pairs: Sequence[ScorePair], lam: float) -> float:
    """Weighted cumulative score: discounted sum of blended score pairs.

    sum_i (lam * z_rel_i + (1 - lam) * z_cred_i) / log2(1 + i), i from 1.
    """
    _check_scores(pairs)
    return sum(
        (lam * zr + (1 - lam) * zc) / math.log2(1 + i)
        for i, (zr, zc) in enumerate(pairs, start=1)
    )


def iwcs(pairs: Sequence[ScorePair], lam: float) -> float:
    """Best wcs attainable by reordering the same documents.

    Sorting by blended score descending maximizes the discounted sum because
    the discounts strictly decrease; ties cost nothing either way.
    """
    _check_scores(pairs)
    ideal = sorted(pairs, key=lambda p: -(lam * p[0] + (1 - lam) * p[1]))
    return wcs(ideal, lam)


def nwcs(pairs: Sequence[ScorePair], lam: float) -> float:
    """Normalized weighted cumulative score, wcs/iwcs in [0, 1].

    When every blended score is zero the ideal value is 0 and any order is
    vacuously ideal; returns 1 and warns.
    """
    ideal = iwcs(pairs, lam)
    if ideal == 0.0:
        warnings.warn(
            "all blended scores are zero; ranking is vacuously ideal",
            DegenerateInputWarning,
            stacklevel=2,
        )
        return 1.0
    return wcs(pairs, lam) / ideal


def nwcs_unit(unit: EvalUnit, lam: float) -> float:
    """nwcs over a unit's grades taken directly as scores."""
    return nwcs(unit_scores(unit), lam)


def cam(m_rel: float, m_cred: float, lam: float) -> float:
    """Convex blend of a relevance-only and a credibility-only measure value."""
    return lam * m_rel + (1 - lam) * m_cred


def wham(m_rel: float, m_cred: float, lam: float) -> float:
    """Weighted harmonic mean of two measure values; zero if either is zero.

    Coincides with the F-1 combination of the two values at lam = 0.5.
    """
    if m_rel == 0 or m_cred == 0:
        return 0.0
    return 1.0 / (lam / m_rel + (1 - lam) / m_cred)
