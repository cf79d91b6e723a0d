"""Single-aspect baseline measures: P@k, recall, AP, MRR, bPref, F-1, G, NDCG.

Binary measures run over a BinaryJudgedList whose labels are 1 (positive),
0 (judged negative) or None (unjudged). AP-style measures treat unjudged
positions as non-relevant; bPref skips them; confusion counts exclude them.
Degenerate denominators yield a conventional value plus a
DegenerateInputWarning instead of raising, so batch runs never abort.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .model import DegenerateInputWarning, EvalUnit, check_dimension


def binarize(grade: int, threshold: int = 3) -> int:
    """1 if the grade reaches the threshold, else 0."""
    return 1 if grade >= threshold else 0


@dataclass(frozen=True)
class BinaryJudgedList:
    """Binarized labels of a ranked list plus the judged pool totals.

    ``judged_positive_total`` / ``judged_negative_total`` count the whole
    judged pool, which may exceed the labels when judged documents were not
    retrieved.
    """

    labels: tuple[int | None, ...]
    judged_positive_total: int
    judged_negative_total: int

    def __post_init__(self) -> None:
        in_list = sum(1 for x in self.labels if x == 1)
        if self.judged_positive_total < in_list:
            raise ValueError("judged pool holds fewer positives than the list")
        if self.judged_negative_total < sum(1 for x in self.labels if x == 0):
            raise ValueError("judged pool holds fewer negatives than the list")

    @classmethod
    def from_labels(cls, labels: Sequence[int | None]) -> "BinaryJudgedList":
        """Pool equals the judged labels themselves (fully self-contained list)."""
        t = tuple(labels)
        return cls(t, sum(1 for x in t if x == 1), sum(1 for x in t if x == 0))

    @classmethod
    def from_unit(
        cls, unit: EvalUnit, dimension: str, threshold: int = 3
    ) -> "BinaryJudgedList":
        """Binarize one dimension of a unit; grade 0 stays unjudged (None)."""
        check_dimension(dimension)
        labels = tuple(
            None if g == 0 else binarize(g, threshold) for g in unit.grades(dimension)
        )
        pos = sum(1 for x in labels if x == 1)
        neg = sum(1 for x in labels if x == 0)
        for j in unit.unretrieved:
            grade = j.relevance if dimension == "relevance" else j.credibility
            if binarize(grade, threshold):
                pos += 1
            else:
                neg += 1
        return cls(labels, pos, neg)


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self) -> None:
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @classmethod
    def from_judged_list(cls, judged: BinaryJudgedList) -> "ConfusionCounts":
        """Retrieval as classification: ranked = predicted positive.

        Only the judged pool participates; unjudged ranked documents are
        excluded entirely.
        """
        tp = sum(1 for x in judged.labels if x == 1)
        fp = sum(1 for x in judged.labels if x == 0)
        return cls(tp, fp, judged.judged_positive_total - tp,
                   judged.judged_negative_total - fp)


def _warn_degenerate(what: str) -> None:
    warnings.warn(f"degenerate {what}; using conventional value",
                  DegenerateInputWarning, stacklevel=3)


def precision_at_k(judged: BinaryJudgedList, k: int) -> float:
    """Positives among the first k positions, divided by k."""
    if not 1 <= k <= len(judged.labels):
        raise ValueError(f"k={k} out of range for list of {len(judged.labels)}")
    return sum(1 for x in judged.labels[:k] if x == 1) / k


def recall_at_k(judged: BinaryJudgedList, k: int) -> float:
    """Positives among the first k positions over all judged positives."""
    if judged.judged_positive_total == 0:
        _warn_degenerate("recall denominator (no judged positives)")
        return 0.0
    return sum(1 for x in judged.labels[:k] if x == 1) / judged.judged_positive_total


def average_precision(judged: BinaryJudgedList) -> float:
    """Mean of precision values at positive-bearing ranks over the pool size.

    Unretrieved positives contribute zero; unjudged positions count as
    non-relevant.
    """
    r_total = judged.judged_positive_total
    if r_total == 0:
        _warn_degenerate("average precision (no judged positives)")
        return 0.0
    seen = 0
    acc = 0.0
    for rank, label in enumerate(judged.labels, start=1):
        if label == 1:
            seen += 1
            acc += seen / rank
    return acc / r_total


def mrr(judged: BinaryJudgedList) -> float:
    """Reciprocal rank of the first positive; 0 when none is retrieved."""
    for rank, label in enumerate(judged.labels, start=1):
        if label == 1:
            return 1.0 / rank
    return 0.0


def bpref(judged: BinaryJudgedList) -> float:
    """Judged-only preference measure; unjudged positions are skipped.

    Each retrieved positive contributes 1 - (judged negatives above it,
    capped) / min(R, N); with no judged negatives every retrieved positive
    contributes 1.
    """
    r_total = judged.judged_positive_total
    n_total = judged.judged_negative_total
    if r_total == 0:
        _warn_degenerate("bpref (no judged positives)")
        return 0.0
    acc = 0.0
    negatives_above = 0
    bound = min(r_total, n_total)
    for label in judged.labels:
        if label == 1:
            acc += 1.0 if n_total == 0 else 1.0 - min(negatives_above, bound) / bound
        elif label == 0:
            negatives_above += 1
    return acc / r_total


def _precision_recall(c: ConfusionCounts) -> tuple[float, float]:
    if c.tp + c.fp == 0 or c.tp + c.fn == 0:
        _warn_degenerate("precision/recall (empty denominator)")
    p = c.tp / (c.tp + c.fp) if c.tp + c.fp else 0.0
    r = c.tp / (c.tp + c.fn) if c.tp + c.fn else 0.0
    return p, r


def f1(c: ConfusionCounts) -> float:
    """Harmonic mean of precision and recall; 0 on empty denominators."""
    p, r = _precision_recall(c)
    return 2 * p * r / (p + r) if p + r else 0.0


def g_measure(c: ConfusionCounts) -> float:
    """Geometric mean of precision and recall; 0 on empty denominators."""
    p, r = _precision_recall(c)
    return math.sqrt(p * r)


def _gain(grade: float, gain: str) -> float:
    if gain == "linear":
        return float(grade)
    if gain == "exponential":
        return 2.0 ** grade - 1.0
    raise ValueError(f"unknown gain {gain!r}")


def ndcg(grades: Sequence[float], gain: str = "linear", k: int | None = None) -> float:
    """Normalized discounted cumulative gain of grades in rank order.

    The ideal ordering is the same grades sorted descending. With no nonzero
    gain anywhere the ranking is vacuously ideal: returns 1 and warns.
    """
    if k is None:
        k = len(grades)
    dcg = sum(
        _gain(g, gain) / math.log2(1 + i) for i, g in enumerate(grades[:k], start=1)
    )
    ideal_grades = sorted(grades, reverse=True)
    idcg = sum(
        _gain(g, gain) / math.log2(1 + i)
        for i, g in enumerate(ideal_grades[:k], start=1)
    )
    if idcg == 0.0:
        _warn_degenerate("ndcg (all gains zero)")
        return 1.0
    return dcg / idcg
