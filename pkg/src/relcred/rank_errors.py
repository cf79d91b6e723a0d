"""Ideal rank positions and the pairwise errors feeding the rank-error measures.

A document's ideal position in a dimension is its 1-based rank after a stable
descending sort of the list by that dimension's grade. An error at input rank
i is the truncated drop in ideal position between the documents at ranks i
and i+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .model import EvalUnit, RankedList, StructuralError, check_dimension


def monus(a: float, b: float) -> float:
    """Truncated subtraction: a - b when a > b, else 0."""
    return a - b if a > b else 0


def rank_by_grade(grades: Sequence[float]) -> tuple[int, ...]:
    """Ideal 1-based position for each input index, sorting grades descending.

    Ties keep input order (stable), so a block of equal grades is error-free.
    Only the ordering of the grades matters, never their magnitudes.
    """
    order = sorted(range(len(grades)), key=lambda i: -grades[i])
    positions = [0] * len(grades)
    for pos, idx in enumerate(order, start=1):
        positions[idx] = pos
    return tuple(positions)


@dataclass(frozen=True)
class IdealPositions:
    """Mapping doc_id -> rank in the ideal ordering for one dimension."""

    dimension: str
    position_of: Mapping[str, int]

    def __post_init__(self) -> None:
        check_dimension(self.dimension)
        n = len(self.position_of)
        if set(self.position_of.values()) != set(range(1, n + 1)):
            raise StructuralError("ideal positions must be a bijection onto 1..n")


def ideal_positions(unit: EvalUnit, dimension: str) -> IdealPositions:
    """Build the ideal ordering of a unit's documents by one dimension."""
    positions = rank_by_grade(unit.grades(dimension))
    return IdealPositions(dimension, dict(zip(unit.docs, positions)))


def pairwise_errors(
    ideal: IdealPositions, ranked: RankedList | EvalUnit
) -> tuple[int, ...]:
    """Error vector over adjacent input ranks; empty for a single document.

    Entry i (0-based) is monus(ideal position at rank i+1, ideal position at
    rank i+2). The ideal mapping must cover exactly the ranked documents.
    """
    docs = ranked.docs
    if set(ideal.position_of) != set(docs):
        raise StructuralError("ideal positions built over a different document set")
    pos = [ideal.position_of[d] for d in docs]
    return tuple(int(monus(pos[i], pos[i + 1])) for i in range(len(pos) - 1))
