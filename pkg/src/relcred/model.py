"""Core data model: judged documents, ranked lists, measure configuration.

All types are immutable after construction and safe to share across threads.
Grades live on a 1-4 integer scale; grade 0 is reserved for documents that
were ranked but never judged (the default unjudged policy).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

GRADE_MIN = 1
GRADE_MAX = 4

RELEVANCE = "relevance"
CREDIBILITY = "credibility"
DIMENSIONS = (RELEVANCE, CREDIBILITY)


class StructuralError(ValueError):
    """Input violates a structural invariant (duplicates, empty list, mismatch)."""


class DegenerateInputWarning(UserWarning):
    """A measure hit a degenerate denominator and fell back to its convention."""


def check_grade(value: int, what: str = "grade") -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise StructuralError(f"{what} must be an integer, got {value!r}")
    if not GRADE_MIN <= value <= GRADE_MAX:
        raise StructuralError(
            f"{what} {value} outside the {GRADE_MIN}-{GRADE_MAX} scale"
        )
    return value


def check_dimension(dimension: str) -> str:
    if dimension not in DIMENSIONS:
        raise ValueError(f"unknown dimension {dimension!r}, expected one of {DIMENSIONS}")
    return dimension


@dataclass(frozen=True)
class Judgment:
    """One assessor's graded relevance and credibility for one document."""

    query_id: str
    assessor_id: str
    doc_id: str
    relevance: int
    credibility: int

    def __post_init__(self) -> None:
        check_grade(self.relevance, "relevance grade")
        check_grade(self.credibility, "credibility grade")


@dataclass(frozen=True)
class RankedList:
    """An ordered sequence of doc ids for one (query, assessor) unit; position 1 = top."""

    query_id: str
    assessor_id: str
    docs: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.docs) == 0:
            raise StructuralError("ranked list must contain at least one document")
        if len(set(self.docs)) != len(self.docs):
            dupes = sorted({d for d in self.docs if self.docs.count(d) > 1})
            raise StructuralError(f"duplicate documents in ranked list: {dupes}")

    def __len__(self) -> int:
        return len(self.docs)


@dataclass(frozen=True)
class MeasureConfig:
    """Shared measure parameters with the defaults used throughout.

    mu/nu weight the two error kinds in the rank-error measures, lam trades
    relevance against credibility in the score measures, cutoff_k bounds
    position-limited measures, binary_threshold maps grades >= threshold to 1,
    unjudged_grade is the grade substituted for unjudged documents (0 keeps
    them out of the judged pool), gain selects the NDCG gain function.
    """

    mu: float = 0.5
    nu: float = 0.5
    lam: float = 0.5
    cutoff_k: int = 5
    binary_threshold: int = 3
    unjudged_grade: int = 0
    gain: str = "linear"

    def __post_init__(self) -> None:
        if self.mu < 0 or self.nu < 0:
            raise ValueError("mu and nu must be non-negative")
        if self.mu + self.nu <= 0:
            raise ValueError("mu + nu must be positive")
        if not 0.0 <= self.lam <= 1.0:
            raise ValueError("lambda must lie in [0, 1]")
        if self.cutoff_k < 1:
            raise ValueError("cutoff_k must be a positive integer")
        if self.unjudged_grade != 0:
            check_grade(self.unjudged_grade, "unjudged_grade")
        if self.gain not in ("linear", "exponential"):
            raise ValueError(f"unknown gain {self.gain!r}")


@dataclass(frozen=True)
class EvalUnit:
    """A validated (query, assessor) ranked list with grades resolved per document.

    ``relevance[i]`` and ``credibility[i]`` belong to ``docs[i]``. Grade 0
    marks a document resolved through the default unjudged policy.
    ``unretrieved`` holds judgments for this (query, assessor) whose documents
    do not appear in the list; they extend the judged pool for recall-style
    denominators.
    """

    query_id: str
    assessor_id: str
    docs: tuple[str, ...]
    relevance: tuple[int, ...]
    credibility: tuple[int, ...]
    unretrieved: tuple[Judgment, ...] = field(default=())

    @property
    def n(self) -> int:
        return len(self.docs)

    def grades(self, dimension: str) -> tuple[int, ...]:
        check_dimension(dimension)
        return self.relevance if dimension == RELEVANCE else self.credibility

    def grade_of(self, doc_id: str, dimension: str) -> int:
        grades = self.grades(dimension)
        try:
            return grades[self.docs.index(doc_id)]
        except ValueError:
            raise KeyError(f"document {doc_id!r} not in unit "
                           f"({self.query_id}, {self.assessor_id})") from None

    def key(self) -> tuple[str, str]:
        return (self.query_id, self.assessor_id)


def validate_unit(
    ranked: RankedList | EvalUnit,
    judgments: Iterable[Judgment] = (),
    unjudged_grade: int = 0,
) -> EvalUnit:
    """Join a ranked list with its judgments into an evaluation unit.

    Judgments for other (query, assessor) pairs are ignored; judgments for
    this pair whose document is not ranked go into ``unretrieved``. Documents
    without a judgment receive ``unjudged_grade`` in both dimensions.
    Validating an already-built unit returns it unchanged.
    """
    if isinstance(ranked, EvalUnit):
        return ranked
    if unjudged_grade != 0:
        check_grade(unjudged_grade, "unjudged_grade")

    by_doc: dict[str, Judgment] = {}
    for j in judgments:
        if (j.query_id, j.assessor_id) != (ranked.query_id, ranked.assessor_id):
            continue
        if j.doc_id in by_doc:
            raise StructuralError(
                f"duplicate judgment for ({j.query_id}, {j.assessor_id}, {j.doc_id})"
            )
        by_doc[j.doc_id] = j

    rel, cred = [], []
    for doc in ranked.docs:
        j = by_doc.pop(doc, None)
        if j is None:
            rel.append(unjudged_grade)
            cred.append(unjudged_grade)
        else:
            rel.append(j.relevance)
            cred.append(j.credibility)

    leftover = tuple(sorted(by_doc.values(), key=lambda j: j.doc_id))
    return EvalUnit(
        query_id=ranked.query_id,
        assessor_id=ranked.assessor_id,
        docs=ranked.docs,
        relevance=tuple(rel),
        credibility=tuple(cred),
        unretrieved=leftover,
    )
