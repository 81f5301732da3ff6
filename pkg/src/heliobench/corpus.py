"""Ingestion and indexing of journal impact-indicator tables.

The expected input is a UTF-8 CSV with header

    journal,category,impact_factor,eigenfactor,immediacy

one row per (journal, category) pair. A journal listed under several
categories contributes one row per category. Empty indicator cells mean
"value not available" and are kept as missing, never coerced to zero.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import IO, Iterable, Mapping

from .errors import CategoryNotFoundError, CorpusFormatError, DuplicateRecordError

CSV_COLUMNS = ("journal", "category", "impact_factor", "eigenfactor", "immediacy")


class Indicator(enum.Enum):
    """The three per-journal prestige indicators handled by the package."""

    IMPACT_FACTOR = "impact_factor"
    EIGENFACTOR = "eigenfactor"
    IMMEDIACY = "immediacy"

    @property
    def code(self) -> str:
        """Short CLI code: if, es or ii."""
        return _CODES[self]

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_code(cls, code: str) -> "Indicator":
        try:
            return _FROM_CODE[code.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown indicator code: {code!r} (use if, es or ii)") from None


_CODES = {
    Indicator.IMPACT_FACTOR: "if",
    Indicator.EIGENFACTOR: "es",
    Indicator.IMMEDIACY: "ii",
}
_LABELS = {
    Indicator.IMPACT_FACTOR: "Impact Factor",
    Indicator.EIGENFACTOR: "Eigenfactor Score",
    Indicator.IMMEDIACY: "Immediacy Index",
}
_FROM_CODE = {code: ind for ind, code in _CODES.items()}


@dataclass(frozen=True)
class JournalRecord:
    """One journal's membership in one category plus its indicator values.

    Missing indicators are None. Present values are finite and >= 0.
    """

    journal: str
    category: str
    impact_factor: float | None = None
    eigenfactor: float | None = None
    immediacy: float | None = None

    def value(self, indicator: Indicator) -> float | None:
        return getattr(self, indicator.value)


class Corpus:
    """Immutable collection of journal records indexed by category."""

    def __init__(self, records: Iterable[JournalRecord]):
        self._records = tuple(records)
        index: dict[str, list[JournalRecord]] = {}
        seen: set[tuple[str, str]] = set()
        for rec in self._records:
            _check_record(rec)
            key = (rec.journal, rec.category)
            if key in seen:
                raise DuplicateRecordError(f"duplicate (journal, category) pair: {key!r}")
            seen.add(key)
            index.setdefault(rec.category, []).append(rec)
        self._index: Mapping[str, tuple[JournalRecord, ...]] = MappingProxyType(
            {cat: tuple(recs) for cat, recs in index.items()}
        )

    @property
    def records(self) -> tuple[JournalRecord, ...]:
        return self._records

    @property
    def categories(self) -> Mapping[str, tuple[JournalRecord, ...]]:
        """Category name -> records, in input order."""
        return self._index

    def category_names(self) -> list[str]:
        return sorted(self._index)

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, category: str) -> bool:
        return category in self._index


def _check_record(rec: JournalRecord) -> None:
    if not rec.journal:
        raise CorpusFormatError("journal id must be a non-empty string")
    if not rec.category:
        raise CorpusFormatError("category must be a non-empty string")
    for ind in Indicator:
        v = rec.value(ind)
        if v is None:
            continue
        if not math.isfinite(v) or v < 0:
            raise CorpusFormatError(
                f"{ind.value} for ({rec.journal!r}, {rec.category!r}) "
                f"must be finite and >= 0, got {v!r}"
            )


def parse_corpus(source: IO[str] | str) -> Corpus:
    """Parse a CSV stream (or literal CSV text) into a Corpus.

    Raises CorpusFormatError with the offending line number on a wrong
    column count, a non-numeric or negative indicator cell, or an empty
    journal/category cell; DuplicateRecordError on a repeated
    (journal, category) pair.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    reader = csv.reader(stream)

    header = next(reader, None)
    if header is None:
        raise CorpusFormatError("empty input, expected a header row", line=1)
    if [h.strip() for h in header] != list(CSV_COLUMNS):
        raise CorpusFormatError(
            f"expected header {','.join(CSV_COLUMNS)!r}, got {','.join(header)!r}", line=1
        )

    records = []
    seen: set[tuple[str, str]] = set()
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if len(row) != len(CSV_COLUMNS):
            raise CorpusFormatError(
                f"expected {len(CSV_COLUMNS)} columns, got {len(row)}", line=line
            )
        journal = row[0].strip()
        category = row[1].strip()
        if not journal:
            raise CorpusFormatError("journal cell is empty", line=line)
        if not category:
            raise CorpusFormatError("category cell is empty", line=line)
        key = (journal, category)
        if key in seen:
            raise DuplicateRecordError(f"duplicate (journal, category) pair: {key!r}", line=line)
        seen.add(key)
        values = {}
        for name, cell in zip(CSV_COLUMNS[2:], row[2:]):
            cell = cell.strip()
            if not cell:
                values[name] = None
                continue
            try:
                v = float(cell)
            except ValueError:
                raise CorpusFormatError(f"{name} is not a number: {cell!r}", line=line) from None
            if not math.isfinite(v):
                raise CorpusFormatError(f"{name} must be finite, got {cell!r}", line=line)
            if v < 0:
                raise CorpusFormatError(f"{name} must be >= 0, got {cell!r}", line=line)
            values[name] = v
        records.append(JournalRecord(journal, category, **values))

    return Corpus(records)


def load_corpus(path: str | Path) -> Corpus:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_corpus(fh)


def serialize_corpus(corpus: Corpus) -> str:
    """Render a Corpus back to CSV text; parse(serialize(c)) == c."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in corpus.records:
        writer.writerow(
            [rec.journal, rec.category]
            + [("" if rec.value(ind) is None else repr(rec.value(ind))) for ind in Indicator]
        )
    return out.getvalue()


def category_values(
    corpus: Corpus, category: str, indicator: Indicator
) -> tuple[list[float], int]:
    """All present values of an indicator for one category, in input order.

    Returns (values, skipped) where skipped counts records whose indicator
    cell was missing. Raises CategoryNotFoundError for an unknown category.
    """
    if category not in corpus:
        raise CategoryNotFoundError(category)
    values = []
    skipped = 0
    for rec in corpus.categories[category]:
        v = rec.value(indicator)
        if v is None:
            skipped += 1
        else:
            values.append(v)
    return values, skipped


@dataclass(frozen=True)
class ValidationReport:
    """Summary statistics of a corpus, for the `validate` command."""

    record_count: int
    category_count: int
    records_per_category: Mapping[str, int]
    missing_per_indicator: Mapping[str, int]
    under_populated: tuple[str, ...]
    min_records: int

    def to_dict(self) -> dict:
        return {
            "record_count": self.record_count,
            "category_count": self.category_count,
            "records_per_category": dict(self.records_per_category),
            "missing_per_indicator": dict(self.missing_per_indicator),
            "under_populated": list(self.under_populated),
            "min_records": self.min_records,
        }


def validate_corpus(corpus: Corpus, min_records: int = 5) -> ValidationReport:
    """Report per-category sizes, missing-value counts and small categories.

    Report-only: never raises for under-populated categories.
    """
    per_category = {cat: len(recs) for cat, recs in sorted(corpus.categories.items())}
    missing = {ind.value: 0 for ind in Indicator}
    for rec in corpus.records:
        for ind in Indicator:
            if rec.value(ind) is None:
                missing[ind.value] += 1
    under = tuple(cat for cat, n in per_category.items() if n < min_records)
    return ValidationReport(
        record_count=len(corpus),
        category_count=len(per_category),
        records_per_category=per_category,
        missing_per_indicator=missing,
        under_populated=under,
        min_records=min_records,
    )
