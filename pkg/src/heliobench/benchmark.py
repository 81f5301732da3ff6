"""Full benchmarking runs: one reference category against all others.

For each requested indicator the corpus is binned on a single pooled
support, every category becomes a smoothed histogram, and candidates are
ranked ascending by information gain relative to the reference (lower =
more similar). Rankings are always computed in full; top-k truncation is a
presentation step.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .corpus import Corpus, Indicator, category_values
from .errors import CategoryNotFoundError, EmptyDataError, InvalidInputError
from .histogram import BinSpec, Scale, build_histogram, pooled_bin_spec
from .infogain import DEFAULT_CONFIG, DivergenceConfig, gains_against_reference

DEFAULT_BIN_COUNT = 20
DEFAULT_ALPHA = 0.5
DEFAULT_TOP_K = 30

# Eigenfactor scores cluster within a few orders of magnitude of zero, so
# they get geometric bins by default; the other two indicators are binned
# linearly.
DEFAULT_SCALES: Mapping[Indicator, Scale] = {
    Indicator.IMPACT_FACTOR: "linear",
    Indicator.EIGENFACTOR: "log",
    Indicator.IMMEDIACY: "linear",
}


@dataclass(frozen=True)
class BenchmarkRequest:
    """Configuration of one benchmarking run."""

    reference: str
    indicators: tuple[Indicator, ...] = tuple(Indicator)
    bin_count: int = DEFAULT_BIN_COUNT
    scales: Mapping[Indicator, Scale] = field(default_factory=lambda: dict(DEFAULT_SCALES))
    alpha: float = DEFAULT_ALPHA
    k: int = DEFAULT_TOP_K
    prestige_path: str | None = None

    def __post_init__(self):
        if not self.reference:
            raise InvalidInputError("reference category must be non-empty")
        if not self.indicators:
            raise InvalidInputError("at least one indicator is required")
        if len(set(self.indicators)) != len(self.indicators):
            raise InvalidInputError("indicators must be distinct")
        if self.k < 1:
            raise InvalidInputError(f"k must be >= 1, got {self.k}")
        if self.alpha < 0:
            raise InvalidInputError(f"alpha must be >= 0, got {self.alpha}")

    def scale_for(self, indicator: Indicator) -> Scale:
        return self.scales.get(indicator, DEFAULT_SCALES[indicator])


@dataclass(frozen=True)
class BenchmarkResult:
    """Ascending-gain ranking of candidate categories for one indicator."""

    reference: str
    indicator: Indicator
    spec: BinSpec
    alpha: float
    ranking: tuple[tuple[str, float], ...]

    def to_dict(self) -> dict:
        return {
            "reference": self.reference,
            "indicator": self.indicator.code,
            "alpha": self.alpha,
            "bin_count": self.spec.bin_count,
            "scale": self.spec.scale,
            "lower": self.spec.lower,
            "upper": self.spec.upper,
            "ranking": [
                {"rank": i + 1, "category": cat, "gain": gain}
                for i, (cat, gain) in enumerate(self.ranking)
            ],
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["rank", "category", "gain"])
        for i, (cat, gain) in enumerate(self.ranking):
            writer.writerow([i + 1, cat, repr(gain)])
        return out.getvalue()


def run_benchmark(
    corpus: Corpus,
    request: BenchmarkRequest,
    config: DivergenceConfig = DEFAULT_CONFIG,
) -> list[BenchmarkResult]:
    """One full-ranking BenchmarkResult per requested indicator.

    Candidates with no present values for an indicator are left out of that
    indicator's ranking: with no observations they have no impact profile.
    Deterministic for a fixed corpus and request, whatever the row order of
    the input.
    """
    if request.reference not in corpus:
        raise CategoryNotFoundError(request.reference)

    results = []
    for indicator in request.indicators:
        ref_values, _ = category_values(corpus, request.reference, indicator)
        if not ref_values:
            raise EmptyDataError(
                f"reference category {request.reference!r} has no "
                f"{indicator.value} values"
            )
        spec = pooled_bin_spec(corpus, indicator, request.bin_count, request.scale_for(indicator))
        ref_hist = build_histogram(ref_values, spec, request.alpha)

        candidates = {}
        for cat in corpus.category_names():
            if cat == request.reference:
                continue
            values, _ = category_values(corpus, cat, indicator)
            if not values:
                continue
            candidates[cat] = build_histogram(values, spec, request.alpha)

        gains = gains_against_reference(
            ref_hist, candidates, config, reference_name=request.reference
        )
        ranking = tuple(
            (gv.candidate, gv.value)
            for gv in sorted(gains, key=lambda gv: (gv.value, gv.candidate))
        )
        results.append(
            BenchmarkResult(
                reference=request.reference,
                indicator=indicator,
                spec=spec,
                alpha=request.alpha,
                ranking=ranking,
            )
        )
    return results


def top_k(result: BenchmarkResult, k: int) -> BenchmarkResult:
    """Truncate a ranking to its k most similar categories."""
    if k < 1:
        raise InvalidInputError(f"k must be >= 1, got {k}")
    return replace(result, ranking=result.ranking[:k])


@dataclass(frozen=True)
class SummaryRow:
    category: str
    ranks: Mapping[str, int | None]  # indicator code -> 1-based rank, None if absent
    appearances: int


@dataclass(frozen=True)
class CrossIndicatorSummary:
    """Which categories recur near the top across indicators."""

    reference: str
    indicators: tuple[Indicator, ...]
    rows: tuple[SummaryRow, ...]

    def to_dict(self) -> dict:
        return {
            "reference": self.reference,
            "indicators": [ind.code for ind in self.indicators],
            "rows": [
                {"category": r.category, "appearances": r.appearances, "ranks": dict(r.ranks)}
                for r in self.rows
            ],
        }

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            ["category", "appearances"] + [f"rank_{ind.code}" for ind in self.indicators]
        )
        for row in self.rows:
            ranks = [row.ranks[ind.code] for ind in self.indicators]
            writer.writerow([row.category, row.appearances] + ["" if r is None else r for r in ranks])
        return out.getvalue()


def cross_indicator_summary(results: Sequence[BenchmarkResult]) -> CrossIndicatorSummary:
    """Tabulate, over already-truncated rankings, each category's rank per
    indicator and how many indicators list it.

    Rows are ordered by descending appearance count, then best rank, then
    name. All results must share one reference and use distinct indicators.
    """
    if not results:
        raise InvalidInputError("at least one benchmark result is required")
    references = {r.reference for r in results}
    if len(references) != 1:
        raise InvalidInputError(f"results mix references: {sorted(references)}")
    indicators = tuple(r.indicator for r in results)
    if len(set(indicators)) != len(indicators):
        raise InvalidInputError("results repeat an indicator")

    rank_maps = {
        r.indicator.code: {cat: i + 1 for i, (cat, _) in enumerate(r.ranking)} for r in results
    }
    union = sorted({cat for ranks in rank_maps.values() for cat in ranks})
    rows = []
    for cat in union:
        ranks = {ind.code: rank_maps[ind.code].get(cat) for ind in indicators}
        present = [r for r in ranks.values() if r is not None]
        rows.append(SummaryRow(category=cat, ranks=ranks, appearances=len(present)))
    rows.sort(
        key=lambda row: (
            -row.appearances,
            min(r for r in row.ranks.values() if r is not None),
            row.category,
        )
    )
    return CrossIndicatorSummary(
        reference=results[0].reference, indicators=indicators, rows=tuple(rows)
    )
