"""Discrete probability distributions over shared impact-value intervals.

Every category of a corpus is binned on one pooled BinSpec per indicator,
so all resulting distributions live on identical support and can be
compared bin by bin. Additive pseudo-count smoothing (alpha) keeps every
probability strictly positive, which downstream divergence computations
require of the input distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .corpus import Corpus, Indicator, category_values
from .errors import EmptyDataError, InvalidInputError

Scale = Literal["linear", "log"]

# Relative widening of the pooled upper bound so the observed maximum falls
# strictly inside the last half-open interval.
RELATIVE_MARGIN = 1e-9

# Positive floor for the lower edge of logarithmic binning.
LOG_FLOOR = 1e-12

PROBABILITY_SUM_TOL = 1e-12


@dataclass(frozen=True)
class BinSpec:
    """Shared binning: bin_count half-open intervals [l_i, l_{i+1}) on
    [lower, upper), spaced linearly or geometrically."""

    lower: float
    upper: float
    bin_count: int
    scale: Scale = "linear"

    def __post_init__(self):
        if self.bin_count < 2:
            raise InvalidInputError(f"bin_count must be >= 2, got {self.bin_count}")
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise InvalidInputError("bin bounds must be finite")
        if self.lower < 0:
            raise InvalidInputError(f"lower bound must be >= 0, got {self.lower}")
        if self.scale not in ("linear", "log"):
            raise InvalidInputError(f"scale must be 'linear' or 'log', got {self.scale!r}")
        if self.upper <= (max(self.lower, LOG_FLOOR) if self.scale == "log" else self.lower):
            raise InvalidInputError(
                f"upper bound must exceed lower bound, got [{self.lower}, {self.upper}]"
            )

    def edges(self) -> np.ndarray:
        """The bin_count + 1 interval edges."""
        if self.scale == "linear":
            return np.linspace(self.lower, self.upper, self.bin_count + 1)
        return np.geomspace(max(self.lower, LOG_FLOOR), self.upper, self.bin_count + 1)


@dataclass(frozen=True, eq=False)
class Histogram:
    """A probability vector over a BinSpec's intervals.

    probabilities sum to 1 (within 1e-12) and are strictly positive when
    alpha > 0. counts is None for distributions not built from samples.
    """

    spec: BinSpec
    probabilities: np.ndarray
    counts: np.ndarray | None = None
    sample_count: int = 0
    alpha: float = 0.0
    clamped: int = 0

    def __post_init__(self):
        probs = np.asarray(self.probabilities, dtype=float)
        if probs.shape != (self.spec.bin_count,):
            raise InvalidInputError(
                f"expected {self.spec.bin_count} probabilities, got shape {probs.shape}"
            )
        if np.any(probs < 0):
            raise InvalidInputError("probabilities must be >= 0")
        if self.alpha > 0 and np.any(probs == 0):
            raise InvalidInputError("alpha > 0 requires strictly positive probabilities")
        if abs(math.fsum(probs.tolist()) - 1.0) > PROBABILITY_SUM_TOL:
            raise InvalidInputError("probabilities must sum to 1")
        probs.flags.writeable = False
        object.__setattr__(self, "probabilities", probs)
        if self.counts is not None:
            counts = np.asarray(self.counts, dtype=np.int64)
            counts.flags.writeable = False
            object.__setattr__(self, "counts", counts)

    @classmethod
    def from_probabilities(cls, probabilities: Sequence[float], spec: BinSpec | None = None,
                           alpha: float = 0.0) -> "Histogram":
        """Wrap an explicit probability vector; a dummy unit-range spec is
        synthesized when none is given."""
        probabilities = np.asarray(probabilities, dtype=float)
        if spec is None:
            spec = BinSpec(0.0, 1.0, probabilities.size)
        return cls(spec=spec, probabilities=probabilities, alpha=alpha)

    def to_dict(self) -> dict:
        return {
            "edges": [float(e) for e in self.spec.edges()],
            "scale": self.spec.scale,
            "probabilities": [float(p) for p in self.probabilities],
            "counts": None if self.counts is None else [int(c) for c in self.counts],
            "sample_count": self.sample_count,
            "alpha": self.alpha,
            "clamped": self.clamped,
        }


def pooled_bin_spec(
    corpus: Corpus,
    indicator: Indicator,
    bin_count: int = 20,
    scale: Scale = "linear",
) -> BinSpec:
    """One BinSpec covering every present value of an indicator corpus-wide.

    Linear: [0, max * (1 + 1e-9)). Log: [smallest positive value,
    max * (1 + 1e-9)). Raises EmptyDataError when the indicator has no
    usable values at all.
    """
    values: list[float] = []
    for cat in corpus.categories:
        vals, _ = category_values(corpus, cat, indicator)
        values.extend(vals)
    if not values:
        raise EmptyDataError(f"no {indicator.value} values present in corpus")

    vmax = max(values)
    if scale == "log":
        positive = [v for v in values if v > 0]
        if not positive:
            raise EmptyDataError(
                f"no positive {indicator.value} values; logarithmic binning impossible"
            )
        lower = min(positive)
    else:
        lower = 0.0
    # All-zero data has no spread; fall back to a unit range.
    upper = vmax * (1.0 + RELATIVE_MARGIN) if vmax > 0 else 1.0
    return BinSpec(lower=lower, upper=upper, bin_count=bin_count, scale=scale)


def build_histogram(values: Sequence[float], spec: BinSpec, alpha: float = 0.0) -> Histogram:
    """Count values into spec's intervals and smooth with pseudo-count alpha.

    p_i = (c_i + alpha) / (N + alpha * bin_count). Values below the first
    edge land in the first bin, values at or above the last edge in the
    last bin; both are tallied in `clamped`. With alpha = 0 an empty value
    list leaves the distribution undefined and raises EmptyDataError.
    """
    if alpha < 0:
        raise InvalidInputError(f"alpha must be >= 0, got {alpha}")
    values = np.asarray(values, dtype=float)
    if values.size == 0 and alpha == 0:
        raise EmptyDataError("cannot build an unsmoothed histogram from zero values")

    edges = spec.edges()
    n = spec.bin_count
    if values.size:
        idx = np.searchsorted(edges, values, side="right") - 1
        clamped = int(np.count_nonzero(idx < 0) + np.count_nonzero(idx >= n))
        idx = np.clip(idx, 0, n - 1)
        counts = np.bincount(idx, minlength=n)
    else:
        clamped = 0
        counts = np.zeros(n, dtype=np.int64)

    total = int(values.size)
    probabilities = (counts + alpha) / (total + alpha * n)
    return Histogram(
        spec=spec,
        probabilities=probabilities,
        counts=counts,
        sample_count=total,
        alpha=alpha,
        clamped=clamped,
    )
