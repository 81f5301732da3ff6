"""Dissimilarity between two binned distributions.

The measure is built in three steps: the unexpectedness of a single event
of probability p is h(p) = -log p; the unexpectedness of a reference
distribution P seen through an estimating distribution Q is the
expectation U_P(Q) = sum_i p_i * h(q_i); and the information gain is the
excess unexpectedness eps(P, Q) = a * (U_P(Q) - U_P(P)), which equals the
Kullback-Leibler divergence a * sum_i p_i * log(p_i / q_i). Both forms are
evaluated and cross-checked on every call.

Lower gain means more similar distributions; eps(P, P) = 0 and
eps(P, Q) >= 0 whenever Q is positive wherever P is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Mapping

from .errors import AbsoluteContinuityError, IncompatibleSupportError, InvalidInputError
from .histogram import Histogram

LogBase = Literal["natural", "base2"]

# Agreement required between the expectation-difference form and the direct
# summation form of the gain.
IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class DivergenceConfig:
    """Cosmetic knobs: a nonnegative multiplicative constant and the log
    base. Neither affects any ranking order."""

    scale_constant: float = 1.0
    log_base: LogBase = "natural"

    def __post_init__(self):
        if not (math.isfinite(self.scale_constant) and self.scale_constant >= 0):
            raise InvalidInputError(
                f"scale_constant must be finite and >= 0, got {self.scale_constant}"
            )
        if self.log_base not in ("natural", "base2"):
            raise InvalidInputError(f"log_base must be 'natural' or 'base2', got {self.log_base!r}")

    def _convert(self, nats: float) -> float:
        return nats / math.log(2.0) if self.log_base == "base2" else nats


DEFAULT_CONFIG = DivergenceConfig()


@dataclass(frozen=True)
class GainValue:
    """Information gain of a candidate distribution relative to a reference."""

    value: float
    reference: str = ""
    candidate: str = ""


def unexpectedness(p: float, config: DivergenceConfig = DEFAULT_CONFIG) -> float:
    """h(p) = -log p for a single event probability p in (0, 1]."""
    if not 0.0 < p <= 1.0:
        raise InvalidInputError(f"probability must be in (0, 1], got {p}")
    return config._convert(-math.log(p))


def _check_compatible(p_hist: Histogram, q_hist: Histogram) -> None:
    if p_hist.spec != q_hist.spec:
        raise IncompatibleSupportError(
            f"histograms use different bin specs: {p_hist.spec} vs {q_hist.spec}"
        )


def expected_unexpectedness(
    p_hist: Histogram, q_hist: Histogram, config: DivergenceConfig = DEFAULT_CONFIG
) -> float:
    """U_P(Q) = sum_i p_i * h(q_i), skipping bins with p_i = 0.

    Raises IncompatibleSupportError on mismatched bin specs and
    AbsoluteContinuityError naming the first bin where q_i = 0 < p_i.
    """
    _check_compatible(p_hist, q_hist)
    terms = []
    for i, (p, q) in enumerate(zip(p_hist.probabilities, q_hist.probabilities)):
        if p == 0.0:
            continue
        if q == 0.0:
            raise AbsoluteContinuityError(i)
        terms.append(p * -math.log(q))
    return config._convert(math.fsum(terms))


def information_gain(
    p_hist: Histogram,
    q_hist: Histogram,
    config: DivergenceConfig = DEFAULT_CONFIG,
    reference: str = "",
    candidate: str = "",
) -> GainValue:
    """eps(P, Q) = a * (U_P(Q) - U_P(P)), cross-checked against the direct
    form a * sum_i p_i * log(p_i / q_i).

    The two evaluations must agree within 1e-12; a discrepancy indicates a
    numerical defect and raises ArithmeticError.
    """
    _check_compatible(p_hist, q_hist)
    cross_terms = []  # p * -log(q), summing to U_P(Q)
    self_terms = []   # p * -log(p), summing to U_P(P)
    direct_terms = []  # p * log(p / q)
    for i, (p, q) in enumerate(zip(p_hist.probabilities, q_hist.probabilities)):
        if p == 0.0:
            continue
        if q == 0.0:
            raise AbsoluteContinuityError(i)
        cross_terms.append(p * -math.log(q))
        self_terms.append(p * -math.log(p))
        direct_terms.append(p * math.log(p / q))

    gain_nats = math.fsum(cross_terms) - math.fsum(self_terms)
    direct_nats = math.fsum(direct_terms)
    if abs(gain_nats - direct_nats) > IDENTITY_TOL:
        raise ArithmeticError(
            f"expectation-difference and direct summation disagree: "
            f"{gain_nats!r} vs {direct_nats!r}"
        )

    value = config._convert(config.scale_constant * gain_nats)
    return GainValue(value=value, reference=reference, candidate=candidate)


def gains_against_reference(
    reference_hist: Histogram,
    candidates: Mapping[str, Histogram],
    config: DivergenceConfig = DEFAULT_CONFIG,
    reference_name: str = "",
) -> list[GainValue]:
    """Gain of every candidate relative to the reference, one GainValue per
    candidate in lexicographic candidate-name order.

    A candidate keyed by reference_name is skipped. Per-pair errors
    propagate with the candidate name prepended to the message.
    """
    gains = []
    for name in sorted(candidates):
        if name == reference_name:
            continue
        try:
            gains.append(
                information_gain(
                    reference_hist,
                    candidates[name],
                    config,
                    reference=reference_name,
                    candidate=name,
                )
            )
        except (IncompatibleSupportError, AbsoluteContinuityError, InvalidInputError) as exc:
            exc.args = (f"candidate {name!r}: {exc}",)
            raise
    return gains
