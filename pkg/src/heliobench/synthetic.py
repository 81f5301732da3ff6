"""Fixed-seed synthetic corpora.

Real journal-indicator tables are proprietary, so the repository ships a
generated stand-in with the same shape: 174 categories of roughly 100
journals each, three indicators per journal, occasional missing cells and
some journals cross-listed in two categories. One block of categories
shares the generating distribution of the first category (useful as a
known-answer reference group); every other category's distribution is
shifted progressively further away.

Values are lognormal per indicator. Shifts are applied to the log-mean, so
they act multiplicatively, which matches how impact indicators spread.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .corpus import Corpus, JournalRecord, serialize_corpus
from .errors import InvalidInputError

DEMO_SEED = 2010
DEMO_CATEGORIES = 174
DEMO_CLONES = 5

# Base log-space location and spread for each indicator, scaled off one
# sigma parameter. Eigenfactor-like values are orders of magnitude smaller
# and wider-spread than the citation-rate indicators.
_BASE_LOG_MEAN = {"impact_factor": math.log(2.2), "eigenfactor": math.log(0.004),
                  "immediacy": math.log(0.45)}
_SIGMA_FACTOR = {"impact_factor": 1.0, "eigenfactor": 2.0, "immediacy": 1.0}
_DECIMALS = {"impact_factor": 3, "eigenfactor": 5, "immediacy": 3}


def category_name(index: int) -> str:
    return f"Category {index:03d}"


def make_synthetic_corpus(
    n_categories: int = DEMO_CATEGORIES,
    clones: int = DEMO_CLONES,
    seed: int = DEMO_SEED,
    journals_low: int = 80,
    journals_high: int = 120,
    sigma: float = 0.4,
    min_shift: float = 0.5,
    max_shift: float = 1.8,
    missing_rate: float = 0.02,
    cross_list_every: int = 25,
) -> Corpus:
    """Build a deterministic synthetic corpus.

    Categories 1..clones are drawn from the same distribution as category 0
    (the natural reference for demos and recovery tests); categories
    clones+1 .. n-1 get log-mean shifts spaced evenly over
    [min_shift, max_shift].
    """
    if n_categories < clones + 2:
        raise InvalidInputError("need at least clones + 2 categories")
    rng = np.random.default_rng(seed)

    shifts = np.zeros(n_categories)
    n_shifted = n_categories - clones - 1
    shifts[clones + 1:] = np.linspace(min_shift, max_shift, n_shifted)

    records: list[JournalRecord] = []
    journal_counter = 0
    for c in range(n_categories):
        cat = category_name(c)
        n_journals = int(rng.integers(journals_low, journals_high + 1))
        for j in range(n_journals):
            journal_counter += 1
            journal = f"jnl-{journal_counter:05d}"
            values: dict[str, float | None] = {}
            for field in _BASE_LOG_MEAN:
                v = rng.lognormal(
                    mean=_BASE_LOG_MEAN[field] + shifts[c],
                    sigma=sigma * _SIGMA_FACTOR[field],
                )
                values[field] = round(float(v), _DECIMALS[field])
            for field in list(values):
                if rng.random() < missing_rate:
                    values[field] = None
            records.append(JournalRecord(journal, cat, **values))
            # Cross-list an occasional journal in the next category with
            # identical values, as citation indexes do.
            if cross_list_every and j % cross_list_every == cross_list_every - 1:
                records.append(
                    JournalRecord(journal, category_name((c + 1) % n_categories), **values)
                )

    return Corpus(records)


def make_demo_corpus() -> Corpus:
    """The corpus committed at data/demo_corpus.csv."""
    return make_synthetic_corpus()


def write_corpus_csv(corpus: Corpus, path: str | Path) -> None:
    Path(path).write_text(serialize_corpus(corpus), encoding="utf-8")
