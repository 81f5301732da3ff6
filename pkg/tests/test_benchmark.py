import json

import numpy as np
import pytest

from heliobench import (
    BenchmarkRequest,
    CategoryNotFoundError,
    Corpus,
    EmptyDataError,
    Indicator,
    InvalidInputError,
    JournalRecord,
    build_histogram,
    category_values,
    cross_indicator_summary,
    make_synthetic_corpus,
    pooled_bin_spec,
    run_benchmark,
    top_k,
)

from oracle import kl_direct


def corpus_with_duplicate(name="Copy Of A"):
    records = [
        JournalRecord("a1", "A", 1.0, 0.01, 0.2),
        JournalRecord("a2", "A", 2.0, 0.02, 0.4),
        JournalRecord("a3", "A", 3.0, 0.03, 0.6),
        JournalRecord("b1", "B", 8.0, 0.10, 2.0),
        JournalRecord("b2", "B", 9.0, 0.20, 2.5),
        JournalRecord("b3", "B", 7.5, 0.15, 1.8),
    ]
    records += [
        JournalRecord(f"c{i}", name, rec.impact_factor, rec.eigenfactor, rec.immediacy)
        for i, rec in enumerate(records[:3])
    ]
    return Corpus(records)


class TestRunBenchmark:
    def test_copied_category_ranks_first_with_zero_gain(self):
        corpus = corpus_with_duplicate()
        results = run_benchmark(corpus, BenchmarkRequest(reference="A"))
        for result in results:
            top_name, top_gain = result.ranking[0]
            assert top_name == "Copy Of A"
            assert top_gain < 1e-12

    def test_synthetic_recovery_order_matches_oracle(self):
        # reference + 2 clones + 3 progressively shifted categories
        corpus = make_synthetic_corpus(
            n_categories=6, clones=2, seed=42, journals_low=60, journals_high=80,
            missing_rate=0.0, cross_list_every=0,
        )
        request = BenchmarkRequest(
            reference="Category 000", indicators=(Indicator.IMPACT_FACTOR,)
        )
        (result,) = run_benchmark(corpus, request)

        # clones occupy the two most-similar ranks
        assert {result.ranking[0][0], result.ranking[1][0]} == {
            "Category 001",
            "Category 002",
        }

        # full order agrees with an independent direct-summation oracle
        spec = pooled_bin_spec(corpus, Indicator.IMPACT_FACTOR, 20, "linear")
        ref_values, _ = category_values(corpus, "Category 000", Indicator.IMPACT_FACTOR)
        ref = build_histogram(ref_values, spec, 0.5)
        oracle_gains = {}
        for cat in corpus.category_names():
            if cat == "Category 000":
                continue
            values, _ = category_values(corpus, cat, Indicator.IMPACT_FACTOR)
            cand = build_histogram(values, spec, 0.5)
            oracle_gains[cat] = kl_direct(ref.probabilities, cand.probabilities)
        oracle_order = sorted(oracle_gains, key=lambda c: (oracle_gains[c], c))
        assert [name for name, _ in result.ranking] == oracle_order
        for name, gain in result.ranking:
            assert gain == pytest.approx(oracle_gains[name], abs=1e-12)

    def test_unknown_reference(self, small_corpus):
        with pytest.raises(CategoryNotFoundError):
            run_benchmark(small_corpus, BenchmarkRequest(reference="Astrology"))

    def test_reference_without_values_names_indicator(self):
        corpus = Corpus(
            [
                JournalRecord("a1", "A", None, 0.01, 0.2),
                JournalRecord("b1", "B", 1.0, 0.02, 0.4),
            ]
        )
        with pytest.raises(EmptyDataError, match="impact_factor"):
            run_benchmark(
                corpus, BenchmarkRequest(reference="A", indicators=(Indicator.IMPACT_FACTOR,))
            )

    def test_candidate_without_values_is_left_out(self):
        corpus = Corpus(
            [
                JournalRecord("a1", "A", 1.0, 0.01, 0.2),
                JournalRecord("a2", "A", 2.0, 0.02, 0.4),
                JournalRecord("b1", "B", None, 0.02, 0.4),
                JournalRecord("c1", "C", 3.0, 0.01, 0.3),
            ]
        )
        (result,) = run_benchmark(
            corpus, BenchmarkRequest(reference="A", indicators=(Indicator.IMPACT_FACTOR,))
        )
        assert [name for name, _ in result.ranking] == ["C"]

    def test_one_result_per_indicator(self, small_corpus):
        results = run_benchmark(small_corpus, BenchmarkRequest(reference="Biology"))
        assert [r.indicator for r in results] == list(Indicator)
        assert all(r.reference == "Biology" for r in results)

    def test_ranking_sorted_ascending_with_lexicographic_ties(self):
        corpus = corpus_with_duplicate(name="Copy 1")
        records = list(corpus.records) + [
            JournalRecord(f"d{i}", "Copy 2", rec.impact_factor, rec.eigenfactor, rec.immediacy)
            for i, rec in enumerate(corpus.records[:3])
        ]
        results = run_benchmark(
            Corpus(records),
            BenchmarkRequest(reference="A", indicators=(Indicator.IMPACT_FACTOR,)),
        )
        ranking = results[0].ranking
        gains = [g for _, g in ranking]
        assert gains == sorted(gains)
        assert [name for name, _ in ranking[:2]] == ["Copy 1", "Copy 2"]
        assert ranking[0][1] == ranking[1][1]

    def test_deterministic_across_runs_and_row_permutations(self):
        corpus = make_synthetic_corpus(
            n_categories=12, clones=2, seed=9, journals_low=20, journals_high=30
        )
        request = BenchmarkRequest(reference="Category 003")
        baseline = [json.dumps(r.to_dict(), sort_keys=True) for r in run_benchmark(corpus, request)]
        again = [json.dumps(r.to_dict(), sort_keys=True) for r in run_benchmark(corpus, request)]
        assert again == baseline

        rng = np.random.default_rng(0)
        shuffled_records = list(corpus.records)
        rng.shuffle(shuffled_records)
        shuffled = [
            json.dumps(r.to_dict(), sort_keys=True)
            for r in run_benchmark(Corpus(shuffled_records), request)
        ]
        assert shuffled == baseline

    def test_alpha_zero_can_violate_absolute_continuity(self):
        from heliobench import AbsoluteContinuityError

        corpus = corpus_with_duplicate()
        with pytest.raises(AbsoluteContinuityError):
            run_benchmark(
                corpus,
                BenchmarkRequest(
                    reference="A", indicators=(Indicator.IMPACT_FACTOR,), alpha=0.0
                ),
            )


class TestTopK:
    def make_result(self, n_candidates=10):
        corpus = make_synthetic_corpus(
            n_categories=n_candidates + 1, clones=2, seed=1,
            journals_low=15, journals_high=25,
        )
        (result,) = run_benchmark(
            corpus,
            BenchmarkRequest(reference="Category 000", indicators=(Indicator.IMPACT_FACTOR,)),
        )
        return result

    def test_truncates_to_k(self):
        result = self.make_result(40)
        assert len(top_k(result, 30).ranking) == 30

    def test_truncation_cannot_pad(self):
        result = self.make_result(10)
        assert len(top_k(result, 30).ranking) == 10

    def test_k_one_keeps_most_similar(self):
        result = self.make_result(10)
        truncated = top_k(result, 1)
        assert truncated.ranking == result.ranking[:1]

    def test_monotone_k_prefix(self):
        result = self.make_result(20)
        for k1, k2 in [(1, 5), (5, 12), (3, 20)]:
            assert top_k(result, k2).ranking[:k1] == top_k(result, k1).ranking

    def test_k_below_one_rejected(self):
        result = self.make_result(5)
        with pytest.raises(InvalidInputError):
            top_k(result, 0)

    def test_other_fields_preserved(self):
        result = self.make_result(10)
        truncated = top_k(result, 3)
        assert truncated.reference == result.reference
        assert truncated.indicator == result.indicator
        assert truncated.spec == result.spec
        assert truncated.alpha == result.alpha


class TestCrossIndicatorSummary:
    def test_identical_rankings_have_full_appearance_counts(self, small_corpus):
        results = run_benchmark(small_corpus, BenchmarkRequest(reference="Biology"))
        # same candidates under every indicator here
        summary = cross_indicator_summary(results)
        assert all(row.appearances == 3 for row in summary.rows)

    def test_category_in_one_ranking_only(self):
        corpus = Corpus(
            [
                JournalRecord("a1", "A", 1.0, 0.01, 0.2),
                JournalRecord("a2", "A", 2.0, 0.02, 0.4),
                JournalRecord("b1", "B", 1.5, None, 0.3),  # no eigenfactor data
                JournalRecord("c1", "C", 2.5, 0.03, 0.5),
            ]
        )
        summary = cross_indicator_summary(
            run_benchmark(corpus, BenchmarkRequest(reference="A"))
        )
        by_name = {row.category: row for row in summary.rows}
        assert by_name["B"].appearances == 2
        assert by_name["B"].ranks["es"] is None
        assert by_name["C"].appearances == 3

    def test_disjoint_rankings_union_size(self):
        from heliobench.benchmark import BenchmarkResult
        from heliobench import BinSpec

        spec = BinSpec(0.0, 1.0, 4)
        k = 3
        results = [
            BenchmarkResult(
                reference="R",
                indicator=ind,
                spec=spec,
                alpha=0.5,
                ranking=tuple((f"{ind.code}-{i}", float(i)) for i in range(k)),
            )
            for ind in Indicator
        ]
        summary = cross_indicator_summary(results)
        assert len(summary.rows) == 3 * k
        assert all(row.appearances == 1 for row in summary.rows)

    def test_mixed_references_rejected(self, small_corpus):
        res_a = run_benchmark(
            small_corpus,
            BenchmarkRequest(reference="Biology", indicators=(Indicator.IMPACT_FACTOR,)),
        )
        res_b = run_benchmark(
            small_corpus,
            BenchmarkRequest(reference="Physics", indicators=(Indicator.EIGENFACTOR,)),
        )
        with pytest.raises(InvalidInputError):
            cross_indicator_summary(res_a + res_b)

    def test_repeated_indicator_rejected(self, small_corpus):
        (result,) = run_benchmark(
            small_corpus,
            BenchmarkRequest(reference="Biology", indicators=(Indicator.IMPACT_FACTOR,)),
        )
        with pytest.raises(InvalidInputError):
            cross_indicator_summary([result, result])

    def test_csv_shape(self, small_corpus):
        summary = cross_indicator_summary(
            run_benchmark(small_corpus, BenchmarkRequest(reference="Biology"))
        )
        lines = summary.to_csv().splitlines()
        assert lines[0] == "category,appearances,rank_if,rank_es,rank_ii"
        assert len(lines) == 1 + len(summary.rows)


class TestRequestValidation:
    def test_k_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            BenchmarkRequest(reference="A", k=0)

    def test_indicators_must_be_non_empty(self):
        with pytest.raises(InvalidInputError):
            BenchmarkRequest(reference="A", indicators=())

    def test_indicators_must_be_distinct(self):
        with pytest.raises(InvalidInputError):
            BenchmarkRequest(
                reference="A", indicators=(Indicator.IMPACT_FACTOR, Indicator.IMPACT_FACTOR)
            )

    def test_negative_alpha_rejected(self):
        with pytest.raises(InvalidInputError):
            BenchmarkRequest(reference="A", alpha=-0.1)
