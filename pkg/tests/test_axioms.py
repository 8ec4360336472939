"""Axiom checkers: generators, witnesses, determinism, and the paper suites."""

import dataclasses
import math

import numpy as np
import pytest

from pcii.axioms import (
    AxiomCheckConfig,
    AxiomReport,
    EmbeddingSpec,
    check_axiom,
    embed_triad,
    perturb_one_entry,
    random_consistent_matrix,
    random_pc_matrix,
    report_from_json,
    report_to_json,
    run_consistency_suite,
    run_independence_suite,
    triad_distance,
    triad_relative_error,
    verify_counterexample,
)
from pcii.errors import OrderTooSmallError, UnknownAxiomError, UnknownIndicatorError
from pcii.indicators import evaluate, principal_eigenvalue
from pcii.matrix import PCMatrix, Triad, is_consistent

FAST = AxiomCheckConfig(samples=25)
FAST_BOTH = AxiomCheckConfig(samples=25, distance_kinds=("log_abs", "abs_diff"))


class TestGenerators:
    def test_random_matrix_deterministic(self):
        assert random_pc_matrix(5, 1.0, 42) == random_pc_matrix(5, 1.0, 42)

    def test_zero_spread_gives_ones(self):
        assert np.array_equal(random_pc_matrix(4, 0.0, 1).entries, np.ones((4, 4)))

    def test_spread_bounds_entries(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            A = random_pc_matrix(5, math.log(9), rng)
            assert A.entries.min() >= 1 / 9 - 1e-12
            assert A.entries.max() <= 9 + 1e-12

    def test_random_matrix_reciprocal(self):
        A = random_pc_matrix(6, 2.0, 3)
        assert np.allclose(A.entries * A.entries.T, 1.0)

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmallError):
            random_pc_matrix(2, 1.0, 0)

    def test_consistent_generator(self):
        for seed in range(20):
            A = random_consistent_matrix(5, 2.0, seed)
            assert is_consistent(A, 1e-12)

    def test_consistent_deterministic(self):
        assert random_consistent_matrix(4, 1.0, 9) == random_consistent_matrix(4, 1.0, 9)

    def test_single_perturbation_floor(self):
        # multiplying one entry by 3 shifts some triad ratio by exactly 3
        rng = np.random.default_rng(4)
        for _ in range(50):
            A = random_consistent_matrix(5, 1.0, rng)
            B = perturb_one_entry(A, rng, factor_range=(3.0, 3.0))
            assert evaluate("kii", B).value >= 2 / 3 - 1e-12


class TestEmbedding:
    def test_reference_triad_kept_at_order_three(self):
        M = embed_triad(EmbeddingSpec(Triad(1, 10, 1), 3))
        assert evaluate("kii", M).value == pytest.approx(0.9, abs=1e-15)

    def test_embedding_cannot_lower_a_max_indicator(self):
        for n in range(3, 11):
            M = embed_triad(EmbeddingSpec(Triad(1, 10, 1), n))
            assert evaluate("kii", M).value == pytest.approx(0.9, abs=1e-12)

    def test_eigen_index_dilutes_with_order(self):
        values = []
        for n in range(4, 11):
            M = embed_triad(EmbeddingSpec(Triad(1, 10, 1), n))
            values.append(evaluate("ci", M).value)
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_triad_is_only_inconsistency_source(self):
        M = embed_triad(EmbeddingSpec(Triad(2, 3, 5), 6))
        x, y, z = 2.0, 3.0, 5.0
        worst = evaluate("kii", M)
        r = x * z / y
        assert worst.value == pytest.approx(1 - min(r, 1 / r), abs=1e-12)

    def test_filler_length_checked(self):
        with pytest.raises(ValueError):
            embed_triad(EmbeddingSpec(Triad(1, 2, 1), 5, filler=(1.0,)))

    def test_random_filler_stays_consistent_fill(self):
        M = embed_triad(EmbeddingSpec(Triad(1, 10, 1), 8), seed=5)
        assert evaluate("kii", M).value == pytest.approx(0.9, abs=1e-12)

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmallError):
            embed_triad(EmbeddingSpec(Triad(1, 2, 1), 2))


class TestDistances:
    def test_log_distance(self):
        assert triad_distance("log_abs", math.e, 1.0) == pytest.approx(1.0)

    def test_abs_distance(self):
        assert triad_distance("abs_diff", 10.0, 1.0) == 9.0

    def test_relative_error_conventions(self):
        t = Triad(1, 10, 1)
        assert triad_relative_error(t, "difference") == pytest.approx(0.9)
        assert triad_relative_error(t, "ratio") == pytest.approx(10.0)


class TestCheckAxiom:
    def test_unknown_axiom(self):
        with pytest.raises(UnknownAxiomError):
            check_axiom("A9", "kii", FAST)

    def test_unknown_indicator(self):
        with pytest.raises(UnknownIndicatorError):
            check_axiom("A1", "nope", FAST)

    def test_kii_passes_a1(self):
        assert check_axiom("A1", "kii", FAST).verdict == "PASS"

    def test_ii1_fails_a1_with_consistent_witness(self):
        report = check_axiom("A1", "ii1", FAST)
        assert report.verdict == "FAIL"
        A = PCMatrix(np.array(report.counterexample["matrix"]["rows"]))
        assert is_consistent(A)
        assert report.counterexample["value"] == 0.5

    def test_ci_fails_a2_with_witness(self):
        report = check_axiom("A2", "ci", AxiomCheckConfig(samples=10_000))
        assert report.verdict == "FAIL"
        assert report.counterexample["value"] > 1.0
        assert verify_counterexample(report)

    def test_ci_fails_a4_with_witness_pair(self):
        report = check_axiom("A4", "ci", AxiomCheckConfig(samples=10_000))
        assert report.verdict == "FAIL"
        ce = report.counterexample
        assert ce["value_sub"] > ce["value_full"]
        assert verify_counterexample(report)

    def test_ii5_fails_a5_with_swap_witness(self):
        report = check_axiom("A5", "ii5", FAST)
        assert report.verdict == "FAIL"
        assert verify_counterexample(report)

    def test_ii3_fails_a3_under_both_distances(self):
        report = check_axiom("A3", "ii3", FAST_BOTH)
        assert report.verdict == "FAIL"
        assert verify_counterexample(report)

    def test_ii3_a3_spread_escalation_alone_falsifies(self):
        # the constant-distance spread family (t, b, 1/t) keeps d(y, xz)
        # fixed while driving ii3's damping to 0
        from pcii.axioms import _escalation_families

        cfg = AxiomCheckConfig()
        for distance in ("log_abs", "abs_diff"):
            fams = dict(_escalation_families(distance, 0.5, cfg))
            values = []
            for t in fams["spread"]:
                M = embed_triad(EmbeddingSpec(t, 3))
                assert triad_distance(distance, t.y, t.x * t.z) > 0.5
                values.append(evaluate("ii3", M).value)
            assert min(values) <= cfg.decay_epsilon

    def test_kii_a3_floor_table(self):
        report = check_axiom("A3", "kii", FAST)
        assert report.verdict == "PASS"
        floors = report.phi_table["log_abs"]
        for phi, floor in floors.items():
            assert floor == pytest.approx(1 - math.exp(-phi), abs=0.02)
        ordered = [floors[p] for p in sorted(floors)]
        assert ordered == sorted(ordered)

    def test_ci_a3_inconclusive(self):
        report = check_axiom("A3", "ci", FAST_BOTH)
        assert report.verdict == "INCONCLUSIVE"

    def test_ci_a5_passes(self):
        # permutation similarity preserves eigenvalues
        assert check_axiom("A5", "ci", AxiomCheckConfig(samples=10)).verdict == "PASS"

    def test_fail_reports_recheck_standalone(self):
        for axiom, ind in (("A1", "ii1"), ("A2", "ii2"), ("A4", "ii4"), ("A5", "ii5")):
            report = check_axiom(axiom, ind, FAST_BOTH)
            assert report.verdict == "FAIL"
            assert verify_counterexample(report, FAST_BOTH)


class TestReports:
    def test_json_round_trip(self):
        for report in (
            check_axiom("A3", "kii", FAST),
            check_axiom("A4", "ii4", FAST),
            check_axiom("A1", "kii", FAST),
        ):
            assert report_from_json(report_to_json(report)) == report

    def test_byte_identical_reports(self):
        cfg = AxiomCheckConfig(samples=30)
        for axiom in ("A1", "A2", "A3", "A4", "A5"):
            a = report_to_json(check_axiom(axiom, "kii", cfg))
            b = report_to_json(check_axiom(axiom, "kii", cfg))
            assert a == b

    def test_different_seeds_differ(self):
        a = check_axiom("A2", "kii", AxiomCheckConfig(rng_seed=1, samples=10))
        b = check_axiom("A2", "kii", AxiomCheckConfig(rng_seed=2, samples=10))
        assert a.verdict == b.verdict == "PASS"


class TestSuites:
    def test_consistency_suite_passes(self):
        reports = run_consistency_suite(FAST)
        assert [r.verdict for r in reports] == ["PASS"] * 5

    def test_independence_grid(self):
        grid = run_independence_suite(AxiomCheckConfig(samples=25))
        for j in range(1, 6):
            ind = f"ii{j}"
            for pos, axiom in enumerate(("A1", "A2", "A3", "A4", "A5"), start=1):
                expected = "FAIL" if pos == j else "PASS"
                assert grid[ind][axiom].verdict == expected
