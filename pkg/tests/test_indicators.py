"""Indicator catalogue: known values, oracles, and algebraic properties."""

import math

import numpy as np
import pytest

from pcii.axioms import (
    EIGEN_4X4,
    EIGEN_OVER_UNIT,
    EIGEN_SUB_SELECTORS,
    MONO_SUB_3X3,
    MONO_SUPER_4X4,
    ORDER_SWAP_A,
    ORDER_SWAP_B,
    OVER_UNIT_3X3,
    random_consistent_matrix,
    random_pc_matrix,
)
from pcii.errors import (
    EigenvalueNonconvergenceError,
    OrderTooSmallError,
    ShapeFunctionViolationError,
    UnknownIndicatorError,
    ZeroTrueValueError,
)
from pcii.indicators import (
    eigenvalue_closed_form_3x3,
    evaluate,
    extend_triad_indicator,
    get_indicator,
    invariant_map,
    kii_triad,
    principal_eigenvalue,
    register_family,
    relative_error,
)
from pcii.matrix import (
    PCMatrix,
    ScalingVector,
    SubmatrixSelector,
    Triad,
    TriadIndex,
    from_weights,
    is_consistent,
    scale_action,
    submatrix,
    transpose,
    triad_at,
    validate,
)


class TestKiiTriad:
    def test_consistent_triad(self):
        assert kii_triad(Triad(2, 6, 3)) == 0.0

    def test_reference_pair(self):
        assert kii_triad(Triad(1, 2, 1)) == pytest.approx(0.5, abs=1e-15)
        assert kii_triad(Triad(10, 101, 10)) == pytest.approx(1 / 101, abs=1e-15)

    def test_wide_triad(self):
        assert kii_triad(Triad(1, 9, 1)) == pytest.approx(8 / 9, abs=1e-15)


class TestCatalogueValues:
    def test_ii2_exceeds_one(self):
        assert evaluate("ii2", validate(OVER_UNIT_3X3)).value == pytest.approx(16 / 9, abs=1e-14)

    def test_ii5_order_dependence_pair(self):
        assert evaluate("ii5", validate(ORDER_SWAP_A)).value == pytest.approx(4 / 5, abs=1e-14)
        assert evaluate("ii5", validate(ORDER_SWAP_B)).value == pytest.approx(5 / 7, abs=1e-14)

    def test_ii4_monotonicity_pair(self):
        assert evaluate("ii4", validate(MONO_SUPER_4X4)).value == pytest.approx(0.5, abs=1e-14)
        assert evaluate("ii4", validate(MONO_SUB_3X3)).value == pytest.approx(11 / 12, abs=1e-14)

    def test_ii1_floor_on_consistent(self):
        assert evaluate("ii1", PCMatrix(np.ones((4, 4)))).value == 0.5

    def test_kii_zero_on_consistent(self):
        assert evaluate("kii", from_weights([1, 2, 4, 8])).value <= 1e-15

    def test_loge_equals_kii(self):
        for seed in range(20):
            A = random_pc_matrix(5, math.log(9), seed)
            assert evaluate("loge", A).value == pytest.approx(
                evaluate("kii", A).value, abs=1e-12
            )

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmallError):
            evaluate("kii", validate([[1, 2], [1 / 2, 1]]))

    def test_unknown_indicator(self):
        with pytest.raises(UnknownIndicatorError):
            evaluate("bogus", PCMatrix(np.ones((3, 3))))

    def test_pow_exponent_bounds(self):
        with pytest.raises(UnknownIndicatorError):
            get_indicator("logpow:2")
        with pytest.raises(UnknownIndicatorError):
            get_indicator("diffpow:0")

    def test_worst_triad_witness_reproduces_value(self):
        for seed in range(25):
            A = random_pc_matrix(6, 1.5, seed)
            for ind_id in ("kii", "ii3", "ii5", "log2", "diffe", "logpow:0.5"):
                ind = get_indicator(ind_id)
                res = evaluate(ind_id, A)
                t = triad_at(A, res.worst_triad)
                kern = float(ind.kernel(np.array([t.x]), np.array([t.y]), np.array([t.z]))[0])
                assert kern == res.value

    def test_ii4_witness_reproduces_value(self):
        A = validate(MONO_SUPER_4X4)
        res = evaluate("ii4", A)
        t = triad_at(A, res.worst_triad)
        r = t.x * t.z / t.y
        assert 1.0 - 0.5 * min(r, 1 / r) == res.value


class TestRanges:
    def test_normalized_indicators_stay_in_unit_interval(self):
        rng = np.random.default_rng(42)
        ids = ("kii", "ii1", "ii3", "ii4", "ii5", "log2", "loge", "logpow:1",
               "diff2", "diffe", "diffpow:1", "family:exp")
        for _ in range(10_000):
            n = int(rng.integers(3, 8))
            A = random_pc_matrix(n, math.log(9), rng)
            for ind_id in ids:
                v = evaluate(ind_id, A).value
                assert 0.0 <= v <= 1.0, (ind_id, v)

    def test_ii2_and_ci_can_exceed_one(self):
        assert evaluate("ii2", validate(OVER_UNIT_3X3)).value > 1.0
        assert evaluate("ci", validate(EIGEN_OVER_UNIT)).value > 1.0

    def test_kii_zero_set_matches_consistency(self):
        rng = np.random.default_rng(9)
        for _ in range(100):
            A = random_consistent_matrix(int(rng.integers(3, 7)), 1.0, rng)
            assert evaluate("kii", A).value <= 1e-9
            assert is_consistent(A, 1e-9)
            M = A.entries.copy()
            M[0, 1] *= 2.5
            M[1, 0] = 1.0 / M[0, 1]
            B = PCMatrix(M)
            assert evaluate("kii", B).value > 1e-9
            assert not is_consistent(B, 1e-9)


class TestEigenvalue:
    def test_reference_4x4(self):
        lam = principal_eigenvalue(validate(EIGEN_4X4), tol=1e-12)
        assert lam == pytest.approx(4.64474, abs=1e-4)

    def test_reference_3x3_exact(self):
        sub = submatrix(validate(EIGEN_4X4), SubmatrixSelector(EIGEN_SUB_SELECTORS[0]))
        assert principal_eigenvalue(sub, tol=1e-12) == pytest.approx(3.5, abs=1e-9)

    def test_reference_rotation_matrix(self):
        lam = principal_eigenvalue(validate(EIGEN_OVER_UNIT), tol=1e-12)
        assert lam == pytest.approx(10.111, abs=1e-3)

    def test_consistent_reaches_order(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            n = int(rng.integers(3, 8))
            A = random_consistent_matrix(n, 2.0, rng)
            assert principal_eigenvalue(A, tol=1e-12) == pytest.approx(n, abs=1e-8)

    def test_lower_bound_is_order(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            n = int(rng.integers(3, 8))
            A = random_pc_matrix(n, math.log(9), rng)
            assert principal_eigenvalue(A) >= n - 1e-9

    def test_closed_form_oracle(self):
        rng = np.random.default_rng(123)
        for _ in range(200):
            A = random_pc_matrix(3, math.log(9), rng)
            lam = principal_eigenvalue(A, tol=1e-12)
            assert lam == pytest.approx(eigenvalue_closed_form_3x3(A), abs=1e-8)

    def test_nonconvergence_raises(self):
        with pytest.raises(EigenvalueNonconvergenceError):
            principal_eigenvalue(validate(EIGEN_4X4), tol=1e-12, max_iter=3)


class TestExtension:
    def test_kii_kernel_matches_direct_evaluation(self):
        for seed in range(10):
            A = random_pc_matrix(6, 1.8, seed)
            ext = extend_triad_indicator(kii_triad, A)
            direct = evaluate("kii", A)
            assert ext.value == direct.value
            assert ext.worst_triad == direct.worst_triad

    def test_single_submatrix_at_order_three(self):
        A = validate(MONO_SUB_3X3)
        assert extend_triad_indicator(kii_triad, A).value == kii_triad(Triad(2, 1, 3))

    def test_sum_kernel_reference_value(self):
        def triangular(t: Triad) -> float:
            if abs(t.x * t.z / t.y - 1.0) <= 1e-12:
                return 0.0
            s = t.x + t.y + t.z
            return s / (s + 1.0)

        assert extend_triad_indicator(triangular, validate(ORDER_SWAP_A)).value == pytest.approx(
            4 / 5, abs=1e-14
        )


class TestFamilies:
    def test_exponential_family_reproduces_kii(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            x, y, z = np.exp(rng.uniform(-2, 2, size=3))
            A = PCMatrix([[1, x, y], [1 / x, 1, z], [1 / y, 1 / z, 1]])
            assert evaluate("family:exp", A).value == pytest.approx(
                evaluate("kii", A).value, abs=1e-12
            )

    def test_bounded_ratio_family_matches_logpow(self):
        fid = register_family("bounded-ratio", lambda t: abs(t) / (1.0 + abs(t)))
        rng = np.random.default_rng(8)
        for _ in range(200):
            A = random_pc_matrix(4, 2.0, rng)
            assert evaluate(fid, A).value == pytest.approx(
                evaluate("logpow:1", A).value, abs=1e-12
            )

    def test_odd_function_rejected(self):
        with pytest.raises(ShapeFunctionViolationError) as exc:
            register_family("ident", lambda t: max(0.0, min(1.0, t)))
        assert "even" in str(exc.value) or "zero" in str(exc.value)

    def test_out_of_range_rejected(self):
        with pytest.raises(ShapeFunctionViolationError):
            register_family("big", lambda t: 2.0 * abs(t))

    def test_nonzero_at_zero_rejected(self):
        with pytest.raises(ShapeFunctionViolationError):
            register_family("shifted", lambda t: 0.5)

    def test_nonmonotone_rejected(self):
        with pytest.raises(ShapeFunctionViolationError):
            register_family("bump", lambda t: math.exp(-((abs(t) - 1.0) ** 2)) - math.exp(-1.0)
                            if t != 0 else 0.0)


class TestInvariantMaps:
    def test_consistent_triad(self):
        t = Triad(2, 6, 3)
        assert invariant_map("ratio", t) == 1.0
        assert invariant_map("logdiff", t) == pytest.approx(0.0, abs=1e-15)
        assert invariant_map("diff", t) == 0.0

    def test_difference_not_invariant_witness(self):
        A = validate([[1, 1, 2], [1, 1, 3], [1 / 2, 1 / 3, 1]])
        t0 = triad_at(A, TriadIndex(1, 2, 3))
        assert invariant_map("diff", t0) == 1.0
        scaled = scale_action(A, ScalingVector((1, 2, 3)))
        t1 = triad_at(scaled, TriadIndex(1, 2, 3))
        assert invariant_map("diff", t1) == pytest.approx(1 / 3, abs=1e-15)

    def test_ratio_invariant_under_same_scaling(self):
        A = validate([[1, 1, 2], [1, 1, 3], [1 / 2, 1 / 3, 1]])
        scaled = scale_action(A, ScalingVector((1, 2, 3)))
        before = invariant_map("ratio", triad_at(A, TriadIndex(1, 2, 3)))
        after = invariant_map("ratio", triad_at(scaled, TriadIndex(1, 2, 3)))
        assert before == pytest.approx(3 / 2, abs=1e-15)
        assert after == pytest.approx(3 / 2, abs=1e-15)


class TestScalingBehavior:
    def test_log_invariant_indicators(self):
        rng = np.random.default_rng(31)
        for _ in range(100):
            n = int(rng.integers(3, 7))
            A = random_pc_matrix(n, math.log(9), rng)
            lam = ScalingVector(tuple(np.exp(rng.uniform(-2, 2, size=n))))
            S = scale_action(A, lam)
            for ind_id in ("kii", "log2", "loge", "logpow:1", "family:exp"):
                assert abs(evaluate(ind_id, S).value - evaluate(ind_id, A).value) <= 1e-10

    def test_difference_indicators_break_on_witness(self):
        A = validate([[1, 1, 2], [1, 1, 3], [1 / 2, 1 / 3, 1]])
        S = scale_action(A, ScalingVector((1, 2, 3)))
        for ind_id in ("diff2", "diffe", "diffpow:1"):
            assert abs(evaluate(ind_id, S).value - evaluate(ind_id, A).value) > 1e-3

    def test_kii_transpose_equality(self):
        # a property of kii's inversion-symmetric kernel, not an axiom
        rng = np.random.default_rng(13)
        for _ in range(100):
            A = random_pc_matrix(int(rng.integers(3, 7)), math.log(9), rng)
            assert abs(evaluate("kii", transpose(A)).value - evaluate("kii", A).value) <= 1e-12


class TestRelativeError:
    def test_zero_when_equal(self):
        assert relative_error(3.0, 3.0) == 0.0

    def test_literal_formula(self):
        assert relative_error(1.0, 10.0) == 9.0
        assert relative_error(2.0, 1.0) == 0.5

    def test_zero_true_value(self):
        with pytest.raises(ZeroTrueValueError):
            relative_error(0.0, 1.0)
