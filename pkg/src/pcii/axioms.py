"""Machine-checkable formulations of the five inconsistency axioms.

Axioms:

    A1  consistency detection   ii(A) = 0 iff A is consistent
    A2  normalization           ii(A) in [0, 1]
    A3  error intolerance       some distance d on the positive reals exists
                                such that d(y, xz) > phi forces ii(x,y,z)
                                above a positive floor
    A4  monotonicity            B a submatrix of A implies ii(B) <= ii(A)
    A5  order invariance        ii is unchanged by reordering the entities

Every check is a falsification attempt on random and structured inputs;
a FAIL report always carries a counterexample that re-verifies
standalone.  A3 quantifies over an unbounded domain, so it is the one
axiom whose verdict may be INCONCLUSIVE: a decaying trend that the
configured escalations cannot resolve either way.

A3 is existential in the distance d.  The checker runs each configured
distance separately and the combined verdict passes if at least one
distance passes; ii5, for instance, is error-intolerant under the
absolute difference but not under the log distance.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import (
    NonPositiveEntryError,
    OrderTooSmallError,
    SuiteViolationError,
    UnknownAxiomError,
)
from .indicators import evaluate, get_indicator
from .matrix import (
    ENTRY_MAX,
    ENTRY_MIN,
    PCMatrix,
    Permutation,
    SubmatrixSelector,
    Triad,
    enumerate_selectors,
    is_consistent,
    permute,
    submatrix,
    validate,
)

AXIOMS = ("A1", "A2", "A3", "A4", "A5")

AXIOM_TITLES = {
    "A1": "consistency detection",
    "A2": "normalization",
    "A3": "error intolerance",
    "A4": "monotonicity",
    "A5": "comparisons order invariance",
}

DISTANCE_KINDS = ("log_abs", "abs_diff")

DEFAULT_SPREAD = math.log(9.0)


@dataclass(frozen=True)
class AxiomCheckConfig:
    """Knobs for the axiom checkers; identical configs give identical reports."""

    rng_seed: int = 7
    samples: int = 100
    max_order: int = 7
    exhaustive_order: int = 6
    tolerance: float = 1e-10
    distance_kinds: tuple[str, ...] = ("log_abs",)
    phi_grid: tuple[float, ...] = (0.5, 1.0, 2.0, 5.0)
    embed_constant: float = 10.0
    spread: float = DEFAULT_SPREAD
    decay_epsilon: float = 1e-6
    relative_error_convention: str = "difference"

    def __post_init__(self):
        if self.samples <= 0:
            raise ValueError("samples must be positive")
        if any(p <= 0 for p in self.phi_grid):
            raise ValueError("phi grid values must be positive")
        for d in self.distance_kinds:
            if d not in DISTANCE_KINDS:
                raise ValueError(f"unknown distance kind {d!r}")


@dataclass(frozen=True)
class AxiomReport:
    """Verdict for one (axiom, indicator) pair with re-checkable evidence."""

    axiom: str
    indicator: str
    verdict: str  # PASS | FAIL | INCONCLUSIVE
    trials: int
    counterexample: dict[str, Any] | None = None
    phi_table: dict[str, dict[float, float]] | None = None


@dataclass(frozen=True)
class EmbeddingSpec:
    """A triad placed at positions (1,2), (1,3), (2,3) of a larger matrix.

    Rows 1..3 receive weights (x, 1, x/y) so that, apart from the triads
    forced by the embedded one, every other triad is consistent; the
    remaining entities take the filler weights (all ones when omitted).
    """

    triad: Triad
    target_order: int
    filler: tuple[float, ...] | None = None


# --- deterministic generators -----------------------------------------------


def _child_rng(seed: int, *tags: object) -> np.random.Generator:
    digest = hashlib.sha256(repr((seed,) + tags).encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "big"))


def _as_rng(seed: int | np.random.Generator) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_pc_matrix(n: int, spread: float, seed: int | np.random.Generator) -> PCMatrix:
    """Random reciprocal matrix; upper entries log-uniform on [e^-spread, e^spread]."""
    if n < 3:
        raise OrderTooSmallError(f"need order >= 3, got {n}")
    if spread < 0:
        raise ValueError("spread must be nonnegative")
    rng = _as_rng(seed)
    M = np.ones((n, n))
    iu, ju = np.triu_indices(n, k=1)
    vals = np.exp(rng.uniform(-spread, spread, size=len(iu)))
    M[iu, ju] = vals
    M[ju, iu] = 1.0 / vals
    return PCMatrix(M)


def random_consistent_matrix(n: int, spread: float, seed: int | np.random.Generator) -> PCMatrix:
    """Random consistent matrix m_ij = w_i / w_j with entries within [e^-spread, e^spread]."""
    if n < 3:
        raise OrderTooSmallError(f"need order >= 3, got {n}")
    rng = _as_rng(seed)
    w = np.exp(rng.uniform(-spread / 2.0, spread / 2.0, size=n))
    return PCMatrix(np.outer(w, 1.0 / w))


def perturb_one_entry(
    A: PCMatrix, seed: int | np.random.Generator, factor_range: tuple[float, float] = (2.0, 10.0)
) -> PCMatrix:
    """Multiply one random upper entry (and fix its reciprocal) by a log-uniform factor.

    Applied to a consistent matrix of order >= 3 this guarantees at
    least one inconsistent triad.
    """
    rng = _as_rng(seed)
    n = A.n
    i = int(rng.integers(0, n - 1))
    j = int(rng.integers(i + 1, n))
    lo, hi = factor_range
    f = math.exp(rng.uniform(math.log(lo), math.log(hi)))
    M = A.entries.copy()
    M[i, j] *= f
    M[j, i] = 1.0 / M[i, j]
    return PCMatrix(M)


def embed_triad(spec: EmbeddingSpec, seed: int | np.random.Generator | None = None) -> PCMatrix:
    """Materialize an embedding; the triad is the only inconsistency source.

    With no filler and no seed the added entities all get weight 1; with
    a seed, filler weights are drawn log-uniform on [1/3, 3].
    """
    n = spec.target_order
    if n < 3:
        raise OrderTooSmallError(f"target order must be >= 3, got {n}")
    x, y, z = spec.triad.as_tuple()
    if spec.filler is not None:
        if len(spec.filler) != n - 3:
            raise ValueError(f"filler needs {n - 3} weights, got {len(spec.filler)}")
        if any(not (v > 0 and math.isfinite(v)) for v in spec.filler):
            raise NonPositiveEntryError(0, 0, min(spec.filler))
        filler = np.array(spec.filler, dtype=float)
    elif seed is not None:
        filler = np.exp(_as_rng(seed).uniform(-math.log(3.0), math.log(3.0), size=n - 3))
    else:
        filler = np.ones(n - 3)
    w = np.concatenate(([x, 1.0, x / y], filler))
    M = np.outer(w, 1.0 / w)
    M[0, 1], M[1, 0] = x, 1.0 / x
    M[0, 2], M[2, 0] = y, 1.0 / y
    M[1, 2], M[2, 1] = z, 1.0 / z
    return PCMatrix(M)


def triad_distance(kind: str, y: float, xz: float) -> float:
    """The axiom's distance between the long edge y and the product xz."""
    if kind == "log_abs":
        return abs(math.log(y) - math.log(xz))
    if kind == "abs_diff":
        return abs(y - xz)
    raise ValueError(f"unknown distance kind {kind!r}")


def triad_relative_error(t: Triad, convention: str = "difference") -> float:
    """Relative error of reading x*z as an approximation of y.

    "difference": |y - xz| / y.  "ratio": max(y/xz, xz/y), the multiple
    by which the two sides disagree.  Both conventions are exposed
    because published accounts normalize this quantity both ways.
    """
    x, y, z = t.as_tuple()
    if convention == "difference":
        return abs(y - x * z) / y
    if convention == "ratio":
        r = x * z / y
        return max(r, 1.0 / r)
    raise ValueError(f"unknown convention {convention!r}")


# --- known witness matrices ---------------------------------------------------

# Catalogue regression corpus: matrices whose indicator values are known
# in closed form and exercise each documented axiom failure.
OVER_UNIT_3X3 = ((1, 1, 9), (1, 1, 1), (1 / 9, 1, 1))  # ii2 = 16/9
ORDER_SWAP_A = ((1, 2, 1), (1 / 2, 1, 1), (1, 1, 1))  # ii5 = 4/5
ORDER_SWAP_B = ((1, 1 / 2, 1), (2, 1, 1), (1, 1, 1))  # ii5 = 5/7 after swapping entities 1,2
MONO_SUPER_4X4 = ((1, 1, 1, 1), (1, 1, 2, 1), (1, 1 / 2, 1, 3), (1, 1, 1 / 3, 1))  # ii4 = 1/2
MONO_SUB_3X3 = ((1, 2, 1), (1 / 2, 1, 3), (1, 1 / 3, 1))  # ii4 = 11/12, rows 2..4 above
EIGEN_4X4 = ((1, 2, 1 / 2, 2), (1 / 2, 1, 2, 1 / 2), (2, 1 / 2, 1, 2), (1 / 2, 2, 1 / 2, 1))
EIGEN_SUB_SELECTORS = ((1, 2, 3), (1, 3, 4), (1, 2, 4))  # ci 0.25, 0.02681, 0.02681
EIGEN_OVER_UNIT = ((1, 1 / 9, 9), (9, 1, 1 / 9), (1 / 9, 9, 1))  # ci ~ 3.555


# --- axiom checkers -----------------------------------------------------------


def _matrix_json(A: PCMatrix) -> dict[str, Any]:
    return {"n": A.n, "rows": A.to_rows()}


def _matrix_from_json(d: dict[str, Any]) -> PCMatrix:
    return PCMatrix(np.array(d["rows"], dtype=float))


def _orders(lo: int, hi: int) -> list[int]:
    return list(range(lo, max(lo, hi) + 1))


def _dyadic_consistent_matrix(n: int, rng: np.random.Generator) -> PCMatrix:
    # Power-of-two weights make every entry and every triad ratio exact,
    # so a conforming indicator evaluates to exactly zero; ordinary
    # consistent draws carry ulp-level ratio noise that kernels with
    # sublinear shape functions amplify far beyond the check tolerance.
    w = np.exp2(rng.integers(-5, 6, size=n).astype(float))
    return PCMatrix(np.outer(w, 1.0 / w))


def _check_a1(ind_id: str, cfg: AxiomCheckConfig) -> AxiomReport:
    rng = _child_rng(cfg.rng_seed, "A1", ind_id)
    orders = _orders(3, cfg.max_order)
    trials = 0
    for s in range(cfg.samples):
        A = _dyadic_consistent_matrix(orders[s % len(orders)], rng)
        trials += 1
        v = evaluate(ind_id, A).value
        if v > cfg.tolerance:
            ce = {"kind": "consistent_nonzero", "matrix": _matrix_json(A), "value": float(v)}
            return AxiomReport("A1", ind_id, "FAIL", trials, ce)
    for s in range(cfg.samples):
        base = random_consistent_matrix(orders[s % len(orders)], cfg.spread, rng)
        A = perturb_one_entry(base, rng)
        trials += 1
        v = evaluate(ind_id, A).value
        # The converse direction asserts a nonzero value, not a large one:
        # a conforming indicator may map a barely-traceable inconsistency
        # to an arbitrarily small positive number.
        if v <= 0.0:
            ce = {"kind": "inconsistent_zero", "matrix": _matrix_json(A), "value": float(v)}
            return AxiomReport("A1", ind_id, "FAIL", trials, ce)
    return AxiomReport("A1", ind_id, "PASS", trials)


def _check_a2(ind_id: str, cfg: AxiomCheckConfig) -> AxiomReport:
    rng = _child_rng(cfg.rng_seed, "A2", ind_id)
    orders = _orders(3, cfg.max_order)
    for s in range(cfg.samples):
        A = random_pc_matrix(orders[s % len(orders)], cfg.spread, rng)
        v = evaluate(ind_id, A).value
        if v < -cfg.tolerance or v > 1.0 + cfg.tolerance:
            ce = {"kind": "out_of_unit_range", "matrix": _matrix_json(A), "value": float(v)}
            return AxiomReport("A2", ind_id, "FAIL", s + 1, ce)
    return AxiomReport("A2", ind_id, "PASS", cfg.samples)


def _boundary_triad(distance: str, phi: float, factor: float = 1.05) -> Triad:
    if distance == "log_abs":
        return Triad(1.0, math.exp(factor * phi), 1.0)
    return Triad(1.0, 1.0 + factor * phi, 1.0)


# Sampled triads keep the consistency ratio within e^±20 so that every
# catalogue indicator, the eigenvalue-based one included, stays
# computable; the axiom's premise only requires the distance to exceed phi.
_MAX_LOG_RATIO = 20.0


def _sample_triad_beyond(
    distance: str, phi: float, rng: np.random.Generator
) -> Triad:
    x = math.exp(rng.uniform(-1.0, 1.0))
    z = math.exp(rng.uniform(-1.0, 1.0))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    if distance == "log_abs":
        delta = min(phi * (1.0 + rng.exponential(1.0)), _MAX_LOG_RATIO)
        y = x * z * math.exp(sign * delta)
    else:
        delta = min(phi * (1.0 + rng.exponential(1.0)), 1e6)
        y = x * z - delta
        if sign > 0 or y <= x * z * math.exp(-_MAX_LOG_RATIO):
            y = x * z + delta
    return Triad(x, y, z)


# Escalation points must stay resolvably inconsistent in ratio terms:
# below every consistent-branch tolerance a double-precision evaluation
# legitimately reads the triad as consistent, which would fake a failure.
_RESOLVABLE_RATIO = 1e-8


def _resolvable(x: float, y: float, z: float) -> bool:
    return abs(x * z / y - 1.0) > _RESOLVABLE_RATIO


def _escalation_families(
    distance: str, phi: float, cfg: AxiomCheckConfig
) -> list[tuple[str, list[Triad]]]:
    fams: list[tuple[str, list[Triad]]] = []
    c = cfg.embed_constant
    growth = []
    for m in range(1, 25):
        x = 2.0**m
        y = x * x + c
        if y < ENTRY_MAX and triad_distance(distance, y, x * x) > phi and _resolvable(x, y, x):
            growth.append(Triad(x, y, x))
    fams.append(("growth", growth))
    b = math.exp(1.05 * phi)
    spread_pts = []
    for j in range(0, 47):
        t = 2.0**j
        if t < ENTRY_MAX and 1.0 / t > ENTRY_MIN:
            if triad_distance(distance, b, 1.0) > phi and _resolvable(t, b, 1.0 / t):
                spread_pts.append(Triad(t, b, 1.0 / t))
    fams.append(("spread", spread_pts))
    shrink_pts = []
    for j in range(0, 24):
        e = 2.0**-j
        y = e * e * b
        if y > ENTRY_MIN and triad_distance(distance, y, e * e) > phi and _resolvable(e, y, e):
            shrink_pts.append(Triad(e, y, e))
    fams.append(("shrink", shrink_pts))
    return fams


def _check_a3(ind_id: str, cfg: AxiomCheckConfig) -> AxiomReport:
    trials = 0
    phi_table: dict[str, dict[float, float]] = {}
    per_distance: dict[str, str] = {}
    first_fail: dict[str, Any] | None = None

    for distance in cfg.distance_kinds:
        rng = _child_rng(cfg.rng_seed, "A3", ind_id, distance)
        floors: dict[float, float] = {}
        fail_ce: dict[str, Any] | None = None
        trend = False
        for phi in cfg.phi_grid:
            observed: list[float] = []

            def _eval_triad(t: Triad, order: int, origin: str):
                nonlocal trials, fail_ce
                M = embed_triad(EmbeddingSpec(t, order))
                v = evaluate(ind_id, M).value
                trials += 1
                observed.append(v)
                if fail_ce is None and v <= cfg.decay_epsilon:
                    fail_ce = {
                        "kind": "error_tolerated",
                        "distance": distance,
                        "phi": float(phi),
                        "origin": origin,
                        "triad": [t.x, t.y, t.z],
                        "order": order,
                        "matrix": _matrix_json(M),
                        "value": float(v),
                    }
                return v

            for factor in (1.001, 1.01, 1.1):
                _eval_triad(_boundary_triad(distance, phi, factor), 3, "boundary")
            for s in range(cfg.samples):
                t = _sample_triad_beyond(distance, phi, rng)
                order = 3
                if s % 4 == 3 and cfg.max_order >= 4:
                    order = int(rng.integers(4, cfg.max_order + 1))
                _eval_triad(t, order, "sampled")

            for fam_name, pts in _escalation_families(distance, phi, cfg):
                seq = [_eval_triad(t, 3, fam_name) for t in pts]
                if len(seq) >= 3 and seq[-1] < 0.5 * seq[0]:
                    trend = True
            base = _boundary_triad(distance, phi)
            seq = [_eval_triad(base, order, "embedding") for order in _orders(3, cfg.max_order)]
            if len(seq) >= 3 and seq[-1] < 0.5 * seq[0]:
                trend = True

            floors[float(phi)] = float(min(observed))
        phi_table[distance] = floors
        if fail_ce is not None:
            per_distance[distance] = "FAIL"
            if first_fail is None:
                first_fail = fail_ce
        elif trend:
            per_distance[distance] = "INCONCLUSIVE"
        else:
            per_distance[distance] = "PASS"

    if any(v == "PASS" for v in per_distance.values()):
        verdict = "PASS"
        ce = None
    elif any(v == "INCONCLUSIVE" for v in per_distance.values()):
        verdict = "INCONCLUSIVE"
        ce = None
    else:
        verdict = "FAIL"
        ce = first_fail
    return AxiomReport("A3", ind_id, verdict, trials, ce, phi_table)


def _check_a4(ind_id: str, cfg: AxiomCheckConfig) -> AxiomReport:
    rng = _child_rng(cfg.rng_seed, "A4", ind_id)
    orders = _orders(4, cfg.max_order)
    trials = 0
    for s in range(cfg.samples):
        n = orders[s % len(orders)]
        A = random_pc_matrix(n, cfg.spread, rng)
        trials += 1
        v_full = evaluate(ind_id, A).value
        for m in range(3, n):
            if n <= cfg.exhaustive_order:
                selectors: Iterable[SubmatrixSelector] = enumerate_selectors(n, m)
            else:
                selectors = (
                    SubmatrixSelector(tuple(int(q) + 1 for q in sorted(rng.choice(n, m, replace=False))))
                    for _ in range(200)
                )
            for sel in selectors:
                v_sub = evaluate(ind_id, submatrix(A, sel)).value
                if v_sub > v_full + cfg.tolerance:
                    ce = {
                        "kind": "submatrix_exceeds",
                        "matrix": _matrix_json(A),
                        "selector": list(sel.sigma),
                        "value_full": float(v_full),
                        "value_sub": float(v_sub),
                    }
                    return AxiomReport("A4", ind_id, "FAIL", trials, ce)
    return AxiomReport("A4", ind_id, "PASS", trials)


def _all_permutations(n: int) -> list[Permutation]:
    import itertools

    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def _check_a5(ind_id: str, cfg: AxiomCheckConfig) -> AxiomReport:
    rng = _child_rng(cfg.rng_seed, "A5", ind_id)
    trials = 0
    for n in _orders(3, cfg.max_order):
        exhaustive = math.factorial(n) <= max(cfg.samples, 6)
        perms_all = _all_permutations(n) if exhaustive else None
        for _ in range(cfg.samples):
            A = random_pc_matrix(n, cfg.spread, rng)
            v = evaluate(ind_id, A).value
            if perms_all is not None:
                perms = perms_all
            else:
                perms = [
                    Permutation(tuple(int(q) + 1 for q in rng.permutation(n)))
                    for _ in range(cfg.samples)
                ]
            for p in perms:
                trials += 1
                vp = evaluate(ind_id, permute(A, p)).value
                if abs(vp - v) > cfg.tolerance:
                    ce = {
                        "kind": "order_dependent",
                        "matrix": _matrix_json(A),
                        "permutation": list(p.perm),
                        "value": float(v),
                        "value_permuted": float(vp),
                    }
                    return AxiomReport("A5", ind_id, "FAIL", trials, ce)
    return AxiomReport("A5", ind_id, "PASS", trials)


_CHECKERS = {
    "A1": _check_a1,
    "A2": _check_a2,
    "A3": _check_a3,
    "A4": _check_a4,
    "A5": _check_a5,
}


def check_axiom(axiom: str, indicator_id: str, cfg: AxiomCheckConfig | None = None) -> AxiomReport:
    """Run one axiom checker against one registered indicator."""
    key = axiom.strip().upper()
    if key not in _CHECKERS:
        raise UnknownAxiomError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")
    cfg = cfg or AxiomCheckConfig()
    ind = get_indicator(indicator_id)  # raises UnknownIndicatorError
    report = _CHECKERS[key](ind.id, cfg)
    if report.verdict == "FAIL":
        assert verify_counterexample(report, cfg), "internal error: witness failed re-check"
    return report


def verify_counterexample(report: AxiomReport, cfg: AxiomCheckConfig | None = None) -> bool:
    """Re-check a FAIL report's stored witness from scratch."""
    cfg = cfg or AxiomCheckConfig()
    ce = report.counterexample
    if report.verdict != "FAIL" or ce is None:
        return False
    ind = report.indicator
    kind = ce["kind"]
    if kind == "consistent_nonzero":
        A = _matrix_from_json(ce["matrix"])
        return is_consistent(A) and evaluate(ind, A).value > cfg.tolerance
    if kind == "inconsistent_zero":
        A = _matrix_from_json(ce["matrix"])
        return (not is_consistent(A)) and evaluate(ind, A).value <= 0.0
    if kind == "out_of_unit_range":
        A = _matrix_from_json(ce["matrix"])
        v = evaluate(ind, A).value
        return v < -cfg.tolerance or v > 1.0 + cfg.tolerance
    if kind == "error_tolerated":
        A = _matrix_from_json(ce["matrix"])
        x, y, z = ce["triad"]
        beyond = triad_distance(ce["distance"], y, x * z) > ce["phi"]
        return beyond and evaluate(ind, A).value <= cfg.decay_epsilon
    if kind == "submatrix_exceeds":
        A = _matrix_from_json(ce["matrix"])
        sub = submatrix(A, SubmatrixSelector(tuple(ce["selector"])))
        return evaluate(ind, sub).value > evaluate(ind, A).value + cfg.tolerance
    if kind == "order_dependent":
        A = _matrix_from_json(ce["matrix"])
        vp = evaluate(ind, permute(A, Permutation(tuple(ce["permutation"])))).value
        return abs(vp - evaluate(ind, A).value) > cfg.tolerance
    return False


# --- suites -------------------------------------------------------------------


def _expect_value(indicator: str, A: PCMatrix, expected: float, tag: str) -> None:
    got = evaluate(indicator, A).value
    if abs(got - expected) > 1e-12:
        raise SuiteViolationError(indicator, tag, repr(expected), repr(got))


def run_independence_suite(
    cfg: AxiomCheckConfig | None = None,
) -> dict[str, dict[str, AxiomReport]]:
    """Check that each ii_j fails exactly axiom A.j and the known values hold.

    The A3 column runs under both distances, matching the axiom's
    existential quantifier over d.  Raises SuiteViolationError on any
    deviation from the expected 5x5 verdict grid.
    """
    cfg = cfg or AxiomCheckConfig()
    cfg = dataclasses.replace(cfg, distance_kinds=("log_abs", "abs_diff"))
    grid: dict[str, dict[str, AxiomReport]] = {}
    for j in range(1, 6):
        ind = f"ii{j}"
        grid[ind] = {}
        for pos, axiom in enumerate(AXIOMS, start=1):
            report = check_axiom(axiom, ind, cfg)
            grid[ind][axiom] = report
            expected = "FAIL" if pos == j else "PASS"
            if report.verdict != expected:
                raise SuiteViolationError(ind, axiom, expected, report.verdict)

    _expect_value("ii2", validate(OVER_UNIT_3X3), 16.0 / 9.0, "reference value")
    _expect_value("ii5", validate(ORDER_SWAP_A), 4.0 / 5.0, "reference value")
    _expect_value("ii5", validate(ORDER_SWAP_B), 5.0 / 7.0, "reference value")
    _expect_value("ii4", validate(MONO_SUPER_4X4), 1.0 / 2.0, "reference value")
    _expect_value("ii4", validate(MONO_SUB_3X3), 11.0 / 12.0, "reference value")
    _expect_value("ii1", PCMatrix(np.ones((3, 3))), 1.0 / 2.0, "reference value")
    return grid


def run_consistency_suite(cfg: AxiomCheckConfig | None = None) -> list[AxiomReport]:
    """Check that kii passes all five axioms; any failure is build-blocking."""
    cfg = cfg or AxiomCheckConfig()
    reports = []
    for axiom in AXIOMS:
        report = check_axiom(axiom, "kii", cfg)
        reports.append(report)
        if report.verdict != "PASS":
            raise SuiteViolationError("kii", axiom, "PASS", report.verdict)
    return reports


# --- report serialization -----------------------------------------------------


def report_to_dict(report: AxiomReport) -> dict[str, Any]:
    d: dict[str, Any] = {
        "axiom": report.axiom,
        "indicator": report.indicator,
        "verdict": report.verdict,
        "trials": report.trials,
    }
    if report.counterexample is not None:
        d["counterexample"] = report.counterexample
    if report.phi_table is not None:
        d["phi_table"] = {
            dist: {repr(phi): floor for phi, floor in floors.items()}
            for dist, floors in report.phi_table.items()
        }
    return d


def report_from_dict(d: dict[str, Any]) -> AxiomReport:
    phi_table = None
    if "phi_table" in d:
        phi_table = {
            dist: {float(phi): floor for phi, floor in floors.items()}
            for dist, floors in d["phi_table"].items()
        }
    return AxiomReport(
        axiom=d["axiom"],
        indicator=d["indicator"],
        verdict=d["verdict"],
        trials=d["trials"],
        counterexample=d.get("counterexample"),
        phi_table=phi_table,
    )


def report_to_json(report: AxiomReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True)


def report_from_json(payload: str) -> AxiomReport:
    return report_from_dict(json.loads(payload))
