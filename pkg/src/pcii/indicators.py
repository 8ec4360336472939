"""The catalogue of inconsistency indicators.

Stable indicator ids (lowercase strings, as used by the CLI and the
elicitation service):

    kii          max over triads of 1 - min(y/(xz), xz/y)
    ii1          (1 + kii)/2
    ii2          2 * kii
    ii3          max over 3x3 submatrices of exp(-max{x,y,z,1/x,1/y,1/z}) * kii kernel
    ii4          0 if consistent, else 1 - max over triads of min(y/(xz), xz/y) / 2
    ii5          max over triads of (x+y+z)/(x+y+z+1), zero on consistent triads
    ci           (lambda_max - n)/(n - 1), eigenvalue based; exceeds [0,1]
    log2         max of 1 - 2^(-|ln x + ln z - ln y|)
    loge         max of 1 - e^(-|ln x + ln z - ln y|)   (identical to kii)
    logpow[:k]   max of |l|^k / (1 + |l|^k), l = ln x + ln z - ln y, k in (0,1]
    diff2        max of 1 - 2^(-|xz - y|)
    diffe        max of 1 - e^(-|xz - y|)
    diffpow[:k]  max of |xz - y|^k / (1 + |xz - y|^k), k in (0,1]
    family:<name>  max of f(ln x + ln z - ln y) for a registered shape function f

Triad values are always read as (x, y, z) = (a_ij, a_ik, a_jk); a triad
is consistent when x*z = y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    EigenvalueNonconvergenceError,
    OrderTooSmallError,
    ShapeFunctionViolationError,
    UnknownIndicatorError,
    ZeroTrueValueError,
)
from .matrix import (
    PCMatrix,
    Triad,
    TriadIndex,
    is_consistent,
    triad_index_array,
    triad_values,
)

# Ratio-form tolerance for the exact-equality branch (x*z == y) of ii5.
EXACT_TRIAD_TOL = 1e-12

# Power-iteration defaults for the principal eigenvalue.
EIGEN_TOL = 1e-10
EIGEN_MAX_ITER = 100_000

Kernel = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class IndicatorResult:
    """Indicator value with its witness data.

    ``worst_triad`` is the argmax triad for max-aggregated indicators
    (for ii4, the triad whose min-ratio attains the governing maximum);
    ``principal_eigenvalue`` is populated only for ci.
    """

    value: float
    worst_triad: TriadIndex | None = None
    principal_eigenvalue: float | None = None


@dataclass(frozen=True)
class Indicator:
    """Catalogue entry: id, value range/conformance flags, triad kernel."""

    id: str
    normalized: bool  # value range contained in [0, 1]
    conforming: bool  # satisfies all five axioms
    kernel: Kernel | None  # per-triad kernel; None for ci
    aggregate: str = "max"  # "max", "min" (ii4), or "eigen" (ci)


def _ratio(x, y, z):
    return x * z / y


def _k_kii(x, y, z):
    r = _ratio(x, y, z)
    return 1.0 - np.minimum(r, 1.0 / r)


def _k_ii1(x, y, z):
    return 0.5 * (1.0 + _k_kii(x, y, z))


def _k_ii2(x, y, z):
    return 2.0 * _k_kii(x, y, z)


def _k_ii3(x, y, z):
    top = np.max([x, y, z, 1.0 / x, 1.0 / y, 1.0 / z], axis=0)
    return np.exp(-top) * _k_kii(x, y, z)


def _k_ii4(x, y, z):
    r = _ratio(x, y, z)
    return 1.0 - 0.5 * np.minimum(r, 1.0 / r)


def _k_ii5(x, y, z):
    s = x + y + z
    out = s / (s + 1.0)
    return np.where(np.abs(_ratio(x, y, z) - 1.0) <= EXACT_TRIAD_TOL, 0.0, out)


def _logdiff(x, y, z):
    # Algebraically log x + log z - log y; the ratio form evaluates to an
    # exact zero on exactly consistent triads instead of summed log noise.
    return np.log(x * z / y)


def _k_log2(x, y, z):
    return 1.0 - np.exp2(-np.abs(_logdiff(x, y, z)))


def _k_loge(x, y, z):
    return 1.0 - np.exp(-np.abs(_logdiff(x, y, z)))


def _k_diff2(x, y, z):
    return 1.0 - np.exp2(-np.abs(x * z - y))


def _k_diffe(x, y, z):
    return 1.0 - np.exp(-np.abs(x * z - y))


def _pow_kernel(k: float, magnitude: Callable) -> Kernel:
    def kern(x, y, z):
        m = np.abs(magnitude(x, y, z)) ** k
        return m / (1.0 + m)

    return kern


_BASE_CATALOGUE: dict[str, Indicator] = {
    "kii": Indicator("kii", normalized=True, conforming=True, kernel=_k_kii),
    "ii1": Indicator("ii1", normalized=True, conforming=False, kernel=_k_ii1),
    "ii2": Indicator("ii2", normalized=False, conforming=False, kernel=_k_ii2),
    "ii3": Indicator("ii3", normalized=True, conforming=False, kernel=_k_ii3),
    "ii4": Indicator("ii4", normalized=True, conforming=False, kernel=_k_ii4, aggregate="min"),
    "ii5": Indicator("ii5", normalized=True, conforming=False, kernel=_k_ii5),
    "ci": Indicator("ci", normalized=False, conforming=False, kernel=None, aggregate="eigen"),
    "log2": Indicator("log2", normalized=True, conforming=True, kernel=_k_log2),
    "loge": Indicator("loge", normalized=True, conforming=True, kernel=_k_loge),
    "diff2": Indicator("diff2", normalized=True, conforming=False, kernel=_k_diff2),
    "diffe": Indicator("diffe", normalized=True, conforming=False, kernel=_k_diffe),
}

_FAMILIES: dict[str, Indicator] = {}


def _shape_grid() -> list[float]:
    pts = [0.0]
    for e in range(-10, 11):
        pts.append(2.0**e)
        pts.append(-(2.0**e))
    return pts


def register_family(name: str, f: Callable[[float], float]) -> str:
    """Register f(ln x + ln z - ln y) as indicator id ``family:<name>``.

    f must map into [0,1], be nondecreasing on the nonnegative reals,
    vanish exactly at 0, and be even.  The three conditions are
    spot-checked on the grid {0, ±2^-10 .. ±2^10}; a grid pass is
    necessary, not sufficient.
    """
    if not name or ":" in name:
        raise UnknownIndicatorError(f"invalid family name {name!r}")
    grid = _shape_grid()
    for t in grid:
        v = f(t)
        if not (0.0 <= v <= 1.0):
            raise ShapeFunctionViolationError("range [0,1]", t, f"f({t!r}) = {v!r}")
    if f(0.0) != 0.0:
        raise ShapeFunctionViolationError("zero only at zero", 0.0, f"f(0) = {f(0.0)!r}")
    for t in grid:
        if t != 0.0 and f(t) == 0.0:
            raise ShapeFunctionViolationError("zero only at zero", t, "f vanishes off zero")
        if f(-t) != f(t):
            raise ShapeFunctionViolationError("evenness", t, f"f({-t!r}) != f({t!r})")
    pos = sorted(p for p in grid if p > 0.0)
    prev = f(0.0)
    for t in pos:
        cur = f(t)
        if cur < prev:
            raise ShapeFunctionViolationError("nondecreasing on R+", t, f"f drops to {cur!r}")
        prev = cur

    def kern(x, y, z):
        ell = _logdiff(x, y, z)
        return np.array([f(float(t)) for t in np.atleast_1d(ell)])

    ind_id = f"family:{name}"
    _FAMILIES[ind_id] = Indicator(ind_id, normalized=True, conforming=True, kernel=kern)
    return ind_id


# The shape function reproducing kii: 1 - e^(-|t|).
register_family("exp", lambda t: 1.0 - math.exp(-abs(t)))


def get_indicator(indicator_id: str) -> Indicator:
    """Resolve an indicator id, parsing logpow/diffpow parameters."""
    key = indicator_id.strip().lower()
    if key in _BASE_CATALOGUE:
        return _BASE_CATALOGUE[key]
    if key in _FAMILIES:
        return _FAMILIES[key]
    if key in ("logpow", "diffpow") or key.startswith(("logpow:", "diffpow:")):
        base, _, param = key.partition(":")
        k = 1.0
        if param:
            try:
                k = float(param)
            except ValueError:
                raise UnknownIndicatorError(f"bad exponent in {indicator_id!r}") from None
        if not (0.0 < k <= 1.0):
            raise UnknownIndicatorError(f"exponent must be in (0,1], got {k}")
        mag = _logdiff if base == "logpow" else (lambda x, y, z: x * z - y)
        return Indicator(f"{base}:{k:g}", normalized=True, conforming=(base == "logpow"),
                         kernel=_pow_kernel(k, mag))
    raise UnknownIndicatorError(f"unknown indicator {indicator_id!r}")


def catalogue_ids() -> tuple[str, ...]:
    """All registered ids (parameterized families listed by their canonical id)."""
    return tuple(_BASE_CATALOGUE) + ("logpow:1", "diffpow:1") + tuple(_FAMILIES)


def kii_triad(t: Triad | tuple[float, float, float]) -> float:
    """Triad kernel of kii: 1 - min(y/(xz), xz/y); zero iff x*z = y."""
    x, y, z = t.as_tuple() if isinstance(t, Triad) else t
    r = x * z / y
    return 1.0 - min(r, 1.0 / r)


def principal_eigenvalue(A: PCMatrix, tol: float = EIGEN_TOL, max_iter: int = EIGEN_MAX_ITER) -> float:
    """Perron root of a positive matrix by power iteration.

    All-ones start vector, max-norm normalization, stop when successive
    eigenvalue estimates differ by at most ``tol``.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    e = A.entries
    v = np.ones(A.n)
    lam_prev = None
    for _ in range(max_iter):
        w = e @ v
        lam = float(w.max())
        v = w / lam
        if lam_prev is not None and abs(lam - lam_prev) <= tol:
            return lam
        lam_prev = lam
    raise EigenvalueNonconvergenceError(
        f"power iteration did not converge within {max_iter} iterations"
    )


def eigenvalue_closed_form_3x3(A: PCMatrix) -> float:
    """Independent oracle for order 3: lambda_max = 1 + c + 1/c, c = (a12*a23/a13)^(1/3)."""
    if A.n != 3:
        raise OrderTooSmallError("closed form applies to order 3 only")
    e = A.entries
    c = (e[0, 1] * e[1, 2] / e[0, 2]) ** (1.0 / 3.0)
    return 1.0 + c + 1.0 / c


def evaluate(indicator_id: str, A: PCMatrix, eigen_tol: float = EIGEN_TOL) -> IndicatorResult:
    """Evaluate an indicator on a PC matrix of order >= 3."""
    ind = get_indicator(indicator_id)
    if A.n < 3:
        raise OrderTooSmallError(f"indicators need order >= 3, got {A.n}")
    if ind.aggregate == "eigen":
        lam = principal_eigenvalue(A, tol=eigen_tol)
        return IndicatorResult((lam - A.n) / (A.n - 1), None, lam)
    x, y, z = triad_values(A)
    vals = ind.kernel(x, y, z)
    if ind.aggregate == "min":
        # ii4: zero on consistent matrices, else governed by the largest min-ratio.
        if is_consistent(A):
            return IndicatorResult(0.0)
        pos = int(np.argmin(vals))
    else:
        pos = int(np.argmax(vals))
    idx = triad_index_array(A.n)[pos]
    witness = TriadIndex(int(idx[0]) + 1, int(idx[1]) + 1, int(idx[2]) + 1)
    return IndicatorResult(float(vals[pos]), witness)


def evaluate_triad_list(
    indicator_id: str,
    values: list[tuple[float, float, float]],
) -> tuple[float, int, list[float]]:
    """Indicator restricted to an explicit triad list (partial matrices).

    Returns (value, governing index into ``values``, per-triad kernels).
    Only kernel-based indicators are supported.
    """
    ind = get_indicator(indicator_id)
    if ind.kernel is None:
        raise UnknownIndicatorError(f"{ind.id} has no triad kernel")
    if not values:
        raise OrderTooSmallError("need at least one filled triad")
    x = np.array([v[0] for v in values])
    y = np.array([v[1] for v in values])
    z = np.array([v[2] for v in values])
    kernels = [float(v) for v in ind.kernel(x, y, z)]
    if ind.aggregate == "min":
        if bool(np.all(np.abs(x * z / y - 1.0) <= 1e-9)):
            return 0.0, int(np.argmax(kernels)), kernels
        pos = int(np.argmin(kernels))
    else:
        pos = int(np.argmax(kernels))
    return kernels[pos], pos, kernels


def extend_triad_indicator(
    triad_indicator: Callable[[Triad], float], A: PCMatrix
) -> IndicatorResult:
    """Extend an order-3 indicator to order n as the max over all 3x3 submatrices.

    Increasing selectors are enumerated; for order-invariant triad
    indicators this equals the max over 𝒯(n).
    """
    if A.n < 3:
        raise OrderTooSmallError(f"need order >= 3, got {A.n}")
    idx = triad_index_array(A.n)
    e = A.entries
    best: float | None = None
    best_t: TriadIndex | None = None
    for i, j, k in idx:
        t = Triad(float(e[i, j]), float(e[i, k]), float(e[j, k]))
        v = triad_indicator(t)
        if best is None or v > best:
            best = v
            best_t = TriadIndex(int(i) + 1, int(j) + 1, int(k) + 1)
    return IndicatorResult(float(best), best_t)


def invariant_map(kind: str, t: Triad) -> float:
    """Triad functionals compared against consistency.

    ratio (xz/y) and logdiff (ln x + ln z - ln y) are invariant under
    the scaling action; diff (xz - y) is not.
    """
    x, y, z = t.as_tuple()
    if kind == "ratio":
        return x * z / y
    if kind == "logdiff":
        return math.log(x) + math.log(z) - math.log(y)
    if kind == "diff":
        return x * z - y
    raise ValueError(f"unknown invariant map kind {kind!r}")


def relative_error(t: float, t_approx: float) -> float:
    """|(t - t_approx) / t|; the true value t must be nonzero."""
    if t == 0:
        raise ZeroTrueValueError("relative error is undefined for a zero true value")
    return abs((t - t_approx) / t)
