"""Pairwise-comparison (PC) matrices and their exact algebra.

A PC matrix is a square matrix of strictly positive preference ratios
whose entries satisfy reciprocity (m_ij * m_ji = 1, forcing a unit
diagonal).  This module owns validation, geometric-mean
reciprocalization, the consistency test, triad and submatrix
combinatorics, permutations, the positive-weight scaling action, and
transposition.

All published indices (triads, selectors, permutations) are 1-based;
matrices are stored as read-only float64 arrays.  Every operation is a
pure function returning fresh immutable values.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EntryOutOfRangeError,
    IndexOutOfRangeError,
    InvalidPermutationError,
    NonInjectiveSelectorError,
    NonPositiveEntryError,
    NonPositiveScalingError,
    NonSquareError,
    NonUnitDiagonalError,
    OrderTooSmallError,
    ReciprocityViolationError,
    SelectorOutOfRangeError,
)

# Accepted entry magnitudes keep triple products inside double range.
ENTRY_MIN = 1e-15
ENTRY_MAX = 1e15

# Strict validation slack; reciprocity is exact in theory, floating input is not.
RECIPROCITY_TOL = 1e-9

# Default tolerance for the ratio-form consistency test.
CONSISTENCY_TOL = 1e-9


class PCMatrix:
    """Immutable n-by-n matrix of strictly positive ratios.

    Construct through :func:`validate`, :func:`reciprocalize`,
    :func:`from_weights`, or the operations below; direct construction
    assumes the array already satisfies the invariants.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: np.ndarray):
        arr = np.array(entries, dtype=float)
        arr.setflags(write=False)
        self._entries = arr

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    def to_rows(self) -> list[list[float]]:
        return [[float(v) for v in row] for row in self._entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PCMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self) -> int:
        return hash(self._entries.tobytes())

    def __repr__(self) -> str:
        return f"PCMatrix(n={self.n})"


@dataclass(frozen=True, order=True)
class TriadIndex:
    """1-based index triple (i, j, k) with i < j < k."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        if not (1 <= self.i < self.j < self.k):
            raise IndexOutOfRangeError(f"triad index must satisfy 1 <= i < j < k, got {self}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


@dataclass(frozen=True)
class Triad:
    """Triad values (x, y, z) = (a_ij, a_ik, a_jk); y is the long edge."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise NonPositiveEntryError(0, 0, v)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class SubmatrixSelector:
    """Injective 1-based index selection defining a submatrix."""

    sigma: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.sigma)) != len(self.sigma):
            raise NonInjectiveSelectorError(f"selector {self.sigma} repeats an index")
        if any(i < 1 for i in self.sigma):
            raise SelectorOutOfRangeError(f"selector {self.sigma} has indices below 1")

    @property
    def m(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class ScalingVector:
    """Strictly positive weights acting on a PC matrix by m_ij -> m_ij * l_i / l_j."""

    lambdas: tuple[float, ...]

    def __post_init__(self):
        for v in self.lambdas:
            if not (v > 0 and math.isfinite(v)):
                raise NonPositiveScalingError(f"scaling weight {v!r} is not strictly positive")


@dataclass(frozen=True)
class Permutation:
    """Bijection on {1..n}; perm[i-1] is the image of i."""

    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise InvalidPermutationError(f"{self.perm} is not a bijection on 1..{n}")

    @property
    def n(self) -> int:
        return len(self.perm)


def validate(raw: Sequence[Sequence[float]] | np.ndarray, mode: str = "strict") -> PCMatrix:
    """Check a raw array and wrap it as a PCMatrix.

    Strict mode enforces positivity, entry bounds, a unit diagonal, and
    reciprocity within ``RECIPROCITY_TOL``.  Lenient mode enforces only
    positivity and bounds, leaving the rest to :func:`reciprocalize`.
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"unknown validation mode {mode!r}")
    arr = np.array(raw, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 2:
        raise OrderTooSmallError(f"matrix order must be at least 2, got {n}")
    for i in range(n):
        for j in range(n):
            v = arr[i, j]
            if not (math.isfinite(v) and v > 0):
                raise NonPositiveEntryError(i + 1, j + 1, float(v))
            if not (ENTRY_MIN < v < ENTRY_MAX):
                raise EntryOutOfRangeError(i + 1, j + 1, float(v))
    if mode == "strict":
        for i in range(n):
            if abs(arr[i, i] - 1.0) > RECIPROCITY_TOL:
                raise NonUnitDiagonalError(i + 1, float(arr[i, i]))
        for i in range(n):
            for j in range(i + 1, n):
                prod = arr[i, j] * arr[j, i]
                if abs(prod - 1.0) > RECIPROCITY_TOL:
                    raise ReciprocityViolationError(i + 1, j + 1, float(prod))
    return PCMatrix(arr)


def reciprocalize(raw: PCMatrix | Sequence[Sequence[float]] | np.ndarray) -> PCMatrix:
    """Force exact reciprocity by geometric-mean averaging of each pair.

    a_ij and 1/a_ji are two readings of the same ratio; their geometric
    mean out_ij = sqrt(a_ij / a_ji) (with out_ji = 1 / out_ij and a unit
    diagonal) is the log-distance projection onto reciprocal matrices.
    Idempotent on already-reciprocal input up to floating rounding.
    """
    A = raw if isinstance(raw, PCMatrix) else validate(raw, mode="lenient")
    n = A.n
    out = np.ones((n, n))
    e = A.entries
    for i in range(n):
        for j in range(i + 1, n):
            g = math.sqrt(e[i, j] / e[j, i])
            out[i, j] = g
            out[j, i] = 1.0 / g
    return PCMatrix(out)


def from_weights(weights: Sequence[float]) -> PCMatrix:
    """Build the consistent matrix m_ij = w_i / w_j from positive weights."""
    w = np.array(weights, dtype=float)
    if w.ndim != 1 or len(w) < 2:
        raise OrderTooSmallError("need at least 2 weights")
    if np.any(~np.isfinite(w)) or np.any(w <= 0):
        raise NonPositiveEntryError(0, 0, float(w.min()))
    return PCMatrix(np.outer(w, 1.0 / w))


@lru_cache(maxsize=128)
def triad_index_array(n: int) -> np.ndarray:
    """All 0-based (i, j, k) index triples with i < j < k, lexicographic."""
    if n < 3:
        raise OrderTooSmallError(f"triads need order >= 3, got {n}")
    return np.array(list(itertools.combinations(range(n), 3)), dtype=np.intp)


def triads(n: int) -> tuple[TriadIndex, ...]:
    """All C(n,3) strictly increasing 1-based triad indices, lexicographic."""
    return tuple(TriadIndex(i + 1, j + 1, k + 1) for i, j, k in triad_index_array(n))


def triad_at(A: PCMatrix, t: TriadIndex) -> Triad:
    """Read the triad (a_ij, a_ik, a_jk) at a 1-based index triple."""
    if t.k > A.n:
        raise IndexOutOfRangeError(f"triad {t} out of range for order {A.n}")
    e = A.entries
    return Triad(float(e[t.i - 1, t.j - 1]), float(e[t.i - 1, t.k - 1]), float(e[t.j - 1, t.k - 1]))


def triad_values(A: PCMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized triad values over all of 𝒯(n): arrays (x, y, z)."""
    idx = triad_index_array(A.n)
    e = A.entries
    return (
        e[idx[:, 0], idx[:, 1]],
        e[idx[:, 0], idx[:, 2]],
        e[idx[:, 1], idx[:, 2]],
    )


def is_consistent(A: PCMatrix, tol: float = CONSISTENCY_TOL) -> bool:
    """Ratio-form consistency: |a_ij * a_jk / a_ik - 1| <= tol for every triad.

    The ratio form is invariant under the scaling action, unlike the
    additive |a_ij * a_jk - a_ik| form.
    """
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if A.n < 3:
        return True
    x, y, z = triad_values(A)
    return bool(np.all(np.abs(x * z / y - 1.0) <= tol))


def submatrix(A: PCMatrix, sel: SubmatrixSelector) -> PCMatrix:
    """Restrict A to the injectively selected indices: out_pq = a_{s(p)s(q)}."""
    if sel.m < 2:
        raise OrderTooSmallError("submatrix needs at least 2 selected indices")
    if sel.m >= A.n:
        raise SelectorOutOfRangeError(
            f"selector of size {sel.m} is not a proper submatrix of order {A.n}"
        )
    if any(i > A.n for i in sel.sigma):
        raise SelectorOutOfRangeError(f"selector {sel.sigma} exceeds order {A.n}")
    idx = np.array([i - 1 for i in sel.sigma], dtype=np.intp)
    return PCMatrix(A.entries[np.ix_(idx, idx)])


def enumerate_selectors(n: int, m: int) -> tuple[SubmatrixSelector, ...]:
    """All C(n,m) strictly increasing selectors of size m, 3 <= m < n.

    Increasing selectors suffice: order-invariance (axiom A.5) recovers
    the general injections of the submatrix definition.
    """
    if m < 3:
        raise OrderTooSmallError(f"selector size must be at least 3, got {m}")
    if m >= n:
        raise SelectorOutOfRangeError(f"selector size {m} must be below the order {n}")
    return tuple(
        SubmatrixSelector(tuple(i + 1 for i in c)) for c in itertools.combinations(range(n), m)
    )


def permute(A: PCMatrix, p: Permutation) -> PCMatrix:
    """Reorder the compared entities: out_{p(i)p(j)} = a_ij."""
    if p.n != A.n:
        raise InvalidPermutationError(f"permutation on {p.n} elements, matrix of order {A.n}")
    idx = np.array([q - 1 for q in p.perm], dtype=np.intp)
    out = np.empty_like(A.entries)
    out[np.ix_(idx, idx)] = A.entries
    return PCMatrix(out)


def scale_action(A: PCMatrix, lam: ScalingVector) -> PCMatrix:
    """Apply the positive-weight group action: out_ij = a_ij * l_i / l_j."""
    if len(lam.lambdas) != A.n:
        raise NonPositiveScalingError(
            f"scaling vector of length {len(lam.lambdas)} does not match order {A.n}"
        )
    w = np.array(lam.lambdas, dtype=float)
    return PCMatrix(A.entries * np.outer(w, 1.0 / w))


def transpose(A: PCMatrix) -> PCMatrix:
    """Entry-wise transpose; provided for experiments, no axiom attached."""
    return PCMatrix(A.entries.T.copy())


def compose_selectors(sigma: SubmatrixSelector, tau: SubmatrixSelector) -> SubmatrixSelector:
    """(sigma ∘ tau)(i) = sigma(tau(i)); tau must map into 1..len(sigma)."""
    if any(i > sigma.m for i in tau.sigma):
        raise SelectorOutOfRangeError(f"{tau.sigma} exceeds inner size {sigma.m}")
    return SubmatrixSelector(tuple(sigma.sigma[i - 1] for i in tau.sigma))
