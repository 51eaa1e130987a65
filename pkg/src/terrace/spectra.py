"""Floating-point laboratory: truncations, the self-commutator form and its compressions.

Nothing here is a certificate. Outputs are evidence for the open cases and
sanity checks for the certified ones.

With S_i = f_0 + ... + f_i, (Mf)_i = a_i S_i and (M*f)_j = sum_{i>=j} a_i f_i, so

    <(M*M - MM*) f, f> = sum_i a_i^2 S_i^2 - sum_j (sum_{i>=j} a_i f_i)^2,

and on basis vectors G_{jk} = T_{max(j,k)} - (min(j,k) + 1) a_j a_k where
T_m = sum_{i>=m} a_i^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.special import polygamma

from .seqgen import SequenceFamily, SeriesOrder, value_enclosure

MAX_DIM = 4096
ENTRY_WIDTH = Fraction(1, 10**30)
TAIL_TERMS = 2_000_000
# |a_i^2 - 1/(i+k)^2| <= TAIL_SLOPE / (i+k)^3 once 1/(i+k) < 1e-6, for every builtin family
TAIL_SLOPE = 2.0
EIG_TOL = 1e-10


class EigenError(RuntimeError):
    def __init__(self, msg, best=None):
        super().__init__(msg)
        self.best = best


@dataclass(frozen=True)
class TruncatedTerraced:
    family: str
    entries: np.ndarray

    @property
    def N(self) -> int:
        return self.entries.shape[0]

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries).copy()


@dataclass(frozen=True)
class FinSuppVec:
    coefficients: np.ndarray

    @classmethod
    def basis(cls, j: int, size: Optional[int] = None) -> "FinSuppVec":
        v = np.zeros(size or j + 1)
        v[j] = 1.0
        return cls(v)

    @property
    def support(self) -> int:
        return len(self.coefficients)

    def norm_sq(self) -> float:
        return float(self.coefficients @ self.coefficients)


@dataclass(frozen=True)
class SymMatrix:
    data: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.data, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("SymMatrix needs a square array")
        if a.size and np.max(np.abs(a - a.T)) >= 1e-12:
            raise ValueError("matrix is not symmetric")
        a = 0.5 * (a + a.T)
        a.setflags(write=False)
        object.__setattr__(self, "data", a)

    @property
    def N(self) -> int:
        return self.data.shape[0]


@dataclass
class SpectrumReport:
    family: str
    N: int
    min_eigenvalue: float
    residual: float
    tail_bound_used: float
    tolerance: float
    tag: str  # consistent-with-hyponormal | refutation-consistent | inconclusive
    extras: dict = field(default_factory=dict)


def sequence_values(s, N: int) -> np.ndarray:
    """a_0..a_{N-1} as floats, from enclosures of width <= 1e-30."""
    return np.array([float(value_enclosure(s, n, SeriesOrder(2, 128), width=ENTRY_WIDTH).mid)
                     for n in range(N)])


def build_truncation(s, N: int) -> TruncatedTerraced:
    if N < 1:
        raise ValueError("dimension must be at least 1")
    a = sequence_values(s, N)
    return TruncatedTerraced(str(s), np.tril(np.repeat(a[:, None], N, axis=1)))


def tail_sum_sq(s, m: int) -> tuple[float, float]:
    """Bracket [lo, hi] for T_m = sum_{i>=m} a_i^2.

    Builtin families: explicit sum of TAIL_TERMS terms, then
    sum_{j>=J} 1/j^2 (trigamma) +- TAIL_SLOPE * sum_{j>=J} 1/j^3.
    Custom families fall back to the a_i <= 2/(i+1) domination: [partial, partial + 4/K].
    """
    idx = np.arange(m, m + TAIL_TERMS, dtype=float)
    if isinstance(s, SequenceFamily):
        a = s.float_values(idx)
        j = idx + s.shift
        # sum the correction a_i^2 - 1/j^2 separately; the 1/j^2 part is summed in closed form
        corr = float(np.sum(a * a - 1.0 / (j * j)))
        J = m + TAIL_TERMS + s.shift
        base = float(polygamma(1, m + s.shift))
        slack = TAIL_SLOPE / (2.0 * (J - 1) ** 2)
        return base + corr - slack, base + corr + slack
    a = s.float_values(idx)
    partial = float(np.sum(a * a))
    return partial, partial + 4.0 / (m + TAIL_TERMS)


def _tails(s, a: np.ndarray) -> tuple[np.ndarray, float]:
    """T_0..T_{N-1} (midpoint tail) and the width of the bracket used."""
    N = len(a)
    lo, hi = tail_sum_sq(s, N)
    T = np.empty(N)
    acc = 0.5 * (lo + hi)
    for i in range(N - 1, -1, -1):
        acc += a[i] * a[i]
        T[i] = acc
    return T, hi - lo


def quadratic_form(s, f: FinSuppVec) -> tuple[float, float]:
    """[Q_lo, Q_hi] enclosing <(M*M - MM*) f, f>, up to float rounding."""
    c = np.asarray(f.coefficients, dtype=float)
    Ns = len(c)
    if Ns > 10**4:
        raise ValueError("support must be at most 10^4")
    if Ns == 0 or not np.any(c):
        return 0.0, 0.0
    a = sequence_values(s, Ns)
    S = np.cumsum(c)
    head = float(np.sum((a * S) ** 2))
    adj = np.cumsum((a * c)[::-1])[::-1]  # (M*f)_j
    star = float(adj @ adj)
    lo, hi = tail_sum_sq(s, Ns)
    total = S[-1] ** 2
    return head + total * lo - star, head + total * hi - star


def self_commutator_compression(s, N: int) -> SymMatrix:
    return _compression(s, N)[0]


def _compression(s, N: int) -> tuple[SymMatrix, float]:
    if not 1 <= N <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}")
    a = sequence_values(s, N)
    T, width = _tails(s, a)
    idx = np.arange(N)
    hi = np.maximum.outer(idx, idx)
    lo = np.minimum.outer(idx, idx)
    G = T[hi] - (lo + 1) * np.outer(a, a)
    return SymMatrix(G), width


def min_eigenvalue(A: SymMatrix, tol: float = EIG_TOL) -> tuple[float, float]:
    """Smallest eigenvalue and residual ||Av - lambda v|| of its eigenpair (LAPACK syevd).

    Raises EigenError when the residual exceeds ``tol`` relative to ||A||.
    """
    M = A.data
    try:
        w, V = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise EigenError(f"eigensolver did not converge: {exc}") from exc
    lam, v = float(w[0]), V[:, 0]
    residual = float(np.linalg.norm(M @ v - lam * v))
    scale = max(float(np.linalg.norm(M, 2)) if M.size else 0.0, 1.0)
    if residual > tol * scale:
        raise EigenError(f"residual {residual:.3e} above tolerance", best=(lam, residual))
    return lam, residual


def norm_estimate(s, N: int, maxiter: int = 20000, rtol: float = 1e-13, v0: Optional[np.ndarray] = None) -> float:
    """Largest singular value of the N x N truncation by power iteration on M^T M."""
    if N < 1:
        raise ValueError("dimension must be at least 1")
    M = build_truncation(s, N).entries
    # entries are positive, so the Perron vector is positive and a positive start avoids stagnation
    v = np.ones(N) if v0 is None else np.asarray(v0, dtype=float)
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(maxiter):
        w = M.T @ (M @ v)
        new = float(v @ w)
        v = w / np.linalg.norm(w)
        if abs(new - lam) <= rtol * new:
            lam = new
            break
        lam = new
    return float(np.sqrt(lam))


def _tag(lam: float, tolerance: float) -> str:
    if lam >= -tolerance:
        return "consistent-with-hyponormal"
    return "refutation-consistent"


def explore_open_question(s, N_list: Sequence[int], eig_tol: float = EIG_TOL) -> list[SpectrumReport]:
    """Minimum eigenvalue of the compression for each N; trend data, never a verdict.

    Values below -tolerance are tagged refutation-consistent, values in
    [-tolerance, 0) inconclusive.
    """
    reports = []
    for N in N_list:
        G, width = _compression(s, N)
        lam, res = min_eigenvalue(G, eig_tol)
        tol = max(1e-10, 10 * res, N * width, N * N * np.finfo(float).eps)
        tag = _tag(lam, tol)
        if tag == "consistent-with-hyponormal" and lam < 0:
            tag = "inconclusive"
        reports.append(SpectrumReport(str(s), N, lam, res, width, tol, tag))
    return reports
