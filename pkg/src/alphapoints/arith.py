"""Dirichlet-series coefficient algebra.

An arithmetic function is a finite prefix a(1..N) of Dirichlet-series
coefficients, stored as a complex array with a(n) at index n (index 0 is
unused).  Everything here is exact combinatorics on those prefixes up to
floating rounding: Dirichlet convolution, convolution powers, inversion of
L(s) - alpha as a formal series, and the generalized von Mangoldt
coefficients of -L'(s)/(L(s) - alpha).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InsufficientDataError, LengthError, NormalizationError

__all__ = [
    "ArithmeticFunction",
    "AbscissaEstimate",
    "epsilon_function",
    "ones_function",
    "convolve",
    "convolve_power",
    "invert_shifted",
    "lambda_alpha",
    "lambda_alpha_series",
    "von_mangoldt",
    "moebius",
    "primes_up_to",
    "estimate_abscissa",
]


@dataclass(frozen=True)
class ArithmeticFunction:
    """Prefix a(1..N) of a coefficient sequence; values[n] = a(n), values[0] = 0."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.ndim != 1 or len(v) < 2:
            raise LengthError("need at least a(1)")
        v = v.copy()
        v[0] = 0.0
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def length(self) -> int:
        return len(self.values) - 1

    def __call__(self, n: int) -> complex:
        if not 1 <= n <= self.length:
            raise LengthError(f"index {n} outside prefix 1..{self.length}")
        return complex(self.values[n])

    @classmethod
    def from_values(cls, seq) -> "ArithmeticFunction":
        """Build from a(1), a(2), ... in order."""
        return cls(np.concatenate([[0.0], np.asarray(seq, dtype=complex)]))

    def truncated(self, n_max: int) -> "ArithmeticFunction":
        if n_max > self.length:
            raise LengthError(f"cannot extend prefix {self.length} to {n_max}")
        return ArithmeticFunction(self.values[: n_max + 1])

    def drop_first(self) -> "ArithmeticFunction":
        """The same sequence with a(1) zeroed out."""
        v = self.values.copy()
        v[1] = 0.0
        return ArithmeticFunction(v)


def epsilon_function(n_max: int) -> ArithmeticFunction:
    """Convolution identity: eps(1) = 1, eps(n) = 0 otherwise."""
    v = np.zeros(n_max + 1, dtype=complex)
    v[1] = 1.0
    return ArithmeticFunction(v)


def ones_function(n_max: int) -> ArithmeticFunction:
    """Constant 1 sequence (coefficients of the zeta series)."""
    v = np.ones(n_max + 1, dtype=complex)
    return ArithmeticFunction(v)


def convolve(f: ArithmeticFunction, g: ArithmeticFunction, n_max: int | None = None) -> ArithmeticFunction:
    """Dirichlet convolution (f*g)(n) = sum_{d|n} f(d) g(n/d) for n <= n_max."""
    if n_max is None:
        n_max = min(f.length, g.length)
    if n_max > f.length or n_max > g.length:
        raise LengthError(f"requested length {n_max} exceeds inputs ({f.length}, {g.length})")
    fv, gv = f.values, g.values
    out = np.zeros(n_max + 1, dtype=complex)
    for d in range(1, n_max + 1):
        c = fv[d]
        if c != 0.0:
            k = n_max // d
            out[d::d] += c * gv[1 : k + 1]
    return ArithmeticFunction(out)


def convolve_power(f: ArithmeticFunction, k: int, n_max: int) -> ArithmeticFunction:
    """k-fold Dirichlet convolution of f with itself; k = 0 gives the identity eps."""
    if k < 0:
        raise DomainError("convolution power needs k >= 0")
    out = epsilon_function(n_max)
    base = f.truncated(n_max) if f.length > n_max else f
    for _ in range(k):
        out = convolve(base, out, n_max)
    return out


def invert_shifted(f: ArithmeticFunction, alpha: complex, n_max: int | None = None) -> ArithmeticFunction:
    """Coefficients g(n) of 1/(L(s) - alpha) for a normalized series L.

    g(n) = sum_{k>=0} (-1)^k f0^{*k}(n) / (1-alpha)^{k+1} where f0 is f with
    f0(1) = 0.  The sum is finite: f0^{*k}(n) = 0 once k > log2(n), so the
    result is exact up to rounding.  Requires f(1) = 1 and alpha != 1.
    """
    alpha = complex(alpha)
    if alpha == 1.0:
        raise DomainError("alpha = 1 excluded: 1/(L(s)-1) has no ordinary Dirichlet series")
    if n_max is None:
        n_max = f.length
    if n_max > f.length:
        raise LengthError(f"requested length {n_max} exceeds input {f.length}")
    if abs(f.values[1] - 1.0) > 1e-12:
        raise NormalizationError(f"series not normalized: a(1) = {f.values[1]}")
    f0 = f.truncated(n_max).drop_first()
    one_m_alpha = 1.0 - alpha
    out = np.zeros(n_max + 1, dtype=complex)
    power = epsilon_function(n_max)  # f0^{*0}
    k_cap = int(math.log2(n_max)) if n_max > 1 else 0
    for k in range(k_cap + 1):
        out += ((-1.0) ** k / one_m_alpha ** (k + 1)) * power.values
        if k < k_cap:
            power = convolve(f0, power, n_max)
    return ArithmeticFunction(out)


def lambda_alpha_series(f: ArithmeticFunction, alpha: complex, n_max: int | None = None) -> ArithmeticFunction:
    """Generalized von Mangoldt coefficients via series inversion.

    Computes (f.log) * invert_shifted(f, alpha), the coefficient sequence of
    -L'(s)/(L(s) - alpha).  Works for every alpha != 1 including alpha = 0;
    the alpha = 0 shortcut in lambda_alpha must agree with this path.
    """
    if n_max is None:
        n_max = f.length
    g = invert_shifted(f, alpha, n_max)
    logs = np.concatenate([[0.0], np.log(np.arange(1, n_max + 1, dtype=float))])
    f_log = ArithmeticFunction(f.values[: n_max + 1] * logs)
    return convolve(f_log, g, n_max)


def lambda_alpha(coefficients: ArithmeticFunction, alpha: complex, n_max: int | None = None) -> ArithmeticFunction:
    """Coefficients Lambda(n) with L'(s)/(L(s)-alpha) = -sum Lambda(n) n^{-s}.

    At alpha = 0 this is f(n) * von Mangoldt(n) directly; otherwise the
    inversion route of lambda_alpha_series.
    """
    alpha = complex(alpha)
    if alpha == 1.0:
        raise DomainError("alpha = 1 excluded")
    if n_max is None:
        n_max = coefficients.length
    if alpha == 0.0:
        lam = von_mangoldt(n_max)
        return ArithmeticFunction(coefficients.values[: n_max + 1] * lam.values)
    return lambda_alpha_series(coefficients, alpha, n_max)


def primes_up_to(n: int) -> np.ndarray:
    """Prime sieve, inclusive."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.nonzero(sieve)[0]


def _smallest_prime_factor(n_max: int) -> np.ndarray:
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, n_max + 1):
        if spf[p] == 0:
            spf[p::p][spf[p::p] == 0] = p
    return spf


def von_mangoldt(n_max: int) -> ArithmeticFunction:
    """Sieve of Lambda(n) = log p when n = p^k, else 0."""
    if n_max < 1:
        raise LengthError("need n_max >= 1")
    v = np.zeros(n_max + 1, dtype=complex)
    for p in primes_up_to(n_max):
        lp = math.log(p)
        q = int(p)
        while q <= n_max:
            v[q] = lp
            q *= int(p)
    return ArithmeticFunction(v)


def moebius(n_max: int) -> ArithmeticFunction:
    """Sieve of the Moebius function."""
    if n_max < 1:
        raise LengthError("need n_max >= 1")
    spf = _smallest_prime_factor(n_max)
    mu = np.zeros(n_max + 1, dtype=complex)
    mu[1] = 1.0
    for n in range(2, n_max + 1):
        p = spf[n]
        m = n // p
        mu[n] = 0.0 if m % p == 0 else -mu[m]
    return ArithmeticFunction(mu)


@dataclass(frozen=True)
class AbscissaEstimate:
    """Abscissa of absolute convergence of -L'/(L-alpha): 1 + sup beta over alpha-points.

    Exact (= 1) at alpha = 0; otherwise empirical from the supplied points,
    since no effective bound on sup beta is available.
    """

    alpha: complex
    sigma: float
    margin: float
    source: str  # "exact-for-alpha-zero" | "empirical-from-points"

    def __post_init__(self):
        if self.sigma < 1.0:
            raise DomainError(f"abscissa below 1: {self.sigma}")


def estimate_abscissa(points, alpha: complex, margin: float = 0.0) -> AbscissaEstimate:
    """Empirical sigma(L, alpha) = 1 + max(0, max beta) + margin; exactly 1 at alpha = 0."""
    alpha = complex(alpha)
    if margin < 0:
        raise DomainError("margin must be >= 0")
    if alpha == 0.0:
        return AbscissaEstimate(alpha=alpha, sigma=1.0, margin=0.0, source="exact-for-alpha-zero")
    betas = [p.beta for p in points]
    if not betas:
        raise InsufficientDataError("no points supplied for an alpha != 0 abscissa estimate")
    sigma = 1.0 + max(0.0, max(betas)) + margin
    return AbscissaEstimate(alpha=alpha, sigma=sigma, margin=margin, source="empirical-from-points")
