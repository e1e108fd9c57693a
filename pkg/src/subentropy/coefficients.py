"""Weight systems used to combine the order-r entropies.

A row of weights b_1..b_n turns the vector of order-r entropies of an
n-dimensional spectrum into a single scalar.  The combination is invariant
under appending zero eigenvalues exactly when consecutive rows satisfy the
recursion

    (n - r + 1) * b[n+1][r] + r * b[n+1][r+1] = n * b[n][r].

Two solution families are provided: a one-parameter binomial family (floats)
and the restricted family pinned to a single order at a top dimension
(exact rationals).
"""

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from .errors import AlphaOutOfRangeError, InvalidIndexError


def _comb0(n, k):
    """Binomial coefficient that is 0 outside 0 <= k <= n."""
    if 0 <= k <= n:
        return math.comb(n, k)
    return 0


def _check_dim(n, name="n"):
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise InvalidIndexError(f"{name} must be a positive integer, got {n!r}")
    return int(n)


def binomial_weights(n, alpha):
    """Binomial weight row b_r = C(n-1, r-1) * alpha**(r-1) * (1-alpha)**(n-r).

    Parameters
    ----------
    n : int
        Row dimension, n >= 1.
    alpha : float
        Mixing parameter in [0, 1].  alpha = 0 puts all weight on r = 1
        (entropy); alpha = 1 puts all weight on r = n (subentropy).

    Returns
    -------
    numpy.ndarray
        Length-n float vector, nonnegative, summing to 1 within 1e-12.
    """
    n = _check_dim(n)
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise AlphaOutOfRangeError(f"alpha must lie in [0, 1], got {alpha!r}")
    r = np.arange(1, n + 1)
    combs = np.array([math.comb(n - 1, k) for k in range(n)], dtype=float)
    # 0.0 ** 0 == 1.0, so the alpha = 0 and alpha = 1 endpoints are exact.
    return combs * alpha ** (r - 1) * (1.0 - alpha) ** (n - r)


def restricted_weights(N, r_hat, n):
    """Exact weight row pinned to the single order r_hat at dimension N.

    b_r = C(n-1, r-1) * C(N-n, r_hat-r) / C(N-1, r_hat-1), zero where a
    binomial vanishes.  At n = N the row is the indicator of r = r_hat.

    Returns a length-n tuple of ``fractions.Fraction`` so that recursion and
    normalization checks can be exact.
    """
    N = _check_dim(N, "N")
    r_hat = _check_dim(r_hat, "r_hat")
    n = _check_dim(n)
    if n > N:
        raise InvalidIndexError(f"n must satisfy 1 <= n <= N = {N}, got {n}")
    if r_hat > N:
        raise InvalidIndexError(f"r_hat must satisfy 1 <= r_hat <= N = {N}, got {r_hat}")
    denom = math.comb(N - 1, r_hat - 1)
    return tuple(
        Fraction(_comb0(n - 1, r - 1) * _comb0(N - n, r_hat - r), denom)
        for r in range(1, n + 1)
    )


@dataclass(frozen=True)
class CoefficientTable:
    """Stack of weight rows for n = 1..max dimension.

    kind is "binomial" or "restricted"; parameter holds (alpha,) or
    (N, r_hat); rows[i] is the weight row for dimension i + 1.
    """

    kind: str
    parameter: tuple
    rows: tuple


def binomial_table(max_n, alpha):
    """Binomial weight rows for every dimension 1..max_n."""
    max_n = _check_dim(max_n, "max_n")
    rows = tuple(binomial_weights(n, alpha) for n in range(1, max_n + 1))
    return CoefficientTable(kind="binomial", parameter=(float(alpha),), rows=rows)


def restricted_table(N, r_hat):
    """Restricted weight rows for every dimension 1..N (exact rationals)."""
    rows = tuple(restricted_weights(N, r_hat, n) for n in range(1, N + 1))
    return CoefficientTable(kind="restricted", parameter=(int(N), int(r_hat)), rows=rows)
