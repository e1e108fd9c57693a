"""Independent numerical routes to the entropy family.

Three evaluations that share no code with the closed form:

* contour quadrature of the defining integral (deterministic, exponentially
  convergent in node count, works for any dimension),
* Monte Carlo integration of the simplex-face representation,
* Monte Carlo average of measurement information over Haar-random bases
  (converges to the subentropy).

Randomness comes from numpy's PCG64 generator; a fixed seed, together with
the fixed internal chunk size, reproduces every estimate bit for bit.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import (
    AlphaOutOfRangeError,
    DegenerateContourError,
    InvalidIndexError,
    InvalidRError,
    TooFewSamplesError,
)
from .spectra import as_spectrum

MIN_SAMPLES = 100
_CHUNK = 20000  # fixed so the random stream layout never depends on `samples`


@dataclass(frozen=True)
class OracleEstimate:
    """Numerical estimate with uncertainty (stderr = 0 for quadrature)."""

    value: float
    stderr: float
    samples: int
    method: str


@dataclass(frozen=True)
class ContourConfig:
    """Quadrature contour parameters.

    nodes is the trapezoid node count.  margin_factor in (0, 1) sets the
    clearance from the origin: the leftmost point of the contour sits at
    margin_factor times the smallest nonzero eigenvalue, and the rightmost
    at the largest eigenvalue divided by margin_factor.
    """

    nodes: int = 512
    margin_factor: float = 0.5

    def __post_init__(self):
        if not isinstance(self.nodes, (int, np.integer)) or self.nodes < 4:
            raise InvalidIndexError(f"contour nodes must be an integer >= 4, got {self.nodes!r}")
        if not 0.0 < self.margin_factor < 1.0:
            raise InvalidIndexError(
                f"margin_factor must lie strictly inside (0, 1), got {self.margin_factor!r}"
            )


def _esp_coefficients(values):
    """Coefficients e_0..e_n of prod(1 + t*v) by O(n^2) expansion.

    values may be a vector or a stack of vectors; the expansion runs along
    the last axis and returns one extra trailing entry.
    """
    v = np.asarray(values)
    n = v.shape[-1]
    coef = np.zeros(v.shape[:-1] + (n + 1,), dtype=np.result_type(v.dtype, float))
    coef[..., 0] = 1.0
    for k in range(n):
        coef[..., 1:k + 2] = coef[..., 1:k + 2] + v[..., k:k + 1] * coef[..., 0:k + 1]
    return coef


def elementary_symmetric(values, r):
    """Elementary symmetric polynomial e_r of a vector of numbers.

    e_1 is the sum, e_n the product.  Complex input gives a complex result.
    """
    v = np.atleast_1d(np.asarray(values))
    if v.ndim != 1 or v.size == 0:
        raise InvalidIndexError("values must be a nonempty vector")
    if not isinstance(r, (int, np.integer)) or isinstance(r, bool) or not 0 <= r <= v.size:
        raise InvalidIndexError(f"r must be an integer in [0, {v.size}], got {r!r}")
    out = _esp_coefficients(v)[int(r)]
    return complex(out) if np.iscomplexobj(v) else float(out.real)


def _contour_points(values, cfg):
    """Quadrature points z_k and combined weights for (1/2pi i) * closed integral.

    The contour is traced in the logarithmic plane: an ellipse around the
    interval [ln(m*lmin), ln(lmax/m)] covering all nonzero eigenvalues,
    with its vertical half-axis capped below pi so the image z = exp(w)
    stays on the principal branch and no 2*pi*i-shifted pole copy is
    enclosed.  The image is a closed curve through m*lmin and lmax/m that
    winds once around every nonzero eigenvalue and excludes the origin.
    Trapezoid quadrature on it converges geometrically in the node count
    even for eigenvalues spread over many orders of magnitude, where a
    plain circle in the z plane would need the ratio lmax/lmin of nodes.

    Returns (z, W) with sum(W * lnz-free-integrand ... ) -- concretely,
    integral (1/2pi i) * contour_integral ln(z) F(z) dz ~= Re(sum_k W_k F(z_k)).
    """
    nonzero = values[values > 0.0]
    if nonzero.size == 0:
        raise DegenerateContourError("all eigenvalues are zero; nothing to enclose")
    m = cfg.margin_factor
    w_lo = math.log(m * float(nonzero.min()))
    w_hi = math.log(float(nonzero.max()) / m)
    center = 0.5 * (w_lo + w_hi)
    half_width = 0.5 * (w_hi - w_lo)
    half_height = min(half_width, 0.9 * math.pi)
    theta = 2.0 * math.pi * np.arange(cfg.nodes) / cfg.nodes
    w = center + half_width * np.cos(theta) + 1j * half_height * np.sin(theta)
    z = np.exp(w)
    dw = -half_width * np.sin(theta) + 1j * half_height * np.cos(theta)
    # (1/2pi i) * integral ln(z) F(z) dz  ->  (1/(i N)) * sum w z w'(theta) F
    weights = w * z * dw / (1j * cfg.nodes)
    return z, weights


def contour_intermediate_entropy(s, r, config=None):
    """Order-r entropy by contour quadrature of the defining integral.

    The integrand is the r-th characteristic-polynomial coefficient of the
    resolvent factor, i.e. e_r of the eigenvalue factors z/(z - l_j).  Zero
    eigenvalues enter as factors exactly 1 (z/(z - 0)); they still count
    toward the order, so the result matches the closed form including its
    dependence on padded dimensions.
    """
    s = as_spectrum(s)
    n = s.dim
    if not isinstance(r, (int, np.integer)) or isinstance(r, bool) or not 1 <= r <= n:
        raise InvalidRError(f"order r must be an integer in [1, {n}], got {r!r}")
    cfg = config if config is not None else ContourConfig()
    z, weights = _contour_points(s.values, cfg)
    factors = z[:, None] / (z[:, None] - s.values[None, :])
    integrand = _esp_coefficients(factors)[:, int(r)]
    value = -float(np.sum(weights * integrand).real) / math.comb(n - 1, r - 1)
    return OracleEstimate(value=value, stderr=0.0, samples=cfg.nodes, method="contour")


def contour_interpolated_entropy(s, alpha, config=None):
    """Interpolated entropy by contour quadrature, alpha in (0, 1].

    The integrand is the determinant-style product of
    (1 - alpha) + alpha * z/(z - l_j) over the eigenvalues, divided by
    alpha.  Zero eigenvalues contribute a factor of exactly 1.  The
    alpha = 0 limit is the entropy; callers wanting it should use
    contour_intermediate_entropy(s, 1) instead.
    """
    s = as_spectrum(s)
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise AlphaOutOfRangeError(
            f"alpha must lie in (0, 1], got {alpha!r}; "
            "the alpha = 0 limit is the order-1 contour"
        )
    cfg = config if config is not None else ContourConfig()
    z, weights = _contour_points(s.values, cfg)
    factors = (1.0 - alpha) + alpha * z[:, None] / (z[:, None] - s.values[None, :])
    integrand = np.prod(factors, axis=1)
    value = -float(np.sum(weights * integrand).real) / alpha
    return OracleEstimate(value=value, stderr=0.0, samples=cfg.nodes, method="contour")


def _check_mc_args(samples, seed):
    if not isinstance(samples, (int, np.integer)) or isinstance(samples, bool) or samples < MIN_SAMPLES:
        raise TooFewSamplesError(
            f"need at least {MIN_SAMPLES} samples for a standard error, got {samples!r}"
        )
    return int(samples), None if seed is None else int(seed)


def simplex_monte_carlo(s, r, samples, seed):
    """Order-r entropy by Monte Carlo over simplex faces.

    Each sample picks one of the C(n, r) faces uniformly (an r-subset of
    coordinates), draws a flat-Dirichlet point x on that face (normalized
    exponentials), and evaluates

        f(x) = -(sum l_i x_i) ln(sum l_i x_i) + sum l_i x_i ln x_i

    over the selected eigenvalues; the estimate is n times the sample mean.
    Deterministic for a fixed seed (PCG64).
    """
    s = as_spectrum(s)
    n = s.dim
    if not isinstance(r, (int, np.integer)) or isinstance(r, bool) or not 1 <= r <= n:
        raise InvalidRError(f"order r must be an integer in [1, {n}], got {r!r}")
    samples, seed = _check_mc_args(samples, seed)
    r = int(r)
    rng = np.random.default_rng(seed)
    vals = np.empty(samples)
    done = 0
    while done < samples:
        block = min(_CHUNK, samples - done)
        faces = np.argsort(rng.random((block, n)), axis=1)[:, :r]
        expo = rng.standard_exponential((block, r))
        x = expo / expo.sum(axis=1, keepdims=True)
        lam = s.values[faces]
        mu = np.einsum("ij,ij->i", lam, x)
        xlnx = np.where(x > 0.0, x * np.log(np.where(x > 0.0, x, 1.0)), 0.0)
        f = -np.where(mu > 0.0, mu * np.log(np.where(mu > 0.0, mu, 1.0)), 0.0)
        f += np.einsum("ij,ij->i", lam, xlnx)
        vals[done:done + block] = n * f
        done += block
    stderr = float(vals.std(ddof=1) / math.sqrt(samples))
    return OracleEstimate(value=float(vals.mean()), stderr=stderr,
                          samples=samples, method="simplexMC")


def haar_random_unitaries(n, count, seed):
    """Stack of Haar-distributed n x n unitaries.

    Complex Ginibre matrices are orthonormalized by QR, then each column is
    rephased by the sign of the corresponding diagonal entry of R.  Without
    that rephasing QR's sign convention skews the distribution away from
    Haar; with it the result is exactly Haar.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise InvalidIndexError(f"n must be a positive integer, got {n!r}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    g = rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))
    q, rm = np.linalg.qr(g / math.sqrt(2.0))
    d = np.einsum("sii->si", rm)
    return q * (d / np.abs(d))[:, None, :]


def haar_information_samples(s, samples, seed):
    """Per-basis measurement information for Haar-random orthonormal bases.

    The spectrum is prepared as its eigenensemble: basis state i with prior
    l_i.  For each Haar-random measurement basis the sample is the mutual
    information (nats) between preparation index and outcome,

        I = sum_{i,k} l_i B_ik ln(B_ik / p_k),   B_ik = |<e_k|i>|^2,

    which averages to the subentropy.  Every sample lies in [0, S].
    """
    s = as_spectrum(s)
    n = s.dim
    samples, seed = _check_mc_args(samples, seed)
    rng = np.random.default_rng(seed)
    lam = s.values
    out = np.empty(samples)
    done = 0
    while done < samples:
        block = min(_CHUNK, samples - done)
        u = haar_random_unitaries(n, block, rng)
        b = np.abs(u) ** 2                       # b[s, i, k] = |<e_k|i>|^2
        pk = np.einsum("i,sik->sk", lam, b)
        blnb = np.where(b > 0.0, b * np.log(np.where(b > 0.0, b, 1.0)), 0.0)
        h_out_given = -np.einsum("i,sik->s", lam, blnb)
        h_out = -np.einsum(
            "sk->s", np.where(pk > 0.0, pk * np.log(np.where(pk > 0.0, pk, 1.0)), 0.0)
        )
        out[done:done + block] = h_out - h_out_given
        done += block
    return out


def haar_average_information(s, samples, seed):
    """Average measurement information over Haar-random bases.

    Converges to the subentropy of the spectrum.  The average is taken for
    the eigenensemble specifically; the underlying claim is
    ensemble-independent but only this case is exercised here.
    """
    vals = haar_information_samples(s, samples, seed)
    stderr = float(vals.std(ddof=1) / math.sqrt(vals.size))
    return OracleEstimate(value=float(vals.mean()), stderr=stderr,
                          samples=int(vals.size), method="haarMC")
