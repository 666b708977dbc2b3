# Copyright 2026 The thinfilm-certify Authors.
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""Exact arithmetic on truncated Fourier series of real periodic functions.

A function on the torus of length 2*pi is represented by its coefficients
u_hat(k), |k| <= K, of ``u(x) = sum_k u_hat(k) exp(ikx)``. Norm conventions:

* ``wiener_norm(u, a) = sum_k |k|^a |u_hat(k)|``
* ``sobolev_norm(u, s) = (sum_k |k|^(2s) |u_hat(k)|^2)^(1/2)``
* ``lebesgue_l2_norm(u)^2 = integral |u|^2 dx = 2*pi sum_k |u_hat(k)|^2``
* ``normalized_lp_norm`` integrates against dx/(2*pi), so it pairs with the
  coefficient based Sobolev norms without extra factors.
"""

import numpy as np

from oslo_log import log

from thinfilm_certify.engine import exceptions

LOG = log.getLogger(__name__)

HERMITIAN_TOL = 1e-12
DEFAULT_OVERSAMPLING = 8

# (i)^n for n mod 4, kept exact.
_I_POWERS = (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)


def _check_hermitian(coeffs):
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    defect = float(np.max(np.abs(coeffs - np.conj(coeffs[::-1]))))
    if defect > HERMITIAN_TOL * scale:
        err_msg = (
            "Coefficients violate Hermitian symmetry by %(defect)g, the "
            "function they describe is not real valued"
        ) % {'defect': defect}
        LOG.error(err_msg)
        raise exceptions.HermitianSymmetryException(err_msg)


def _check_finite(coeffs):
    if not np.all(np.isfinite(coeffs)):
        err_msg = ("Non-finite Fourier coefficients, an operation "
                   "overflowed")
        LOG.error(err_msg)
        raise exceptions.NumericalInstabilityException(err_msg)


class TrigPoly(object):
    """Truncated Fourier series of a real valued 2*pi-periodic function.

    Entry ``K + k`` of the coefficient array holds u_hat(k). Instances are
    immutable: the array is copied, symmetrized and made read only.
    """

    # numpy scalars defer to __rmul__ instead of broadcasting.
    __array_ufunc__ = None

    def __init__(self, coeffs, zero_mean=False):
        coeffs = np.array(coeffs, dtype=complex)
        if coeffs.ndim != 1 or coeffs.size % 2 != 1:
            raise ValueError("Coefficient array must be one dimensional "
                             "with odd length 2K+1, got shape %s"
                             % (coeffs.shape,))
        _check_finite(coeffs)
        _check_hermitian(coeffs)
        self._adopt(coeffs, zero_mean)

    @classmethod
    def _trusted(cls, coeffs, zero_mean=False):
        """Result of an operation on TrigPolys; skips the symmetry check.

        Sums, real mode multipliers, derivatives, convolutions and
        truncations of Hermitian arrays are Hermitian up to rounding,
        which the symmetrization in _adopt removes.
        """
        coeffs = np.asarray(coeffs, dtype=complex)
        _check_finite(coeffs)
        instance = cls.__new__(cls)
        instance._adopt(coeffs, zero_mean)
        return instance

    def _adopt(self, coeffs, zero_mean):
        coeffs = 0.5 * (coeffs + np.conj(coeffs[::-1]))
        self.K = (coeffs.size - 1) // 2
        if zero_mean and coeffs[self.K] != 0:
            err_msg = ("TrigPoly flagged zero-mean carries mean %r"
                       % coeffs[self.K])
            LOG.error(err_msg)
            raise exceptions.NonZeroMeanException(err_msg)
        coeffs.flags.writeable = False
        self._coeffs = coeffs
        self.zero_mean = zero_mean

    @classmethod
    def zeros(cls, K, zero_mean=True):
        return cls(np.zeros(2 * K + 1, dtype=complex), zero_mean=zero_mean)

    @classmethod
    def from_modes(cls, modes, K, mean=0.0):
        """Build a TrigPoly from its nonnegative wavenumbers.

        :param modes: mapping k -> u_hat(k) for 1 <= k <= K; the
            conjugate partner at -k is filled in.
        :param K: bandwidth of the result.
        :param mean: real mean u_hat(0).
        :returns: a TrigPoly, flagged zero-mean when mean is 0.
        """
        coeffs = np.zeros(2 * K + 1, dtype=complex)
        coeffs[K] = mean
        for k, value in modes.items():
            if not 1 <= k <= K:
                raise ValueError("Wavenumber %d outside 1..%d" % (k, K))
            coeffs[K + k] = value
            coeffs[K - k] = np.conj(value)
        return cls(coeffs, zero_mean=(mean == 0))

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def wavenumbers(self):
        return np.arange(-self.K, self.K + 1)

    @property
    def mean(self):
        return self._coeffs[self.K].real

    def coefficient(self, k):
        if abs(k) > self.K:
            return 0.0j
        return self._coeffs[self.K + k]

    def without_mean(self):
        coeffs = self._coeffs.copy()
        coeffs[self.K] = 0.0
        return TrigPoly._trusted(coeffs, zero_mean=True)

    def with_mean(self, mean):
        coeffs = self._coeffs.copy()
        coeffs[self.K] = mean
        return TrigPoly._trusted(coeffs, zero_mean=(mean == 0))

    def is_even(self):
        return bool(np.all(self._coeffs.imag == 0))

    def padded(self, K):
        """Same function on a larger coefficient array."""
        if K < self.K:
            raise ValueError("Cannot pad bandwidth %d down to %d"
                             % (self.K, K))
        if K == self.K:
            return self
        coeffs = np.zeros(2 * K + 1, dtype=complex)
        coeffs[K - self.K:K + self.K + 1] = self._coeffs
        return TrigPoly._trusted(coeffs, zero_mean=self.zero_mean)

    def allclose(self, other, rtol=1e-12, atol=0.0):
        K = max(self.K, other.K)
        return bool(np.allclose(self.padded(K).coeffs, other.padded(K).coeffs,
                                rtol=rtol, atol=atol))

    def _aligned(self, other):
        K = max(self.K, other.K)
        return self.padded(K).coeffs, other.padded(K).coeffs

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return TrigPoly._trusted(a + b,
                                 zero_mean=self.zero_mean and other.zero_mean)

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return TrigPoly._trusted(a - b,
                                 zero_mean=self.zero_mean and other.zero_mean)

    def __neg__(self):
        return TrigPoly._trusted(-self._coeffs, zero_mean=self.zero_mean)

    def __mul__(self, scalar):
        if isinstance(scalar, TrigPoly):
            raise TypeError("Use spectral_core.product for products of "
                            "trigonometric polynomials")
        return TrigPoly._trusted(float(scalar) * self._coeffs,
                                 zero_mean=self.zero_mean)

    __rmul__ = __mul__

    def __repr__(self):
        return "TrigPoly(K=%d, zero_mean=%s)" % (self.K, self.zero_mean)


def _homogeneous_weights(u, order):
    if u.K > 0 and u.coeffs[u.K] != 0:
        err_msg = (
            "Homogeneous norm requested for a function with mean %r, "
            "subtract the mean first"
        ) % u.coeffs[u.K]
        LOG.error(err_msg)
        raise exceptions.NonZeroMeanException(err_msg)
    if order < 0:
        raise ValueError("Norm order must be nonnegative, got %r" % order)
    k = np.abs(u.wavenumbers).astype(float)
    weights = k ** order
    weights[u.K] = 0.0
    return weights


def wiener_norm(u, alpha):
    """Homogeneous Wiener norm sum_k |k|^alpha |u_hat(k)|.

    :param u: a zero-mean TrigPoly.
    :param alpha: nonnegative order.
    :returns: the norm as a float.
    :raise NonZeroMeanException: if u has nonzero mean.
    """
    if u.K == 0:
        return 0.0
    weights = _homogeneous_weights(u, alpha)
    return float(np.sum(weights * np.abs(u.coeffs)))


def sobolev_norm(u, s):
    """Homogeneous Sobolev norm (sum_k |k|^(2s) |u_hat(k)|^2)^(1/2).

    :param u: a zero-mean TrigPoly.
    :param s: nonnegative order.
    :returns: the norm as a float.
    :raise NonZeroMeanException: if u has nonzero mean.
    """
    if u.K == 0:
        return 0.0
    weights = _homogeneous_weights(u, 2.0 * s)
    return float(np.sqrt(np.sum(weights * np.abs(u.coeffs) ** 2)))


def derivative(u, n):
    """n-th derivative, coefficient-wise multiplication by (ik)^n."""
    if n < 0:
        raise ValueError("Derivative order must be nonnegative, got %r" % n)
    if n == 0:
        return u
    symbol = _I_POWERS[n % 4] * (u.wavenumbers.astype(float) ** n)
    return TrigPoly._trusted(symbol * u.coeffs, zero_mean=True)


def product(u, v, K_out=None):
    """Exact product by direct convolution of the coefficient sequences.

    :param u: a TrigPoly.
    :param v: a TrigPoly.
    :param K_out: bandwidth of the result; defaults to u.K + v.K, which
        keeps every mode of the product.
    :returns: the product truncated to |k| <= K_out, mean retained.
    """
    full = np.convolve(u.coeffs, v.coeffs)
    K_full = u.K + v.K
    if K_out is None:
        K_out = K_full
    if K_out < 0:
        raise ValueError("Output bandwidth must be nonnegative")
    if K_out <= K_full:
        coeffs = full[K_full - K_out:K_full + K_out + 1]
    else:
        coeffs = np.zeros(2 * K_out + 1, dtype=complex)
        coeffs[K_out - K_full:K_out + K_full + 1] = full
    return TrigPoly._trusted(coeffs)


def project(u, K_prime):
    """Galerkin projection onto the modes |k| <= K_prime."""
    if K_prime < 0:
        raise ValueError("Projection bandwidth must be nonnegative")
    if K_prime >= u.K:
        return u.padded(K_prime)
    coeffs = u.coeffs[u.K - K_prime:u.K + K_prime + 1]
    return TrigPoly._trusted(coeffs, zero_mean=u.zero_mean)


def grid_points(M):
    return -np.pi + 2.0 * np.pi * np.arange(M) / M


def grid_values(u, M):
    """Samples u(x_j) at x_j = -pi + 2*pi*j/M.

    :param u: a TrigPoly.
    :param M: number of samples, at least 2K+1.
    :returns: real numpy array of length M.
    :raise HermitianSymmetryException: if u is not real valued.
    """
    if M < 2 * u.K + 1:
        raise ValueError("Grid of %d points cannot resolve bandwidth %d"
                         % (M, u.K))
    _check_hermitian(u.coeffs)
    k = u.wavenumbers
    shifted = np.zeros(M, dtype=complex)
    shifted[k % M] = u.coeffs * np.where(k % 2 == 0, 1.0, -1.0)
    values = M * np.fft.ifft(shifted)
    scale = max(1.0, float(np.max(np.abs(values))))
    residue = float(np.max(np.abs(values.imag)))
    if residue > HERMITIAN_TOL * scale:
        err_msg = "Synthesis left an imaginary residue of %g" % residue
        LOG.error(err_msg)
        raise exceptions.HermitianSymmetryException(err_msg)
    return values.real


def from_grid_values(values, K):
    """Coefficients |k| <= K of the trigonometric interpolant of samples.

    Inverse of grid_values whenever the sampled function has bandwidth
    below len(values) / 2.
    """
    values = np.asarray(values, dtype=float)
    M = values.size
    if M < 2 * K + 1:
        raise ValueError("Grid of %d points cannot resolve bandwidth %d"
                         % (M, K))
    raw = np.fft.fft(values) / M
    k = np.arange(-K, K + 1)
    coeffs = raw[k % M] * np.where(k % 2 == 0, 1.0, -1.0)
    return TrigPoly(coeffs)


def oversampled_grid_size(K, oversampling=DEFAULT_OVERSAMPLING):
    """Smallest multiple of 4 above oversampling * K.

    Multiples of 4 put 0 and +-pi/2 on the grid.
    """
    M = max(oversampling * K + 1, 4 * K + 1, 3)
    return M + (-M) % 4


def sup_norm_deriv(u, n, oversampling=DEFAULT_OVERSAMPLING):
    """Grid maximum of |d^n u / dx^n|.

    The grid has more than oversampling * K points, so the value is a lower
    bound of the true sup norm, sharp up to the grid resolution.
    """
    if n < 0:
        raise ValueError("Derivative order must be nonnegative, got %r" % n)
    values = grid_values(derivative(u, n),
                         oversampled_grid_size(u.K, oversampling))
    return float(np.max(np.abs(values)))


def grid_minimum(u, oversampling=DEFAULT_OVERSAMPLING):
    values = grid_values(u, oversampled_grid_size(u.K, oversampling))
    return float(np.min(values))


def lebesgue_l2_norm(u, M=None):
    """Quadrature L^2 norm with the Lebesgue measure on [-pi, pi)."""
    if M is None:
        M = oversampled_grid_size(u.K)
    values = grid_values(u, M)
    return float(np.sqrt(2.0 * np.pi * np.mean(values ** 2)))


def normalized_lp_norm(u, p, M=None):
    """Quadrature L^p norm against dx/(2*pi), exact for p = 2 and p = 4."""
    if M is None:
        M = oversampled_grid_size(u.K)
    values = grid_values(u, M)
    return float(np.mean(np.abs(values) ** p) ** (1.0 / p))


def apply_mode_matrices(matrices, u, v):
    """Apply per-mode 2x2 matrices, indexed by |k|, to the pair (u, v).

    :param matrices: array of shape (K+1, 2, 2).
    :param u: zero-mean TrigPoly of bandwidth K.
    :param v: zero-mean TrigPoly of bandwidth K.
    :returns: the transformed pair of zero-mean TrigPolys.
    """
    mats = matrices[np.abs(u.wavenumbers)]
    first = mats[:, 0, 0] * u.coeffs + mats[:, 0, 1] * v.coeffs
    second = mats[:, 1, 0] * u.coeffs + mats[:, 1, 1] * v.coeffs
    return (TrigPoly._trusted(first, zero_mean=True),
            TrigPoly._trusted(second, zero_mean=True))
