"""Normal modes of the ring Coulomb crystal.

The ions interact through 3D Coulomb repulsion between points on a circle,
so the pair energy depends on the chord distance d sin(dtheta/2). In units
of q^2/(4 pi eps0 d) the crystal energy is

    u(theta) = sum_{i<j} 1 / sin(|theta_i - theta_j| / 2)

Expanding u to second order around the equally spaced equilibrium gives a
symmetric circulant Hessian H. The normalized mode frequencies used by the
rest of the package are omega_j = sqrt(lambda_j / 2) with lambda_j the
eigenvalues of H sorted ascending; the lowest one is the zero-frequency
uniform-rotation mode. The factor 1/2 is fixed by matching the quadratic
Hamiltonian's potential term to the second-order Coulomb expansion, and it
reproduces the omega_2 = 2.48 anchor at N = 10.

Two independent computation paths are provided: dense symmetric
diagonalization (the production path, which generalizes to perturbed
configurations) and the analytic circulant eigenvalues (exact for the
symmetric ring, used as a cross-check).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import cos, pi, sin, sqrt

import numpy as np

from .constants import EPSILON_0, K_BOLTZMANN
from .core import RingConfig
from .errors import DomainError, NumericalError


@dataclass(frozen=True)
class AngularConfiguration:
    """Ion angles theta_j in radians, strictly increasing on [0, 2 pi)."""

    angles: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.angles, dtype=float)
        if a.ndim != 1 or a.size < 2:
            raise DomainError("need at least 2 angles")
        if np.any(a < 0.0) or np.any(a >= 2.0 * pi):
            raise DomainError("angles must lie in [0, 2 pi)")
        if np.any(np.diff(a) <= 0.0):
            raise DomainError("angles must be strictly increasing")
        object.__setattr__(self, "angles", a)


@dataclass(frozen=True)
class ModeSpectrum:
    """Sorted normalized mode frequencies with their normal-coordinate directions.

    frequencies[0] is the zero mode; mode_vectors[j] is the unit vector in
    angle space for frequencies[j], and mode_vectors[0] is the uniform
    rotation direction (1, ..., 1)/sqrt(N). Degenerate pairs span a gauge
    freedom, so only their eigenspaces are meaningful.
    """

    n_ions: int
    frequencies: np.ndarray
    mode_vectors: np.ndarray


def equilibrium_positions(n_ions: int) -> AngularConfiguration:
    """Equally spaced angles 2 pi j / N, the minimum of the ring Coulomb energy."""
    if n_ions < 2:
        raise DomainError("equilibrium requires at least 2 ions")
    return AngularConfiguration(2.0 * pi * np.arange(n_ions) / n_ions)


def coulomb_energy(angles: np.ndarray) -> float:
    """Dimensionless ring Coulomb energy u(theta) = sum_{i<j} 1/sin(|dtheta|/2)."""
    a = np.asarray(angles, dtype=float)
    total = 0.0
    for i in range(a.size - 1):
        total += float(np.sum(1.0 / np.abs(np.sin((a[i] - a[i + 1:]) / 2.0))))
    return total


def _fpp(delta: float) -> float:
    # second derivative of 1/sin(delta/2) for delta in (0, 2 pi)
    s = sin(delta / 2.0)
    c = cos(delta / 2.0)
    return c * c / (2.0 * s ** 3) + 1.0 / (4.0 * s)


def dimensionless_hessian(n_ions: int) -> np.ndarray:
    """Analytic Hessian of u at equilibrium: symmetric, circulant, zero row sums."""
    if n_ions < 2:
        raise DomainError("hessian requires at least 2 ions")
    N = n_ions
    # circulant first row: off-diagonals are -f''(2 pi m / N). f'' is
    # symmetric about pi, so evaluate each pair once and mirror; this keeps
    # the matrix bitwise symmetric instead of symmetric up to rounding.
    row = np.zeros(N)
    for m in range(1, N // 2 + 1):
        val = -_fpp(2.0 * pi * m / N)
        row[m] = val
        row[N - m] = val
    row[0] = -np.sum(row[1:])
    H = np.empty((N, N))
    for i in range(N):
        H[i] = np.roll(row, i)
    return H


def _frequencies_from_eigs(lam: np.ndarray) -> np.ndarray:
    # zero out numerically zero eigenvalues before the square root; the
    # clamp scales with the eigenvalue magnitude so large-N spectra with
    # O(eps * ||H||) noise on the zero mode still report omega_1 = 0
    clamp = max(1e-10, 1e3 * np.finfo(float).eps * float(np.max(np.abs(lam))))
    if float(np.min(lam)) < -clamp:
        raise NumericalError(
            f"negative Hessian eigenvalue {np.min(lam):.3e} beyond clamp {clamp:.3e}")
    out = np.where(np.abs(lam) <= clamp, 0.0, lam)
    return np.sqrt(out / 2.0)


def mode_spectrum(n_ions: int) -> ModeSpectrum:
    """Diagonalize the Hessian: frequencies ascending, orthonormal mode vectors.

    Raises
    ------
    NumericalError
        If the dense symmetric eigensolver does not converge.
    """
    H = dimensionless_hessian(n_ions)
    try:
        lam, vec = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        diag = float(np.max(np.abs(H)))
        raise NumericalError(
            f"eigensolver failed for N={n_ions} (max |H| = {diag:.3e}): {exc}"
        ) from exc
    freqs = _frequencies_from_eigs(lam)
    vectors = vec.T.copy()
    # deterministic sign: largest-magnitude component positive
    for j in range(vectors.shape[0]):
        k = int(np.argmax(np.abs(vectors[j])))
        if vectors[j, k] < 0.0:
            vectors[j] = -vectors[j]
    return ModeSpectrum(n_ions=n_ions, frequencies=freqs, mode_vectors=vectors)


def circulant_frequencies(n_ions: int) -> np.ndarray:
    """Closed-form frequencies from the circulant eigenvalue sum, sorted ascending.

    lambda_k = sum_{m=1..N-1} f''(2 pi m / N) (1 - cos(2 pi k m / N)); the
    k = 0 term vanishes identically and gives the exact zero mode.
    """
    if n_ions < 2:
        raise DomainError("need at least 2 ions")
    N = n_ions
    fpp = np.array([_fpp(2.0 * pi * m / N) for m in range(1, N)])
    m = np.arange(1, N)
    lam = np.empty(N)
    for k in range(N):
        lam[k] = float(np.sum(fpp * (1.0 - np.cos(2.0 * pi * k * m / N))))
    lam[0] = 0.0
    lam = np.sort(lam)
    return _frequencies_from_eigs(lam)


def crystallization_temperature(ring: RingConfig) -> float:
    """Upper temperature bound T_c = N q^2 / (2 pi^2 eps0 k_B d) for the crystal.

    The crystal regime requires T well below this bound; callers decide how
    much margin "well below" means. For N = 1 the bound is still returned
    but a warning is emitted since there is no pair interaction.
    """
    if ring.n_ions == 1:
        warnings.warn("crystallization bound is meaningless for a single ion",
                      stacklevel=2)
    q = ring.species.charge
    return ring.n_ions * q * q / (2.0 * pi ** 2 * EPSILON_0 * K_BOLTZMANN
                                  * ring.diameter)
