"""Quantized collective-rotation levels of the flux-threaded ring.

With all relative vibration modes frozen in their ground state, the only
quantum number left is the collective rotation n1. Its energy and angular
frequency are E = E* (n1 - alpha)^2 and omega = omega* (n1 - alpha), with
n1 running over integers for bosons and odd-N fermions and over
half-odd-integers for even-N fermions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .core import RingConfig, Species, Statistics, characterize_ring, normalized_flux
from .errors import DegenerateGroundStateError, DomainError, NumericalError

# ties between two admissible quantum numbers are resolved at this reduced
# energy separation, matching the documented 1e-12 * E* degeneracy window
_TIE_TOL = 1e-12


@dataclass(frozen=True)
class RotationalLevel:
    """One collective-rotation level: quantum number, energy (J), omega (rad/s)."""

    n1: float
    energy: float
    omega: float


@dataclass(frozen=True)
class GroundState:
    """Lowest admissible level, with the partner branch when exactly tied."""

    level: RotationalLevel
    degenerate: bool
    partner: RotationalLevel | None = None


def half_integer_ladder(statistics: Statistics, n_ions: int) -> bool:
    """True when the admissible quantum numbers are half-odd-integers."""
    return statistics is Statistics.FERMION and n_ions % 2 == 0


def admissible_quantum_numbers(statistics: Statistics, n_ions: int,
                               window: int) -> list[float]:
    """Admissible n1 values in [-window, window], sorted ascending."""
    if window < 1:
        raise DomainError("window must be at least 1")
    if half_integer_ladder(statistics, n_ions):
        hi = int(math.floor(window - 0.5))
        return [m + 0.5 for m in range(-hi - 1, hi + 1)]
    return [float(n) for n in range(-window, window + 1)]


def _default_window(alpha: float) -> int:
    # the parabola minimizer sits within 1 of alpha, so this has wide margin
    return max(5, int(math.ceil(abs(alpha))) + 5)


def _check_admissible(n1: float, statistics: Statistics, n_ions: int) -> None:
    double = 2.0 * n1
    if double != round(double):
        raise DomainError(f"n1 = {n1} is not on any quantum-number ladder")
    is_half = round(double) % 2 != 0
    want_half = half_integer_ladder(statistics, n_ions)
    if is_half != want_half:
        ladder = "half-odd-integers" if want_half else "integers"
        raise DomainError(
            f"n1 = {n1} inadmissible for {statistics.value} with N = {n_ions}: "
            f"ladder is {ladder}")


def level(n1: float, ring: RingConfig) -> RotationalLevel:
    """Closed-form level for an admissible quantum number."""
    _check_admissible(n1, ring.species.statistics, ring.n_ions)
    ch = characterize_ring(ring)
    off = n1 - ch.alpha
    return RotationalLevel(n1=n1, energy=ch.e_star * off * off,
                           omega=ch.omega_star * off)


def ground_branches(alpha: float, half_ladder: bool) -> tuple[float, float | None]:
    """Reduced ground-state search: minimizing n1, plus the tied partner if any.

    Brute-force argmin of (n - alpha)^2 over the admissible ladder inside
    the default window. Returns (n_low, n_high) on an exact tie, ordered by
    quantum number, else (n_star, None).
    """
    w = _default_window(alpha)
    if half_ladder:
        ns = [m + 0.5 for m in range(-w, w)]
    else:
        ns = [float(n) for n in range(-w, w + 1)]
    energies = [(n - alpha) ** 2 for n in ns]
    e_min = min(energies)
    hits = [n for n, e in zip(ns, energies) if e - e_min < _TIE_TOL]
    if len(hits) > 1:
        return hits[0], hits[1]
    return hits[0], None


def ground_state(ring: RingConfig) -> GroundState:
    """Minimize E* (n - alpha)^2 over the admissible ladder."""
    ch = characterize_ring(ring)
    half = half_integer_ladder(ring.species.statistics, ring.n_ions)
    n_lo, n_hi = ground_branches(ch.alpha, half)

    def mk(n):
        off = n - ch.alpha
        return RotationalLevel(n1=n, energy=ch.e_star * off * off,
                               omega=ch.omega_star * off)

    if n_hi is None:
        return GroundState(level=mk(n_lo), degenerate=False)
    return GroundState(level=mk(n_lo), degenerate=True, partner=mk(n_hi))


def energy_gap(ring: RingConfig) -> float:
    """Gap in joules between the two lowest admissible levels (0 when tied)."""
    ch = characterize_ring(ring)
    half = half_integer_ladder(ring.species.statistics, ring.n_ions)
    w = _default_window(ch.alpha)
    if half:
        ns = [m + 0.5 for m in range(-w, w)]
    else:
        ns = [float(n) for n in range(-w, w + 1)]
    energies = sorted((n - ch.alpha) ** 2 for n in ns)
    gap = energies[1] - energies[0]
    if gap < _TIE_TOL:
        return 0.0
    return ch.e_star * gap


def rigid_gap(ring: RingConfig) -> float:
    """Distinguishable-particle gap 2 hbar^2 / (N M d^2) in joules.

    This is the largest possible ground-to-first-excited gap when the ions
    are fully distinguishable and the crystal rotates rigidly.
    """
    ch = characterize_ring(ring)
    # E* / N^2 without re-deriving the constants
    return ch.e_star / (ring.n_ions * ring.n_ions)


@dataclass(frozen=True)
class FluxRow:
    alpha: float
    quantum_numbers: tuple[float, ...]
    energies: tuple[float, ...]       # E / E* per quantum number
    omega_gs: float                   # ground omega / omega*
    degenerate: bool


def flux_sweep(alphas, statistics: Statistics, n_ions: int,
               window: int = 2) -> list[FluxRow]:
    """Reduced-unit level family and ground sawtooth over a flux grid."""
    half = half_integer_ladder(statistics, n_ions)
    ns = admissible_quantum_numbers(statistics, n_ions, window)
    rows = []
    for alpha in alphas:
        a = float(alpha)
        energies = tuple((n - a) ** 2 for n in ns)
        n_lo, n_hi = ground_branches(a, half)
        rows.append(FluxRow(alpha=a,
                            quantum_numbers=tuple(ns),
                            energies=energies,
                            omega_gs=n_lo - a,
                            degenerate=n_hi is not None))
    return rows


@dataclass(frozen=True)
class DiameterRow:
    d_over_d0: float
    omega_over_omegastar0: float
    n1_star: float


def diameter_sweep(species: Species, b0: float, d_over_d0,
                   n_ions: int | None = None) -> list[DiameterRow]:
    """Ground rotation frequency against normalized diameter at fixed field.

    At field B0 the flux is alpha = x^2 with x = d/d0, and the ground
    frequency in units of omega*0 is (n1* - x^2)/x^2. Below x = 1/sqrt(2)
    the bosonic ground state stays n1 = 0 and the reduced frequency locks
    to exactly -1 (rigid co-rotation). On an exact tie the lower branch is
    reported. The ladder is half-odd-integer only for even-N fermions;
    omit n_ions for the bosonic case.
    """
    if b0 <= 0:
        raise DomainError("b0 must be positive")
    half = (n_ions is not None
            and half_integer_ladder(species.statistics, n_ions))
    rows = []
    for x in d_over_d0:
        xx = float(x)
        if xx <= 0:
            raise DomainError("d/d0 grid values must be positive")
        alpha = xx * xx
        n_lo, _ = ground_branches(alpha, half)
        rows.append(DiameterRow(d_over_d0=xx,
                                omega_over_omegastar0=(n_lo - alpha) / alpha,
                                n1_star=n_lo))
    return rows


_ROTOR_SEED = 20260822


def rotor_levels_reduced(alpha: float, grid_points: int = 4096, k: int = 7,
                         antiperiodic: bool = False) -> np.ndarray:
    """Lowest k eigenvalues, in E* units, of the discretized flux rotor.

    The covariant derivative is discretized with link phases:

        (H psi)_m = [2 psi_m - e^{-i alpha h} psi_{m+1}
                            - e^{+i alpha h} psi_{m-1}] / h^2

    with h = 2 pi / grid_points and cyclic indices; the wrap entries flip
    sign in the antiperiodic sector. The link-phase form keeps the exact
    lattice gauge identity: alpha and alpha + 1 give identical spectra.
    """
    if grid_points < 256:
        raise DomainError("grid_points must be at least 256")
    m = grid_points
    h = 2.0 * math.pi / m
    hop = -np.exp(-1j * alpha * h) / (h * h)
    mat = sp.lil_matrix((m, m), dtype=complex)
    mat.setdiag(np.full(m, 2.0 / (h * h)))
    mat.setdiag(np.full(m - 1, hop), 1)
    mat.setdiag(np.full(m - 1, np.conj(hop)), -1)
    wrap = -hop if antiperiodic else hop
    mat[m - 1, 0] = wrap
    mat[0, m - 1] = np.conj(wrap)
    rng = np.random.default_rng(_ROTOR_SEED)
    v0 = rng.standard_normal(m)
    try:
        vals = spla.eigsh(mat.tocsc(), k=k + 2, sigma=-0.5, v0=v0,
                          ncv=min(m, 64), return_eigenvectors=False)
    except spla.ArpackNoConvergence as exc:
        raise NumericalError(f"rotor eigensolver did not converge: {exc}") from exc
    return np.sort(vals.real)[:k]


def rotor_oracle(ring: RingConfig, grid_points: int = 4096, k: int = 7) -> np.ndarray:
    """Lowest k rotor energies in joules, boundary condition set by statistics."""
    ch = characterize_ring(ring)
    anti = half_integer_ladder(ring.species.statistics, ring.n_ions)
    reduced = rotor_levels_reduced(ch.alpha, grid_points=grid_points, k=k,
                                   antiperiodic=anti)
    return reduced * ch.e_star


def require_unique_ground(ring: RingConfig) -> GroundState:
    """Ground state, raising if it is a degenerate pair."""
    gs = ground_state(ring)
    if gs.degenerate:
        raise DegenerateGroundStateError(
            f"ground state is degenerate (n1 = {gs.level.n1} and "
            f"{gs.partner.n1}); pick a branch explicitly")
    return gs
