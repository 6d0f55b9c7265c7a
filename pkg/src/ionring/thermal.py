"""Finite-temperature statistics of the collective rotation.

The thermal average over rotation levels is a Gaussian-weighted lattice
sum. Working in reduced units (energies in E*, temperature t = T/T*) the
weight of quantum number n is exp(-(n - alpha)^2 / t). Sums are truncated
at a temperature-dependent half-width and every output carries a certified
analytic bound on the truncation error, so results are self-checking.

Weights are referenced to the lowest admissible level (the sum is shifted
by the ground energy). This pins Z -> 1 as t -> 0 and keeps the ratio
numerically stable where absolute Boltzmann factors would underflow; the
average frequency is unaffected because the shift cancels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import RingConfig, Statistics, characterize_ring
from .errors import DomainError
from .levels import half_integer_ladder


@dataclass(frozen=True)
class ThermalPoint:
    """One evaluated (alpha, T) point with its self-certification fields.

    temperature is in kelvin when the point came through a RingConfig and
    None in reduced-unit mode. tail_bound is an upper bound on the
    truncation error of omega_bar_over_omegastar.
    """

    temperature: float | None
    t_over_tstar: float
    alpha: float
    omega_bar_over_omegastar: float
    partition_function: float
    truncation_halfwidth: int
    tail_bound: float


def summation_halfwidth(t_over_tstar: float) -> int:
    """Truncation half-width: max(8, ceil(12 sqrt(t))).

    Gaussian weights at this width are below e^{-144} relative to the
    ground term, so the neglected mass is negligible at double precision.
    """
    return max(8, int(math.ceil(12.0 * math.sqrt(t_over_tstar))))


def _ladder_offsets(alpha: float, half: bool, width: int) -> list[float]:
    # admissible n with |n - alpha| <= width, as offsets n - alpha sorted
    # by ascending magnitude (summation order for reproducibility)
    if half:
        lo = math.ceil(alpha - width - 0.5)
        ns = [m + 0.5 for m in range(lo, math.floor(alpha + width - 0.5) + 1)]
    else:
        ns = [float(n) for n in range(math.ceil(alpha - width),
                                      math.floor(alpha + width) + 1)]
    offs = [n - alpha for n in ns]
    offs.sort(key=abs)
    return offs


def _tail_bound(s: float, g: float, width: int, omega_abs: float,
                z: float) -> float:
    # integral-comparison bounds on the neglected shifted weights:
    #   dZ <= sqrt(pi/s) erfc((H-1) sqrt(s)) e^{g s}
    #   dN <= e^{g s - s (H-1)^2} / s
    # then |d omega_bar| <= (dN + |omega_bar| dZ) / Z
    edge = width - 1
    try:
        dz = math.sqrt(math.pi / s) * math.erfc(edge * math.sqrt(s)) \
            * math.exp(g * s)
        dn = math.exp(g * s - s * edge * edge) / s
    except OverflowError:
        return math.inf
    return (dn + omega_abs * dz) / z


def thermal_point(alpha: float, t_over_tstar: float,
                  statistics: Statistics = Statistics.BOSON, n_ions: int = 1,
                  halfwidth: int | None = None,
                  temperature: float | None = None) -> ThermalPoint:
    """Evaluate Z and the thermal-average frequency at one (alpha, t) point.

    halfwidth overrides the truncation policy (testing and convergence
    studies); it must cover at least the default width's certified regime
    to keep the tail bound meaningful.
    """
    if t_over_tstar <= 0.0:
        raise DomainError(
            "t_over_tstar must be positive; use ground_state for T = 0")
    half = half_integer_ladder(statistics, n_ions)
    width = halfwidth if halfwidth is not None else summation_halfwidth(t_over_tstar)
    if width < 2:
        raise DomainError("halfwidth must be at least 2")
    offs = _ladder_offsets(alpha, half, width)
    s = 1.0 / t_over_tstar
    g = offs[0] * offs[0]
    weights = [math.exp(-s * (o * o - g)) for o in offs]
    z = math.fsum(weights)
    # symmetric weight distributions average to zero identically; detect
    # them from the flux itself so the zero is exact, not 1e-17 noise
    if 2.0 * alpha == round(2.0 * alpha):
        omega_bar = 0.0
    else:
        omega_bar = math.fsum(o * w for o, w in zip(offs, weights)) / z
    bound = _tail_bound(s, g, width, abs(omega_bar), z)
    return ThermalPoint(temperature=temperature, t_over_tstar=t_over_tstar,
                        alpha=alpha, omega_bar_over_omegastar=omega_bar,
                        partition_function=z, truncation_halfwidth=width,
                        tail_bound=bound)


def partition_function(alpha: float, t_over_tstar: float,
                       statistics: Statistics = Statistics.BOSON,
                       n_ions: int = 1, halfwidth: int | None = None) -> float:
    """Ground-referenced partition function Z at one (alpha, t) point."""
    return thermal_point(alpha, t_over_tstar, statistics, n_ions,
                         halfwidth).partition_function


def thermal_average_frequency(alpha: float, t_over_tstar: float,
                              statistics: Statistics = Statistics.BOSON,
                              n_ions: int = 1,
                              halfwidth: int | None = None) -> float:
    """Thermal-average rotation frequency in omega* units."""
    return thermal_point(alpha, t_over_tstar, statistics, n_ions,
                         halfwidth).omega_bar_over_omegastar


def thermal_curve(alphas, t_grid, statistics: Statistics = Statistics.BOSON,
                  n_ions: int = 1,
                  halfwidth: int | None = None) -> list[ThermalPoint]:
    """One ThermalPoint per (alpha, t) pair, alpha-major, grid order."""
    return [thermal_point(float(a), float(t), statistics, n_ions, halfwidth)
            for a in alphas for t in t_grid]


def thermal_point_kelvin(ring: RingConfig, temperature: float,
                         halfwidth: int | None = None) -> ThermalPoint:
    """Kelvin-input path: alpha and the ladder come from the ring itself."""
    ch = characterize_ring(ring)
    if temperature <= 0.0:
        raise DomainError("temperature must be positive")
    return thermal_point(ch.alpha, temperature / ch.t_star,
                         ring.species.statistics, ring.n_ions, halfwidth,
                         temperature=temperature)


def thermal_curve_kelvin(ring: RingConfig, temperatures,
                         halfwidth: int | None = None) -> list[ThermalPoint]:
    return [thermal_point_kelvin(ring, float(t), halfwidth)
            for t in temperatures]


def characteristic_temperature(ring: RingConfig) -> float:
    """T* = E*/k_B in kelvin, re-exported for thermal workflows."""
    return characterize_ring(ring).t_star
