"""Experiment-feasibility formulas: marking, timing, preparation, two-ring ratios.

Every operation is a closed form from the measurement and preparation
analysis: the laser-waist window for marking individual ions, the momentum
kick relative to the ring momentum, revival and displacement times of the
marked pattern, the adiabatic ramp bound, the rigid co-rotation diameter
bound, and the commensurability classification of two independent rings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .constants import HBAR, PLANCK
from .core import RingConfig, Species, characterize_ring
from .errors import DomainError
from .levels import require_unique_ground
from .modes import crystallization_temperature


def marker_waist_window(n_ions: int, diameter: float) -> tuple[float, float, bool]:
    """Laser-waist window (w_min, w_max, feasible) for single-ion marking.

    w_min = 2 sqrt(2) d / N resolves one ion; w_max = sqrt(2) d keeps the
    beam on the ring. The window is nonempty exactly when N > 2.
    """
    if n_ions < 1:
        raise DomainError("n_ions must be at least 1")
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    w_min = 2.0 * math.sqrt(2.0) * diameter / n_ions
    w_max = math.sqrt(2.0) * diameter
    return w_min, w_max, w_min < w_max


def momentum_kick_ratio(waist: float, ring: RingConfig) -> float:
    """Marking kick sqrt(2) hbar / w0 over the ring momentum 2 N hbar |n1*-alpha| / d.

    The denominator generalizes the alpha = 1/4 ring momentum N hbar/(2 d);
    a ratio below 1 means marking does not destroy the rotation state.
    Returns inf when the ground state is stationary.
    """
    if waist <= 0:
        raise DomainError("waist must be positive")
    gs = require_unique_ground(ring)
    ch = characterize_ring(ring)
    off = abs(gs.level.n1 - ch.alpha)
    if off == 0.0:
        return math.inf
    return math.sqrt(2.0) * ring.diameter / (2.0 * ring.n_ions * waist * off)


def mark_displacement(ring: RingConfig, delta_t: float) -> tuple[float, float]:
    """Marked-pattern rotation angle after delta_t: (unwrapped, wrapped mod 2 pi)."""
    if delta_t < 0:
        raise DomainError("delta_t must be nonnegative")
    gs = require_unique_ground(ring)
    theta = gs.level.omega * delta_t
    return theta, theta % (2.0 * math.pi)


def revival_time(ring: RingConfig, l: int = 1) -> float:
    """Time 2 pi l / (omega* |n1* - alpha|) for the pattern to repeat l times."""
    if l < 1:
        raise DomainError("l must be a positive integer")
    gs = require_unique_ground(ring)
    if gs.level.omega == 0.0:
        raise DomainError("ground state is stationary; no revival")
    return 2.0 * math.pi * l / abs(gs.level.omega)


def adiabatic_ramp_time(ring: RingConfig) -> float:
    """Order-of-magnitude lower bound hbar / (k_B T*) on the pinning ramp time."""
    return HBAR / characterize_ring(ring).e_star


def rigid_corotation_max_diameter(species: Species, b0: float) -> float:
    """Largest crystal diameter d0/sqrt(2) that co-rotates rigidly at field b0."""
    if b0 <= 0:
        raise DomainError("b0 must be positive")
    d0 = math.sqrt(4.0 * PLANCK / (math.pi * abs(species.charge) * b0))
    return d0 / math.sqrt(2.0)


def _convergents(x: Fraction, q_max: int) -> list[tuple[int, int]]:
    # continued-fraction convergents of x with denominator <= q_max; x is
    # exact, so the expansion terminates
    out = []
    p_prev, q_prev = 1, 0
    p_cur, q_cur = int(math.floor(x)), 1
    rem = x - int(math.floor(x))
    out.append((p_cur, q_cur))
    while rem != 0:
        x = 1 / rem
        a = int(math.floor(x))
        rem = x - a
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        if q_cur > q_max:
            break
        out.append((p_cur, q_cur))
    return out


@dataclass(frozen=True)
class QuasicrystalAnalysis:
    """Frequency ratio of two rings and its rational classification.

    commensurate is decided against the best rational approximation with
    denominator at most q_max: the motion repeats only when the ratio is
    (numerically) rational, otherwise the pair forms a time quasicrystal.
    """

    ratio: float
    commensurate: bool
    p: int | None
    q: int | None
    tolerance: float
    q_max: int
    convergents: list[tuple[int, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "ratio": self.ratio,
            "classification": "commensurate" if self.commensurate
                              else "incommensurate",
            "p": self.p,
            "q": self.q,
            "tolerance": self.tolerance,
            "q_max": self.q_max,
            "convergents": [list(c) for c in self.convergents],
        }


def classify_ratio(ratio: float, q_max: int = 1000,
                   tolerance: float = 1e-9) -> QuasicrystalAnalysis:
    """Classify a frequency ratio as commensurate p/q (q <= q_max) or not.

    The candidate is the best rational approximation with denominator up
    to q_max (continued-fraction convergents and semiconvergents), which
    matches an exhaustive scan over all p/q; plain convergents alone can
    miss the closest rational.
    """
    if q_max < 1:
        raise DomainError("q_max must be at least 1")
    if not math.isfinite(ratio):
        raise DomainError("ratio must be finite")
    exact = Fraction(ratio)
    best = exact.limit_denominator(q_max)
    err = abs(ratio - best.numerator / best.denominator)
    commensurate = err <= tolerance
    return QuasicrystalAnalysis(
        ratio=ratio,
        commensurate=commensurate,
        p=best.numerator if commensurate else None,
        q=best.denominator if commensurate else None,
        tolerance=tolerance,
        q_max=q_max,
        convergents=_convergents(exact, q_max),
    )


def quasicrystal_analysis(ring1: RingConfig, ring2: RingConfig,
                          q_max: int = 1000,
                          tolerance: float = 1e-9) -> QuasicrystalAnalysis:
    """Classify the ground rotation frequency ratio of two co-threaded rings."""
    if ring1.b_field != ring2.b_field:
        raise DomainError("the two rings must share the same field")
    gs1 = require_unique_ground(ring1)
    gs2 = require_unique_ground(ring2)
    if gs1.level.omega == 0.0 or gs2.level.omega == 0.0:
        raise DomainError("both rings must have nonzero ground rotation")
    return classify_ratio(gs2.level.omega / gs1.level.omega, q_max, tolerance)


@dataclass(frozen=True)
class FlagCheck:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class FeasibilityReport:
    """All planner outputs for one configuration, plus named pass/fail flags.

    Fields that cannot be evaluated (degenerate ground state, zero field)
    are nan or None and the corresponding flag records why.
    """

    ring: RingConfig
    t_crystal: float
    t_star: float
    omega_star: float
    alpha: float
    waist_min: float
    waist_max: float
    waist_feasible: bool
    kick_ratio: float
    ramp_time_min: float
    revival_time: float
    mark_displacement: float
    mark_displacement_wrapped: float
    rigid_corotation_max_d: float | None
    flags: list[FlagCheck]

    def all_passed(self) -> bool:
        return all(f.passed for f in self.flags)

    def to_dict(self) -> dict:
        return {
            "ring": {
                "species": self.ring.species.name,
                "n_ions": self.ring.n_ions,
                "diameter": self.ring.diameter,
                "b_field": self.ring.b_field,
            },
            "alpha": self.alpha,
            "t_crystal": self.t_crystal,
            "t_star": self.t_star,
            "omega_star": self.omega_star,
            "waist_min": self.waist_min,
            "waist_max": self.waist_max,
            "waist_feasible": self.waist_feasible,
            "kick_ratio": self.kick_ratio,
            "ramp_time_min": self.ramp_time_min,
            "revival_time": self.revival_time,
            "mark_displacement": self.mark_displacement,
            "mark_displacement_wrapped": self.mark_displacement_wrapped,
            "rigid_corotation_max_d": self.rigid_corotation_max_d,
            "flags": [f.to_dict() for f in self.flags],
        }


def feasibility_report(ring: RingConfig, waist: float, l: int = 1,
                       delta_t: float = 1.0, t_target: float | None = None,
                       ratio_threshold: float = 0.1) -> FeasibilityReport:
    """Evaluate every feasibility check for one ring configuration.

    t_target is the temperature the experiment aims to reach; it defaults
    to T* since the rotation levels only resolve near that scale. The
    "much smaller" inequalities pass when the relevant ratio is below
    ratio_threshold.
    """
    ch = characterize_ring(ring)
    t_crystal = crystallization_temperature(ring)
    if t_target is None:
        t_target = ch.t_star
    w_min, w_max, w_feasible = marker_waist_window(ring.n_ions, ring.diameter)
    flags = []

    flags.append(FlagCheck(
        "crystal_regime", t_target / t_crystal < ratio_threshold,
        f"t_target/t_crystal = {t_target / t_crystal:.3e} "
        f"(threshold {ratio_threshold:g})"))

    try:
        require_unique_ground(ring)
        unique = True
        detail = "ground state unique"
    except DomainError as exc:
        unique = False
        detail = str(exc)
    flags.append(FlagCheck("ground_state_unique", unique, detail))

    flags.append(FlagCheck(
        "waist_in_window", w_feasible and w_min < waist < w_max,
        f"waist {waist:.3e} m, window ({w_min:.3e}, {w_max:.3e}) m"))

    if unique:
        kick = momentum_kick_ratio(waist, ring)
        theta, theta_wrapped = mark_displacement(ring, delta_t)
        try:
            revival = revival_time(ring, l)
        except DomainError:
            revival = math.inf
    else:
        kick = math.nan
        theta = theta_wrapped = math.nan
        revival = math.nan
    flags.append(FlagCheck(
        "kick_nondestructive", kick < 1.0, f"kick ratio = {kick:.3e}"))

    if ring.b_field != 0.0:
        corot = rigid_corotation_max_diameter(ring.species, abs(ring.b_field))
        flags.append(FlagCheck(
            "within_corotation_bound", ring.diameter < corot,
            f"diameter {ring.diameter:.3e} m, bound {corot:.3e} m"))
    else:
        corot = None
        flags.append(FlagCheck(
            "within_corotation_bound", False,
            "bound undefined at zero field"))

    return FeasibilityReport(
        ring=ring,
        t_crystal=t_crystal,
        t_star=ch.t_star,
        omega_star=ch.omega_star,
        alpha=ch.alpha,
        waist_min=w_min,
        waist_max=w_max,
        waist_feasible=w_feasible,
        kick_ratio=kick,
        ramp_time_min=adiabatic_ramp_time(ring),
        revival_time=revival,
        mark_displacement=theta,
        mark_displacement_wrapped=theta_wrapped,
        rigid_corotation_max_d=corot,
        flags=flags,
    )
