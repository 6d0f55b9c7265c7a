"""Species registry, ring configuration, and characteristic scales.

A ring of N identical charged particles sits on a circle of diameter d
threaded by an axial magnetic field B. Everything downstream is controlled
by a handful of closed-form quantities derived here:

    alpha   = q pi d^2 B / (4 h)      normalized magnetic flux (signed)
    E*      = 2 N hbar^2 / (M d^2)    rotational energy scale
    omega*  = 4 hbar / (M d^2)        rotational angular frequency scale
    T*      = E* / k_B                characteristic temperature
    eta^2   = q^2 M d / (8 pi hbar^2 eps0)   Coulomb-to-quantum stiffness
    d0      = sqrt(4 h / (pi |q| B0)) diameter with unit flux at field B0
    omega*0 = |q| B0 / (2 M)          co-rotation frequency at field B0

All quantities are strict SI. Functions here are pure and the registry is
immutable after import, so everything is safe for concurrent use.
"""

from __future__ import annotations

import configparser
import enum
from dataclasses import dataclass
from math import pi, sqrt

from .constants import (
    ATOMIC_MASS,
    BE9_MASS_U,
    E_CHARGE,
    ELECTRON_MASS,
    EPSILON_0,
    HBAR,
    K_BOLTZMANN,
    MG24_MASS_U,
    PLANCK,
)
from .errors import DomainError, SpeciesLookupError


class Statistics(enum.Enum):
    BOSON = "boson"
    FERMION = "fermion"
    DISTINGUISHABLE = "distinguishable"


@dataclass(frozen=True)
class Species:
    """Particle identity: mass in kg, signed charge in C, exchange statistics."""

    name: str
    mass: float
    charge: float
    statistics: Statistics

    def __post_init__(self):
        if self.mass <= 0:
            raise DomainError(f"species {self.name!r}: mass must be positive")
        if self.charge == 0:
            raise DomainError(f"species {self.name!r}: charge must be nonzero")


@dataclass(frozen=True)
class RingConfig:
    """One ion ring: species, ion count N, diameter d in m, axial field B in T.

    The field is signed; B > 0 points along the positive ring axis and
    positive angular frequency means counterclockwise rotation.
    """

    species: Species
    n_ions: int
    diameter: float
    b_field: float = 0.0

    def __post_init__(self):
        if self.n_ions < 1:
            raise DomainError("n_ions must be at least 1")
        if self.diameter <= 0:
            raise DomainError("diameter must be positive")


@dataclass(frozen=True)
class RingCharacterization:
    """Closed-form characteristic quantities of one ring configuration.

    d0 and omega_star0 are None when the configured field is zero, since
    both are defined relative to a reference field magnitude B0 = |B|.
    """

    alpha: float
    e_star: float
    omega_star: float
    t_star: float
    eta: float
    d0: float | None
    omega_star0: float | None


# Ion masses subtract one electron mass (singly charged species).
_REGISTRY = {
    "Be9+": Species("Be9+", BE9_MASS_U * ATOMIC_MASS - ELECTRON_MASS,
                    +E_CHARGE, Statistics.BOSON),
    "Mg24+": Species("Mg24+", MG24_MASS_U * ATOMIC_MASS - ELECTRON_MASS,
                     +E_CHARGE, Statistics.FERMION),
    "electron": Species("electron", ELECTRON_MASS, -E_CHARGE,
                        Statistics.FERMION),
}


def species_lookup(name: str) -> Species:
    """Return the registered species record for a label.

    Parameters
    ----------
    name : str
        Registered label, e.g. "Be9+", "Mg24+", "electron".

    Raises
    ------
    SpeciesLookupError
        If the label is not registered.
    """
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise SpeciesLookupError(
            f"unknown species {name!r} (registered: {known})") from None


def registered_species() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def load_species_file(path: str) -> dict[str, Species]:
    """Parse a species config file into a name -> Species mapping.

    The file is INI-style, one section per species:

        [Ca40+]
        mass_u = 39.9625908
        charge_e = 1
        statistics = boson

    Mass is given either as mass_u (atomic mass units, one electron mass
    per unit positive charge is subtracted) or mass_kg (used verbatim).
    charge_e is the signed charge in units of e.
    """
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise DomainError(f"species file not found: {path}")
    out = {}
    for name in parser.sections():
        sec = parser[name]
        charge_e = sec.getfloat("charge_e")
        if charge_e is None:
            raise DomainError(f"species {name!r}: charge_e is required")
        if "mass_kg" in sec:
            mass = sec.getfloat("mass_kg")
        elif "mass_u" in sec:
            # neutral-atom mass given: remove (or add) the ionizing electrons
            mass = sec.getfloat("mass_u") * ATOMIC_MASS - charge_e * ELECTRON_MASS
        else:
            raise DomainError(f"species {name!r}: mass_u or mass_kg is required")
        stat_raw = sec.get("statistics", "")
        try:
            stat = Statistics(stat_raw.strip().lower())
        except ValueError:
            raise DomainError(
                f"species {name!r}: statistics must be one of "
                f"{[s.value for s in Statistics]}, got {stat_raw!r}") from None
        out[name] = Species(name, mass, charge_e * E_CHARGE, stat)
    return out


def normalized_flux(ring: RingConfig) -> float:
    """Normalized magnetic flux alpha = q pi d^2 B / (4 h), sign included."""
    q = ring.species.charge
    return q * pi * ring.diameter ** 2 * ring.b_field / (4.0 * PLANCK)


def flux_to_field(species: Species, diameter: float, alpha: float) -> float:
    """Axial field that produces the given normalized flux: inverse of alpha(B)."""
    if diameter <= 0:
        raise DomainError("diameter must be positive")
    return 4.0 * PLANCK * alpha / (species.charge * pi * diameter ** 2)


def characterize_ring(ring: RingConfig) -> RingCharacterization:
    """Compute every closed-form characteristic quantity for one ring.

    Returns
    -------
    RingCharacterization
        alpha, E*, omega*, T*, eta, and (for nonzero field) d0 and omega*0
        evaluated at B0 = |B|.
    """
    M = ring.species.mass
    q = ring.species.charge
    d = ring.diameter
    N = ring.n_ions

    e_star = 2.0 * N * HBAR * HBAR / (M * d * d)
    omega_star = 4.0 * HBAR / (M * d * d)
    t_star = e_star / K_BOLTZMANN
    eta = sqrt(q * q * M * d / (8.0 * pi * HBAR * HBAR * EPSILON_0))

    d0 = None
    omega_star0 = None
    if ring.b_field != 0.0:
        b0 = abs(ring.b_field)
        d0 = sqrt(4.0 * PLANCK / (pi * abs(q) * b0))
        omega_star0 = abs(q) * b0 / (2.0 * M)

    return RingCharacterization(
        alpha=normalized_flux(ring),
        e_star=e_star,
        omega_star=omega_star,
        t_star=t_star,
        eta=eta,
        d0=d0,
        omega_star0=omega_star0,
    )
