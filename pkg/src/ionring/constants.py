"""Physical constants used throughout the package.

All values are CODATA 2018 and strict SI. The set is deliberately frozen
rather than imported from scipy so that published anchor numbers stay
reproducible regardless of the installed scipy version.

For testing only, the environment variable IONRING_CONSTANTS may point to a
key=value text file overriding any of the float constants below. The active
set is identified by CONSTANTS_VERSION, which every CSV header records.
"""

import math
import os

CONSTANTS_VERSION = "codata2018"

E_CHARGE = 1.602176634e-19    # C, elementary charge (exact)
PLANCK = 6.62607015e-34       # J s (exact)
K_BOLTZMANN = 1.380649e-23    # J/K (exact)
EPSILON_0 = 8.8541878128e-12  # F/m
ELECTRON_MASS = 9.1093837015e-31  # kg
ATOMIC_MASS = 1.66053906660e-27   # kg, unified atomic mass unit

# hbar derived from the exact h so that hbar/h = 1/(2 pi) holds to rounding
HBAR = PLANCK / (2.0 * math.pi)  # J s

# Isotope masses in u; the ion masses subtract one electron mass because the
# species of interest are singly charged.
BE9_MASS_U = 9.0121831
MG24_MASS_U = 23.985042

_OVERRIDABLE = (
    "E_CHARGE",
    "PLANCK",
    "HBAR",
    "K_BOLTZMANN",
    "EPSILON_0",
    "ELECTRON_MASS",
    "ATOMIC_MASS",
)


def _apply_env_override() -> None:
    """Patch module constants from the IONRING_CONSTANTS file, if set."""
    global CONSTANTS_VERSION
    path = os.environ.get("IONRING_CONSTANTS")
    if not path:
        return
    values = {}
    label = os.path.basename(path)
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if key == "label":
                label = val
            elif key in _OVERRIDABLE:
                values[key] = float(val)
            else:
                raise ValueError(f"unknown constant override {key!r} in {path}")
    globals().update(values)
    CONSTANTS_VERSION = f"custom:{label}"


_apply_env_override()
