"""Shared fixtures: reference ring configurations used across the suite."""

import pytest

from ionring.core import RingConfig, flux_to_field, species_lookup


@pytest.fixture(scope="session")
def be9():
    return species_lookup("Be9+")


@pytest.fixture(scope="session")
def mg24():
    return species_lookup("Mg24+")


@pytest.fixture(scope="session")
def quarter_ring(be9):
    """100 Be9+ ions, d = 100 um, field tuned to alpha = 1/4."""
    b = flux_to_field(be9, 100e-6, 0.25)
    return RingConfig(be9, 100, 100e-6, b)


@pytest.fixture(scope="session")
def small_ring(be9):
    """100 Be9+ ions, d = 20 um, B = 1e-4 T (alpha near 7.6)."""
    return RingConfig(be9, 100, 20e-6, 1e-4)
