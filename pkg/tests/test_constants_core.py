"""Species registry, characteristic scales, and their exact identities."""

import math

import pytest

from ionring.constants import (
    ATOMIC_MASS,
    E_CHARGE,
    ELECTRON_MASS,
    EPSILON_0,
    HBAR,
    K_BOLTZMANN,
    PLANCK,
)
from ionring.core import (
    RingConfig,
    Species,
    Statistics,
    characterize_ring,
    flux_to_field,
    load_species_file,
    normalized_flux,
    registered_species,
    species_lookup,
)
from ionring.errors import DomainError, SpeciesLookupError


def rel(a, b):
    return abs(a - b) / abs(b)


class TestRegistry:
    def test_be9_ion_mass(self):
        sp = species_lookup("Be9+")
        # neutral atom minus the ionizing electron
        assert sp.mass == 9.0121831 * ATOMIC_MASS - ELECTRON_MASS
        assert rel(sp.mass, 1.4964171174532145e-26) < 1e-12
        assert rel(sp.mass, 1.4965e-26) < 1e-4

    def test_mg24_ion_mass(self):
        sp = species_lookup("Mg24+")
        assert sp.mass == 23.985042 * ATOMIC_MASS - ELECTRON_MASS

    def test_electron(self):
        sp = species_lookup("electron")
        assert sp.mass == ELECTRON_MASS
        assert sp.charge == -E_CHARGE
        assert sp.statistics is Statistics.FERMION

    def test_statistics_assignment(self):
        assert species_lookup("Be9+").statistics is Statistics.BOSON
        assert species_lookup("Mg24+").statistics is Statistics.FERMION

    def test_charges(self):
        assert species_lookup("Be9+").charge == E_CHARGE
        assert species_lookup("Mg24+").charge == E_CHARGE

    def test_unknown_species(self):
        with pytest.raises(SpeciesLookupError, match="unobtainium"):
            species_lookup("unobtainium")

    def test_registered_species_listing(self):
        names = registered_species()
        assert set(names) >= {"Be9+", "Mg24+", "electron"}
        assert list(names) == sorted(names)


class TestValidation:
    def test_species_mass_positive(self):
        with pytest.raises(DomainError):
            Species("bad", -1.0, E_CHARGE, Statistics.BOSON)

    def test_species_charge_nonzero(self):
        with pytest.raises(DomainError):
            Species("bad", 1e-26, 0.0, Statistics.BOSON)

    def test_ring_n_ions(self, be9):
        with pytest.raises(DomainError):
            RingConfig(be9, 0, 1e-4)

    def test_ring_diameter(self, be9):
        with pytest.raises(DomainError):
            RingConfig(be9, 10, 0.0)


class TestNormalizedFlux:
    def test_zero_field(self, be9):
        assert normalized_flux(RingConfig(be9, 10, 1e-4, 0.0)) == 0.0

    def test_small_ring_anchor(self, small_ring):
        a = normalized_flux(small_ring)
        assert rel(a, 7.596337239393132) < 1e-12
        assert rel(a, 7.59) < 2e-3

    def test_quadratic_in_diameter(self, be9):
        # doubling d scales alpha by exactly 4 (power-of-two float scaling)
        for d in (1e-5, 3.7e-5, 2.5e-4):
            a1 = normalized_flux(RingConfig(be9, 5, d, 1e-4))
            a2 = normalized_flux(RingConfig(be9, 5, 2 * d, 1e-4))
            assert a2 == 4 * a1

    def test_linear_in_field(self, be9):
        a1 = normalized_flux(RingConfig(be9, 5, 1e-4, 1e-4))
        a2 = normalized_flux(RingConfig(be9, 5, 1e-4, 2e-4))
        assert a2 == 2 * a1

    def test_sign_from_charge(self, be9):
        el = species_lookup("electron")
        assert normalized_flux(RingConfig(el, 5, 1e-4, 1e-4)) < 0
        assert normalized_flux(RingConfig(be9, 5, 1e-4, 1e-4)) > 0

    def test_sign_from_field(self, be9):
        assert normalized_flux(RingConfig(be9, 5, 1e-4, -1e-4)) < 0

    def test_flux_to_field_round_trip(self, be9):
        for alpha in (0.25, -1.5, 7.0):
            b = flux_to_field(be9, 100e-6, alpha)
            back = normalized_flux(RingConfig(be9, 10, 100e-6, b))
            assert rel(back, alpha) < 1e-12

    def test_quarter_field_value(self, be9):
        assert rel(flux_to_field(be9, 100e-6, 0.25),
                   1.316423913901813e-07) < 1e-12


class TestCharacterization:
    def test_flagship_scales(self, quarter_ring):
        ch = characterize_ring(quarter_ring)
        assert rel(ch.omega_star, 2.8) < 0.02
        assert rel(ch.t_star, 1.1e-9) < 0.05
        assert rel(ch.omega_star, 2.818924764616314) < 1e-12
        assert rel(ch.t_star, 1.0765801492012778e-09) < 1e-12
        assert rel(ch.e_star, 1.486379306414595e-32) < 1e-12

    def test_eta_anchor(self, small_ring):
        ch = characterize_ring(small_ring)
        assert rel(ch.eta, 5.6e4) < 0.02
        assert rel(ch.eta, 55716.17187257666) < 1e-12

    def test_eta_definition(self, small_ring):
        ch = characterize_ring(small_ring)
        sp = small_ring.species
        target = sp.charge ** 2 * sp.mass * small_ring.diameter / (
            8.0 * math.pi * HBAR ** 2 * EPSILON_0)
        assert rel(ch.eta ** 2, target) < 1e-12

    def test_estar_tstar_relation(self, quarter_ring):
        ch = characterize_ring(quarter_ring)
        assert rel(ch.t_star * K_BOLTZMANN, ch.e_star) < 1e-12

    def test_estar_formula(self, quarter_ring):
        ch = characterize_ring(quarter_ring)
        sp = quarter_ring.species
        target = (2.0 * quarter_ring.n_ions * HBAR ** 2
                  / (sp.mass * quarter_ring.diameter ** 2))
        assert rel(ch.e_star, target) < 1e-12

    def test_unit_flux_at_d0(self, be9):
        # alpha evaluated at d = d0 is exactly one by construction
        ch = characterize_ring(RingConfig(be9, 10, 20e-6, 1e-4))
        a = normalized_flux(RingConfig(be9, 10, ch.d0, 1e-4))
        assert rel(a, 1.0) < 1e-12

    def test_d0_anchor(self, small_ring):
        ch = characterize_ring(small_ring)
        assert rel(ch.d0, 7.2565113212943115e-06) < 1e-12

    def test_corotation_identity(self, be9):
        # omega*(d) * alpha(d, B0) = omega*0 for any diameter
        for d in (5e-6, 20e-6, 100e-6, 3e-4):
            ring = RingConfig(be9, 10, d, 1e-4)
            ch = characterize_ring(ring)
            assert rel(ch.omega_star * ch.alpha, ch.omega_star0) < 1e-12

    def test_omega_star0_formula(self, small_ring):
        ch = characterize_ring(small_ring)
        sp = small_ring.species
        assert rel(ch.omega_star0,
                   sp.charge * 1e-4 / (2.0 * sp.mass)) < 1e-12

    def test_zero_field_has_no_d0(self, be9):
        ch = characterize_ring(RingConfig(be9, 10, 1e-4, 0.0))
        assert ch.d0 is None
        assert ch.omega_star0 is None

    def test_tstar_mass_scaling(self, be9):
        # T* scales inversely with mass at fixed N, d
        el = species_lookup("electron")
        che = characterize_ring(RingConfig(el, 100, 100e-6))
        chb = characterize_ring(RingConfig(be9, 100, 100e-6))
        assert rel(che.t_star / chb.t_star, be9.mass / el.mass) < 1e-12

    def test_b0_uses_magnitude(self, be9):
        pos = characterize_ring(RingConfig(be9, 10, 1e-4, 1e-4))
        neg = characterize_ring(RingConfig(be9, 10, 1e-4, -1e-4))
        assert pos.d0 == neg.d0
        assert pos.omega_star0 == neg.omega_star0
        assert neg.alpha == -pos.alpha


class TestSpeciesFile:
    def _write(self, tmp_path, text):
        path = tmp_path / "species.ini"
        path.write_text(text)
        return str(path)

    def test_mass_u_subtracts_electrons(self, tmp_path):
        path = self._write(tmp_path, """
[Ca40+]
mass_u = 39.9625908
charge_e = 1
statistics = boson
""")
        sp = load_species_file(path)["Ca40+"]
        assert sp.mass == 39.9625908 * ATOMIC_MASS - ELECTRON_MASS
        assert sp.charge == E_CHARGE
        assert sp.statistics is Statistics.BOSON

    def test_doubly_charged(self, tmp_path):
        path = self._write(tmp_path, """
[X2+]
mass_u = 40.0
charge_e = 2
statistics = fermion
""")
        sp = load_species_file(path)["X2+"]
        assert sp.mass == 40.0 * ATOMIC_MASS - 2.0 * ELECTRON_MASS
        assert sp.charge == 2.0 * E_CHARGE

    def test_anion_gains_electron(self, tmp_path):
        path = self._write(tmp_path, """
[Y-]
mass_u = 10.0
charge_e = -1
statistics = boson
""")
        sp = load_species_file(path)["Y-"]
        assert sp.mass == 10.0 * ATOMIC_MASS + ELECTRON_MASS

    def test_mass_kg_verbatim(self, tmp_path):
        path = self._write(tmp_path, """
[Z]
mass_kg = 1.5e-26
charge_e = 1
statistics = distinguishable
""")
        sp = load_species_file(path)["Z"]
        assert sp.mass == 1.5e-26
        assert sp.statistics is Statistics.DISTINGUISHABLE

    def test_missing_mass(self, tmp_path):
        path = self._write(tmp_path, "[A]\ncharge_e = 1\nstatistics = boson\n")
        with pytest.raises(DomainError, match="mass"):
            load_species_file(path)

    def test_missing_charge(self, tmp_path):
        path = self._write(tmp_path, "[A]\nmass_u = 1\nstatistics = boson\n")
        with pytest.raises(DomainError, match="charge_e"):
            load_species_file(path)

    def test_bad_statistics(self, tmp_path):
        path = self._write(tmp_path,
                           "[A]\nmass_u = 1\ncharge_e = 1\nstatistics = anyon\n")
        with pytest.raises(DomainError, match="statistics"):
            load_species_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DomainError, match="not found"):
            load_species_file(str(tmp_path / "nope.ini"))
