import math
from fractions import Fraction

import pytest

import oracle
from vacpol import (
    CODATA_2018,
    Cutoff,
    DomainError,
    OffShellness,
    Particle,
    ParticleSet,
    alpha_inverse_running,
    alpha_inverse_zero,
    landau_pole,
    zeldovich_alpha_inverse,
    zeldovich_species_count,
)

PLANCK = Cutoff.planck()


def identical_set(nu: int, mass: float) -> ParticleSet:
    return ParticleSet(
        tuple(Particle(f"u{i}", 1, mass) for i in range(nu))
    )


class TestOffShellness:
    def test_requires_positive(self):
        with pytest.raises(DomainError):
            OffShellness(0.0)
        with pytest.raises(DomainError):
            OffShellness(-4.0)
        with pytest.raises(DomainError):
            OffShellness(float("inf"))

    def test_timelike_is_metadata_only(self, sm_set):
        spacelike = alpha_inverse_running(OffShellness(100.0, False), sm_set, 137.036)
        timelike = alpha_inverse_running(OffShellness(100.0, True), sm_set, 137.036)
        assert spacelike.alpha_inverse == timelike.alpha_inverse


class TestRunning:
    def test_log_vanishes_at_mass_squared(self):
        pset = identical_set(1, 0.75)
        k2 = 0.75 * 0.75
        for mode in ("decouple_below_threshold", "asymptotic_all"):
            point = alpha_inverse_running(OffShellness(k2), pset, 42.0, mode)
            assert point.alpha_inverse == 42.0

    def test_sm_at_z_scale_decouple_frozen(self, sm_set):
        point = alpha_inverse_running(
            OffShellness(91.19**2), sm_set, 137.036, "decouple_below_threshold"
        )
        assert point.alpha_inverse == pytest.approx(126.54629261546532, rel=1e-12)
        assert point.included_weight == Fraction(23, 3)  # everything but the top

    def test_sm_at_z_scale_asymptotic_frozen(self, sm_set):
        point = alpha_inverse_running(
            OffShellness(91.19**2), sm_set, 137.036, "asymptotic_all"
        )
        assert point.alpha_inverse == pytest.approx(126.72696610975423, rel=1e-12)
        assert point.included_weight == Fraction(9)

    def test_matches_oracle(self, sm_set):
        for k2 in (1e-3, 1.0, 91.19**2, 1e10, 1e30):
            for mode, oracle_mode in (
                ("decouple_below_threshold", "decouple"),
                ("asymptotic_all", "all"),
            ):
                point = alpha_inverse_running(OffShellness(k2), sm_set, 137.036, mode)
                expected, included = oracle.alpha_inverse_running(k2, 137.036, oracle_mode)
                assert point.alpha_inverse == pytest.approx(expected, rel=1e-10)
                assert point.included_weight == included

    def test_negative_beyond_pole_not_clamped(self, sm_set):
        pole = landau_pole(sm_set, 137.036)
        k2 = math.exp(2.0 * pole.log_cutoff_mass_gev + 2.0)
        point = alpha_inverse_running(OffShellness(k2), sm_set, 137.036, "asymptotic_all")
        assert point.alpha_inverse < 0

    def test_alpha_vanishes_at_pole(self, sm_set):
        pole = landau_pole(sm_set, 137.036)
        k2 = math.exp(2.0 * pole.log_cutoff_mass_gev)
        point = alpha_inverse_running(OffShellness(k2), sm_set, 137.036, "asymptotic_all")
        assert point.alpha_inverse == pytest.approx(0.0, abs=1e-9)

    def test_continuity_across_threshold(self, sm_set):
        # entering particles contribute a vanishing log exactly at threshold
        for p in sm_set:
            m2 = p.mass_gev * p.mass_gev
            below = alpha_inverse_running(
                OffShellness(m2 * (1 - 1e-12)), sm_set, 137.036
            )
            above = alpha_inverse_running(
                OffShellness(m2 * (1 + 1e-12)), sm_set, 137.036
            )
            assert above.alpha_inverse == pytest.approx(below.alpha_inverse, abs=1e-9)

    def test_rejects_empty_set_and_bad_alpha0(self, sm_set):
        with pytest.raises(DomainError):
            alpha_inverse_running(OffShellness(1.0), ParticleSet(), 137.0)
        with pytest.raises(DomainError):
            alpha_inverse_running(OffShellness(1.0), sm_set, 0.0)
        with pytest.raises(ValueError):
            alpha_inverse_running(OffShellness(1.0), sm_set, 137.0, "sometimes")


class TestAlphaInverseZero:
    def test_sm_planck_frozen(self, sm_set):
        value = alpha_inverse_zero(sm_set, PLANCK)
        assert value == pytest.approx(85.62577155996146, rel=1e-12)  # frozen
        assert 70 < value < 100  # vicinity of 85, far from 137

    def test_matches_oracle(self, sm_set):
        assert alpha_inverse_zero(sm_set, PLANCK) == pytest.approx(
            oracle.alpha_inverse_zero(), rel=1e-10
        )

    def test_single_particle_at_cutoff_is_zero(self):
        pset = identical_set(1, 5.0)
        assert alpha_inverse_zero(pset, Cutoff.explicit(5.0)) == 0.0

    def test_zeldovich_reduction_exact(self):
        for nu in (1, 2, 7):
            pset = identical_set(nu, 0.01)
            direct = alpha_inverse_zero(pset, PLANCK)
            closed = zeldovich_alpha_inverse(nu, 0.01)
            assert direct == closed  # bitwise: same terms, same operations

    def test_zeldovich_reduction_via_multiplicity(self):
        pset = ParticleSet((Particle("bundle", 1, 0.01, 5),))
        assert alpha_inverse_zero(pset, PLANCK) == zeldovich_alpha_inverse(5, 0.01)

    def test_empty_set_rejected(self):
        with pytest.raises(DomainError):
            alpha_inverse_zero(ParticleSet(), PLANCK)


class TestLandauPole:
    def test_single_electron_closed_form_frozen(self):
        pset = identical_set(1, 0.00051099895)
        pole = landau_pole(pset, 137.036)
        expected_log = 3.0 * math.pi * 137.036 / 2.0 + math.log(0.00051099895)
        assert pole.log_cutoff_mass_gev == pytest.approx(expected_log, rel=1e-14)
        assert pole.log_cutoff_mass_gev == pytest.approx(638.1877932934391, rel=1e-12)
        assert math.isfinite(pole.cutoff_mass_gev)  # ~3e277, representable

    def test_sm_frozen(self, sm_set):
        pole = landau_pole(sm_set, 137.036)
        assert pole.log_cutoff_mass_gev == pytest.approx(70.86702953230001, rel=1e-12)
        assert pole.cutoff_mass_gev == pytest.approx(5.986319260139597e30, rel=1e-12)
        # far above the Planck mass
        assert pole.cutoff_mass_gev > CODATA_2018.planck_mass_gev

    def test_matches_oracle(self, sm_set):
        pole = landau_pole(sm_set, 137.036)
        assert pole.log_cutoff_mass_gev == pytest.approx(
            oracle.landau_log_mass(137.036), rel=1e-12
        )

    def test_round_trip_explicit_cutoff(self, sm_set):
        pole = landau_pole(sm_set, 137.036)
        recovered = alpha_inverse_zero(sm_set, Cutoff.explicit(pole.cutoff_mass_gev))
        assert recovered == pytest.approx(137.036, rel=1e-9)

    def test_round_trip_log_cutoff(self, sm_set):
        pole = landau_pole(sm_set, 137.036)
        recovered = alpha_inverse_zero(sm_set, Cutoff.from_log(pole.log_cutoff_mass_gev))
        assert recovered == pytest.approx(137.036, rel=1e-12)

    def test_overflowing_pole_stays_usable(self):
        # W = 1/9: the pole mass overflows float64 but the log path works
        pset = ParticleSet((Particle("third", "1/3", 1.0),))
        pole = landau_pole(pset, 137.036)
        assert math.isinf(pole.cutoff_mass_gev)
        assert pole.log_cutoff_mass_gev == pytest.approx(
            3.0 * math.pi * 137.036 * 9.0 / 2.0, rel=1e-12
        )
        recovered = alpha_inverse_zero(pset, Cutoff.from_log(pole.log_cutoff_mass_gev))
        assert recovered == pytest.approx(137.036, rel=1e-12)

    def test_residual_and_iterations(self, sm_set):
        verified = landau_pole(sm_set, 137.036, verify=True)
        assert abs(verified.residual) <= 1e-9 * 137.036
        assert verified.iterations > 0
        closed = landau_pole(sm_set, 137.036, verify=False)
        assert closed.iterations == 0
        assert closed.log_cutoff_mass_gev == verified.log_cutoff_mass_gev

    def test_uncharged_set_rejected(self):
        pset = ParticleSet((Particle("neutral", 0, 1.0),))
        with pytest.raises(DomainError):
            landau_pole(pset, 137.036)
        with pytest.raises(DomainError):
            landau_pole(ParticleSet(), 137.036)

    def test_bad_alpha0_rejected(self, sm_set):
        with pytest.raises(DomainError):
            landau_pole(sm_set, -1.0)


class TestZeldovich:
    def test_planck_mass_gives_zero_with_warning(self):
        mp = CODATA_2018.planck_mass_gev
        with pytest.warns(RuntimeWarning):
            assert zeldovich_alpha_inverse(1, mp) == 0.0

    def test_heavier_than_planck_negative_with_warning(self):
        with pytest.warns(RuntimeWarning):
            value = zeldovich_alpha_inverse(1, 1e20)
        assert value < 0

    def test_electron_frozen(self):
        value = zeldovich_alpha_inverse(1, 0.00051099895)
        assert value == pytest.approx(10.934547233878343, rel=1e-12)  # frozen
        # consistent with the electron log over 3*pi
        assert value == pytest.approx(103.0557 / (3.0 * math.pi), rel=1e-4)

    def test_linearity_exact(self):
        base = zeldovich_alpha_inverse(3, 0.1)
        assert zeldovich_alpha_inverse(6, 0.1) == 2.0 * base

    def test_species_count_frozen(self):
        count = zeldovich_species_count(137.036, 0.00051099895)
        assert count == pytest.approx(12.532389048119288, rel=1e-12)  # frozen
        assert count == pytest.approx(3.0 * math.pi * 137.036 / 103.0557, rel=1e-4)

    def test_round_trip(self):
        for nu in (1, 4, 22):
            for mass in (1e-4, 0.00051099895, 3.14, 1e3):
                alpha_inv = zeldovich_alpha_inverse(nu, mass)
                assert zeldovich_species_count(alpha_inv, mass) == pytest.approx(
                    nu, rel=1e-12
                )

    def test_small_alpha_gives_small_count(self):
        assert zeldovich_species_count(1e-12, 0.00051099895) < 1e-12

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            zeldovich_alpha_inverse(0, 1.0)
        with pytest.raises(DomainError):
            zeldovich_alpha_inverse(1, -1.0)
        with pytest.raises(DomainError):
            zeldovich_species_count(0.0, 1.0)
        with pytest.raises(DomainError):
            zeldovich_species_count(137.0, 2e19)  # above the Planck mass


class TestMassScalingLaw:
    def test_shift_is_minus_two_w_over_3pi_log_lambda(self, sm_set):
        lam = 12.0
        scaled = ParticleSet(
            tuple(
                Particle(p.name, p.charge_over_e, lam * p.mass_gev, p.multiplicity, p.kind)
                for p in sm_set
            )
        )
        cutoff = Cutoff.explicit(1e12)
        base = alpha_inverse_zero(sm_set, cutoff)
        moved = alpha_inverse_zero(scaled, cutoff)
        shift = -2.0 * 9.0 / (3.0 * math.pi) * math.log(lam)
        assert moved - base == pytest.approx(shift, rel=1e-10)
