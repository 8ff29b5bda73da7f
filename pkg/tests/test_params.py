import math

import pytest
from hypothesis import given, strategies as st

from forerunners import (
    CONSTANTS,
    MediumParams,
    barrier_opacity,
    derive_scales,
)
from forerunners.errors import DomainError, TunnelingRegimeError


def test_constants_frozen_values():
    assert CONSTANTS.hbar == 0.6582119569
    assert CONSTANTS.hbar_sq_over_me == 0.0761996


def test_derive_scales_reference_case():
    # V=1 eV, E0=0.1 eV, m=0.067 m_e; frozen from arbitrary-precision
    # evaluation of kappa0 = sqrt((V-E0)/(hbar^2/2m))
    s = derive_scales(MediumParams(V=1.0, E0=0.1))
    assert s.kappa0 == pytest.approx(1.2580482794450134, rel=1e-14)
    assert s.penetration_length == pytest.approx(0.7948820536848942, rel=1e-14)
    assert s.k == pytest.approx(0.4193494264816711, rel=1e-14)


def test_opacity_paper_parameters():
    alpha = barrier_opacity(MediumParams(V=1.0, E0=0.1, L=40.0))
    assert alpha == pytest.approx(53.0, abs=0.1)
    # 3 significant figures
    assert round(alpha, 1) == pytest.approx(53.0, abs=0.11)


def test_opacity_requires_length():
    with pytest.raises(DomainError):
        barrier_opacity(MediumParams(V=1.0, E0=0.1))


def test_scale_invariants():
    p = MediumParams(V=0.3, E0=0.272)
    s = derive_scales(p)
    half_hb2m = 0.5 * p.hbar_sq_over_m
    assert s.kappa0 ** 2 * half_hb2m == pytest.approx(p.V - p.E0, rel=1e-14)
    assert s.v_sc == pytest.approx(p.hbar * s.kappa0 / p.mass, rel=1e-14)
    assert s.omega0 < s.omegaV


@given(st.floats(min_value=1e-6, max_value=0.999))
def test_round_trip_energy_from_k(frac):
    p = MediumParams.from_fraction(V=0.3, e0_frac=frac)
    s = derive_scales(p)
    e0_back = 0.5 * p.hbar_sq_over_m * s.k ** 2
    assert abs(e0_back - p.E0) <= 1e-12 * p.E0


def test_kappa0_monotone_in_e0():
    kappas = [derive_scales(MediumParams(V=1.0, E0=e0)).kappa0
              for e0 in [0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.99999]]
    assert all(a > b for a, b in zip(kappas, kappas[1:]))
    # E0 -> V limit: kappa0 -> 0, penetration length diverges
    s = derive_scales(MediumParams(V=1.0, E0=1.0 - 1e-12))
    assert s.kappa0 < 2e-6
    assert s.penetration_length > 5e5


def test_tunneling_regime_enforced():
    with pytest.raises(TunnelingRegimeError):
        derive_scales(MediumParams(V=1.0, E0=1.0))
    with pytest.raises(TunnelingRegimeError):
        derive_scales(MediumParams(V=1.0, E0=1.5))


@pytest.mark.parametrize("kwargs", [
    dict(V=-1.0, E0=0.1),
    dict(V=1.0, E0=0.0),
    dict(V=1.0, E0=0.1, mass_ratio=0.0),
    dict(V=1.0, E0=0.1, L=-4.0),
])
def test_invalid_params_rejected(kwargs):
    with pytest.raises(DomainError):
        MediumParams(**kwargs)


def test_from_fraction():
    p = MediumParams.from_fraction(V=0.3, e0_frac=0.907)
    assert p.E0 == pytest.approx(0.2721, rel=1e-14)
    with pytest.raises(DomainError):
        MediumParams.from_fraction(V=0.3, e0_frac=-0.1)
