"""Physical constants, medium parameters, and derived kinematic scales.

Unit system: energies in eV, lengths in nm, times in fs.  Every module
reads the same frozen constants record so derived quantities agree
bit-for-bit across the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, TunnelingRegimeError

#: hbar in eV fs
HBAR = 0.6582119569
#: hbar^2 / m_e in eV nm^2
HBAR_SQ_OVER_ME = 0.0761996


@dataclass(frozen=True)
class PhysicalConstants:
    """Fixed constants of the unit system (eV, nm, fs)."""

    hbar: float = HBAR
    hbar_sq_over_me: float = HBAR_SQ_OVER_ME

    def __post_init__(self):
        if not (self.hbar > 0.0 and self.hbar_sq_over_me > 0.0):
            raise DomainError("physical constants must be strictly positive")


#: Shared constants instance; other modules read, never write.
CONSTANTS = PhysicalConstants()


@dataclass(frozen=True)
class MediumParams:
    """Physical configuration of one model run.

    Parameters
    ----------
    V : float
        Barrier (or potential level) height in eV.
    E0 : float
        Incidence energy in eV.  Tunneling regime (E0 < V) is required by
        every kappa0-dependent quantity; `derive_scales` enforces it.
    mass_ratio : float
        Effective mass over the electron mass, default 0.067 (GaAs).
    L : float, optional
        Barrier length in nm; absent for the source and step models.
    """

    V: float
    E0: float
    mass_ratio: float = 0.067
    L: float | None = None
    constants: PhysicalConstants = CONSTANTS

    def __post_init__(self):
        if not (self.V > 0.0):
            raise DomainError(f"V must be positive, got {self.V}")
        if not (self.E0 > 0.0):
            raise DomainError(f"E0 must be positive, got {self.E0}")
        if not (self.mass_ratio > 0.0):
            raise DomainError(f"mass_ratio must be positive, got {self.mass_ratio}")
        if self.L is not None and not (self.L > 0.0):
            raise DomainError(f"L must be positive when present, got {self.L}")

    @classmethod
    def from_fraction(cls, V, e0_frac, mass_ratio=0.067, L=None,
                      constants=CONSTANTS):
        """Build with E0 given as a fraction of V (the `E0 = 0.907 V` style)."""
        if not (e0_frac > 0.0):
            raise DomainError(f"E0 fraction must be positive, got {e0_frac}")
        return cls(V=V, E0=e0_frac * V, mass_ratio=mass_ratio, L=L,
                   constants=constants)

    @property
    def hbar(self):
        return self.constants.hbar

    @property
    def hbar_sq_over_m(self):
        """hbar^2 / m in eV nm^2."""
        return self.constants.hbar_sq_over_me / self.mass_ratio

    @property
    def mass(self):
        """Effective mass in eV fs^2 / nm^2."""
        return self.hbar ** 2 / self.hbar_sq_over_m


@dataclass(frozen=True)
class DerivedScales:
    """Kinematic scales derived from a MediumParams in the tunneling regime."""

    k: float                  # incidence wavenumber, 1/nm
    kappa0: float             # evanescent wavenumber, 1/nm
    v_sc: float               # semiclassical velocity, nm/fs
    omega0: float             # incidence frequency E0/hbar, 1/fs
    omegaV: float             # threshold frequency V/hbar, 1/fs
    penetration_length: float  # 1/kappa0, nm


def derive_scales(params: MediumParams) -> DerivedScales:
    """Derive (k, kappa0, v_sc, omega0, omegaV, 1/kappa0) from the medium.

    Raises
    ------
    TunnelingRegimeError
        If E0 >= V (kappa0 would not be real).
    """
    if params.E0 >= params.V:
        raise TunnelingRegimeError(
            f"tunneling regime requires E0 < V, got E0={params.E0} eV, "
            f"V={params.V} eV")
    half_hb2m = 0.5 * params.hbar_sq_over_m  # hbar^2 / 2m
    k = math.sqrt(params.E0 / half_hb2m)
    kappa0 = math.sqrt((params.V - params.E0) / half_hb2m)
    v_sc = params.hbar_sq_over_m / params.hbar * kappa0  # hbar kappa0 / m
    return DerivedScales(
        k=k,
        kappa0=kappa0,
        v_sc=v_sc,
        omega0=params.E0 / params.hbar,
        omegaV=params.V / params.hbar,
        penetration_length=1.0 / kappa0,
    )


def barrier_opacity(params: MediumParams) -> float:
    """Opacity alpha = L sqrt(2 m V) / hbar (dimensionless)."""
    if params.L is None:
        raise DomainError("barrier opacity needs L")
    return params.L * math.sqrt(2.0 * params.V / params.hbar_sq_over_m)
