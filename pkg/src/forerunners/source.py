"""Sharp-onset source model: exact and approximate transient wavefunctions.

The boundary condition psi(0,t) = exp(-i omega0 t) Theta(t) drives a
uniform potential region V occupying x >= 0.  The exact amplitude is a
two-term Faddeeva expression; in the opaque regime it splits into a pole
(monochromatic) term plus a saddle (forerunner) term.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, SingularPointError
from .params import MediumParams, derive_scales
from .special import faddeeva_w

_SQRT_PI = math.sqrt(math.pi)
_B_UNIT = (1.0 + 1.0j) / math.sqrt(2.0)
# 2*pi to 45 digits, for exact phase reduction of large exponents
_TWO_PI_FRAC = Fraction(
    "6.28318530717958647692528676655900576839433879875021")
_PHASE_REDUCE_ABOVE = 1e8


@dataclass(frozen=True)
class SourceArguments:
    """Faddeeva arguments and scales entering the exact source amplitude."""

    u0_prime: complex
    u0_doubleprime: complex
    tau: float       # x / v_sc, fs
    C: float         # sqrt(hbar/2m), nm / sqrt(fs)


def _source_scales(params: MediumParams):
    sc = derive_scales(params)
    c_const = math.sqrt(params.hbar_sq_over_m / (2.0 * params.hbar))
    return sc, c_const


def _reduce_phase(phi):
    """Reduce large phases modulo 2*pi in extended precision."""
    phi = np.asarray(phi, dtype=float)
    out = phi.copy()
    big = np.abs(phi) > _PHASE_REDUCE_ABOVE
    if np.any(big):
        flat = out.reshape(-1)
        idx = np.flatnonzero(np.abs(flat) > _PHASE_REDUCE_ABOVE)
        for i in idx:
            flat[i] = float(Fraction(float(flat[i])) % _TWO_PI_FRAC)
    return out


def _phase_factor(x, t, params, sc, c_const):
    """exp(-i t V / hbar + i x^2 / (4 C^2 t)) for t > 0."""
    with np.errstate(divide="ignore"):
        phi = -(params.V / params.hbar) * t + x * x / (4.0 * c_const ** 2 * t)
    return np.exp(1j * _reduce_phase(phi))


def _u_args(x, t, sc, c_const):
    """u0' and u0'' (vectorized, t > 0 assumed)."""
    b = _B_UNIT * c_const * sc.kappa0
    tau = x / sc.v_sc
    sqrt_t = np.sqrt(t)
    u0p = b * (-1j * sqrt_t - tau / sqrt_t)
    u0pp = b * (1j * sqrt_t - tau / sqrt_t)
    return u0p, u0pp, tau


def source_arguments(x, t, params: MediumParams) -> SourceArguments:
    """Arguments u0', u0'' and the scales (tau, C) at a single (x, t).

    Raises
    ------
    DomainError
        If t <= 0 (the Theta(t) regime boundary) or x < 0.
    """
    if not t > 0.0:
        raise DomainError(f"source arguments need t > 0, got t={t}")
    if x < 0.0:
        raise DomainError(f"source model lives on x >= 0, got x={x}")
    sc, c_const = _source_scales(params)
    u0p, u0pp, tau = _u_args(float(x), float(t), sc, c_const)
    return SourceArguments(u0_prime=complex(u0p),
                           u0_doubleprime=complex(u0pp),
                           tau=float(tau), C=c_const)


def _validate_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise DomainError("source model lives on x >= 0")
    return x


def _psi_on(x, t, params, sc, c_const):
    u0p, u0pp, _ = _u_args(x, t, sc, c_const)
    val = 0.5 * _phase_factor(x, t, params, sc, c_const) * (
        faddeeva_w(-u0p) + faddeeva_w(-u0pp))
    return complex(val) if np.ndim(val) == 0 else val


def psi_source(x, t, params: MediumParams):
    """Exact amplitude of the sharp-onset source (zero for t <= 0).

    Vectorized over x and t through numpy broadcasting.
    """
    x = _validate_x(x)
    t = np.asarray(t, dtype=float)
    sc, c_const = _source_scales(params)
    x_b, t_b = np.broadcast_arrays(x, t)
    out = np.zeros(x_b.shape, dtype=np.complex128)
    on = t_b > 0.0
    if out.ndim == 0:
        if on:
            return _psi_on(x_b[()], t_b[()], params, sc, c_const)
        return 0.0 + 0.0j
    if np.any(on):
        out[on] = _psi_on(x_b[on], t_b[on], params, sc, c_const)
    return out


def psi_pole(x, t, params: MediumParams):
    """Pole (monochromatic front) term: exp(-i omega0 t - kappa0 x) Theta(t - tau)."""
    x = _validate_x(x)
    t = np.asarray(t, dtype=float)
    sc, _ = _source_scales(params)
    tau = x / sc.v_sc
    val = np.exp(-1j * sc.omega0 * t - sc.kappa0 * x)
    out = np.where(t >= tau, val, 0.0 + 0.0j)
    return out if out.ndim else complex(out[()])


def psi_saddle(x, t, params: MediumParams):
    """Saddle (forerunner) term of the opaque-limit decomposition.

    Raises
    ------
    DomainError
        If any t <= 0.
    SingularPointError
        If an argument u0' or u0'' vanishes (t = 0 boundary only).
    """
    x = _validate_x(x)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError("saddle term defined for t > 0 only")
    sc, c_const = _source_scales(params)
    u0p, u0pp, _ = _u_args(x, t, sc, c_const)
    if np.any(u0p == 0.0) or np.any(u0pp == 0.0):
        raise SingularPointError("saddle term singular: u0' or u0'' vanished")
    out = (1.0 / (2j * _SQRT_PI)) * _phase_factor(x, t, params, sc, c_const) \
        * (1.0 / u0p + 1.0 / u0pp)
    return out if out.ndim else complex(out[()])


def omega_saddle(x, t, params: MediumParams):
    """Saddle frequency (V + x^2 m / 2 t^2) / hbar.

    Monotonically decreasing in t toward omegaV at fixed x.
    """
    x = _validate_x(x)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError("saddle frequency defined for t > 0 only")
    mass = params.mass
    e_s = params.V + 0.5 * mass * (x / t) ** 2
    out = e_s / params.hbar
    return out if out.ndim else float(out[()])


def dpsi_dt_source(x, t, params: MediumParams):
    """Analytic time derivative of the exact source amplitude.

    Uses dw/dz = -2 z w(z) + 2i/sqrt(pi) termwise; matches central finite
    differences of `psi_source` wherever the amplitude is non-negligible.
    """
    x = _validate_x(x)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise DomainError("time derivative defined for t > 0 only")
    sc, c_const = _source_scales(params)
    b = _B_UNIT * c_const * sc.kappa0
    tau = x / sc.v_sc
    sqrt_t = np.sqrt(t)
    u0p = b * (-1j * sqrt_t - tau / sqrt_t)
    u0pp = b * (1j * sqrt_t - tau / sqrt_t)
    du0p = b / (2.0 * sqrt_t) * (-1j + tau / t)
    du0pp = b / (2.0 * sqrt_t) * (1j + tau / t)
    wp = faddeeva_w(-u0p)
    wpp = faddeeva_w(-u0pp)
    phase = _phase_factor(x, t, params, sc, c_const)
    g_prime = -1j * params.V / params.hbar \
        - 1j * x * x / (4.0 * c_const ** 2 * t * t)
    # d/dt w(-u) = w'(-u) * (-du/dt), w'(z) = -2 z w + 2i/sqrt(pi)
    dwp = (-2.0 * (-u0p) * wp + 2j / _SQRT_PI) * (-du0p)
    dwpp = (-2.0 * (-u0pp) * wpp + 2j / _SQRT_PI) * (-du0pp)
    out = g_prime * (0.5 * phase * (wp + wpp)) + 0.5 * phase * (dwp + dwpp)
    return out if out.ndim else complex(out[()])


class SourceEvaluator:
    """Adapter exposing the source model to the transient-analysis tools."""

    name = "source"

    def __init__(self, params: MediumParams):
        self.params = params
        self.scales = derive_scales(params)

    def psi(self, x, t):
        return psi_source(x, t, self.params)

    def dpsi_dt(self, x, t):
        return dpsi_dt_source(x, t, self.params)

    def density(self, x, t):
        return np.abs(self.psi(x, t)) ** 2
