"""Quantum-shutter transient inside a square barrier.

At t = 0 a perfectly reflecting shutter at x = 0 opens and the standing
wave exp(ikx) - exp(-ikx) (x <= 0) starts leaking into the barrier on
[0, L].  The internal amplitude is the resonance expansion

    Psi_i(x,t) = phi_k(x) M(y_k) - phi_{-k}(x) M(y_{-k})
                 - sum_n rho_n(x) M(y_{k_n}),

with M(y) = w(iy)/2, y_q = -exp(-i pi/4) sqrt(hbar t / 2m) q, the sum
running over the fourth-quadrant poles and their third-quadrant partners,
accumulated pairwise in increasing n.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError
from .params import DerivedScales, MediumParams, derive_scales
from .resonances import (
    ResonancePole,
    ResonantState,
    find_poles,
    resonant_state,
    wavenumber_sq_gap,
)
from .special import faddeeva_w_outer

_SQRT_PI = math.sqrt(math.pi)
# i y_q = exp(-3 i pi/4) sqrt(hbar t/2m) q enters w(i y_q)
_IY_PHASE = cmath.exp(-3j * math.pi / 4.0)


def stationary_coefficients(k, params: MediumParams):
    """Internal coefficients (a, b), transmission T and reflection R for
    unit-amplitude incidence exp(ikx) on the square barrier (signed real k).
    """
    ell = params.L
    if ell is None:
        raise DomainError("stationary solution needs L")
    if k == 0.0:
        raise DomainError("k = 0 splits the phi_k / phi_{-k} branches")
    beta = wavenumber_sq_gap(params)
    q = cmath.sqrt(complex(k * k - beta))
    d = (q + k) ** 2 * cmath.exp(-1j * q * ell) \
        - (q - k) ** 2 * cmath.exp(1j * q * ell)
    t_amp = 4.0 * k * q * cmath.exp(-1j * k * ell) / d
    a = (q + k) / (2.0 * q) * t_amp * cmath.exp(1j * (k - q) * ell)
    b = (q - k) / (2.0 * q) * t_amp * cmath.exp(1j * (k + q) * ell)
    return a, b, q, t_amp, a + b - 1.0


def phi_stationary(k, x, params: MediumParams):
    """Stationary internal solution phi_k(x) on [0, L] (vectorized in x)."""
    ell = params.L
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0) or np.any(x > ell):
        raise DomainError("phi_stationary lives on 0 <= x <= L")
    a, b, q, _, _ = stationary_coefficients(k, params)
    val = a * np.exp(1j * q * x) + b * np.exp(-1j * q * x)
    return val if val.ndim else complex(val[()])


@dataclass
class ShutterSolution:
    """Pole table, Gamow states and stationary data for one barrier."""

    params: MediumParams
    scales: DerivedScales
    states: list[ResonantState]
    n_pairs: int
    _channel_k: np.ndarray = field(repr=False, default=None)

    name = "shutter"

    def __post_init__(self):
        if self._channel_k is None:
            k = self.scales.k
            ks = [k, -k]
            for st in self.states:
                ks.append(st.pole.k)
                ks.append(-st.pole.k.conjugate())
            self._channel_k = np.asarray(ks, dtype=complex)

    @property
    def poles(self) -> list[ResonancePole]:
        return [st.pole for st in self.states]

    def _coefficients(self, x):
        """Channel coefficients c_j(x): [phi_k, -phi_{-k}, -rho_1, -rho_{-1}, ...]."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        k = self.scales.k
        cols = [phi_stationary(k, x, self.params),
                -np.asarray(phi_stationary(-k, x, self.params))]
        for st in self.states:
            u = st.u(x)
            kn = st.pole.k
            cols.append(-2j * k * st.u0 * u / (k * k - kn * kn))
            knm = -kn.conjugate()
            cols.append(-2j * k * np.conj(st.u0) * np.conj(u)
                        / (k * k - knm * knm))
        return np.stack([np.atleast_1d(c) for c in cols], axis=1)

    def _m_matrix(self, t):
        """M(y_{kappa_j}(t_l)) as a (channels, nt) matrix."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(t < 0.0):
            raise DomainError("shutter solution defined for t >= 0")
        half_hb2m = 0.5 * self.params.hbar_sq_over_m
        s = _IY_PHASE * np.sqrt(half_hb2m / self.params.hbar * t)
        return 0.5 * faddeeva_w_outer(self._channel_k, s)

    def psi(self, x, t):
        """Internal amplitude on the (x, t) grid.

        Scalars in, scalar out; otherwise returns an (nx, nt) array (1-d
        if one of the two inputs is scalar).
        """
        scalar = np.ndim(x) == 0 and np.ndim(t) == 0
        coeff = self._coefficients(x)
        mmat = self._m_matrix(t)
        out = coeff[:, 0:1] * mmat[0:1, :] + coeff[:, 1:2] * mmat[1:2, :]
        for n in range(self.n_pairs):
            j = 2 + 2 * n
            out = out + (coeff[:, j:j + 1] * mmat[j:j + 1, :]
                         + coeff[:, j + 1:j + 2] * mmat[j + 1:j + 2, :])
        if scalar:
            return complex(out[0, 0])
        if np.ndim(x) == 0:
            return out[0, :]
        if np.ndim(t) == 0:
            return out[:, 0]
        return out

    def dpsi_dt(self, x, t):
        """Analytic time derivative via dM/dy = 2yM - 1/sqrt(pi).

        With y_q = c sqrt(t) q one has dM/dt = -i D q^2 M - y_q/(2 t sqrt(pi)),
        D = hbar/2m.
        """
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(t_arr <= 0.0):
            raise DomainError("dpsi_dt defined for t > 0")
        scalar = np.ndim(x) == 0 and np.ndim(t) == 0
        coeff = self._coefficients(x)
        mmat = self._m_matrix(t_arr)
        dcoef = self.params.hbar_sq_over_m / (2.0 * self.params.hbar)
        ksq = self._channel_k ** 2
        term1 = (coeff * (-1j * dcoef * ksq)[None, :]) @ mmat
        y = -cmath.exp(-1j * math.pi / 4.0) \
            * np.sqrt(dcoef * t_arr)[None, :] * self._channel_k[:, None]
        term2 = -(coeff @ y) / (2.0 * t_arr[None, :] * _SQRT_PI)
        out = term1 + term2
        if scalar:
            return complex(out[0, 0])
        if np.ndim(x) == 0:
            return out[0, :]
        if np.ndim(t) == 0:
            return out[:, 0]
        return out

    def density(self, x, t):
        return np.abs(self.psi(x, t)) ** 2

    def stationary(self, x):
        """phi_k(x) the solution relaxes to."""
        return phi_stationary(self.scales.k, x, self.params)


def psi_internal(x, t, sol: ShutterSolution):
    """Eq-style functional form of `ShutterSolution.psi`."""
    return sol.psi(x, t)


def solve_shutter(params: MediumParams, n_pairs: int | None = None,
                  rtol: float = 1e-8, probes=None,
                  max_pairs: int = 3200) -> ShutterSolution:
    """Build a ShutterSolution, choosing the truncation by doubling.

    With explicit `n_pairs` the table is built directly.  Otherwise N is
    doubled from 50 until the amplitude at the probe points changes by
    less than `rtol` relative, which certifies truncation convergence for
    the probed window.

    Raises
    ------
    ConvergenceError
        If doubling up to `max_pairs` never stabilizes (carries both
        estimates).
    """
    sc = derive_scales(params)
    if n_pairs is not None:
        states = [resonant_state(p, params) for p in find_poles(params, n_pairs)]
        return ShutterSolution(params=params, scales=sc, states=states,
                               n_pairs=n_pairs)
    if probes is None:
        t_hi = 20.0 * params.hbar / (params.V - params.E0)
        probe_x = np.array([0.02, 0.1, 0.3, 0.6, 1.0]) * params.L
        probe_t = np.geomspace(0.25, max(t_hi, 1.0), 9)
    else:
        probe_x, probe_t = probes
    n = 50
    prev_sol = solve_shutter(params, n_pairs=n)
    prev = prev_sol.psi(probe_x, probe_t)
    while n <= max_pairs // 2:
        n *= 2
        sol = solve_shutter(params, n_pairs=n)
        cur = sol.psi(probe_x, probe_t)
        scale = np.abs(cur).max()
        if np.abs(cur - prev).max() <= rtol * scale:
            return sol
        prev, prev_sol = cur, sol
    raise ConvergenceError(
        f"shutter truncation not converged at N={n} pairs",
        previous=prev, current=cur)


def density_snapshots(times, x_grid, sol: ShutterSolution):
    """|Psi_i|^2 sampled on x_grid at each time (rows) plus the stationary
    density for comparison."""
    x_grid = np.asarray(x_grid, dtype=float)
    dens = np.abs(sol.psi(x_grid, np.asarray(times, dtype=float))) ** 2
    return {
        "x": x_grid,
        "t": np.asarray(times, dtype=float),
        "density": dens.T,
        "stationary": np.abs(sol.stationary(x_grid)) ** 2,
    }
