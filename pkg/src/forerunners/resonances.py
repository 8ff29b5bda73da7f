"""Square-barrier resonance poles and normalized Gamow eigenfunctions.

The outgoing-wave (Gamow) condition for a barrier of height V on [0, L]
is D(k) = (q+k)^2 e^{-iqL} - (q-k)^2 e^{iqL} = 0 with q^2 = k^2 - 2mV/hbar^2.
Newton iteration runs on the equivalent entire function

    Dt(k) = 2 k cos(qL) - i (2k^2 - beta) sin(qL)/q,

which depends on q only through q^2, so no branch tracking is needed; the
two forms share their zeros (D = 2q * Dt).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NormalizationError, PoleSearchError
from .params import MediumParams

_MAX_NEWTON = 80


def wavenumber_sq_gap(params: MediumParams) -> float:
    """beta = 2mV/hbar^2 in 1/nm^2."""
    return 2.0 * params.V / params.hbar_sq_over_m


def _require_length(params):
    if params.L is None:
        raise DomainError("barrier resonances need L")
    return params.L


@dataclass(frozen=True)
class ResonancePole:
    """Complex wavenumber k_n = a_n - i b_n of one fourth-quadrant pole."""

    n: int
    k: complex

    @property
    def a(self):
        return self.k.real

    @property
    def b(self):
        return -self.k.imag

    @property
    def partner(self):
        """The third-quadrant partner k_{-n} = -conj(k_n)."""
        return ResonancePole(n=-self.n, k=-self.k.conjugate())


def _g_entire(u, ell):
    """cos(ell sqrt(u)), sin(ell sqrt(u))/sqrt(u) and the derivative of the
    latter in u; all entire in u."""
    w = ell * ell * u
    if abs(w) < 1e-8:
        g0 = 1.0 - w / 2.0 + w * w / 24.0
        g1 = ell * (1.0 - w / 6.0 + w * w / 120.0)
        g1p = ell ** 3 * (-1.0 / 6.0 + w / 60.0)
        return g0, g1, g1p
    s = cmath.sqrt(u)
    g0 = cmath.cos(ell * s)
    g1 = cmath.sin(ell * s) / s
    return g0, g1, (ell * g0 - g1) / (2.0 * u)


def _entire_condition(k, beta, ell):
    """Dt(k) and its derivative."""
    u = k * k - beta
    g0, g1, g1p = _g_entire(u, ell)
    two_ksq = 2.0 * k * k - beta
    d = 2.0 * k * g0 - 1j * two_ksq * g1
    dp = 2.0 * g0 - 2.0 * ell * k * k * g1 \
        - 1j * (4.0 * k * g1 + 2.0 * k * two_ksq * g1p)
    return d, dp


def pole_condition(k, params: MediumParams):
    """Literal outgoing-wave condition D(k) (principal branch of q).

    Zeros of D are the resonance poles; the sign of D flips with the
    branch of q but |D| and the zero set do not.
    """
    ell = _require_length(params)
    beta = wavenumber_sq_gap(params)
    k = complex(k)
    q = cmath.sqrt(k * k - beta)
    return (q + k) ** 2 * cmath.exp(-1j * q * ell) \
        - (q - k) ** 2 * cmath.exp(1j * q * ell)


def _seed(n, beta, ell):
    """Asymptotic seed from q_n L ~ n pi with a log-refined imaginary part."""
    q = n * math.pi / ell + 0j
    for _ in range(3):
        k = cmath.sqrt(q * q + beta)
        if k.real < 0:
            k = -k
        q = n * math.pi / ell - 2j / ell * cmath.log((q + k) / math.sqrt(beta))
    k = cmath.sqrt(q * q + beta)
    return k if k.real >= 0 else -k


def _newton(k, beta, ell):
    # track the best iterate: at large |k| the condition is a difference of
    # ~exp(b_n L) terms, so Newton limit-cycles at the cancellation floor
    best, best_res = None, np.inf
    for _ in range(_MAX_NEWTON):
        d, dp = _entire_condition(k, beta, ell)
        if dp == 0.0:
            return None
        res = abs(d) / max(abs(dp * k), 1e-300)
        if res < best_res:
            best, best_res = k, res
        step = d / dp
        k = k - step
        if abs(step) < 1e-12 * (1.0 + abs(k)):
            return k
    if best_res <= 1e-10:
        return best
    return None


def find_poles(params: MediumParams, n_poles: int) -> list[ResonancePole]:
    """First n_poles fourth-quadrant poles, ordered by increasing Re k.

    Each pole is Newton-refined from its asymptotic seed and certified by
    the residual |Dt(k_n)| <= 1e-10 |Dt'(k_n) k_n|.

    Raises
    ------
    PoleSearchError
        On Newton failure, a pole escaping the fourth quadrant, ordering
        violation, or duplicate collapse (separation <= 1e-6 / nm).
    """
    if n_poles < 1:
        raise DomainError("n_poles must be >= 1")
    ell = _require_length(params)
    beta = wavenumber_sq_gap(params)
    poles = []
    for n in range(1, n_poles + 1):
        k0 = _seed(n, beta, ell)
        k = _newton(k0, beta, ell)
        if k is None:
            raise PoleSearchError(f"Newton did not converge from seed {k0} (n={n})")
        d, dp = _entire_condition(k, beta, ell)
        if abs(d) > 1e-10 * abs(dp * k):
            raise PoleSearchError(
                f"pole residual certificate failed at n={n}: |D|={abs(d):.3e}")
        if not (k.real > 0.0 and k.imag < 0.0):
            raise PoleSearchError(f"pole n={n} left the fourth quadrant: {k}")
        poles.append(ResonancePole(n=n, k=k))
    a = [p.a for p in poles]
    if any(a2 <= a1 for a1, a2 in zip(a, a[1:])):
        raise PoleSearchError("poles not ordered by increasing a_n")
    ks = np.array([p.k for p in poles])
    sep = np.abs(ks[:, None] - ks[None, :]) + np.eye(len(ks))
    if sep.min() <= 1e-6:
        raise PoleSearchError("duplicate pole collapse (separation <= 1e-6/nm)")
    return poles


@dataclass(frozen=True)
class ResonantState:
    """Normalized Gamow eigenfunction of one fourth-quadrant pole.

    The unnormalized interior solution is
    u~(x) = cos(qx) - i k sin(qx)/q  (u~(0) = 1, u~'(0) = -ik), and the
    normalization constant squared is

        N^2 = int_0^L u~^2 dx + i (u~(0)^2 + u~(L)^2) / (2k),

    the Gamow convention under which the pole residues of the outgoing
    Green function are u_n(x) u_n(x') / (2 k_n).
    """

    pole: ResonancePole
    q: complex
    norm_sq: complex
    u0: complex
    uL: complex
    L: float

    def u(self, x):
        """u_n(x) on [0, L] (vectorized)."""
        x = np.asarray(x, dtype=float)
        val = (np.cos(self.q * x)
               - 1j * self.pole.k * np.sin(self.q * x) / self.q) \
            / np.sqrt(self.norm_sq)
        return val if val.ndim else complex(val[()])

    def u_partner(self, x):
        """u_{-n}(x) = conj(u_n(x)) for the third-quadrant partner."""
        return np.conj(self.u(x))


def resonant_state(pole: ResonancePole, params: MediumParams) -> ResonantState:
    """Build the normalized Gamow state of `pole` in closed form."""
    ell = _require_length(params)
    beta = wavenumber_sq_gap(params)
    k = pole.k
    qsq = k * k - beta
    q = cmath.sqrt(qsq)
    sin_ql = cmath.sin(q * ell)
    cos_ql = cmath.cos(q * ell)
    # int_0^L u~^2 dx in closed form (branch-independent combinations)
    n2_int = -beta * ell / (2.0 * qsq) \
        + (2.0 * k * k - beta) * cmath.sin(2.0 * q * ell) / (4.0 * qsq * q) \
        - 1j * k * sin_ql ** 2 / qsq
    u_l = cos_ql - 1j * k * sin_ql / q
    norm_sq = n2_int + 1j * (1.0 + u_l * u_l) / (2.0 * k)
    if abs(norm_sq) < 1e-14:
        raise NormalizationError(
            f"degenerate Gamow normalization at pole n={pole.n}")
    root = cmath.sqrt(norm_sq)
    return ResonantState(pole=pole, q=q, norm_sq=norm_sq,
                         u0=1.0 / root, uL=u_l / root, L=ell)


def rho_factor(k, state: ResonantState, x):
    """Expansion factor rho_n(x) = 2ik u_n(0) u_n(x) / (k^2 - k_n^2)."""
    kn = state.pole.k
    return 2j * k * state.u0 * state.u(x) / (k * k - kn * kn)


def rho_factor_partner(k, state: ResonantState, x):
    """rho_{-n}(x) for the third-quadrant partner (equals -conj(rho_n) for
    real k)."""
    kn = -state.pole.k.conjugate()
    return 2j * k * np.conj(state.u0) * state.u_partner(x) / (k * k - kn * kn)
