"""Shared verification helpers for the test suite."""
import numpy as np

from forerunners import derive_scales


def schrodinger_residual_uniform_v(psi_fn, params, x_grid, t_grid):
    """Max relative residual |i hbar dpsi/dt + (hbar^2/2m) dpsi/dxx - V psi|
    / (|V| |psi|) using central differences with locally scaled steps.

    Valid for models with a uniform potential V over the probed region.
    """
    sc = derive_scales(params)
    half_hb2m = 0.5 * params.hbar_sq_over_m
    xx, tt = np.meshgrid(np.asarray(x_grid, float),
                         np.asarray(t_grid, float), indexing="ij")
    x = xx.ravel()
    t = tt.ravel()
    # local wavenumber/frequency set the FD steps so truncation error stays
    # below the target even where the saddle energy dwarfs V
    k_loc = np.maximum(sc.kappa0, params.mass * x / (params.hbar * t))
    k_loc = np.maximum(k_loc, sc.k)
    e_loc = params.V + half_hb2m * k_loc ** 2
    hx = 1e-3 / k_loc
    ht = 1e-3 * params.hbar / e_loc
    ht = np.minimum(ht, 0.45 * t)

    psi = psi_fn(x, t)
    d_t = (psi_fn(x, t + ht) - psi_fn(x, t - ht)) / (2.0 * ht)
    d_xx = (psi_fn(x + hx, t) - 2.0 * psi + psi_fn(np.maximum(x - hx, 0.0), t)) \
        / hx ** 2
    res = 1j * params.hbar * d_t + half_hb2m * d_xx - params.V * psi
    rel = np.abs(res) / (abs(params.V) * np.abs(psi))
    mask = np.abs(psi) > 1e-9 * np.abs(psi).max()
    return float(rel[mask].max())
