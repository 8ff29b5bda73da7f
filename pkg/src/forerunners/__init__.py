"""Transient quantum-tunneling wavefunctions and forerunner time scales.

Three exactly solvable time-dependent models (sharp-onset source, quantum
shutter on a square barrier, potential step), the special functions and
resonance machinery they need, a Crank-Nicolson cross-check integrator,
and analysis tools for forerunner peak times and local frequency content.
"""
from .params import (
    CONSTANTS,
    DerivedScales,
    MediumParams,
    PhysicalConstants,
    barrier_opacity,
    derive_scales,
)
from .special import backend_name, faddeeva_w, moshinsky_m

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "DerivedScales",
    "MediumParams",
    "PhysicalConstants",
    "barrier_opacity",
    "derive_scales",
    "backend_name",
    "faddeeva_w",
    "moshinsky_m",
    "__version__",
]
