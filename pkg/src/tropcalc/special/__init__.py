from .profiles import PeriodicProfile, AntiPeriodicProfile
from .generators import (
    LatticeGenerator,
    Sawtooth,
    TropExp,
    Psi,
    Upsilon,
    Periodic,
    AntiPeriodic,
    Phi,
    Theta,
    Omega,
    Bracket,
    sawtooth,
    trop_exp,
    exp_combination,
    psi,
    psi_period,
    upsilon,
    phi,
    theta,
    omega_special,
    bracket,
    periodic_from_profile,
    antiperiodic_from_profile,
    xi_triangle,
    pi_a,
)

__all__ = [
    "PeriodicProfile",
    "AntiPeriodicProfile",
    "LatticeGenerator",
    "Sawtooth",
    "TropExp",
    "Psi",
    "Upsilon",
    "Periodic",
    "AntiPeriodic",
    "Phi",
    "Theta",
    "Omega",
    "Bracket",
    "sawtooth",
    "trop_exp",
    "exp_combination",
    "psi",
    "psi_period",
    "upsilon",
    "phi",
    "theta",
    "omega_special",
    "bracket",
    "periodic_from_profile",
    "antiperiodic_from_profile",
    "xi_triangle",
    "pi_a",
]
