"""Exact construction and verification of the 120-state configuration in C^4 over
Q(sqrt(-7)), and its Witting-configuration counterpart over Q(sqrt(-3))."""

from .cliques import BACKEND
from .exactnum import CMat4, CVec4, QImag, inner_product
from .matgroup import Group, close, sigma_tilde, two_a4, two_a5, two_s5
from .pipeline import VerificationReport, Workspace, run_checks
from .rayconfig import Configuration, Ray, sv_configuration, witting_configuration

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CMat4", "CVec4", "Configuration", "Group", "QImag", "Ray",
    "VerificationReport", "Workspace", "close", "inner_product", "run_checks",
    "sigma_tilde", "sv_configuration", "two_a4", "two_a5", "two_s5",
    "witting_configuration",
]
