"""Generalized Jacobi elliptic functions and double sine-Gordon kink chains.

``genjac.elliptic``     classical integrals and sn, cn, dn, am
``genjac.generalized``  s, c, d1, d2, their identities and integrals
``genjac.dsg``          static kink chains of the double sine-Gordon model
``genjac.cli``          the ``genjac`` command
"""

__version__ = "0.1.0"

from genjac._backend import BACKEND
from genjac.errors import BranchError, DomainError, NoSolutionError, NumericError, PoleError
from genjac.generalized import (
    Fn,
    GenJacobiValues,
    Integrand,
    Moduli,
    SpecialPoint,
    add,
    amplitude,
    antiderivative,
    defining_integral,
    evaluate,
    half,
    integrand,
    moduli_new,
    ratio,
    shift_K,
    special_value,
)
from genjac.dsg import (
    CaseTag,
    DSGParams,
    KinkSolution,
    Periodicity,
    chain_energy,
    classify,
    mirror_solution,
    ode_residual,
    potential,
    radius,
    solve,
    topological_charge,
)

__all__ = [
    "__version__", "BACKEND",
    "DomainError", "BranchError", "NoSolutionError", "PoleError", "NumericError",
    "Moduli", "GenJacobiValues", "SpecialPoint", "Fn", "Integrand",
    "moduli_new", "evaluate", "amplitude", "add", "half", "shift_K",
    "special_value", "ratio", "integrand", "antiderivative", "defining_integral",
    "DSGParams", "CaseTag", "Periodicity", "KinkSolution", "potential", "classify",
    "solve", "radius", "chain_energy", "topological_charge", "mirror_solution",
    "ode_residual",
]
