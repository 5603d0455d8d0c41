"""Finite-dimensional oscillator operators, their su(s+1) closure, the
Jaynes-Cummings supercharge algebra and the lepton mass series."""

from .lie import LieBasis, StructureConstants, closure, structure_constants, verify_su_n
from .gellmann import GellMannBasis, basis_match, paper_lambda_su3, standard_gellmann
from .masses import SpectrumInputs, full_spectrum, lepton_mass
from .operators import OperatorSet, annihilation, creation, derived_generators, number_deficit
from .susy import SusyAlgebra, SusyConfig, build_jc_realization

__all__ = [
    "GellMannBasis",
    "LieBasis",
    "OperatorSet",
    "SpectrumInputs",
    "StructureConstants",
    "SusyAlgebra",
    "SusyConfig",
    "annihilation",
    "basis_match",
    "build_jc_realization",
    "closure",
    "creation",
    "derived_generators",
    "full_spectrum",
    "lepton_mass",
    "number_deficit",
    "paper_lambda_su3",
    "standard_gellmann",
    "structure_constants",
    "verify_su_n",
]
