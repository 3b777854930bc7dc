"""Finite groups as multiplication tables, and deciders for sigma-quasinormality,
sigma-subnormality and the PsigmaT transitivity property."""

from .catalog import CATALOG, SIGMA_SPECS, ParseError, build, parse_group_file, parse_sigma_spec
from .group import (FiniteGroup, GroupError, OrderCapExceeded, Subgroup, direct_product,
                    group_from_generators, quotient, semidirect_product)
from .lattice import all_subgroups, chief_series, frattini, minimal_normal_subgroups, normal_subgroups
from .perm import Perm
from .psigmat import (PsigmaTVerdict, is_psigmat_bruteforce, is_psigmat_subnormal_criterion,
                      is_sigma_quasinormal, is_sigma_subnormal, is_special_psigmat,
                      theoremA_premises, theoremB_premises, theoremC_criterion)
from .residuals import O_lower, O_upper, nilpotent_residual, sigma_nilpotent_residual
from .sigma import (SigmaPartition, complete_hall_sigma_sets, find_generalized_wielandt_set,
                    hall_Pi_subgroups, is_sigma_full_sylow_type, is_sigma_nilpotent,
                    is_sigma_primary, is_sigma_soluble, sigma_of)

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "SIGMA_SPECS", "ParseError", "build", "parse_group_file", "parse_sigma_spec",
    "FiniteGroup", "GroupError", "OrderCapExceeded", "Subgroup", "direct_product",
    "group_from_generators", "quotient", "semidirect_product",
    "all_subgroups", "chief_series", "frattini", "minimal_normal_subgroups", "normal_subgroups",
    "Perm",
    "PsigmaTVerdict", "is_psigmat_bruteforce", "is_psigmat_subnormal_criterion",
    "is_sigma_quasinormal", "is_sigma_subnormal", "is_special_psigmat",
    "theoremA_premises", "theoremB_premises", "theoremC_criterion",
    "O_lower", "O_upper", "nilpotent_residual", "sigma_nilpotent_residual",
    "SigmaPartition", "complete_hall_sigma_sets", "find_generalized_wielandt_set",
    "hall_Pi_subgroups", "is_sigma_full_sylow_type", "is_sigma_nilpotent",
    "is_sigma_primary", "is_sigma_soluble", "sigma_of",
]
