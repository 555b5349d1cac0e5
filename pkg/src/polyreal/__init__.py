"""Polyhedral realizations of the crystal bases B(lambda) and B(infinity) for types A, B, C, D."""

from .cartan import RootSystem, build_root_system, weyl_dimension
from .closure import ClosureSet, check_positivity, check_strict_positivity, is_ample, xi_infty, xi_lambda
from .crystal import Crystal, CrystalPoint, epsilon_star, generate_b_lambda
from .linform import LinForm
from .sequence import IotaSequence, parse_word
from .tableaux import ColumnTableau, gen_tab_infty, gen_tab_lambda, gen_tab_lambda_k
from .verify import lattice_points

__all__ = [
    "ClosureSet",
    "ColumnTableau",
    "Crystal",
    "CrystalPoint",
    "IotaSequence",
    "LinForm",
    "RootSystem",
    "build_root_system",
    "check_positivity",
    "check_strict_positivity",
    "epsilon_star",
    "gen_tab_infty",
    "gen_tab_lambda",
    "gen_tab_lambda_k",
    "generate_b_lambda",
    "is_ample",
    "lattice_points",
    "parse_word",
    "weyl_dimension",
    "xi_infty",
    "xi_lambda",
]
