"""Exact verification of Coxeter-twisted quantum Serre relations.

Everything is computed over Q(v) with ``q = v**2``; no floating point is
used anywhere.
"""

from .cartan import CartanDatum, all_finite, cartan_matrix, make_cartan, parse_datum, symmetrize, validate
from .coxeter import (
    CoxeterRealizationData,
    cayley_pairing,
    coxeter_matrix,
    epsilon_matrix,
    matrix_order,
    realization,
    reflection_matrix,
    solve_n,
)
from .laurent import LaurentPoly, RatFunc
from .mlpoly import MLPoly, MLRing
from .ncalg import (
    NCAlgebra,
    check_cross_relations,
    check_deformed_serre_images,
    check_theorem1,
    check_torus_relations,
    psi_images,
)
from .qnum import nogo_scalar, q_binomial, q_int, rational_solution_set, serre_character_scalar
from .qseries import (
    AffineTwistData,
    affine_series_pack,
    build_F,
    check_fg_constraints,
    check_Kq,
    generalized_character_check,
    jing_identity,
    serre_series_identity,
    solve_Kq,
    taylor_solve_F,
)
from .series import TruncSeries
from .verdict import Verdict

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "all_finite",
    "cartan_matrix",
    "make_cartan",
    "parse_datum",
    "symmetrize",
    "validate",
    "CoxeterRealizationData",
    "cayley_pairing",
    "coxeter_matrix",
    "epsilon_matrix",
    "matrix_order",
    "realization",
    "reflection_matrix",
    "solve_n",
    "LaurentPoly",
    "RatFunc",
    "MLPoly",
    "MLRing",
    "NCAlgebra",
    "check_cross_relations",
    "check_deformed_serre_images",
    "check_theorem1",
    "check_torus_relations",
    "psi_images",
    "nogo_scalar",
    "q_binomial",
    "q_int",
    "rational_solution_set",
    "serre_character_scalar",
    "AffineTwistData",
    "affine_series_pack",
    "build_F",
    "check_fg_constraints",
    "check_Kq",
    "generalized_character_check",
    "jing_identity",
    "serre_series_identity",
    "solve_Kq",
    "taylor_solve_F",
    "TruncSeries",
    "Verdict",
]
