"""Exact harmonic functions on multiplicative graded graphs.

Public surface: partitions and the four graphs, closed-form harmonic
families with exact harmonicity/normalization checks, the interpolation
polynomial evaluators behind them, and the finite-face boundary
machinery (densities, exact Selberg-type integrals, extreme kernels,
convergence experiments).
"""

from .exact import (
    RationalMatrix,
    ShapeError,
    SingularMatrixError,
    as_rational,
    det,
    falling_factorial,
    format_rational,
    parse_rational,
    pfaffian,
    pochhammer,
    solve_linear,
)
from .partitions import FrobeniusCoords, Partition, partitions_of, reverse_tableaux
from .graphs import (
    GraphKind,
    KINGMAN,
    SCHUR,
    YOUNG,
    covers_down,
    covers_up,
    dim,
    dim_closed_form,
    edge_multiplicity,
    jack,
    level,
)
from .interp import (
    FunctionalSpec,
    apply_functional,
    express_in_generator_basis,
    factorial_monomial_eval,
    gauss_2f1_check,
    h_star_eval,
    monomial_eval,
    pstar_eval,
    pstar_one_row_values,
    pstar_two_row,
    schur_eval,
    shifted_schur_eval,
    super_h_star_values,
)
from .harmonic import (
    FamilyError,
    GammaShaped,
    HarmonicFamily,
    JackZZ,
    KingmanTA,
    SchurT,
    TruncKingman,
    TruncSchur,
    TruncYoung,
    YoungZZ,
    check_harmonicity,
    lattice_bound_approx,
    level_measure,
    parse_family,
)
from .boundary import (
    DensitySpec,
    ThomaPoint,
    convergence_experiment,
    density_spec,
    dirichlet_integral,
    embed_frobenius,
    embed_rows,
    kingman_kernel,
    selberg_verify,
    young_kernel,
)

__version__ = "0.1.0"

__all__ = [
    "RationalMatrix",
    "ShapeError",
    "SingularMatrixError",
    "as_rational",
    "det",
    "falling_factorial",
    "format_rational",
    "parse_rational",
    "pfaffian",
    "pochhammer",
    "solve_linear",
    "FrobeniusCoords",
    "Partition",
    "partitions_of",
    "reverse_tableaux",
    "GraphKind",
    "KINGMAN",
    "SCHUR",
    "YOUNG",
    "covers_down",
    "covers_up",
    "dim",
    "dim_closed_form",
    "edge_multiplicity",
    "jack",
    "level",
    "FunctionalSpec",
    "apply_functional",
    "express_in_generator_basis",
    "factorial_monomial_eval",
    "gauss_2f1_check",
    "h_star_eval",
    "monomial_eval",
    "pstar_eval",
    "pstar_one_row_values",
    "pstar_two_row",
    "schur_eval",
    "shifted_schur_eval",
    "super_h_star_values",
    "FamilyError",
    "GammaShaped",
    "HarmonicFamily",
    "JackZZ",
    "KingmanTA",
    "SchurT",
    "TruncKingman",
    "TruncSchur",
    "TruncYoung",
    "YoungZZ",
    "check_harmonicity",
    "lattice_bound_approx",
    "level_measure",
    "parse_family",
    "DensitySpec",
    "ThomaPoint",
    "convergence_experiment",
    "density_spec",
    "dirichlet_integral",
    "embed_frobenius",
    "embed_rows",
    "kingman_kernel",
    "selberg_verify",
    "young_kernel",
]
