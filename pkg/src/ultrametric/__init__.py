"""Exact computations on ultrametric spaces.

p-adic numbers, sequence spaces with their ultrametrics, binary and Cantor
encodings, ball algebra on finite metric spaces, snowflake transforms and
dyadic intervals.  All arithmetic is done with :class:`fractions.Fraction`.
"""

from .balls import (
    Ball,
    Kind,
    Relation,
    ball_members,
    ball_union,
    center_invariance,
    classify_balls,
    complement_separation,
    sufficient_conditions,
)
from .cantor import (
    ClosedInterval,
    cantor_stage_member,
    phi,
    phi_ball_image,
    phi_collision,
    phi_decode,
    phi_star,
    psi,
    psi_decode,
)
from .dyadic import DyadicInterval, classify_dyadic, dyadic_phi_correspondence, enclosing_dyadic
from .metricprops import (
    check_axioms,
    cauchy_chain_check,
    discrete_space,
    quasi_bound_check,
    snowflake,
)
from .padic import (
    PAdicNumber,
    ZeroAtPrecisionError,
    abs_p,
    dist_p,
    padic_add,
    padic_inv,
    padic_mul,
    padic_neg,
    series_sum,
    to_padic,
    valuation,
)
from .seqspace import (
    Alphabet,
    BiSequence,
    ScaleTable,
    SymbolSequence,
    UltrametricValue,
    agreement_depth,
    bishift,
    d_general,
    d_rho,
    d_rho_bi,
    embed,
    parse_bisequence,
    parse_sequence,
    shift_insert,
)
from .space import AxiomReport, FiniteMetricSpace, MatrixError, MetricError, parse_matrix, read_matrix

__all__ = [
    "Alphabet",
    "AxiomReport",
    "Ball",
    "BiSequence",
    "ClosedInterval",
    "DyadicInterval",
    "FiniteMetricSpace",
    "Kind",
    "MatrixError",
    "MetricError",
    "PAdicNumber",
    "Relation",
    "ScaleTable",
    "SymbolSequence",
    "UltrametricValue",
    "ZeroAtPrecisionError",
    "abs_p",
    "agreement_depth",
    "ball_members",
    "ball_union",
    "bishift",
    "cantor_stage_member",
    "cauchy_chain_check",
    "center_invariance",
    "check_axioms",
    "classify_balls",
    "classify_dyadic",
    "complement_separation",
    "d_general",
    "d_rho",
    "d_rho_bi",
    "discrete_space",
    "dist_p",
    "dyadic_phi_correspondence",
    "embed",
    "enclosing_dyadic",
    "padic_add",
    "padic_inv",
    "padic_mul",
    "padic_neg",
    "parse_bisequence",
    "parse_matrix",
    "parse_sequence",
    "phi",
    "phi_ball_image",
    "phi_collision",
    "phi_decode",
    "phi_star",
    "psi",
    "psi_decode",
    "quasi_bound_check",
    "read_matrix",
    "series_sum",
    "shift_insert",
    "snowflake",
    "sufficient_conditions",
    "to_padic",
    "valuation",
]

__version__ = "0.1.0"
