"""Exact verification of slope identities for Hurwitz spaces of covers of an elliptic curve."""

from .arithfn import (
    BIG_F,
    IOTA,
    PHI,
    SIGMA1,
    SIGMA3,
    ArithmeticFunction,
    SieveTable,
    big_f,
    check_multiplicative,
    convolution,
    dirichlet_convolve,
    factorize,
    pointwise_product,
    ramanujan_rhs,
    sigma,
    sigma_half,
)
from .covercount import (
    CoverCensusRow,
    brute_force_b,
    census,
    count_a,
    solve_b_recursion,
    total_pairs,
    verify_genus2_slope,
)
from .lattice import (
    HermiteMatrix,
    MarkedSublattice,
    count_marked_closed_form,
    enumerate_marked,
    enumerate_sublattices,
    is_cyclic_quotient,
    quotient_generators,
)
from .picard import (
    DivisorClass,
    bog_e,
    bog_f,
    delta_class,
    derive_rank_f,
    lambda_class,
    verify_slope_relation,
)
from .report import Check, Report

__version__ = "0.1.0"
