"""Exact arithmetic in skew PBW extensions."""

from .coeffring import (
    CoeffValue,
    DerivSpec,
    EndoSpec,
    PolynomialRing,
    RationalField,
    RationalFunctionField,
    apply_deriv,
    apply_endo,
    arith,
    invert,
    ore_pair_left,
    ore_pair_right,
)
from .errors import *  # noqa: F401,F403
from .graded import associated_graded_presentation, iterated_skew_view, principal_symbol
from .orelocal import (
    NonzeroCoefficients,
    OreFraction,
    common_denominator,
    frac_add,
    frac_eq,
    frac_mul,
    left_fraction,
    localize_presentation,
    localized_endo,
    localized_endo_right,
    ore_solve_left,
    ore_solve_right,
    right_fraction,
)
from .pbwcore import (
    Element,
    Presentation,
    check_presentation,
    compare_monomials,
    leading_data,
    monomial_times_coeff,
    monomial_times_monomial,
    mul,
    normalize,
    sigma_alpha,
)
from .quantum import (
    LaurentElement,
    QMatrix,
    QuantumSetSpec,
    QuantumTorus,
    fraction_to_laurent,
    gk_structure_check,
    laurent_to_fraction,
    q_factor,
    quantum_space_presentation,
    torus_mul,
)

__version__ = "0.1.0"
