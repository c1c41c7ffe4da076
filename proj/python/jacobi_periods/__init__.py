"""Period functions and pairings for Jacobi forms with eta multipliers."""

from ._core import (
    NumericalError,
    PolyThetaVector,
    SkewFourierSeries,
    ValidationError,
    WSpaceBasis,
    chi,
    chi_exponent48,
    dedekind_eta,
    haberland_constant,
    haberland_rhs,
    mock_pairing,
    pair,
    partial_L,
    petersson,
    ray_period,
    relation_residual,
    run_suite,
    solve_w_space,
    suite_names,
    theta_eval,
)

__all__ = [
    "NumericalError",
    "PolyThetaVector",
    "SkewFourierSeries",
    "ValidationError",
    "WSpaceBasis",
    "chi",
    "chi_exponent48",
    "dedekind_eta",
    "haberland_constant",
    "haberland_rhs",
    "mock_pairing",
    "pair",
    "partial_L",
    "petersson",
    "ray_period",
    "relation_residual",
    "run_suite",
    "solve_w_space",
    "suite_names",
    "theta_eval",
]
