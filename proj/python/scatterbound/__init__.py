"""Exact 1D scattering, Bogoliubov-coefficient bounds and distorted-Born estimates."""

from ._scatterbound import (
    ComparisonSolution,
    ConfigError,
    DomainError,
    NumericalError,
    PotentialSpec,
    SolverSettings,
    bogoliubov_bounds,
    case1_bound,
    compose_bogoliubov,
    first_order_estimates,
    load_config,
    parse_config,
    run_sweep,
    run_verification,
    solve_ab_system,
    solve_direct,
    theta_bound,
    transmission_bounds_algebraic,
)

__all__ = [
    "ComparisonSolution",
    "ConfigError",
    "DomainError",
    "NumericalError",
    "PotentialSpec",
    "SolverSettings",
    "bogoliubov_bounds",
    "case1_bound",
    "compose_bogoliubov",
    "first_order_estimates",
    "load_config",
    "parse_config",
    "run_sweep",
    "run_verification",
    "solve_ab_system",
    "solve_direct",
    "theta_bound",
    "transmission_bounds_algebraic",
]
