"""Operational calculus on factorial polynomial series.

Falling factorials, series over the falling-factorial basis, the raising/
difference operator algebra with normal ordering, translation between linear
difference equations and operators, exponent-series solutions, discrete
analogues of exp/trig/Bessel functions, a discrete heat propagator, and a
first-order non-homogeneous solver. All core arithmetic is exact over the
rationals.
"""

from .factorials import (
    PoleError,
    factorial_to_monomial,
    falling_factorial,
    falling_factorial_polynomial,
    falling_factorial_real,
    monomial_to_factorial,
    stirling_first_signed,
    stirling_second,
)
from .frobenius import (
    FrobeniusSolution,
    NotARootError,
    ResonanceError,
    indicial_polynomial,
    rational_roots,
    residual,
    solve_series,
    verified_solutions,
)
from .polynomials import Polynomial
from .series import (
    BackendError,
    FactorialSeries,
    OrderError,
    difference,
    eval_at_integer,
    eval_at_real,
    multiply_by_x,
    raising,
    shift,
)
from .solvers import (
    FirstOrderReport,
    heat_propagate,
    heat_step_oracle,
    nonhomogeneous_general,
    particular_solution,
    particular_solution_by_linear_system,
)
from .special import (
    bessel_equation,
    bessel_operator,
    bessel_series,
    cosine_series,
    exp_series,
    gauss_power_real_imag,
    sine_series,
    trig_series,
    verify_bessel_coefficient_recurrences,
    verify_bessel_difference_equation,
    verify_bessel_recurrences,
)
from .weyl import (
    DifferenceEquation,
    WeylOperator,
    commutator,
    from_difference_equation,
    operator_from_polynomial,
    to_difference_equation,
)

__version__ = "0.1.0"

__all__ = [
    "BackendError",
    "DifferenceEquation",
    "FactorialSeries",
    "FirstOrderReport",
    "FrobeniusSolution",
    "NotARootError",
    "OrderError",
    "PoleError",
    "Polynomial",
    "ResonanceError",
    "WeylOperator",
    "bessel_equation",
    "bessel_operator",
    "bessel_series",
    "commutator",
    "cosine_series",
    "difference",
    "eval_at_integer",
    "eval_at_real",
    "exp_series",
    "factorial_to_monomial",
    "falling_factorial",
    "falling_factorial_polynomial",
    "falling_factorial_real",
    "from_difference_equation",
    "gauss_power_real_imag",
    "heat_propagate",
    "heat_step_oracle",
    "indicial_polynomial",
    "monomial_to_factorial",
    "multiply_by_x",
    "nonhomogeneous_general",
    "operator_from_polynomial",
    "particular_solution",
    "particular_solution_by_linear_system",
    "raising",
    "rational_roots",
    "residual",
    "shift",
    "sine_series",
    "solve_series",
    "stirling_first_signed",
    "stirling_second",
    "to_difference_equation",
    "trig_series",
    "verified_solutions",
    "verify_bessel_coefficient_recurrences",
    "verify_bessel_difference_equation",
    "verify_bessel_recurrences",
]
