"""Closed-form solvers for two discrete evolution problems.

Both come from inverting or exponentiating first-order difference structure:
a propagator for the recurrence F(m+1, x) = (1 + d^2/dx^2) F(m, x) and a
finite-sum particular solution for a y(x+1) + b y(x) = g(x) with polynomial g.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .factorials import falling_factorial
from .polynomials import Polynomial

Scalar = Union[int, Fraction]


def heat_propagate(w: Polynomial, m: int) -> Polynomial:
    """m-step propagation of initial polynomial data w.

    Closed form: sum_n phi_n(m)/n! * w^(2n), the binomial expansion of
    (1 + d^2/dx^2)^m applied to w. Exact over rationals; the sum is finite
    because derivatives of order beyond deg w vanish.
    """
    if m < 0:
        raise ValueError("step count must be non-negative")
    out = Polynomial.zero()
    n = 0
    deriv = w
    while deriv:
        weight = Fraction(falling_factorial(m, n), math.factorial(n))
        out = out + deriv * weight
        deriv = deriv.derivative(2)
        n += 1
    return out


def heat_step_oracle(w: Polynomial, m: int) -> Polynomial:
    """Reference route: apply w <- w + w'' one step at a time, m times."""
    if m < 0:
        raise ValueError("step count must be non-negative")
    for _ in range(m):
        w = w + w.derivative(2)
    return w


def particular_solution(a: Scalar, b: Scalar, g: Polynomial) -> Polynomial:
    """Polynomial y with a y(x+1) + b y(x) = g(x), via the finite inverse

        y = sum_{k=0}^{deg g} (-a)^k Delta^k g / (a+b)^{k+1}

    where Delta g = g(x+1) - g(x). Needs a + b != 0; a = 0 degenerates to g/b.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a + b == 0:
        raise ValueError("a + b must be nonzero for a polynomial inverse")
    out = Polynomial.zero()
    term = g
    k = 0
    while term:
        out = out + term * (Fraction(-a) ** k / (a + b) ** (k + 1))
        term = term.shifted_arg(1) - term
        k += 1
    return out


def particular_solution_by_linear_system(
    a: Scalar, b: Scalar, g: Polynomial
) -> Polynomial:
    """Independent route: undetermined coefficients, solved exactly.

    Writing y = sum_i y_i x^i with deg y = deg g, matching coefficients of
    a y(x+1) + b y(x) = g gives an upper-triangular system with diagonal
    a + b, solved by back substitution from the top degree down.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a + b == 0:
        raise ValueError("a + b must be nonzero")
    if not g:
        return Polynomial.zero()
    d = g.degree
    y = [Fraction(0)] * (d + 1)
    for i in range(d, -1, -1):
        # coefficient of x^i in a y(x+1) + b y(x), with y_j known for j > i
        acc = Fraction(0)
        for j in range(i + 1, d + 1):
            acc += a * math.comb(j, i) * y[j]
        gi = g.coeffs[i] if i < len(g.coeffs) else Fraction(0)
        y[i] = (gi - acc) / (a + b)
    return Polynomial(y)


@dataclass(frozen=True)
class FirstOrderReport:
    particular: Polynomial
    homogeneous_base: Fraction
    residual: Fraction


def nonhomogeneous_general(
    a: Scalar, b: Scalar, g: Polynomial, points: tuple[int, ...] = tuple(range(11))
) -> FirstOrderReport:
    """Particular solution plus the homogeneous-part base.

    The general solution is y_p(x) + C (-b/a)^x; the report carries the max
    absolute residual of y_p over the given points (exactly zero by
    construction).
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0:
        raise ValueError("a must be nonzero for a genuine difference equation")
    y = particular_solution(a, b, g)
    worst = Fraction(0)
    for m in points:
        worst = max(worst, abs(a * y(m + 1) + b * y(m) - g(m)))
    return FirstOrderReport(particular=y, homogeneous_base=-b / a, residual=worst)
