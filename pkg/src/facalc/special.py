"""Discrete analogues of classical special functions in the falling-factorial basis.

Replacing each power x^n of a classical Taylor series with phi_n(x) gives
series with closed evaluations at integers: the exponential analogue sums to
(1+lam)^x, the trig analogues to the real/imaginary parts of (1+i)^x, and the
Bessel analogue satisfies discrete versions of the classical recurrences and
a second-order difference equation.
"""

import math
from fractions import Fraction
from typing import Iterable, Union

from .polynomials import Polynomial
from .series import FactorialSeries, difference, eval_at_integer, raising
from .weyl import DifferenceEquation, WeylOperator, to_difference_equation

Scalar = Union[int, Fraction, float]


def exp_series(lam: Scalar, order: int) -> FactorialSeries:
    """Coefficients lam^n / n!; at integer m the sum is (1+lam)^m.

    A Fraction or int `lam` gives the exact rational backend, a float the
    float backend.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if not isinstance(lam, float):
        lam = Fraction(lam)
    coeffs = [lam**n / math.factorial(n) for n in range(order + 1)]
    return FactorialSeries(coeffs, exact=False)


def trig_series(kind: str, order: int) -> FactorialSeries:
    """Discrete cosine/sine analogues: (-1)^k/(2k)! at even indices for "cos",
    (-1)^k/(2k+1)! at odd indices for "sin"; zero elsewhere."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] * (order + 1)
    if kind == "cos":
        for k in range(0, order // 2 + 1):
            if 2 * k <= order:
                coeffs[2 * k] = Fraction((-1) ** k, math.factorial(2 * k))
    elif kind == "sin":
        for k in range(0, (order + 1) // 2):
            if 2 * k + 1 <= order:
                coeffs[2 * k + 1] = Fraction((-1) ** k, math.factorial(2 * k + 1))
    else:
        raise ValueError(f"unknown trig kind {kind!r}")
    return FactorialSeries(coeffs, exact=False)


def cosine_series(order: int) -> FactorialSeries:
    return trig_series("cos", order)


def sine_series(order: int) -> FactorialSeries:
    return trig_series("sin", order)


def bessel_series(n: int, order: int) -> FactorialSeries:
    """Discrete Bessel analogue of index n: coefficient (-1)^k / (k! (n+k)! 2^{n+2k})
    at basis index n+2k, zero elsewhere."""
    if n < 0:
        raise ValueError("index n must be non-negative")
    if order < n:
        raise ValueError("order must reach the leading index n")
    coeffs = [Fraction(0)] * (order + 1)
    k = 0
    while n + 2 * k <= order:
        coeffs[n + 2 * k] = Fraction(
            (-1) ** k, math.factorial(k) * math.factorial(n + k) * 2 ** (n + 2 * k)
        )
        k += 1
    return FactorialSeries(coeffs, exact=False)


def _signed_bessel(n: int, order: int) -> FactorialSeries:
    # reflection for the single negative index the recurrences can touch
    if n >= 0:
        return bessel_series(n, order)
    if n == -1:
        return bessel_series(1, order).scale(-1)
    raise ValueError("only index -1 has a defined reflection")


def bessel_operator(n: int) -> WeylOperator:
    """(R D)^2 + R^2 - n^2 in normal order; annihilates the index-n analogue."""
    rd = WeylOperator.raising() * WeylOperator.difference()
    return rd * rd + WeylOperator.raising(2) - WeylOperator.constant(n * n)


def bessel_equation(n: int) -> DifferenceEquation:
    """The second-order difference equation satisfied by the index-n analogue:
    2x(x-1) f(x-2) - x(2x-1) f(x-1) + (x^2 - n^2) f(x) = 0."""
    return DifferenceEquation(
        {
            -2: Polynomial((0, -2, 2)),
            -1: Polynomial((0, 1, -2)),
            0: Polynomial((-n * n, 0, 1)),
        }
    )


def verify_bessel_recurrences(
    n: int, points: Iterable[int], order: int | None = None
) -> tuple[Fraction, Fraction]:
    """Exact residuals of the two index recurrences at the given integer points.

    forward step:  B_n(x+1) - B_n(x) - (B_{n-1}(x) - B_{n+1}(x)) / 2
    index relation: 2n B_n(x) - x (B_{n-1}(x-1) + B_{n+1}(x-1))

    Index n = 0 uses the reflection B_{-1} = -B_1. Returns the max absolute
    residual of each relation.
    """
    points = list(points)
    if not points:
        raise ValueError("no points given")
    if min(points) < 1:
        raise ValueError("points must be >= 1 so that x-1 stays in the domain")
    if order is None:
        order = max(points) + n + 3
    here = bessel_series(n, order)
    below = _signed_bessel(n - 1, order)
    above = bessel_series(n + 1, order)
    worst_step = Fraction(0)
    worst_index = Fraction(0)
    for m in points:
        b = eval_at_integer(here, m)
        b_next = eval_at_integer(here, m + 1)
        lo = eval_at_integer(below, m)
        hi = eval_at_integer(above, m)
        step = b_next - b - Fraction(1, 2) * (lo - hi)
        lo_prev = eval_at_integer(below, m - 1)
        hi_prev = eval_at_integer(above, m - 1)
        index_rel = 2 * n * b - m * (lo_prev + hi_prev)
        worst_step = max(worst_step, abs(step))
        worst_index = max(worst_index, abs(index_rel))
    return worst_step, worst_index


def verify_bessel_difference_equation(
    n: int, points: Iterable[int], order: int | None = None
) -> tuple[Fraction, bool]:
    """Residual of the second-order equation plus a structural check.

    The structural part asserts that expanding the operator form
    (R D)^2 + R^2 - n^2 reproduces the equation's shift coefficients
    {-2: 2x(x-1), -1: -x(2x-1), 0: x^2 - n^2} exactly.
    """
    points = list(points)
    if not points:
        raise ValueError("no points given")
    if min(points) < 2:
        raise ValueError("points must be >= 2 so that x-2 stays in the domain")
    eq = bessel_equation(n)
    structure_ok = to_difference_equation(bessel_operator(n)) == eq
    if order is None:
        order = max(points) + n + 3
    f = bessel_series(n, order)
    worst = Fraction(0)
    for m in points:
        val = eq.lhs_value(lambda t: eval_at_integer(f, t), m)
        worst = max(worst, abs(val))
    return worst, structure_ok


def verify_bessel_coefficient_recurrences(n: int, order: int) -> bool:
    """Coefficient-level operator identities, exact on all indices <= order-2:

    2 D beta_n = beta_{n-1} - beta_{n+1}
    2n beta_n  = R (beta_{n-1} + beta_{n+1})
    """
    if n < 1:
        raise ValueError("needs n >= 1 so the lower neighbour exists")
    here = bessel_series(n, order)
    below = bessel_series(n - 1, order)
    above = bessel_series(n + 1, order)
    top = order - 2
    lhs1 = difference(here).scale(2)
    rhs1 = below - above
    if lhs1.coeffs[: top + 1] != rhs1.coeffs[: top + 1]:
        return False
    lhs2 = here.scale(2 * n)
    rhs2 = raising(below + above)
    return lhs2.coeffs[: top + 1] == rhs2.coeffs[: top + 1]


def gauss_power_real_imag(m: int) -> tuple[int, int]:
    """Integer real/imaginary parts of (1+i)^m, by exact integer recursion."""
    re, im = 1, 0
    for _ in range(m):
        re, im = re - im, re + im
    return re, im
