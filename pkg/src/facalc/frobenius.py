"""Series solutions of operator equations by exponent shifting.

A candidate solution sum_k a_k R^{k+c} (acting on the constant series 1) turns
an operator equation A = 0 into a one-sided recurrence for the a_k. The lowest
displacement d = min(i - j) over the terms of A yields the indicial polynomial
I(c) = sum_{i-j=d} c_{ij} phi_j(c); admissible exponents c are its roots, and
for k >= 1 the recurrence reads I(c+k) a_k = -(contributions of lower a's).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .factorials import falling_factorial, falling_factorial_polynomial
from .polynomials import Polynomial
from .series import FactorialSeries, eval_at_integer
from .weyl import (
    DifferenceEquation,
    WeylOperator,
    from_difference_equation,
    to_difference_equation,
)

Scalar = Union[int, Fraction]


class NotARootError(ValueError):
    """The requested exponent does not annul the indicial polynomial."""


class ResonanceError(ArithmeticError):
    """The recurrence divisor I(c+k) vanishes at some k >= 1."""

    def __init__(self, root: Fraction, k: int):
        self.root = root
        self.k = k
        super().__init__(f"resonance at step k={k} for exponent c={root}")


@dataclass(frozen=True)
class RecurrenceStep:
    """One solved relation I(c+k) a_k = forcing."""

    k: int
    divisor: Fraction
    forcing: Fraction


@dataclass(frozen=True)
class FrobeniusSolution:
    root: Fraction
    coeffs: tuple
    indicial: Polynomial
    steps: tuple
    formal: bool
    series: FactorialSeries | None
    self_residual: Fraction | None

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k]


def indicial_polynomial(a: WeylOperator) -> Polynomial:
    """I(c) = sum over the lowest-displacement terms of c_{ij} phi_j(c)."""
    if not a:
        raise ValueError("zero operator has no indicial polynomial")
    d = a.min_degree_shift()
    out = Polynomial.zero()
    for (i, j), c in a.terms:
        if i - j == d:
            out = out + falling_factorial_polynomial(j) * c
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            if k != n // k:
                out.append(n // k)
        k += 1
    return sorted(out)


def rational_roots(p: Polynomial) -> list[Fraction]:
    """All rational roots of an exact polynomial, ascending, without multiplicity."""
    if not p:
        raise ValueError("zero polynomial vanishes everywhere")
    coeffs = list(p.coeffs)
    roots = []
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    scale = 1
    for c in coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ints = [int(c * scale) for c in coeffs]
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if cand not in roots and p(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def solve_series(
    a: WeylOperator, root: Scalar, order: int, check_points: int = 8
) -> FrobeniusSolution:
    """Recurrence solution with exponent `root`, a_0 = 1, through a_order.

    Non-negative integer roots also produce the truncated FactorialSeries and a
    self-check residual of that series on the operator's own difference
    equation; other roots yield a formal coefficient object.
    """
    root = Fraction(root)
    indicial = indicial_polynomial(a)
    if indicial(root) != 0:
        raise NotARootError(f"{root} is not a root of the indicial polynomial")
    d = a.min_degree_shift()
    raised = [((i, j), c, (i - j) - d) for (i, j), c in a.terms]
    coeffs = [Fraction(1)]
    steps = []
    for k in range(1, order + 1):
        forcing = Fraction(0)
        for (i, j), c, e in raised:
            if 1 <= e <= k:
                forcing -= c * falling_factorial(root + k - e, j) * coeffs[k - e]
        divisor = indicial(root + k)
        if divisor == 0:
            raise ResonanceError(root, k)
        coeffs.append(forcing / divisor)
        steps.append(RecurrenceStep(k, divisor, forcing))

    formal = not (root.denominator == 1 and root >= 0)
    series = None
    self_residual = None
    if not formal:
        offset = int(root)
        series = FactorialSeries([Fraction(0)] * offset + coeffs, exact=False)
        eq = to_difference_equation(a)
        pts = _self_check_points(eq, series.order, check_points)
        if pts:
            self_residual = residual(eq, series, pts)
    return FrobeniusSolution(
        root=root,
        coeffs=tuple(coeffs),
        indicial=indicial,
        steps=tuple(steps),
        formal=formal,
        series=series,
        self_residual=self_residual,
    )


def _self_check_points(eq: DifferenceEquation, order: int, count: int) -> list[int]:
    start = max(0, -eq.min_shift)
    stop = order - max(0, eq.max_shift)
    return list(range(start, min(stop, start + count - 1) + 1))


def residual(
    eq: DifferenceEquation, f: FactorialSeries, points: Iterable[int]
) -> Union[Fraction, float]:
    """max over points of |sum_j p_j(m) f(m+j) - rhs(m)|."""
    points = list(points)
    if not points:
        raise ValueError("no residual points given")
    worst = None
    for m in points:
        if m + eq.min_shift < 0:
            raise ValueError(
                f"point {m} shifts to {m + eq.min_shift}, outside the domain"
            )
        val = eq.lhs_value(lambda t: eval_at_integer(f, t), m) - eq.rhs(m)
        val = abs(val)
        worst = val if worst is None else max(worst, val)
    return worst


def verified_solutions(
    eq: DifferenceEquation, order: int, points: Sequence[int] | None = None
) -> tuple[WeylOperator, int, list[FrobeniusSolution], dict]:
    """Full pipeline: translate, find exponents, solve each, residual-check.

    Returns (operator, shift, solutions, report) where report maps each root to
    its residual on the originating equation (exactly zero for a genuine
    solution) or to the structured failure ("formal", "resonance at k=...").
    """
    op, s = from_difference_equation(eq)
    indicial = indicial_polynomial(op)
    roots = rational_roots(indicial)
    solutions = []
    report: dict[Fraction, object] = {}
    for root in roots:
        try:
            sol = solve_series(op, root, order)
        except ResonanceError as exc:
            report[root] = f"resonance at k={exc.k}"
            continue
        solutions.append(sol)
        if sol.formal:
            report[root] = "formal"
            continue
        pts = points
        if pts is None:
            start = max(s, -eq.min_shift)
            stop = sol.series.order - max(0, eq.max_shift)
            pts = list(range(start, min(stop, start + 9) + 1))
        report[root] = residual(eq, sol.series, pts) if pts else None
    return op, s, solutions, report
