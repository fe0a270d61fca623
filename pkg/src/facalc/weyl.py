"""Normal-ordered operator algebra over the falling-factorial basis.

Generators: `raising` R (pointwise x f(x-1), basis map phi_n -> phi_{n+1}) and
`difference` D (forward difference, phi_n -> n phi_{n-1}). They satisfy the
Weyl relation [D, R] = 1. Every operator is kept in normal order, raising
powers to the left: a finite sum c_{ij} R^i D^j with exact rational c_{ij}.

A linear difference equation sum_j p_j(x) f(x+j) = g(x) with polynomial
coefficients translates into this algebra and back; see
`from_difference_equation` / `to_difference_equation`.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .factorials import falling_factorial, falling_factorial_polynomial
from .polynomials import Polynomial
from .series import FactorialSeries, difference, raising

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class WeylOperator:
    """Normal-ordered sum of terms coeff * R^i D^j, keyed by (i, j)."""

    terms: tuple

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] = ()):
        items = dict(terms).items() if isinstance(terms, Mapping) else terms
        clean = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError("operator powers must be non-negative")
            if isinstance(c, float):
                raise TypeError("operator coefficients are exact rationals, not floats")
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), Fraction(0)) + c
        object.__setattr__(
            self, "terms", tuple(sorted((k, v) for k, v in clean.items() if v))
        )

    @classmethod
    def zero(cls) -> "WeylOperator":
        return cls()

    @classmethod
    def identity(cls) -> "WeylOperator":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "WeylOperator":
        return cls({(0, 0): c})

    @classmethod
    def raising(cls, power: int = 1) -> "WeylOperator":
        return cls({(power, 0): 1})

    @classmethod
    def difference(cls, power: int = 1) -> "WeylOperator":
        return cls({(0, power): 1})

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other) -> "WeylOperator":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = self.as_dict()
        for k, c in other.terms:
            out[k] = out.get(k, Fraction(0)) + c
        return WeylOperator(out)

    __radd__ = __add__

    def __neg__(self) -> "WeylOperator":
        return WeylOperator({k: -c for k, c in self.terms})

    def __sub__(self, other) -> "WeylOperator":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "WeylOperator":
        return -(self - other)

    def __mul__(self, other) -> "WeylOperator":
        if isinstance(other, (int, Fraction)):
            return WeylOperator({k: c * other for k, c in self.terms})
        if not isinstance(other, WeylOperator):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                c = c1 * c2
                # D^{j1} R^{i2} = sum_k C(j1,k) phi_k(i2) R^{i2-k} D^{j1-k}
                for k in range(min(j1, i2) + 1):
                    key = (i1 + i2 - k, j1 + j2 - k)
                    w = c * math.comb(j1, k) * falling_factorial(i2, k)
                    out[key] = out.get(key, Fraction(0)) + w
        return WeylOperator(out)

    def __rmul__(self, other) -> "WeylOperator":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "WeylOperator":
        if n < 0:
            raise ValueError("negative operator power")
        result = WeylOperator.identity()
        for _ in range(n):
            result = result * self
        return result

    def apply(self, f: FactorialSeries) -> FactorialSeries:
        """Act on a series: per term, j difference passes then i raising passes."""
        total = None
        for (i, j), c in self.terms:
            g = f
            for _ in range(j):
                g = difference(g)
            for _ in range(i):
                g = raising(g)
            g = g.scale(c if f.is_rational else float(c))
            total = g if total is None else total + g
        if total is None:
            return FactorialSeries.zero(rational=f.is_rational)
        return total

    def min_degree_shift(self) -> int:
        """min (i - j) over terms: the lowest basis-index displacement."""
        if not self.terms:
            raise ValueError("zero operator has no degree shift")
        return min(i - j for (i, j), _ in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "WeylOperator(0)"
        parts = [f"{c}*R^{i}D^{j}" for (i, j), c in self.terms]
        return f"WeylOperator({' + '.join(parts)})"


def _coerce(value):
    if isinstance(value, WeylOperator):
        return value
    if isinstance(value, (int, Fraction)):
        return WeylOperator.constant(value)
    return NotImplemented


def commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    return a * b - b * a


def operator_from_polynomial(p: Polynomial, x: WeylOperator) -> WeylOperator:
    """p evaluated at an operator argument, by Horner's rule."""
    acc = WeylOperator.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + WeylOperator.constant(c)
    return acc


@dataclass(frozen=True)
class DifferenceEquation:
    """sum_j p_j(x) f(x+j) = rhs(x), shifts j integer, coefficients polynomial."""

    terms: tuple
    rhs: Polynomial

    def __init__(self, terms, rhs: Polynomial = Polynomial.zero()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[int, Polynomial] = {}
        for j, p in items:
            p = p if isinstance(p, Polynomial) else Polynomial(p)
            if p:
                clean[int(j)] = clean.get(int(j), Polynomial.zero()) + p
        clean = {j: p for j, p in clean.items() if p}
        if not clean:
            raise ValueError("difference equation needs at least one nonzero term")
        object.__setattr__(self, "terms", tuple(sorted(clean.items())))
        object.__setattr__(
            self, "rhs", rhs if isinstance(rhs, Polynomial) else Polynomial(rhs)
        )

    def as_dict(self) -> dict[int, Polynomial]:
        return dict(self.terms)

    @property
    def min_shift(self) -> int:
        return min(j for j, _ in self.terms)

    @property
    def max_shift(self) -> int:
        return max(j for j, _ in self.terms)

    def lhs_value(self, value_at, m: int):
        """sum_j p_j(m) value_at(m+j); value_at maps integers to scalars."""
        total = None
        for j, p in self.terms:
            contrib = p(m) * value_at(m + j)
            total = contrib if total is None else total + contrib
        return total

    def is_homogeneous(self) -> bool:
        return not self.rhs


def from_difference_equation(eq: DifferenceEquation) -> tuple[WeylOperator, int]:
    """Translate a homogeneous equation into the operator algebra.

    Negative-shift terms whose coefficient is exactly divisible by the matching
    falling-factorial polynomial are absorbed through phi_k(x) f(x-k) = R^k f.
    If non-absorbable negative shifts remain, the whole equation is composed
    with the forward shift s = -min remaining shift, so every exponent of the
    shift operator becomes non-negative.

    Returns (A, s) with, for any series f and any integer m >= s at which both
    sides are defined:  A.apply(f) evaluated at m - s  ==  sum_j p_j(m) f(m+j).
    In particular A annihilates exactly the series that solve the equation from
    point s onward.
    """
    if not eq.is_homogeneous():
        raise ValueError("only homogeneous equations translate to operators")
    absorbed: list[tuple[Polynomial, int]] = []
    direct: list[tuple[Polynomial, int]] = []
    for j, p in eq.terms:
        if j < 0:
            q, r = divmod(p, falling_factorial_polynomial(-j))
            if not r:
                absorbed.append((q, -j))
                continue
        direct.append((p, j))
    pending = [j for _, j in direct if j < 0]
    s = -min(pending) if pending else 0

    shift_op = WeylOperator.identity() + WeylOperator.difference()  # pointwise f(x+1)
    x_op = WeylOperator.raising() * shift_op  # pointwise x f(x)
    a = WeylOperator.zero()
    for q, k in absorbed:
        # E^s q(x) R^k = q(x+s) E^s R^k
        a = a + operator_from_polynomial(q.shifted_arg(s), x_op) * shift_op**s * WeylOperator.raising(k)
    for p, j in direct:
        a = a + operator_from_polynomial(p.shifted_arg(s), x_op) * shift_op ** (s + j)
    return a, s


def to_difference_equation(a: WeylOperator) -> DifferenceEquation:
    """Expand R^i D^j = phi_i(x) E^{-i} (E - 1)^j into shift terms."""
    if not a:
        raise ValueError("zero operator has no equation form")
    shifts: dict[int, Polynomial] = {}
    for (i, j), c in a.terms:
        phi = falling_factorial_polynomial(i)
        for t in range(j + 1):
            sign = -1 if (j - t) % 2 else 1
            w = c * math.comb(j, t) * sign
            key = t - i
            shifts[key] = shifts.get(key, Polynomial.zero()) + phi * w
    return DifferenceEquation(shifts)
