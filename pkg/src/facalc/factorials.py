"""Falling factorials and conversions between the monomial and falling-factorial bases."""

import math
import threading
from fractions import Fraction
from typing import Sequence, Union

from .polynomials import Polynomial

Scalar = Union[int, Fraction, float]

STIRLING_CACHE_BOUND = 64


class PoleError(ArithmeticError):
    """A gamma factor sits at a non-positive integer with no finite limit."""


def falling_factorial(x: Scalar, n: int) -> Scalar:
    """x (x-1) (x-2) ... (x-n+1); the empty product 1 for n = 0.

    The result has the numeric kind of x.
    """
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    acc = x ** 0
    for k in range(n):
        acc = acc * (x - k)
    return acc


def _is_nonpositive_integer(t: float) -> bool:
    return t <= 0 and t == math.floor(t)


def _gamma_sign(t: float) -> int:
    # valid away from poles: gamma alternates sign between negative integers
    if t > 0:
        return 1
    return -1 if math.floor(t) % 2 else 1


def falling_factorial_real(x: float, nu: float) -> float:
    """Gamma(x+1) / Gamma(x+1-nu), extended by its finite limits.

    When exactly one gamma factor is at a pole the ratio is 0 (pole in the
    denominator) or has no finite value (pole in the numerator, PoleError).
    When both are at poles the limit along x is finite and returned.
    """
    top = float(x) + 1.0
    bot = float(x) + 1.0 - float(nu)
    top_pole = _is_nonpositive_integer(top)
    bot_pole = _is_nonpositive_integer(bot)
    if top_pole and bot_pole:
        p = round(-top)
        q = round(-bot)
        sign = -1 if (p - q) % 2 else 1
        return sign * math.factorial(q) / math.factorial(p)
    if top_pole:
        raise PoleError(f"Gamma({top}) in the numerator is at a pole")
    if bot_pole:
        return 0.0
    log_ratio = math.lgamma(top) - math.lgamma(bot)
    return _gamma_sign(top) * _gamma_sign(bot) * math.exp(log_ratio)


class _StirlingTriangle:
    """Rows of a triangular recurrence, grown on demand, safe for concurrent reads."""

    def __init__(self, step):
        self._step = step
        self._rows = [[1]]
        self._lock = threading.Lock()

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("indices must be non-negative")
        if k > n:
            return 0
        if n >= len(self._rows):
            self._grow(max(n, STIRLING_CACHE_BOUND))
        return self._rows[n][k]

    def _grow(self, limit: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= limit:
                n = len(rows)
                prev = rows[-1]
                row = [0] * (n + 1)
                for k in range(n + 1):
                    left = prev[k - 1] if 1 <= k else 0
                    right = prev[k] if k <= n - 1 else 0
                    row[k] = left + self._step(n, k, right)
                rows.append(row)


_STIRLING2 = _StirlingTriangle(lambda n, k, above: k * above)
_STIRLING1 = _StirlingTriangle(lambda n, k, above: -(n - 1) * above)


def stirling_second(n: int, k: int) -> int:
    """Count of partitions of an n-set into k blocks; x^n = sum_k S(n,k) phi_k(x)."""
    return _STIRLING2.value(n, k)


def stirling_first_signed(n: int, k: int) -> int:
    """Signed first-kind numbers: phi_n(x) = sum_k s(n,k) x^k."""
    return _STIRLING1.value(n, k)


def falling_factorial_polynomial(n: int) -> Polynomial:
    """phi_n as a monomial-basis polynomial: x (x-1) ... (x-n+1)."""
    p = Polynomial.one()
    for k in range(n):
        p = p * Polynomial((-k, 1))
    return p


def monomial_to_factorial(p: Polynomial) -> tuple[Fraction, ...]:
    """Coefficients b with p(x) = sum_k b_k phi_k(x)."""
    out = [Fraction(0)] * len(p.coeffs)
    for n, c in enumerate(p.coeffs):
        for k in range(n + 1):
            out[k] += c * stirling_second(n, k)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def factorial_to_monomial(coeffs: Sequence[Scalar]) -> Polynomial:
    """Polynomial sum_k coeffs[k] phi_k(x) expanded in the monomial basis."""
    out = [Fraction(0)] * len(coeffs)
    for n, b in enumerate(coeffs):
        b = Fraction(b)
        for k in range(n + 1):
            out[k] += b * stirling_first_signed(n, k)
    return Polynomial(out)
