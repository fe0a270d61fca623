"""Series in the falling-factorial basis and the operator actions on their coefficients.

A series f = sum_n a_n phi_n(x) is stored as its coefficient tuple. `exact=True`
means the coefficients are the complete finite expansion (a polynomial in
disguise, evaluable anywhere); `exact=False` means they truncate an infinite
expansion at `order = len(coeffs) - 1` and nothing is known beyond it.

Coefficients are either all Fraction (rational backend) or all float (float
backend); binary operations between the two backends are rejected.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .factorials import falling_factorial

Scalar = Union[int, Fraction, float]


class OrderError(ValueError):
    """An operation needs coefficients beyond the stored truncation order."""


class BackendError(TypeError):
    """Rational and float series were mixed in one operation."""


def _normalize(values: Iterable[Scalar]) -> tuple[tuple, bool]:
    vals = list(values)
    if any(isinstance(v, float) for v in vals):
        if not all(isinstance(v, (float, int)) for v in vals):
            raise BackendError("cannot mix float and rational coefficients")
        return tuple(float(v) for v in vals), False
    return tuple(Fraction(v) for v in vals), True


@dataclass(frozen=True)
class FactorialSeries:
    coeffs: tuple
    exact: bool = False

    def __init__(self, coeffs: Iterable[Scalar] = (), exact: bool = False):
        vals, rational = _normalize(coeffs)
        if exact:
            vals = _trim(vals)
        object.__setattr__(self, "coeffs", vals)
        object.__setattr__(self, "exact", bool(exact))
        object.__setattr__(self, "_rational", rational)

    @classmethod
    def zero(cls, rational: bool = True) -> "FactorialSeries":
        return cls((), exact=True) if rational else cls((0.0,), exact=True)

    @classmethod
    def basis(cls, n: int) -> "FactorialSeries":
        """The single basis element phi_n."""
        return cls([0] * n + [1], exact=True)

    @property
    def is_rational(self) -> bool:
        return self._rational

    @property
    def order(self) -> int:
        """Highest stored coefficient index; -1 when nothing is stored."""
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Scalar:
        if n < 0:
            raise IndexError("coefficient index must be non-negative")
        if n < len(self.coeffs):
            return self.coeffs[n]
        if self.exact:
            return Fraction(0) if self._rational else 0.0
        raise OrderError(f"coefficient {n} is beyond the truncation order {self.order}")

    def scale(self, c: Scalar) -> "FactorialSeries":
        c = self._coerce_scalar(c)
        return FactorialSeries((c * a for a in self.coeffs), exact=self.exact)

    def _coerce_scalar(self, c: Scalar):
        if self._rational:
            if isinstance(c, float):
                raise BackendError("float scalar on a rational series")
            return Fraction(c)
        return float(c)

    def __add__(self, other: "FactorialSeries") -> "FactorialSeries":
        if not isinstance(other, FactorialSeries):
            return NotImplemented
        return _combine(self, other, lambda a, b: a + b)

    def __sub__(self, other: "FactorialSeries") -> "FactorialSeries":
        if not isinstance(other, FactorialSeries):
            return NotImplemented
        return _combine(self, other, lambda a, b: a - b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactorialSeries):
            return NotImplemented
        return (self.coeffs, self.exact, self._rational) == (
            other.coeffs,
            other.exact,
            other._rational,
        )

    def __hash__(self):
        return hash((self.coeffs, self.exact, self._rational))

    def __repr__(self) -> str:
        kind = "exact" if self.exact else f"order {self.order}"
        return f"FactorialSeries({list(self.coeffs)}, {kind})"


def _trim(vals: tuple) -> tuple:
    out = list(vals)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _combine(f: FactorialSeries, g: FactorialSeries, op) -> FactorialSeries:
    if f.is_rational != g.is_rational:
        raise BackendError("cannot combine rational and float series")
    exact = f.exact and g.exact
    if exact:
        n = max(len(f.coeffs), len(g.coeffs))
    else:
        # only truncated inputs limit how far the result is known
        n = min(len(s.coeffs) for s in (f, g) if not s.exact)
    zero = Fraction(0) if f.is_rational else 0.0
    get = lambda s, k: s.coeffs[k] if k < len(s.coeffs) else zero
    return FactorialSeries((op(get(f, k), get(g, k)) for k in range(n)), exact=exact)


def raising(f: FactorialSeries) -> FactorialSeries:
    """Degree-raising operator: phi_n -> phi_{n+1}; pointwise x f(x-1).

    Coefficients: b_0 = 0, b_n = a_{n-1}.
    """
    zero = Fraction(0) if f.is_rational else 0.0
    return FactorialSeries((zero,) + f.coeffs, exact=f.exact)


def difference(f: FactorialSeries) -> FactorialSeries:
    """Forward difference f(x+1) - f(x): phi_n -> n phi_{n-1}.

    Coefficients: b_n = (n+1) a_{n+1}. Drops the truncation order by one.
    """
    return FactorialSeries(
        ((n + 1) * a for n, a in enumerate(f.coeffs[1:])), exact=f.exact
    )


def multiply_by_x(f: FactorialSeries) -> FactorialSeries:
    """Pointwise multiplication by x: b_n = a_{n-1} + n a_n."""
    top = len(f.coeffs) + 1 if f.exact else len(f.coeffs)
    zero = Fraction(0) if f.is_rational else 0.0
    get = lambda k: f.coeffs[k] if 0 <= k < len(f.coeffs) else zero
    return FactorialSeries(
        (get(n - 1) + n * get(n) for n in range(top)), exact=f.exact
    )


def shift(f: FactorialSeries) -> FactorialSeries:
    """Pointwise f(x+1): b_n = a_n + (n+1) a_{n+1}; identity plus difference."""
    top = len(f.coeffs) if f.exact else len(f.coeffs) - 1
    zero = Fraction(0) if f.is_rational else 0.0
    get = lambda k: f.coeffs[k] if 0 <= k < len(f.coeffs) else zero
    return FactorialSeries(
        (get(n) + (n + 1) * get(n + 1) for n in range(max(top, 0))), exact=f.exact
    )


def eval_at_integer(f: FactorialSeries, m: int) -> Scalar:
    """Value of the series at a non-negative integer.

    phi_n(m) = 0 for n > m, so the sum needs only coefficients up to index m;
    a truncated series must have order >= m.
    """
    if m < 0 or m != int(m):
        raise ValueError("evaluation point must be a non-negative integer")
    m = int(m)
    if not f.exact and m > f.order:
        raise OrderError(f"point {m} needs coefficients beyond order {f.order}")
    zero = Fraction(0) if f.is_rational else 0.0
    acc = zero
    for n in range(min(m, len(f.coeffs) - 1) + 1):
        acc += f.coeffs[n] * falling_factorial(m if f.is_rational else float(m), n)
    return acc


def eval_at_real(f: FactorialSeries, x: float, order: int | None = None) -> tuple[float, float]:
    """Partial sum at real x through `order`, plus the magnitude of the last term.

    Returns (value, remainder_indicator). No convergence claim is made; the
    indicator is |a_K phi_K(x)| for the last included index K.
    """
    if order is None:
        order = f.order
    if order < 0:
        raise OrderError("nothing to sum")
    if not f.exact and order > f.order:
        raise OrderError(f"order {order} exceeds stored order {f.order}")
    complete = f.exact and order >= len(f.coeffs) - 1
    order = min(order, len(f.coeffs) - 1) if f.exact else order
    x = float(x)
    acc = 0.0
    last = 0.0
    for n in range(order + 1):
        c = float(f.coeffs[n]) if n < len(f.coeffs) else 0.0
        last = c * falling_factorial(x, n)
        acc += last
    return acc, 0.0 if complete else abs(last)


def from_polynomial_coeffs(coeffs: Iterable[Scalar]) -> FactorialSeries:
    """Exact series from a complete coefficient list."""
    return FactorialSeries(coeffs, exact=True)
