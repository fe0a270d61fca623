"""Factorial-basis series: backends, truncation bookkeeping, operator actions."""

import random
from fractions import Fraction

import pytest

from facalc import (
    BackendError,
    FactorialSeries,
    OrderError,
    difference,
    eval_at_integer,
    eval_at_real,
    falling_factorial,
    multiply_by_x,
    raising,
    shift,
)


def rand_series(rng, order=8, exact=False):
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order + 1)]
    return FactorialSeries(coeffs, exact=exact)


def test_construction_and_order():
    f = FactorialSeries([1, 2, 3], exact=False)
    assert f.order == 2
    assert not f.exact
    # exact series drop trailing zeros, truncated ones keep them
    assert FactorialSeries([1, 0, 0], exact=True).coeffs == (Fraction(1),)
    assert FactorialSeries([1, 0, 0], exact=False).coeffs == (1, 0, 0)


def test_backend_separation():
    with pytest.raises(BackendError):
        FactorialSeries([Fraction(1, 2), 0.5], exact=False)
    f = FactorialSeries([0.5, 1.0], exact=False)
    assert not f.is_rational
    g = FactorialSeries([Fraction(1, 2), 1], exact=False)
    with pytest.raises(BackendError):
        f + g
    with pytest.raises(BackendError):
        g.scale(0.5)


def test_coefficient_access():
    f = FactorialSeries([1, 2], exact=True)
    assert f.coefficient(10) == 0  # complete series pad with zeros
    g = FactorialSeries([1, 2], exact=False)
    with pytest.raises(OrderError):
        g.coefficient(3)


def test_eval_at_integer_is_newton_sum():
    rng = random.Random(3)
    for _ in range(20):
        f = rand_series(rng, 7)
        for m in range(8):
            want = sum(f.coeffs[n] * falling_factorial(m, n) for n in range(8))
            assert eval_at_integer(f, m) == want


def test_eval_at_integer_order_guard():
    f = FactorialSeries([1] * 4, exact=False)
    with pytest.raises(OrderError):
        eval_at_integer(f, 4)  # phi_4(4) != 0 lies beyond the truncation
    g = FactorialSeries([1] * 4, exact=True)
    assert eval_at_integer(g, 10) == sum(falling_factorial(10, n) for n in range(4))


def test_difference_action_on_basis():
    # difference sends phi_n to n phi_{n-1}
    for n in range(1, 12):
        d = difference(FactorialSeries.basis(n))
        assert d.coefficient(n - 1) == n
        assert all(c == 0 for i, c in enumerate(d.coeffs) if i != n - 1)


def test_raising_action_on_basis():
    for n in range(12):
        r = raising(FactorialSeries.basis(n))
        assert r.coefficient(n + 1) == 1


def test_difference_is_forward_difference_pointwise():
    rng = random.Random(4)
    for _ in range(15):
        f = rand_series(rng, 9)
        d = difference(f)
        for m in range(9):
            assert eval_at_integer(d, m) == eval_at_integer(f, m + 1) - eval_at_integer(f, m)


def test_raising_is_shifted_multiplication_pointwise():
    rng = random.Random(5)
    for _ in range(15):
        f = rand_series(rng, 9, exact=True)
        r = raising(f)
        for m in range(10):
            want = m * eval_at_integer(f, m - 1) if m >= 1 else 0
            assert eval_at_integer(r, m) == want


def test_multiply_by_x_pointwise():
    rng = random.Random(6)
    for _ in range(15):
        f = rand_series(rng, 8, exact=True)
        g = multiply_by_x(f)
        for m in range(9):
            assert eval_at_integer(g, m) == m * eval_at_integer(f, m)


def test_shift_pointwise():
    rng = random.Random(7)
    for _ in range(15):
        f = rand_series(rng, 8, exact=True)
        g = shift(f)
        for m in range(9):
            assert eval_at_integer(g, m) == eval_at_integer(f, m + 1)


def test_shift_is_identity_plus_difference():
    rng = random.Random(12)
    for _ in range(15):
        f = rand_series(rng, 8)
        assert shift(f) == f + difference(f)


def test_commutator_of_actions_is_identity():
    # D(R f) - R(D f) = f on every index unaffected by truncation loss
    rng = random.Random(8)
    for _ in range(20):
        f = rand_series(rng, 10)
        lhs = difference(raising(f)) - raising(difference(f))
        assert lhs.order >= 9
        for n in range(lhs.order + 1):
            assert lhs.coeffs[n] == f.coeffs[n]


def test_number_operator_on_basis():
    # raising after difference scales phi_n by n
    for n in range(21):
        b = FactorialSeries.basis(n)
        assert raising(difference(b)).coefficient(n) == n


def test_order_loss_bookkeeping():
    f = FactorialSeries([1] * 6, exact=False)
    assert difference(f).order == 4
    assert shift(f).order == 4
    assert multiply_by_x(f).order == 5
    assert raising(f).order == 6
    g = FactorialSeries([1] * 6, exact=True)
    assert multiply_by_x(g).order == 6
    assert raising(g).order == 6


def test_eval_at_real_remainder_indicator():
    f = FactorialSeries([Fraction(1, 2) ** n for n in range(30)], exact=False)
    val, rem = eval_at_real(f, 2.5, order=20)
    assert rem > 0.0
    g = FactorialSeries([1, 1], exact=True)
    val, rem = eval_at_real(g, 3.25, order=5)
    assert rem == 0.0
    assert val == pytest.approx(4.25)


def test_eval_at_real_order_guard():
    f = FactorialSeries([1, 1, 1], exact=False)
    with pytest.raises(OrderError):
        eval_at_real(f, 0.5, order=5)


def test_scale_and_arithmetic():
    f = FactorialSeries([1, 2, 3], exact=True)
    assert (f.scale(Fraction(1, 2)) + f.scale(Fraction(1, 2))) == f
    assert (f - f) == FactorialSeries.zero()
