"""Operator algebra with normal ordering, and equation <-> operator translation.

The operator action and the equation translation are checked against each
other pointwise: the translation contract is

    sum_j p_j(m) f(m+j)  ==  value of (A f) at m - s   for all integers m >= s,

where (A, s) = from_difference_equation(eq). Everything here is exact.
"""

import random
from fractions import Fraction

import pytest

from facalc import (
    DifferenceEquation,
    FactorialSeries,
    WeylOperator,
    commutator,
    eval_at_integer,
    from_difference_equation,
    operator_from_polynomial,
    to_difference_equation,
)
from facalc.polynomials import Polynomial

R = WeylOperator.raising()
D = WeylOperator.difference()
I = WeylOperator.identity()


def rand_operator(rng, max_power=4, terms=3):
    op = WeylOperator.zero()
    for _ in range(rng.randint(1, terms)):
        i = rng.randint(0, max_power)
        j = rng.randint(0, max_power)
        c = Fraction(rng.choice([n for n in range(-9, 10) if n]), rng.randint(1, 4))
        op = op + c * WeylOperator({(i, j): 1})
    return op


def rand_series(rng, order=12):
    return FactorialSeries(
        [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order + 1)],
        exact=False,
    )


def test_canonical_commutation():
    assert commutator(D, R) == I
    assert commutator(R, D) == -1 * I
    assert commutator(R, R) == WeylOperator.zero()
    assert commutator(D, D) == WeylOperator.zero()


def test_normal_ordering_frozen_example():
    # D^2 R^2 reordered: R^2 D^2 + 4 R D + 2
    got = (D * D) * (R * R)
    want = R * R * D * D + 4 * (R * D) + 2 * I
    assert got == want


def test_normal_ordering_general_small():
    # D R^3 = R^3 D + 3 R^2
    assert D * R ** 3 == R ** 3 * D + 3 * R ** 2
    # D^2 R = R D^2 + 2 D
    assert D * D * R == R * D * D + 2 * D


def test_number_operator_eigenrelation():
    # (R D) phi_n = n phi_n
    num = R * D
    for n in range(21):
        out = num.apply(FactorialSeries.basis(n))
        assert out == FactorialSeries.basis(n).scale(n)


def test_action_homomorphism_random_pairs():
    rng = random.Random(17)
    for _ in range(60):
        a = rand_operator(rng)
        b = rand_operator(rng)
        f = rand_series(rng, 12)
        via_product = (a * b).apply(f)
        via_composition = a.apply(b.apply(f))
        n = min(len(via_product.coeffs), len(via_composition.coeffs))
        assert n > 0
        assert via_product.coeffs[:n] == via_composition.coeffs[:n]


def test_product_associativity_random():
    rng = random.Random(19)
    for _ in range(40):
        a, b, c = (rand_operator(rng, 3, 2) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_distributivity_and_scalars():
    rng = random.Random(21)
    for _ in range(20):
        a, b, c = (rand_operator(rng, 3, 2) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (b + c) * a == b * a + c * a
        assert Fraction(3, 2) * a == a * Fraction(3, 2)


def test_operator_from_polynomial_is_substitution():
    rng = random.Random(23)
    x_op = R * (I + D)  # multiplication by x
    for _ in range(10):
        deg = rng.randint(0, 4)
        p = Polynomial([Fraction(rng.randint(-5, 5)) for _ in range(deg + 1)])
        op = operator_from_polynomial(p, x_op)
        f = rand_series(rng, 10)
        got = op.apply(f)
        for m in range(got.order + 1):
            assert eval_at_integer(got, m) == p(Fraction(m)) * eval_at_integer(f, m)


def test_apply_zero_operator():
    f = FactorialSeries([1, 2, 3], exact=False)
    assert WeylOperator.zero().apply(f) == FactorialSeries.zero()


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        WeylOperator({(1, 0): 0.5})


def eq_fixture_with_positive_shift():
    # x f(x+1) - f(x) = 0: direct terms only, already shift-free
    return DifferenceEquation({1: Polynomial.x(), 0: Polynomial.constant(-1)})


def test_master_oracle_direct_terms():
    eq = eq_fixture_with_positive_shift()
    a, s = from_difference_equation(eq)
    assert s == 0
    rng = random.Random(29)
    for _ in range(10):
        f = rand_series(rng, 12)
        out = a.apply(f)
        for m in range(8):
            want = sum(p(Fraction(m)) * eval_at_integer(f, m + j) for j, p in eq.as_dict().items())
            assert eval_at_integer(out, m) == want


def test_master_oracle_with_absorption():
    # coefficient of f(x-2) divisible by phi_2: absorbed into raising powers, s stays 0
    eq = DifferenceEquation(
        {
            -2: Polynomial((0, 0, 3)) - Polynomial((0, 3)),  # 3 x (x - 1)
            0: Polynomial((1, 2)),
        }
    )
    a, s = from_difference_equation(eq)
    assert s == 0
    rng = random.Random(31)
    for _ in range(10):
        f = rand_series(rng, 12)
        out = a.apply(f)
        for m in range(2, 9):
            want = sum(p(Fraction(m)) * eval_at_integer(f, m + j) for j, p in eq.as_dict().items())
            assert eval_at_integer(out, m) == want


def test_master_oracle_with_normalization_shift():
    # coefficient of f(x-1) not divisible by phi_1: forces the variable shift s=1
    eq = DifferenceEquation(
        {
            -1: Polynomial.constant(2),
            0: Polynomial((1, 1)),
            1: Polynomial.x(),
        }
    )
    a, s = from_difference_equation(eq)
    assert s == 1
    rng = random.Random(37)
    for _ in range(10):
        f = rand_series(rng, 14)
        out = a.apply(f)
        for m in range(s, 9):
            want = sum(p(Fraction(m)) * eval_at_integer(f, m + j) for j, p in eq.as_dict().items())
            assert eval_at_integer(out, m - s) == want


def test_flagship_equation_operator():
    # (4x+2) f(x+1) + 4x f(x-1) - (8x-1) f(x) = 0
    eq = DifferenceEquation(
        {
            1: Polynomial((2, 4)),
            -1: Polynomial((0, 4)),
            0: Polynomial((1, -8)),
        }
    )
    a, s = from_difference_equation(eq)
    assert s == 0
    assert a.as_dict() == {
        (1, 2): Fraction(4),
        (0, 1): Fraction(2),
        (0, 0): Fraction(3),
    }


def test_round_trip_flagship():
    eq = DifferenceEquation(
        {
            1: Polynomial((2, 4)),
            -1: Polynomial((0, 4)),
            0: Polynomial((1, -8)),
        }
    )
    a, s = from_difference_equation(eq)
    assert s == 0
    back = to_difference_equation(a)
    assert back.as_dict() == eq.as_dict()


def test_round_trip_preserves_solutions_pointwise():
    # back-translated operator agrees with the original equation pointwise,
    # up to the variable shift s introduced by normalization
    rng = random.Random(41)
    done = 0
    while done < 12:
        terms = {
            rng.randint(-1, 1): Polynomial([Fraction(rng.randint(-4, 4)) for _ in range(rng.randint(1, 3))])
            for _ in range(rng.randint(1, 3))
        }
        try:
            eq = DifferenceEquation(terms)
        except ValueError:
            continue  # every generated polynomial was zero
        a, s = from_difference_equation(eq)
        back = to_difference_equation(a)
        f = rand_series(rng, 20)
        get = lambda m: eval_at_integer(f, m)
        lo = max(s, -eq.min_shift, s - back.min_shift)
        for m in range(lo, lo + 4):
            assert back.lhs_value(get, m - s) == eq.lhs_value(get, m)
        done += 1


def test_to_difference_equation_rejects_zero():
    with pytest.raises(ValueError):
        to_difference_equation(WeylOperator.zero())


def test_duplicate_shifts_accumulate():
    eq = DifferenceEquation([(0, Polynomial.x()), (0, Polynomial.x())])
    assert eq.as_dict() == {0: Polynomial((0, 2))}


def test_equation_drops_zero_polynomials():
    eq = DifferenceEquation({0: Polynomial.x(), 1: Polynomial.zero()})
    assert set(eq.as_dict()) == {0}
