from fractions import Fraction

import pytest

from weylmds.laurent import LaurentPoly


def V(i, p=1):
    return LaurentPoly.variable(3, i, p)


def test_ring_operations():
    x, y = V(0), V(1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + 1) ** 3 == x ** 3 + 3 * x * x + 3 * x + 1
    assert (p - p).is_zero()


def test_laurent_negative_exponents():
    x = V(0)
    xinv = V(0, -1)
    assert x * xinv == LaurentPoly.const(3, 1)


def test_exact_division():
    x, y = V(0), V(1)
    num = x ** 3 - y ** 3
    quot = num.exact_div(x - y)
    assert quot == x * x + x * y + y * y
    assert (quot * (x - y)) == num


def test_division_with_laurent_divisor():
    x = V(0)
    num = x - V(0, -1)
    quot = num.exact_div(x - V(0, -1))
    assert quot == LaurentPoly.const(3, 1)


def test_eval_and_substitute():
    x, y = V(0), V(1)
    p = x * x * y + 2
    assert p.eval_at({0: Fraction(3), 1: Fraction(1, 2), 2: 0}) \
        == Fraction(13, 2)
    q = p.substitute({0: (Fraction(-1), (0, 1, 0))})  # x -> -y
    assert q == y ** 3 + 2


def test_scale_vars_into():
    x, t = V(0), V(2)
    p = x ** 2 + V(0, -1)
    scaled = p.scale_vars_into(2, [0])
    assert scaled == x ** 2 * t ** 2 + V(0, -1) * V(2, -1)


def test_json_terms_sorted():
    p = V(1) + V(0) * 2
    assert p.to_json() == [{"exp": [0, 1, 0], "coeff": "1/1"},
                           {"exp": [1, 0, 0], "coeff": "2/1"}]
