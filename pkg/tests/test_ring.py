"""Exact coefficients in q = L^{1/2}"""
from fractions import Fraction

import pytest

from conifolddt import errors
from conifolddt.ring import HalfLaurent, L, ONE, Q, RatFun, ZERO, \
    as_ratfun, euler_specialize, evaluate_at_prime, gl_motive, \
    minus_q_power, qpower


def test_canonical_form():
    # (q^2 - 1)/(q - 1) = q + 1
    rf = RatFun(HalfLaurent({2: 1, 0: -1}), HalfLaurent({1: 1, 0: -1}))
    assert rf.is_laurent()
    assert rf == Q + 1
    # q-powers of the denominator move to the numerator
    rf = RatFun(1, HalfLaurent({3: 2}))
    assert rf.is_laurent()
    assert rf == RatFun.laurent({-3: Fraction(1, 2)})


def test_canonical_denominator_monic():
    rf = RatFun(HalfLaurent({1: 1}), HalfLaurent({0: 1, 2: -1}))
    assert rf == -Q / (L - 1)
    assert rf.den == HalfLaurent({2: 1, 0: -1})
    assert rf.num == HalfLaurent({1: -1})


@pytest.mark.parametrize("value", [
    -Q / (L - 1),
    (1 + L) / (1 - L.inverse()),
    Q.inverse() / 3,
    RatFun(HalfLaurent({2: 2, 0: -2}), HalfLaurent({3: -4, 1: 4})),
    RatFun(HalfLaurent({1: 3}), HalfLaurent({0: 2, 2: 6, 4: 4})),
])
def test_canonical_form_idempotent(value):
    again = RatFun(value.num, value.den)
    assert again == value
    assert again.num == value.num
    assert again.den == value.den
    assert str(again) == str(value)


def test_real_root_coefficient():
    # -L^{-1/2}/(1 - L^{-1}) simplifies to -q/(q^2 - 1)
    value = -Q.inverse() / (1 - L.inverse())
    assert value == -Q / (L - 1)
    assert str(value) == "-q/(q^2 - 1)"


def test_imaginary_root_coefficient():
    value = (1 + L) / (1 - L.inverse())
    assert value == (1 + Q ** 2) * Q ** 2 / (Q ** 2 - 1)


@pytest.mark.parametrize("value,text", [
    (ZERO, "0"),
    (ONE, "1"),
    (Q, "q"),
    (Q + Q ** 3, "q^3 + q"),
    (-Q.inverse(), "-q^-1"),
    (Q / 2 - 3, "1/2*q - 3"),
    ((1 + L) / (L - 1), "(q^2 + 1)/(q^2 - 1)"),
    (-Q ** 3 + 2 - Q.inverse(), "-q^3 + 2 - q^-1"),
    (-Q / (L - 1), "-q/(q^2 - 1)"),
])
def test_str(value, text):
    assert str(value) == text


def test_arithmetic():
    a = Q / (L - 1)
    b = 1 / (Q + 1)
    assert a + b - a == b
    assert (a * b) / b == a
    assert a ** 2 == Q ** 2 / (L - 1) ** 2
    assert a ** -1 == (L - 1) / Q
    assert a - a == ZERO
    assert not (a - a)
    assert 2 - a == -(a - 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError, match="Cannot invert zero"):
        Q / ZERO


def test_as_ratfun_bad_type():
    with pytest.raises(TypeError, match="Cannot convert"):
        as_ratfun("q")


def test_adams():
    value = Q / (L - 1)
    assert value.adams(2) == Q ** 2 / (L ** 2 - 1)
    assert value.adams(1) is value


def test_json_round_trip():
    value = -Q / (L - 1) + Fraction(1, 3)
    data = value.to_json()
    assert data["den"] == [[0, -1, 1], [2, 1, 1]]
    assert RatFun.from_json(data) == value


def test_powers_of_q():
    assert qpower(2) == L
    assert minus_q_power(3) == -Q ** 3
    assert minus_q_power(-1) == -Q.inverse()
    assert minus_q_power(4) == L ** 2
    assert minus_q_power(0) == ONE


@pytest.mark.parametrize("n,p,count", [
    (1, 5, 4),
    (2, 2, 6),
    (3, 2, 168),
    (2, 3, 48),
])
def test_gl_motive(n, p, count):
    assert evaluate_at_prime(gl_motive(n), p) == count


def test_evaluate_at_prime_errors():
    with pytest.raises(errors.HalfPowerResidueError, match="Odd power"):
        evaluate_at_prime(Q, 3)
    with pytest.raises(errors.PoleAtPrimeError, match="vanishes at L=2"):
        evaluate_at_prime(1 / (L - 2), 2)


def test_evaluate_at_prime_rational():
    assert evaluate_at_prime(L ** 3 / (L - 1) ** 2, 5) == Fraction(125, 16)


def test_euler_specialize():
    assert euler_specialize(Q + Q ** 3) == 2
    assert euler_specialize((L + 1) / (L + 3)) == Fraction(1, 2)
    with pytest.raises(errors.PoleAtOneError, match="vanishes at q=1"):
        euler_specialize(1 / (L - 1))


if __name__ == "__main__":
    # Run all tests
    _loc = locals()
    for _key in list(_loc.keys()):
        if _key.startswith("test_") and hasattr(_loc[_key], "__call__"):
            _loc[_key]()
