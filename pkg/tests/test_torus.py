"""Framed quantum torus and ray factorization"""
from fractions import Fraction

import pytest

from conifolddt import errors
from conifolddt.conifold import Root
from conifolddt.ring import L, ONE, Q
from conifolddt.series import DimVec, TruncSeries
from conifolddt.torus import DualNumber, FramedSeries, Ray, Stability, \
    euler_form, factorization_to_json, lift, ray_factorize, skew_form, \
    slope, twisted_invert, twisted_mul, y_infinity


def y0(order=1, framing_order=1):
    return FramedSeries(order, {(1, 0, 0): 1}, framing_order=framing_order)


def y1(order=1, framing_order=1):
    return FramedSeries(order, {(0, 1, 0): 1}, framing_order=framing_order)


def test_forms():
    assert euler_form((1, 0), (1, 0)) == 1
    assert euler_form((1, 0), (0, 1)) == -2
    assert skew_form((1, 0), (0, 1)) == 0
    assert skew_form((1, 0, 0), (0, 0, 1)) == 1
    assert skew_form((2, 3, 0), (0, 0, 1)) == 2
    assert skew_form((0, 0, 1), (1, 1, 0)) == -1


def test_twisted_commutation():
    yinf = y_infinity(1)
    left = twisted_mul(y0(), yinf)
    right = twisted_mul(yinf, y0())
    assert left[(1, 0, 1)] == -Q
    assert right[(1, 0, 1)] == -Q.inverse()
    # y^a y_inf = L^{a0} y_inf y^a
    assert left == right.scale(L)


def test_unframed_commutative():
    f = FramedSeries(3, {(1, 0, 0): Q, (0, 1, 0): 1, (1, 1, 0): L})
    g = FramedSeries(3, {(0, 0, 0): 1, (2, 0, 0): 2, (0, 1, 0): Q})
    assert f * g == g * f
    assert (f * g).unframed() == f.unframed() * g.unframed()


def test_twisted_invert():
    yinf = y_infinity(2)
    f = 1 - y0(2) + yinf * y1(2)
    inv = twisted_invert(f)
    assert f * inv == f.one()
    assert inv * f == f.one()


def test_lift():
    f = TruncSeries(2, {(0, 0): 1, (1, 1): Q})
    g = lift(f)
    assert g[(1, 1, 0)] == Q
    assert g.framing_order == 1
    assert g.unframed() == f


def test_framed_orders():
    with pytest.raises(ValueError, match="nonnegative"):
        FramedSeries(-1)
    with pytest.raises(errors.OrderMismatchError):
        y0(1, 1) * y0(1, 2)


def test_dual_numbers():
    small = DualNumber(0, 1)
    assert small > 0
    assert small < DualNumber(Fraction(1, 1000))
    assert DualNumber(1, -5) > DualNumber(Fraction(999, 1000), 7)
    assert DualNumber(2, 1) == DualNumber(1, 0) * 2 + small
    assert DualNumber(3) == 3
    assert (-small).sign() == -1
    assert DualNumber().sign() == 0
    assert DualNumber(2, 4) / 2 == DualNumber(1, 2)
    assert small.to_json() == {"rat": "0", "eps": "1"}


def test_stability():
    zs = Stability(("-1", "1/2"), (1, 0))
    assert zs.zeta == (-1, Fraction(1, 2))
    assert zs.pair((2, 2)) == DualNumber(-1, 2)
    assert zs.scaled(2) == Stability((-2, 1), (2, 0))
    with pytest.raises(ValueError, match="positive factor"):
        zs.scaled(-1)
    with pytest.raises(ValueError, match="must not vanish"):
        Stability((0, 0))
    with pytest.raises(ValueError, match="two components"):
        Stability((1, 2, 3))


def test_slope():
    zs = Stability((-1, 1), (1, 0))
    assert slope(zs, (1, 1)) == DualNumber(0, Fraction(1, 2))
    assert slope(zs, (2, 1)) == DualNumber(Fraction(-1, 3), Fraction(2, 3))
    with pytest.raises(errors.ZeroDimensionError, match="zero dimension"):
        slope(zs, (0, 0))


def test_ray_factorize_unframed():
    a = (1 + y0(2, 0)) * (1 + y1(2, 0))
    factors = ray_factorize(a, Stability((1, 0)))
    assert [ray for ray, _ in factors] == [Ray(DualNumber(1), False),
                                          Ray(DualNumber(0), False)]
    assert factors[0][1] == 1 + y0(2, 0)
    assert factors[1][1] == 1 + y1(2, 0)


def test_ray_factorize_framed():
    yinf = y_infinity(1)
    a = (1 + yinf) * (1 + y0())
    factors = ray_factorize(a, Stability((-1, -1)))
    assert [ray for ray, _ in factors] == [Ray(DualNumber(0), True),
                                          Ray(DualNumber(-1), False)]
    assert factors[0][1] == 1 + yinf
    assert factors[1][1] == 1 + y0()
    # the other order gives other factors
    b = (1 + y0()) * (1 + yinf)
    assert ray_factorize(b, Stability((-1, -1))) != factors


def test_ray_factorize_two_slopes():
    y0y1 = FramedSeries(2, {(1, 1, 0): 1}, framing_order=0)
    a = (1 + y0(2, 0)) * (1 + y0y1)
    factors = ray_factorize(a, Stability((-1, 3)))
    assert factors == [(Ray(DualNumber(1), False), 1 + y0y1),
                       (Ray(DualNumber(-1), False), 1 + y0(2, 0))]
    assert ray_factorize(a.one(), Stability((-1, 3))) == []


def mixed_framed_series():
    yinf = y_infinity(3)
    return (1 + y0(3) + y0(3) * y1(3).scale(Q)) * (1 + yinf) \
        * (1 - y1(3)).invert()


def test_ray_factorize_recombines():
    a = mixed_framed_series()
    zs = Stability((1, -2), (1, 1))
    product = a.one()
    for _, factor in ray_factorize(a, zs):
        product = product * factor
    assert product == a


def test_ray_factorize_idempotent():
    zs = Stability((1, -2), (1, 1))
    factors = ray_factorize(mixed_framed_series(), zs)
    assert len(factors) > 2
    for ray, factor in factors:
        assert ray_factorize(factor, zs) == [(ray, factor)]


def test_factorization_to_json():
    yinf = y_infinity(1)
    factors = ray_factorize((1 + yinf) * (1 + y0()), Stability((-1, -1)))
    data = factorization_to_json(factors)
    assert [d["slope"] for d in data] == [{"rat": "0", "eps": "0"},
                                          {"rat": "-1", "eps": "0"}]
    assert [d["framed"] for d in data] == [True, False]
    assert FramedSeries.from_json(data[1]["series"]) == 1 + y0()


def test_ray_factorize_errors():
    yinf = y_infinity(1)
    a = (1 + yinf) * (1 + y1())
    with pytest.raises(errors.NotGenericError,
                       match="collides with the framing ray") as exc:
        ray_factorize(a, Stability((1, 0)))
    assert exc.value.witness == Root((0, 1))
    with pytest.raises(errors.NonUnitConstantTermError):
        ray_factorize(a - 1, Stability((1, 0)))


def test_ray_factorize_witness_not_a_root():
    b = (1 + y_infinity(4)) * FramedSeries(4, {(0, 0, 0): 1, (3, 1, 0): 1})
    with pytest.raises(errors.NotGenericError) as exc:
        ray_factorize(b, Stability((1, -3)))
    assert not isinstance(exc.value.witness, Root)
    assert exc.value.witness == DimVec(3, 1)


def test_json_round_trip():
    f = y_infinity(2) * (1 + y0(2)).scale(-Q / (L - 1))
    assert FramedSeries.from_json(f.dumps()) == f
    assert f.unframed().constant_term != ONE


if __name__ == "__main__":
    # Run all tests
    _loc = locals()
    for _key in list(_loc.keys()):
        if _key.startswith("test_") and hasattr(_loc[_key], "__call__"):
            _loc[_key]()
