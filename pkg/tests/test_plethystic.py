"""Plethystic exponential, logarithm and partition identities"""
import pytest

from conifolddt import errors
from conifolddt.oracle import predicted_commuting
from conifolddt.plethystic import Partition, commuting_motive, exp_pleth, \
    heine_sides, hua_one_loop, log_pleth, mobius, partition_sum_f, \
    partition_sum_f_closed, partition_sum_g, partition_sum_g_closed, \
    partition_weight_f, partition_weight_g, partitions_of, pow_pleth, \
    qpochhammer, sigma
from conifolddt.ring import L, ONE, Q, ZERO, evaluate_at_prime, gl_motive
from conifolddt.series import TruncSeries


def xseries(order, coeffs):
    return TruncSeries(order, coeffs, variables=("x",))


def test_exp_geometric():
    f = exp_pleth(xseries(4, {(1,): 1}))
    assert f == xseries(4, {(n,): 1 for n in range(5)})


def test_exp_q_power():
    # Exp(q x) = 1/(1 - q x)
    f = exp_pleth(xseries(3, {(1,): Q}))
    for n in range(4):
        assert f[(n,)] == Q ** n


def test_exp_minus_one():
    f = exp_pleth(xseries(4, {(1,): -1}))
    assert f == xseries(4, {(0,): 1, (1,): -1})


def test_exp_additive():
    f = TruncSeries(4, {(1, 0): Q, (1, 1): L / (L - 1)})
    g = TruncSeries(4, {(0, 1): -Q / (L - 1), (2, 0): 3})
    assert exp_pleth(f + g) == exp_pleth(f) * exp_pleth(g)


def test_log_inverts_exp():
    f = TruncSeries(4, {(1, 0): -Q / (L - 1), (0, 1): 1, (1, 1): L})
    assert log_pleth(exp_pleth(f)) == f
    g = TruncSeries(4, {(0, 0): 1, (1, 0): Q, (1, 1): 2})
    assert exp_pleth(log_pleth(g)) == g


def test_pow():
    g = TruncSeries(3, {(0, 0): 1, (1, 0): Q, (0, 2): L})
    assert pow_pleth(g, 1) == g
    assert pow_pleth(g, 2) == g * g


def test_pow_motivic_exponent():
    # Pow(1/(1 - y0), L) = 1/(1 - L y0)
    f = TruncSeries(4, {(n, 0): 1 for n in range(5)})
    assert pow_pleth(f, L) == \
        TruncSeries(4, {(n, 0): Q ** (2 * n) for n in range(5)})


def test_pow_projective_line():
    # Pow(Exp(L/(L-1) sum (y0 y1)^n), [P^1]) with [P^1] = L + 1
    diagonal = TruncSeries(6, {(n, n): 1 for n in range(1, 4)})
    f = exp_pleth(diagonal.scale(L / (L - 1)))
    expected = exp_pleth(diagonal.scale((L + 1) * L / (L - 1)))
    assert pow_pleth(f, L + 1) == expected


def test_pow_additive_exponent():
    f = TruncSeries(4, {(0, 0): 1, (1, 0): Q, (1, 1): -1, (0, 2): L})
    a = L
    b = -Q / (L - 1)
    assert pow_pleth(f, a + b) == pow_pleth(f, a) * pow_pleth(f, b)
    g = TruncSeries(4, {(1, 0): Q, (1, 1): 2})
    assert pow_pleth(exp_pleth(g), b) == exp_pleth(g.scale(b))


def test_errors():
    with pytest.raises(errors.NonzeroConstantTermError,
                       match="without constant term"):
        exp_pleth(xseries(2, {(0,): 1}))
    with pytest.raises(errors.ConstantTermNotOneError,
                       match="constant term 1"):
        log_pleth(xseries(2, {(0,): 2}))


@pytest.mark.parametrize("n,value", [
    (1, 1), (2, -1), (4, 0), (6, 1), (7, -1), (12, 0), (30, -1)])
def test_mobius(n, value):
    assert mobius(n) == value


def test_sigma():
    assert sigma(2, L) == L ** 2
    assert sigma(2, -1) == ZERO
    assert sigma(3, 1) == ONE


def test_partitions():
    parts = partitions_of(4)
    assert len(parts) == 5
    assert parts[0] == Partition((4,))
    assert parts[-1] == Partition((1, 1, 1, 1))
    assert partitions_of(0) == [Partition()]
    lam = Partition((3, 1, 1))
    assert lam.size == 5
    assert lam.length == 3
    assert lam.multiplicities() == {3: 1, 1: 2}


def test_partition_errors():
    with pytest.raises(ValueError, match="nonincreasing"):
        Partition((1, 2))
    with pytest.raises(ValueError, match="positive"):
        Partition((2, 0))
    with pytest.raises(ValueError, match="nonnegative"):
        partitions_of(-1)


def test_qpochhammer():
    assert qpochhammer(0) == ONE
    assert qpochhammer(1) == 1 - L.inverse()


def test_hua_one_loop():
    left, right = hua_one_loop(6)
    assert left == right
    assert left[(1, 1)] == L / (L - 1)


def test_heine():
    left, right = heine_sides(5)
    assert left == right


def test_partition_weights():
    assert partition_weight_f((1,)) == L / (L - 1)
    assert partition_weight_f((1, 1)) == L ** 4 / gl_motive(2)
    assert partition_weight_g((2,)) == -Q / (L - 1)


def test_partition_sums():
    assert partition_sum_f(5) == partition_sum_f_closed(5)
    assert partition_sum_g(6) == partition_sum_g_closed(6)


def test_commuting_motive():
    assert commuting_motive(1) == L * (L - 1)
    for p in (2, 3):
        assert evaluate_at_prime(commuting_motive(2), p) == \
            predicted_commuting(2, p)
    assert evaluate_at_prime(commuting_motive(2), 2) == 36


if __name__ == "__main__":
    # Run all tests
    _loc = locals()
    for _key in list(_loc.keys()):
        if _key.startswith("test_") and hasattr(_loc[_key], "__call__"):
            _loc[_key]()
