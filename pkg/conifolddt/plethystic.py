"""Lambda-ring operations on truncated series

The plethystic exponential is computed as exp(sum_n psi_n(f)/n), with
the exponential of a series without constant term obtained from the
recurrence n E_n = sum_k k F_k E_{n-k} on homogeneous pieces.
"""
import collections
from fractions import Fraction
import functools

from sympy import factorint

from . import errors
from .ring import ONE, L, Q, RatFun, as_ratfun, gl_motive, minus_q_power
from .series import TruncSeries, _accumulate


__all__ = ["Partition", "adams", "commuting_motive", "exp_pleth",
           "heine_sides", "hua_one_loop", "log_pleth", "mobius",
           "partition_sum_f", "partition_sum_f_closed", "partition_sum_g",
           "partition_sum_g_closed", "partition_weight_f",
           "partition_weight_g", "partitions_of", "pow_pleth",
           "qpochhammer", "sigma"]


class Partition(tuple):
    """Integer partition, parts sorted nonincreasing"""
    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("Parts must be positive, got {}!".format(parts))
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError("Parts must be nonincreasing, got {}!".format(
                parts))
        return super(Partition, cls).__new__(cls, parts)

    def __repr__(self):
        return "Partition{}".format(tuple(self))

    @property
    def size(self):
        """|pi|"""
        return sum(self)

    @property
    def length(self):
        """l(pi), the number of parts"""
        return len(self)

    def multiplicities(self):
        """{part: b_part} for pi = (1^b_1 2^b_2 ...)"""
        return collections.Counter(self)


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def _partitions_cached(n):
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_of(n):
    """All partitions of n in lexicographically decreasing order"""
    if n < 0:
        raise ValueError("`n` must be nonnegative, got {}!".format(n))
    return list(_partitions_cached(n))


def mobius(n):
    factors = factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return (-1) ** len(factors)


def adams(n, f):
    """psi_n(r y^alpha) = psi_n(r) y^(n alpha), psi_n(q) = q^n"""
    return f.adams(n)


def _exp_series(g):
    """Ordinary exponential of a series without constant term"""
    pieces = g.graded()
    result = {0: {g.zero_key: ONE}}
    for n in range(1, g.max_degree + 1):
        acc = {}
        for k in range(1, n + 1):
            if k in pieces and result.get(n - k):
                scaled = {key: value * k for key, value in pieces[k].items()}
                _accumulate(acc, g.product_of_terms(scaled, result[n - k]))
        inv = Fraction(1, n)
        result[n] = {key: value * inv for key, value in acc.items()}
    coeffs = {}
    for piece in result.values():
        coeffs.update(piece)
    return g._like(coeffs)


def _log_series(f):
    """Ordinary logarithm of a series with constant term 1"""
    pieces = f.graded()
    result = {}
    for n in range(1, f.max_degree + 1):
        acc = dict(pieces.get(n, {}))
        inner = {}
        for k in range(1, n):
            if result.get(k) and (n - k) in pieces:
                scaled = {key: value * k for key, value in result[k].items()}
                _accumulate(inner, f.product_of_terms(scaled, pieces[n - k]))
        inv = Fraction(-1, n)
        _accumulate(acc, {key: value * inv for key, value in inner.items()})
        result[n] = acc
    coeffs = {}
    for piece in result.values():
        coeffs.update(piece)
    return f._like(coeffs)


def exp_pleth(f):
    """Plethystic exponential Exp(f) = exp(sum_n psi_n(f)/n)"""
    if f.constant_term:
        raise errors.NonzeroConstantTermError(
            "Exp needs a series without constant term, got {}!".format(
                f.constant_term))
    arg = f.zero()
    for n in range(1, f.max_degree + 1):
        term = f.adams(n)
        if term:
            arg = arg + term.scale(Fraction(1, n))
    return _exp_series(arg)


def log_pleth(f):
    """Plethystic logarithm Log(f) = sum_n mu(n)/n psi_n(log f)"""
    if f.constant_term != ONE:
        raise errors.ConstantTermNotOneError(
            "Log needs constant term 1, got {}!".format(f.constant_term))
    logf = _log_series(f)
    result = f.zero()
    for n in range(1, f.max_degree + 1):
        mu = mobius(n)
        if mu:
            term = logf.adams(n)
            if term:
                result = result + term.scale(Fraction(mu, n))
    return result


def pow_pleth(f, g):
    """Power structure Pow(f, g) = Exp(g Log(f))"""
    return exp_pleth(log_pleth(f).scale(as_ratfun(g)))


def sigma(n, c):
    """sigma_n of a single coefficient: degree-n slice of Exp(c x)"""
    x = TruncSeries(n, {(1,): c}, variables=("x",))
    return exp_pleth(x)[(n,)]


@functools.lru_cache(maxsize=None)
def qpochhammer(n):
    """(L^{-1})_n = prod_{k=1}^n (1 - q^{-2k})"""
    if n < 0:
        raise ValueError("`n` must be nonnegative, got {}!".format(n))
    result = ONE
    for k in range(1, n + 1):
        result = result * RatFun.laurent({0: 1, -2 * k: -1})
    return result


def hua_one_loop(order):
    """Both sides of Hua's formula for the quiver with one loop

    Returns
    -------
    left: TruncSeries
        sum over partitions lambda of (y0 y1)^|lambda| divided by
        prod_i (L^{-1})_{lambda_i - lambda_{i+1}}
    right: TruncSeries
        Exp(L/(L-1) sum_{n>=1} (y0 y1)^n)
    """
    left = {(0, 0): ONE}
    for size in range(1, order // 2 + 1):
        total = RatFun()
        for lam in partitions_of(size):
            steps = [a - b for a, b in zip(lam, tuple(lam[1:]) + (0,))]
            denom = ONE
            for step in steps:
                denom = denom * qpochhammer(step)
            total = total + denom.inverse()
        left[(size, size)] = total
    coeff = L / (L - 1)
    arg = {(n, n): coeff for n in range(1, order // 2 + 1)}
    right = exp_pleth(TruncSeries(order, arg))
    return TruncSeries(order, left), right


def heine_sides(order):
    """Both sides of the Heine formula as series in x

    Returns
    -------
    left: TruncSeries
        sum_n (-q)^{-n^2} x^n / (L^{-1})_n
    right: TruncSeries
        Exp(q/(1 - L) x)
    """
    left = {}
    for n in range(order + 1):
        left[(n,)] = minus_q_power(-n * n) / qpochhammer(n)
    right = exp_pleth(TruncSeries(order, {(1,): Q / (1 - L)},
                                  variables=("x",)))
    return TruncSeries(order, left, variables=("x",)), right


def partition_weight_f(part):
    """f(pi) = prod_i L^{b_i^2}/[GL_{b_i}]"""
    weight = ONE
    for b in Partition(part).multiplicities().values():
        weight = weight * L ** (b * b) / gl_motive(b)
    return weight


def partition_weight_g(part):
    """g(pi) = prod_i (-q)^{b_i^2}/[GL_{b_i}]"""
    weight = ONE
    for b in Partition(part).multiplicities().values():
        weight = weight * minus_q_power(b * b) / gl_motive(b)
    return weight


def partition_sum_f(order):
    """sum_pi f(pi) x^|pi| over partitions with |pi| <= order"""
    coeffs = {}
    for size in range(order + 1):
        total = RatFun()
        for part in partitions_of(size):
            total = total + partition_weight_f(part)
        coeffs[(size,)] = total
    return TruncSeries(order, coeffs, variables=("x",))


def partition_sum_g(order):
    """sum_pi g(pi) x^|pi| b^l(pi) truncated at |pi| + l(pi) <= order

    The variable b stands for a^{-1}.
    """
    coeffs = {}
    for size in range(order + 1):
        for part in partitions_of(size):
            key = (size, part.length)
            if sum(key) <= order:
                coeffs[key] = coeffs.get(key, RatFun()) + \
                    partition_weight_g(part)
    return TruncSeries(order, coeffs, variables=("x", "b"))


def partition_sum_f_closed(order):
    """Exp(L/(L-1) sum_{n>=1} x^n)"""
    coeff = L / (L - 1)
    return exp_pleth(TruncSeries(order, {(n,): coeff
                                         for n in range(1, order + 1)},
                                 variables=("x",)))


def partition_sum_g_closed(order):
    """Exp(q/(1-L) sum_{n>=1} x^n b)"""
    coeff = Q / (1 - L)
    return exp_pleth(TruncSeries(order, {(n, 1): coeff
                                         for n in range(1, order)},
                                 variables=("x", "b")))


def commuting_motive(a):
    """Motive [GL_a] sum_{pi |- a} L^{l(pi)} of the commuting variety"""
    total = RatFun()
    for part in partitions_of(a):
        total = total + L ** part.length
    return gl_motive(a) * total
