"""Universal DT series of the conifold and its decompositions"""
import collections
import functools

from ..plethystic import exp_pleth, partition_weight_f, partition_weight_g, \
    partitions_of
from ..ring import L, Q, RatFun
from ..series import TruncSeries
from .chambers import negative_roots, positive_roots
from .quiver import IMAGINARY, Root, roots_up_to


__all__ = ["FORMS", "FirstProofSeries", "factor_A", "first_proof_series",
           "half_series", "universal_series"]

#: routes for computing the universal series
FORMS = ["exp", "product", "first-proof"]

#: Exp coefficient of a real root: -L^{1/2}/(L-1) = -q/(q^2-1)
REAL_COEFF = -Q / (L - 1)
#: Exp coefficient of an imaginary root: (L + L^2)/(L-1)
IMAGINARY_COEFF = (L + L * L) / (L - 1)


FirstProofSeries = collections.namedtuple(
    "FirstProofSeries",
    ["I", "N", "product", "I_partitions", "N_partitions"])
FirstProofSeries.__doc__ = """Factors of A_U = I(y0 y1) N(y0, y1)

I and N are computed as plethystic exponentials, I_partitions and
N_partitions from the partition sums over the invertible and the
nilpotent part; `product` is I*N.
"""


def _as_root(alpha):
    if isinstance(alpha, Root):
        return alpha
    return Root(alpha)


def factor_A(alpha, order):
    """Root factor A^alpha = Exp(c_alpha y^alpha) to total degree `order`"""
    root = _as_root(alpha)
    coeff = IMAGINARY_COEFF if root.kind == IMAGINARY else REAL_COEFF
    return exp_pleth(TruncSeries(order, {root.vec: coeff}))


def _exp_argument(order):
    """Exponent of A_U; the inner sum over (y0 y1)^n starts at n=0"""
    coeffs = {}
    for n in range(order):
        coeffs[(n + 1, n + 1)] = IMAGINARY_COEFF
        coeffs[(n + 1, n)] = REAL_COEFF
        coeffs[(n, n + 1)] = REAL_COEFF
    return TruncSeries(order, coeffs)


def _product(roots, order):
    result = TruncSeries(order, {(0, 0): 1})
    for root in roots:
        result = result * factor_A(root, order)
    return result


@functools.lru_cache(maxsize=32)
def universal_series(order, form="exp"):
    """Universal generating series A_U to total degree `order`

    Parameters
    ----------
    order: int
        truncation order
    form: str
        "exp" (single plethystic exponential), "product" (product of
        the root factors) or "first-proof" (product I(y0 y1) N(y0, y1))
    """
    if form == "exp":
        return exp_pleth(_exp_argument(order))
    elif form == "product":
        return _product(roots_up_to(order) if order else [], order)
    elif form == "first-proof":
        return first_proof_series(order).product
    raise ValueError("Unknown form '{}', expected one of {}!".format(
        form, FORMS))


def half_series(zs, sign, order):
    """A^- (roots with zeta.alpha < 0) or A^+ (zeta.alpha > 0)"""
    if sign == "-":
        roots = negative_roots(zs, order) if order else []
    elif sign == "+":
        roots = positive_roots(zs, order) if order else []
    else:
        raise ValueError("`sign` must be '+' or '-', got '{}'!".format(sign))
    return _product(roots, order)


def _partition_route(order):
    n_max = order // 2
    # invertible part: sum_pi L^l(pi) (y0 y1)^|pi|
    inv = {}
    # F(y0 y1) = sum_pi f(pi) (y0 y1)^|pi|
    fsum = {}
    # G in the two orientations, keys (|pi|, |pi|-l) and (|pi|-l, |pi|)
    g3 = {}
    g4 = {}
    for size in range(order + 1):
        for part in partitions_of(size):
            if size <= n_max:
                inv[(size, size)] = inv.get((size, size), RatFun()) \
                    + L ** part.length
                fsum[(size, size)] = fsum.get((size, size), RatFun()) \
                    + partition_weight_f(part)
            other = size - part.length
            if size + other <= order:
                weight = partition_weight_g(part)
                g3[(size, other)] = g3.get((size, other), RatFun()) + weight
                g4[(other, size)] = g4.get((other, size), RatFun()) + weight
    ident = TruncSeries(order, inv)
    fser = TruncSeries(order, fsum)
    nilp = fser * fser * TruncSeries(order, g3) * TruncSeries(order, g4)
    return ident, nilp


def first_proof_series(order):
    """Decomposition of A_U into an invertible and a nilpotent part

    Returns
    -------
    record: FirstProofSeries
        I = Exp(L sum_{n>=1} (y0 y1)^n) and
        N = Exp(2L/(L-1) sum_{n>=1} (y0 y1)^n)
        * Exp(-q/(L-1) sum_{n>=1} (y0^n y1^(n-1) + y0^(n-1) y1^n))
        as series in y0, y1, their product, and both factors once
        more from partition sums
    """
    diag = range(1, order // 2 + 1)
    ident = exp_pleth(TruncSeries(order, {(n, n): L for n in diag}))
    nil_diag = exp_pleth(TruncSeries(
        order, {(n, n): 2 * L / (L - 1) for n in diag}))
    real = {}
    for n in range(1, order + 1):
        real[(n, n - 1)] = REAL_COEFF
        real[(n - 1, n)] = REAL_COEFF
    nilp = nil_diag * exp_pleth(TruncSeries(order, real))
    ident_part, nilp_part = _partition_route(order)
    return FirstProofSeries(I=ident, N=nilp, product=ident * nilp,
                            I_partitions=ident_part, N_partitions=nilp_part)
