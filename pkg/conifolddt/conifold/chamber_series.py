"""Chamber series Z_zeta by the root product and by the framed algebra"""
import collections
import logging

from ..ring import L, Q, qpower
from ..series import product_family
from ..torus import lift, ray_factorize, y_infinity
from .chambers import negative_roots
from .quiver import IMAGINARY, Root
from .universal import half_series, universal_series


__all__ = ["FramedSuite", "framed_series_suite", "root_factor",
           "z_series_framed", "z_series_product"]

logger = logging.getLogger(__name__)


FramedSuite = collections.namedtuple(
    "FramedSuite",
    ["tilde_u", "tilde_zeta", "predicted", "from_z", "source", "blocks"])
FramedSuite.__doc__ = """Framed series of a chamber

- tilde_u: A_U y_inf (twisted product)
- tilde_zeta: (A^+)^-1 tilde_u (A^-)^-1
- predicted: y_inf A^-(L y0, y1)/A^-(y0, y1)
- from_z: y_inf Z_zeta(-q y0, y1)
- source: A_U (1 + y_inf), the series split by :func:`ray_factorize`
- blocks: (plus, framed, minus) products of the ray factors
"""


def root_factor(alpha):
    """Factors of Z_alpha(-y0, y1) as a `product_family` item

    Real roots give prod_{j<alpha0} (1 - q^(-alpha0+1+2j) y^alpha),
    imaginary roots prod_{j<alpha0} (1 - q^(-alpha0+2+2j) y^alpha)^-1
    (1 - q^(-alpha0+4+2j) y^alpha)^-1.
    """
    root = alpha if isinstance(alpha, Root) else Root(alpha)
    a0 = root.vec.a0
    if root.kind == IMAGINARY:
        coeffs = [qpower(-a0 + 2 + 2 * j) for j in range(a0)]
        coeffs += [qpower(-a0 + 4 + 2 * j) for j in range(a0)]
        return (tuple(root.vec), coeffs, -1)
    return (tuple(root.vec), [qpower(-a0 + 1 + 2 * j) for j in range(a0)], 1)


def z_series_product(zs, order):
    """Z_zeta(y0, y1) as the product of root factors over negative roots"""
    roots = negative_roots(zs, order) if order else []
    logger.debug("Chamber series of %s from %d negative roots",
                 zs, len(roots))
    signed = product_family([root_factor(r) for r in roots], order)
    return signed.scale_variable("y0", -1)


def z_series_framed(zs, order):
    """Z_zeta = A^-(-q y0, y1)/A^-(-q^-1 y0, y1)"""
    minus = half_series(zs, "-", order)
    upper = minus.scale_variable("y0", -Q)
    lower = minus.scale_variable("y0", -Q.inverse())
    return upper * lower.invert()


def framed_series_suite(zs, order):
    """Framed series of the chamber of zs, see :class:`FramedSuite`"""
    plus = half_series(zs, "+", order)
    minus = half_series(zs, "-", order)
    univ = universal_series(order)
    yinf = y_infinity(order)
    lplus = lift(plus)
    lminus = lift(minus)
    tilde_u = lift(univ) * yinf
    tilde_zeta = lplus.invert() * tilde_u * lminus.invert()
    ratio = minus.scale_variable("y0", L) * minus.invert()
    predicted = yinf * lift(ratio)
    zser = z_series_product(zs, order)
    from_z = yinf * lift(zser.scale_variable("y0", -Q))
    source = lift(univ) * (yinf + yinf.one())
    logger.debug("Ray factorization of A_U (1 + y_inf) for %s", zs)
    factors = ray_factorize(source, zs)
    blocks = [source.one(), source.one(), source.one()]
    for ray, factor in factors:
        if ray.framed:
            idx = 1
        elif ray.slope > 0:
            idx = 0
        else:
            idx = 2
        blocks[idx] = blocks[idx] * factor
    return FramedSuite(tilde_u=tilde_u, tilde_zeta=tilde_zeta,
                       predicted=predicted, from_z=from_z, source=source,
                       blocks=tuple(blocks))
