"""DT, PT and Hilbert scheme series in the large radius variables

Series are returned in s = y0 y1 and T = 1/y1 with coefficients of
Z(s, T); the closed product forms are stated for Z(-s, T).
"""
from ..plethystic import exp_pleth
from ..ring import qpower
from ..series import GeomSeries, euler_series, product_family, \
    to_geometric
from .chambers import CANONICAL_CHAMBERS
from .chamber_series import z_series_product


__all__ = ["NAMED_SERIES", "euler_closed_form", "euler_of_named",
           "named_series", "signed", "vertex_pt"]

#: series available in :func:`named_series`
NAMED_SERIES = ["PT", "DT", "HILB", "NCDT", "MACMAHON"]


def _pt_factors(s_order):
    for m in range(1, s_order + 1):
        yield ((m, 1), [qpower(-m + 1 + 2 * j) for j in range(m)], 1)


def _hilb_factors(s_order):
    for m in range(1, s_order + 1):
        coeffs = [qpower(-m + 2 + 2 * j) for j in range(m)]
        coeffs += [qpower(-m + 4 + 2 * j) for j in range(m)]
        yield ((m, 0), coeffs, -1)


def _macmahon_factors(s_order):
    for m in range(1, s_order + 1):
        yield ((m, 0), [1] * m, -1)


def signed(series):
    """Substitute s -> -s (or y0 -> -y0)"""
    return series.scale_variable(0, -1)


def named_series(which, order=(6, 3)):
    """Named generating series as a GeomSeries

    Parameters
    ----------
    which: str
        one of "PT", "DT", "HILB", "NCDT" or "MACMAHON"
    order: tuple of int
        (s_order, t_order)

    Notes
    -----
    NCDT is the chamber series of the noncommutative chamber; its
    monomials y0^a y1^b with a < b have negative T-exponents, so the
    result cannot be multiplied.
    """
    s_order, t_order = order
    if which == "PT":
        return signed(product_family(_pt_factors(s_order), order))
    elif which == "HILB":
        return signed(product_family(_hilb_factors(s_order), order))
    elif which == "DT":
        factors = list(_pt_factors(s_order)) + list(_hilb_factors(s_order))
        return signed(product_family(factors, order))
    elif which == "MACMAHON":
        return product_family(_macmahon_factors(s_order), order)
    elif which == "NCDT":
        zser = z_series_product(CANONICAL_CHAMBERS["NCDT"],
                                2 * s_order + t_order)
        return to_geometric(zser, allow_negative_curve=True,
                            s_order=s_order, t_order=t_order)
    raise ValueError("Unknown series '{}', expected one of {}!".format(
        which, NAMED_SERIES))


def vertex_pt(s_order=6, t_order=3, form="product"):
    """Refined vertex with one leg after the change of variables

    Equals Z_PT(-s, T). The product form is
    prod_{i,j>=1} (1 - T q^(i-j) s^(i+j-1)), the exp form
    Exp(-sum_{i,j>=0} q^(i-j) s^(i+j+1) T).
    """
    if form == "product":
        factors = []
        for i in range(1, s_order + 1):
            for j in range(1, s_order + 2 - i):
                factors.append(((i + j - 1, 1), [qpower(i - j)], 1))
        return product_family(factors, (s_order, t_order))
    elif form == "exp":
        arg = {}
        for i in range(s_order):
            for j in range(s_order - i):
                key = (i + j + 1, 1)
                arg[key] = arg.get(key, 0) - qpower(i - j)
        return exp_pleth(GeomSeries(s_order, t_order, arg))
    raise ValueError("Unknown form '{}'!".format(form))


def euler_closed_form(which, order):
    """q -> 1 limit of the signed series as an independent product

    Parameters
    ----------
    which: str
        "PT": prod (1 - T s^m)^m; "HILB": M(s)^2; "DT": M(s)^2
        prod (1 - T s^m)^m; "NCDT": prod (1 - y0^m y1^(m-1))^m
        (1 - y0^(m-1) y1^m)^(m-1) (1 - y0^m y1^m)^(-2m)
    order: tuple of int or int
        (s_order, t_order) for the geometric series, the total
        degree in y0, y1 for "NCDT"
    """
    if which == "NCDT":
        factors = []
        for m in range(1, order + 1):
            factors.append(((m, m - 1), [1] * m, 1))
            factors.append(((m - 1, m), [1] * (m - 1), 1))
            factors.append(((m, m), [1] * (2 * m), -1))
        return product_family(factors, order)
    s_order = order[0]
    pt = [((m, 1), [1] * m, 1) for m in range(1, s_order + 1)]
    hilb = [((m, 0), [1] * (2 * m), -1) for m in range(1, s_order + 1)]
    if which == "PT":
        return product_family(pt, order)
    elif which == "HILB":
        return product_family(hilb, order)
    elif which == "DT":
        return product_family(pt + hilb, order)
    raise ValueError("No closed Euler form for '{}'!".format(which))


def euler_of_named(which, order):
    """Euler specialization of the signed named series"""
    if which == "NCDT":
        zser = z_series_product(CANONICAL_CHAMBERS["NCDT"], order)
        return euler_series(signed(zser))
    return euler_series(signed(named_series(which, order)))
