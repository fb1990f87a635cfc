"""DT, PT and Hilbert scheme series of the resolved conifold"""
from ..conifold import CANONICAL_CHAMBERS, euler_closed_form, \
    euler_of_named, named_series, signed, z_series_product
from ..ring import L, Q, minus_q_power
from ..series import euler_series, to_geometric
from .report import SuiteReport, compare


#: T-truncation of the geometric series
T_ORDER = 3


def _hilb_first(order):
    hilb = signed(named_series("HILB", order))
    value = hilb[(1, 0)]
    motive = minus_q_power(-3) * (L ** 2 + L ** 3)
    passed = value == Q + Q ** 3 and -value == motive
    return passed, "coefficient {}".format(value)


def _chamber_route(name, order):
    s_order, t_order = order
    zser = z_series_product(CANONICAL_CHAMBERS[name + "_Y"],
                            2 * s_order + t_order)
    geo = to_geometric(zser, s_order=s_order, t_order=t_order)
    return compare(geo, named_series(name, order))


def _dt_pt_ratio(order):
    """T^0 part of DT/PT is the Hilbert series"""
    dt = named_series("DT", order)
    ratio = dt * named_series("PT", order).invert()
    degree_zero = ratio._like({k: v for k, v in ratio.items() if k[1] == 0})
    return compare(degree_zero, named_series("HILB", order))


def _hilb_macmahon(order):
    macmahon = named_series("MACMAHON", order)
    return compare(euler_of_named("HILB", order),
                   euler_series(macmahon * macmahon))


def run_dtpt(order):
    geo = (order, T_ORDER)
    report = SuiteReport("dtpt", order)
    report.check("Z_DT = Z_HILB Z_PT",
                 lambda: compare(named_series("DT", geo),
                                 named_series("HILB", geo)
                                 * named_series("PT", geo)))
    report.check("T^0 part of Z_DT/Z_PT = Z_HILB", _dt_pt_ratio, geo)
    report.check("Hilbert scheme of one point", _hilb_first, geo)
    report.check("PT coefficient of s T",
                 lambda: (signed(named_series("PT", geo))[(1, 1)] == -1,
                          ""))
    for name in ("DT", "PT"):
        report.check("{} from the chamber series".format(name),
                     _chamber_route, name, geo)
    for name in ("PT", "HILB", "DT"):
        report.check("Euler limit of {}".format(name),
                     lambda name=name: compare(
                         euler_of_named(name, geo),
                         euler_closed_form(name, geo)))
    report.check("Euler limit of HILB = M(s)^2", _hilb_macmahon, geo)
    report.check("Euler limit of NCDT",
                 lambda: compare(euler_of_named("NCDT", order),
                                 euler_closed_form("NCDT", order)))
    return report


recipe_dtpt = {
    "name": "dtpt",
    "descr": "DT/PT factorization, Hilbert scheme and Euler limits",
    "runner": run_dtpt,
}
