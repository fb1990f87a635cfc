"""Framed quantum torus: A_U y_inf and its ray factorization"""
from ..conifold import CANONICAL_CHAMBERS, framed_series_suite, half_series
from ..torus import lift
from .report import SuiteReport, compare


#: framed computations are done at most at this order
MAX_ORDER = 6


def run_framed(order):
    order = min(order, MAX_ORDER)
    report = SuiteReport("framed", order)
    for name, zs in CANONICAL_CHAMBERS.items():
        record = report.compute(
            "{}: framed series and factorization".format(name),
            framed_series_suite, zs, order)
        if record is None:
            continue
        report.check("{}: (A+)^-1 A~_U (A-)^-1 = predicted".format(name),
                     compare, record.tilde_zeta, record.predicted)
        report.check("{}: predicted = y_inf Z(-q y0, y1)".format(name),
                     compare, record.predicted, record.from_z)
        plus, framed, minus = record.blocks
        report.check("{}: positive rays give A+".format(name),
                     lambda zs=zs, plus=plus: compare(
                         plus, lift(half_series(zs, "+", order))))
        report.check("{}: negative rays give A-".format(name),
                     lambda zs=zs, minus=minus: compare(
                         minus, lift(half_series(zs, "-", order))))
        report.check("{}: framing ray gives 1 + A~_zeta".format(name),
                     lambda record=record, framed=framed: compare(
                         framed, record.tilde_zeta + framed.one()))
        report.check("{}: ray factors multiply back".format(name),
                     lambda blocks=record.blocks, source=record.source:
                     compare(blocks[0] * blocks[1] * blocks[2], source))
    return report


recipe_framed = {
    "name": "framed",
    "descr": "framed series and ray factorization in the quantum torus",
    "runner": run_framed,
}
