"""Chamber classification and wall-crossing consistency"""
from .. import errors
from ..conifold import CANONICAL_CHAMBERS, classify_chamber, half_series, \
    is_generic, universal_series, walls, z_series_framed, z_series_product
from ..torus import Stability
from .report import SuiteReport, compare


#: stability parameters on walls with the expected witness
WALL_CASES = [
    (Stability((-1, 1)), (1, 1)),
    (Stability((1, -1), (1, -1)), (1, 1)),
    (Stability((-2, 3)), (3, 2)),
    (Stability((-1, 2)), (2, 1)),
    (Stability((3, -2)), (2, 3)),
    (Stability((0, 1)), (1, 0)),
    (Stability((1, 0)), (0, 1)),
]


def _label(zs, expected):
    label = classify_chamber(zs)
    return label.name == expected, str(label)


def _wall(zs, witness):
    result = is_generic(zs)
    if result:
        return False, "classified as generic"
    return tuple(result.witness.vec) == witness, str(result.witness)


def _rejects(zs):
    try:
        classify_chamber(zs)
    except errors.NotGenericError:
        return True
    return False, "no NotGenericError"


def _laurent(zs, order):
    series = z_series_product(zs, order)
    bad = [key for key, value in series.items() if not value.is_laurent()]
    return not bad, "non-Laurent coefficients at {}".format(bad[:3])


def run_chambers(order):
    report = SuiteReport("chambers", order)
    for name, zs in CANONICAL_CHAMBERS.items():
        report.check("label of {}".format(name), _label, zs, name)
        report.check("label of {} rescaled".format(name), _label,
                     zs.scaled(7), name)
    for zs, witness in WALL_CASES:
        report.check("wall witness {}".format(witness), _wall, zs, witness)
        report.check("rejects {}".format(zs), _rejects, zs)
    report.check("wall normals",
                 lambda: [tuple(walls(k, 3).vec) for k in ("+", "-")]
                 == [(3, 2), (2, 3)])
    for name, zs in CANONICAL_CHAMBERS.items():
        report.check("{}: product route = framed route".format(name),
                     lambda zs=zs: compare(z_series_product(zs, order),
                                           z_series_framed(zs, order)))
        report.check("{}: A+ A- = A_U".format(name),
                     lambda zs=zs: compare(
                         half_series(zs, "+", order)
                         * half_series(zs, "-", order),
                         universal_series(order)))
        report.check("{}: Laurent coefficients".format(name), _laurent,
                     zs, order)
    return report


recipe_chambers = {
    "name": "chambers",
    "descr": "chamber labels, walls and chamber series by two routes",
    "runner": run_chambers,
}
