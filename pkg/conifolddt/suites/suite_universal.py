"""Universal series: exp form, root product and first proof"""
from ..conifold import first_proof_series, universal_series
from ..ring import L, Q
from .report import SuiteReport, compare


#: known coefficients of A_U
KNOWN_COEFFICIENTS = [
    ((1, 0), -Q / (L - 1)),
    ((0, 1), -Q / (L - 1)),
    ((1, 1), L ** 3 / (L - 1) ** 2),
    ((2, 0), L / ((L - 1) ** 2 * (L + 1))),
]


def _coefficient(order, key, expected):
    value = universal_series(order)[key]
    return value == expected, "{} (expected {})".format(value, expected)


def run_universal(order):
    report = SuiteReport("universal", order)
    report.check("exp form = product form",
                 lambda: compare(universal_series(order),
                                 universal_series(order, "product")))
    record = report.compute("first proof decomposition",
                            first_proof_series, order)
    if record is not None:
        report.check("I(y0 y1) N(y0, y1) = A_U",
                     lambda: compare(record.product,
                                     universal_series(order)))
        report.check("I from partitions",
                     lambda: compare(record.I_partitions, record.I))
        report.check("N from partitions",
                     lambda: compare(record.N_partitions, record.N))
    for key, expected in KNOWN_COEFFICIENTS:
        if sum(key) <= order:
            report.check("coefficient of y^{}".format(key), _coefficient,
                         order, key, expected)
    return report


recipe_universal = {
    "name": "universal",
    "descr": "universal DT series by three routes",
    "runner": run_universal,
}
