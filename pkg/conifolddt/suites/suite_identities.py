"""Lambda-ring identities: Exp/Log, Adams operations, power structure"""
from ..plethystic import adams, exp_pleth, heine_sides, hua_one_loop, \
    log_pleth, partition_sum_f, partition_sum_f_closed, partition_sum_g, \
    partition_sum_g_closed, pow_pleth
from ..ring import L, Q
from ..series import TruncSeries
from .report import SuiteReport, compare


def _sample_series(order):
    """Two series without constant term with generic coefficients"""
    f = TruncSeries(order, {(1, 0): Q, (0, 1): -L / (L - 1),
                            (1, 1): 3, (2, 1): Q / (1 + L)})
    g = TruncSeries(order, {(1, 0): 1 - Q, (0, 2): L * L,
                            (1, 1): -Q / (L - 1)})
    return f, g


def run_identities(order):
    report = SuiteReport("identities", order)
    f, g = _sample_series(order)
    one = f.one()
    report.check("Log(Exp(f)) = f",
                 lambda: compare(log_pleth(exp_pleth(f)), f))
    report.check("Exp(Log(1+g)) = 1+g",
                 lambda: compare(exp_pleth(log_pleth(one + g)), one + g))
    report.check("Exp(f+g) = Exp(f) Exp(g)",
                 lambda: compare(exp_pleth(f + g),
                                 exp_pleth(f) * exp_pleth(g)))
    report.check("psi_2 psi_3 = psi_6",
                 lambda: compare(adams(2, adams(3, f)), adams(6, f)))
    report.check("psi_2 is multiplicative",
                 lambda: compare(adams(2, f * g), adams(2, f) * adams(2, g)))
    exps = report.compute("Exp of the samples",
                          lambda: (exp_pleth(f), exp_pleth(g)))
    if exps is not None:
        big, other = exps
        report.check("Pow(F, a+b) = Pow(F, a) Pow(F, b)",
                     lambda: compare(pow_pleth(big, Q + L),
                                     pow_pleth(big, Q) * pow_pleth(big, L)))
        report.check("Pow(F G, a) = Pow(F, a) Pow(G, a)",
                     lambda: compare(pow_pleth(big * other, Q),
                                     pow_pleth(big, Q)
                                     * pow_pleth(other, Q)))
    report.check("Hua formula for one loop",
                 lambda: compare(*hua_one_loop(order)))
    report.check("Heine formula", lambda: compare(*heine_sides(order)))
    report.check("partition sum f",
                 lambda: compare(partition_sum_f(order),
                                 partition_sum_f_closed(order)))
    report.check("partition sum g",
                 lambda: compare(partition_sum_g(order),
                                 partition_sum_g_closed(order)))
    return report


recipe_identities = {
    "name": "identities",
    "descr": "plethystic Exp/Log, Adams operations, Hua and Heine",
    "runner": run_identities,
}
