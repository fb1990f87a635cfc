"""Refined vertex with one nontrivial leg against Z_PT"""
from ..conifold import named_series, signed, vertex_pt
from ..ring import Q
from .report import SuiteReport, compare


def run_vertex(order):
    s_order, t_order = min(order, 6), 3
    report = SuiteReport("vertex", order)
    report.check("vertex = Z_PT(-s, T)",
                 lambda: compare(vertex_pt(s_order, t_order),
                                 signed(named_series("PT",
                                                     (s_order, t_order)))))
    report.check("product form = exp form",
                 lambda: compare(vertex_pt(s_order, t_order),
                                 vertex_pt(s_order, t_order, "exp")))
    if s_order >= 2:
        report.check("coefficient of T s^2",
                     lambda: vertex_pt(s_order, t_order)[(2, 1)]
                     == -(Q + Q.inverse()))
    return report


recipe_vertex = {
    "name": "vertex",
    "descr": "refined topological vertex versus the PT series",
    "runner": run_vertex,
}
