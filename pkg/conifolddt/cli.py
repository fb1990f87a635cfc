"""Command line interface of conifolddt

Exit codes: 0 on success, 1 if a requested check fails and 2 on
usage errors.
"""
import argparse
import json
import logging
import sys

from . import errors, oracle
from ._version import version
from .conifold import FORMS, NAMED_SERIES, chamber_to_json, \
    euler_closed_form, euler_of_named, named_series, universal_series, \
    vertex_pt, z_series_framed, z_series_product
from .parse_funcs import fdimvec, fint_nonneg, fint_positive, fprime, \
    fvector
from .settings import get_settings
from .suites import SuiteReport, run_suites, suites_available
from .suites.report import compare
from .torus import Stability


__all__ = ["main", "run"]

logger = logging.getLogger(__name__)

#: exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _add_output(parser):
    parser.add_argument("--output", choices=["text", "json"], default="text",
                        help="output format (default: text)")


def _add_stability(parser):
    parser.add_argument("--zeta", type=fvector, required=True,
                        help="stability parameter 'r0,r1' (rationals p/q)")
    parser.add_argument("--eps", type=fvector, default=(0, 0),
                        help="infinitesimal direction 'e0,e1'")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="conifolddt",
        description="Motivic DT invariants of the conifold quiver")
    parser.add_argument("--version", action="version",
                        version="%(prog)s {}".format(version))
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="increase logging verbosity (repeatable)")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    cmd = sub.add_parser("universal", help="universal DT series A_U")
    cmd.add_argument("--order", type=fint_nonneg, default=None)
    cmd.add_argument("--form", choices=FORMS, default="exp")
    _add_output(cmd)

    cmd = sub.add_parser("zeta", help="chamber series Z_zeta")
    _add_stability(cmd)
    cmd.add_argument("--order", type=fint_nonneg, default=None)
    cmd.add_argument("--route", choices=["product", "framed"],
                     default="product")
    _add_output(cmd)

    cmd = sub.add_parser("chamber", help="classify a stability parameter")
    _add_stability(cmd)
    cmd.add_argument("--root-bound", type=fint_positive, default=None)

    cmd = sub.add_parser("dtpt", help="DT, PT and Hilbert scheme series")
    cmd.add_argument("--s-order", type=fint_nonneg, default=None)
    cmd.add_argument("--t-order", type=fint_nonneg, default=None)
    cmd.add_argument("--which", choices=NAMED_SERIES, default="PT")
    cmd.add_argument("--check-factorization", action="store_true",
                     help="check Z_DT = Z_HILB Z_PT")
    cmd.add_argument("--euler", action="store_true",
                     help="check the q -> 1 limits")
    _add_output(cmd)

    cmd = sub.add_parser("vertex", help="refined vertex with one leg")
    cmd.add_argument("--s-order", type=fint_nonneg, default=None)
    cmd.add_argument("--t-order", type=fint_nonneg, default=None)
    cmd.add_argument("--form", choices=["product", "exp"],
                     default="product")
    _add_output(cmd)

    cmd = sub.add_parser("count", help="finite-field point count")
    cmd.add_argument("--alpha", type=fdimvec, required=True)
    cmd.add_argument("--prime", type=fprime, required=True)
    cmd.add_argument("--cap", type=fint_positive, default=None)
    cmd.add_argument("--workers", type=fint_positive, default=None)
    cmd.add_argument("--strata", action="store_true",
                     help="add counts per stratum")

    cmd = sub.add_parser("verify", help="run verification suites")
    cmd.add_argument("--suite", default="all",
                     choices=[s.name for s in suites_available] + ["all"])
    cmd.add_argument("--order", type=fint_nonneg, default=None)
    cmd.add_argument("--jobs", type=fint_positive, default=1)
    return parser


def _emit(series, output, stream):
    if output == "json":
        stream.write(series.dumps() + "\n")
    else:
        stream.write(series.to_text() + "\n")


def _stability(args):
    try:
        return Stability(args.zeta, args.eps)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_universal(args, settings, stream):
    order = settings["order"]
    _emit(universal_series(order, args.form), args.output, stream)
    return EXIT_OK


def cmd_zeta(args, settings, stream):
    zs = _stability(args)
    order = settings["order"]
    if args.route == "product":
        series = z_series_product(zs, order)
    else:
        series = z_series_framed(zs, order)
    _emit(series, args.output, stream)
    return EXIT_OK


def cmd_chamber(args, settings, stream):
    zs = _stability(args)
    data = chamber_to_json(zs, settings["root bound"])
    stream.write(json.dumps(data, sort_keys=True) + "\n")
    return EXIT_OK


def _report_check(name, outcome):
    passed, detail = outcome
    sys.stderr.write("{}: {}{}\n".format(
        name, "PASS" if passed else "FAIL",
        " ({})".format(detail) if detail else ""))
    return passed


def cmd_dtpt(args, settings, stream):
    order = (settings["s order"], settings["t order"])
    _emit(named_series(args.which, order), args.output, stream)
    passed = True
    if args.check_factorization:
        passed &= _report_check(
            "factorization", compare(
                named_series("DT", order),
                named_series("HILB", order) * named_series("PT", order)))
    if args.euler:
        for name in ("PT", "HILB", "DT"):
            passed &= _report_check(
                "euler {}".format(name),
                compare(euler_of_named(name, order),
                        euler_closed_form(name, order)))
    return EXIT_OK if passed else EXIT_FAILED


def cmd_vertex(args, settings, stream):
    series = vertex_pt(settings["s order"], settings["t order"], args.form)
    _emit(series, args.output, stream)
    return EXIT_OK


def cmd_count(args, settings, stream):
    query = oracle.CountQuery(args.alpha, args.prime, settings["cap"])
    count = oracle.count_cut_reps(query, workers=settings["workers"])
    predicted = oracle.predicted_count(query.alpha, query.p)
    data = {"alpha": list(query.alpha), "p": query.p, "count": count,
            "predicted": predicted, "match": count == predicted}
    if args.strata:
        counted = oracle.count_strata(query, workers=settings["workers"])
        expected = oracle.predicted_strata(query.alpha, query.p)
        data["strata"] = {
            "count": {str(k): v for k, v in counted.items()},
            "predicted": {str(k): v for k, v in expected.items()},
            "match": counted == expected,
        }
        data["match"] = data["match"] and counted == expected
    stream.write(json.dumps(data, sort_keys=True) + "\n")
    return EXIT_OK if data["match"] else EXIT_FAILED


def cmd_verify(args, settings, stream):
    reports = run_suites([args.suite], settings["order"], jobs=args.jobs)
    failed = 0
    total = 0
    for report in reports:
        stream.write("[{}]\n".format(report.suite))
        for check in report:
            stream.write("  {}\n".format(SuiteReport.format_check(check)))
            total += 1
            failed += not check.passed
    stream.write("{} of {} checks passed\n".format(total - failed, total))
    return EXIT_OK if failed == 0 else EXIT_FAILED


COMMANDS = {
    "universal": cmd_universal,
    "zeta": cmd_zeta,
    "chamber": cmd_chamber,
    "dtpt": cmd_dtpt,
    "vertex": cmd_vertex,
    "count": cmd_count,
    "verify": cmd_verify,
}


def _setup_logging(verbosity):
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbosity, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _join_vectors(argv):
    """Attach values like "-1,1" to their option (argparse sees a flag)"""
    joined = []
    argv = list(argv)
    while argv:
        token = argv.pop(0)
        if token in ("--zeta", "--eps") and argv:
            token = "{}={}".format(token, argv.pop(0))
        joined.append(token)
    return joined


def run(argv=None, stream=None):
    """Run the command line interface

    Parameters
    ----------
    argv: list of str or None
        arguments (defaults to `sys.argv[1:]`)
    stream: file-like or None
        output stream (defaults to `sys.stdout`)

    Returns
    -------
    exit_code: int
    """
    if stream is None:
        stream = sys.stdout
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_join_vectors(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    _setup_logging(args.verbose)
    overrides = {key: getattr(args, key, None)
                 for key in ("order", "s_order", "t_order", "root_bound",
                             "cap", "workers")}
    try:
        settings = get_settings(**overrides)
        logger.debug("Running '%s' with %s", args.command, dict(settings))
        return COMMANDS[args.command](args, settings, stream)
    except (UsageError, ValueError, errors.NotGenericError,
            errors.EnumerationTooLargeError) as exc:
        sys.stderr.write("conifolddt {}: error: {}\n".format(args.command,
                                                             exc))
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
