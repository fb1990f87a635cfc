import logging
import multiprocessing
import time

from .report import CheckResult, SuiteReport, compare
from .suite_chambers import recipe_chambers
from .suite_counts import recipe_counts
from .suite_dtpt import recipe_dtpt
from .suite_framed import recipe_framed
from .suite_identities import recipe_identities
from .suite_universal import recipe_universal
from .suite_vertex import recipe_vertex


__all__ = ["CheckResult", "SuiteReport", "VerificationSuite", "compare",
           "get_suite", "register_suite", "run_suite", "run_suites",
           "suites_available", "suites_by_name"]

logger = logging.getLogger(__name__)


class VerificationSuite(object):
    def __init__(self, recipe):
        """A wrapper class for verification suite recipes

        Parameters
        ----------
        recipe: dict
            suite recipe with the keys "name", "descr" and "runner"
        """
        self.recipe = recipe

        # check runner
        if not callable(self.runner):
            raise ValueError(
                "'runner' must be callable: '{}'".format(self.runner))
        self.origin = self.runner.__module__

    def __getitem__(self, key):
        return getattr(self, key)

    def __repr__(self):
        repre = "<{} '{}' from '{}' at {}>".format(self.__class__.__name__,
                                                   self.name,
                                                   self.origin,
                                                   hex(id(self)))
        return repre

    @property
    def descr(self):
        """description of the suite"""
        return self.recipe.get("descr", "no description")

    @property
    def name(self):
        """name used on the command line"""
        if "name" in self.recipe:
            return self.recipe["name"]
        else:
            raise ValueError("No name defined for recipe {}!".format(
                self.recipe))

    @property
    def runner(self):
        """method running the suite for a given order"""
        if "runner" in self.recipe:
            return self.recipe["runner"]
        else:
            raise ValueError("No runner defined!")

    def run(self, order):
        tic = time.perf_counter()
        report = self.runner(order)
        logger.info("Suite '%s' at order %d: %d checks in %.2fs",
                    self.name, order, len(report),
                    time.perf_counter() - tic)
        return report


def get_suite(name):
    """Return the verification suite registered under `name`"""
    if name not in suites_by_name:
        raise KeyError("Unknown suite '{}', expected one of {}!".format(
            name, sorted(suites_by_name)))
    return suites_by_name[name]


def run_suite(name, order):
    """Run a single suite and return its SuiteReport"""
    return get_suite(name).run(order)


def _run_suite_star(args):
    return run_suite(*args)


def run_suites(names, order, jobs=1):
    """Run several suites, optionally in parallel processes

    Parameters
    ----------
    names: list of str or "all"
        suite names
    order: int
        truncation order passed to every suite
    jobs: int
        number of processes; reports are returned in registry
        order regardless of completion order

    Returns
    -------
    reports: list of SuiteReport
    """
    if names == "all" or "all" in names:
        names = [suite.name for suite in suites_available]
    else:
        names = [get_suite(n).name for n in names]
        names = [s.name for s in suites_available if s.name in names]
    tasks = [(name, order) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            reports = pool.map(_run_suite_star, tasks)
    else:
        reports = [_run_suite_star(t) for t in tasks]
    return reports


def register_suite(recipe):
    """Registers a verification suite from a recipe dictionary"""
    vsu = VerificationSuite(recipe)
    if vsu.name in suites_by_name:
        raise ValueError("Suite '{}' is already registered!".format(
            vsu.name))
    suites_available.append(vsu)
    suites_by_name[vsu.name] = vsu


#: available verification suites in registry order
suites_available = []

#: available verification suites by name
suites_by_name = {}

for _recipe in [
    recipe_identities,
    recipe_universal,
    recipe_counts,
    recipe_chambers,
    recipe_framed,
    recipe_dtpt,
    recipe_vertex,
]:
    register_suite(_recipe)
