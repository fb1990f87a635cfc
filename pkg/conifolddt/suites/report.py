import collections
import time


__all__ = ["CheckResult", "SuiteReport", "compare"]


#: outcome of a single check of a verification suite
CheckResult = collections.namedtuple(
    "CheckResult", ["name", "passed", "detail", "duration"])


class SuiteReport(object):
    """Container for the :class:`CheckResult` of one suite"""
    def __init__(self, suite, order=None):
        """
        Parameters
        ----------
        suite: str
            name of the verification suite
        order: int or None
            truncation order the suite was run at
        """
        self.suite = suite
        self.order = order
        self._checks = []

    def __iter__(self):
        return iter(self._checks)

    def __getitem__(self, idx):
        return self._checks[idx]

    def __len__(self):
        return len(self._checks)

    def __repr__(self):
        return f"<{self.__class__.__name__}: '{self.suite}' at {hex(id(self))}>"

    def __str__(self):
        rep = [f"{self.__class__.__name__}: '{self.suite}'"]
        for check in self._checks:
            rep.append("- {}".format(self.format_check(check)))
        return "\n".join(rep)

    @staticmethod
    def format_check(check):
        state = "PASS" if check.passed else "FAIL"
        line = "{:<4} {} ({:.2f}s)".format(state, check.name, check.duration)
        if check.detail:
            line += ": {}".format(check.detail)
        return line

    @property
    def passed(self):
        """True if all checks passed"""
        return all(check.passed for check in self._checks)

    def append(self, check):
        if not isinstance(check, CheckResult):
            raise ValueError("Expected CheckResult, got {}!".format(check))
        self._checks.append(check)

    def check(self, name, func, *args, **kwargs):
        """Run `func` and record whether it returned True

        `func` may also return a tuple (passed, detail). Exceptions
        derived from Exception count as failures with the exception
        message as detail.
        """
        tic = time.perf_counter()
        try:
            outcome = func(*args, **kwargs)
        except Exception as exc:
            passed = False
            detail = "{}: {}".format(exc.__class__.__name__, exc)
        else:
            if isinstance(outcome, tuple):
                passed, detail = outcome
            else:
                passed, detail = bool(outcome), ""
        result = CheckResult(name=name, passed=bool(passed), detail=detail,
                             duration=time.perf_counter() - tic)
        self.append(result)
        return result

    def compute(self, name, func, *args, **kwargs):
        """Run `func` as a check and return its value

        The check passes if `func` returns; if it raises, the failure
        is recorded and None is returned.
        """
        values = []

        def run():
            values.append(func(*args, **kwargs))
            return True

        self.check(name, run)
        return values[0] if values else None

    def to_json(self):
        return {"suite": self.suite,
                "order": self.order,
                "passed": self.passed,
                "checks": [check._asdict() for check in self._checks]}


def compare(left, right):
    """Equality check of two series with the first mismatch as detail"""
    if left == right:
        return True, ""
    keys = sorted(set(left.keys()) | set(right.keys()))
    for key in keys:
        if left[key] != right[key]:
            return False, "coefficient of {} differs: {} != {}".format(
                key, left[key], right[key])
    return False, "truncations differ"
