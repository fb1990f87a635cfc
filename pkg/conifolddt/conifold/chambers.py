"""Walls and chambers of the conifold stability space

A stability parameter zeta (with infinitesimal part) pairs with the
three root families as linear functions of the family index m:

- (m, m-1): m (zeta0 + zeta1) - zeta1
- (m-1, m): m (zeta0 + zeta1) - zeta0
- (m, m):   m (zeta0 + zeta1)

Genericity and the chamber label are therefore decided exactly for
all m >= 1 at once.
"""
import collections
from fractions import Fraction
import math

from .. import errors
from ..torus import DualNumber, Stability
from .quiver import IMAGINARY, REAL, Root, roots_up_to


__all__ = ["CANONICAL_CHAMBERS", "CHAMBER_NAMES", "ChamberLabel",
           "GenericityResult", "chamber_to_json", "classify_chamber",
           "is_generic", "negative_roots", "positive_roots", "walls"]


#: names of the chambers with a geometric meaning
CHAMBER_NAMES = ["NCDT", "DT_Y", "PT_Y", "DT_Yflop", "PT_Yflop", "Empty"]

#: one stability parameter inside each named chamber
CANONICAL_CHAMBERS = collections.OrderedDict([
    ("NCDT", Stability((-1, -1))),
    ("DT_Y", Stability((-1, 1), (-1, 0))),
    ("PT_Y", Stability((-1, 1), (1, 0))),
    ("DT_Yflop", Stability((1, -1), (0, -1))),
    ("PT_Yflop", Stability((1, -1), (0, 1))),
    ("Empty", Stability((1, 1))),
])

#: sign patterns of the families ((m,m-1), (m,m), (m-1,m))
_PATTERNS = {
    ("all", "all", "all"): "NCDT",
    ("all", "all", "none"): "DT_Y",
    ("all", "none", "none"): "PT_Y",
    ("none", "all", "all"): "DT_Yflop",
    ("none", "none", "all"): "PT_Yflop",
    ("none", "none", "none"): "Empty",
}


class ChamberLabel(collections.namedtuple("ChamberLabel",
                                          ["name", "description"])):
    """Chamber label; `description` is only set for "Other" """
    __slots__ = ()

    def __new__(cls, name, description=None):
        if name not in CHAMBER_NAMES + ["Other"]:
            raise ValueError("Unknown chamber name '{}'!".format(name))
        return super(ChamberLabel, cls).__new__(cls, name, description)

    def __str__(self):
        if self.description:
            return "{}({})".format(self.name, self.description)
        return self.name


class GenericityResult(object):
    """Outcome of the wall test, truthy if generic"""
    def __init__(self, generic, witness=None):
        self.generic = bool(generic)
        #: root orthogonal to the stability parameter
        self.witness = witness

    def __bool__(self):
        return self.generic

    def __repr__(self):
        return "GenericityResult(generic={}, witness={})".format(
            self.generic, self.witness)


def _families(zs):
    """(slope, offset) of the families as functions m*slope - offset"""
    z0 = DualNumber(zs.zeta[0], zs.eps[0])
    z1 = DualNumber(zs.zeta[1], zs.eps[1])
    total = z0 + z1
    return total, z1, z0


def _positive_multiple(s, c):
    """Positive integer m with m*s == c (dual numbers) or None"""
    if s.rat:
        m = c.rat / s.rat
    elif s.eps:
        if c.rat:
            return None
        m = c.eps / s.eps
    else:
        return None
    if m.denominator != 1 or m < 1 or s * m != c:
        return None
    return int(m)


def walls(kind, m=1):
    """Normal vector (a root) of a wall line

    Parameters
    ----------
    kind: str
        "+" for L+(m) (orthogonal to (m, m-1)), "-" for L-(m)
        (orthogonal to (m-1, m)) or "inf" for the line orthogonal
        to (1, 1)
    m: int
        family index (m >= 1), ignored for "inf"
    """
    if kind == "inf":
        return Root((1, 1), IMAGINARY)
    if m < 1:
        raise ValueError("Wall index must be positive, got {}!".format(m))
    if kind == "+":
        return Root((m, m - 1), REAL)
    elif kind == "-":
        return Root((m - 1, m), REAL)
    raise ValueError("Unknown wall kind '{}'!".format(kind))


def is_generic(zs):
    """Decide whether zs is orthogonal to no positive root

    Returns
    -------
    result: GenericityResult
        truthy if generic; otherwise `witness` holds a root with
        zeta.alpha = 0
    """
    total, z1, z0 = _families(zs)
    if total == 0:
        return GenericityResult(False, walls("inf"))
    m = _positive_multiple(total, z1)
    if m is not None:
        return GenericityResult(False, walls("+", m))
    m = _positive_multiple(total, z0)
    if m is not None:
        return GenericityResult(False, walls("-", m))
    return GenericityResult(True)


def _check_generic(zs):
    result = is_generic(zs)
    if not result:
        raise errors.NotGenericError(
            result.witness, "Stability parameter {} lies on the wall of "
            "root {}!".format(zs, tuple(result.witness.vec)))


def negative_roots(zs, bound):
    """Roots alpha with zeta.alpha < 0 and |alpha| <= bound"""
    _check_generic(zs)
    return [r for r in roots_up_to(bound) if zs.pair(r.vec).sign() < 0]


def positive_roots(zs, bound):
    """Roots alpha with zeta.alpha > 0 and |alpha| <= bound"""
    _check_generic(zs)
    return [r for r in roots_up_to(bound) if zs.pair(r.vec).sign() > 0]


def _limit_sign(s, c):
    """Sign of m*s - c for all large m"""
    if s.rat:
        return 1 if s.rat > 0 else -1
    elif c.rat:
        return -1 if c.rat > 0 else 1
    return (s - c).sign() if not s.eps else (1 if s.eps > 0 else -1)


def _family_pattern(s, c):
    """'all', 'none' or 'mixed' for the signs of m*s - c, m >= 1

    The sequence is monotone in m, so the sign at m=1 and the
    limit sign decide.
    """
    first = (s - c).sign()
    limit = _limit_sign(s, c)
    if first < 0 and limit < 0:
        return "all"
    elif first > 0 and limit > 0:
        return "none"
    return "mixed"


def _last_index(s, c):
    """Largest m >= 1 where m*s - c has the sign it has at m=1"""
    crossing = c.rat / s.rat if s.rat else c.eps / s.eps
    first = (s - c).sign()
    m = max(1, math.floor(crossing) - 1)
    while (s * (m + 1) - c).sign() == first:
        m += 1
    return m


def _describe(name, s, c):
    m = _last_index(s, c)
    if (s - c).sign() < 0:
        return "{} for m<={}".format(name, m)
    return "{} for m>{}".format(name, m)


def classify_chamber(zs, bound=None):
    """Chamber label of a generic stability parameter

    Parameters
    ----------
    zs: Stability
        generic stability parameter
    bound: int or None
        unused for the decision (the sign pattern is exact in m);
        kept for the call signature of :func:`negative_roots`

    Returns
    -------
    label: ChamberLabel
    """
    _check_generic(zs)
    total, z1, z0 = _families(zs)
    zero = DualNumber(0)
    families = [("(m,m-1)", total, z1), ("(m,m)", total, zero),
                ("(m-1,m)", total, z0)]
    pattern = tuple(_family_pattern(s, c) for _, s, c in families)
    if pattern in _PATTERNS:
        return ChamberLabel(_PATTERNS[pattern])
    parts = []
    for (name, s, c), kind in zip(families, pattern):
        if kind == "all":
            parts.append("{} for all m".format(name))
        elif kind == "mixed":
            parts.append(_describe(name, s, c))
    return ChamberLabel("Other", "negative roots: " + "; ".join(parts))


def chamber_to_json(zs, bound):
    """JSON-ready summary of the chamber of zs"""
    result = is_generic(zs)
    data = {"zeta": [str(Fraction(z)) for z in zs.zeta],
            "eps": [str(Fraction(e)) for e in zs.eps]}
    if not result:
        data.update({"label": None, "generic": False, "negative_roots": [],
                     "witness": list(result.witness.vec)})
        return data
    label = classify_chamber(zs, bound)
    data.update({
        "label": label.name,
        "generic": True,
        "negative_roots": [list(r.vec) for r in negative_roots(zs, bound)],
        "witness": None,
    })
    if label.description:
        data["description"] = label.description
    return data
