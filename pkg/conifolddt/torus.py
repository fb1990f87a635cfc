"""Twisted motivic algebra of the framed conifold quiver

Monomials y^a with a = (a0, a1, ainf) multiply as
y^a y^b = (-q)^<a,b> y^(a+b). Stability parameters carry a
first-order infinitesimal part so that slopes compare exactly.
"""
import collections
from fractions import Fraction
import functools
import json
import numbers

from . import errors
from .ring import ONE, RatFun, minus_q_power
from .series import DimVec, SeriesBase, TruncSeries


__all__ = ["FRAMED_CONIFOLD_ARROWS", "DualNumber", "FramedDimVec",
           "FramedSeries", "Ray", "Stability", "euler_form",
           "factorization_to_json", "lift",
           "ray_factorize", "skew_form", "slope", "twisted_invert",
           "twisted_mul", "y_infinity"]


#: framed dimension vector (a0, a1, ainf)
FramedDimVec = collections.namedtuple("FramedDimVec", ["a0", "a1", "ainf"])

#: arrows (name, source, target) of the framed conifold quiver;
#: vertex 2 is the framing vertex
FRAMED_CONIFOLD_ARROWS = (
    ("a1", 0, 1),
    ("a2", 0, 1),
    ("b1", 1, 0),
    ("b2", 1, 0),
    ("i", 2, 0),
)


def _framed(vec):
    vec = tuple(vec)
    if len(vec) == 2:
        vec = vec + (0,)
    return vec


def euler_form(a, b, arrows=FRAMED_CONIFOLD_ARROWS):
    """Euler-Ringel form chi(a, b) = sum a_i b_i - sum_arrows a_s b_t"""
    a = _framed(a)
    b = _framed(b)
    chi = sum(x * y for x, y in zip(a, b))
    for _, source, target in arrows:
        chi -= a[source] * b[target]
    return chi


def skew_form(a, b, arrows=FRAMED_CONIFOLD_ARROWS):
    """Skew form <a, b> = chi(a, b) - chi(b, a)"""
    return euler_form(a, b, arrows) - euler_form(b, a, arrows)


@functools.total_ordering
class DualNumber(object):
    """Exact number rat + eps * e with an infinitesimal e > 0"""
    __slots__ = ("rat", "eps")

    def __init__(self, rat=0, eps=0):
        self.rat = Fraction(rat)
        self.eps = Fraction(eps)

    def _key(self):
        return (self.rat, self.eps)

    def __eq__(self, other):
        if not isinstance(other, (DualNumber, numbers.Rational)):
            return NotImplemented
        other = _as_dual(other)
        return self._key() == other._key()

    def __lt__(self, other):
        other = _as_dual(other)
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "DualNumber({}, {})".format(self.rat, self.eps)

    def __str__(self):
        return "{} + {}e".format(self.rat, self.eps)

    def __add__(self, other):
        other = _as_dual(other)
        return DualNumber(self.rat + other.rat, self.eps + other.eps)

    def __sub__(self, other):
        other = _as_dual(other)
        return DualNumber(self.rat - other.rat, self.eps - other.eps)

    def __neg__(self):
        return DualNumber(-self.rat, -self.eps)

    def __mul__(self, factor):
        factor = Fraction(factor)
        return DualNumber(self.rat * factor, self.eps * factor)

    __rmul__ = __mul__

    def __truediv__(self, factor):
        factor = Fraction(factor)
        return DualNumber(self.rat / factor, self.eps / factor)

    def sign(self):
        if self.rat:
            return 1 if self.rat > 0 else -1
        elif self.eps:
            return 1 if self.eps > 0 else -1
        return 0

    def to_json(self):
        return {"rat": str(self.rat), "eps": str(self.eps)}


def _as_dual(value):
    if isinstance(value, DualNumber):
        return value
    return DualNumber(value)


class Stability(object):
    """Stability parameter zeta + e * eps with rational components

    Parameters
    ----------
    zeta: pair of rationals
        (zeta0, zeta1)
    eps: pair of rationals
        first-order infinitesimal direction
    """
    def __init__(self, zeta, eps=(0, 0)):
        self.zeta = tuple(Fraction(z) for z in zeta)
        self.eps = tuple(Fraction(e) for e in eps)
        if len(self.zeta) != 2 or len(self.eps) != 2:
            raise ValueError("Stability parameters have two components, "
                             "got {} and {}!".format(zeta, eps))
        if not any(self.zeta) and not any(self.eps):
            raise ValueError("Stability parameter must not vanish!")

    def __eq__(self, other):
        if not isinstance(other, Stability):
            return NotImplemented
        return self.zeta == other.zeta and self.eps == other.eps

    def __hash__(self):
        return hash((self.zeta, self.eps))

    def __repr__(self):
        return "Stability(zeta=({}, {}), eps=({}, {}))".format(
            *self.zeta, *self.eps)

    def pair(self, a):
        """Dual number zeta.a + (eps.a) e for the unframed part of a"""
        return DualNumber(self.zeta[0] * a[0] + self.zeta[1] * a[1],
                          self.eps[0] * a[0] + self.eps[1] * a[1])

    def scaled(self, factor):
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("Rescaling needs a positive factor!")
        return Stability([z * factor for z in self.zeta],
                         [e * factor for e in self.eps])


def slope(zs, a):
    """Slope mu(a) = zeta.a / |a| as a dual number"""
    size = a[0] + a[1]
    if size == 0:
        raise errors.ZeroDimensionError(
            "Slope of the zero dimension vector is undefined!")
    return zs.pair(a) / size


class FramedSeries(SeriesBase):
    """Series in y0, y1, y_inf multiplied with the twisted product

    Parameters
    ----------
    order: int
        bound on a0 + a1
    coeffs: dict
        mapping (a0, a1, ainf) to coefficients
    framing_order: int
        bound on ainf
    """
    variables = ("y0", "y1", "yinf")

    def __init__(self, order, coeffs=None, framing_order=1):
        self.order = int(order)
        self.framing_order = int(framing_order)
        if self.order < 0 or self.framing_order < 0:
            raise ValueError("Orders must be nonnegative!")
        super(FramedSeries, self).__init__(coeffs)

    def _contains(self, key):
        return key[0] + key[1] <= self.order and key[2] <= self.framing_order

    def _like(self, coeffs):
        new = FramedSeries.__new__(FramedSeries)
        new.order = self.order
        new.framing_order = self.framing_order
        new._coeffs = coeffs
        return new

    def _truncation(self):
        return ("order", self.order, "framing_order", self.framing_order)

    @property
    def max_degree(self):
        return self.order + self.framing_order

    def _twist(self, key1, key2):
        pairing = skew_form(key1, key2)
        if pairing:
            return minus_q_power(pairing)
        return None

    def unframed(self):
        """Part with ainf = 0 as a commutative TruncSeries"""
        return TruncSeries(self.order, {k[:2]: v for k, v in
                                        self._coeffs.items() if k[2] == 0})

    def _json_header(self):
        return {"vars": list(self.variables), "order": self.order,
                "framing_order": self.framing_order}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["order"],
                   {tuple(t["exp"]): RatFun.from_json(t["coeff"])
                    for t in data["terms"]},
                   framing_order=data["framing_order"])


def twisted_mul(a, b):
    """Twisted product (raises OrderMismatchError)"""
    return a * b


def twisted_invert(a):
    """Inverse in the twisted algebra"""
    return a.invert()


def lift(f, framing_order=1):
    """Embed a TruncSeries in y0, y1 as a FramedSeries with ainf = 0"""
    return FramedSeries(f.order, {k + (0,): v for k, v in f.items()},
                        framing_order=framing_order)


def y_infinity(order, framing_order=1):
    """The framing monomial y_inf = y^(0,0,1)"""
    return FramedSeries(order, {(0, 0, 1): ONE}, framing_order=framing_order)


#: ray of the factorization; framed rays collect every monomial with ainf > 0
Ray = collections.namedtuple("Ray", ["slope", "framed"])


def _ray_of(zs, key):
    if key[2] > 0:
        return Ray(DualNumber(0), True)
    return Ray(slope(zs, key), False)


def ray_factorize(a, zs):
    """Unique ordered factorization into single-ray factors

    Parameters
    ----------
    a: FramedSeries
        series with constant term 1
    zs: Stability
        stability parameter defining the slopes

    Returns
    -------
    factors: list of (Ray, FramedSeries)
        in product order: the leftmost factor has the largest slope;
        the framing ray sits between the slopes > 0 and < 0

    Notes
    -----
    Monomials are explained degree by degree: at degree d the ordered
    product of the factors found so far is compared with `a`, and each
    discrepancy is added to the factor of its ray. Additions at degree
    d change the product at degree d linearly and only there.
    """
    if a.constant_term != ONE:
        raise errors.NonUnitConstantTermError(
            "Ray factorization needs constant term 1, got {}!".format(
                a.constant_term))
    framed = any(key[2] > 0 for key in a.keys())
    factors = {}
    pieces = a.graded()
    for deg in range(1, a.max_degree + 1):
        current = _ordered_product(a, factors)
        keys = set(pieces.get(deg, {}))
        keys.update(k for k in current.keys() if a.degree(k) == deg)
        for key in sorted(keys):
            diff = a[key] - current[key]
            if not diff:
                continue
            ray = _ray_of(zs, key)
            if framed and not ray.framed and ray.slope == 0:
                raise errors.NotGenericError(
                    _witness(key[:2]), "Slope of {} collides with the "
                    "framing ray!".format(key[:2]))
            factors.setdefault(ray, {a.zero_key: ONE})[key] = diff
    return [(ray, a._like(dict(factors[ray])))
            for ray in _sorted_rays(factors)]


def _witness(vec):
    # conifold imports this module
    from .conifold.quiver import Root
    try:
        return Root(vec)
    except ValueError:
        return DimVec(*vec)


def _sorted_rays(factors):
    return sorted(factors, key=lambda ray: ray.slope, reverse=True)


def _ordered_product(a, factors):
    result = a.one()
    for ray in _sorted_rays(factors):
        result = result * a._like(dict(factors[ray]))
    return result


def factorization_to_json(factors):
    """JSON-ready list of the factors returned by :func:`ray_factorize`"""
    return [{"slope": ray.slope.to_json(), "framed": ray.framed,
             "series": factor.to_json()} for ray, factor in factors]
