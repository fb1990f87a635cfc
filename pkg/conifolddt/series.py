"""Truncated power series with RatFun coefficients

All series are sparse mappings from exponent tuples to nonzero
:class:`conifolddt.ring.RatFun` coefficients. The truncation set of
every series type is closed under going down (lowering any exponent
keeps a monomial inside), so truncated products are exact.
"""
import collections
import json

from . import errors
from .ring import ONE, ZERO, RatFun, as_ratfun, euler_specialize


__all__ = ["DimVec", "SeriesBase", "TruncSeries", "GeomSeries",
           "product_family", "scale_variable", "series_invert",
           "series_mul", "to_geometric", "euler_series"]


#: dimension vector (a0, a1) of the conifold quiver
DimVec = collections.namedtuple("DimVec", ["a0", "a1"])


class SeriesBase(object):
    """Common arithmetic of sparse truncated series

    Subclasses define the truncation via :func:`_contains`,
    :func:`_like` and :const:`max_degree`. Instances are treated
    as immutable.
    """
    #: names of the variables
    variables = ()

    def __init__(self, coeffs=None):
        self._coeffs = {}
        if coeffs:
            for key, value in dict(coeffs).items():
                key = tuple(int(k) for k in key)
                self._check_key(key)
                value = as_ratfun(value)
                if value and self._contains(key):
                    self._coeffs[key] = value

    def _check_key(self, key):
        if len(key) != len(self.variables):
            raise ValueError("Exponent {} does not match variables {}!".format(
                key, self.variables))
        if min(key, default=0) < 0:
            raise ValueError("Negative exponent in {}!".format(key))

    def _contains(self, key):
        raise NotImplementedError("Subclass must define truncation!")

    def _like(self, coeffs):
        """New series of the same type and truncation (coeffs are clean)"""
        raise NotImplementedError("Subclass must define truncation!")

    def _truncation(self):
        """Hashable description of the truncation"""
        raise NotImplementedError("Subclass must define truncation!")

    @property
    def max_degree(self):
        """Largest grading degree of a monomial within the truncation"""
        raise NotImplementedError("Subclass must define truncation!")

    @staticmethod
    def degree(key):
        """Grading degree of a monomial"""
        return sum(key)

    def _twist(self, key1, key2):
        """Coefficient factor of the monomial product (None: commutative)"""
        return None

    def _check_compatible(self, other):
        if (not isinstance(other, SeriesBase)
                or self.variables != other.variables
                or self._truncation() != other._truncation()):
            raise errors.OrderMismatchError(
                "Cannot combine {!r} with {!r}!".format(self, other))

    def __bool__(self):
        return bool(self._coeffs)

    def __contains__(self, key):
        return tuple(key) in self._coeffs

    def __eq__(self, other):
        if not isinstance(other, SeriesBase):
            return NotImplemented
        return (self.variables == other.variables
                and self._truncation() == other._truncation()
                and self._coeffs == other._coeffs)

    __hash__ = None

    def __getitem__(self, key):
        return self._coeffs.get(tuple(key), ZERO)

    def __iter__(self):
        return iter(self.keys())

    def __len__(self):
        return len(self._coeffs)

    def __repr__(self):
        return "<{} {} with {} terms at {}>".format(
            self.__class__.__name__, self._truncation(), len(self),
            hex(id(self)))

    def __str__(self):
        return self.to_text()

    def __neg__(self):
        return self._like({k: -v for k, v in self._coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, SeriesBase):
            other = self.one().scale(other)
        self._check_compatible(other)
        coeffs = dict(self._coeffs)
        _accumulate(coeffs, other._coeffs)
        return self._like(coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, SeriesBase):
            other = self.one().scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SeriesBase):
            self._check_compatible(other)
            return self._like(self.product_of_terms(self._coeffs,
                                                    other._coeffs))
        return self.scale(other)

    def __rmul__(self, other):
        # only scalars end up here
        return self.scale(other)

    def keys(self):
        """Exponents sorted by (degree, exponents)"""
        return sorted(self._coeffs, key=lambda k: (self.degree(k), k))

    def items(self):
        return [(k, self._coeffs[k]) for k in self.keys()]

    @property
    def constant_term(self):
        return self._coeffs.get(self.zero_key, ZERO)

    @property
    def zero_key(self):
        return (0,) * len(self.variables)

    def one(self):
        return self._like({self.zero_key: ONE})

    def zero(self):
        return self._like({})

    def monomial(self, key, coeff=ONE):
        key = tuple(key)
        self._check_key(key)
        coeff = as_ratfun(coeff)
        if coeff and self._contains(key):
            return self._like({key: coeff})
        return self.zero()

    def scale(self, factor):
        """Multiply all coefficients by a scalar"""
        factor = as_ratfun(factor)
        if not factor:
            return self.zero()
        return self._like({k: v * factor for k, v in self._coeffs.items()})

    def map_coefficients(self, func):
        coeffs = {}
        for key, value in self._coeffs.items():
            value = as_ratfun(func(value))
            if value:
                coeffs[key] = value
        return self._like(coeffs)

    def graded(self):
        """Split into homogeneous pieces {degree: {key: coeff}}"""
        pieces = {}
        for key, value in self._coeffs.items():
            pieces.setdefault(self.degree(key), {})[key] = value
        return pieces

    def product_of_terms(self, terms1, terms2):
        """Truncated product of two coefficient mappings"""
        maxdeg = self.max_degree
        by_degree = {}
        for key, value in terms2.items():
            by_degree.setdefault(self.degree(key), []).append((key, value))
        degrees = sorted(by_degree)
        out = {}
        for key1, value1 in terms1.items():
            budget = maxdeg - self.degree(key1)
            for deg in degrees:
                if deg > budget:
                    break
                for key2, value2 in by_degree[deg]:
                    key = tuple(a + b for a, b in zip(key1, key2))
                    if not self._contains(key):
                        continue
                    value = value1 * value2
                    twist = self._twist(key1, key2)
                    if twist is not None:
                        value = value * twist
                    if key in out:
                        out[key] = out[key] + value
                    else:
                        out[key] = value
        return {k: v for k, v in out.items() if v}

    def invert(self):
        """Multiplicative inverse (constant term must be nonzero)

        The homogeneous pieces g_n of the inverse follow from
        f_0 g_n = -sum_{k>=1} f_k g_{n-k}.
        """
        const = self.constant_term
        if not const:
            raise errors.NonUnitConstantTermError(
                "Constant term of {!r} is zero!".format(self))
        inv0 = const.inverse()
        pieces = self.graded()
        result = {0: {self.zero_key: inv0}}
        for n in range(1, self.max_degree + 1):
            acc = {}
            for k in range(1, n + 1):
                if k in pieces and result.get(n - k):
                    _accumulate(acc, self.product_of_terms(pieces[k],
                                                           result[n - k]))
            result[n] = {key: -inv0 * value for key, value in acc.items()
                         if value}
        coeffs = {}
        for piece in result.values():
            coeffs.update(piece)
        return self._like(coeffs)

    def adams(self, n):
        """Adams operation psi_n on monomials and coefficients"""
        if n < 1:
            raise ValueError("Adams operations need n >= 1, got {}!".format(n))
        coeffs = {}
        for key, value in self._coeffs.items():
            newkey = tuple(n * k for k in key)
            if self._contains(newkey):
                coeffs[newkey] = value.adams(n)
        return self._like(coeffs)

    def scale_variable(self, which, factor):
        """Substitute variable `which` -> factor * variable"""
        if isinstance(which, str):
            which = self.variables.index(which)
        factor = as_ratfun(factor)
        powers = {}
        coeffs = {}
        for key, value in self._coeffs.items():
            exp = key[which]
            if exp not in powers:
                powers[exp] = factor ** exp
            coeffs[key] = value * powers[exp]
        return self._like({k: v for k, v in coeffs.items() if v})

    def _json_header(self):
        return {"vars": list(self.variables)}

    def to_json(self):
        data = self._json_header()
        data["terms"] = [{"exp": list(key), "coeff": value.to_json()}
                         for key, value in self.items()]
        return data

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_text(self):
        lines = []
        for key, value in self.items():
            mono = " ".join("{}^{}".format(var, exp)
                            for var, exp in zip(self.variables, key))
            lines.append("{} : {}".format(mono, value))
        return "\n".join(lines)


class TruncSeries(SeriesBase):
    """Power series truncated at total degree `order`

    Parameters
    ----------
    order: int
        total-degree bound N; monomials with a0 + a1 > N are dropped
    coeffs: dict
        mapping exponent tuples to coefficients
    variables: tuple of str
        variable names, ("y0", "y1") by default, ("x",) for
        one-variable series
    """
    def __init__(self, order, coeffs=None, variables=("y0", "y1")):
        if int(order) != order or order < 0:
            raise ValueError("`order` must be a nonnegative integer, "
                             "got {}!".format(order))
        self.order = int(order)
        self.variables = tuple(variables)
        super(TruncSeries, self).__init__(coeffs)

    def _contains(self, key):
        return sum(key) <= self.order

    def _like(self, coeffs):
        new = TruncSeries.__new__(TruncSeries)
        new.order = self.order
        new.variables = self.variables
        new._coeffs = coeffs
        return new

    def _truncation(self):
        return ("order", self.order)

    @property
    def max_degree(self):
        return self.order

    def _json_header(self):
        return {"vars": list(self.variables), "order": self.order}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["order"],
                   {tuple(t["exp"]): RatFun.from_json(t["coeff"])
                    for t in data["terms"]},
                   variables=data["vars"])


class GeomSeries(SeriesBase):
    """Series in the large radius variables s = y0 y1, T = 1/y1

    Truncated at s-exponent `s_order` and T-exponent `t_order`.
    Negative T-exponents are allowed for read-only results (the
    noncommutative chamber); such series cannot be multiplied.
    """
    variables = ("s", "T")

    def __init__(self, s_order, t_order, coeffs=None):
        self.s_order = int(s_order)
        self.t_order = int(t_order)
        if self.s_order < 0 or self.t_order < 0:
            raise ValueError("Orders must be nonnegative, got ({}, {})!"
                             .format(s_order, t_order))
        super(GeomSeries, self).__init__(coeffs)

    def _check_key(self, key):
        if len(key) != 2:
            raise ValueError("Exponent {} does not match variables {}!".format(
                key, self.variables))
        if key[0] < 0:
            raise ValueError("Negative s-exponent in {}!".format(key))

    def _contains(self, key):
        return key[0] <= self.s_order and abs(key[1]) <= self.t_order

    def _like(self, coeffs):
        new = GeomSeries.__new__(GeomSeries)
        new.s_order = self.s_order
        new.t_order = self.t_order
        new._coeffs = coeffs
        return new

    def _truncation(self):
        return ("s_order", self.s_order, "t_order", self.t_order)

    @property
    def max_degree(self):
        return self.s_order + self.t_order

    def has_negative_curve(self):
        return any(key[1] < 0 for key in self._coeffs)

    def product_of_terms(self, terms1, terms2):
        for terms in (terms1, terms2):
            if any(key[1] < 0 for key in terms):
                raise errors.NegativeCurveExponentError(
                    "Series with negative T-exponents cannot be "
                    "multiplied!")
        return super(GeomSeries, self).product_of_terms(terms1, terms2)

    def _json_header(self):
        return {"vars": list(self.variables), "s_order": self.s_order,
                "t_order": self.t_order}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["s_order"], data["t_order"],
                   {tuple(t["exp"]): RatFun.from_json(t["coeff"])
                    for t in data["terms"]})


def _accumulate(acc, terms):
    """Add `terms` to the coefficient mapping `acc` in-place"""
    for key, value in terms.items():
        if key in acc:
            total = acc[key] + value
            if total:
                acc[key] = total
            else:
                del acc[key]
        else:
            acc[key] = value


def series_mul(f, g):
    """Truncated product f*g (raises OrderMismatchError)"""
    return f * g


def series_invert(f):
    """Inverse of f (raises NonUnitConstantTermError)"""
    return f.invert()


def scale_variable(f, which, factor):
    """Substitute variable `which` (index or name) -> factor * variable"""
    return f.scale_variable(which, factor)


def product_family(factors, order):
    """Truncated product of factors (1 - c y^alpha)^{+-1}

    Parameters
    ----------
    factors: iterable
        items `(alpha, coefficients)` or `(alpha, coefficients, power)`
        with `power` in {+1, -1}; each coefficient c contributes one
        factor (1 - c y^alpha)^power
    order: int or tuple
        total degree N (TruncSeries in y0, y1) or (s_order, t_order)
        (GeomSeries)

    Returns
    -------
    product: TruncSeries or GeomSeries
    """
    if isinstance(order, tuple):
        result = GeomSeries(order[0], order[1], {(0, 0): ONE})
    else:
        result = TruncSeries(order, {(0, 0): ONE})
    coeffs = dict(result._coeffs)
    for item in factors:
        if len(item) == 2:
            (alpha, cfs), power = item, 1
        else:
            alpha, cfs, power = item
        alpha = tuple(alpha)
        if result.degree(alpha) < 1:
            raise ValueError("Factor monomial {} has degree < 1!".format(
                alpha))
        if not result._contains(alpha):
            # cannot contribute within the truncation
            continue
        for c in cfs:
            c = as_ratfun(c)
            if power == 1:
                coeffs = _mul_linear(result, coeffs, alpha, c)
            elif power == -1:
                coeffs = _div_linear(result, coeffs, alpha, c)
            else:
                raise ValueError("`power` must be +1 or -1, got {}!".format(
                    power))
    return result._like(coeffs)


def _mul_linear(template, coeffs, alpha, c):
    """coeffs * (1 - c y^alpha)"""
    out = dict(coeffs)
    shifted = {}
    for key, value in coeffs.items():
        newkey = tuple(a + b for a, b in zip(key, alpha))
        if template._contains(newkey):
            shifted[newkey] = -c * value
    _accumulate(out, shifted)
    return out


def _div_linear(template, coeffs, alpha, c):
    """coeffs / (1 - c y^alpha) = coeffs * sum_m c^m y^{m alpha}"""
    out = dict(coeffs)
    current = coeffs
    while current:
        step = {}
        for key, value in current.items():
            newkey = tuple(a + b for a, b in zip(key, alpha))
            if template._contains(newkey):
                step[newkey] = c * value
        _accumulate(out, step)
        current = step
    return out


def to_geometric(f, allow_negative_curve=False, s_order=None, t_order=None):
    """Change to the variables s = y0 y1, T = 1/y1

    The monomial y0^a y1^b maps to s^a T^(a-b).

    Parameters
    ----------
    f: TruncSeries
        series in y0, y1
    allow_negative_curve: bool
        map keys with a0 < a1 to negative T-exponents instead of
        raising NegativeCurveExponentError
    s_order, t_order: int or None
        truncation of the result (defaults to the order of `f`)
    """
    s_order = f.order if s_order is None else s_order
    t_order = f.order if t_order is None else t_order
    coeffs = {}
    for (a0, a1), value in f._coeffs.items():
        if a0 < a1 and not allow_negative_curve:
            raise errors.NegativeCurveExponentError(
                "Monomial y0^{} y1^{} has negative curve degree!".format(
                    a0, a1))
        coeffs[(a0, a0 - a1)] = value
    return GeomSeries(s_order, t_order, coeffs)


def euler_series(f):
    """Apply the Euler specialization q -> 1 to all coefficients"""
    return f.map_coefficients(lambda c: RatFun.const(euler_specialize(c)))
