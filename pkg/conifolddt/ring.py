"""Exact coefficients in the variable q = L^{1/2}

Laurent polynomials are sparse ``{exponent: Fraction}`` mappings
(:class:`HalfLaurent`). Rational functions (:class:`RatFun`) are kept in
a canonical form: the denominator is a monic polynomial in q with
nonzero constant term that is coprime to the numerator, and every pure
power of q sits in the numerator. Equality is then a syntactic check.
"""
from fractions import Fraction
import functools
import numbers

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from . import errors


__all__ = ["HalfLaurent", "RatFun", "as_ratfun", "euler_specialize",
           "evaluate_at_prime", "gl_motive", "minus_q_power", "qpower",
           "ONE", "ZERO", "Q", "L"]


#: univariate polynomial ring used for gcd computations
POLY_RING, _ = ring("q", QQ)


class HalfLaurent(object):
    """Laurent polynomial in q with rational coefficients

    Instances are treated as immutable.
    """
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in dict(terms).items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[int(exp)] = coeff
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms):
        hl = cls.__new__(cls)
        hl._terms = terms
        return hl

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, HalfLaurent):
            return self._terms == other._terms
        elif isinstance(other, numbers.Rational):
            return self == HalfLaurent({0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return "<{}: {}>".format(self.__class__.__name__, self)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            coeff = self._terms[exp]
            if exp == 0:
                text = str(coeff)
            else:
                mono = "q" if exp == 1 else "q^{}".format(exp)
                if coeff == 1:
                    text = mono
                elif coeff == -1:
                    text = "-" + mono
                else:
                    text = "{}*{}".format(coeff, mono)
            if not parts:
                parts.append(text)
            elif text.startswith("-"):
                parts.append("- " + text[1:])
            else:
                parts.append("+ " + text)
        return " ".join(parts)

    def __neg__(self):
        return HalfLaurent._from_clean(
            {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = _as_laurent(other)
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            value = terms.get(exp, 0) + coeff
            if value:
                terms[exp] = value
            else:
                terms.pop(exp, None)
        return HalfLaurent._from_clean(terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return HalfLaurent._from_clean(
            {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("Negative powers of HalfLaurent are not "
                             "polynomial, use RatFun!")
        result = HalfLaurent._from_clean({0: Fraction(1)})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @property
    def min_exp(self):
        return min(self._terms)

    @property
    def max_exp(self):
        return max(self._terms)

    def items(self):
        return self._terms.items()

    def exponents(self):
        return self._terms.keys()

    def is_constant(self):
        return not self._terms or list(self._terms) == [0]

    def constant(self):
        """Coefficient of q^0"""
        return self._terms.get(0, Fraction(0))

    def shift(self, k):
        """Multiply by q^k"""
        return HalfLaurent._from_clean(
            {e + k: c for e, c in self._terms.items()})

    def scale(self, factor):
        factor = Fraction(factor)
        if not factor:
            return HalfLaurent._from_clean({})
        return HalfLaurent._from_clean(
            {e: c * factor for e, c in self._terms.items()})

    def adams(self, n):
        """Substitute q -> q^n"""
        return HalfLaurent._from_clean(
            {e * n: c for e, c in self._terms.items()})

    def evaluate(self, x):
        """Evaluate at q = x (a nonzero rational)"""
        x = Fraction(x)
        return sum((c * x ** e for e, c in self._terms.items()),
                   Fraction(0))

    def to_poly(self):
        """Convert to a sympy polynomial (exponents must be nonnegative)"""
        return POLY_RING.from_dict(
            {(e,): QQ(c.numerator, c.denominator)
             for e, c in self._terms.items()})

    @classmethod
    def from_poly(cls, poly, shift=0):
        terms = {}
        for monom, coeff in poly.items():
            terms[monom[0] + shift] = Fraction(int(coeff.numerator),
                                               int(coeff.denominator))
        return cls._from_clean(terms)

    def to_json(self):
        return [[e, self._terms[e].numerator, self._terms[e].denominator]
                for e in sorted(self._terms)]

    @classmethod
    def from_json(cls, data):
        return cls({e: Fraction(n, d) for e, n, d in data})


_LAURENT_ONE = HalfLaurent({0: 1})


def _as_laurent(value):
    if isinstance(value, HalfLaurent):
        return value
    elif isinstance(value, numbers.Rational):
        return HalfLaurent({0: value})
    raise TypeError("Cannot convert {!r} to HalfLaurent!".format(value))


def _canonical(num, den, reduced=False):
    """Bring num/den to canonical form

    If `reduced` is set, num and den are known to be coprime and
    the gcd computation is skipped.
    """
    if not den:
        raise ZeroDivisionError("RatFun denominator must not be zero!")
    if not num:
        return HalfLaurent._from_clean({}), _LAURENT_ONE
    # move q-powers of the denominator into the numerator
    dmin = den.min_exp
    num = num.shift(-dmin)
    den = den.shift(-dmin)
    if den.is_constant():
        return num.scale(1 / den.constant()), _LAURENT_ONE
    nmin = num.min_exp
    pnum = num.shift(-nmin).to_poly()
    pden = den.to_poly()
    if not reduced:
        _, pnum, pden = pnum.cofactors(pden)
    lead = pden.LC
    pnum = pnum.quo_ground(lead)
    pden = pden.quo_ground(lead)
    return HalfLaurent.from_poly(pnum, nmin), HalfLaurent.from_poly(pden)


class RatFun(object):
    """Reduced rational function in q = L^{1/2}

    Parameters
    ----------
    num: HalfLaurent or rational
        numerator
    den: HalfLaurent or rational
        denominator (must not be zero)
    """
    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num, den = _canonical(_as_laurent(num), _as_laurent(den))
        #: numerator (Laurent polynomial)
        self.num = num
        #: denominator (monic polynomial with nonzero constant term)
        self.den = den

    @classmethod
    def _make(cls, num, den):
        """Create a RatFun from parts already in canonical form"""
        rf = cls.__new__(cls)
        rf.num = num
        rf.den = den
        return rf

    @classmethod
    def const(cls, value):
        return cls._make(_as_laurent(value), _LAURENT_ONE)

    @classmethod
    def laurent(cls, terms):
        """RatFun from a mapping {exponent: coefficient}"""
        return cls._make(HalfLaurent(terms), _LAURENT_ONE)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        try:
            other = as_ratfun(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "<{}: {}>".format(self.__class__.__name__, self)

    def __str__(self):
        """Text form such as `-q/(q^2 - 1)`; binary + and - are spaced"""
        if self.is_laurent():
            return str(self.num)
        num = str(self.num)
        if len(self.num._terms) > 1:
            num = "({})".format(num)
        return "{}/({})".format(num, self.den)

    def __neg__(self):
        return RatFun._make(-self.num, self.den)

    def __add__(self, other):
        try:
            other = as_ratfun(other)
        except TypeError:
            return NotImplemented
        if not other:
            return self
        elif not self:
            return other
        elif self.den == other.den:
            if self.is_laurent():
                return RatFun._make(self.num + other.num, _LAURENT_ONE)
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = as_ratfun(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_ratfun(other) - self

    def __mul__(self, other):
        try:
            other = as_ratfun(other)
        except TypeError:
            return NotImplemented
        if not self or not other:
            return ZERO
        elif other.is_laurent() and self.is_laurent():
            return RatFun._make(self.num * other.num, _LAURENT_ONE)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = as_ratfun(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_ratfun(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        # coprimality and monicity survive powers
        return RatFun._make(self.num ** n, self.den ** n)

    def inverse(self):
        if not self:
            raise ZeroDivisionError("Cannot invert zero RatFun!")
        num, den = _canonical(self.den, self.num, reduced=True)
        return RatFun._make(num, den)

    def adams(self, n):
        """Adams operation psi_n: substitute q -> q^n"""
        if n == 1:
            return self
        return RatFun._make(self.num.adams(n), self.den.adams(n))

    def is_laurent(self):
        """True if the reduced denominator is 1"""
        return self.den is _LAURENT_ONE or self.den == _LAURENT_ONE

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(HalfLaurent.from_json(data["num"]),
                   HalfLaurent.from_json(data["den"]))


def as_ratfun(value):
    """Convert rationals and Laurent polynomials to RatFun"""
    if isinstance(value, RatFun):
        return value
    elif isinstance(value, HalfLaurent):
        return RatFun._make(value, _LAURENT_ONE)
    elif isinstance(value, numbers.Rational):
        return RatFun.const(value)
    raise TypeError("Cannot convert {!r} to RatFun!".format(value))


def qpower(k):
    """q^k = L^{k/2}"""
    return RatFun._make(HalfLaurent._from_clean({k: Fraction(1)}),
                        _LAURENT_ONE)


def minus_q_power(k):
    """(-q)^k = (-L^{1/2})^k"""
    sign = -1 if k % 2 else 1
    return RatFun._make(HalfLaurent._from_clean({k: Fraction(sign)}),
                        _LAURENT_ONE)


ZERO = RatFun._make(HalfLaurent._from_clean({}), _LAURENT_ONE)
ONE = RatFun._make(_LAURENT_ONE, _LAURENT_ONE)
#: q = L^{1/2}
Q = qpower(1)
#: Lefschetz motive L = q^2
L = qpower(2)


@functools.lru_cache(maxsize=None)
def gl_motive(n):
    """Motive of GL_n, the product of (L^n - L^k) for k < n"""
    if n < 0:
        raise ValueError("`n` must be nonnegative, got {}!".format(n))
    poly = _LAURENT_ONE
    for k in range(n):
        poly = poly * HalfLaurent({2 * n: 1, 2 * k: -1})
    return RatFun._make(poly, _LAURENT_ONE)


def evaluate_at_prime(r, p):
    """Evaluate r at L = q^2 = p

    Raises
    ------
    HalfPowerResidueError
        if an odd power of q survives reduction
    PoleAtPrimeError
        if the denominator vanishes at L = p
    """
    r = as_ratfun(r)
    for part in (r.num, r.den):
        odd = [e for e in part.exponents() if e % 2]
        if odd:
            raise errors.HalfPowerResidueError(
                "Odd power q^{} in '{}' has no value at L={}!".format(
                    odd[0], r, p))
    lval = Fraction(p)
    num = sum((c * lval ** (e // 2) for e, c in r.num.items()), Fraction(0))
    den = sum((c * lval ** (e // 2) for e, c in r.den.items()), Fraction(0))
    if not den:
        raise errors.PoleAtPrimeError(
            "Denominator of '{}' vanishes at L={}!".format(r, p))
    return num / den


def euler_specialize(r):
    """Evaluate r at q = 1 (Euler number specialization)

    Raises
    ------
    PoleAtOneError
        if the reduced denominator vanishes at q = 1
    """
    r = as_ratfun(r)
    den = r.den.evaluate(1)
    if not den:
        raise errors.PoleAtOneError(
            "Denominator of '{}' vanishes at q=1!".format(r))
    return r.num.evaluate(1) / den
