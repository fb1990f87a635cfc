from fractions import Fraction

from sympy import isprime


def fint(value):
    """integer"""
    if isinstance(value, str):
        value = value.strip().lower()
        if not value:
            raise ValueError("empty string")
        # allow "1e9" for the enumeration cap
        value = int(float(value)) if "e" in value else int(value)
    else:
        value = int(value)
    return value


def fint_nonneg(value):
    """nonnegative integer"""
    value = fint(value)
    if value < 0:
        raise ValueError("Expected nonnegative integer, got {}!".format(value))
    return value


def fint_positive(value):
    """positive integer"""
    value = fint(value)
    if value < 1:
        raise ValueError("Expected positive integer, got {}!".format(value))
    return value


def frational(value):
    """exact rational number, e.g. "-3/2" """
    if isinstance(value, float):
        raise ValueError("Floats are not exact, got {}!".format(value))
    return Fraction(value.strip() if isinstance(value, str) else value)


def fvector(value):
    """pair of exact rationals, e.g. "-1,1/2" """
    if isinstance(value, str):
        value = value.split(",")
    value = tuple(frational(v) for v in value)
    if len(value) != 2:
        raise ValueError("Expected two components, got {}!".format(value))
    return value


def fdimvec(value):
    """pair of nonnegative integers, e.g. "2,1" """
    if isinstance(value, str):
        value = value.split(",")
    value = tuple(fint_nonneg(v) for v in value)
    if len(value) != 2:
        raise ValueError("Expected two components, got {}!".format(value))
    return value


def fprime(value):
    """prime number"""
    value = fint(value)
    if not isprime(value):
        raise ValueError("Expected a prime, got {}!".format(value))
    return value


def fprimes(value):
    """tuple of primes, e.g. "2,3,5" """
    if isinstance(value, str):
        value = value.split(",")
    return tuple(fprime(v) for v in value)


__all__ = ["fdimvec", "fint", "fint_nonneg", "fint_positive",
           "fprime", "fprimes", "frational", "fvector"]
