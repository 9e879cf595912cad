from tsysnet.ring import LaurentPoly, var_name


def tvar(*coords, prefix="t"):
    return LaurentPoly.var(var_name(prefix, *coords))


def positive_integral(value) -> bool:
    """Nonnegative integer coefficients (a plain number must be a nonnegative integer)."""
    from fractions import Fraction

    from tsysnet.ring import to_laurent

    value = to_laurent(value)
    if isinstance(value, LaurentPoly):
        return value.has_nonnegative_coefficients()
    return Fraction(value).denominator == 1 and value >= 0
