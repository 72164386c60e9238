#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact arithmetic in the ring of integer Laurent polynomials in one variable.
"""

__all__ = ["LaurentPolynomial", "ZERO", "ONE", "T", "monomial", "add", "mul",
    "exact_divide", "normalize", "degree_span", "leading_coefficient_abs",
    "is_monic", "is_palindromic", "evaluate_at", "ZeroPolynomial",
    "NonzeroRemainder", "DivisionByZero", "NotAKnotPolynomial",
    "UnsupportedPoint"]

import logging
import re
from numbers import Integral

import numpy as np

logger = logging.getLogger(__name__)

# Products whose coefficients are provably below this bound are convolved
# with int64 arrays; anything larger goes through Python integers.
_INT64_SAFE = 2**62

_TERM_PATTERN = re.compile(r"([+-]?)(\d+)?(?:\*?(t)(?:\^(-?\d+))?)?")


class ZeroPolynomial(ValueError):
    """ Raised when an operation is undefined for the zero polynomial. """


class NonzeroRemainder(ArithmeticError):
    """ Raised when an exact division leaves a nonzero remainder. """


class DivisionByZero(ZeroDivisionError):
    """ Raised when dividing by the zero polynomial. """


class NotAKnotPolynomial(ValueError):
    """ Raised when a polynomial does not evaluate to +/-1 at t = 1. """


class UnsupportedPoint(ValueError):
    """ Raised when evaluating at a point other than t = 1 or t = -1. """


class LaurentPolynomial(object):
    """
    An immutable integer Laurent polynomial, stored sparsely as a mapping from
    exponent to nonzero coefficient.

    :param terms: [optional]
        A dictionary of `{exponent: coefficient}` or an iterable of
        `(exponent, coefficient)` pairs. Repeated exponents are summed and zero
        coefficients are dropped.
    """

    __slots__ = ("_terms", )

    def __init__(self, terms=None):
        collected = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exponent, coefficient in items:
                if not isinstance(exponent, Integral) \
                or not isinstance(coefficient, Integral):
                    raise TypeError("exponents and coefficients must be "
                                    "integers, not ({!r}, {!r})".format(
                                        exponent, coefficient))
                exponent = int(exponent)
                collected[exponent] = collected.get(exponent, 0) \
                                    + int(coefficient)
        self._terms = dict((e, c) for e, c in collected.items() if c != 0)


    @classmethod
    def _from_clean(cls, terms):
        # Trusted constructor: `terms` already has int keys and nonzero values.
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly


    @classmethod
    def from_coefficients(cls, coefficients, offset=0):
        """
        Create a polynomial from a dense list of coefficients.

        :param coefficients:
            Coefficients in ascending order of exponent.

        :param offset: [optional]
            The exponent of the first coefficient.
        """
        return cls._from_clean(dict(
            (offset + i, int(c)) for i, c in enumerate(coefficients) if c != 0))


    @classmethod
    def from_pairs(cls, pairs):
        """
        Create a polynomial from its serialized form: a sequence of
        `[exponent, coefficient]` pairs with strictly increasing exponents and
        nonzero coefficients.

        :param pairs:
            The serialized pairs, as written by `to_pairs`.
        """
        pairs = [tuple(pair) for pair in pairs]
        for pair in pairs:
            if len(pair) != 2:
                raise ValueError("expected [exponent, coefficient] pairs; "
                                 "got {!r}".format(pair))
        exponents = [e for e, _ in pairs]
        if any(b <= a for a, b in zip(exponents, exponents[1:])):
            raise ValueError("exponents must be strictly increasing")
        if any(c == 0 for _, c in pairs):
            raise ValueError("serialized coefficients must be nonzero")
        return cls(pairs)


    @classmethod
    def parse(cls, text):
        """
        Parse the human-readable form produced by `str()`, for example
        "2 - 3*t + 2*t^2" or "-t^-2 + t^-1 - 1".

        :param text:
            The polynomial as a string in the variable `t`.
        """
        compact = re.sub(r"\s+", "", text).replace("^-", "^~")
        if compact in ("", "0"):
            return ZERO

        tokens = re.findall(r"[+-]?[^+-]+", compact)
        if "".join(tokens) != compact:
            raise ValueError("cannot parse polynomial '{}'".format(text))

        pairs = []
        for token in tokens:
            match = _TERM_PATTERN.fullmatch(token.replace("^~", "^-"))
            if match is None:
                raise ValueError("cannot parse term '{}' in '{}'".format(
                    token, text))
            sign, digits, variable, exponent = match.groups()
            if digits is None and variable is None:
                raise ValueError("empty term in '{}'".format(text))
            coefficient = int(digits) if digits is not None else 1
            if sign == "-":
                coefficient = -coefficient
            if variable is None:
                power = 0
            else:
                power = int(exponent) if exponent is not None else 1
            pairs.append((power, coefficient))
        return cls(pairs)


    # Representations.


    def __repr__(self):
        return "<{0}.{1} {2}>".format(self.__module__, type(self).__name__,
            str(self))


    def __str__(self):
        if not self._terms:
            return "0"

        pieces = []
        for exponent, coefficient in self.terms:
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                variable = "t" if exponent == 1 else "t^{}".format(exponent)
                body = variable if magnitude == 1 \
                    else "{}*{}".format(magnitude, variable)

            if not pieces:
                pieces.append(("-" if coefficient < 0 else "") + body)
            else:
                pieces.append(("- " if coefficient < 0 else "+ ") + body)
        return " ".join(pieces)


    # Term access.


    @property
    def terms(self):
        """ Return the `(exponent, coefficient)` pairs in ascending order. """
        return tuple(sorted(self._terms.items()))


    @property
    def is_zero(self):
        """ Return whether this is the zero polynomial. """
        return not self._terms


    @property
    def num_terms(self):
        """ Return the number of nonzero terms. """
        return len(self._terms)


    @property
    def min_degree(self):
        """ Return the lowest exponent with a nonzero coefficient. """
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no lowest exponent")
        return min(self._terms)


    @property
    def max_degree(self):
        """ Return the highest exponent with a nonzero coefficient. """
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no highest exponent")
        return max(self._terms)


    def coefficient(self, exponent):
        """
        Return the coefficient of `t^exponent`.

        :param exponent:
            The exponent to look up.
        """
        return self._terms.get(exponent, 0)


    def dense(self):
        """
        Return the coefficients from the lowest to the highest exponent,
        including zeros.
        """
        if not self._terms:
            return []
        low, high = self.min_degree, self.max_degree
        coefficients = [0] * (high - low + 1)
        for exponent, coefficient in self._terms.items():
            coefficients[exponent - low] = coefficient
        return coefficients


    def to_pairs(self):
        """ Return the serialized form: a list of `[exponent, coefficient]`. """
        return [[e, c] for e, c in self.terms]


    def shift(self, k):
        """
        Return this polynomial multiplied by `t^k`.

        :param k:
            The (possibly negative) exponent shift.
        """
        return LaurentPolynomial._from_clean(
            dict((e + k, c) for e, c in self._terms.items()))


    # Arithmetic.


    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, Integral) and not isinstance(other, bool):
            return LaurentPolynomial._from_clean({0: int(other)} if other else {})
        return None


    def __bool__(self):
        return bool(self._terms)


    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms


    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal


    def __hash__(self):
        # Constants hash like the integers they compare equal to.
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return hash(self._terms[0])
        return hash(frozenset(self._terms.items()))


    def __neg__(self):
        return LaurentPolynomial._from_clean(
            dict((e, -c) for e, c in self._terms.items()))


    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = terms.get(exponent, 0) + coefficient
            if value:
                terms[exponent] = value
            else:
                terms.pop(exponent, None)
        return LaurentPolynomial._from_clean(terms)

    __radd__ = __add__


    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)


    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)


    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _multiply(self, other)

    __rmul__ = __mul__


    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            if self.num_terms != 1 or abs(self.terms[0][1]) != 1:
                raise ValueError("only unit monomials have negative powers")
            (exponent, coefficient), = self.terms
            return monomial(exponent * n, coefficient ** (-n))

        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def monomial(exponent, coefficient=1):
    """
    Return the single-term polynomial `coefficient * t^exponent`.

    :param exponent:
        The exponent, which may be negative.

    :param coefficient: [optional]
        The integer coefficient.
    """
    if not isinstance(exponent, Integral) \
    or not isinstance(coefficient, Integral):
        raise TypeError("exponents and coefficients must be integers, not "
                        "({!r}, {!r})".format(exponent, coefficient))
    coefficient = int(coefficient)
    return LaurentPolynomial._from_clean(
        {int(exponent): coefficient} if coefficient else {})


ZERO = LaurentPolynomial()
ONE = monomial(0)
T = monomial(1)


def _convolve(a, b):
    """
    Convolve two dense integer coefficient lists exactly.
    """
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if bound < _INT64_SAFE:
        return np.convolve(np.array(a, dtype=np.int64),
                           np.array(b, dtype=np.int64)).tolist()

    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                product[i + j] += x * y
    return product


def _multiply(a, b):
    if a.is_zero or b.is_zero:
        return ZERO

    na, nb = a.num_terms, b.num_terms
    span_a = a.max_degree - a.min_degree + 1
    span_b = b.max_degree - b.min_degree + 1

    # Dense convolution pays off unless the inputs are very sparse.
    if 64 * na * nb >= span_a * span_b:
        return LaurentPolynomial.from_coefficients(
            _convolve(a.dense(), b.dense()), a.min_degree + b.min_degree)

    terms = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            exponent = ea + eb
            terms[exponent] = terms.get(exponent, 0) + ca * cb
    return LaurentPolynomial._from_clean(
        dict((e, c) for e, c in terms.items() if c != 0))


def add(a, b):
    """
    Return the sum of two Laurent polynomials.

    :param a:
        A Laurent polynomial.

    :param b:
        A Laurent polynomial.
    """
    return a + b


def mul(a, b):
    """
    Return the product of two Laurent polynomials.

    :param a:
        A Laurent polynomial.

    :param b:
        A Laurent polynomial.
    """
    return a * b


def _divide_sparse(remainder, divisor_terms, divisor_degree):
    # `remainder` is a dense list (mutated); `divisor_terms` are (offset,
    # coefficient) pairs with the leading pair last.
    lead = divisor_terms[-1][1]
    quotient = [0] * max(0, len(remainder) - divisor_degree)
    for i in range(len(remainder) - 1, divisor_degree - 1, -1):
        c = remainder[i]
        if not c:
            continue
        factor, rest = divmod(c, lead)
        if rest:
            raise NonzeroRemainder("leading coefficient {} is not divisible "
                                   "by {}".format(c, lead))
        k = i - divisor_degree
        quotient[k] = factor
        for offset, d in divisor_terms:
            remainder[k + offset] -= factor * d

    if any(remainder[:divisor_degree]):
        raise NonzeroRemainder("division leaves a nonzero remainder")
    return quotient


def _divide_dense(numerator, divisor, dtype):
    remainder = np.array(numerator, dtype=dtype)
    divisor = np.array(divisor, dtype=dtype)
    degree = len(divisor) - 1
    lead = int(divisor[-1])
    quotient = [0] * max(0, len(numerator) - degree)
    for i in range(len(numerator) - 1, degree - 1, -1):
        c = int(remainder[i])
        if not c:
            continue
        factor, rest = divmod(c, lead)
        if rest:
            raise NonzeroRemainder("leading coefficient {} is not divisible "
                                   "by {}".format(c, lead))
        k = i - degree
        quotient[k] = factor
        remainder[k:i + 1] -= factor * divisor

    if any(int(c) for c in remainder[:degree]):
        raise NonzeroRemainder("division leaves a nonzero remainder")
    return quotient


def exact_divide(numerator, denominator):
    """
    Divide two Laurent polynomials, requiring the division to be exact.

    Both inputs are shifted to ordinary polynomials with a nonzero constant
    term, divided by long division from the top term, and the quotient is
    shifted back.

    :param numerator:
        The dividend.

    :param denominator:
        The divisor, which must divide `numerator` in the Laurent ring.

    :raises DivisionByZero:
        If the denominator is zero.

    :raises NonzeroRemainder:
        If the denominator does not divide the numerator.
    """

    if denominator.is_zero:
        raise DivisionByZero("division by the zero polynomial")
    if numerator.is_zero:
        return ZERO

    offset = numerator.min_degree - denominator.min_degree
    num = numerator.dense()
    den = denominator.dense()
    degree = len(den) - 1

    if denominator.num_terms <= 8 or 4 * denominator.num_terms < len(den):
        # Few terms or wide gaps: loop over the divisor terms only.
        divisor_terms = [(e - denominator.min_degree, c)
                         for e, c in denominator.terms]
        quotient = _divide_sparse(list(num), divisor_terms, degree)

    else:
        quotient = None
        if max(map(abs, num)) < 2**20 and max(map(abs, den)) < 2**20:
            # int64 arithmetic may wrap silently, so the fast result is only
            # accepted after an exact multiply-back.
            try:
                quotient = _divide_dense(num, den, np.int64)
            except (NonzeroRemainder, OverflowError):
                quotient = None

            if quotient is not None and (len(quotient) + degree != len(num) \
            or _convolve(quotient, den) != num):
                quotient = None

        if quotient is None:
            quotient = _divide_dense(num, den, object)

    return LaurentPolynomial.from_coefficients(quotient, offset)


def _require_nonzero(p):
    if p.is_zero:
        raise ZeroPolynomial("operation undefined for the zero polynomial")


def evaluate_at(p, x):
    """
    Evaluate a Laurent polynomial at t = 1 or t = -1.

    :param p:
        The Laurent polynomial.

    :param x:
        The evaluation point; only 1 and -1 are supported.
    """
    if x == 1:
        return sum(c for _, c in p.terms)
    if x == -1:
        return sum(-c if e % 2 else c for e, c in p.terms)
    raise UnsupportedPoint("can only evaluate at t = 1 or t = -1, not {}".format(x))


def normalize(p):
    """
    Return the representative `u * t^k * p` (u = +/-1) with lowest exponent
    zero and value +1 at t = 1.

    :param p:
        A nonzero Laurent polynomial whose value at t = 1 is +1 or -1.
    """
    _require_nonzero(p)
    value = evaluate_at(p, 1)
    if value not in (1, -1):
        raise NotAKnotPolynomial("value at t = 1 is {}, not +/-1: {}".format(
            value, p))
    shifted = p.shift(-p.min_degree)
    return shifted if value == 1 else -shifted


def degree_span(p):
    """
    Return the difference between the highest and lowest exponents.

    :param p:
        A nonzero Laurent polynomial.
    """
    _require_nonzero(p)
    return p.max_degree - p.min_degree


def leading_coefficient_abs(p):
    """
    Return the absolute value of the coefficient of the highest exponent.

    :param p:
        A nonzero Laurent polynomial.
    """
    _require_nonzero(p)
    return abs(p.coefficient(p.max_degree))


def is_monic(p):
    """
    Return whether the leading coefficient is +/-1.

    :param p:
        A nonzero Laurent polynomial.
    """
    return leading_coefficient_abs(p) == 1


def is_palindromic(p):
    """
    Return whether the coefficients read the same from either end.

    :param p:
        A nonzero Laurent polynomial.
    """
    _require_nonzero(p)
    coefficients = p.dense()
    return coefficients == coefficients[::-1]
