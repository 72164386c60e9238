#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Twisted torus knot parameters, the modular combinatorics behind the closed
formula for their Alexander polynomials, and its evaluation.
"""

__all__ = ["TTKParams", "ModularData", "FormulaParts", "AlexanderResult",
    "residue", "mod_inverse", "canonicalize", "compute_modular_data",
    "formula_parts", "evaluate_formula", "alexander_closed_form",
    "torus_knot_alexander", "check_s0_reduction", "NotAKnot", "NotCoprime",
    "UnsupportedParameters"]

import logging
from bisect import bisect_left
from collections import namedtuple
from itertools import accumulate
from math import gcd

from . import laurent
from .laurent import ONE, T, monomial

logger = logging.getLogger(__name__)


class NotAKnot(ValueError):
    """ Raised when parameters describe a link or no knot at all. """


class NotCoprime(NotAKnot):
    """ Raised when p and q share a common factor. """


class UnsupportedParameters(ValueError):
    """ Raised when parameters fall outside the supported formula scope. """


class TTKParams(object):
    """
    The parameters `(p, q, r, s)` of the twisted torus knot T(p,q;r,s): the
    (p,q)-torus knot with `s` full twists on `r` adjacent strands.

    Two parameter sets are equal when their `(p, q, r, s)` agree; the `mirrored`
    and `swapped` flags only record how `canonicalize` arrived at them.

    :param p:
        Number of strands of the torus braid.

    :param q:
        Number of passes of the torus braid.

    :param r:
        Number of twisted strands.

    :param s:
        Number of full twists (negative for left-handed twists).
    """

    __slots__ = ("p", "q", "r", "s", "mirrored", "swapped")

    def __init__(self, p, q, r, s, mirrored=False, swapped=False):
        self.p, self.q, self.r, self.s = (int(p), int(q), int(r), int(s))
        self.mirrored = bool(mirrored)
        self.swapped = bool(swapped)


    def __repr__(self):
        return "<{0}.{1} {2}>".format(self.__module__, type(self).__name__,
            str(self))


    def __str__(self):
        return "T({0},{1};{2},{3})".format(*self.key)


    def __eq__(self, other):
        if not isinstance(other, TTKParams):
            return NotImplemented
        return self.key == other.key


    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal


    def __hash__(self):
        return hash(self.key)


    def __iter__(self):
        return iter(self.key)


    def __lt__(self, other):
        return self.key < other.key


    def __getstate__(self):
        return (self.key, self.mirrored, self.swapped)


    def __setstate__(self, state):
        (self.p, self.q, self.r, self.s), self.mirrored, self.swapped = state


    @property
    def key(self):
        """ Return the `(p, q, r, s)` tuple. """
        return (self.p, self.q, self.r, self.s)


    @property
    def is_torus_reduction(self):
        """ Return whether these parameters reduce to a torus knot. """
        return self.r == 1 or self.s == 0 or self.r == self.p


ModularData = namedtuple("ModularData",
    ("Q", "R", "k", "kbar", "Qprime", "m", "kprime", "kbar_prime"))
ModularData.__doc__ = """
The residue combinatorics of T(p,q;r,s) for 1 < r < p.

Q is the increasing tuple of residues [j q^-1], j = 0..r-1; R the sorted
residues [-j q^-1], j = 1..q; k[i-1] counts R in [Q_{i-1}, Q_i); kbar holds the
prefix sums of k; Qprime = [r q^-1] lies strictly between Q_m and Q_{m+1};
kprime counts R in [Q_m, Qprime); kbar_prime = k_1 + ... + k_m + kprime.
"""

FormulaParts = namedtuple("FormulaParts", ("X", "Xtilde", "Y", "Ytilde"))


class AlexanderResult(namedtuple("AlexanderResult",
    ("params", "poly", "degree", "leading_coeff", "monic", "mirrored"))):
    """
    A normalized Alexander polynomial together with its degree span, absolute
    leading coefficient and monicity.
    """

    __slots__ = ()

    @classmethod
    def from_polynomial(cls, params, poly):
        """
        Build a result from a (not necessarily normalized) polynomial.

        :param params:
            The `TTKParams` the polynomial belongs to, or `None`.

        :param poly:
            The Alexander polynomial, up to units.
        """
        poly = laurent.normalize(poly)
        if not laurent.is_palindromic(poly):
            raise laurent.NotAKnotPolynomial(
                "Alexander polynomial of {} is not symmetric: {}".format(
                    params, poly))
        return cls(params, poly, laurent.degree_span(poly),
            laurent.leading_coefficient_abs(poly), laurent.is_monic(poly),
            getattr(params, "mirrored", False))


    def to_dict(self):
        """ Return the JSON-ready form of this result. """
        p, q, r, s = self.params.key if self.params is not None \
                   else (None, None, None, None)
        return dict(p=p, q=q, r=r, s=s, mirrored=self.mirrored,
            coeffs=self.poly.to_pairs(), degree=self.degree,
            leading_coeff=self.leading_coeff, monic=self.monic)


def residue(x, p):
    """
    Return the residue of `x` modulo `p`, in `[0, p)`.

    :param x:
        Any integer.

    :param p:
        A positive modulus.
    """
    if p < 1:
        raise ValueError("modulus must be positive, not {}".format(p))
    return x % p


def mod_inverse(q, p):
    """
    Return the multiplicative inverse of `q` modulo `p`, in `[1, p - 1]`.

    :param q:
        An integer coprime to `p`.

    :param p:
        A modulus of at least 2.
    """
    if p < 2:
        raise ValueError("modulus must be at least 2, not {}".format(p))
    if gcd(q, p) != 1:
        raise NotCoprime("{} has no inverse modulo {}".format(q, p))
    return pow(q, -1, p)


def canonicalize(raw):
    """
    Bring twisted torus knot parameters into the form p > q > 0, using
    T(p,q;r,s) = T(q,p;r,s) and that T(p,q;r,s) is the mirror of T(p,-q;r,-s).

    :param raw:
        A `(p, q, r, s)` sequence or `TTKParams`.

    :returns:
        A `TTKParams` whose `mirrored` and `swapped` flags record what was done.
    """

    p, q, r, s = (int(v) for v in raw)
    if p == 0 or q == 0:
        raise NotAKnot("T({},{}) is not a knot".format(p, q))
    if gcd(p, q) != 1:
        raise NotCoprime("p = {} and q = {} are not coprime (gcd = {})".format(
            p, q, gcd(p, q)))
    if p < 0 and q < 0:
        raise UnsupportedParameters(
            "at most one of p = {} and q = {} may be negative".format(p, q))

    mirrored = swapped = False
    if p < 0:
        p, q, swapped = (q, p, True)
    if q < 0:
        q, s, mirrored = (-q, -s, True)
    if q > p:
        p, q, swapped = (q, p, not swapped)
    if p == q:
        raise UnsupportedParameters("T({0},{0}) has no canonical form p > q"\
            .format(p))

    if not 1 <= r <= p:
        raise UnsupportedParameters(
            "r = {} is outside the supported range 1 <= r <= p = {}".format(r, p))

    params = TTKParams(p, q, r, s, mirrored=mirrored, swapped=swapped)
    if mirrored or swapped:
        logger.debug("Canonicalized {} to {} (swapped: {}, mirrored: {})"\
            .format(tuple(raw), params, swapped, mirrored))
    return params


def compute_modular_data(params):
    """
    Compute the residue combinatorics (Q, R, k, Q', m, k', and prefix sums)
    for canonical parameters with 1 < r < p.

    :param params:
        Canonical `TTKParams`.
    """

    p, q, r, _ = params.key
    if not 1 < r < p:
        raise UnsupportedParameters(
            "modular data needs 1 < r < p; got r = {}, p = {}".format(r, p))

    inverse = mod_inverse(q, p)
    Q = tuple(sorted(residue(j * inverse, p) for j in range(r)))
    R = tuple(sorted(residue(-j * inverse, p) for j in range(1, q + 1)))

    def count(low, high):
        return bisect_left(R, high) - bisect_left(R, low)

    k = tuple(count(Q[i - 1], Q[i]) for i in range(1, r))
    Qprime = residue(r * inverse, p)
    assert Qprime not in Q

    m = bisect_left(Q, Qprime) - 1
    kprime = count(Q[m], Qprime)
    kbar = tuple(accumulate(k))
    kbar_prime = sum(k[:m]) + kprime

    return ModularData(Q, R, k, kbar, Qprime, m, kprime, kbar_prime)


def _twisted_sum(exponents, rs):
    # (1 - t^{rs}) * sum(t^e)
    total = laurent.LaurentPolynomial([(e, 1) for e in exponents])
    return (ONE - monomial(rs)) * total


def formula_parts(params, data=None):
    """
    Return the four polynomials X, X~, Y, Y~ that enter the closed formula.

    :param params:
        Canonical `TTKParams` with 1 < r < p.

    :param data: [optional]
        Precomputed `ModularData` for these parameters.
    """

    if data is None:
        data = compute_modular_data(params)

    p, q, r, s = params.key
    rs = r * s
    m = data.m
    top = monomial(p * q + (r - 1) * rs)

    X = ONE - _twisted_sum(
        [data.kbar[i - 1] * p + (i - 1) * rs for i in range(1, r)], rs) - top
    Y = ONE - _twisted_sum(
        [data.Q[i] * q + (i - 1) * rs for i in range(1, r)], rs) - top

    if m == 0:
        Xtilde = ONE - monomial(data.kbar_prime * p)
        Ytilde = ONE - monomial(data.Qprime * q)
    else:
        Xtilde = ONE \
            - _twisted_sum(
                [data.kbar[i - 1] * p + (i - 1) * rs for i in range(1, m + 1)],
                rs) \
            - monomial(data.kbar_prime * p + m * rs)
        Ytilde = ONE \
            - _twisted_sum(
                [data.Q[i] * q + (i - 1) * rs for i in range(1, m + 1)], rs) \
            - monomial(data.Qprime * q + m * rs)

    return FormulaParts(X, Xtilde, Y, Ytilde)


def evaluate_formula(params, data=None):
    """
    Evaluate the closed formula

        (1 - t)(X~ Y - X Y~) / ((1 - t^p)(1 - t^q)(1 - t^r))

    exactly, without normalizing the result.

    :param params:
        Canonical `TTKParams` with 1 < r < p; s may be zero.

    :param data: [optional]
        Precomputed `ModularData` for these parameters.

    :raises NonzeroRemainder:
        If the rational expression is not a Laurent polynomial.
    """

    p, q, r, _ = params.key
    parts = formula_parts(params, data)
    numerator = (ONE - T) * (parts.Xtilde * parts.Y - parts.X * parts.Ytilde)

    quotient = numerator
    for exponent in (p, q, r):
        quotient = laurent.exact_divide(quotient, ONE - monomial(exponent))
    return quotient


def torus_knot_alexander(a, b):
    """
    Return the normalized Alexander polynomial of the (a,b)-torus knot,
    (1 - t)(1 - t^{ab}) / ((1 - t^a)(1 - t^b)).

    :param a:
        A positive integer.

    :param b:
        A positive integer coprime to `a`.
    """
    if a < 1 or b < 1:
        raise NotAKnot("torus knot parameters must be positive; got ({}, {})"\
            .format(a, b))
    if gcd(a, b) != 1:
        raise NotCoprime("T({},{}) is a link (gcd = {})".format(a, b, gcd(a, b)))
    if min(a, b) == 1:
        return ONE

    numerator = (ONE - T) * (ONE - monomial(a * b))
    quotient = laurent.exact_divide(numerator, ONE - monomial(a))
    quotient = laurent.exact_divide(quotient, ONE - monomial(b))
    return laurent.normalize(quotient)


def alexander_closed_form(params):
    """
    Compute the Alexander polynomial of a twisted torus knot.

    Parameters with 1 < r < p and s != 0 go through the closed formula; r = 1
    and s = 0 are the torus knot T(p,q), and r = p is the torus knot
    T(p, q + ps).

    :param params:
        `TTKParams` or a raw `(p, q, r, s)` sequence, canonicalized first.

    :returns:
        An `AlexanderResult`.
    """

    if not isinstance(params, TTKParams) \
    or not params.p > params.q > 0 or not 1 <= params.r <= params.p:
        params = canonicalize(params)

    p, q, r, s = params.key
    if r == 1 or s == 0:
        logger.debug("{} reduces to the torus knot T({},{})".format(params, p, q))
        poly = torus_knot_alexander(p, q)

    elif r == p:
        b = abs(q + p * s)
        logger.debug("{} reduces to the torus knot T({},{})".format(params, p, b))
        poly = ONE if b <= 1 else torus_knot_alexander(p, b)

    else:
        poly = evaluate_formula(params)

    return AlexanderResult.from_polynomial(params, poly)


def check_s0_reduction(p, q, r):
    """
    Evaluate the closed formula itself at s = 0 and compare it with the torus
    knot polynomial. A discrepancy is logged, not raised.

    :param p:
        Number of strands (p > q).

    :param q:
        A positive integer coprime to `p`.

    :param r:
        Number of twisted strands, 1 < r < p.

    :returns:
        A two-length tuple of the normalized formula value (or `None` if the
        formula failed) and whether it equals the torus knot polynomial.
    """

    params = canonicalize((p, q, r, 0))
    expected = torus_knot_alexander(params.p, params.q)
    try:
        observed = laurent.normalize(evaluate_formula(params))

    except (laurent.NonzeroRemainder, laurent.NotAKnotPolynomial,
            laurent.ZeroPolynomial):
        logger.warning("Closed formula fails at s = 0 for {}".format(params))
        return (None, False)

    agrees = observed == expected
    if not agrees:
        logger.warning("Closed formula at s = 0 gives {} for {}, but the torus "
                       "knot polynomial is {}".format(observed, params, expected))
    return (observed, agrees)
