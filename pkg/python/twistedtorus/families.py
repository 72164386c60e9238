#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Infinite families of non-fibered twisted torus knots: parameter generators,
verifiers for the predicted leading coefficients and degrees, and the
pairwise-distinctness check that separates family members.
"""

__all__ = ["FamilySpec", "FamilyReport", "DistinctnessReport", "family_params",
    "verify_theorem1", "verify_theorem2", "verify_theorem3", "verify_family",
    "verify_corollary_distinctness", "THEOREM3_VARIANTS", "ORACLE_MAX_STRANDS",
    "TheoremMismatch", "InvalidFamilyRange"]

import logging
from collections import namedtuple

from . import braid
from .core import (AlexanderResult, alexander_closed_form, canonicalize,
    evaluate_formula)
from .fibered import fiberedness_verdict

logger = logging.getLogger(__name__)

# The Burau oracle is only run automatically up to this many strands.
ORACLE_MAX_STRANDS = 12

THEOREM3_VARIANTS = {
    1: lambda n: (6 * n - 2, 2 * n - 1, 3 * n - 1, -1),
    2: lambda n: (10 * n - 6, 2 * n - 1, 5 * n - 3, -1),
    3: lambda n: (10 * n + 1, 2 * n, 5 * n, -1),
    4: lambda n: (4 * n + 4, 2 * n + 1, 2 * n + 2, -2),
    5: lambda n: (6 * n + 1, 2 * n, 3 * n, -2),
    6: lambda n: (6 * n + 2, 2 * n + 1, 3 * n + 1, -2),
    7: lambda n: (18 * n + 12, 6 * n + 5, 9 * n + 6, -2),
    8: lambda n: (18 * n + 18, 6 * n + 7, 9 * n + 9, -2),
}


class InvalidFamilyRange(ValueError):
    """ Raised when a family member is requested outside its valid range. """


class TheoremMismatch(AssertionError):
    """
    Raised when a computed invariant disagrees with its prediction.

    :param report:
        The `FamilyReport` or `DistinctnessReport` that failed.
    """

    def __init__(self, report):
        self.report = report
        self.observed = getattr(report, "observed", None)
        self.predicted = getattr(report, "predicted", None)
        super(TheoremMismatch, self).__init__("; ".join(report.failures))


class FamilySpec(namedtuple("FamilySpec", ("kind", "r", "s", "n", "variant"))):
    """
    A member of one of the families: `thm1` with `(r, s)`, `thm2` with `n`, or
    `thm3` with `(variant, n)`. Use the `theorem1`, `theorem2` and `theorem3`
    constructors, which validate the ranges.
    """

    __slots__ = ()

    @classmethod
    def theorem1(cls, r, s):
        """
        T(r|s|, r|s|-1; r, s) with r > 0 and s < -1.

        :param r:
            Number of twisted strands.

        :param s:
            Number of full twists.
        """
        if r < 1 or s > -2:
            raise InvalidFamilyRange(
                "thm1 needs r > 0 and s < -1; got r = {}, s = {}".format(r, s))
        return cls("thm1", int(r), int(s), None, None)


    @classmethod
    def theorem2(cls, n):
        """
        T(6n-1, 2n; 3n, -1) with n > 0.

        :param n:
            The family index.
        """
        if n < 1:
            raise InvalidFamilyRange("thm2 needs n > 0; got n = {}".format(n))
        return cls("thm2", None, None, int(n), None)


    @classmethod
    def theorem3(cls, variant, n):
        """
        One of the eight families with s = -1 or s = -2, for n > 1.

        :param variant:
            The family number, 1 to 8.

        :param n:
            The family index.
        """
        if variant not in THEOREM3_VARIANTS:
            raise InvalidFamilyRange("thm3 variant must be 1 to 8; got {}"\
                .format(variant))
        if n < 2:
            raise InvalidFamilyRange("thm3 needs n > 1; got n = {}".format(n))
        return cls("thm3", None, None, int(n), int(variant))


    def __str__(self):
        if self.kind == "thm1":
            return "thm1(r={}, s={})".format(self.r, self.s)
        if self.kind == "thm2":
            return "thm2(n={})".format(self.n)
        return "thm3:{}(n={})".format(self.variant, self.n)


    @property
    def predicted_leading(self):
        """ Return the predicted leading coefficient, where one is known. """
        if self.kind == "thm1":
            return self.r
        if self.kind == "thm2":
            return self.n
        return None


    @property
    def predicted_degree(self):
        """ Return the predicted degree, where one is known. """
        if self.kind == "thm1":
            a = self.r * abs(self.s)
            return a * (a - self.r - 2) + 2
        if self.kind == "thm2":
            return (3 * self.n - 2) * (self.n - 1)
        return None


class FamilyReport(namedtuple("FamilyReport", ("spec", "params", "result",
    "verdict", "oracle_agrees", "failures"))):
    """
    The outcome of verifying one family member. `oracle_agrees` is `None` when
    the Burau oracle was not run.
    """

    __slots__ = ()

    @property
    def passed(self):
        return not self.failures

    @property
    def predicted(self):
        return (self.spec.predicted_leading, self.spec.predicted_degree)

    @property
    def observed(self):
        return (self.result.leading_coeff, self.result.degree)


DistinctnessReport = namedtuple("DistinctnessReport",
    ("kind", "pairs", "collisions", "failures"))


def family_params(spec):
    """
    Return the literal twisted torus knot parameters of a family member.

    :param spec:
        A `FamilySpec`.
    """

    if spec.kind == "thm1":
        a = spec.r * abs(spec.s)
        raw = (a, a - 1, spec.r, spec.s)
    elif spec.kind == "thm2":
        n = spec.n
        raw = (6 * n - 1, 2 * n, 3 * n, -1)
    elif spec.kind == "thm3":
        raw = THEOREM3_VARIANTS[spec.variant](spec.n)
    else:
        raise InvalidFamilyRange("unknown family kind '{}'".format(spec.kind))
    return canonicalize(raw)


def _raw_extremes(raw):
    return (raw.min_degree, raw.coefficient(raw.min_degree), raw.max_degree)


def verify_family(spec, use_oracle=None, raw_prediction=None):
    """
    Compute the Alexander polynomial of a family member and compare it with
    the predictions attached to its family.

    :param spec:
        A `FamilySpec`.

    :param use_oracle: [optional]
        Run the Burau oracle as a second pipeline. By default it runs when the
        knot has at most `ORACLE_MAX_STRANDS` strands.

    :param raw_prediction: [optional]
        A three-length tuple `(lowest exponent, lowest coefficient, highest
        exponent)` predicted for the un-normalized closed-formula quotient.

    :raises TheoremMismatch:
        If any prediction fails.
    """

    params = family_params(spec)
    failures = []

    if 1 < params.r < params.p and params.s != 0:
        raw = evaluate_formula(params)
        result = AlexanderResult.from_polynomial(params, raw)
        if raw_prediction is not None:
            observed = _raw_extremes(raw)
            if observed != tuple(raw_prediction):
                failures.append("raw quotient (lowest exponent, lowest "
                    "coefficient, highest exponent) is {}, expected {}".format(
                        observed, tuple(raw_prediction)))
    else:
        result = alexander_closed_form(params)

    if spec.predicted_leading is not None \
    and result.leading_coeff != spec.predicted_leading:
        failures.append("leading coefficient is {}, expected {}".format(
            result.leading_coeff, spec.predicted_leading))

    if spec.predicted_degree is not None \
    and result.degree != spec.predicted_degree:
        failures.append("degree is {}, expected {}".format(
            result.degree, spec.predicted_degree))

    if spec.kind == "thm3" and result.monic:
        failures.append("Alexander polynomial {} is monic".format(result.poly))

    if use_oracle is None:
        use_oracle = params.p <= ORACLE_MAX_STRANDS

    oracle_agrees = None
    if use_oracle:
        oracle = braid.alexander_from_braid(braid.ttk_braid_word(params), params)
        oracle_agrees = oracle.poly == result.poly
        if not oracle_agrees:
            failures.append("Burau oracle gives {}, closed formula gives {}"\
                .format(oracle.poly, result.poly))

    verdict = fiberedness_verdict(params, result)
    report = FamilyReport(spec, params, result, verdict, oracle_agrees,
        tuple(failures))

    logger.debug("{} = {}: leading {}, degree {}, {}".format(spec, params,
        result.leading_coeff, result.degree,
        "pass" if report.passed else "FAIL"))

    if failures:
        raise TheoremMismatch(report)
    return report


def verify_theorem1(r, s, use_oracle=None):
    """
    Check that T(r|s|, r|s|-1; r, s) has leading coefficient r and degree
    r|s|(r|s| - r - 2) + 2. For r > 1 the un-normalized quotient must also
    have lowest term -r t^{(r|s|-r-1) r|s|} and highest exponent
    2(r|s|)^2 - 2r^2|s| - 3r|s| + 2.

    :param r:
        Number of twisted strands (r >= 1).

    :param s:
        Number of full twists (s <= -2).
    """
    spec = FamilySpec.theorem1(r, s)
    a = r * abs(s)
    raw_prediction = None
    if r > 1:
        raw_prediction = ((a - r - 1) * a, -r,
                          2 * a**2 - 2 * r**2 * abs(s) - 3 * a + 2)
    return verify_family(spec, use_oracle, raw_prediction)


def verify_theorem2(n, use_oracle=None):
    """
    Check that T(6n-1, 2n; 3n, -1) has leading coefficient n and degree
    (3n - 2)(n - 1), and that the un-normalized quotient has lowest term
    -n t^{-2n} and highest exponent 3n^2 - 7n + 2.

    :param n:
        The family index (n >= 1).
    """
    spec = FamilySpec.theorem2(n)
    raw_prediction = (-2 * n, -n, 3 * n**2 - 7 * n + 2)
    return verify_family(spec, use_oracle, raw_prediction)


def verify_theorem3(variant, n, use_oracle=None):
    """
    Check that a member of one of the eight s = -1, -2 families has a
    non-monic Alexander polynomial.

    :param variant:
        The family number, 1 to 8.

    :param n:
        The family index (n >= 2).
    """
    return verify_family(FamilySpec.theorem3(variant, n), use_oracle)


def verify_corollary_distinctness(kind, r_values=None, s_values=None,
    n_values=None, reports=None):
    """
    Check that the (degree, leading coefficient) pairs over a finite grid of a
    family are pairwise distinct, which shows the knots are pairwise distinct.

    :param kind:
        Either "thm1" (grid over `r_values` x `s_values`, r >= 2, s <= -2) or
        "thm2" (grid over `n_values`, n >= 2).

    :param reports: [optional]
        Already computed `FamilyReport`s for the grid members; missing members
        are computed.

    :raises TheoremMismatch:
        If two members share a pair.
    """

    if kind == "thm1":
        if not r_values or not s_values:
            raise InvalidFamilyRange("thm1 distinctness needs r and s ranges")
        if min(r_values) < 2 or max(s_values) > -2:
            raise InvalidFamilyRange("thm1 distinctness needs r >= 2 and s <= -2")
        specs = [FamilySpec.theorem1(r, s) for r in r_values for s in s_values]

    elif kind == "thm2":
        if not n_values:
            raise InvalidFamilyRange("thm2 distinctness needs an n range")
        if min(n_values) < 2:
            raise InvalidFamilyRange("thm2 distinctness needs n >= 2")
        specs = [FamilySpec.theorem2(n) for n in n_values]

    else:
        raise InvalidFamilyRange(
            "distinctness is defined for thm1 and thm2, not '{}'".format(kind))

    known = dict((report.spec, report) for report in (reports or ()))
    pairs = []
    for spec in specs:
        report = known.get(spec)
        if report is None:
            params = family_params(spec)
            result = AlexanderResult.from_polynomial(params,
                evaluate_formula(params))
        else:
            result = report.result
        pairs.append((spec, (result.degree, result.leading_coeff)))

    seen, collisions = {}, []
    for spec, pair in pairs:
        if pair in seen:
            collisions.append((seen[pair], spec, pair))
        else:
            seen[pair] = spec

    failures = tuple("{} and {} share (degree, leading coefficient) = {}"\
        .format(a, b, pair) for a, b, pair in collisions)
    report = DistinctnessReport(kind, tuple(pairs), tuple(collisions), failures)
    if failures:
        raise TheoremMismatch(report)
    return report
