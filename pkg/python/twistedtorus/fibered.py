#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Fiberedness verdicts for twisted torus knots.

A positive braid knot is fibered, and a fibered knot has a monic Alexander
polynomial. The first gives a sufficient condition read off the parameters,
the second an obstruction read off the polynomial. Anything else is left
inconclusive.
"""

__all__ = ["FiberednessVerdict", "fiberedness_verdict", "positive_braid_witness",
    "FIBERED_POSITIVE_BRAID", "NOT_FIBERED_NON_MONIC", "INCONCLUSIVE",
    "VERDICTS", "InternalContradiction"]

import logging
from collections import namedtuple

logger = logging.getLogger(__name__)

FIBERED_POSITIVE_BRAID = "FiberedPositiveBraid"
NOT_FIBERED_NON_MONIC = "NotFiberedNonMonic"
INCONCLUSIVE = "Inconclusive"

VERDICTS = (FIBERED_POSITIVE_BRAID, NOT_FIBERED_NON_MONIC, INCONCLUSIVE)


class InternalContradiction(RuntimeError):
    """
    Raised when a knot certified as a positive braid knot has a non-monic
    Alexander polynomial, which would mean the certificate is wrong.
    """


FiberednessVerdict = namedtuple("FiberednessVerdict", ("status", "witness"))


def positive_braid_witness(params):
    """
    Return a description of the positive-braid certificate that applies to the
    parameters, or `None`.

    :param params:
        Canonical `TTKParams`.
    """

    p, q, r, s = params.key
    if r == 1 or s == 0:
        return "torus knot T({},{}) is a positive braid knot".format(p, q)
    if r == p:
        # Up to mirror image, the torus knot T(p, |q + ps|).
        return "torus knot T({},{}) is a positive braid knot".format(
            p, abs(q + p * s))
    if s > 0 and r <= p:
        return "s > 0 and r <= p: positive braid knot"
    if s < 0 and q * abs(s) < p and r < q:
        return "q|s| = {} < p and r < q: positive braid knot".format(q * abs(s))
    return None


def fiberedness_verdict(params, result):
    """
    Decide fiberedness as far as the positive-braid certificate and the
    monicity obstruction allow. The certificate is checked first.

    :param params:
        Canonical `TTKParams`.

    :param result:
        The `AlexanderResult` computed for `params`.

    :raises InternalContradiction:
        If a certified positive braid knot has a non-monic polynomial.
    """

    witness = positive_braid_witness(params)
    if witness is not None:
        if not result.monic:
            raise InternalContradiction(
                "{} is certified fibered ({}) but its Alexander polynomial {} "
                "has leading coefficient {}".format(
                    params, witness, result.poly, result.leading_coeff))
        return FiberednessVerdict(FIBERED_POSITIVE_BRAID, witness)

    if not result.monic:
        return FiberednessVerdict(NOT_FIBERED_NON_MONIC,
            "leading coefficient {} != 1".format(result.leading_coeff))

    return FiberednessVerdict(INCONCLUSIVE,
        "monic Alexander polynomial and no positive braid certificate")
