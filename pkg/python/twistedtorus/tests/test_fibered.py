#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Unit tests for fiberedness verdicts.
"""

import unittest

from .. import core, fibered
from ..core import AlexanderResult, TTKParams
from ..laurent import LaurentPolynomial


class TestVerdicts(unittest.TestCase):

    def verdict(self, *params):
        params = core.canonicalize(params)
        return fibered.fiberedness_verdict(params,
            core.alexander_closed_form(params))

    def test_non_monic(self):
        verdict = self.verdict(4, 3, 2, -2)
        self.assertEqual(verdict.status, fibered.NOT_FIBERED_NON_MONIC)
        self.assertIn("2", verdict.witness)

    def test_positive_braid_with_negative_twists(self):
        # q|s| = 6 < p = 7 and r = 2 < q = 3.
        verdict = self.verdict(7, 3, 2, -2)
        self.assertEqual(verdict.status, fibered.FIBERED_POSITIVE_BRAID)

    def test_positive_twists(self):
        for params in ((5, 2, 3, 1), (7, 3, 7, 2), (10, 3, 5, 1)):
            self.assertEqual(self.verdict(*params).status,
                             fibered.FIBERED_POSITIVE_BRAID)

    def test_torus_knots(self):
        verdict = self.verdict(5, 2, 1, -3)
        self.assertEqual(verdict.status, fibered.FIBERED_POSITIVE_BRAID)
        self.assertIn("torus knot", verdict.witness)
        self.assertEqual(self.verdict(5, 2, 3, 0).status,
                         fibered.FIBERED_POSITIVE_BRAID)

    def test_full_twists_on_all_strands(self):
        # T(5,2;5,-1) is the mirror of T(5,3).
        verdict = self.verdict(5, 2, 5, -1)
        self.assertEqual(verdict.status, fibered.FIBERED_POSITIVE_BRAID)
        self.assertIn("T(5,3)", verdict.witness)
        for params in ((7, 3, 7, -1), (4, 3, 4, -2), (3, 2, 3, -1)):
            self.assertEqual(self.verdict(*params).status,
                             fibered.FIBERED_POSITIVE_BRAID)

    def test_inconclusive(self):
        verdict = self.verdict(5, 2, 3, -1)
        self.assertEqual(verdict.status, fibered.INCONCLUSIVE)

    def test_figure_one_knot(self):
        self.assertEqual(self.verdict(10, 3, 5, -1).status,
                         fibered.NOT_FIBERED_NON_MONIC)

    def test_certificate_wins_and_contradiction_is_raised(self):
        params = TTKParams(7, 3, 2, -2)
        bogus = AlexanderResult.from_polynomial(params,
            LaurentPolynomial.parse("2 - 3*t + 2*t^2"))
        with self.assertRaises(fibered.InternalContradiction):
            fibered.fiberedness_verdict(params, bogus)

    def test_witness(self):
        self.assertIsNone(fibered.positive_braid_witness(TTKParams(4, 3, 2, -2)))
        self.assertIsNotNone(
            fibered.positive_braid_witness(TTKParams(7, 3, 2, -2)))
        # r = q fails the strict inequality.
        self.assertIsNone(fibered.positive_braid_witness(TTKParams(7, 3, 3, -2)))

    def test_non_monic_always_recheckable(self):
        for params in ((4, 3, 2, -2), (6, 5, 3, -2), (10, 3, 5, -1),
                       (11, 4, 6, -1)):
            params = core.canonicalize(params)
            result = core.alexander_closed_form(params)
            verdict = fibered.fiberedness_verdict(params, result)
            self.assertEqual(verdict.status, fibered.NOT_FIBERED_NON_MONIC)
            restored = LaurentPolynomial.from_pairs(result.to_dict()["coeffs"])
            self.assertNotEqual(abs(restored.coefficient(restored.max_degree)), 1)


if __name__ == "__main__":
    unittest.main()
