#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Unit tests for twisted torus knot parameters, modular data and the closed
formula.
"""

import pickle
import unittest
from math import gcd

import numpy as np

from .. import core, laurent
from ..core import TTKParams
from ..laurent import LaurentPolynomial, ONE, monomial


def poly(text):
    return LaurentPolynomial.parse(text)


class TestModularArithmetic(unittest.TestCase):

    def test_residue(self):
        self.assertEqual(core.residue(-3, 4), 1)
        self.assertEqual(core.residue(7, 7), 0)
        self.assertEqual(core.residue(-6, 5), 4)
        with self.assertRaises(ValueError):
            core.residue(3, 0)

    def test_mod_inverse(self):
        self.assertEqual(core.mod_inverse(3, 4), 3)
        self.assertEqual(core.mod_inverse(2, 5), 3)
        for a in range(3, 30):
            self.assertEqual(core.mod_inverse(a - 1, a), a - 1)

    def test_mod_inverse_not_coprime(self):
        with self.assertRaises(core.NotCoprime):
            core.mod_inverse(2, 4)
        with self.assertRaises(ValueError):
            core.mod_inverse(1, 1)


class TestCanonicalize(unittest.TestCase):

    def test_already_canonical(self):
        params = core.canonicalize((5, 2, 3, -1))
        self.assertEqual(params.key, (5, 2, 3, -1))
        self.assertFalse(params.mirrored)
        self.assertFalse(params.swapped)

    def test_swap(self):
        params = core.canonicalize((3, 10, 5, -1))
        self.assertEqual(params.key, (10, 3, 5, -1))
        self.assertTrue(params.swapped)
        self.assertFalse(params.mirrored)

    def test_mirror(self):
        params = core.canonicalize((4, -3, 2, 2))
        self.assertEqual(params.key, (4, 3, 2, -2))
        self.assertTrue(params.mirrored)
        self.assertFalse(params.swapped)

    def test_negative_p(self):
        params = core.canonicalize((-3, 4, 2, 1))
        self.assertEqual(params.key, (4, 3, 2, -1))
        self.assertTrue(params.mirrored)

    def test_errors(self):
        with self.assertRaises(core.NotCoprime):
            core.canonicalize((4, 2, 2, 1))
        with self.assertRaises(core.NotAKnot):
            core.canonicalize((0, 3, 1, 1))
        with self.assertRaises(core.UnsupportedParameters):
            core.canonicalize((-4, -3, 2, 1))
        with self.assertRaises(core.UnsupportedParameters):
            core.canonicalize((1, 1, 1, 0))
        with self.assertRaises(core.UnsupportedParameters):
            core.canonicalize((4, 3, 5, -1))
        with self.assertRaises(core.UnsupportedParameters):
            core.canonicalize((4, 3, 0, -1))

    def test_not_coprime_is_not_a_knot(self):
        self.assertTrue(issubclass(core.NotCoprime, core.NotAKnot))


class TestTTKParams(unittest.TestCase):

    def test_equality_ignores_flags(self):
        a = TTKParams(4, 3, 2, -2)
        b = TTKParams(4, 3, 2, -2, mirrored=True)
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertNotEqual(a, TTKParams(4, 3, 2, -1))

    def test_str_and_order(self):
        self.assertEqual(str(TTKParams(4, 3, 2, -2)), "T(4,3;2,-2)")
        self.assertLess(TTKParams(4, 3, 2, -2), TTKParams(4, 3, 2, -1))
        self.assertEqual(tuple(TTKParams(5, 2, 3, -1)), (5, 2, 3, -1))

    def test_pickle(self):
        params = TTKParams(10, 3, 5, -1, swapped=True)
        restored = pickle.loads(pickle.dumps(params))
        self.assertEqual(restored, params)
        self.assertTrue(restored.swapped)

    def test_torus_reduction(self):
        self.assertTrue(TTKParams(5, 2, 1, -3).is_torus_reduction)
        self.assertTrue(TTKParams(5, 2, 5, -3).is_torus_reduction)
        self.assertTrue(TTKParams(5, 2, 3, 0).is_torus_reduction)
        self.assertFalse(TTKParams(5, 2, 3, -1).is_torus_reduction)


class TestModularData(unittest.TestCase):

    def test_twist_knot(self):
        data = core.compute_modular_data(TTKParams(4, 3, 2, -2))
        self.assertEqual(data.Q, (0, 3))
        self.assertEqual(data.R, (1, 2, 3))
        self.assertEqual(data.k, (2, ))
        self.assertEqual((data.Qprime, data.m, data.kprime, data.kbar_prime),
                         (2, 0, 1, 1))

    def test_theorem2_first_member(self):
        data = core.compute_modular_data(TTKParams(5, 2, 3, -1))
        self.assertEqual(data.Q, (0, 1, 3))
        self.assertEqual(data.R, (2, 4))
        self.assertEqual(data.k, (0, 1))
        self.assertEqual(data.kbar, (0, 1))
        self.assertEqual((data.Qprime, data.m, data.kprime, data.kbar_prime),
                         (4, 2, 0, 1))

    def test_brute_force_example(self):
        data = core.compute_modular_data(TTKParams(5, 3, 2, -1))
        self.assertEqual(data.Q, (0, 2))
        self.assertEqual(data.R, (1, 3, 4))
        self.assertEqual(data.k, (1, ))
        self.assertEqual((data.Qprime, data.m, data.kprime, data.kbar_prime),
                         (4, 1, 1, 2))

    def test_out_of_range(self):
        with self.assertRaises(core.UnsupportedParameters):
            core.compute_modular_data(TTKParams(5, 2, 1, -1))
        with self.assertRaises(core.UnsupportedParameters):
            core.compute_modular_data(TTKParams(5, 2, 5, -1))

    def test_random_triples_against_brute_force(self):
        random = np.random.RandomState(20)
        checked = 0
        while checked < 1000:
            p = int(random.randint(3, 51))
            q = int(random.randint(1, p))
            if gcd(p, q) != 1:
                continue
            r = int(random.randint(2, p))
            data = core.compute_modular_data(TTKParams(p, q, r, -1))

            inverse = [v for v in range(1, p) if (v * q) % p == 1][0]
            Q = sorted((j * inverse) % p for j in range(r))
            R = sorted((-j * inverse) % p for j in range(1, q + 1))
            k = [len([x for x in R if Q[i - 1] <= x < Q[i]])
                 for i in range(1, r)]
            Qprime = (r * inverse) % p

            self.assertEqual(list(data.Q), Q)
            self.assertEqual(list(data.R), R)
            self.assertEqual(list(data.k), k)
            self.assertEqual(data.Q[0], 0)
            self.assertEqual(len(data.Q), r)
            self.assertEqual(len(data.R), q)
            self.assertEqual(data.Qprime, Qprime)
            self.assertNotIn(Qprime, Q)
            self.assertLess(Q[data.m], Qprime)
            self.assertTrue(data.m == r - 1 or Qprime < Q[data.m + 1])
            self.assertEqual(data.kprime,
                len([x for x in R if Q[data.m] <= x < Qprime]))
            self.assertEqual(list(data.kbar), list(np.cumsum(k)))
            self.assertEqual(data.kbar_prime, sum(k[:data.m]) + data.kprime)
            checked += 1

    def test_theorem1_closed_forms(self):
        for r in range(2, 7):
            for s in range(-5, -1):
                a = r * abs(s)
                data = core.compute_modular_data(TTKParams(a, a - 1, r, s))
                self.assertEqual(data.Q[1:],
                                 tuple(a - r + i for i in range(1, r)))
                self.assertEqual(data.k[0], a - r)
                self.assertTrue(all(k == 1 for k in data.k[1:]))
                self.assertEqual(data.m, 0)
                self.assertEqual(data.kprime, a - r - 1)

    def test_theorem2_closed_forms(self):
        for n in range(1, 7):
            data = core.compute_modular_data(
                TTKParams(6 * n - 1, 2 * n, 3 * n, -1))
            self.assertEqual(data.R,
                tuple(3 * i - 1 for i in range(1, 2 * n)) + (6 * n - 2, ))
            self.assertEqual(data.m, 2 * n)
            self.assertEqual(data.kprime, 0)


class TestFormulaParts(unittest.TestCase):

    def test_twist_knot(self):
        parts = core.formula_parts(TTKParams(4, 3, 2, -2))
        self.assertEqual(parts.Xtilde, ONE - monomial(4))
        self.assertEqual(parts.Ytilde, ONE - monomial(6))

    def test_s0(self):
        parts = core.formula_parts(TTKParams(3, 2, 2, 0))
        self.assertEqual(parts.X, ONE - monomial(6))
        self.assertTrue(parts.Xtilde.is_zero)
        self.assertEqual(parts.Y, ONE - monomial(6))
        self.assertEqual(parts.Ytilde, ONE - monomial(2))

    def test_negative_exponents(self):
        parts = core.formula_parts(TTKParams(5, 2, 3, -1))
        self.assertEqual(parts.X, poly("t^-3 + t^-1 - t^2 - t^4"))
        self.assertEqual(parts.Xtilde, poly("t^-3 - t^2"))
        self.assertEqual(parts.Y, poly("t^-1 + 2 - t^2 - t^3 - t^4"))
        self.assertEqual(parts.Ytilde, poly("t^-1 + 2 - 2*t^2 - t^3"))


class TestTorusKnots(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(core.torus_knot_alexander(3, 2), poly("1 - t + t^2"))
        self.assertEqual(core.torus_knot_alexander(2, 3), poly("1 - t + t^2"))
        self.assertEqual(core.torus_knot_alexander(5, 2),
                         poly("1 - t + t^2 - t^3 + t^4"))
        self.assertEqual(core.torus_knot_alexander(7, 1), ONE)

    def test_errors(self):
        with self.assertRaises(core.NotCoprime):
            core.torus_knot_alexander(4, 6)
        with self.assertRaises(core.NotAKnot):
            core.torus_knot_alexander(0, 3)

    def test_degree(self):
        for p in range(2, 13):
            for q in range(1, p):
                if gcd(p, q) == 1:
                    self.assertEqual(laurent.degree_span(
                        core.torus_knot_alexander(p, q)), (p - 1) * (q - 1))


class TestClosedForm(unittest.TestCase):

    def test_twist_knot(self):
        result = core.alexander_closed_form((4, 3, 2, -2))
        self.assertEqual(result.poly, poly("2 - 3*t + 2*t^2"))
        self.assertEqual(result.degree, 2)
        self.assertEqual(result.leading_coeff, 2)
        self.assertFalse(result.monic)

    def test_rejects_asymmetric_polynomials(self):
        with self.assertRaises(laurent.NotAKnotPolynomial):
            core.AlexanderResult.from_polynomial(TTKParams(4, 3, 2, -2),
                poly("1 - t + t^3"))

    def test_raw_quotient_of_twist_knot(self):
        raw = core.evaluate_formula(TTKParams(4, 3, 2, -2))
        self.assertEqual(raw, -monomial(4) * poly("2 - 3*t + 2*t^2"))

    def test_unknot_member(self):
        result = core.alexander_closed_form((5, 2, 3, -1))
        self.assertEqual(result.poly, ONE)
        self.assertEqual(result.degree, 0)
        self.assertEqual(result.leading_coeff, 1)
        self.assertEqual(core.evaluate_formula(TTKParams(5, 2, 3, -1)),
                         -monomial(-2))

    def test_reductions(self):
        trefoil = poly("1 - t + t^2")
        self.assertEqual(core.alexander_closed_form((3, 2, 1, 0)).poly, trefoil)
        self.assertEqual(core.alexander_closed_form((3, 2, 2, 0)).poly, trefoil)
        self.assertEqual(core.alexander_closed_form((3, 2, 1, -4)).poly, trefoil)
        # T(3,2;3,-1) = T(3,-1) is the unknot; T(3,1;3,1) = T(3,4).
        self.assertEqual(core.alexander_closed_form((3, 2, 3, -1)).poly, ONE)
        self.assertEqual(core.alexander_closed_form((3, 1, 3, 1)).poly,
                         core.torus_knot_alexander(3, 4))
        self.assertEqual(core.alexander_closed_form((5, 2, 5, -1)).poly,
                         core.torus_knot_alexander(5, 3))

    def test_canonicalizes_raw_tuples(self):
        a = core.alexander_closed_form((3, 10, 5, -1))
        b = core.alexander_closed_form((10, 3, 5, -1))
        self.assertEqual(a.poly, b.poly)
        self.assertEqual(a.params.key, (10, 3, 5, -1))
        mirrored = core.alexander_closed_form((4, -3, 2, 2))
        self.assertTrue(mirrored.mirrored)
        self.assertEqual(mirrored.poly, poly("2 - 3*t + 2*t^2"))

    def test_rejects_unsupported(self):
        with self.assertRaises(core.UnsupportedParameters):
            core.alexander_closed_form((4, 3, 5, -1))
        with self.assertRaises(core.NotCoprime):
            core.alexander_closed_form((4, 2, 2, 1))

    def test_results_are_knot_polynomials(self):
        for p in range(3, 10):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                for r in range(2, p):
                    for s in (-2, -1, 1, 2):
                        result = core.alexander_closed_form((p, q, r, s))
                        self.assertTrue(laurent.is_palindromic(result.poly))
                        self.assertEqual(
                            laurent.evaluate_at(result.poly, 1), 1)
                        self.assertEqual(result.poly.min_degree, 0)

    def test_to_dict(self):
        result = core.alexander_closed_form((3, 2, 1, 0))
        self.assertEqual(result.to_dict(), dict(p=3, q=2, r=1, s=0,
            mirrored=False, coeffs=[[0, 1], [1, -1], [2, 1]], degree=2,
            leading_coeff=1, monic=True))
        self.assertEqual(LaurentPolynomial.from_pairs(
            result.to_dict()["coeffs"]), result.poly)


class TestS0Reduction(unittest.TestCase):

    def test_formula_reduces_to_torus_knots(self):
        for p in range(3, 13):
            for q in range(1, p):
                if gcd(p, q) != 1:
                    continue
                for r in range(2, p):
                    observed, agrees = core.check_s0_reduction(p, q, r)
                    self.assertTrue(agrees, msg="T({},{};{},0)".format(p, q, r))
                    self.assertEqual(laurent.degree_span(observed),
                                     (p - 1) * (q - 1))


if __name__ == "__main__":
    unittest.main()
