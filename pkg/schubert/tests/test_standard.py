#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""

"""
from schubert.config import Config, ConfigManager
from schubert.cosets import *
from schubert.goodsets import count_good_multisets, divisor_ie_coefficients
from schubert.polynomial import cell_ring, initial_term
from schubert.standard import *
from schubert.tests import *
from schubert.exc import *


class TestStandardMonomials(BaseTestCase):
    """"""

    def test_local_degree(self):
        self.assertEqual(2, local_degree(self.element(self.G24, 3, 4)))
        self.assertEqual(0, local_degree(self.element(self.G24, 1, 2)))
        self.assertEqual(3, local_degree(make_element(GrassmannShape(4, 8), (3, 5, 7, 8))))

    def test_count(self):
        w = self.element(self.G24, 2, 4)
        self.assertEqual(4, count_standard_monomials(w, 1))
        self.assertEqual(9, count_standard_monomials(w, 2))
        self.assertEqual(1, count_standard_monomials(self.G24.identity(), 0))
        self.assertEqual(0, count_standard_monomials(self.G24.identity(), 2))

    def test_enumerate(self):
        w = self.element(self.G24, 1, 3)
        self.assertEqual(["<(1,3)>"], [str(s) for s in enumerate_standard_monomials(w, 1)])
        self.assertEqual(["<(1,3),(1,3)>"], [str(s) for s in enumerate_standard_monomials(w, 2)])
        self.assertEqual([], enumerate_standard_monomials(self.G24.identity(), 1))

    def test_enumerate_matches_count(self):
        for w in self.G25.elements():
            for m in range(5):
                monomials = enumerate_standard_monomials(w, m)
                self.assertEqual(count_standard_monomials(w, m), len(monomials))
                self.assertEqual(len(monomials), len(set(monomials)))
                for s in monomials:
                    self.assertEqual(m, s.degree)
                    self.assertTrue(s.is_bounded_by(w))
                    for a, b in zip(s.factors, s.factors[1:]):
                        self.assertTrue(bruhat_leq(b, a))

    def test_enumerate_bound(self):
        w = self.element(self.G25, 3, 5)
        mgr = ConfigManager(['argparse'])
        mgr.configs['argparse'] = Config({'max_enumeration': 10})
        self.assertRaises(SchubertLimitExceeded, enumerate_standard_monomials, w, 6, mgr)
        self.assertEqual(count_standard_monomials(w, 1),
            len(enumerate_standard_monomials(w, 1, mgr)))

    def test_matches_good_multisets(self):
        for shape in (self.G24, self.G25, self.G35):
            for w in shape.elements():
                for m in range(9):
                    self.assertEqual(count_good_multisets(w, m), count_standard_monomials(w, m),
                        (str(w), m))

    def test_difference_equation(self):
        for shape in (self.G24, self.G25):
            for w in self.non_identity(shape):
                d_w = degree(w)
                for m in range(7):
                    total = count_standard_monomials(w, m)
                    for lower, a in divisor_ie_coefficients(w).items():
                        total += a * count_standard_monomials(lower, m + d_w)
                    self.assertEqual(count_standard_monomials(w, m + d_w), total, (str(w), m))

    def test_intersection_law(self):
        elements = self.G25.elements()
        for a in elements:
            for b in elements:
                m = meet(a, b)
                for k in range(4):
                    both = [s for s in enumerate_standard_monomials(a, k) if s.is_bounded_by(b)]
                    self.assertEqual(enumerate_standard_monomials(m, k), both)

    def test_polynomial_leading_term(self):
        ring = cell_ring(self.G24)
        s = [s for s in enumerate_standard_monomials(self.element(self.G24, 3, 4), 2) if len(s) == 1][0]
        self.assertEqual("<(3,4)>", str(s))
        self.assertEqual("x[4,1]*x[3,2]", str(initial_term(s.polynomial(ring))))
