#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""

"""
from schubert.cosets import *
from schubert.goodsets import RootMultiset, count_good_multisets, multiplicity
from schubert.polynomial import ideal_generators
from schubert.tangent import *
from schubert.tests import *
from schubert.exc import *


class TangentTestCase(BaseTestCase):

    def datum(self, w, tau, shape=None):
        shape = shape or self.G24
        return PointedSchubertDatum(make_element(shape, w), make_element(shape, tau))

    def all_pairs(self, shape):
        return [PointedSchubertDatum(w, tau) for w in shape.elements() for tau in elements_below(w)]


class TestPointedDatum(TangentTestCase):
    """"""

    def test_not_in_variety(self):
        self.assertRaises(SchubertNotInVariety, self.datum, (2, 4), (3, 4))

    def test_shape_mismatch(self):
        self.assertRaises(SchubertShapeMismatch, PointedSchubertDatum,
            self.element(self.G24, 2, 4), self.element(self.G25, 1, 2))

    def test_sigma(self):
        self.assertEqual((1, 3, 2, 4), self.datum((2, 4), (1, 3)).sigma)


class TestTranslatedCounts(TangentTestCase):
    """"""

    def test_coset_right_product(self):
        chain = make_chain(self.G24, [(4, 1), (3, 2)])
        self.assertEqual((3, 4), coset_right_product(self.G24.identity(), chain).entries)
        tau = self.element(self.G24, 1, 3)
        self.assertEqual((3, 4), coset_right_product(tau, make_chain(self.G24, [(4, 1)])).entries)
        self.assertEqual((1, 2), coset_right_product(tau, make_chain(self.G24, [(3, 2)])).entries)

    def test_coset_right_product_shape_mismatch(self):
        self.assertRaises(SchubertShapeMismatch, coset_right_product,
            self.element(self.G25, 1, 3), make_chain(self.G24, [(4, 1)]))

    def test_is_good_multiset_at(self):
        datum = self.datum((2, 4), (1, 3))
        S = lambda *pairs: RootMultiset.from_pairs(self.G24, pairs)
        self.assertFalse(is_good_multiset_at(S((4, 1)), datum))
        self.assertTrue(is_good_multiset_at(S((3, 1), (3, 2), (4, 2)), datum))
        self.assertTrue(is_good_multiset_at(S(), datum))

    def test_count_good_at(self):
        self.assertEqual(9, count_good_at(self.datum((2, 4), (1, 2)), 2))
        self.assertEqual(3, count_good_at(self.datum((2, 4), (1, 3)), 1))
        self.assertEqual(3, count_good_at(self.datum((2, 4), (2, 4)), 1))
        self.assertEqual(1, count_good_at(self.datum((2, 4), (1, 3)), 3, uniset_only=True))

    def test_count_against_enumeration(self):
        for datum in self.all_pairs(self.G24):
            for m in range(4):
                self.assertEqual(len(list(iter_good_multisets_at(datum, m))),
                    count_good_at(datum, m), (str(datum), m))

    def test_multiplicity_at(self):
        self.assertEqual(1, multiplicity_at(self.datum((2, 4), (1, 3))))
        self.assertEqual(2, multiplicity_at(self.datum((2, 4), (1, 2))))
        self.assertEqual(1, multiplicity_at(self.datum((3, 4), (1, 2))))

    def test_identity_reduces(self):
        for shape in (self.G24, self.G25, self.G35):
            for w in shape.elements():
                datum = PointedSchubertDatum(w, shape.identity())
                self.assertEqual(multiplicity(w), multiplicity_at(datum))
                for m in range(6):
                    self.assertEqual(count_good_multisets(w, m), count_good_at(datum, m))

    def test_smooth_profile(self):
        for datum in self.all_pairs(self.G25):
            if is_smooth_profile(datum, 4):
                self.assertEqual(1, multiplicity_at(datum), str(datum))


class TestTranslatedGenerators(TangentTestCase):
    """"""

    def test_identity_is_ideal_generators(self):
        for shape in (self.G24, self.G25, self.G35):
            for w in shape.elements():
                datum = PointedSchubertDatum(w, shape.identity())
                self.assertEqual(ideal_generators(w), translated_generators(datum))

    def test_examples(self):
        self.assertEqual(["x[4,1]"], [str(g) for g in translated_generators(self.datum((2, 4), (1, 3)))])
        self.assertEqual([], translated_generators(self.datum((3, 4), (2, 3))))

    def test_literal_minor_up_to_sign(self):
        for shape in (self.G24, self.G25):
            for datum in self.all_pairs(shape):
                thetas = [t for t in shape.elements() if not bruhat_leq(t, datum.w)]
                for theta, g in zip(thetas, translated_generators(datum)):
                    literal = literal_translated_minor(datum, theta)
                    self.assertTrue(literal == g or literal == -g, (str(datum), str(theta)))

    def test_generators_vanish_at_tau(self):
        for datum in self.all_pairs(self.G25):
            for g in translated_generators(datum):
                self.assertTrue(g.order() >= 1, str(datum))


class TestOracle(TangentTestCase):
    """"""

    def test_quadric_cone(self):
        self.assertEqual((1, 4, 9, 16), local_hilbert_oracle(self.datum((2, 4), (1, 2)), 3).values)

    def test_free_ring(self):
        for tau in self.G24.elements():
            table = local_hilbert_oracle(self.datum((3, 4), tau.entries), 2)
            self.assertEqual((1, 4, 10), table.values)
            self.assertEqual(2, table.j_max)

    def test_smooth_point(self):
        self.assertEqual((1, 3, 6), local_hilbert_oracle(self.datum((2, 4), (1, 3)), 2).values)

    def test_limits(self):
        shape = GrassmannShape(3, 8)
        datum = PointedSchubertDatum(shape.identity(), shape.identity())
        self.assertRaises(SchubertLimitExceeded, local_hilbert_oracle, datum, 2)
        self.assertRaises(SchubertInvalidInput, local_hilbert_oracle,
            self.datum((2, 4), (1, 2)), -1)

    def test_oracle_multiplicity(self):
        table = local_hilbert_oracle(self.datum((2, 4), (1, 2)), 3)
        self.assertEqual(2, oracle_multiplicity(table, 3))
        self.assertEqual(None, oracle_multiplicity(table, 4))

    def test_oracle_multiplicity_checks_higher_degrees(self):
        # K[x,y]/(x^2, xy) has h = 1, 2, 1, 1, ... and multiplicity 1, not f_1 = 2
        self.assertEqual(None, oracle_multiplicity(LocalHilbertTable((1, 2, 1, 1, 1)), 1))
        self.assertEqual(2, oracle_multiplicity(LocalHilbertTable((1, 2, 2, 2, 2)), 1))
        self.assertEqual(None, oracle_multiplicity(LocalHilbertTable((1, 4, 9, 16, 26)), 3))


class TestConjectures(TangentTestCase):
    """"""

    def test_examples(self):
        self.assertTrue(check_conjectures(self.datum((2, 4), (1, 2)), 3).passed)
        self.assertTrue(check_conjectures(self.datum((2, 4), (1, 3)), 2).passed)
        self.assertTrue(check_conjectures(self.datum((3, 4), (1, 4)), 2).passed)

    def test_report_content(self):
        check = check_conjectures(self.datum((2, 4), (1, 2)), 4)
        self.assertEqual([1, 4, 9, 16, 25], [row['oracle'] for row in check['degrees']])
        self.assertEqual(2, check['multiplicity'])
        self.assertEqual(2, check['oracle_multiplicity'])
        self.assertTrue(check['multiplicity_equal'])

    def test_skipped_multiplicity(self):
        check = check_conjectures(self.datum((2, 4), (1, 2)), 2)
        self.assertEqual(None, check['oracle_multiplicity'])
        self.assertTrue(check.passed)

    def test_all_pairs_g24(self):
        for datum in self.all_pairs(self.G24):
            self.assertTrue(check_conjectures(datum, 4).passed, str(datum))

    def test_all_pairs_g25(self):
        for datum in self.all_pairs(self.G25):
            self.assertTrue(check_conjectures(datum, 3).passed, str(datum))
