#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""

"""
import itertools

from schubert.cosets import *
from schubert.tests import *
from schubert.exc import *


SMALL_SHAPES = [GrassmannShape(d, n) for n in range(2, 8) for d in range(1, min(n, 4))]


class TestShape(BaseTestCase):
    """"""

    def test_invalid(self):
        self.assertRaises(SchubertInvalidShape, GrassmannShape, 0, 4)
        self.assertRaises(SchubertInvalidShape, GrassmannShape, 4, 4)
        self.assertRaises(SchubertInvalidShape, GrassmannShape, 5, 4)

    def test_sizes(self):
        self.assertEqual(6, self.G24.lattice_size)
        self.assertEqual(4, self.G24.nroots)
        self.assertEqual(63, GrassmannShape(7, 16).nroots)
        self.assertEqual(6, len(self.G24.elements()))

    def test_identity(self):
        self.assertEqual((1, 2), self.G24.identity().entries)
        self.assertTrue(self.G24.identity().is_identity)


class TestElements(BaseTestCase):
    """"""

    def test_make_element(self):
        self.assertEqual((1, 2), make_element(self.G24, (1, 2)).entries)
        self.assertEqual((2, 4), make_element(self.G24, (2, 4)).entries)

    def test_make_element_invalid(self):
        self.assertRaises(SchubertInvalidElement, make_element, self.G24, (4, 2))
        self.assertRaises(SchubertInvalidElement, make_element, self.G24, (2, 2))
        self.assertRaises(SchubertInvalidElement, make_element, self.G24, (1, 5))
        self.assertRaises(SchubertInvalidElement, make_element, self.G24, (0, 2))
        self.assertRaises(SchubertInvalidElement, make_element, self.G24, (1, 2, 3))

    def test_str(self):
        self.assertEqual("(2,4)", str(self.element(self.G24, 2, 4)))

    def test_bruhat_leq(self):
        self.assertTrue(bruhat_leq(self.element(self.G24, 1, 3), self.element(self.G24, 2, 4)))
        self.assertFalse(bruhat_leq(self.element(self.G24, 3, 4), self.element(self.G24, 2, 4)))
        self.assertTrue(bruhat_leq(self.element(self.G24, 2, 4), self.element(self.G24, 2, 4)))

    def test_bruhat_shape_mismatch(self):
        self.assertRaises(SchubertShapeMismatch, bruhat_leq,
            self.element(self.G24, 1, 2), self.element(self.G25, 1, 2))

    def test_dimension(self):
        self.assertEqual(3, schubert_dimension(self.element(self.G24, 2, 4)))
        self.assertEqual(0, schubert_dimension(self.element(self.G24, 1, 2)))
        self.assertEqual(4, schubert_dimension(self.element(self.G24, 3, 4)))


class TestRoots(BaseTestCase):
    """"""

    def test_positive_roots(self):
        self.assertEqual([(3, 1), (3, 2), (4, 1), (4, 2)],
            [(r.row, r.col) for r in positive_roots(self.G24)])
        self.assertEqual([(2, 1)], [(r.row, r.col) for r in positive_roots(GrassmannShape(1, 2))])
        self.assertEqual(63, len(positive_roots(GrassmannShape(7, 16))))

    def test_invalid_root(self):
        self.assertRaises(SchubertInvalidRoot, make_root, self.G24, 2, 1)
        self.assertRaises(SchubertInvalidRoot, make_root, self.G24, 3, 3)

    def test_root_to_coset(self):
        self.assertEqual((2, 3), root_to_coset(make_root(self.G24, 3, 1)).entries)
        self.assertEqual((1, 4), root_to_coset(make_root(self.G24, 4, 2)).entries)
        self.assertEqual((2, 3, 4, 8), root_to_coset(make_root(GrassmannShape(4, 8), 8, 1)).entries)

    def test_roots_commute(self):
        r = lambda i, j: make_root(self.G24, i, j)
        self.assertTrue(roots_commute(r(4, 1), r(3, 2)))
        self.assertFalse(roots_commute(r(3, 1), r(3, 2)))
        self.assertFalse(roots_commute(r(4, 2), r(3, 2)))

    def test_reflection_less(self):
        r = lambda i, j: make_root(self.G24, i, j)
        self.assertTrue(reflection_less(r(3, 2), r(4, 1)))
        self.assertFalse(reflection_less(r(3, 1), r(4, 2)))
        shape = GrassmannShape(4, 8)
        self.assertTrue(reflection_less(make_root(shape, 5, 4), make_root(shape, 7, 2)))

    def test_reflection_order_matches_coset_images(self):
        for shape in SMALL_SHAPES:
            for a, b in itertools.product(positive_roots(shape), repeat=2):
                self.assertEqual(bruhat_less(root_to_coset(a), root_to_coset(b)),
                    reflection_less(a, b), (shape, str(a), str(b)))


def _apply(chain, k):
    """Image of k under the permutation s_1 ... s_t."""
    for root in reversed(chain.roots):
        if k == root.row:
            k = root.col
        elif k == root.col:
            k = root.row
    return k


class TestChains(BaseTestCase):
    """"""

    def test_chain_validation(self):
        self.assertRaises(SchubertInvalidChain, make_chain, self.G24, [(3, 2), (4, 1)])
        self.assertRaises(SchubertInvalidChain, make_chain, self.G24, [(4, 1), (3, 1)])
        self.assertEqual(0, len(make_chain(self.G24, [])))

    def test_chain_product(self):
        self.assertEqual((3, 4), chain_product_coset(make_chain(self.G24, [(4, 1), (3, 2)])).entries)
        self.assertEqual((1, 3), chain_product_coset(make_chain(self.G24, [(3, 2)])).entries)
        shape = GrassmannShape(4, 8)
        self.assertEqual((3, 5, 7, 8),
            chain_product_coset(make_chain(shape, [(8, 1), (7, 2), (5, 4)])).entries)

    def test_chain_product_rejects_lists(self):
        self.assertRaises(SchubertInvalidChain, chain_product_coset, [(4, 1)])

    def test_chain_product_is_permutation_product(self):
        for shape in SMALL_SHAPES:
            for w in shape.elements():
                chain, d_w = canonical_decomposition(w)
                for size in range(len(chain) + 1):
                    for sub in itertools.combinations(chain.roots, size):
                        sub_chain = CommutingChain(shape, sub)
                        expected = tuple(sorted(_apply(sub_chain, k) for k in range(1, shape.d + 1)))
                        self.assertEqual(expected, chain_product_coset(sub_chain).entries)

    def test_canonical_decomposition_examples(self):
        chain, d_w = canonical_decomposition(make_element(GrassmannShape(4, 8), (3, 5, 7, 8)))
        self.assertEqual([(8, 1), (7, 2), (5, 4)], [(r.row, r.col) for r in chain])
        self.assertEqual(3, d_w)

        w = make_element(GrassmannShape(7, 16), (1, 3, 6, 7, 10, 13, 15))
        chain, d_w = canonical_decomposition(w)
        self.assertEqual([(15, 2), (13, 4), (10, 5)], [(r.row, r.col) for r in chain])
        self.assertEqual(3, d_w)
        self.assertEqual(3, degree(w))

        chain, d_w = canonical_decomposition(self.element(self.G24, 1, 2))
        self.assertEqual(0, len(chain))
        self.assertEqual(0, d_w)

    def test_canonical_decomposition_round_trip(self):
        for shape in SMALL_SHAPES:
            for w in shape.elements():
                chain, d_w = canonical_decomposition(w)
                self.assertEqual(w, chain_product_coset(chain))
                self.assertEqual(degree(w), d_w)


class TestLattice(BaseTestCase):
    """"""

    def test_covers(self):
        self.assertEqual([(1, 4), (2, 3)], [c.entries for c in covers(self.element(self.G24, 2, 4))])
        self.assertEqual([], covers(self.element(self.G24, 1, 2)))
        self.assertEqual([(2, 4)], [c.entries for c in covers(self.element(self.G24, 3, 4))])

    def test_covers_exhaustive(self):
        for shape in (self.G25, self.G36):
            elements = shape.elements()
            for w in elements:
                below = [v for v in elements if bruhat_less(v, w)]
                expected = [v for v in below
                            if not any(bruhat_less(v, u) for u in below)]
                self.assertEqual(sorted(v.entries for v in expected),
                    sorted(c.entries for c in covers(w)))

    def test_meet(self):
        e = lambda *entries: self.element(self.G24, *entries)
        self.assertEqual(e(1, 3), meet(e(1, 4), e(2, 3)))
        self.assertEqual(e(2, 4), meet(e(2, 4), e(2, 4)))
        self.assertEqual(e(1, 2), meet(e(1, 2), e(3, 4)))

    def test_meet_laws(self):
        elements = self.G25.elements()
        for a, b in itertools.product(elements, repeat=2):
            self.assertEqual(meet(a, b), meet(b, a))
            m = meet(a, b)
            self.assertTrue(bruhat_leq(m, a) and bruhat_leq(m, b))
            for c in elements:
                self.assertEqual(meet(meet(a, b), c), meet(a, meet(b, c)))
                if bruhat_leq(c, a) and bruhat_leq(c, b):
                    self.assertTrue(bruhat_leq(c, m))

    def test_elements_below(self):
        w = self.element(self.G24, 2, 4)
        self.assertEqual([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)],
            [v.entries for v in elements_below(w)])
        self.assertEqual(4, len(elements_below(w, include_identity=False)))

    def test_minimal_representative(self):
        self.assertEqual((1, 3, 2, 4), minimal_representative(self.element(self.G24, 1, 3)))
        self.assertEqual((1, 2, 3, 4), minimal_representative(self.element(self.G24, 1, 2)))
        self.assertEqual((3, 4, 1, 2), minimal_representative(self.element(self.G24, 3, 4)))
