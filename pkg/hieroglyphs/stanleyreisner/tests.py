import random
import unittest
from functools import reduce
from itertools import combinations

from hieroglyphs import settings
from hieroglyphs.core import Monomial, NotSquarefree, PolynomialRing
from hieroglyphs.monomial import MonomialIdeal
from hieroglyphs.stanleyreisner import (
    SimplicialComplex, ideal_from_facets, is_face, minimal_primes, minimal_transversals, sr_facets,
)


def generic_minor_initial_ideal():
    names = [f"x{i}{j}" for i in range(1, 4) for j in range(1, 4)]
    ring = PolynomialRing.from_names(names)
    gens = [
        Monomial.from_support(9, {ring.index(f"x{a}{b}"): 1, ring.index(f"x{c}{d}"): 1})
        for a, c in combinations(range(1, 4), 2) for b, d in combinations(range(1, 4), 2)
    ]
    return MonomialIdeal(ring, gens)


def random_squarefree_ideal(rng, nvars, count):
    ring = PolynomialRing.from_names([f"v{i}" for i in range(nvars)])
    gens = []
    for _ in range(count):
        support = rng.sample(range(nvars), rng.randint(1, min(3, nvars)))
        gens.append(Monomial.from_support(nvars, {v: 1 for v in support}))
    return MonomialIdeal.from_generators(ring, gens)


def brute_force_primes(ideal):
    edges = ideal.supports()
    n = ideal.ring.nvars
    covers = []
    for mask in range(1 << n):
        subset = frozenset(v for v in range(n) if mask >> v & 1)
        if all(edge & subset for edge in edges):
            covers.append(subset)
    return {c for c in covers if not any(other < c for other in covers)}


class MinimalPrimesTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_single_edge(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        J = MonomialIdeal(ring, [Monomial([1, 1])])
        self.assertEqual(minimal_primes(J), [{0}, {1}])

    def test_generic_minors(self):
        J = generic_minor_initial_ideal()
        ring = J.ring
        rendered = [p.to_string(ring) for p in minimal_primes(J)]
        self.assertEqual(len(rendered), 6)
        self.assertEqual(set(rendered), {
            "<x22, x21, x12, x11>", "<x33, x21, x12, x11>", "<x33, x32, x12, x11>",
            "<x33, x23, x21, x11>", "<x33, x32, x23, x11>", "<x33, x32, x23, x22>",
        })

    def test_zero_ideal_has_no_components(self):
        ring = PolynomialRing.from_names(["x1", "x2", "x3"])
        self.assertEqual(minimal_primes(MonomialIdeal.zero(ring)), [])

    def test_rejects_non_squarefree(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        with self.assertRaises(NotSquarefree):
            minimal_primes(MonomialIdeal(ring, [Monomial([2, 0])]))
        with self.assertRaises(NotSquarefree):
            sr_facets(MonomialIdeal(ring, [Monomial([1, 2])]))

    def test_agrees_with_brute_force(self):
        for _ in range(60):
            nvars = self.rng.randint(2, 10)
            J = random_squarefree_ideal(self.rng, nvars, self.rng.randint(1, 8))
            self.assertEqual(set(minimal_primes(J)), brute_force_primes(J))
        J = random_squarefree_ideal(self.rng, 14, 12)
        self.assertEqual(set(minimal_primes(J)), brute_force_primes(J))

    def test_cover_and_minimality(self):
        for _ in range(60):
            J = random_squarefree_ideal(self.rng, self.rng.randint(2, 9), self.rng.randint(1, 7))
            edges = J.supports()
            for prime in minimal_primes(J):
                self.assertTrue(all(edge & prime for edge in edges))
                for v in prime:
                    self.assertFalse(all(edge & (prime - {v}) for edge in edges))

    def test_sorted_by_size_then_ids(self):
        J = random_squarefree_ideal(self.rng, 8, 6)
        primes = minimal_primes(J)
        keys = [(len(p), sorted(p)) for p in primes]
        self.assertEqual(keys, sorted(keys))

    def test_intersection_of_components_recovers_ideal(self):
        for _ in range(30):
            J = random_squarefree_ideal(self.rng, self.rng.randint(2, 8), self.rng.randint(1, 6))
            n = J.ring.nvars
            components = [
                MonomialIdeal(J.ring, [Monomial.variable(n, v) for v in sorted(p)])
                for p in minimal_primes(J)
            ]
            self.assertEqual(reduce(MonomialIdeal.intersect, components), J)

    def test_transversals_of_empty_hypergraph(self):
        self.assertEqual(minimal_transversals([]), [frozenset()])


class StanleyReisnerComplexTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_single_edge_facets(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        complex_ = sr_facets(MonomialIdeal(ring, [Monomial([1, 1])]))
        self.assertEqual(complex_.facets, (frozenset({1}), frozenset({0})))
        self.assertEqual(ideal_from_facets(complex_).gens, (Monomial([1, 1]),))

    def test_generic_minors_facets_pair_with_primes(self):
        J = generic_minor_initial_ideal()
        complex_ = sr_facets(J)
        self.assertEqual(len(complex_.facets), 6)
        self.assertEqual(complex_.dimension, 4)
        for facet, prime in zip(complex_.facets, minimal_primes(J)):
            self.assertEqual(len(facet) + len(prime), 9)
            self.assertFalse(facet & prime)

    def test_zero_ideal_is_full_simplex(self):
        ring = PolynomialRing.from_names(["x1", "x2", "x3"])
        complex_ = sr_facets(MonomialIdeal.zero(ring))
        self.assertEqual(complex_, SimplicialComplex.simplex(3))
        self.assertTrue(ideal_from_facets(complex_, ring).is_zero())

    def test_round_trip(self):
        J = generic_minor_initial_ideal()
        self.assertEqual(ideal_from_facets(sr_facets(J), J.ring), J)
        for _ in range(200):
            J = random_squarefree_ideal(self.rng, self.rng.randint(2, 8), self.rng.randint(1, 6))
            self.assertEqual(ideal_from_facets(sr_facets(J), J.ring), J)

    def test_faces(self):
        complex_ = SimplicialComplex(3, [{0, 1}, {2}])
        self.assertTrue(is_face(complex_, set()))
        self.assertTrue(is_face(complex_, {0, 1}))
        self.assertFalse(is_face(complex_, {0, 1, 2}))
        self.assertEqual(list(complex_.faces()), [frozenset(), {0}, {1}, {2}, {0, 1}])

    def test_is_face_matches_non_membership(self):
        for _ in range(30):
            J = random_squarefree_ideal(self.rng, 6, self.rng.randint(1, 5))
            complex_ = sr_facets(J)
            for _ in range(20):
                sigma = frozenset(self.rng.sample(range(6), self.rng.randint(0, 6)))
                monomial = Monomial.from_support(6, {v: 1 for v in sigma})
                self.assertEqual(is_face(complex_, sigma), not J.contains(monomial))

    def test_contained_facets_dropped(self):
        complex_ = SimplicialComplex(3, [{0}, {0, 1}, {2}])
        self.assertEqual(complex_.facets, (frozenset({0, 1}), frozenset({2})))
