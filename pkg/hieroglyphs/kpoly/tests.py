import random
import unittest
from itertools import combinations

from hieroglyphs import settings
from hieroglyphs.core import Grading, Monomial, NotSquarefree, NotStandardGrading, PolynomialRing, TooManyGenerators
from hieroglyphs.kpoly import (
    KAlgorithm, LaurentPoly, codimension, degree, hilbert_series_check, kpoly, kpoly_faces,
    kpoly_split, kpoly_taylor, multidegree,
)
from hieroglyphs.monomial import MonomialIdeal, polarize


def generic_minor_initial_ideal():
    names = [f"x{i}{j}" for i in range(1, 4) for j in range(1, 4)]
    ring = PolynomialRing.from_names(names)
    gens = [
        Monomial.from_support(9, {ring.index(f"x{a}{b}"): 1, ring.index(f"x{c}{d}"): 1})
        for a, c in combinations(range(1, 4), 2) for b, d in combinations(range(1, 4), 2)
    ]
    return MonomialIdeal(ring, gens)


def symmetric_initial_ideal():
    ring = PolynomialRing.from_names(["x11", "x12", "x13", "x22", "x23", "x33"])
    gens = [{"x23": 2}, {"x13": 1, "x23": 1}, {"x13": 1, "x22": 1},
            {"x13": 2}, {"x12": 1, "x13": 1}, {"x12": 2}]
    return MonomialIdeal(ring, [
        Monomial.from_support(6, {ring.index(name): power for name, power in g.items()}) for g in gens
    ])


def random_monomial_ideal(rng, nvars, max_gens, squarefree=False):
    ring = PolynomialRing.from_names([f"v{i}" for i in range(nvars)])
    top = 1 if squarefree else 3
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exponents = [rng.randint(0, top) if rng.random() < 0.5 else 0 for _ in range(nvars)]
        if not any(exponents):
            exponents[rng.randrange(nvars)] = 1
        gens.append(Monomial(exponents))
    return MonomialIdeal.from_generators(ring, gens)


def t(*pairs):
    return LaurentPoly(1, {(e,): c for e, c in pairs})


class LaurentPolyTestCase(unittest.TestCase):

    def test_to_string(self):
        self.assertEqual(t((0, 1), (2, -1)).to_string(), "1 - t^2")
        self.assertEqual(t((2, 3)).to_string(), "3*t^2")
        self.assertEqual(LaurentPoly(2, {(1, 2): -1, (0, 0): 1}).to_string(), "1 - t1*t2^2")
        self.assertEqual(LaurentPoly.zero(1).to_string(), "0")

    def test_substitute_one_minus(self):
        self.assertEqual(t((0, 1), (1, -1)).substitute_one_minus(), t((1, 1)))
        self.assertEqual(t((2, 1)).substitute_one_minus(), t((0, 1), (1, -2), (2, 1)))

    def test_json_round_trip(self):
        K = LaurentPoly(2, {(0, 0): 1, (1, 2): -3})
        self.assertEqual(K.to_json(), {"0,0": 1, "1,2": -3})
        self.assertEqual(LaurentPoly.from_json(K.to_json(), 2), K)


class KPolynomialTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)
        self.ring = PolynomialRing.from_names(["x1", "x2"])

    def test_principal_ideals(self):
        x1 = MonomialIdeal(self.ring, [Monomial([1, 0])])
        x1x2 = MonomialIdeal(self.ring, [Monomial([1, 1])])
        for algorithm in KAlgorithm:
            self.assertEqual(kpoly(x1, algorithm=algorithm), t((0, 1), (1, -1)))
            self.assertEqual(kpoly(x1x2, algorithm=algorithm), t((0, 1), (2, -1)))

    def test_zero_ideal(self):
        zero = MonomialIdeal.zero(self.ring)
        for algorithm in KAlgorithm:
            self.assertEqual(kpoly(zero, algorithm=algorithm), LaurentPoly.one(1))

    def test_two_variable_example_polarizes_to_same_k_polynomial(self):
        J = MonomialIdeal(self.ring, [Monomial([3, 1]), Monomial([0, 2])])
        result = polarize(J)
        self.assertEqual(kpoly_taylor(J), kpoly_taylor(result.ideal, result.grading))
        self.assertEqual(kpoly_taylor(J), kpoly_faces(result.ideal, result.grading))

    def test_taylor_agrees_with_split(self):
        for _ in range(500):
            J = random_monomial_ideal(self.rng, self.rng.randint(1, 6), 8)
            self.assertEqual(kpoly_taylor(J), kpoly_split(J))

    def test_faces_agrees_on_squarefree(self):
        for _ in range(200):
            nvars = self.rng.randint(1, 7)
            J = random_monomial_ideal(self.rng, nvars, 6, squarefree=True)
            weights = [(self.rng.randint(1, 2), self.rng.randint(0, 2)) for _ in range(nvars)]
            grading = Grading(weights)
            self.assertEqual(kpoly_faces(J, grading), kpoly_split(J, grading))
            self.assertEqual(kpoly_taylor(J, grading), kpoly_split(J, grading))

    def test_faces_needs_squarefree(self):
        with self.assertRaises(NotSquarefree):
            kpoly_faces(MonomialIdeal(self.ring, [Monomial([2, 0])]))

    def test_taylor_guard(self):
        n = settings.MAX_TAYLOR_GENERATORS + 1
        ring = PolynomialRing.from_names([f"v{i}" for i in range(n)])
        J = MonomialIdeal(ring, [Monomial.variable(n, i) for i in range(n)])
        with self.assertRaises(TooManyGenerators):
            kpoly_taylor(J)
        K = kpoly_split(J)
        self.assertEqual(degree(K), 1)
        self.assertEqual(codimension(K), n)

    def test_generic_minors_three_way(self):
        J = generic_minor_initial_ideal()
        K = kpoly_split(J)
        self.assertEqual(K, kpoly_faces(J))
        self.assertEqual(K, kpoly_taylor(J))
        self.assertEqual(multidegree(K), t((4, 6)))
        self.assertEqual(degree(K), 6)
        self.assertEqual(codimension(K), 4)

    def test_symmetric_example_polarization_invariance(self):
        J = symmetric_initial_ideal()
        result = polarize(J)
        K = kpoly_split(J)
        self.assertEqual(K, kpoly_split(result.ideal))
        self.assertEqual(K, kpoly_faces(result.ideal))
        self.assertEqual(degree(K), 4)


class MultidegreeTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_linear_space(self):
        self.assertEqual(multidegree(t((0, 1), (1, -1))), t((1, 1)))

    def test_multigraded(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        J = MonomialIdeal(ring, [Monomial([1, 0])])
        grading = Grading([(1, 0), (0, 1)])
        K = kpoly_split(J, grading)
        self.assertEqual(K, LaurentPoly(2, {(0, 0): 1, (1, 0): -1}))
        self.assertEqual(multidegree(K, grading), LaurentPoly(2, {(1, 0): 1}))
        with self.assertRaises(NotStandardGrading):
            degree(K)
        with self.assertRaises(NotStandardGrading):
            degree(kpoly_split(J), Grading([(2,), (1,)]))

    def test_positive_multidegrees(self):
        for J in (generic_minor_initial_ideal(), symmetric_initial_ideal()):
            for coefficient in multidegree(kpoly_split(J)).terms.values():
                self.assertGreater(coefficient, 0)


class HilbertSeriesTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_one_variable(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        J = MonomialIdeal(ring, [Monomial([1, 0])])
        self.assertTrue(hilbert_series_check(J, kpoly_split(J), 8))

    def test_random_ideals(self):
        for _ in range(200):
            J = random_monomial_ideal(self.rng, self.rng.randint(1, 5), 6)
            self.assertTrue(hilbert_series_check(J, kpoly_split(J), 8))

    def test_fixture_ideals(self):
        for J in (generic_minor_initial_ideal(), symmetric_initial_ideal()):
            self.assertTrue(hilbert_series_check(J, kpoly_split(J), 8))

    def test_wrong_k_polynomial_is_caught(self):
        J = symmetric_initial_ideal()
        self.assertFalse(hilbert_series_check(J, LaurentPoly.one(1), 3))
