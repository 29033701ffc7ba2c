import random
import unittest

from hieroglyphs import settings
from hieroglyphs.core import (
    ContainsUnit, Grading, Monomial, NotMinimal, NothingToPolarize, PolynomialRing,
)
from hieroglyphs.kpoly import kpoly_split
from hieroglyphs.monomial import MonomialIdeal, is_squarefree, minimalize, partial_polarize, polarize


def random_monomial_ideal(rng, nvars=None, max_exponent=4, max_gens=6):
    nvars = nvars or rng.randint(1, 6)
    ring = PolynomialRing.from_names([f"v{i}" for i in range(nvars)])
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exponents = [rng.randint(0, max_exponent) if rng.random() < 0.5 else 0 for _ in range(nvars)]
        if not any(exponents):
            exponents[rng.randrange(nvars)] = rng.randint(1, max_exponent)
        gens.append(Monomial(exponents))
    return MonomialIdeal.from_generators(ring, gens)


def random_grading(rng, nvars):
    dim = rng.randint(1, 3)
    weights = []
    for _ in range(nvars):
        weight = [rng.randint(0, 2) for _ in range(dim)]
        if not any(weight):
            weight[rng.randrange(dim)] = 1
        weights.append(weight)
    return Grading(weights, dim)


def symmetric_initial_ideal():
    ring = PolynomialRing.from_names(["x11", "x12", "x13", "x22", "x23", "x33"])
    gens = [{"x23": 2}, {"x13": 1, "x23": 1}, {"x13": 1, "x22": 1},
            {"x13": 2}, {"x12": 1, "x13": 1}, {"x12": 2}]
    return MonomialIdeal(ring, [
        Monomial.from_support(6, {ring.index(name): power for name, power in g.items()}) for g in gens
    ])


def fully_partial_polarize(ideal):
    for var_id in range(ideal.ring.nvars):
        while ideal.max_exponents()[var_id] >= 2:
            ideal = partial_polarize(ideal, var_id)
    return ideal


class MonomialIdealTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)
        self.ring = PolynomialRing.from_names(["x1", "x2", "x3"])

    def test_minimalize_absorbs_multiples(self):
        J = minimalize(self.ring, [Monomial([1, 0, 0]), Monomial([1, 1, 0])])
        self.assertEqual(J.gens, (Monomial([1, 0, 0]),))

    def test_minimalize_keeps_incomparable(self):
        gens = [Monomial([1, 1, 0]), Monomial([0, 1, 1])]
        self.assertEqual(set(minimalize(self.ring, gens).gens), set(gens))

    def test_minimalize_random_sets(self):
        for _ in range(200):
            gens = [Monomial(self.rng.randint(0, 3) for _ in range(3)) for _ in range(6)]
            gens = [m for m in gens if not m.is_one()]
            if not gens:
                continue
            J = minimalize(self.ring, gens)
            for a in J.gens:
                for b in J.gens:
                    if a != b:
                        self.assertFalse(a.divides(b))
            for m in gens:
                self.assertTrue(J.contains(m))

    def test_construction_requires_minimal_generators(self):
        with self.assertRaises(NotMinimal):
            MonomialIdeal(self.ring, [Monomial([1, 0, 0]), Monomial([2, 1, 0])])
        with self.assertRaises(ContainsUnit):
            MonomialIdeal(self.ring, [Monomial.one(3)])

    def test_is_squarefree(self):
        self.assertFalse(is_squarefree(symmetric_initial_ideal()))
        self.assertTrue(is_squarefree(MonomialIdeal.zero(self.ring)))
        self.assertTrue(is_squarefree(MonomialIdeal(self.ring, [Monomial([1, 1, 0])])))

    def test_colon_and_intersect(self):
        J = MonomialIdeal(self.ring, [Monomial([2, 0, 0]), Monomial([0, 1, 1])])
        self.assertEqual(set(J.colon(Monomial([1, 1, 0])).gens), {Monomial([1, 0, 0]), Monomial([0, 0, 1])})
        with self.assertRaises(ContainsUnit):
            J.colon(Monomial([2, 0, 0]))
        first = MonomialIdeal(self.ring, [Monomial([1, 0, 0])])
        second = MonomialIdeal(self.ring, [Monomial([0, 1, 0])])
        self.assertEqual(first.intersect(second).gens, (Monomial([1, 1, 0]),))


class PolarizationTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)
        self.ring = PolynomialRing.from_names(["x1", "x2"])
        self.J = MonomialIdeal(self.ring, [Monomial([3, 1]), Monomial([0, 2])])

    def test_two_variable_example(self):
        result = polarize(self.J)
        self.assertEqual(result.ring.names, ["x1", "x2", "x1~2", "x1~3", "x2~2"])
        self.assertEqual(set(result.ideal.gens), {Monomial([1, 1, 1, 1, 0]), Monomial([0, 1, 0, 0, 1])})
        self.assertEqual(result.copy_map, (0, 1, 0, 0, 1))

    def test_symmetric_initial_ideal(self):
        result = polarize(symmetric_initial_ideal())
        ring = result.ring
        self.assertEqual(ring.nvars, 9)
        self.assertEqual(ring.names[6:], ["x12~2", "x13~2", "x23~2"])
        rendered = {m.to_string(ring) for m in result.ideal.gens}
        self.assertEqual(rendered, {
            "x23*x23~2", "x13*x23", "x13*x22", "x13*x13~2", "x12*x13", "x12*x12~2",
        })

    def test_squarefree_is_unchanged(self):
        J = MonomialIdeal(self.ring, [Monomial([1, 1])])
        result = polarize(J)
        self.assertIs(result.ideal, J)
        self.assertEqual(result.copy_map, (0, 1))

    def test_partial_polarization_in_first_variable(self):
        J1 = partial_polarize(self.J, 0)
        self.assertEqual(J1.ring.names, ["x1", "x2", "x1~2"])
        self.assertEqual(set(J1.gens), {Monomial([2, 1, 1]), Monomial([0, 2, 0])})

    def test_partial_polarization_in_second_variable(self):
        J2 = partial_polarize(self.J, 1)
        self.assertEqual(J2.ring.names, ["x1", "x2", "x2~2"])
        self.assertEqual(set(J2.gens), {Monomial([3, 1, 0]), Monomial([0, 1, 1])})

    def test_partial_polarization_needs_a_square(self):
        with self.assertRaises(NothingToPolarize):
            partial_polarize(MonomialIdeal(self.ring, [Monomial([1, 1])]), 0)

    def test_partial_steps_reach_full_polarization(self):
        for _ in range(200):
            J = random_monomial_ideal(self.rng)
            full = polarize(J).ideal
            stepwise = fully_partial_polarize(J)
            self.assertEqual(stepwise.ring.names, full.ring.names)
            self.assertEqual(stepwise.gens, full.gens)

    def test_output_squarefree_minimal_and_idempotent(self):
        for _ in range(100):
            J = random_monomial_ideal(self.rng)
            result = polarize(J)
            self.assertTrue(result.ideal.is_squarefree())
            self.assertEqual(len(result.ideal), len(J))
            self.assertEqual(polarize(result.ideal).ideal, result.ideal)

    def test_grading_transport(self):
        for _ in range(100):
            J = random_monomial_ideal(self.rng)
            grading = random_grading(self.rng, J.ring.nvars)
            result = polarize(J, grading)
            original = sorted(grading.weight(m.exponents) for m in J.gens)
            lifted = sorted(result.grading.weight(m.exponents) for m in result.ideal.gens)
            self.assertEqual(original, lifted)

    def test_polarization_preserves_k_polynomial(self):
        for _ in range(200):
            J = random_monomial_ideal(self.rng)
            grading = random_grading(self.rng, J.ring.nvars)
            result = polarize(J, grading)
            self.assertEqual(kpoly_split(J, grading), kpoly_split(result.ideal, result.grading))
