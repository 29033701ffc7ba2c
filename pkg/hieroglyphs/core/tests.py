import random
import unittest
from fractions import Fraction
from itertools import permutations

from hieroglyphs import settings
from hieroglyphs.core import (
    ArithOp, Comparison, DuplicateVariable, Grading, GridCell, IncompleteOrder,
    Monomial, NonPositiveGrading, OrderKind, Polynomial, PolynomialRing, TermOrder,
    UndeclaredVariable, ZeroPolynomial, leading_term, mono_divides, mono_lcm,
    mono_mul, order_compare, poly_arith,
)


def generic_ring(n=3):
    names = [f"x{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    grids = [GridCell(0, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return PolynomialRing.from_names(names, grids)


def determinant(ring, n=3):
    terms = []
    for sigma in permutations(range(1, n + 1)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if sigma[a] > sigma[b])
        support = {ring.index(f"x{i + 1}{sigma[i]}"): 1 for i in range(n)}
        terms.append(((-1) ** inversions, Monomial.from_support(ring.nvars, support)))
    return Polynomial.from_terms(ring.nvars, terms)


def random_monomial(rng, nvars, top=3):
    return Monomial(rng.randint(0, top) for _ in range(nvars))


def random_polynomial(rng, nvars, size=3, top=2):
    terms = [(rng.randint(-3, 3), random_monomial(rng, nvars, top)) for _ in range(size)]
    return Polynomial.from_terms(nvars, terms)


class MonomialTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_mul_adds_exponents(self):
        self.assertEqual(mono_mul(Monomial([2, 0]), Monomial([1, 1])), Monomial([3, 1]))
        m = Monomial([1, 4, 0])
        self.assertEqual(mono_mul(m, Monomial.one(3)), m)

    def test_factor_divides_product(self):
        for _ in range(1000):
            a = random_monomial(self.rng, 4)
            b = random_monomial(self.rng, 4)
            self.assertTrue(mono_divides(a, mono_mul(a, b)))

    def test_lcm(self):
        self.assertEqual(mono_lcm(Monomial([2, 1]), Monomial([1, 3])), Monomial([2, 3]))
        m = Monomial([3, 1])
        self.assertEqual(mono_lcm(m, m), m)
        self.assertEqual(mono_lcm(m, Monomial.one(2)), m)

    def test_support_skips_zero_exponents(self):
        self.assertEqual(Monomial([0, 2, 0, 1]).support(), {1: 2, 3: 1})
        self.assertEqual(Monomial.from_support(4, {1: 2, 3: 1}), Monomial([0, 2, 0, 1]))

    def test_quotient(self):
        self.assertEqual(Monomial([3, 1]) / Monomial([1, 1]), Monomial([2, 0]))
        with self.assertRaises(ValueError):
            Monomial([1, 0]) / Monomial([0, 1])


class TermOrderTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)
        self.ring = generic_ring()

    def test_lex_english_reading_picks_main_diagonal(self):
        order = TermOrder.lex(range(9))
        _, lead = leading_term(order, determinant(self.ring))
        self.assertEqual(lead.to_string(self.ring), "x11*x22*x33")

    def test_lex_rows_right_to_left_picks_antidiagonal(self):
        ring = generic_ring(2)
        reading = [ring.index(name) for name in ("x12", "x11", "x22", "x21")]
        order = TermOrder.lex(reading)
        minor = determinant(ring, 2)
        coefficient, lead = minor.leading_term(order)
        self.assertEqual(lead.to_string(ring), "x12*x21")
        self.assertEqual(coefficient, -1)

    def test_lex_diagonal_leading_term(self):
        ring = generic_ring(2)
        coefficient, lead = leading_term(TermOrder.lex(range(4)), determinant(ring, 2))
        self.assertEqual((coefficient, lead.to_string(ring)), (1, "x11*x22"))

    def test_single_term_is_its_own_leading_term(self):
        m = Monomial([1, 0, 2])
        f = Polynomial.from_monomial(m, Fraction(-2, 3))
        self.assertEqual(leading_term(TermOrder.grevlex(range(3)), f), (Fraction(-2, 3), m))

    def test_zero_polynomial_has_no_leading_term(self):
        with self.assertRaises(ZeroPolynomial):
            Polynomial.zero(2).leading_term(TermOrder.lex(range(2)))

    def test_reflexive(self):
        for kind in OrderKind:
            order = TermOrder(kind, (2, 0, 1))
            m = Monomial([1, 2, 3])
            self.assertEqual(order_compare(order, m, m), Comparison.EQUAL)

    def test_grevlex_tie_break(self):
        # x1 > x2 > x3: x1*x3 < x2^2 because the least variable x3 appears in x1*x3
        order = TermOrder.grevlex(range(3))
        self.assertEqual(order.compare(Monomial([1, 0, 1]), Monomial([0, 2, 0])), Comparison.LESS)
        self.assertEqual(order.compare(Monomial([0, 0, 3]), Monomial([2, 0, 0])), Comparison.GREATER)

    def test_leading_term_dominates_random_polynomials(self):
        for _ in range(200):
            reading = list(range(4))
            self.rng.shuffle(reading)
            order = TermOrder(self.rng.choice(list(OrderKind)), tuple(reading))
            f = random_polynomial(self.rng, 4, size=5)
            if f.is_zero():
                continue
            _, lead = f.leading_term(order)
            for m in f.monomials():
                self.assertNotEqual(order.compare(lead, m), Comparison.LESS)

    def test_multiplicative_and_one_is_minimum(self):
        for _ in range(300):
            reading = list(range(3))
            self.rng.shuffle(reading)
            order = TermOrder(self.rng.choice(list(OrderKind)), tuple(reading))
            a, b, c = (random_monomial(self.rng, 3) for _ in range(3))
            self.assertEqual(order.compare(a, b), order.compare(a * c, b * c))
            if not a.is_one():
                self.assertEqual(order.compare(Monomial.one(3), a), Comparison.LESS)

    def test_reading_order_must_be_permutation(self):
        with self.assertRaises(IncompleteOrder):
            TermOrder.lex((0, 0, 1))
        with self.assertRaises(IncompleteOrder):
            TermOrder.grevlex((0, 2))


class PolynomialTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_difference_is_zero(self):
        f = random_polynomial(self.rng, 3)
        self.assertTrue(poly_arith(ArithOp.SUB, f, f).is_zero())

    def test_difference_of_squares(self):
        x1, x2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        product = poly_arith(ArithOp.MUL, x1 + x2, x1 - x2)
        expected = Polynomial(2, {(2, 0): 1, (0, 2): -1})
        self.assertEqual(product, expected)

    def test_scalar_operands(self):
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        self.assertEqual(x * y - 1, Polynomial(2, {(1, 1): 1, (0, 0): -1}))
        self.assertEqual(1 + x, x + 1)
        self.assertEqual(1 - x, Polynomial(2, {(1, 0): -1, (0, 0): 1}))
        self.assertEqual(x + Fraction(1, 2) - Fraction(1, 2), x)
        self.assertEqual(sum([x, y]), x + y)

    def test_ring_identities(self):
        for _ in range(500):
            f, g, h = (random_polynomial(self.rng, 3, size=3) for _ in range(3))
            self.assertEqual((f + g) + h, f + (g + h))
            self.assertEqual(f + g, g + f)
            self.assertEqual((f * g) * h, f * (g * h))
            self.assertEqual(f * g, g * f)
            self.assertEqual(f * (g + h), f * g + f * h)

    def test_canonical_form_is_idempotent(self):
        f = Polynomial(2, {(1, 0): 2, (0, 1): 0, (1, 1): Fraction(1, 2)})
        self.assertEqual(len(f), 2)
        self.assertEqual(Polynomial(2, f.terms), f)

    def test_to_string(self):
        ring = PolynomialRing.from_names(["x", "y"])
        f = Polynomial(2, {(2, 0): -1, (0, 1): Fraction(2, 3), (0, 0): 5})
        self.assertEqual(f.to_string(ring), "-x^2 + 2/3*y + 5")

    def test_homogeneity(self):
        grading = Grading([(1, 0), (0, 1)])
        self.assertTrue(Polynomial(2, {(1, 1): 2}).is_homogeneous(grading))
        self.assertFalse(Polynomial(2, {(2, 0): 1, (1, 1): 1}).is_homogeneous(grading))
        self.assertTrue(Polynomial(2, {(2, 0): 1, (1, 1): 1}).is_homogeneous(Grading.standard(2)))


class RingAndGradingTestCase(unittest.TestCase):

    def test_copies_share_base_and_grid(self):
        ring = PolynomialRing.from_names(["x", "y"], [GridCell(0, 1, 1), GridCell(0, 1, 2)])
        enlarged = ring.with_copies([0, 0, 1])
        self.assertEqual(enlarged.names, ["x", "y", "x~2", "x~3", "y~2"])
        self.assertEqual(enlarged.variable(3).grid, GridCell(0, 1, 1))
        self.assertEqual(enlarged.base_ids(), (0, 1, 0, 0, 1))

    def test_duplicate_variables_rejected(self):
        with self.assertRaises(DuplicateVariable):
            PolynomialRing.from_names(["x", "y", "x"])

    def test_undeclared_lookup(self):
        with self.assertRaises(UndeclaredVariable):
            PolynomialRing.from_names(["x"]).index("z")

    def test_grading_rejects_zero_and_negative_weights(self):
        with self.assertRaises(NonPositiveGrading):
            Grading([(1, 0), (0, 0)])
        with self.assertRaises(NonPositiveGrading):
            Grading([(1, -1)])
        with self.assertRaises(NonPositiveGrading):
            Grading([(1,), (1, 0)])

    def test_standard_grading(self):
        grading = Grading.standard(3)
        self.assertTrue(grading.is_standard)
        self.assertEqual(grading.weight((1, 2, 0)), (3,))
        self.assertTrue(grading.has_equal_total_degrees())
        self.assertFalse(Grading([(1, 0), (1, 1)]).has_equal_total_degrees())
