import random
import unittest
from itertools import combinations

import sympy as sp

from hieroglyphs import settings
from hieroglyphs.core import ContainsUnit, GridCell, IncompleteOrder, Monomial, Polynomial, PolynomialRing, TermOrder
from hieroglyphs.groebner import (
    Ideal, buchberger, hilbert_function_oracle, initial_ideal, monomials_of_degree,
    normal_form, s_polynomial,
)
from hieroglyphs.monomial import MonomialIdeal


def matrix_ring(n=3, symmetric=False):
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if not symmetric or i <= j]
    names = [f"x{i}{j}" for i, j in cells]
    return PolynomialRing.from_names(names, [GridCell(0, i, j) for i, j in cells])


def entry(ring, i, j, symmetric=False):
    if symmetric and i > j:
        i, j = j, i
    return Polynomial.variable(ring.nvars, ring.index(f"x{i}{j}"))


def two_by_two_minors(ring, n=3, symmetric=False):
    minors = []
    for r1, r2 in combinations(range(1, n + 1), 2):
        for c1, c2 in combinations(range(1, n + 1), 2):
            minor = (entry(ring, r1, c1, symmetric) * entry(ring, r2, c2, symmetric)
                     - entry(ring, r1, c2, symmetric) * entry(ring, r2, c1, symmetric))
            if not minor.is_zero() and minor not in minors and -minor not in minors:
                minors.append(minor)
    return minors


def monomial_named(ring, *names):
    return Monomial.from_support(ring.nvars, {ring.index(name): 1 for name in names})


def random_homogeneous(rng, nvars, degree, size=3):
    pool = list(monomials_of_degree(nvars, degree))
    terms = [(rng.choice([-2, -1, 1, 2, 3]), rng.choice(pool)) for _ in range(size)]
    return Polynomial.from_terms(nvars, terms)


def random_homogeneous_ideal(rng, nvars, max_degree):
    ring = PolynomialRing.from_names([f"v{i}" for i in range(nvars)])
    gens = [random_homogeneous(rng, nvars, rng.randint(1, max_degree)) for _ in range(rng.randint(1, 3))]
    return Ideal(ring, gens)


def sympy_leading_exponents(ideal, order):
    symbols = sp.symbols([ideal.ring.variable(i).name for i in order.reading_order])
    exprs = []
    for f in ideal.generators:
        expr = 0
        for exponents, coefficient in f.items():
            term = sp.Rational(coefficient.numerator, coefficient.denominator)
            for position, var_id in enumerate(order.reading_order):
                term *= symbols[position] ** exponents[var_id]
            expr += term
        exprs.append(expr)
    basis = sp.groebner(exprs, *symbols, order=order.kind.value, domain=sp.QQ)
    leads = set()
    for poly in basis.polys:
        reading_exponents = poly.monoms(order=order.kind.value)[0]
        exponents = [0] * ideal.ring.nvars
        for position, var_id in enumerate(order.reading_order):
            exponents[var_id] = reading_exponents[position]
        leads.add(tuple(exponents))
    return leads


class NormalFormTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = PolynomialRing.from_names(["x1", "x2"])
        self.order = TermOrder.lex(range(2))
        self.x1 = Polynomial.variable(2, 0)
        self.x2 = Polynomial.variable(2, 1)

    def test_member_reduces_to_zero(self):
        self.assertTrue(normal_form(self.order, self.x1 * self.x1, [self.x1]).is_zero())

    def test_nothing_divides(self):
        self.assertEqual(normal_form(self.order, self.x2, [self.x1]), self.x2)

    def test_remainder_has_no_divisible_terms(self):
        f = self.x1 * self.x1 * self.x2 + self.x2 * self.x2 + self.x1
        g = self.x1 * self.x2 - self.x2
        r = normal_form(self.order, f, [g])
        lead = g.leading_monomial(self.order)
        for m in r.monomials():
            self.assertFalse(lead.divides(m))

    def test_s_polynomial_cancels_leading_terms(self):
        f = self.x1 * self.x1 + self.x2
        g = self.x1 * self.x2 + 1
        s = s_polynomial(self.order, f, g)
        lcm = Monomial([2, 1])
        self.assertEqual(s.coefficient(lcm), 0)


class BuchbergerTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_principal_monomial_ideal(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        x1 = Polynomial.variable(2, 0)
        basis = buchberger(TermOrder.lex(range(2)), Ideal(ring, [x1]))
        self.assertEqual(basis.elements, (x1,))

    def test_single_linear_form(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        f = Polynomial.variable(2, 0) + Polynomial.variable(2, 1)
        J = initial_ideal(TermOrder.lex(range(2)), Ideal(ring, [f]))
        self.assertEqual(J.gens, (Monomial([1, 0]),))

    def test_zero_ideal_has_empty_basis(self):
        ring = PolynomialRing.from_names(["x1"])
        ideal = Ideal(ring, [Polynomial.zero(1)])
        self.assertEqual(len(buchberger(TermOrder.lex([0]), ideal)), 0)
        self.assertTrue(initial_ideal(TermOrder.lex([0]), ideal).is_zero())

    def test_unit_ideal(self):
        ring = PolynomialRing.from_names(["x", "y"])
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        ideal = Ideal(ring, [x * y - 1, x])
        basis = buchberger(TermOrder.grevlex(range(2)), ideal)
        self.assertEqual(basis.elements, (Polynomial.constant(2, 1),))
        with self.assertRaises(ContainsUnit):
            initial_ideal(TermOrder.grevlex(range(2)), ideal)

    def test_order_must_cover_ring(self):
        ring = PolynomialRing.from_names(["x", "y"])
        ideal = Ideal(ring, [Polynomial.variable(2, 0)])
        with self.assertRaises(IncompleteOrder):
            buchberger(TermOrder.lex([0]), ideal)

    def test_generic_minors_initial_ideal_is_diagonal(self):
        ring = matrix_ring()
        ideal = Ideal(ring, two_by_two_minors(ring))
        order = TermOrder.lex(range(ring.nvars))
        basis = buchberger(order, ideal)
        self.assertTrue(basis.is_groebner())
        J = initial_ideal(order, ideal, basis)
        expected = [
            monomial_named(ring, f"x{a}{b}", f"x{c}{d}")
            for a, c in combinations(range(1, 4), 2) for b, d in combinations(range(1, 4), 2)
        ]
        self.assertEqual(len(J), 9)
        self.assertEqual(set(J.gens), set(expected))
        self.assertTrue(J.is_squarefree())
        for minor in ideal.generators:
            self.assertTrue(normal_form(order, minor, basis.elements).is_zero())

    def test_symmetric_minors_initial_ideal(self):
        ring = matrix_ring(symmetric=True)
        self.assertEqual(ring.names, ["x11", "x12", "x13", "x22", "x23", "x33"])
        minors = two_by_two_minors(ring, symmetric=True)
        self.assertEqual(len(minors), 6)
        J = initial_ideal(TermOrder.grevlex(range(6)), Ideal(ring, minors))
        square = lambda name: Monomial.variable(6, ring.index(name), 2)
        expected = {
            square("x23"), monomial_named(ring, "x13", "x23"), monomial_named(ring, "x13", "x22"),
            square("x13"), monomial_named(ring, "x12", "x13"), square("x12"),
        }
        self.assertEqual(set(J.gens), expected)
        self.assertFalse(J.is_squarefree())

    def test_permuting_generators_gives_identical_basis(self):
        ring = matrix_ring(symmetric=True)
        minors = two_by_two_minors(ring, symmetric=True)
        order = TermOrder.grevlex(range(6))
        reference = buchberger(order, Ideal(ring, minors)).elements
        for _ in range(5):
            shuffled = list(minors)
            self.rng.shuffle(shuffled)
            self.assertEqual(buchberger(order, Ideal(ring, shuffled)).elements, reference)

    def test_basis_is_reduced_and_monic(self):
        for _ in range(20):
            ideal = random_homogeneous_ideal(self.rng, 3, 2)
            order = TermOrder.grevlex(range(3))
            basis = buchberger(order, ideal)
            leads = basis.leading_monomials()
            for f, lead in zip(basis.elements, leads):
                self.assertEqual(f.coefficient(lead), 1)
                for other in leads:
                    if other != lead:
                        self.assertFalse(any(other.divides(m) for m in f.monomials()))

    def test_membership_of_combinations(self):
        for _ in range(20):
            ideal = random_homogeneous_ideal(self.rng, 3, 2)
            order = TermOrder.grevlex(range(3))
            basis = buchberger(order, ideal)
            combination = Polynomial.zero(3)
            for f in ideal.generators:
                combination = combination + f * random_homogeneous(self.rng, 3, 1)
            self.assertTrue(basis.contains(combination))

    def test_leading_monomials_agree_with_sympy(self):
        for _ in range(15):
            ideal = random_homogeneous_ideal(self.rng, 3, 2)
            if ideal.is_zero():
                continue
            reading = list(range(3))
            self.rng.shuffle(reading)
            order = TermOrder.grevlex(reading)
            ours = {m.exponents for m in buchberger(order, ideal).leading_monomials()}
            self.assertEqual(ours, sympy_leading_exponents(ideal, order))

    def test_generic_minors_agree_with_sympy_under_lex(self):
        ring = matrix_ring()
        ideal = Ideal(ring, two_by_two_minors(ring))
        order = TermOrder.lex(range(ring.nvars))
        ours = {m.exponents for m in buchberger(order, ideal).leading_monomials()}
        self.assertEqual(ours, sympy_leading_exponents(ideal, order))


class HilbertFunctionTestCase(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(settings.RANDOM_SEED)

    def test_zero_ideal_counts_all_monomials(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        self.assertEqual(hilbert_function_oracle(MonomialIdeal.zero(ring), 3), [1, 2, 3, 4])

    def test_one_variable_quotient(self):
        ring = PolynomialRing.from_names(["x1", "x2"])
        J = MonomialIdeal(ring, [Monomial([1, 0])])
        self.assertEqual(hilbert_function_oracle(J, 3), [1, 1, 1, 1])

    def test_initial_ideals_share_hilbert_function_grevlex(self):
        for _ in range(25):
            nvars = self.rng.randint(2, 4)
            ideal = random_homogeneous_ideal(self.rng, nvars, 3)
            reading = list(range(nvars))
            self.rng.shuffle(reading)
            first = hilbert_function_oracle(ideal, 8, TermOrder.grevlex(range(nvars)))
            second = hilbert_function_oracle(ideal, 8, TermOrder.grevlex(reading))
            self.assertEqual(first, second)

    def test_initial_ideals_share_hilbert_function_lex(self):
        for _ in range(15):
            ideal = random_homogeneous_ideal(self.rng, 3, 2)
            lex = hilbert_function_oracle(ideal, 8, TermOrder.lex([2, 0, 1]))
            grevlex = hilbert_function_oracle(ideal, 8, TermOrder.grevlex(range(3)))
            self.assertEqual(lex, grevlex)
