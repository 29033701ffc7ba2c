import json
import os
import random
import tempfile
import unittest
from itertools import combinations

from hieroglyphs import settings
from hieroglyphs.core import (
    Grading, GridCell, MissingGridMetadata, Monomial, NotHomogeneous, Polynomial, PolynomialRing,
    TermOrder, UnequalTotalDegrees,
)
from hieroglyphs.groebner import Ideal
from hieroglyphs.kpoly import LaurentPoly
from hieroglyphs.tablet import (
    Glyph, Hieroglyph, RenderMode, TabletRenderer, build_tablet, render_hieroglyph, tablet_from_json,
    tablet_multidegree, tablet_to_dict, tablet_to_json,
)


def matrix_ring(symmetric=False):
    cells = [(i, j) for i in range(1, 4) for j in range(1, 4) if not symmetric or i <= j]
    return PolynomialRing.from_names([f"x{i}{j}" for i, j in cells], [GridCell(0, i, j) for i, j in cells])


def var(ring, name):
    return Polynomial.variable(ring.nvars, ring.index(name))


def entry(ring, i, j):
    if f"x{i}{j}" not in ring:
        i, j = j, i
    return var(ring, f"x{i}{j}")


def two_by_two_minors(ring):
    minors = []
    for a, c in combinations(range(1, 4), 2):
        for b, d in combinations(range(1, 4), 2):
            minor = entry(ring, a, b) * entry(ring, c, d) - entry(ring, a, d) * entry(ring, c, b)
            if not minor.is_zero() and minor not in minors and -minor not in minors:
                minors.append(minor)
    return Ideal(ring, minors)


def generic_tablet():
    ring = matrix_ring()
    return build_tablet(two_by_two_minors(ring), TermOrder.lex(range(9)))


def symmetric_tablet():
    ring = matrix_ring(symmetric=True)
    return build_tablet(two_by_two_minors(ring), TermOrder.grevlex(range(6)))


def t(exponent, coefficient=1):
    return LaurentPoly(1, {(exponent,): coefficient})


class TabletTestCase(unittest.TestCase):

    def test_generic_minors(self):
        tablet = generic_tablet()
        self.assertEqual(tablet.size, 6)
        self.assertTrue(tablet.equidimensional)
        self.assertEqual(tablet.degree, 6)
        self.assertEqual(tablet.hieroglyph_size, 4)
        self.assertEqual(tablet.multidegree, t(4, 6))
        self.assertTrue(all(g is Glyph.PLUS for h in tablet.hieroglyphs for g in h.glyphs))
        self.assertEqual(tablet.hieroglyphs[0].support_cells(), ((1, 1), (1, 2), (2, 1), (2, 2)))
        self.assertEqual(tablet.hieroglyphs[-1].support_cells(), ((2, 2), (2, 3), (3, 2), (3, 3)))
        self.assertEqual({h.support_cells() for h in tablet.hieroglyphs}, {
            ((1, 1), (1, 2), (2, 1), (2, 2)),
            ((1, 1), (1, 2), (2, 1), (3, 3)),
            ((1, 1), (1, 2), (3, 2), (3, 3)),
            ((1, 1), (2, 1), (2, 3), (3, 3)),
            ((1, 1), (2, 3), (3, 2), (3, 3)),
            ((2, 2), (2, 3), (3, 2), (3, 3)),
        })

    def test_symmetric_minors(self):
        tablet = symmetric_tablet()
        self.assertEqual(len(tablet.all_components), 5)
        self.assertEqual(tablet.size, 4)
        self.assertFalse(tablet.equidimensional)
        self.assertEqual(tablet.degree, 4)
        self.assertEqual(len(tablet.initial_ideal), 6)
        first = tablet.hieroglyphs[0]
        self.assertEqual(first.support_cells(), ((1, 2), (1, 3), (2, 3)))
        self.assertEqual(first.to_string(tablet.ring), "{x23, x13, x12}")
        self.assertEqual(tablet.hieroglyphs[1].glyphs, (Glyph.PLUS, Glyph.PLUS, Glyph.CIRCLED_PLUS))
        self.assertEqual(sorted(h.size for h in tablet.all_components), [3, 3, 3, 3, 4])

    def test_tablet_multidegree(self):
        for tablet in (generic_tablet(), symmetric_tablet()):
            self.assertEqual(tablet_multidegree(tablet), tablet.multidegree)

    def test_zero_ideal(self):
        ring = PolynomialRing.from_names(["x", "y"])
        tablet = build_tablet(Ideal(ring, []), TermOrder.lex(range(2)))
        self.assertEqual(tablet.size, 1)
        self.assertEqual(tablet.hieroglyphs[0].marks, ())
        self.assertEqual(tablet.degree, 1)
        self.assertEqual(tablet_multidegree(tablet), LaurentPoly.one(1))

    def test_not_homogeneous(self):
        ring = PolynomialRing.from_names(["x", "y"])
        f = var(ring, "x") * var(ring, "x") + var(ring, "y")
        with self.assertRaises(NotHomogeneous):
            build_tablet(Ideal(ring, [f]), TermOrder.lex(range(2)))

    def test_unequal_total_degrees(self):
        ring = PolynomialRing.from_names(["x", "y"])
        grading = Grading([(1,), (2,)])
        tablet = build_tablet(Ideal(ring, [var(ring, "x") * var(ring, "y")]), TermOrder.lex(range(2)), grading)
        with self.assertRaises(UnequalTotalDegrees):
            tablet_multidegree(tablet)

    def test_multigraded(self):
        ring = PolynomialRing.from_names(["x", "y"])
        grading = Grading([(1, 0), (0, 1)])
        tablet = build_tablet(Ideal(ring, [var(ring, "x") * var(ring, "y")]), TermOrder.lex(range(2)), grading)
        expected = LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
        self.assertEqual(tablet.multidegree, expected)
        self.assertEqual(tablet_multidegree(tablet), expected)
        again = tablet_from_json(tablet_to_json(tablet))
        self.assertEqual(again.grading.weights, ((1, 0), (0, 1)))
        self.assertEqual(again.multidegree, expected)

    def test_size_is_degree_for_random_quadrics(self):
        rng = random.Random(settings.RANDOM_SEED)
        for _ in range(100):
            nvars = rng.randint(2, 4)
            ring = PolynomialRing.from_names([f"v{i}" for i in range(nvars)])
            quadrics = [Monomial(e) for e in _exponents(nvars, 2)]
            gens = []
            for _ in range(rng.randint(1, 3)):
                terms = [(rng.randint(-2, 2), m) for m in rng.sample(quadrics, rng.randint(1, 3))]
                gens.append(Polynomial.from_terms(nvars, terms))
            ideal = Ideal(ring, gens)
            if ideal.is_zero():
                continue
            tablet = build_tablet(ideal, TermOrder.grevlex(range(nvars)))
            self.assertEqual(tablet.size, tablet.degree, ideal.to_string())


def _exponents(nvars, degree):
    if nvars == 1:
        return [(degree,)]
    return [(k,) + rest for k in range(degree + 1) for rest in _exponents(nvars - 1, degree - k)]


class RendererTestCase(unittest.TestCase):

    def test_ascii(self):
        tablet = generic_tablet()
        renderer = TabletRenderer(tablet.ring)
        self.assertEqual(renderer.render_hieroglyph(tablet.hieroglyphs[0]), "++.\n++.\n...")
        self.assertEqual(renderer.render_hieroglyph(tablet.hieroglyphs[-1]), "...\n.++\n.++")
        self.assertEqual(len(renderer.render_tablet(tablet).split("\n\n")), 6)

    def test_unicode(self):
        tablet = generic_tablet()
        rendered = render_hieroglyph(tablet.hieroglyphs[0], tablet.ring, RenderMode.UNICODE)
        self.assertEqual(rendered, "++·\n++·\n···")

    def test_holes_and_copies(self):
        tablet = symmetric_tablet()
        renderer = TabletRenderer(tablet.ring)
        self.assertEqual(renderer.render_hieroglyph(tablet.hieroglyphs[0]), ".++\n .+\n  .")
        self.assertEqual(renderer.render_hieroglyph(tablet.hieroglyphs[1]), ".++\n .@\n  .")
        unicode = TabletRenderer(tablet.ring, RenderMode.UNICODE)
        self.assertEqual(unicode.render_hieroglyph(tablet.hieroglyphs[1]), "·++\n ·⊕\n  ·")

    def test_only_copy_marked(self):
        ring = PolynomialRing.from_names(["x1", "x2"], [GridCell(0, 1, 1), GridCell(0, 1, 2)])
        square = Polynomial.from_monomial(Monomial([2, 0]))
        tablet = build_tablet(Ideal(ring, [square]), TermOrder.lex(range(2)))
        self.assertEqual(tablet.size, 2)
        renderer = TabletRenderer(tablet.ring)
        self.assertEqual(renderer.render_tablet(tablet), "+.\n\n@.")

    def test_original_mark_wins_over_copy(self):
        ring = PolynomialRing.from_names(
            ["x~2", "x", "y"], [GridCell(0, 1, 1), GridCell(0, 1, 1), GridCell(0, 1, 2)])
        renderer = TabletRenderer(ring)
        self.assertEqual(renderer.render_hieroglyph(Hieroglyph.from_marks([0, 1], ring)), "+.")
        self.assertEqual(renderer.render_hieroglyph(Hieroglyph.from_marks([0], ring)), "@.")
        self.assertEqual(renderer.render_hieroglyph(Hieroglyph.from_marks([1], ring)), "+.")

    def test_two_panes(self):
        ring = PolynomialRing.from_names(["a", "b"], [GridCell(0, 1, 1), GridCell(1, 1, 1)])
        tablet = build_tablet(Ideal(ring, [var(ring, "a") * var(ring, "b")]), TermOrder.lex(range(2)))
        self.assertEqual(TabletRenderer(ring).render_tablet(tablet), "+ .\n\n. +")

    def test_missing_grid(self):
        ring = PolynomialRing.from_names(["x", "y"])
        with self.assertRaises(MissingGridMetadata):
            TabletRenderer(ring)

    def test_export_text(self):
        tablet = generic_tablet()
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "nested", "tablet.txt")
            TabletRenderer(tablet.ring).export_text(tablet, filename)
            with open(filename, encoding="utf-8") as handle:
                self.assertTrue(handle.read().startswith("++.\n++.\n...\n\n"))


class SerializerTestCase(unittest.TestCase):

    def test_field_order(self):
        data = tablet_to_dict(generic_tablet())
        self.assertEqual(list(data), [
            "ring", "order", "tablet_size", "equidimensional", "tablet", "all_components",
            "degree", "multidegree", "grading",
        ])
        self.assertEqual(data["tablet_size"], 6)
        self.assertEqual(data["degree"], 6)
        self.assertEqual(data["multidegree"], {"4": 6})
        self.assertEqual(data["grading"], {"dim": 1, "weights": [[1]] * 9})
        self.assertEqual(data["order"]["kind"], "lex")
        self.assertEqual(data["ring"][0], {
            "id": 0, "base_name": "x11", "copy_index": 1, "pane": 0, "row": 1, "col": 1,
        })

    def test_round_trip(self):
        for tablet in (generic_tablet(), symmetric_tablet()):
            text = tablet_to_json(tablet)
            again = tablet_from_json(text)
            self.assertEqual(again, tablet)
            self.assertIsNone(again.initial_ideal)
            self.assertEqual(tablet_to_json(again), text)

    def test_is_json(self):
        data = json.loads(tablet_to_json(symmetric_tablet()))
        self.assertFalse(data["equidimensional"])
        self.assertEqual(len(data["all_components"]), 5)
        self.assertEqual(data["ring"][6]["base_name"], "x12")
        self.assertEqual(data["ring"][6]["copy_index"], 2)


if __name__ == "__main__":
    unittest.main()
