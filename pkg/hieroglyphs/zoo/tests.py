import json
import unittest
from collections import Counter
from unittest import mock

from hieroglyphs import settings
from hieroglyphs.core import BadDimensions, Grading, InvalidPermutation, TermOrder, TooLarge, UnknownFixture
from hieroglyphs.groebner import initial_ideal
from hieroglyphs.kpoly import LaurentPoly
from hieroglyphs.tablet import build_tablet, tablet_multidegree
from hieroglyphs.zoo import (
    COMMUTING3_INITIAL, FixtureRegistry, Permutation, Tile, antidiagonal_lex, bpds, check_bpd_conjecture,
    check_commuting, check_equidim, check_km, commuting_ideal, commuting_order, commuting_ring,
    compare_initial_ideal, generic_minor_ideal, kl_fixture, lex_diagonal, multiplicity,
    order_sweep, parse_monomial, pipe_dreams, rank_matrix, rothe_bpd, row_grading,
    row_reading_lex, schubert_ideal, schubert_polynomial, se_nw_lex, sweep,
)


def perm(text):
    return Permutation.parse(text)


def supports(tablet):
    return Counter(tuple(sorted(h.support_cells())) for h in tablet.hieroglyphs)


def cells(*groups):
    return Counter(tuple(sorted(group)) for group in groups)


class PermutationTestCase(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(perm("2143").values, (2, 1, 4, 3))
        self.assertEqual(perm("2,1,4,3"), perm("2143"))
        self.assertEqual(str(perm("2143")), "2143")

    def test_invalid(self):
        for text in ("2243", "", "21a", "0,1"):
            with self.assertRaises(InvalidPermutation):
                perm(text)

    def test_length_and_inverse(self):
        self.assertEqual(perm("2143").length(), 2)
        self.assertEqual(perm("4321").length(), 6)
        self.assertEqual(perm("2314").inverse(), perm("3124"))
        self.assertTrue(Permutation.identity(3).is_identity())
        self.assertEqual(len(list(Permutation.all(4))), 24)


class MatrixIdealsTestCase(unittest.TestCase):

    def test_generic_minors(self):
        ideal = generic_minor_ideal(3, 3, 2)
        self.assertEqual(len(ideal), 9)
        self.assertEqual(ideal.ring.nvars, 9)
        self.assertTrue(all(v.grid is not None for v in ideal.ring.variables))

    def test_symmetric_minors(self):
        ideal = generic_minor_ideal(3, 3, 2, symmetric=True)
        self.assertEqual(ideal.ring.names, ["x11", "x12", "x13", "x22", "x23", "x33"])
        self.assertEqual(len(ideal), 6)

    def test_bad_dimensions(self):
        with self.assertRaises(BadDimensions):
            generic_minor_ideal(2, 2, 3)
        with self.assertRaises(BadDimensions):
            generic_minor_ideal(2, 3, 2, symmetric=True)
        with self.assertRaises(BadDimensions):
            commuting_ideal(0)

    def test_rank_matrix(self):
        self.assertEqual(rank_matrix(Permutation.identity(2)).tolist(), [[1, 1], [1, 2]])
        ranks = rank_matrix(perm("2143"))
        self.assertEqual(ranks[0, 0], 0)
        self.assertEqual(ranks[2, 2], 2)

    def test_rank_matrix_steps(self):
        for w in Permutation.all(4):
            ranks = rank_matrix(w)
            for i in range(4):
                for j in range(4):
                    if i:
                        self.assertIn(ranks[i, j] - ranks[i - 1, j], (0, 1))
                    if j:
                        self.assertIn(ranks[i, j] - ranks[i, j - 1], (0, 1))

    def test_schubert_ideal_2143(self):
        ideal = schubert_ideal(perm("2143"))
        self.assertEqual(sorted(f.total_degree() for f in ideal.generators), [1, 3])

    def test_schubert_ideals_are_homogeneous(self):
        for w in Permutation.all(4):
            ideal = schubert_ideal(w)
            self.assertTrue(ideal.is_homogeneous(Grading.standard(16)))
            self.assertTrue(ideal.is_homogeneous(row_grading(4)))

    def test_identity_gives_one_hieroglyph(self):
        ideal = schubert_ideal(Permutation.identity(3))
        self.assertTrue(ideal.is_zero())
        tablet = build_tablet(ideal, lex_diagonal(ideal.ring))
        self.assertEqual(tablet.size, 1)
        self.assertEqual(tablet.degree, 1)

    def test_commuting_ideal(self):
        self.assertTrue(commuting_ideal(1).is_zero())
        ideal = commuting_ideal(2)
        self.assertEqual(len(ideal), 4)
        self.assertEqual(ideal.ring.names[:4], ["a11", "a12", "a21", "a22"])
        self.assertEqual(ideal.ring.variable(4).grid.pane, 1)

    def test_commuting_trace_vanishes(self):
        two = commuting_ideal(2).generators
        self.assertTrue((two[0] + two[3]).is_zero())
        three = commuting_ideal(3).generators
        self.assertTrue((three[0] + three[4] + three[8]).is_zero())


class MatrixOrdersTestCase(unittest.TestCase):

    def setUp(self):
        self.ring = generic_minor_ideal(2, 2, 2).ring

    def names(self, order):
        return [self.ring.variable(i).name for i in order.reading_order]

    def test_row_orders(self):
        self.assertEqual(self.names(lex_diagonal(self.ring)), ["x11", "x12", "x21", "x22"])
        self.assertEqual(self.names(antidiagonal_lex(self.ring)), ["x12", "x11", "x22", "x21"])
        self.assertEqual(self.names(row_reading_lex(self.ring, "21")), ["x21", "x22", "x11", "x12"])

    def test_minor_leads(self):
        det = generic_minor_ideal(2, 2, 2).generators[0]
        diagonal = det.leading_monomial(lex_diagonal(self.ring)).to_string(self.ring)
        anti = det.leading_monomial(antidiagonal_lex(self.ring)).to_string(self.ring)
        self.assertEqual(diagonal, "x11*x22")
        self.assertEqual(anti, "x12*x21")

    def test_se_nw_reading(self):
        ideal, order = kl_fixture()
        names = [ideal.ring.variable(i).name for i in order.reading_order]
        self.assertEqual(names, ["x15", "x14", "x24", "x13", "x23", "x33", "x12", "x22", "x32",
                                 "x42", "x11", "x21", "x31", "x41", "x51"])
        self.assertEqual(se_nw_lex(ideal.ring), order)


class PipeDreamTestCase(unittest.TestCase):

    def test_identity(self):
        dreams = pipe_dreams(Permutation.identity(4))
        self.assertEqual(len(dreams), 1)
        self.assertEqual(dreams[0].crosses, frozenset())

    def test_2143(self):
        dreams = pipe_dreams(perm("2143"))
        self.assertEqual([d.sorted_crosses() for d in dreams],
                         [((1, 1), (1, 3)), ((1, 1), (2, 2)), ((1, 1), (3, 1))])

    def test_214365(self):
        self.assertEqual(len(pipe_dreams(perm("214365"))), 15)

    def test_every_dream_is_reduced(self):
        for w in Permutation.all(4):
            for dream in pipe_dreams(w):
                self.assertTrue(dream.is_reduced_for(w))
                self.assertTrue(all(i + j <= 4 for i, j in dream.crosses))

    def test_schubert_polynomial(self):
        expected = LaurentPoly(4, {(2, 0, 0, 0): 1, (1, 1, 0, 0): 1, (1, 0, 1, 0): 1})
        self.assertEqual(schubert_polynomial(perm("2143")), expected)
        self.assertEqual(schubert_polynomial(perm("132")), LaurentPoly(3, {(1, 0, 0): 1, (0, 1, 0): 1}))

    def test_guard(self):
        with mock.patch.object(settings, "MAX_ENUMERATION_SIZE", 3):
            with self.assertRaises(TooLarge):
                pipe_dreams(Permutation.identity(4))
            with self.assertRaises(TooLarge):
                bpds(Permutation.identity(4))


class BumplessPipeDreamTestCase(unittest.TestCase):

    def test_identity(self):
        found = bpds(Permutation.identity(3))
        self.assertEqual(len(found), 1)
        self.assertEqual(found[0].blank_support, frozenset())

    def test_rothe(self):
        rothe = rothe_bpd(perm("2143"))
        self.assertEqual(rothe.blank_support, frozenset({(1, 1), (3, 3)}))
        self.assertEqual(rothe.tile(1, 2), Tile.R_ELBOW)
        self.assertEqual(rothe.tile(2, 2), Tile.CROSS)
        self.assertEqual(rothe.to_string().splitlines()[0], ".r--")

    def test_2143(self):
        found = bpds(perm("2143"))
        self.assertEqual([b.sorted_blanks() for b in found],
                         [((1, 1), (1, 2)), ((1, 1), (2, 1)), ((1, 1), (3, 3))])

    def test_counts_match_pipe_dreams(self):
        for w in Permutation.all(4):
            found = bpds(w)
            self.assertEqual(len(found), len(pipe_dreams(w)), str(w))
            for bpd in found:
                self.assertEqual(len(bpd.blank_support), w.length())


class HarnessTestCase(unittest.TestCase):

    def test_km_small(self):
        for report in sweep(check_km, 3, workers=1):
            self.assertTrue(report.passed, report.to_dict())

    def test_km_2143(self):
        report = check_km(perm("2143"))
        self.assertTrue(report.passed)
        self.assertEqual(report.details["tablet_size"], 3)

    def test_bpd_small(self):
        for report in sweep(check_bpd_conjecture, 3, workers=1):
            self.assertTrue(report.passed, report.to_dict())

    def test_sweeps_upto_four(self):
        for check in (check_km, check_bpd_conjecture):
            reports = sweep(check, 4, workers=1)
            self.assertEqual(len(reports), 1 + 2 + 6 + 24)
            self.assertEqual([r.to_dict()["pass"] for r in reports], [True] * 33)

    def test_identity(self):
        report = check_bpd_conjecture(Permutation.identity(3))
        self.assertTrue(report.passed)
        self.assertEqual(report.details["tablet_size"], 1)

    def test_report_is_json(self):
        report = check_equidim(perm("1432"))
        data = json.loads(json.dumps(report.to_dict()))
        self.assertEqual(list(data), ["conjecture", "n", "permutation", "pass", "details"])
        self.assertEqual(data["permutation"], "1432")

    def test_guard(self):
        with mock.patch.object(settings, "MAX_HARNESS_SIZE", 3):
            with self.assertRaises(TooLarge):
                check_km(perm("2143"))
            with self.assertRaises(TooLarge):
                sweep(check_km, 4)

    @unittest.skipUnless(settings.RUN_SLOW_TESTS, "set HIEROGLYPHS_SLOW_TESTS=1 to run")
    def test_equidim_upto_five(self):
        for report in sweep(check_equidim, 5):
            self.assertTrue(report.passed, report.to_dict())


class SchubertTabletTestCase(unittest.TestCase):

    def test_214365_lex_diagonal(self):
        w = perm("214365")
        ideal = schubert_ideal(w)
        tablet = build_tablet(ideal, lex_diagonal(ideal.ring))
        self.assertEqual(len(tablet.all_components), 15)
        self.assertTrue(all(h.size == 3 for h in tablet.all_components))
        self.assertEqual(tablet.size, 15)
        self.assertEqual(supports(tablet)[((1, 1), (1, 2), (2, 1))], 2)
        self.assertEqual(supports(tablet), Counter(b.sorted_blanks() for b in bpds(w)))

    def test_2143_row_orders(self):
        ideal = schubert_ideal(perm("2143"))
        expected = {
            "1234": cells({(1, 1), (1, 2)}, {(1, 1), (2, 1)}, {(1, 1), (3, 3)}),
            "1324": cells({(1, 1), (1, 2)}, {(1, 1), (2, 3)}, {(1, 1), (3, 1)}),
            "4321": cells({(1, 1), (1, 3)}, {(1, 1), (2, 2)}, {(1, 1), (3, 1)}),
        }
        for rows, support in expected.items():
            tablet = build_tablet(ideal, row_reading_lex(ideal.ring, rows))
            self.assertEqual(tablet.size, 3)
            self.assertEqual(supports(tablet), support, rows)

    def test_order_sweep(self):
        groups = order_sweep(perm("2143"), ["1234", "1324", "3124", "3142", "3412", "3421", "4321"])
        self.assertEqual(groups, [["1234"], ["1324", "3124", "3142", "3412"], ["3421", "4321"]])

    def test_multidegrees_are_schubert_polynomials(self):
        for n in (3, 4):
            grading = row_grading(n)
            for w in Permutation.all(n):
                expected = schubert_polynomial(w)
                ideal = schubert_ideal(w)
                for order in (antidiagonal_lex(ideal.ring), lex_diagonal(ideal.ring)):
                    tablet = build_tablet(ideal, order, grading)
                    self.assertEqual(tablet_multidegree(tablet), expected, str(w))
                    self.assertEqual(tablet.multidegree, expected, str(w))


class KazhdanLusztigTestCase(unittest.TestCase):

    def test_initial_ideal(self):
        ideal, order = kl_fixture()
        J = initial_ideal(order, ideal)
        self.assertEqual(compare_initial_ideal(J, ["x21", "x11", "x13x22", "x14x31"]), ([], []))

    def test_tablet(self):
        ideal, order = kl_fixture()
        tablet = build_tablet(ideal, order)
        self.assertEqual(tablet.size, 4)
        self.assertTrue(tablet.equidimensional)
        self.assertEqual(tablet.degree, 4)
        self.assertEqual(multiplicity(ideal, order), 4)
        supports = {frozenset(tablet.ring.variable(i).name for i in h.marks) for h in tablet.hieroglyphs}
        self.assertEqual(supports, {
            frozenset({"x11", "x21", "x22", "x31"}),
            frozenset({"x11", "x21", "x13", "x31"}),
            frozenset({"x11", "x21", "x22", "x14"}),
            frozenset({"x11", "x21", "x13", "x14"}),
        })


class CommutingTestCase(unittest.TestCase):

    def test_n1(self):
        report = check_commuting(1)
        self.assertTrue(report.passed)
        self.assertEqual(report.details["degree"], 1)

    def test_n2(self):
        report = check_commuting(2)
        self.assertTrue(report.passed)
        self.assertEqual(report.details["degree"], 3)
        self.assertIsNone(report.to_dict()["permutation"])

    def test_n2_tablet(self):
        ideal, order, grading = FixtureRegistry.build("commuting2")
        tablet = build_tablet(ideal, order, grading)
        self.assertEqual([h.to_string(tablet.ring) for h in tablet.hieroglyphs],
                         ["{a21, a12}", "{b11, a21}", "{b12, b11}"])
        self.assertEqual(tablet.multidegree, LaurentPoly(1, {(2,): 3}))

    def test_n2_lex(self):
        ideal = commuting_ideal(2)
        order = TermOrder.lex(range(ideal.ring.nvars))
        J = initial_ideal(order, ideal)
        self.assertEqual(compare_initial_ideal(J, ["a11b12", "a11b21", "a12b21"]), ([], []))
        self.assertTrue(J.is_squarefree())
        tablet = build_tablet(ideal, order)
        self.assertEqual(tablet.size, 3)
        self.assertEqual(tablet.degree, 3)

    def test_n3_quadratic_leading_terms(self):
        ideal = commuting_ideal(3)
        order = commuting_order(ideal.ring)
        leads = {f.leading_monomial(order) for f in ideal}
        printed = {parse_monomial(ideal.ring, text) for text in COMMUTING3_INITIAL}
        self.assertEqual(leads, {m for m in printed if sum(m.exponents) == 2})
        self.assertEqual(len(leads), 8)

    def test_parse_monomial(self):
        ring = commuting_ring(3)
        m = parse_monomial(ring, "a12a31²b23")
        self.assertEqual(m.to_string(ring), "a12*a31^2*b23")
        self.assertEqual(parse_monomial(ring, "a13^2*a21"), parse_monomial(ring, "a13²a21"))

    def test_compare_initial_ideal(self):
        ideal, order, _ = FixtureRegistry.build("commuting2")
        J = initial_ideal(order, ideal)
        printed = [m.to_string(ideal.ring) for m in J.gens]
        self.assertEqual(compare_initial_ideal(J, printed), ([], []))
        missing, extra = compare_initial_ideal(J, printed[1:] + ["a11*b22"])
        self.assertEqual(missing, ["a11*b22"])
        self.assertEqual(extra, [printed[0]])

    @unittest.skipUnless(settings.RUN_SLOW_TESTS, "set HIEROGLYPHS_SLOW_TESTS=1 to run")
    def test_n3_degree(self):
        report = check_commuting(3)
        self.assertEqual(report.details["degree"], 31)
        self.assertEqual(report.details["tablet_size"], 31)
        self.assertEqual(report.details["components"], 32)
        self.assertEqual(report.details["initial_ideal_missing"], [])
        self.assertEqual(report.details["initial_ideal_extra"], [])
        self.assertTrue(report.passed)


class FixtureRegistryTestCase(unittest.TestCase):

    def test_names(self):
        self.assertEqual(list(FixtureRegistry.list_fixtures()), [
            "commuting2", "commuting3", "kl463512", "minors3x3", "schubert2143", "schubert2143-1324",
            "schubert2143-4321", "schubert214365", "symmetric3x3",
        ])

    def test_unknown(self):
        with self.assertRaises(UnknownFixture):
            FixtureRegistry.get("nope")

    def test_aliases(self):
        for alias, name in (("ex1.2", "minors3x3"), ("ex1.3", "symmetric3x3"), ("ex3.3", "schubert214365"),
                            ("ex3.6", "schubert2143"), ("comm2", "commuting2"), ("comm3", "commuting3"),
                            ("ex5.2", "kl463512")):
            with self.subTest(alias=alias):
                self.assertIs(FixtureRegistry.get(alias), FixtureRegistry.get(name))
        self.assertNotIn("ex1.2", FixtureRegistry.list_fixtures())
        with self.assertRaises(UnknownFixture):
            FixtureRegistry.register_alias("ex9.9", "nope")

    def test_files(self):
        for name, fixture in FixtureRegistry.list_fixtures().items():
            if fixture.path is not None:
                self.assertTrue(fixture.path.exists(), name)

    def test_example_degrees(self):
        degrees = {"minors3x3": 6, "symmetric3x3": 4, "schubert2143": 3, "schubert2143-4321": 3, "kl463512": 4}
        for name, degree in degrees.items():
            ideal, order, grading = FixtureRegistry.build(name)
            tablet = build_tablet(ideal, order, grading)
            self.assertEqual(tablet.degree, degree, name)
            self.assertEqual(tablet.size, degree, name)


if __name__ == "__main__":
    unittest.main()
