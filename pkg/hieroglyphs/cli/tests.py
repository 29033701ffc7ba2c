import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from unittest import mock

from hieroglyphs.cli import format_ideal_file, main, parse_ideal_file, read_ideal_file
from hieroglyphs.core import (
    DuplicateVariable, Grading, IdealFileSyntaxError, IncompleteOrder, Monomial, NonPositiveGrading,
    PolynomialRing, TermOrder, UndeclaredVariable,
)
from hieroglyphs.groebner import Ideal
from hieroglyphs.tablet import build_tablet
from hieroglyphs.zoo import FixtureRegistry, generic_minor_ideal, lex_diagonal


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        if stdin is None:
            code = main(list(argv))
        else:
            with mock.patch("sys.stdin", io.StringIO(stdin)):
                code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def same_problem(test, parsed, ideal, order, grading):
    test.assertEqual(parsed.ring, ideal.ring)
    test.assertEqual(parsed.order, order)
    test.assertEqual(parsed.grading, grading)
    test.assertEqual(set(parsed.ideal.generators), set(ideal.generators))


class IdealFileParserTestCase(unittest.TestCase):

    def test_smallest_file(self):
        parsed = parse_ideal_file("ring x y; order lex x, y; gens x^2 - y^2;")
        self.assertEqual(parsed.ring.names, ["x", "y"])
        self.assertEqual(parsed.order, TermOrder.lex([0, 1]))
        self.assertTrue(parsed.grading.is_standard)
        self.assertEqual(len(parsed.ideal), 1)
        (f,) = parsed.ideal.generators
        self.assertEqual(f.coefficient(Monomial([2, 0])), 1)
        self.assertEqual(f.coefficient(Monomial([0, 2])), -1)

    def test_layout_and_comments(self):
        text = (
            "# leading comment\n"
            "ring a@0,1,1\n"
            "     b~2@0,1,2 ;  # trailing comment\n"
            "order grevlex b~2,a;\n"
            "gens -2/3*a*b~2 + a^2 ,\n"
            "     +b~2*b~2;\n"
        )
        parsed = parse_ideal_file(text)
        self.assertEqual(parsed.ring.names, ["a", "b~2"])
        self.assertTrue(parsed.ring.variable(1).is_copy)
        self.assertEqual(parsed.ring.variable(1).grid.col, 2)
        self.assertEqual(parsed.order, TermOrder.grevlex([1, 0]))
        first, second = parsed.ideal.generators
        self.assertEqual(first.coefficient(Monomial([1, 1])), Fraction(-2, 3))
        self.assertEqual(first.coefficient(Monomial([2, 0])), 1)
        self.assertEqual(second.coefficient(Monomial([0, 2])), 1)

    def test_grading_block(self):
        parsed = parse_ideal_file(
            "ring x y; order lex x, y; grading 2: y = [0,1] x = [1,0]; gens x*y;")
        self.assertEqual(parsed.grading, Grading([(1, 0), (0, 1)]))

    def test_empty_gens(self):
        parsed = parse_ideal_file("ring x; order lex x; gens ;")
        self.assertTrue(parsed.ideal.is_zero())

    def test_undeclared_variable(self):
        with self.assertRaises(UndeclaredVariable):
            parse_ideal_file("ring x y; order lex x, y; gens x*z;")
        with self.assertRaises(UndeclaredVariable):
            parse_ideal_file("ring x y; order lex x, z; gens x;")

    def test_duplicate_variable(self):
        with self.assertRaises(DuplicateVariable):
            parse_ideal_file("ring x x; order lex x, x; gens x;")
        with self.assertRaises(DuplicateVariable):
            parse_ideal_file("ring x y; order lex x, y; grading 1: x = [1] x = [1] y = [1]; gens x;")

    def test_bad_grading(self):
        for block in ("grading 1: x = [0] y = [1];", "grading 1: x = [1];", "grading 2: x = [1] y = [1];"):
            with self.subTest(block=block):
                with self.assertRaises(NonPositiveGrading):
                    parse_ideal_file(f"ring x y; order lex x, y; {block} gens x;")

    def test_incomplete_order(self):
        for reading in ("x", "x, x", "y"):
            with self.subTest(reading=reading):
                with self.assertRaises(IncompleteOrder):
                    parse_ideal_file(f"ring x y; order lex {reading}; gens x;")

    def test_syntax_error_position(self):
        with self.assertRaises(IdealFileSyntaxError) as caught:
            parse_ideal_file("ring x y;\norder lex x y;\ngens x;")
        self.assertEqual(caught.exception.line, 2)
        self.assertEqual(caught.exception.column, 13)
        self.assertIn("line 2, column 13", str(caught.exception))

    def test_syntax_errors(self):
        for text in ("ring x;", "ring x$; order lex x; gens x;", "order lex x; gens x;",
                     "ring x; order lex x; gens 1/0*x;", "ring lex; order lex lex; gens lex;"):
            with self.subTest(text=text):
                with self.assertRaises(IdealFileSyntaxError):
                    parse_ideal_file(text)

    def test_generic_minor_file(self):
        ideal = generic_minor_ideal(3, 3, 2)
        parsed = read_ideal_file(str(FixtureRegistry.get("minors3x3").path))
        self.assertEqual(len(parsed.ideal), 9)
        same_problem(self, parsed, ideal, lex_diagonal(ideal.ring), Grading.standard(9))

    def test_fixture_files_match_builders(self):
        for name, fixture in FixtureRegistry.list_fixtures().items():
            if fixture.path is None:
                continue
            with self.subTest(fixture=name):
                ideal, order, grading = fixture.build()
                same_problem(self, read_ideal_file(str(fixture.path)), ideal, order, grading)


class IdealFileWriterTestCase(unittest.TestCase):

    def test_round_trip_fixtures(self):
        for name in FixtureRegistry.list_fixtures():
            with self.subTest(fixture=name):
                ideal, order, grading = FixtureRegistry.build(name)
                text = format_ideal_file(ideal.ring, order, ideal, grading)
                parsed = parse_ideal_file(text)
                same_problem(self, parsed, ideal, order, grading)
                self.assertEqual(format_ideal_file(parsed.ring, parsed.order, parsed.ideal, parsed.grading), text)

    def test_grading_and_zero_ideal(self):
        ring = PolynomialRing.from_names(["x", "y"])
        grading = Grading([(1, 0), (0, 1)])
        text = format_ideal_file(ring, TermOrder.lex([1, 0]), Ideal(ring, []), grading)
        self.assertEqual(text, "ring x y;\norder lex y, x;\ngrading 2: x = [1,0] y = [0,1];\ngens ;\n")
        parsed = parse_ideal_file(text)
        self.assertEqual(parsed.grading, grading)
        self.assertTrue(parsed.ideal.is_zero())

    def test_grid_and_coefficients(self):
        parsed = parse_ideal_file("ring u@1,2,3 v; order lex u, v; gens 3/2*u^2*v - v^3;")
        text = format_ideal_file(parsed.ring, parsed.order, parsed.ideal)
        self.assertEqual(text, "ring u@1,2,3 v;\norder lex u, v;\ngens 3/2*u^2*v - v^3;\n")


class CommandsTestCase(unittest.TestCase):

    def test_tablet_builtin_json(self):
        code, out, _ = run("tablet", "--builtin", "minors3x3", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["degree"], 6)
        self.assertEqual(data["tablet_size"], 6)
        self.assertEqual(len(data["tablet"]), 6)

    def test_tablet_builtin_alias(self):
        code, out, _ = run("tablet", "--builtin", "ex1.2", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(out, run("tablet", "--builtin", "minors3x3", "--format", "json")[1])
        self.assertEqual(json.loads(out)["degree"], 6)

    def test_tablet_text(self):
        code, out, _ = run("tablet", "--builtin", "symmetric3x3")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith(".++\n .+\n  .\n\n"))
        self.assertIn("tablet size: 4\n", out)
        self.assertIn("equidimensional: no\n", out)
        self.assertIn("degree: 4\n", out)

    def test_tablet_file(self):
        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, "xy.ideal")
            with open(filename, "w", encoding="utf-8") as handle:
                handle.write("ring x y; order lex x, y; gens x*y;")
            code, out, _ = run("tablet", filename)
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[:2], ["{x}", "{y}"])
        self.assertIn("degree: 2\n", out)

    def test_order_override(self):
        _, lex_out, _ = run("init", "--builtin", "symmetric3x3", "--order", "lex")
        _, grevlex_out, _ = run("init", "--builtin", "symmetric3x3")
        self.assertEqual(set(grevlex_out.split()),
                         {"x23^2", "x13*x23", "x13*x22", "x13^2", "x12*x13", "x12^2"})
        self.assertNotEqual(lex_out, grevlex_out)

    def test_deterministic(self):
        for name in ("minors3x3", "symmetric3x3", "schubert2143", "commuting2", "kl463512"):
            with self.subTest(fixture=name):
                first = run("tablet", "--builtin", name, "--format", "json")
                self.assertEqual(first, run("tablet", "--builtin", name, "--format", "json"))

    def test_pipeline_steps(self):
        code, out, _ = run("groebner", "--builtin", "schubert2143")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], "x11")
        self.assertEqual(len(out.splitlines()), 2)
        self.assertEqual(len(run("init", "--builtin", "minors3x3")[1].splitlines()), 9)
        self.assertEqual(len(run("decompose", "--builtin", "symmetric3x3")[1].splitlines()), 5)
        code, out, _ = run("polarize", "--builtin", "symmetric3x3")
        self.assertEqual(code, 0)
        self.assertIn("x12~2", out.splitlines()[0].split())

    def test_kpoly(self):
        for algo in ("split", "taylor"):
            with self.subTest(algo=algo):
                code, out, _ = run("kpoly", "--builtin", "minors3x3", "--algo", algo)
                self.assertEqual(code, 0)
                self.assertIn("degree: 6\n", out)
                self.assertIn("codimension: 4\n", out)

    def test_commuting_pipeline(self):
        code, text, _ = run("commuting", "2")
        self.assertEqual(code, 0)
        parsed = parse_ideal_file(text)
        self.assertEqual(build_tablet(parsed.ideal, parsed.order, parsed.grading).degree, 3)
        code, out, _ = run("tablet", "-", stdin=text)
        self.assertEqual(code, 0)
        self.assertIn("degree: 3\n", out)

    def test_commuting_report(self):
        code, out, _ = run("commuting", "2", "--report")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["pass"])
        self.assertEqual(report["details"]["degree"], 3)

    def test_schubert(self):
        code, out, _ = run("schubert", "2143", "--rows", "4321")
        self.assertEqual(code, 0)
        self.assertIn("tablet size: 3\n", out)
        code, text, _ = run("schubert", "2143", "--emit")
        self.assertEqual(code, 0)
        ideal, order, grading = FixtureRegistry.build("schubert2143")
        same_problem(self, parse_ideal_file(text), ideal, order, grading)

    def test_pipe_dreams(self):
        code, out, _ = run("pipedreams", "2143")
        self.assertEqual(code, 0)
        self.assertIn("pipe dreams: 3\n", out)
        code, out, _ = run("bpds", "2143")
        self.assertEqual(code, 0)
        self.assertIn("bumpless pipe dreams: 3\n", out)

    def test_check_bpd(self):
        code, out, _ = run("check", "bpd", "--upto", "4")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertTrue(report["pass"])
        self.assertEqual(report["checked"], 33)
        self.assertEqual(report["failed"], [])
        self.assertEqual(list(report["reports"][0]), ["conjecture", "n", "permutation", "pass", "details"])

    def test_fixtures(self):
        code, out, _ = run("fixtures")
        self.assertEqual(code, 0)
        names = [line.split()[0] for line in out.splitlines()]
        self.assertEqual(names, sorted(FixtureRegistry.list_fixtures()))

    def test_input_errors_exit_2(self):
        for argv in (("tablet", "--builtin", "nope"), ("schubert", "2243"), ("tablet",),
                     ("tablet", "/nonexistent/file.ideal"), ("check", "nope", "--upto", "2"), ()):
            with self.subTest(argv=argv):
                code, _, err = run(*argv)
                self.assertEqual(code, 2)
                self.assertTrue(err)

    def test_incomplete_order_exit_2(self):
        code, out, err = run("tablet", "-", stdin="ring x y; order lex x; gens x;")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("y", err)

    def test_syntax_error_exit_2(self):
        code, out, err = run("tablet", "-", stdin="ring x y;\ngens x;")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("line 2", err)

    def test_computation_errors_exit_1(self):
        code, _, err = run("tablet", "-", stdin="ring x y; order lex x, y; gens x^2 + y;")
        self.assertEqual(code, 1)
        self.assertIn("not homogeneous", err)
        code, _, _ = run("kpoly", "--builtin", "symmetric3x3", "--algo", "faces")
        self.assertEqual(code, 1)
        code, _, _ = run("check", "km", "--upto", "9")
        self.assertEqual(code, 1)

    def test_verbose(self):
        code, _, _ = run("-v", "fixtures")
        self.assertEqual(code, 0)


if __name__ == "__main__":
    unittest.main()
