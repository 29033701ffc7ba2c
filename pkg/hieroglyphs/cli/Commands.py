"""
Command line for the hieroglyphs toolkit.

Every subcommand prints to stdout; log output goes to stderr. Malformed
input exits with status 2, a violated mathematical precondition with 1.
"""
import argparse
import json
import logging
import logging.config
import sys
from typing import List, Optional, Tuple

from .. import settings
from ..core.Errors import HieroglyphError, InputError
from ..core.Grading import Grading
from ..core.TermOrder import OrderKind, TermOrder
from ..groebner.GroebnerBasis import buchberger, initial_ideal
from ..groebner.Ideal import Ideal
from ..kpoly.KPolynomial import KAlgorithm, kpoly
from ..kpoly.Multidegree import codimension, degree, multidegree
from ..monomial.Polarization import polarize
from ..stanleyreisner.SimplicialComplex import minimal_primes
from ..tablet.Tablet import Tablet, build_tablet
from ..tablet.TabletRenderer import RenderMode, TabletRenderer
from ..tablet.TabletSerializer import tablet_to_json
from ..zoo.BumplessPipeDream import bpds
from ..zoo.FixtureRegistry import FixtureRegistry
from ..zoo.Harness import CHECKS, check_commuting, schubert_tablet, sweep
from ..zoo.MatrixIdeals import commuting_ideal, commuting_order, schubert_ideal
from ..zoo.MatrixOrders import lex_diagonal, row_reading_lex
from ..zoo.Permutation import Permutation
from ..zoo.PipeDream import pipe_dreams, schubert_polynomial
from .IdealFileParser import parse_ideal_file
from .IdealFileWriter import format_ideal_file

log = logging.getLogger(__name__)

Problem = Tuple[Ideal, TermOrder, Grading]

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"Cannot read {source}: {exc.strerror}") from None


def _load(args) -> Problem:
    """The (ideal, order, grading) named by a file argument or --builtin."""
    builtin = getattr(args, "builtin", None)
    if builtin is not None:
        ideal, order, grading = FixtureRegistry.build(builtin)
    elif args.file is None:
        raise InputError("Give an ideal file or --builtin NAME")
    else:
        parsed = parse_ideal_file(_read_source(args.file))
        ideal, order, grading = parsed.ideal, parsed.order, parsed.grading
    order_kind = getattr(args, "order", None)
    if order_kind is not None:
        order = order.with_kind(OrderKind(order_kind))
    return ideal, order, grading


def _print_tablet(tablet: Tablet, fmt: str) -> None:
    if fmt == "json":
        print(tablet_to_json(tablet))
        return
    ring = tablet.ring
    if ring.has_grid():
        print(TabletRenderer(ring, RenderMode(fmt)).render_tablet(tablet))
    else:
        for hieroglyph in tablet.hieroglyphs:
            print(hieroglyph.to_string(ring))
    print()
    print(f"tablet size: {tablet.size}")
    print(f"hieroglyph size: {tablet.hieroglyph_size}")
    print(f"components: {len(tablet.all_components)}")
    print(f"equidimensional: {'yes' if tablet.equidimensional else 'no'}")
    print(f"degree: {tablet.degree}")
    print(f"multidegree: {tablet.multidegree.to_string()}")


def cmd_tablet(args) -> int:
    ideal, order, grading = _load(args)
    _print_tablet(build_tablet(ideal, order, grading), args.format)
    return EXIT_OK


def cmd_groebner(args) -> int:
    ideal, order, _ = _load(args)
    basis = buchberger(order, ideal)
    for f in basis:
        print(f.to_string(ideal.ring, order))
    return EXIT_OK


def cmd_init(args) -> int:
    ideal, order, _ = _load(args)
    J = initial_ideal(order, ideal)
    for m in J.gens:
        print(m.to_string(ideal.ring))
    return EXIT_OK


def cmd_polarize(args) -> int:
    ideal, order, grading = _load(args)
    polarization = polarize(initial_ideal(order, ideal), grading)
    ring = polarization.ring
    print("ring " + " ".join(ring.names) + ";")
    for m in polarization.ideal.gens:
        print(m.to_string(ring))
    return EXIT_OK


def cmd_decompose(args) -> int:
    ideal, order, grading = _load(args)
    polarization = polarize(initial_ideal(order, ideal), grading)
    for prime in minimal_primes(polarization.ideal):
        print(prime.to_string(polarization.ring))
    return EXIT_OK


def cmd_kpoly(args) -> int:
    ideal, order, grading = _load(args)
    J = initial_ideal(order, ideal)
    K = kpoly(J, grading, KAlgorithm(args.algo))
    print(f"K: {K.to_string()}")
    print(f"multidegree: {multidegree(K, grading).to_string()}")
    if grading.is_standard:
        print(f"degree: {degree(K, grading)}")
    print(f"codimension: {codimension(K)}")
    return EXIT_OK


def cmd_schubert(args) -> int:
    w = Permutation.parse(args.permutation)
    if args.emit:
        ideal = schubert_ideal(w)
        order = lex_diagonal(ideal.ring) if args.rows is None else row_reading_lex(ideal.ring, args.rows)
        sys.stdout.write(format_ideal_file(ideal.ring, order, ideal))
        return EXIT_OK
    if args.rows is None:
        tablet = schubert_tablet(w)
    else:
        tablet = schubert_tablet(w, lambda ring: row_reading_lex(ring, args.rows))
    _print_tablet(tablet, args.format)
    return EXIT_OK


def cmd_commuting(args) -> int:
    if args.report:
        print(json.dumps(check_commuting(args.n).to_dict(), indent=2))
        return EXIT_OK
    ideal = commuting_ideal(args.n)
    sys.stdout.write(format_ideal_file(ideal.ring, commuting_order(ideal.ring), ideal))
    return EXIT_OK


def cmd_pipedreams(args) -> int:
    w = Permutation.parse(args.permutation)
    dreams = pipe_dreams(w)
    for dream in dreams:
        print(dream.to_string() or "(no crosses)")
        print()
    print(f"pipe dreams: {len(dreams)}")
    print(f"schubert polynomial: {schubert_polynomial(w).to_string()}")
    return EXIT_OK


def cmd_bpds(args) -> int:
    w = Permutation.parse(args.permutation)
    diagrams = bpds(w)
    for diagram in diagrams:
        print(diagram.to_string())
        print()
    print(f"bumpless pipe dreams: {len(diagrams)}")
    return EXIT_OK


def cmd_check(args) -> int:
    reports = sweep(CHECKS[args.conjecture], args.upto, args.workers)
    document = {
        "conjecture": args.conjecture,
        "upto": args.upto,
        "pass": all(r.passed for r in reports),
        "checked": len(reports),
        "failed": [r.permutation for r in reports if not r.passed],
        "reports": [r.to_dict() for r in reports],
    }
    print(json.dumps(document, indent=2))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    for name, fixture in FixtureRegistry.list_fixtures().items():
        bundled = f" [{fixture.filename}]" if fixture.filename else ""
        print(f"{name:<20}{fixture.description}{bundled}")
    return EXIT_OK


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", help="Ideal file, or - for stdin")
    parser.add_argument("--builtin", metavar="NAME", help="Use a built-in fixture instead of a file")
    parser.add_argument("--order", choices=[kind.value for kind in OrderKind],
                        help="Replace the declared order's kind, keeping its variable reading")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hieroglyphs",
        description="Degrees of varieties through tablets of hieroglyphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    formats = [mode.value for mode in RenderMode] + ["json"]

    tablet = subparsers.add_parser("tablet", help="Full pipeline: draw the tablet and its degree")
    _add_source(tablet)
    tablet.add_argument("--format", choices=formats, default="ascii")
    tablet.set_defaults(func=cmd_tablet)

    for name, func, help_text in (
        ("groebner", cmd_groebner, "Reduced Gröbner basis"),
        ("init", cmd_init, "Minimal generators of the initial ideal"),
        ("polarize", cmd_polarize, "Polarized initial ideal"),
        ("decompose", cmd_decompose, "Minimal primes of the polarized initial ideal"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        _add_source(sub)
        sub.set_defaults(func=func)

    k = subparsers.add_parser("kpoly", help="K-polynomial, multidegree and degree of the initial ideal")
    _add_source(k)
    k.add_argument("--algo", choices=[a.value for a in KAlgorithm], default=KAlgorithm.SPLIT.value)
    k.set_defaults(func=cmd_kpoly)

    schubert = subparsers.add_parser("schubert", help="Tablet of a matrix Schubert variety")
    schubert.add_argument("permutation", help="One-line notation, e.g. 2143")
    schubert.add_argument("--rows", metavar="PERM", help="Row-reading lex order, e.g. 1324")
    schubert.add_argument("--emit", action="store_true", help="Print the ideal file instead")
    schubert.add_argument("--format", choices=formats, default="ascii")
    schubert.set_defaults(func=cmd_schubert)

    commuting = subparsers.add_parser("commuting", help="Ideal file of the commuting scheme")
    commuting.add_argument("n", type=int)
    commuting.add_argument("--report", action="store_true", help="Print the degree check as JSON")
    commuting.set_defaults(func=cmd_commuting)

    for name, func, help_text in (
        ("pipedreams", cmd_pipedreams, "Reduced pipe dreams of a permutation"),
        ("bpds", cmd_bpds, "Bumpless pipe dreams of a permutation"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("permutation")
        sub.set_defaults(func=func)

    check = subparsers.add_parser("check", help="Sweep a harness over all permutations up to a size")
    check.add_argument("conjecture", choices=sorted(CHECKS))
    check.add_argument("--upto", type=int, required=True)
    check.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS)
    check.set_defaults(func=cmd_check)

    fixtures = subparsers.add_parser("fixtures", help="List the built-in fixtures")
    fixtures.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when omitted)

    Returns:
        Exit status: 0 on success, 1 on a computation error, 2 on bad input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    logging.config.dictConfig(settings.LOGGING)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        return args.func(args)
    except InputError as exc:
        log.debug("input error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HieroglyphError as exc:
        log.debug("computation error", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
