"""
Registry of the built-in example ideals.

Each fixture builds an (Ideal, TermOrder, Grading) triple; some also ship
as an ideal file under the package's fixtures directory.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Optional, Tuple

from .. import settings
from ..core.Errors import UnknownFixture
from ..core.Grading import Grading
from ..core.TermOrder import TermOrder
from ..groebner.Ideal import Ideal
from .MatrixIdeals import commuting_ideal, commuting_order, generic_minor_ideal, kl_fixture, schubert_ideal
from .MatrixOrders import lex_diagonal, row_reading_lex
from .Permutation import Permutation

FixtureData = Tuple[Ideal, TermOrder, Grading]


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    builder: Callable[[], FixtureData]
    filename: Optional[str] = None

    def build(self) -> FixtureData:
        return self.builder()

    @property
    def path(self) -> Optional[Path]:
        """Bundled ideal file, if the fixture has one."""
        if self.filename is None:
            return None
        return Path(settings.FIXTURES_DIR) / self.filename


class FixtureRegistry:
    """
    Registry of the available fixtures.

    Fixtures are looked up by name, e.g. ``FixtureRegistry.get("minors3x3")``.
    """

    _fixtures: Dict[str, Fixture] = {}
    _aliases: Dict[str, str] = {}

    @classmethod
    def register(cls, fixture: Fixture) -> None:
        """
        Register a fixture under its name.

        Args:
            fixture: The fixture to register
        """
        cls._fixtures[fixture.name] = fixture

    @classmethod
    def register_alias(cls, alias: str, name: str) -> None:
        """Make a registered fixture reachable under a second name."""
        cls.get(name)
        cls._aliases[alias] = name

    @classmethod
    def get(cls, name: str) -> Fixture:
        """
        Get a fixture by name.

        Args:
            name: Name or alias of the fixture to retrieve

        Returns:
            The fixture

        Raises:
            UnknownFixture: If the name is not registered
        """
        target = cls._aliases.get(name, name)
        if target not in cls._fixtures:
            raise UnknownFixture(f"Unknown fixture: {name}")
        return cls._fixtures[target]

    @classmethod
    def build(cls, name: str) -> FixtureData:
        return cls.get(name).build()

    @classmethod
    def list_fixtures(cls) -> Dict[str, Fixture]:
        """
        Get a dictionary of all registered fixtures, sorted by name. Aliases are not listed.
        """
        return dict(sorted(cls._fixtures.items()))


def _standard(ideal: Ideal, order: TermOrder) -> FixtureData:
    return ideal, order, Grading.standard(ideal.ring.nvars)


def _rank_one_3x3() -> FixtureData:
    ideal = generic_minor_ideal(3, 3, 2)
    return _standard(ideal, lex_diagonal(ideal.ring))


def _symmetric_rank_one_3x3() -> FixtureData:
    ideal = generic_minor_ideal(3, 3, 2, symmetric=True)
    # x11 > x12 > x13 > x22 > x23 > x33, the declaration order
    return _standard(ideal, TermOrder.grevlex(range(ideal.ring.nvars)))


def _schubert(w: str, rows: Optional[str] = None) -> Callable[[], FixtureData]:
    def build() -> FixtureData:
        ideal = schubert_ideal(Permutation.parse(w))
        order = lex_diagonal(ideal.ring) if rows is None else row_reading_lex(ideal.ring, rows)
        return _standard(ideal, order)
    return build


def _commuting(n: int) -> Callable[[], FixtureData]:
    def build() -> FixtureData:
        ideal = commuting_ideal(n)
        return _standard(ideal, commuting_order(ideal.ring))
    return build


def _kl463512() -> FixtureData:
    ideal, order = kl_fixture()
    return _standard(ideal, order)


FixtureRegistry.register(Fixture(
    "minors3x3", "2x2 minors of a generic 3x3 matrix, lex diagonal", _rank_one_3x3, "minors3x3.ideal"))
FixtureRegistry.register(Fixture(
    "symmetric3x3", "2x2 minors of a generic symmetric 3x3 matrix, grevlex", _symmetric_rank_one_3x3,
    "symmetric3x3.ideal"))
FixtureRegistry.register(Fixture(
    "schubert214365", "Schubert ideal of 214365, lex diagonal", _schubert("214365")))
FixtureRegistry.register(Fixture(
    "schubert2143", "Schubert ideal of 2143, 1234 row order", _schubert("2143"), "schubert2143.ideal"))
FixtureRegistry.register(Fixture(
    "schubert2143-1324", "Schubert ideal of 2143, 1324 row order", _schubert("2143", "1324")))
FixtureRegistry.register(Fixture(
    "schubert2143-4321", "Schubert ideal of 2143, 4321 row order", _schubert("2143", "4321")))
FixtureRegistry.register(Fixture(
    "commuting2", "Commuting scheme of 2x2 matrices", _commuting(2), "commuting2.ideal"))
FixtureRegistry.register(Fixture(
    "commuting3", "Commuting scheme of 3x3 matrices", _commuting(3)))
FixtureRegistry.register(Fixture(
    "kl463512", "Tangent cone of a Kazhdan-Lusztig variety, SE-NW lex", _kl463512, "kl463512.ideal"))

# Short names used in the command-line documentation
for _alias, _name in (("ex1.2", "minors3x3"), ("ex1.3", "symmetric3x3"), ("ex3.3", "schubert214365"),
                      ("ex3.6", "schubert2143"), ("comm2", "commuting2"), ("comm3", "commuting3"),
                      ("ex5.2", "kl463512")):
    FixtureRegistry.register_alias(_alias, _name)
