"""
Hieroglyphs Demonstration

This script runs every built-in fixture through the tablet pipeline and
writes the ASCII tablet, the Unicode tablet and the JSON document into
outputs/<fixture>/.
"""
import logging.config
import os

from hieroglyphs import settings
from hieroglyphs.tablet import RenderMode, TabletRenderer, build_tablet, tablet_to_json
from hieroglyphs.zoo import FixtureRegistry

# Fixtures that take minutes rather than seconds
SLOW_FIXTURES = {"commuting3"}


def create_output_directory(fixture_name):
    """Create an output directory for a fixture if it doesn't exist."""
    fixture_dir = os.path.join(settings.OUTPUT_DIR, fixture_name)
    os.makedirs(fixture_dir, exist_ok=True)
    return fixture_dir


def generate_fixture(name):
    """Build one fixture's tablet and export it in every format."""
    ideal, order, grading = FixtureRegistry.build(name)
    tablet = build_tablet(ideal, order, grading)
    output_dir = create_output_directory(name)

    for mode in RenderMode:
        TabletRenderer(tablet.ring, mode).export_text(
            tablet, os.path.join(output_dir, f"{name}_{mode.value}.txt"))

    with open(os.path.join(output_dir, f"{name}.json"), "w", encoding="utf-8") as handle:
        handle.write(tablet_to_json(tablet) + "\n")

    print(f"{name}: {tablet.size} hieroglyphs, degree {tablet.degree}, "
          f"{'equidimensional' if tablet.equidimensional else 'not equidimensional'}")


def main():
    """Generate the outputs of every quick fixture."""
    logging.config.dictConfig(settings.LOGGING)
    for name in FixtureRegistry.list_fixtures():
        if name in SLOW_FIXTURES and not settings.RUN_SLOW_TESTS:
            print(f"{name}: skipped (set HIEROGLYPHS_SLOW_TESTS=1 to include it)")
            continue
        generate_fixture(name)


if __name__ == "__main__":
    main()
