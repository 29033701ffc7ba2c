"""
Writes ideals back out in the ideal-file syntax read by IdealFileParser.
"""
from typing import List, Optional

from ..core.Grading import Grading
from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import TermOrder
from ..groebner.Ideal import Ideal


def _ring_line(ring: PolynomialRing) -> str:
    items = []
    for variable in ring.variables:
        if variable.grid is None:
            items.append(variable.name)
        else:
            cell = variable.grid
            items.append(f"{variable.name}@{cell.pane},{cell.row},{cell.col}")
    return "ring " + " ".join(items) + ";"


def _grading_line(ring: PolynomialRing, grading: Grading) -> str:
    weights = " ".join(
        f"{variable.name} = [{','.join(str(a) for a in grading.weights[variable.id])}]"
        for variable in ring.variables)
    return f"grading {grading.dim}: {weights};"


def format_ideal_file(ring: PolynomialRing, order: TermOrder, ideal: Ideal,
                      grading: Optional[Grading] = None) -> str:
    """
    Format an ideal as ideal-file text.

    Generators are written with their terms sorted by the order, leading
    term first. The grading block is omitted for the standard grading.

    Args:
        ring: Ring of the ideal, declared in id order
        order: Term order to declare
        ideal: The ideal
        grading: Grading to declare, standard when omitted

    Returns:
        Text ending in a newline
    """
    lines: List[str] = [
        _ring_line(ring),
        f"order {order.kind.value} " + ", ".join(ring.variable(i).name for i in order.reading_order) + ";",
    ]
    if grading is not None and not grading.is_standard:
        lines.append(_grading_line(ring, grading))
    if ideal.is_zero():
        lines.append("gens ;")
    else:
        lines.append("gens " + ",\n     ".join(f.to_string(ring, order) for f in ideal.generators) + ";")
    return "\n".join(lines) + "\n"
