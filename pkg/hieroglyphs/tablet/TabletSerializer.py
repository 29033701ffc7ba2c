"""
JSON form of a tablet.

Field order is fixed so that the same tablet always serializes to the same
text.
"""
import json
from typing import Any, Dict, List

from ..core.Grading import Grading
from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import OrderKind, TermOrder
from ..core.Variable import GridCell, Variable
from ..kpoly.LaurentPoly import LaurentPoly
from .Hieroglyph import Hieroglyph
from .Tablet import Tablet


def _variable_to_dict(variable: Variable) -> Dict[str, Any]:
    grid = variable.grid
    return {
        "id": variable.id,
        "base_name": variable.base_name,
        "copy_index": variable.copy_index,
        "pane": grid.pane if grid else None,
        "row": grid.row if grid else None,
        "col": grid.col if grid else None,
    }


def _variable_from_dict(data: Dict[str, Any]) -> Variable:
    grid = None
    if data["pane"] is not None:
        grid = GridCell(data["pane"], data["row"], data["col"])
    return Variable(data["id"], data["base_name"], data["copy_index"], grid)


def _hieroglyph_to_dict(hieroglyph: Hieroglyph) -> Dict[str, Any]:
    return {
        "marks": list(hieroglyph.marks),
        "support": [cell.as_list() for cell in hieroglyph.support],
    }


def tablet_to_dict(tablet: Tablet) -> Dict[str, Any]:
    ring = tablet.ring
    return {
        "ring": [_variable_to_dict(v) for v in ring.variables],
        "order": {
            "kind": tablet.order.kind.value,
            "reading_order": [ring.variable(i).name for i in tablet.order.reading_order],
        },
        "tablet_size": tablet.size,
        "equidimensional": tablet.equidimensional,
        "tablet": [_hieroglyph_to_dict(h) for h in tablet.hieroglyphs],
        "all_components": [_hieroglyph_to_dict(h) for h in tablet.all_components],
        "degree": tablet.degree,
        "multidegree": tablet.multidegree.to_json(),
        "grading": {
            "dim": tablet.grading.dim,
            "weights": [list(w) for w in tablet.grading.weights],
        },
    }


def tablet_to_json(tablet: Tablet) -> str:
    """Serialize a tablet with a stable field order."""
    return json.dumps(tablet_to_dict(tablet), indent=2, ensure_ascii=False)


def tablet_from_json(text: str) -> Tablet:
    """
    Rebuild a tablet from its JSON form.

    Args:
        text: Output of tablet_to_json

    Returns:
        The tablet; its initial ideal is not stored and is None
    """
    data = json.loads(text)
    ring = PolynomialRing([_variable_from_dict(v) for v in data["ring"]])
    order = TermOrder(OrderKind(data["order"]["kind"]),
                      tuple(ring.index(name) for name in data["order"]["reading_order"]))
    grading = Grading(data["grading"]["weights"], data["grading"]["dim"])

    def hieroglyphs(items: List[Dict[str, Any]]):
        return tuple(Hieroglyph.from_marks(item["marks"], ring) for item in items)

    return Tablet(
        ring=ring,
        order=order,
        grading=grading,
        hieroglyphs=hieroglyphs(data["tablet"]),
        all_components=hieroglyphs(data["all_components"]),
        equidimensional=data["equidimensional"],
        degree=data["degree"],
        multidegree=LaurentPoly.from_json(data["multidegree"], grading.dim),
    )
