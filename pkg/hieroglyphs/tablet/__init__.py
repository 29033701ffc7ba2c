"""
Tablets of hieroglyphs: the decomposition-side degree and multidegree.
"""

from .Hieroglyph import Glyph, Hieroglyph
from .Tablet import Tablet, build_tablet, tablet_multidegree
from .TabletRenderer import RenderMode, TabletRenderer, render_hieroglyph
from .TabletSerializer import tablet_to_dict, tablet_to_json, tablet_from_json

__all__ = [
    'Glyph', 'Hieroglyph', 'Tablet', 'build_tablet', 'tablet_multidegree',
    'RenderMode', 'TabletRenderer', 'render_hieroglyph',
    'tablet_to_dict', 'tablet_to_json', 'tablet_from_json',
]
