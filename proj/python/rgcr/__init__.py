"""Alternating links on thickened higher-genus surfaces.

Enumerates the quasiregular [n,m,n,m] tiling signatures a genus-g surface
admits, computes the hyperbolic geometry of their polygons, and builds and
verifies the corresponding link projection diagrams as combinatorial maps.
"""

from fractions import Fraction

from ._core import (
    DiagramParseError,
    DiagramReport,
    EnumeratedDiagram,
    GluingError,
    MapError,
    PolygonGeometry,
    SearchTooLargeError,
    SurfaceMap,
    TilingSignature,
    TwoCutWitness,
    WedgeAngles,
    dihedral_check,
    enumerate_diagrams,
    enumerate_signatures,
    euclidean_signature,
    find_knots,
    gauss_bonnet_residual,
    interior_angles,
    maps_isomorphic,
    polygon_geometry,
    regular_cross_ratio,
    signature_from_pair,
    special_case_k1,
    verify_diagram_text,
    wedge_angles,
)
from ._core import count_bounds as _count_bounds

__all__ = [
    "DiagramParseError",
    "DiagramReport",
    "EnumeratedDiagram",
    "GluingError",
    "MapError",
    "PolygonGeometry",
    "SearchTooLargeError",
    "SurfaceMap",
    "TilingSignature",
    "TwoCutWitness",
    "WedgeAngles",
    "count_bounds",
    "dihedral_check",
    "enumerate_diagrams",
    "enumerate_signatures",
    "euclidean_signature",
    "find_knots",
    "gauss_bonnet_residual",
    "interior_angles",
    "maps_isomorphic",
    "polygon_geometry",
    "regular_cross_ratio",
    "signature_from_pair",
    "special_case_k1",
    "verify_diagram_text",
    "wedge_angles",
]


def count_bounds(genus):
    """Exact (pair_bound, link_bound) for the genus as Fractions."""
    pair, link = _count_bounds(genus)
    return Fraction(pair), Fraction(link)
