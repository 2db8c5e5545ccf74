"""Best Moebius approximations of convex and concave conformal maps of the disk."""
from . import _backend
from .blaschke import BlaschkeProduct, circle_level_roots
from .errors import BMAError
from .jets import Jet3, jet_combine, jet_compose
from .maps import (AnalyticMap, DualMap, Precomposed, dual_map, make_builtin,
                   precompose_automorphism, schwarzian)
from .moebius import (INFINITY, Moebius, bma, bma_pole, classify_pole, region_sample,
                      supporting_halfplane)
from .polygon import (PolygonData, exterior_from_blaschke, exterior_from_data,
                      interior_from_blaschke, interior_from_data,
                      triangle_prevertices_normalized, vertices_of)

BACKEND = _backend.NAME

__version__ = "0.1.0"
