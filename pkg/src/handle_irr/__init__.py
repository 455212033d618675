"""Certificates of irreducibility for automorphisms of handlebodies built
from Penner pairs of curves on a surface with one boundary circle."""
from .surfmap import (
    CombMap, Region, MapError, build_map, validate_map, trace_faces, euler_characteristic,
    delete_components, crossing_count, is_essential, arc_essential, are_parallel,
)
from .cmap import dumps, loads
from .penner import check_penner_pair, validate_dual_arc, find_dual_arcs, materialize
from .doubling import double_surface, attach_disc_boundary, build_QR
from .twistword import parse_word, certify_irreducible, certify_genus2
from .bounds import chi_exterior, reducing_surface_window, genus2_verdict

__version__ = "0.1.0"
