"""Learning spaces, quadrant arrangements and upright-quad drawings."""

from .arrangement import (
    QuadrantArrangement,
    count_regions,
    from_permutation,
    region_family,
    region_graph,
)
from .drawing import (
    GridDrawing,
    assign_coordinates,
    check_dominance,
    compact,
    extract_faces,
    validate_upright_quad,
)
from .faces import FaceWalk
from .family import (
    LearningGraph,
    SetFamily,
    Universe,
    ValidationReport,
    Violation,
    build_graph,
    chain_between,
    chain_family,
    check_union_closed,
    check_well_graded,
    families_isomorphic,
    power_set,
    prefix_suffix_family,
    validate_family,
    verify_accessibility_extension,
)
from .recognize import (
    BoundaryOrders,
    CensusReport,
    ImplicationPoset,
    brute_force_recognize,
    census,
    implication_poset,
    recognize,
)
from .svg import SvgOptions, render_svg
from .zones import Zone, drawing_to_arrangement, extract_zones

__version__ = "0.1.0"
