from ._qh import (
    Chain,
    Diagram,
    MarkedCircles,
    MathError,
    Quandle,
    basis_size,
    boundary,
    catalog,
    class_of,
    coloring_count,
    colorings,
    extract_chain,
    extract_chain0,
    format_chain,
    hom_count,
    homology,
    induced_map,
    is_boundary,
    is_cycle,
    is_hom,
    les_boundary_map,
    les_check,
    load_quandle,
    orbits,
    parse_chain,
    parse_diagram,
    parse_marked_circles,
    parse_quandle,
    presentation,
    project,
    realize_two_cycle,
    shadow_extend,
    validate_diagram,
    validate_marked_circles,
)

__all__ = [
    "Chain",
    "Diagram",
    "MarkedCircles",
    "MathError",
    "Quandle",
    "basis_size",
    "boundary",
    "catalog",
    "class_of",
    "coloring_count",
    "colorings",
    "extract_chain",
    "extract_chain0",
    "format_chain",
    "hom_count",
    "homology",
    "induced_map",
    "is_boundary",
    "is_cycle",
    "is_hom",
    "les_boundary_map",
    "les_check",
    "load_quandle",
    "orbits",
    "parse_chain",
    "parse_diagram",
    "parse_marked_circles",
    "parse_quandle",
    "presentation",
    "project",
    "realize_two_cycle",
    "shadow_extend",
    "validate_diagram",
    "validate_marked_circles",
]
