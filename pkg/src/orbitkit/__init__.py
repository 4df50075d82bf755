"""Exact combinatorics of nilpotent orbit closures in simple Lie algebras.

The package decides when an orbit closure admits a symplectic resolution,
constructs every resolution as a marked Dynkin diagram, walks the move
graph connecting polarizations of one orbit, and pins down generic degrees
of the collapse maps, all over the integers.
"""

from .atlas import (
    AtlasError,
    OrbitRecord,
    Polarization,
    atlas_anchors,
    classical_anchor,
    component_anchors,
    find_record,
    load_atlas,
    required_records,
)
from .classical import (
    admits_symplectic_resolution_classical,
    classify_resolution_case,
    dual_partition,
    flag_to_marked,
    parse_partition,
    partition_from_diagram,
    richardson_type_A,
    resolution_candidates,
    theta_split,
    valid_partitions,
    validate_partition,
)
from .flops import (
    MODE_FLOPS,
    MODE_HIRAI,
    DegreeConsistencyError,
    DegreeResult,
    EquivalenceGraph,
    Move,
    absolute_degrees,
    explore,
    find_moves,
    graph_to_dot,
    graph_to_json_dict,
    verify_flop_structure,
)
from .oracle import (
    OracleError,
    Realization,
    centralizer_dimension,
    generic_jordan_type,
    jordan_type_of,
    matrix_rank_exact,
    nilradical_matrices,
    realization,
    richardson_from_flag,
    richardson_jordan_type,
)
from .orbits import (
    Grading,
    WeightedDiagram,
    grading,
    ideal_n,
    is_even,
    jm_marked_set,
    orbit_dimension,
    weighted_diagram_from_partition,
)
from .parabolic import (
    ContractionReport,
    check_extremal_contraction,
    contains,
    enumerate_symplectic_contractions,
    nilradical_roots,
)
from .roots import (
    LieType,
    MarkedDiagram,
    Root,
    RootSystem,
    build_root_system,
    cartan_matrix,
    classify_subdiagram,
    maximal_patch,
    parse_nodes,
)

__version__ = "0.1.0"

__all__ = [
    "AtlasError",
    "ContractionReport",
    "DegreeConsistencyError",
    "DegreeResult",
    "EquivalenceGraph",
    "Grading",
    "LieType",
    "MarkedDiagram",
    "MODE_FLOPS",
    "MODE_HIRAI",
    "Move",
    "OracleError",
    "OrbitRecord",
    "Polarization",
    "Realization",
    "Root",
    "RootSystem",
    "WeightedDiagram",
    "absolute_degrees",
    "admits_symplectic_resolution_classical",
    "atlas_anchors",
    "build_root_system",
    "cartan_matrix",
    "centralizer_dimension",
    "check_extremal_contraction",
    "classical_anchor",
    "classify_resolution_case",
    "classify_subdiagram",
    "component_anchors",
    "contains",
    "dual_partition",
    "enumerate_symplectic_contractions",
    "explore",
    "find_moves",
    "find_record",
    "flag_to_marked",
    "generic_jordan_type",
    "grading",
    "graph_to_dot",
    "graph_to_json_dict",
    "ideal_n",
    "is_even",
    "jm_marked_set",
    "jordan_type_of",
    "load_atlas",
    "matrix_rank_exact",
    "maximal_patch",
    "nilradical_matrices",
    "nilradical_roots",
    "orbit_dimension",
    "parse_nodes",
    "parse_partition",
    "partition_from_diagram",
    "realization",
    "required_records",
    "resolution_candidates",
    "richardson_from_flag",
    "richardson_jordan_type",
    "richardson_type_A",
    "theta_split",
    "valid_partitions",
    "validate_partition",
    "verify_flop_structure",
    "weighted_diagram_from_partition",
]
