"""Hamiltonian cycle search on cubic planar graphs by chamber expansion,
with an independent exact oracle and a construction corpus."""

from .carve import (
    AdjacentEntrancesError,
    CarveError,
    CarveResult,
    CarveStatus,
    ChamberState,
    DoorAdjacencyError,
    EdgeRole,
    EntranceChoice,
    OddFaceError,
    RoleConflictError,
    TraceEvent,
    carve,
    carve_double,
    chamber_count,
    detect_bridge_face,
    open_face,
    select_entrance,
)
from .corpus import (
    CompositionError,
    Fragment,
    GraphFacts,
    NamedGraph,
    bipartite_fragment_family,
    build_fragment,
    build_named,
    compose_fragments,
    corpus_names,
    cut_side_fragment,
    cycle_fragment,
    delete_vertex,
    dual_embedding,
    fragment_names,
    generate_prism,
    glue_fragments,
    truncate_embedding,
)
from .embedding import (
    EdgeCut,
    EmbeddingError,
    Face,
    NonPlanarError,
    PlanarEmbedding,
    RotationFormatError,
    ValidationReport,
    edge_key,
    enumerate_3_edge_cuts,
    parse_embedding,
    serialize_embedding,
    trace_faces,
    validate,
)
from .oracle import (
    CycleCertificate,
    PathProfile,
    SearchResult,
    enumerate_hamiltonian_cycles,
    find_hamiltonian_cycle,
    hamiltonian_path_profile,
    longest_cycle,
    verify_cycle,
)

__version__ = "0.1.0"
