"""Cycle-aware edge structural encodings for graphs.

Computes the orthogonal projector onto the cycle space of the edge
Laplacian, shortest cycle bases over Z2 with their incidence matrices,
row-equivariant / column-order-invariant encodings of those matrices,
cycle-level persistence pairs, and digest-based distinguishability
harnesses, plus deterministic generators for the graph families the test
suites exercise.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (
    CycleEncError,
    DimensionMismatchError,
    DuplicateEdgeError,
    EndpointOutOfRangeError,
    InvalidCfiParamsError,
    NoCoordinatesError,
    NonPositiveWeightError,
    ParseError,
    RankDeficientError,
    SchemaVersionMismatchError,
    SelfLoopError,
    TooLargeError,
    UnknownEncoderError,
    UnknownFamilyError,
    UnreachableNodesError,
)
from .graph import Graph, adjacency, build_graph, component_count, components, load_graph, save_graph
from .generators import (
    GeneratorSpec,
    gen_cfi,
    gen_cycle_point_cloud,
    gen_rook4x4,
    gen_shrikhande,
    make_graph,
)
from .hodge import (
    CycleSpaceProjector,
    KernelBasis,
    SignedIncidence,
    betti_number,
    column_zero_counts,
    cycle_space_projector,
    graph_laplacian,
    hodge_decompose,
    hodge_laplacian,
    incidence_matrix,
    kernel_basis,
)
from .peoi import (
    EdgeFeatureMatrix,
    RhoFamily,
    family_counting,
    family_counting_general,
    family_cycle_count,
    family_epd_min,
    filter_enhanced_incidence,
    get_family,
    min_mlp,
    peoi_encode,
    register_family,
)
from .scb import (
    CandidateSet,
    CycleBasis,
    CycleIncidenceMatrix,
    Z2CycleVector,
    brute_force_scb,
    cycle_incidence,
    horton_candidates,
    matrix_reduction,
    scb_edge_embedding,
    scb_length_histogram,
    shortest_cycle_basis,
)
from .topo import (
    FilterAssignment,
    PersistencePair,
    coordinate_filter,
    cycle_epd,
    epd_multisets_equal,
    sssp_filter,
)
from .distinguish import (
    ComparisonVerdict,
    WLColoring,
    compare,
    encoder_digest,
    fwl2_refine,
    wl1_refine,
)
from .fixtures import FIXTURE_NAMES, fixture_graph, fixture_path
from .transformers import (
    CycleIncidenceEncoder,
    CycleSpaceProjectorTransformer,
    check_graph,
)
