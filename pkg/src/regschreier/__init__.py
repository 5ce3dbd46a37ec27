"""Schreier labelings and double-cover certificates for regular multigraphs."""

from .cover import CoveringMap, canonical_double_cover, fiber, is_double_cover, verify_covering
from .factorization import (
    EulerOrientation,
    TwoFactor,
    bouquet,
    cover_to_bouquet,
    euler_circuit,
    orient_by_euler,
    two_factorization,
)
from .graph_core import (
    Arc,
    Bipartition,
    Graph,
    GraphBuilder,
    bipartition,
    connected_components,
    degree,
    regularity,
    star,
    validate,
)
from .matching import (
    MatchabilityCertificate,
    Matching,
    is_matchable,
    max_matching_bipartite,
    max_matching_general,
    orthogonal_matchings,
    remove_matching,
)
from .schreier import (
    CoverOnly,
    DirectSchreier,
    GroupSignature,
    Letter,
    NotSchreierWithCover,
    PermutationAction,
    PreconditionError,
    SchreierLabeling,
    action_from_labeling,
    classify,
    label_bipartite_involutions,
    label_from_factorization,
    orbital_graph,
    verify_labeling,
)
