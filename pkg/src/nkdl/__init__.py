"""k-neighborhood degree lists, degree-restricted 2-switches and exhaustive checks."""
from .graph_core import (
    Graph,
    bfs_distances,
    build,
    canonical_form,
    delete_vertex,
    diameter,
    eccentricity_and_diameter,
    find_isomorphism,
    neighborhood_k,
)
from .profiles import (
    complement_profile,
    degree_from_shell2,
    degree_sequence,
    distance_degree_sequence,
    lex_compare,
    nkdl_graph,
    nkdl_vertex,
)
from .switches import TwoSwitch, apply_switch, classify_switch, enumerate_switches, inverse_switch
from .transform import TransformResult, fallback_search, replay, transform_by_n2dl, transform_by_ndl

__version__ = "0.1.0"
