"""Digital topology on Z^n: adjacency pairs, Khalimsky spaces, digital manifolds."""

from .adjacency import (
    AdjacencySpec,
    ComponentPartition,
    are_adjacent,
    complement_components,
    components,
    khalimsky_below,
    neighbor_count,
    neighbors,
)
from .alexandrov import FiniteAlexandrovSpace, khalimsky_space_on
from .lattice import (
    Cube,
    Window,
    count_k_faces,
    cube_decompositions,
    cube_points,
    enumerate_cubes_in_window,
    is_simple_translation,
    subcubes,
)
from .manifold import (
    AdjacencyPair,
    check_separation_property,
    double_point_witnesses,
    double_points,
    good_pair_table,
    is_digital_manifold,
    is_good_pair,
    jordan_check,
    two_components_at,
)

__all__ = [name for name in dir() if not name.startswith("_")]
