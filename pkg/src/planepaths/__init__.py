"""Edge-disjoint plane spanning paths on planar point sets.

Exact integer geometry throughout: construct three pairwise edge-disjoint
crossing-free spanning paths on any set of at least ten points in general
position (seven to nine via exhaustive search), two paths with prescribed
hull starting points on five or more, and verify everything independently.
"""

from .errors import (
    BudgetExceeded,
    CollinearTriple,
    DuplicatePoint,
    InputError,
    InternalError,
    InternalPlanarityFailure,
    InvalidStartSide,
    NoValidChoice,
    NotAWheel,
    NotOnHull,
    OddCardinality,
    ParseError,
    PlanePathsError,
    PointNotOutsideHull,
    PointOnLine,
    PreconditionViolated,
    SharedVertex,
    TooFew,
    Unbalanced,
    UnsupportedN,
)
from .geom import (
    CCW,
    COLLINEAR,
    CW,
    COORD_LIMIT,
    HomPoint,
    Point,
    PointSet,
    convex_hull,
    orient,
    segments_cross,
    validate_general_position,
    visible_hull_points,
)
from .partition import (
    Partition,
    SwitchablePath,
    VisibilityGraph,
    almost_balancing_lines_through,
    balancing_line_through_extreme,
    find_crossing_pair,
    find_switchable_path3,
    halving_segments,
    is_switchable,
    make_partition,
    partition_by_line,
    visibility_graph,
)
from .paths import (
    PathSeq,
    concat,
    is_plane,
    is_spanning,
    pairwise_edge_disjoint,
    path,
    reverse,
    verify_paths,
    zigzag_path,
)
from .twopaths import TwoPathResult, select_disjoint_visibility, st_path, two_paths_prescribed
from .threepaths import (
    CrossingPairWitness,
    OracleFallback,
    SwitchableBridgedWitness,
    ThreePathResult,
    WheelWitness,
    claim_halving_partner,
    is_wheel,
    structural_search,
    three_from_crossing,
    three_from_switchable,
    three_from_switchable_plus_bridge,
    three_from_two_free_edges,
    three_paths,
    verify_witness,
    wheel_paths,
)
from .oracle import SearchConfig, find_k_disjoint_paths, max_disjoint_paths
from .generators import convex_points, random_points, wheel_points

__version__ = "0.1.0"
