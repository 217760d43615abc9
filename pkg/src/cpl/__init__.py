"""cpl: exact searches, certified generators and closed-form bounds for
convex-position problems on planar point sets."""

from .geometry import (
    COORD_BOUND,
    ColoredPointSet,
    ConvexWitness,
    GeometryError,
    Orientation,
    Point,
    PointSet,
    PositionCheck,
    convex_hull,
    hull_indices,
    interior_count,
    is_convex_position,
    orient,
    strictly_inside,
    validate_general_position,
)
from .search import (
    AtMost,
    ChainKind,
    ChainWitness,
    InteriorConstraint,
    SearchError,
    SearchReport,
    SearchStats,
    ZeroMod,
    find_chain,
    find_empty_mono_quad,
    find_ngon,
    longest_chain,
    max_convex_subset,
    satisfies,
)
from .oracles import (
    ORACLE_MAX_POINTS,
    oracle_find_chain,
    oracle_find_empty_mono_quad,
    oracle_find_ngon,
    oracle_longest_chain,
    oracle_max_convex_subset,
)
from .generators import (
    MAX_HORTON_LEVEL,
    HortonConstructionError,
    PointFormatError,
    horton,
    parse_pointset,
    random_general_position,
    serialize_pointset,
    shear_to_distinct_x,
)
from .bounds import (
    GBoundsRow,
    bdv_nprime,
    best_known_nonexist_k,
    binom,
    c_of_r,
    f_nonexist_pair,
    f_survival_thresholds,
    f_threshold,
    g_bounds,
    koshelev_nonexist_k,
    modq_upper,
    render_table,
    sendov_k,
    survival_k,
)
from .hunt import (
    MAX_HUNT_POINTS,
    HuntQuery,
    HuntResult,
    randomized_witness_search,
)

__version__ = "0.1.0"
