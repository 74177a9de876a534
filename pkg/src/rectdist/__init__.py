"""Exact interleaving and bottleneck distances for rectangle persistence modules."""

from .extended_reals import (
    NEG_INF,
    POS_INF,
    DimensionMismatch,
    ExtReal,
    UndefinedArithmetic,
    add,
    ext,
    ext_abs,
    halve,
    max_norm_dist,
    parse_ext,
    sub,
)
from .rectangles import (
    InvalidRectangle,
    Rectangle,
    admits_nontrivial_morphism,
    interleaving_distance,
    shift,
    triviality_threshold,
    zero_distance,
)
from .barcode_io import (
    JSON,
    TEXT,
    Barcode,
    ParseError,
    barcode_from_intervals,
    multiset_equal,
    parse_barcode,
    parse_rectangle,
    read_barcode,
    serialize_barcode,
    write_barcode,
)
from .bottleneck import (
    BottleneckResult,
    CostMatrix,
    Matching,
    bottleneck_distance,
    build_cost_matrix,
    matching_cost,
)
from .oracle import (
    TooLarge,
    enumerate_bottleneck,
    grid_interleaving_check,
    oracle_interleaving_distance,
)

__version__ = "0.1.0"
