"""Exact barycentric geometry built on a metric-matrix inner product."""
from barymetric._kernels import BACKEND
from barymetric.centers import (
    CenterSet,
    center_set,
    centroid,
    circumcenter,
    excenter,
    foot_of_perpendicular,
    incenter,
    midpoint,
    nine_point_center,
    orthocenter,
)
from barymetric.circles import (
    Circle,
    ConcentricCircles,
    Tangency,
    circumcircle,
    classify_tangency,
    excircle,
    incircle,
    nine_point_circle,
    power_of_point,
)
from barymetric.kernel import (
    A,
    B,
    C,
    AngleCot,
    BaryPoint,
    DegenerateTriangle,
    GeometryError,
    IdenticalLines,
    IdenticalPoints,
    InfiniteMisuse,
    Kind,
    Line,
    MetricMatrix,
    Rational,
    TriangleShape,
    Triple,
    ZeroVector,
    bracket,
    conway,
    cot_angle,
    cross_product_coeff,
    dist2,
    gauge,
    inner_product,
    intersect,
    is_gauge_equivalent,
    is_perpendicular,
    line_through,
    metric_KH,
    metric_KO,
    side_line,
    squared_area,
)
from barymetric.theorems import TheoremReport, UnknownTheorem, check, run_all

__version__ = "0.1.0"
