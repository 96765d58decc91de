"""Plane curve geometry over number fields."""

from .local import (
    INFINITE,
    SingularityReport,
    classify_ADE,
    intersection_multiplicity,
    milnor_number,
    multiplicity_at,
    tangent_cone,
)
from .plane import (
    PlaneCurve,
    flexes,
    hessian,
    intersect,
    projective_solutions,
    restrict_to_line,
    singular_points,
    singularity_reports,
    tangent_line,
)
from .points import ProjPoint, collinear, line_through
