from .groups import GroupTooLarge, MatGroup, NFMatrix, closure, element_order, mirrors, presentation_semidihedral
from .invariants import (
    is_invariant,
    mirror_image_cusp_check,
    molien_series,
    reynolds_invariants,
    weighted_relations,
)
from .bolza import bolza_check, corrected_y_scale, map_hyperelliptic, map_v, map_w

__all__ = [
    "GroupTooLarge",
    "MatGroup",
    "NFMatrix",
    "closure",
    "element_order",
    "mirrors",
    "presentation_semidihedral",
    "is_invariant",
    "mirror_image_cusp_check",
    "molien_series",
    "reynolds_invariants",
    "weighted_relations",
    "bolza_check",
    "corrected_y_scale",
    "map_hyperelliptic",
    "map_v",
    "map_w",
]
