"""Fans, smoothness and Bruhat-interval lattices of toric Schubert varieties."""
from .errors import ToricSchubertError
from .root_system import cartan_matrix, parse_type
from .smoothness import smooth_by_cone_oracle, smooth_by_criterion, smoothness_report
from .toric_fan import full_flag_fan, partial_flag_fan
from .weyl_group import ParabolicSpec, element_from_word

__version__ = "0.1.0"

__all__ = [
    "ParabolicSpec",
    "ToricSchubertError",
    "cartan_matrix",
    "element_from_word",
    "full_flag_fan",
    "parse_type",
    "partial_flag_fan",
    "smooth_by_cone_oracle",
    "smooth_by_criterion",
    "smoothness_report",
]
