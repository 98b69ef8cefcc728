"""Polynomial algebra over prime fields and Frobenius-splitting certificates."""

from .poly import Poly, PolyRing, ParseError
from .groebner import GroebnerBasis, groebner, normal_form
from .ideals import bracket_power, colon, dimension, eliminate, intersect, intersect_all
from .fedder import CompatibleReport, FedderReport, compatible_fpure_test, fedder_fpure
from .plucker import PluckerModel, flag_plucker_model, richardson_ideal

__all__ = [
    "Poly", "PolyRing", "ParseError", "GroebnerBasis", "groebner", "normal_form",
    "bracket_power", "colon", "dimension", "eliminate", "intersect", "intersect_all",
    "CompatibleReport", "FedderReport", "compatible_fpure_test", "fedder_fpure",
    "PluckerModel", "flag_plucker_model", "richardson_ideal",
]
