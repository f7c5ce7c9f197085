"""Homological product constructions of quantum LDPC CSS codes."""

from ldpc_products.codes import CssCode, NoLogicalQubits, params, validate_css
from ldpc_products.complexes import ChainComplex, from_classical, from_css, to_css
from ldpc_products.distance import exact_distance, weight_limited_distance
from ldpc_products.f2core import F2Matrix, F2Vector

__all__ = [
    "ChainComplex",
    "CssCode",
    "F2Matrix",
    "F2Vector",
    "NoLogicalQubits",
    "exact_distance",
    "from_classical",
    "from_css",
    "params",
    "to_css",
    "validate_css",
    "weight_limited_distance",
]
