"""Product constructions of chain complexes and CSS codes."""

from ldpc_products.products.balanced import (
    ActionError,
    GroupAction,
    balanced_product,
    balanced_product_code,
    kunneth_over_group,
    rotation_action,
)
from ldpc_products.products.balancing import distance_balance, distance_balance_complex
from ldpc_products.products.fiber import TwistError, TwistSpec, fiber_bundle, fiber_bundle_complex, shift_matrix
from ldpc_products.products.lifted import PolyMatrix, lifted_product, parse_poly
from ldpc_products.products.tensor import hypergraph_product, tensor

__all__ = [
    "ActionError",
    "GroupAction",
    "PolyMatrix",
    "TwistError",
    "TwistSpec",
    "balanced_product",
    "balanced_product_code",
    "distance_balance",
    "distance_balance_complex",
    "fiber_bundle",
    "fiber_bundle_complex",
    "hypergraph_product",
    "kunneth_over_group",
    "lifted_product",
    "parse_poly",
    "rotation_action",
    "shift_matrix",
    "tensor",
]
