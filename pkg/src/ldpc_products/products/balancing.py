"""Distance balancing: trade qubits for distance by tensoring with a classical code."""

from __future__ import annotations

from ldpc_products.codes import CssCode, _side
from ldpc_products.complexes import ChainComplex, from_classical, from_css, to_css
from ldpc_products.f2core import F2Matrix
from ldpc_products.products.tensor import tensor


def distance_balance_complex(code: CssCode, h: F2Matrix, side: str = "Z") -> tuple[ChainComplex, int]:
    """The product complex and the degree holding the balanced code's qubits."""
    side = _side(side)
    q = from_css(code)
    if side == "Z":
        return tensor(q, from_classical(h)), 2
    return tensor(q, from_classical(h.T)), 1


def distance_balance(code: CssCode, h: F2Matrix, side: str = "Z") -> CssCode:
    """Balance ``code`` (``n, k, dx, dz``) against the classical code ``ker h`` (``m, k', d``).

    ``side="Z"`` yields ``n*m + rz*r`` qubits, ``k*k'`` logicals and ``dz*d``
    while keeping ``dx``, where ``rz`` and ``r`` are the row counts of ``hz``
    and ``h``.  ``side="X"`` multiplies ``dx`` instead using the rows of ``hx``.
    """
    cx, degree = distance_balance_complex(code, h, side)
    return to_css(cx, degree)
