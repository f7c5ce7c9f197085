"""Named reference codes used by tests and the command line."""

from __future__ import annotations

import re
from dataclasses import replace

from ldpc_products.codes import CssCode
from ldpc_products.complexes import cycle_graph
from ldpc_products.f2core import F2Matrix
from ldpc_products.products.balanced import balanced_product_code, rotation_action
from ldpc_products.products.tensor import hypergraph_product


def _from_supports(supports: list[list[int]], n: int) -> F2Matrix:
    return F2Matrix((sum(1 << q for q in s) for s in supports), n)


def repetition(n: int) -> F2Matrix:
    """``(n-1) x n`` checks of the length-``n`` repetition code."""
    return _from_supports([[i, i + 1] for i in range(n - 1)], n)


def hamming() -> F2Matrix:
    """Parity checks of the [7,4,3] Hamming code; column ``j`` is ``j + 1`` in binary."""
    return _from_supports([[j for j in range(7) if ((j + 1) >> b) & 1] for b in range(3)], 7)


def hamming_generator() -> F2Matrix:
    """Systematic 4 x 7 generator matrix orthogonal to :func:`hamming`."""
    return F2Matrix.from_strings(["1110000", "1001100", "0101010", "1101001"])


def cycle_checks(length: int) -> F2Matrix:
    """Circulant ``1 + x`` checks of the cyclic repetition code."""
    return cycle_graph(length).diff(1)


def shor() -> CssCode:
    """Nine-qubit code with three X-checks (rank 2) and seven Z-checks (rank 6)."""
    hx = _from_supports([[0, 1, 2, 3, 4, 5], [3, 4, 5, 6, 7, 8], [0, 1, 2, 6, 7, 8]], 9)
    hz = _from_supports([[0, 1], [1, 2], [3, 4], [0, 2, 3, 5, 6, 8], [4, 5], [6, 7], [7, 8]], 9)
    return CssCode(hx, hz, name="shor")


def toric(length: int) -> CssCode:
    """``[[2L^2, 2, L]]`` toric code as the hypergraph product of two cycles."""
    h = cycle_checks(length)
    return replace(hypergraph_product(h, h), name=f"toric-{length}")


def surface(length: int) -> CssCode:
    """``[[L^2 + (L-1)^2, 1, L]]`` surface code from two repetition codes."""
    h = repetition(length)
    return replace(hypergraph_product(h, h), name=f"surface-{length}")


def fig8() -> CssCode:
    """``[[12, 2, 3]]``: cycles of length 3 and 6 balanced over the rotation group of order 3."""
    c, d = cycle_graph(3), cycle_graph(6)
    return replace(balanced_product_code(c, d, rotation_action(c, d, 3)), name="fig8")


_SIZED = re.compile(r"^(toric|surface)-(\d+)$")
NAMES = ("shor", "toric-L", "surface-L", "fig8")


def fixture(name: str) -> CssCode:
    """Look up ``shor``, ``fig8``, ``toric-L`` or ``surface-L`` (``L >= 2``)."""
    if name == "shor":
        return shor()
    if name == "fig8":
        return fig8()
    m = _SIZED.match(name)
    if m and int(m.group(2)) >= 2:
        return (toric if m.group(1) == "toric" else surface)(int(m.group(2)))
    raise KeyError(f"unknown fixture {name!r}; expected one of {', '.join(NAMES)}")
