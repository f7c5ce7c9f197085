"""Tensor product of chain complexes and the hypergraph product.

Basis order of ``Tot(C x D)_n``: the blocks ``C_p (x) D_q`` with ``p + q = n``
appear by descending ``p``; inside a block the C-index varies slowest, which
is the row-major Kronecker convention.
"""

from __future__ import annotations

from collections.abc import Callable

from ldpc_products.codes import CssCode
from ldpc_products.complexes import ChainComplex
from ldpc_products.f2core import F2Matrix, block_matrix, hstack, kron


def total_blocks(c: ChainComplex, d: ChainComplex, n: int) -> list[tuple[int, int]]:
    """``(p, q)`` pairs of degree ``n``, descending ``p``."""
    return [(p, n - p) for p in range(min(n, c.top), -1, -1) if 0 <= n - p <= d.top]


def total_dims(c: ChainComplex, d: ChainComplex) -> list[int]:
    return [
        sum(c.dim(p) * d.dim(q) for p, q in total_blocks(c, d, n))
        for n in range(c.top + d.top + 1)
    ]


def assemble_total(c: ChainComplex, d: ChainComplex, vertical: Callable[[int, int], F2Matrix],
                   horizontal: Callable[[int, int], F2Matrix]) -> ChainComplex:
    """Total complex of a double complex on the spaces ``C_p (x) D_q``.

    ``vertical(p, q)`` maps ``C_p D_q -> C_{p-1} D_q`` and
    ``horizontal(p, q)`` maps ``C_p D_q -> C_p D_{q-1}``.
    """
    top = c.top + d.top
    dims = total_dims(c, d)
    if top == 0:
        return ChainComplex([], dims=dims)
    maps = []
    for n in range(1, top + 1):
        src = total_blocks(c, d, n)
        dst = total_blocks(c, d, n - 1)
        rows = []
        for (p2, q2) in dst:
            row = []
            for (p, q) in src:
                shape = (c.dim(p2) * d.dim(q2), c.dim(p) * d.dim(q))
                if (p2, q2) == (p - 1, q):
                    blk = vertical(p, q)
                elif (p2, q2) == (p, q - 1):
                    blk = horizontal(p, q)
                else:
                    blk = F2Matrix.zeros(*shape)
                row.append(blk)
            rows.append(row)
        if not dst or not src:
            maps.append(F2Matrix.zeros(dims[n - 1], dims[n]))
        else:
            maps.append(block_matrix(rows))
    return ChainComplex(maps, dims=dims)


def tensor(c: ChainComplex, d: ChainComplex) -> ChainComplex:
    """``Tot(C (x) D)`` with ``d = d^C (x) id + id (x) d^D`` (no signs over GF(2))."""
    return assemble_total(
        c,
        d,
        lambda p, q: kron(c.diff(p), F2Matrix.identity(d.dim(q))),
        lambda p, q: kron(F2Matrix.identity(c.dim(p)), d.diff(q)),
    )


def hypergraph_product(h1: F2Matrix, h2: F2Matrix) -> CssCode:
    """Hypergraph product with ``hx = [h1 (x) I | I (x) h2^T]`` and ``hz = [I (x) h2 | h1^T (x) I]``.

    Qubits: ``n1*n2`` bit-bit pairs followed by ``r1*r2`` check-check pairs.
    Equals ``to_css(tensor(from_classical(h1), from_classical(h2.T)), 1)``
    bit for bit.
    """
    r1, n1 = h1.shape
    r2, n2 = h2.shape
    hx = hstack(kron(h1, F2Matrix.identity(n2)), kron(F2Matrix.identity(r1), h2.T))
    hz = hstack(kron(F2Matrix.identity(n1), h2), kron(h1.T, F2Matrix.identity(r2)))
    return CssCode(hx, hz)
