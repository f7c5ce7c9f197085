"""Hypothesis strategies and random generators shared by the tests."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from ldpc_products.complexes import ChainComplex, from_classical
from ldpc_products.f2core import F2Matrix
from ldpc_products.products import tensor


@st.composite
def f2_matrices(draw, max_rows: int = 5, max_cols: int = 6, min_rows: int = 0, min_cols: int = 1):
    r = draw(st.integers(min_rows, max_rows))
    c = draw(st.integers(min_cols, max_cols))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return F2Matrix(rows, c)


@st.composite
def product_complexes(draw, max_dim: int = 4):
    """Chain complexes of length 2 or 3 built as tensor products of classical complexes."""
    h1 = draw(f2_matrices(max_dim, max_dim, min_rows=1))
    if draw(st.booleans()):
        return from_classical(h1)
    h2 = draw(f2_matrices(max_dim, max_dim, min_rows=1))
    return tensor(from_classical(h1), from_classical(h2))


def random_matrix(rng: np.random.Generator, r: int, c: int, density: float = 0.4) -> F2Matrix:
    return F2Matrix.from_array(rng.random((r, c)) < density)


def random_classical(rng: np.random.Generator, max_n: int = 6) -> ChainComplex:
    n = int(rng.integers(1, max_n + 1))
    r = int(rng.integers(1, max_n + 1))
    return from_classical(random_matrix(rng, r, n))


def random_poly_matrix(rng: np.random.Generator, r: int, c: int, ell: int, density: float = 0.5):
    from ldpc_products.products import PolyMatrix

    masks = rng.integers(0, 1 << ell, size=(r, c))
    keep = rng.random((r, c)) < density
    return PolyMatrix(ell, tuple(tuple(int(m) if k else 0 for m, k in zip(row, krow)) for row, krow in zip(masks, keep)), c)


def block_shift(size: int, ell: int) -> list[int]:
    """Cyclic shift inside each consecutive block of ``ell`` basis vectors."""
    return [(i // ell) * ell + (i % ell + 1) % ell for i in range(size)]


def block_shift_action(c: ChainComplex, d: ChainComplex, ell: int):
    """Free ``Z_ell`` action on complexes whose maps are lifts of polynomial matrices."""
    from ldpc_products.products import GroupAction

    return GroupAction(
        ell,
        {p: [block_shift(c.dim(p), ell)] for p in range(c.top + 1)},
        {q: [block_shift(d.dim(q), ell)] for q in range(d.top + 1)},
    )
