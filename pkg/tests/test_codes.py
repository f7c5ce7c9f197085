from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ldpc_products.codes import (
    BbsSpec,
    CssCode,
    NoLogicalQubits,
    bbs_params,
    css_violation,
    ldpc_audit,
    params,
    tanner_export,
    validate_css,
)
from ldpc_products.complexes import from_css
from ldpc_products.f2core import DimensionError, F2Matrix, row_basis
from ldpc_products.fixtures import fig8, hamming_generator, repetition, shor, surface, toric
from ldpc_products.products import hypergraph_product
from strategies import f2_matrices


def test_validate_shor():
    assert validate_css(shor())
    assert css_violation(shor()) is None


@pytest.mark.parametrize("n", [1, 2, 5])
def test_validate_identity_fails(n):
    code = CssCode(F2Matrix.identity(n), F2Matrix.identity(n))
    assert not validate_css(code)
    assert "Z-check 0 and X-check 0" in css_violation(code)


def test_column_mismatch():
    with pytest.raises(DimensionError):
        CssCode(F2Matrix.identity(2), F2Matrix.identity(3))


def test_shor_params_and_redundancy():
    code = shor()
    assert (code.hx.nrows, code.hz.nrows) == (3, 7)
    assert (code.rank_x, code.rank_z) == (2, 6)
    p = params(code)
    assert (p.n, p.k) == (9, 1)
    assert p.d is None


def test_params_products():
    h = repetition(3)
    assert (params(hypergraph_product(h, h)).n, params(hypergraph_product(h, h)).k) == (13, 1)
    assert (params(fig8()).n, params(fig8()).k) == (12, 2)


@pytest.mark.parametrize("L", [2, 3, 4, 5])
def test_ldpc_audit_toric(L):
    report = ldpc_audit(toric(L))
    assert (report.hx_row, report.hz_row) == (4, 4)
    assert (report.hx_col, report.hz_col) == (2, 2)
    assert report.as_tuple() == (4, 4)
    assert set(toric(L).hx.row_weights()) == {4}


def test_ldpc_audit_shor_and_empty():
    assert ldpc_audit(shor()).max_row_weight == 6
    empty = CssCode(F2Matrix.zeros(0, 3), F2Matrix.zeros(0, 3))
    assert ldpc_audit(empty).as_tuple() == (0, 0)


def test_tanner_shor():
    g = tanner_export(shor())
    assert (g.n_qubits, g.n_xchecks, g.n_zchecks) == (9, 3, 7)
    assert g.n_nodes == 19
    assert g.n_edges == shor().hx.nnz + shor().hz.nnz == 18 + 6 * 2 + 6
    assert g.has_even_overlaps()


def test_tanner_single_qubit():
    g = tanner_export(CssCode(F2Matrix.zeros(0, 1), F2Matrix.zeros(0, 1)))
    assert (g.n_nodes, g.n_edges) == (1, 0)
    assert g.to_dot() == "graph tanner {\n  q0 [shape=circle];\n}\n"


def test_tanner_surface_counts_and_dot():
    g = tanner_export(surface(3))
    assert (g.n_qubits, g.n_xchecks, g.n_zchecks) == (13, 6, 6)
    dot = g.to_dot()
    assert dot.count("[shape=circle]") == 13
    assert dot.count("[shape=box]") == 12
    assert "x0 -- q0;" in dot


@settings(max_examples=100, deadline=None)
@given(f2_matrices(4, 6), st.data())
def test_even_overlaps_iff_commuting(hx, data):
    hz = data.draw(f2_matrices(4, hx.ncols, min_cols=hx.ncols))
    code = CssCode(hx, hz)
    assert tanner_export(code).has_even_overlaps() == validate_css(code)


@settings(max_examples=100, deadline=None)
@given(f2_matrices(3, 3, min_rows=1), f2_matrices(3, 3, min_rows=1), st.data())
def test_corrupted_product_detected(h1, h2, data):
    code = hypergraph_product(h1, h2)
    assert tanner_export(code).has_even_overlaps()
    row = data.draw(st.integers(0, code.hx.nrows - 1))
    col = data.draw(st.integers(0, code.n - 1))
    rows = list(code.hx.int_rows)
    rows[row] ^= 1 << col
    bad = CssCode(F2Matrix(rows, code.n), code.hz)
    assert tanner_export(bad).has_even_overlaps() == validate_css(bad)


@settings(max_examples=100, deadline=None)
@given(f2_matrices(3, 4, min_rows=1), f2_matrices(3, 4, min_rows=1))
def test_k_equals_homology(h1, h2):
    code = hypergraph_product(h1, h2)
    assert params(code).k == from_css(code).homology_dim(1)
    assert code.k == oracles.css_k(oracles.dense(code.hx), oracles.dense(code.hz))


# -- BBS ---------------------------------------------------------------------------


def test_bbs_identity():
    p = bbs_params(BbsSpec(F2Matrix.identity(2)))
    assert (p.n, p.k, p.d) == (2, 2, 1)


def test_bbs_all_ones():
    p = bbs_params(BbsSpec(F2Matrix.from_strings(["11", "11"])))
    assert (p.n, p.k, p.d) == (4, 1, 2)


def test_bbs_hamming_generators():
    g = hamming_generator()
    spec = BbsSpec.from_generators(g, g)
    p = bbs_params(spec)
    assert (p.k, p.d) == (4, 3)
    assert 21 <= p.n <= 49
    assert p.n == 25


def test_bbs_zero_matrix():
    with pytest.raises(NoLogicalQubits):
        bbs_params(BbsSpec(F2Matrix.zeros(2, 2)))


def test_bbs_spec_consistency():
    g = hamming_generator()
    with pytest.raises(ValueError):
        BbsSpec(F2Matrix.identity(7), g, g, F2Matrix.identity(4))
    with pytest.raises(ValueError):
        BbsSpec.from_generators(g, g, F2Matrix.zeros(4, 4))


def _span_min_weight(m: F2Matrix) -> int:
    basis = row_basis(m).int_rows
    best = None
    for coeffs in itertools.product((0, 1), repeat=len(basis)):
        if not any(coeffs):
            continue
        v = 0
        for c, b in zip(coeffs, basis):
            if c:
                v ^= b
        w = v.bit_count()
        best = w if best is None else min(best, w)
    return best


@settings(max_examples=100, deadline=None)
@given(f2_matrices(6, 6, min_rows=1))
def test_bbs_distance_brute_force(a):
    if a.is_zero():
        return
    p = bbs_params(BbsSpec(a))
    assert p.d == min(_span_min_weight(a), _span_min_weight(a.T))
    assert p.n == a.nnz
