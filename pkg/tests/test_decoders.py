from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ldpc_products.codes import CssCode
from ldpc_products.decoders import (
    DecoderGuardError,
    bp_decode,
    decode,
    lookup_decode,
    small_set_flip,
)
from ldpc_products.f2core import F2Matrix, F2Vector, in_rowspace
from ldpc_products.fixtures import fig8, hamming, surface, toric
from ldpc_products.products import hypergraph_product
from strategies import f2_matrices


def _error(n: int, support) -> F2Vector:
    return F2Vector.from_support(n, support)


def _recovered(code: CssCode, side: str, error: F2Vector, correction: F2Vector) -> bool:
    return in_rowspace(error ^ correction, code.stabilizers(side))


# -- lookup ---------------------------------------------------------------------


def test_lookup_zero_syndrome():
    code = surface(3)
    out = lookup_decode(code, "Z", F2Vector.zeros(code.hx.nrows))
    assert out.correction.is_zero() and out.converged


@pytest.mark.parametrize("side", ["X", "Z"])
def test_lookup_corrects_single_errors(side):
    code = surface(3)
    h = code.checks(side)
    for q in range(code.n):
        e = _error(code.n, [q])
        out = lookup_decode(code, side, h @ e)
        assert out.converged
        assert _recovered(code, side, e, out.correction)


@pytest.mark.parametrize("code,side,failures", [
    (surface(3), "X", 23), (surface(3), "Z", 25), (fig8(), "X", 39), (fig8(), "Z", 39),
])
def test_lookup_weight_two_failures(code, side, failures):
    """Some weight-2 errors are miscorrected; counts are frozen regressions."""
    h = code.checks(side)
    bad = 0
    for pair in itertools.combinations(range(code.n), 2):
        e = _error(code.n, pair)
        bad += not _recovered(code, side, e, lookup_decode(code, side, h @ e).correction)
    assert bad == failures > 0


@pytest.mark.parametrize("code", [surface(3), surface(2), CssCode(hamming(), F2Matrix.zeros(0, 7))])
def test_lookup_is_minimum_weight(code):
    for side in "XZ":
        h = code.checks(side)
        dense = oracles.dense(h)
        seen = set()
        for bits in range(1 << code.n):
            e = F2Vector(code.n, bits)
            syn = h @ e
            if syn.bits in seen:
                continue
            seen.add(syn.bits)
            out = lookup_decode(code, side, syn)
            assert out.converged
            assert out.correction.weight == oracles.min_weight_solution(dense, syn.to_array())


def test_lookup_guard():
    with pytest.raises(DecoderGuardError):
        lookup_decode(toric(4), "Z", F2Vector.zeros(16))


def test_lookup_unreachable_syndrome():
    code = toric(3)
    # odd-weight syndromes are not in the image of the toric checks
    out = lookup_decode(code, "Z", _error(9, [0]))
    assert not out.converged
    assert out.residual == _error(9, [0])


# -- belief propagation -----------------------------------------------------------


def test_bp_zero_syndrome():
    out = bp_decode(hamming(), F2Vector.zeros(3), 0.05)
    assert out.correction.is_zero() and out.converged and out.iterations == 0


def test_bp_hamming_single_errors():
    """Every single error on a weight-1 or weight-2 column is recovered exactly.

    The error on the weight-3 column converges after one iteration to a
    weight-4 vector with the same syndrome: the three weight-2 columns flip
    with it.  The full set of seven dual checks removes this failure.
    """
    h = hamming()
    weight3 = [q for q in range(7) if sum(h.to_array()[:, q]) == 3]
    assert weight3 == [6]
    for q in range(7):
        e = _error(7, [q])
        out = bp_decode(h, h @ e, 0.05)
        assert out.converged
        if q in weight3:
            assert out.correction.support() == [2, 4, 5, 6]
        else:
            assert out.correction == e


def test_bp_hamming_full_dual_checks():
    h = hamming()
    rows = sorted({a ^ b ^ c for a, b, c in itertools.product((0, *h.int_rows), repeat=3)} - {0})
    full = F2Matrix(rows, 7)
    assert full.nrows == 7
    for q in range(7):
        e = _error(7, [q])
        out = bp_decode(full, full @ e, 0.05)
        assert out.converged and out.correction == e


def test_bp_toric_single_error_table():
    """Convergence regression for all 18 single errors on the L=3 toric code at p=0.05."""
    code = toric(3)
    table = []
    for side in "XZ":
        h = code.checks(side)
        for q in range(code.n):
            e = _error(code.n, [q])
            out = bp_decode(h, h @ e, 0.05)
            table.append((out.converged, out.iterations, _recovered(code, side, e, out.correction)))
    assert all(c for c, _, _ in table)
    assert all(r for _, _, r in table)
    assert {it for _, it, _ in table} == {1}


@pytest.mark.parametrize("p", [0.0, 0.5, -0.1, 0.7])
def test_bp_rejects_bad_probability(p):
    with pytest.raises(ValueError):
        bp_decode(hamming(), F2Vector.zeros(3), p)


def test_bp_not_converged_reports_residual():
    code = surface(3)
    h = code.checks("Z")
    e = _error(code.n, [0, 4, 8])
    out = bp_decode(h, h @ e, 0.2, max_iter=1)
    assert out.converged == out.residual.is_zero()
    assert out.residual == (h @ e) ^ (h @ out.correction)


@settings(max_examples=80, deadline=None)
@given(f2_matrices(5, 8, min_rows=1), st.data())
def test_bp_row_permutation_invariance(h, data):
    e = F2Vector(h.ncols, data.draw(st.integers(0, (1 << h.ncols) - 1)))
    perm = data.draw(st.permutations(range(h.nrows)))
    syn = h @ e
    a = bp_decode(h, syn, 0.1, max_iter=20)
    hp = h.select_rows(perm)
    b = bp_decode(hp, hp @ e, 0.1, max_iter=20)
    assert (a.correction, a.converged, a.iterations) == (b.correction, b.converged, b.iterations)
    if a.converged:
        assert h @ a.correction == syn


# -- small-set-flip ---------------------------------------------------------------------


def test_ssf_zero_syndrome():
    code = toric(3)
    out = small_set_flip(code, "X", F2Vector.zeros(9))
    assert out.correction.is_zero() and out.converged and out.trace == (0,)


@pytest.mark.parametrize("side", ["X", "Z"])
def test_ssf_toric_single_errors(side):
    code = toric(3)
    h = code.checks(side)
    for q in range(code.n):
        e = _error(code.n, [q])
        out = small_set_flip(code, side, h @ e)
        assert out.converged
        assert _recovered(code, side, e, out.correction)


def test_ssf_stall_regression():
    """Weight-2 error on the L=4 toric code that no single generator subset improves."""
    code = toric(4)
    h = code.checks("X")
    e = _error(code.n, [0, 1])
    out = small_set_flip(code, "X", h @ e)
    assert not out.converged
    assert out.iterations == 0
    assert out.trace == (2,)
    assert out.residual == h @ e


def test_ssf_guard():
    heavy = CssCode(F2Matrix.zeros(1, 17), F2Matrix.from_strings(["1" * 17]))
    with pytest.raises(DecoderGuardError):
        small_set_flip(heavy, "Z", F2Vector.zeros(1))


def _first_flip_oracle(code: CssCode, side: str, syn: np.ndarray) -> tuple[int, ...]:
    """Brute force over every generator subset: max gain, then lowest generator, then smallest tuple."""
    h = oracles.dense(code.checks(side)).astype(int)
    gens = oracles.dense(code.stabilizers(side))
    base = int(syn.sum())
    best = None
    for g, row in enumerate(gens):
        support = list(np.flatnonzero(row))
        for w in range(1, len(support) + 1):
            for subset in itertools.combinations(support, w):
                gain = base - int(((syn + h[:, list(subset)].sum(axis=1)) % 2).sum())
                key = (-gain, g, tuple(subset))
                if gain > 0 and (best is None or key < best):
                    best = key
    return best[2]


@pytest.mark.parametrize("code", [toric(3), surface(3)])
def test_ssf_first_flip_matches_oracle(code):
    for side in "XZ":
        h = code.checks(side)
        for pair in itertools.combinations(range(code.n), 2):
            e = _error(code.n, pair)
            syn = h @ e
            if syn.is_zero():
                continue
            first = small_set_flip(code, side, syn, max_iter=1)
            expected = _first_flip_oracle(code, side, syn.to_array().astype(int))
            assert tuple(first.correction.support()) == tuple(sorted(expected))


@settings(max_examples=80, deadline=None)
@given(f2_matrices(3, 4, min_rows=1), f2_matrices(3, 4, min_rows=1), st.data())
def test_ssf_monotone_and_consistent(h1, h2, data):
    code = hypergraph_product(h1, h2)
    side = data.draw(st.sampled_from("XZ"))
    e = F2Vector(code.n, data.draw(st.integers(0, (1 << code.n) - 1)))
    h = code.checks(side)
    out = small_set_flip(code, side, h @ e)
    assert all(a > b for a, b in zip(out.trace, out.trace[1:]))
    assert out.trace[-1] == out.residual.weight
    if out.converged:
        assert h @ out.correction == h @ e


def test_decode_dispatch():
    code = surface(3)
    h = code.checks("Z")
    syn = h @ _error(13, [4])
    for name in ("lookup", "ssf", "bp"):
        out = decode(code, "Z", syn, name, p=0.05)
        assert out.converged
    with pytest.raises(ValueError):
        decode(code, "Z", syn, "bp")
    with pytest.raises(ValueError):
        decode(code, "Z", syn, "mwpm")


def test_syndrome_length_checked():
    with pytest.raises(ValueError):
        lookup_decode(surface(3), "Z", F2Vector.zeros(5))
    with pytest.raises(ValueError):
        bp_decode(hamming(), F2Vector.zeros(4), 0.1)


def test_outcome_invariant_converged_means_zero_residual(rng):
    code = toric(3)
    for _ in range(50):
        e = F2Vector.from_array(rng.random(code.n) < 0.15)
        for name in ("lookup", "ssf", "bp"):
            out = decode(code, "X", code.checks("X") @ e, name, p=0.1)
            assert out.converged == out.residual.is_zero()
            if out.converged:
                assert code.checks("X") @ out.correction == code.checks("X") @ e
