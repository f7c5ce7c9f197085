"""Syndrome decoders that correct one error type at a time."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ldpc_products.codes import CssCode, _side
from ldpc_products.f2core import DimensionError, F2Matrix, F2Vector

LOOKUP_MAX_QUBITS = 25
SSF_MAX_WEIGHT = 16
BP_CLAMP = 30.0
DEFAULT_BP_ITERATIONS = 50
DECODERS = ("lookup", "bp", "ssf")


class DecoderGuardError(ValueError):
    """Input exceeds a decoder's feasibility guard."""


@dataclass(frozen=True)
class DecodeOutcome:
    """``residual`` is ``syndrome + H @ correction``; ``trace`` lists syndrome weights (small-set-flip only)."""

    correction: F2Vector
    converged: bool
    iterations: int
    residual: F2Vector
    trace: tuple[int, ...] = ()


def _column_syndromes(h: F2Matrix) -> list[int]:
    cols = [0] * h.ncols
    for i, row in enumerate(h.int_rows):
        q = 0
        while row:
            if row & 1:
                cols[q] |= 1 << i
            row >>= 1
            q += 1
    return cols


def syndrome_of(h: F2Matrix, error: F2Vector) -> F2Vector:
    return h @ error


def _check_syndrome(h: F2Matrix, syn: F2Vector) -> None:
    if len(syn) != h.nrows:
        raise DimensionError(f"syndrome has length {len(syn)}, matrix has {h.nrows} checks")


def _outcome(h: F2Matrix, syn: F2Vector, correction: int, iterations: int, trace: tuple[int, ...] = ()) -> DecodeOutcome:
    corr = F2Vector(h.ncols, correction)
    residual = syn ^ (h @ corr)
    return DecodeOutcome(corr, residual.is_zero(), iterations, residual, trace)


# -- lookup ---------------------------------------------------------------


@lru_cache(maxsize=64)
def _lookup_table(h: F2Matrix) -> dict[int, int]:
    """Minimum-weight error for every reachable syndrome, by breadth-first search.

    Levels are explored by weight with qubits in ascending order, so the
    first error found for a syndrome is the lexicographically earliest of
    minimum weight in discovery order.
    """
    cols = _column_syndromes(h)
    table = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            e = table[s]
            for q, col in enumerate(cols):
                if (e >> q) & 1:
                    continue
                t = s ^ col
                if t not in table:
                    table[t] = e | (1 << q)
                    nxt.append(t)
        frontier = nxt
    return table


def lookup_decode(code: CssCode, side: str, syn: F2Vector) -> DecodeOutcome:
    """Minimum-weight correction for errors of type ``side``.

    Refuses codes with more than ``LOOKUP_MAX_QUBITS`` qubits.
    """
    h = code.checks(_side(side))
    _check_syndrome(h, syn)
    if code.n > LOOKUP_MAX_QUBITS:
        raise DecoderGuardError(f"lookup decoding needs n <= {LOOKUP_MAX_QUBITS}, got {code.n}")
    correction = _lookup_table(h).get(syn.bits, 0)
    return _outcome(h, syn, correction, 0)


# -- belief propagation ------------------------------------------------------


def bp_decode(h: F2Matrix, syn: F2Vector, p: float, max_iter: int = DEFAULT_BP_ITERATIONS) -> DecodeOutcome:
    """Sum-product decoding with a flooding schedule in the log-likelihood domain.

    Messages are clamped to ``+-BP_CLAMP``; incoming messages at a bit are
    summed in sorted order so the result does not depend on the row order.
    """
    if not 0 < p < 0.5:
        raise ValueError(f"p must lie in (0, 0.5), got {p}")
    _check_syndrome(h, syn)
    n = h.ncols
    if syn.is_zero():
        return _outcome(h, syn, 0, 0)
    dense = h.to_array()
    checks, bits = np.nonzero(dense)  # grouped by check, bits ascending
    s = syn.to_array().astype(bool)
    prior = np.log((1 - p) / p)
    to_check = np.full(checks.size, prior)
    check_starts = np.flatnonzero(np.r_[True, checks[1:] != checks[:-1]]) if checks.size else np.zeros(0, int)
    check_ids = checks[check_starts]
    by_bit = np.argsort(bits, kind="stable")
    bit_sorted = bits[by_bit]
    correction = np.zeros(n, dtype=np.uint8)
    for it in range(1, max_iter + 1):
        t = np.tanh(to_check / 2)
        neg = t < 0
        loga = np.log(np.maximum(np.abs(t), 1e-300))
        total = np.zeros(h.nrows)
        total[check_ids] = np.add.reduceat(loga, check_starts)
        parity = np.zeros(h.nrows, dtype=np.int64)
        parity[check_ids] = np.add.reduceat(neg.astype(np.int64), check_starts)
        mag = np.exp(np.minimum(total[checks] - loga, 0.0))
        mag = np.minimum(mag, 1 - 1e-15)
        sign = np.where((parity[checks] - neg) % 2 ^ s[checks], -1.0, 1.0)
        to_bit = np.clip(sign * 2 * np.arctanh(mag), -BP_CLAMP, BP_CLAMP)

        order = np.lexsort((to_bit[by_bit], bit_sorted))
        edges = by_bit[order]
        incoming = np.zeros(n)
        if edges.size:
            starts = np.flatnonzero(np.r_[True, bits[edges][1:] != bits[edges][:-1]])
            incoming[bits[edges][starts]] = np.add.reduceat(to_bit[edges], starts)
        posterior = prior + incoming
        to_check = np.clip(posterior[bits] - to_bit, -BP_CLAMP, BP_CLAMP)

        correction = (posterior < 0).astype(np.uint8)
        if np.array_equal((dense.astype(np.int64) @ correction) % 2 == 1, s):
            return _outcome(h, syn, F2Vector.from_array(correction).bits, it)
    return _outcome(h, syn, F2Vector.from_array(correction).bits, max_iter)


# -- small-set-flip -------------------------------------------------------------


def _best_flip(support: list[int], cols: list[int], syn: int) -> tuple[int, tuple[int, ...]]:
    """Largest syndrome-weight reduction over nonempty subsets of ``support``, lexicographically first on ties."""
    w = len(support)
    sub = [0] * (1 << w)
    for i, q in enumerate(support):
        step = 1 << i
        for m in range(step):
            sub[m | step] = sub[m] ^ cols[q]
    base = syn.bit_count()
    best, best_subset = 0, ()
    for m in range(1, 1 << w):
        gain = base - (syn ^ sub[m]).bit_count()
        if gain < best or gain <= 0:
            continue
        subset = tuple(support[i] for i in range(w) if (m >> i) & 1)
        if gain > best or subset < best_subset:
            best, best_subset = gain, subset
    return best, best_subset


def small_set_flip(code: CssCode, side: str, syn: F2Vector, max_iter: int | None = None) -> DecodeOutcome:
    """Greedy flips inside supports of stabilizer generators matching the error type.

    Each round takes the flip with the largest strictly positive drop in
    syndrome weight (lowest generator index, then lexicographically smallest
    subset, on ties) and stops once no flip helps.
    """
    side = _side(side)
    h = code.checks(side)
    _check_syndrome(h, syn)
    gens = code.stabilizers(side)
    supports = [F2Vector(code.n, row).support() for row in gens.int_rows]
    heavy = max((len(s) for s in supports), default=0)
    if heavy > SSF_MAX_WEIGHT:
        raise DecoderGuardError(f"generator weight {heavy} exceeds the small-set-flip limit {SSF_MAX_WEIGHT}")
    cols = _column_syndromes(h)
    s = syn.bits
    correction = 0
    trace = [s.bit_count()]
    iterations = 0
    while s and (max_iter is None or iterations < max_iter):
        best, flip = 0, ()
        for support in supports:
            gain, subset = _best_flip(support, cols, s)
            if gain > best:
                best, flip = gain, subset
        if best <= 0:
            break
        for q in flip:
            correction ^= 1 << q
            s ^= cols[q]
        iterations += 1
        trace.append(s.bit_count())
    return _outcome(h, syn, correction, iterations, tuple(trace))


# -- dispatch -------------------------------------------------------------------


def decode(code: CssCode, side: str, syn: F2Vector, decoder: str, p: float | None = None) -> DecodeOutcome:
    """Run ``decoder`` (``lookup``, ``bp`` or ``ssf``) on errors of type ``side``."""
    if decoder == "lookup":
        return lookup_decode(code, side, syn)
    if decoder == "ssf":
        return small_set_flip(code, side, syn)
    if decoder == "bp":
        if p is None:
            raise ValueError("belief propagation needs the channel probability p")
        return bp_decode(code.checks(_side(side)), syn, p)
    raise ValueError(f"unknown decoder {decoder!r}; expected one of {', '.join(DECODERS)}")
