"""Vectorised minimum-weight search over the span of a list of basis vectors."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

import numpy as np

_MASK64 = (1 << 64) - 1
LOW_BITS = 16


def _words(v: int, nwords: int) -> np.ndarray:
    return np.array([(v >> (64 * w)) & _MASK64 for w in range(nwords)], dtype=np.uint64)


def combination(basis: Sequence[int], index: int) -> int:
    """XOR of the basis vectors selected by the bits of ``index``."""
    v = 0
    j = 0
    while index:
        if index & 1:
            v ^= basis[j]
        index >>= 1
        j += 1
    return v


def _scan(basis: Sequence[int], ncols: int, start: int, steps: range) -> tuple[int, int] | None:
    """Best ``(weight, index)`` over the high-part Gray-code steps in ``steps``.

    Combination index ``i`` selects basis vector ``j`` iff bit ``j`` of ``i``
    is set.  The low ``LOW_BITS`` coordinates are tabulated once; the high
    coordinates are walked in Gray-code order so each step is one XOR.
    """
    m = len(basis)
    nwords = max(1, (ncols + 63) // 64)
    vecs = np.stack([_words(b, nwords) for b in basis]) if m else np.zeros((0, nwords), np.uint64)
    low = min(m, LOW_BITS)
    table = np.zeros((1 << low, nwords), dtype=np.uint64)
    for j in range(low):
        table[1 << j : 1 << (j + 1)] = table[: 1 << j] ^ vecs[j]

    first = steps.start
    gray = first ^ (first >> 1)
    high = np.zeros(nwords, dtype=np.uint64)
    for j in range(m - low):
        if (gray >> j) & 1:
            high ^= vecs[low + j]

    best: tuple[int, int] | None = None
    sentinel = ncols + 1
    for step in steps:
        if step != first:
            new_gray = step ^ (step >> 1)
            flipped = (new_gray ^ gray).bit_length() - 1
            high ^= vecs[low + flipped]
            gray = new_gray
        base = gray << low
        if base + (1 << low) <= start:
            continue
        weights = np.bitwise_count(table ^ high).sum(axis=1, dtype=np.int64)
        if base < start:
            weights[: start - base] = sentinel
        i = int(np.argmin(weights))
        cand = (int(weights[i]), base + i)
        if cand[0] < sentinel and (best is None or cand < best):
            best = cand
    return best


def min_weight_combination(
    basis: Sequence[int], ncols: int, start: int = 1, workers: int = 1
) -> tuple[int, int, int] | None:
    """Minimum-weight combination among indices ``>= start``.

    Returns ``(weight, index, vector)``; ties go to the smallest index, so the
    result does not depend on how the search is partitioned.  Returns None when
    no index qualifies.
    """
    m = len(basis)
    if start >= (1 << m):
        return None
    nhigh = 1 << max(0, m - LOW_BITS)
    if workers <= 1 or nhigh < 2 * workers:
        best = _scan(basis, ncols, start, range(nhigh))
    else:
        bounds = np.linspace(0, nhigh, workers + 1).astype(int)
        chunks = [range(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan, *zip(*[(list(basis), ncols, start, c) for c in chunks]))
            found = [p for p in parts if p is not None]
        best = min(found) if found else None
    if best is None:
        return None
    weight, index = best
    return weight, index, combination(basis, index)
