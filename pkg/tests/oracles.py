"""Independent reference computations on dense 0/1 numpy arrays.

Nothing here touches the bit-packed code paths; tests compare the package
against these slow but obvious implementations.
"""

from __future__ import annotations

import itertools

import numpy as np


def dense(m) -> np.ndarray:
    return np.asarray(m.to_array(), dtype=np.uint8)


def rank(a: np.ndarray) -> int:
    a = np.array(a, dtype=np.uint8) % 2
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        a[[r, p]] = a[[p, r]]
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        a[others] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def all_vectors(n: int) -> np.ndarray:
    """Every length-``n`` binary vector; row ``i`` is ``i`` in little-endian bits."""
    idx = np.arange(1 << n, dtype=np.int64)
    return ((idx[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def span(rows: np.ndarray) -> set[bytes]:
    """All combinations of the rows, as byte strings."""
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.shape[0] == 0:
        return {np.zeros(rows.shape[1], dtype=np.uint8).tobytes()}
    coeffs = all_vectors(rows.shape[0])
    combos = (coeffs.astype(np.int64) @ rows.astype(np.int64)) % 2
    return {v.tobytes() for v in combos.astype(np.uint8)}


def css_k(hx: np.ndarray, hz: np.ndarray) -> int:
    return hx.shape[1] - rank(hx) - rank(hz)


def css_distance(hx: np.ndarray, hz: np.ndarray, side: str) -> int | None:
    """Minimum weight of a side-type logical by scanning all ``2^n`` vectors."""
    checks, stabs = (hx, hz) if side == "Z" else (hz, hx)
    n = hx.shape[1]
    vecs = all_vectors(n)
    ok = ~((vecs.astype(np.int64) @ checks.T.astype(np.int64)) % 2).any(axis=1)
    stab_set = span(stabs)
    best = None
    for v in vecs[ok]:
        if v.tobytes() in stab_set:
            continue
        w = int(v.sum())
        if best is None or w < best:
            best = w
    return best


def homology_dims(diffs: list[np.ndarray], dims: list[int]) -> list[int]:
    """``dims[i] - rank d_i - rank d_{i+1}`` with ``diffs[i-1] = d_i``."""
    ranks = [0] + [rank(d) if d.size else 0 for d in diffs] + [0]
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(len(dims))]


def min_weight_solution(h: np.ndarray, syndrome: np.ndarray) -> int | None:
    n = h.shape[1]
    for w in range(n + 1):
        for support in itertools.combinations(range(n), w):
            if np.array_equal(h[:, list(support)].sum(axis=1) % 2, syndrome % 2):
                return w
    return None


def hgp(h1: np.ndarray, h2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    r1, n1 = h1.shape
    r2, n2 = h2.shape
    hx = np.hstack([np.kron(h1, np.eye(n2, dtype=np.uint8)), np.kron(np.eye(r1, dtype=np.uint8), h2.T)]) % 2
    hz = np.hstack([np.kron(np.eye(n1, dtype=np.uint8), h2), np.kron(h1.T, np.eye(r2, dtype=np.uint8))]) % 2
    return hx.astype(np.uint8), hz.astype(np.uint8)


def classical_distance(h: np.ndarray) -> int | None:
    n = h.shape[1]
    vecs = all_vectors(n)[1:]
    ok = ~((vecs.astype(np.int64) @ h.T.astype(np.int64)) % 2).any(axis=1)
    weights = vecs[ok].sum(axis=1)
    return int(weights.min()) if weights.size else None
