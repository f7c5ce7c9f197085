"""Minimum distance of CSS codes by exhaustive and weight-limited enumeration.

``dz`` is the minimum weight of a vector in ``ker(hx)`` outside the row space
of ``hz`` (a nontrivial Z-logical); ``dx`` swaps the roles of the matrices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Literal

from ldpc_products._enumerate import min_weight_combination
from ldpc_products.codes import CssCode, NoLogicalQubits, _side
from ldpc_products.f2core import Echelon, F2Vector

EXACT_KERNEL_LIMIT = 28
DEFAULT_BUDGET = 5_000_000


class SearchTooLarge(ValueError):
    """The requested enumeration exceeds its feasibility guard."""


@dataclass(frozen=True)
class DistanceReport:
    side: str
    value: int
    bound: Literal["exact", "lower", "upper"]
    method: Literal["exhaustive", "weight-limited"]
    witness: F2Vector | None = None

    def __str__(self) -> str:
        prefix = {"exact": "", "lower": ">=", "upper": "<="}[self.bound]
        return f"d{self.side.lower()} {prefix}{self.value} ({self.method})"

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "value": self.value,
            "bound": self.bound,
            "method": self.method,
            "witness": None if self.witness is None else str(self.witness),
        }


def _logical_basis(code: CssCode, side: str) -> tuple[list[int], int]:
    """Basis of the kernel of the detecting checks, stabilizers first.

    Returns ``(basis, r)``: the first ``r`` vectors span the stabilizer row
    space; each later vector adds one logical class.
    """
    checks = code.checks(side)
    stabs = code.stabilizers(side)
    span = Echelon.of(stabs)
    basis = span.basis_rows()
    r = len(basis)
    for v in Echelon.of(checks).kernel_of_rows():
        if span.add(v):
            basis.append(v)
    return basis, r


def exact_distance(code: CssCode, side: str, workers: int = 1) -> DistanceReport:
    """Enumerate every kernel vector with a nonzero logical component.

    Refuses with :class:`SearchTooLarge` when the kernel dimension exceeds
    ``EXACT_KERNEL_LIMIT``.
    """
    side = _side(side)
    if code.k == 0:
        raise NoLogicalQubits("code has k = 0: no logical operators")
    basis, r = _logical_basis(code, side)
    if len(basis) > EXACT_KERNEL_LIMIT:
        raise SearchTooLarge(
            f"kernel dimension {len(basis)} exceeds the exhaustive limit {EXACT_KERNEL_LIMIT}"
        )
    weight, _, vec = min_weight_combination(basis, code.n, start=1 << r, workers=workers)
    return DistanceReport(side, weight, "exact", "exhaustive", F2Vector(code.n, vec))


def weight_limited_distance(
    code: CssCode, side: str, wmax: int, budget: int = DEFAULT_BUDGET
) -> DistanceReport:
    """Try every support of size ``1..wmax``.

    Returns the exact distance with a witness when a logical of weight at most
    ``wmax`` exists, else the certificate ``>= wmax + 1``.
    """
    side = _side(side)
    if wmax < 0:
        raise ValueError("wmax must be non-negative")
    if code.k == 0:
        raise NoLogicalQubits("code has k = 0: no logical operators")
    n = code.n
    cost = sum(math.comb(n, w) for w in range(1, wmax + 1))
    if cost > budget:
        raise SearchTooLarge(f"{cost} candidate supports exceed the budget {budget}")
    # column syndromes packed as integers
    cols = [0] * n
    for i, row in enumerate(code.checks(side).int_rows):
        for q in F2Vector(n, row).support():
            cols[q] |= 1 << i
    for w in range(1, wmax + 1):
        for support in itertools.combinations(range(n), w):
            s = 0
            for q in support:
                s ^= cols[q]
            if s:
                continue
            bits = sum(1 << q for q in support)
            if not code.is_stabilizer(side, bits):
                return DistanceReport(side, w, "exact", "weight-limited", F2Vector(n, bits))
    return DistanceReport(side, wmax + 1, "lower", "weight-limited")


def distance(code: CssCode, method: str = "exhaustive", wmax: int | None = None) -> dict[str, DistanceReport]:
    """Both sides; the caller assembles ``d = min(dx, dz)``."""
    out = {}
    for side in ("X", "Z"):
        if method == "exhaustive":
            out[side] = exact_distance(code, side)
        elif method == "weight-limited":
            if wmax is None:
                raise ValueError("weight-limited search needs wmax")
            out[side] = weight_limited_distance(code, side, wmax)
        else:
            raise ValueError(f"unknown method {method!r}")
    return out


def witness_is_valid(code: CssCode, report: DistanceReport) -> bool:
    """Independent re-check: witness is in the checks' kernel, outside the stabilizers, of the reported weight."""
    w = report.witness
    if w is None:
        return False
    in_kernel = (code.checks(report.side) @ w).is_zero()
    outside = not Echelon.of(code.stabilizers(report.side)).contains(w.bits)
    return in_kernel and outside and w.weight == report.value
