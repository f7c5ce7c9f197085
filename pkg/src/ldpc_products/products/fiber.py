"""Fiber bundle codes: tensor products whose base differential is twisted by
cyclic shifts of the fiber."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from ldpc_products.codes import CssCode
from ldpc_products.complexes import ChainComplex, to_css
from ldpc_products.f2core import F2Matrix, kron
from ldpc_products.products.tensor import assemble_total


class TwistError(ValueError):
    """Twist table inconsistent with the base or fiber."""


def shift_matrix(ell: int, s: int = 1) -> F2Matrix:
    """Permutation sending basis vector ``i`` to ``i + s (mod ell)``."""
    return F2Matrix((1 << ((r - s) % ell) for r in range(ell)), ell)


@dataclass(frozen=True)
class TwistSpec:
    """Cyclic fiber shifts keyed by incident ``(base_check, base_bit)`` pairs.

    Incident pairs absent from ``shifts`` carry the identity (shift 0).
    """

    shifts: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def shift(self, check: int, bit: int) -> int:
        return self.shifts.get((check, bit), 0)

    def check_against(self, base: F2Matrix, fiber_len: int) -> None:
        for (check, bit), s in self.shifts.items():
            if not (0 <= check < base.nrows and 0 <= bit < base.ncols):
                raise TwistError(f"twist entry ({check}, {bit}) outside the base matrix")
            if not (base.int_rows[check] >> bit) & 1:
                raise TwistError(f"base check {check} is not incident to bit {bit}")
            if not 0 <= s < fiber_len:
                raise TwistError(f"shift {s} outside [0, {fiber_len})")


def _fiber_length(fiber: ChainComplex) -> int:
    h = fiber.diff(1)
    if h.nrows != h.ncols:
        raise TwistError("fiber must be square so cyclic shifts act on both spaces")
    ell = h.ncols
    p = shift_matrix(ell)
    if p @ h != h @ p:
        raise TwistError("fiber differential does not commute with the cyclic shift")
    return ell


def twisted_differential(base: F2Matrix, twist: TwistSpec, ell: int) -> F2Matrix:
    """``sum_{(i, j) incident} E_ij (x) P^{shift(i, j)}``."""
    rows = []
    for i, brow in enumerate(base.int_rows):
        for r in range(ell):
            acc = 0
            for j in range(base.ncols):
                if (brow >> j) & 1:
                    s = twist.shift(i, j)
                    acc |= 1 << (j * ell + (r - s) % ell)
            rows.append(acc)
    return F2Matrix(rows, base.ncols * ell)


def fiber_bundle_complex(base: ChainComplex, fiber: ChainComplex, twist: TwistSpec) -> ChainComplex:
    """Complex with the spaces of ``tensor(base, fiber)`` and twisted base maps."""
    if base.top != 1 or fiber.top != 1:
        raise ValueError("base and fiber must be two-term complexes")
    ell = _fiber_length(fiber)
    twist.check_against(base.diff(1), ell)
    twisted = twisted_differential(base.diff(1), twist, ell)
    return assemble_total(
        base,
        fiber,
        lambda p, q: twisted,
        lambda p, q: kron(F2Matrix.identity(base.dim(p)), fiber.diff(q)),
    )


def fiber_bundle(base: ChainComplex, fiber: ChainComplex, twist: TwistSpec) -> CssCode:
    """CSS code on ``B_1 F_0 (+) B_0 F_1`` of the twisted product."""
    return to_css(fiber_bundle_complex(base, fiber, twist), 1)
