"""Lifted products over the circulant algebra ``F2[x]/(x^ell - 1)``."""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass

from ldpc_products.codes import CssCode
from ldpc_products.f2core import F2Matrix

_TERM = re.compile(r"^(?:(1)|x(?:\^(\d+))?)$")


def parse_poly(text: str | Sequence[int] | int, ell: int) -> int:
    """Coefficient mask of a polynomial given as ``"1+x+x^3"``, an exponent list, or ``0``.

    Exponents are reduced modulo ``ell``; repeated terms cancel.
    """
    if isinstance(text, int):
        if text not in (0, 1):
            raise ValueError(f"integer polynomial must be 0 or 1, got {text}")
        return text
    if not isinstance(text, str):
        mask = 0
        for e in text:
            mask ^= 1 << (int(e) % ell)
        return mask
    text = text.replace(" ", "")
    if text == "0":
        return 0
    mask = 0
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        e = 0 if m.group(1) else int(m.group(2) or 1)
        mask ^= 1 << (e % ell)
    return mask


def format_poly(mask: int) -> str:
    terms = []
    e = 0
    while mask:
        if mask & 1:
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        mask >>= 1
        e += 1
    return "+".join(terms) or "0"


def _mul(a: int, b: int, ell: int) -> int:
    out = 0
    full = (1 << ell) - 1
    e = 0
    while a:
        if a & 1:
            out ^= ((b << e) | (b >> (ell - e))) & full
        a >>= 1
        e += 1
    return out


def _conj(a: int, ell: int) -> int:
    """``a(x^{-1})``: exponent ``e`` goes to ``-e mod ell``."""
    out = 0
    for e in range(ell):
        if (a >> e) & 1:
            out |= 1 << ((-e) % ell)
    return out


@dataclass(frozen=True)
class PolyMatrix:
    """Matrix over ``F2[x]/(x^ell - 1)``; entry masks have bit ``e`` for ``x^e``.

    ``width`` records the column count of a matrix with no rows.
    """

    ell: int
    entries: tuple[tuple[int, ...], ...]
    width: int | None = None

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError("ell must be at least 1")
        widths = {len(r) for r in self.entries}
        if len(widths) > 1:
            raise ValueError("ragged polynomial matrix")
        if widths:
            (w,) = widths
            if self.width is not None and self.width != w:
                raise ValueError(f"width {self.width} disagrees with {w} columns")
            object.__setattr__(self, "width", w)
        elif self.width is None:
            object.__setattr__(self, "width", 0)
        for row in self.entries:
            for a in row:
                if a < 0 or a >> self.ell:
                    raise ValueError(f"coefficient mask {a} longer than ell={self.ell}")

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str | Sequence[int] | int]], ell: int) -> PolyMatrix:
        return cls(ell, tuple(tuple(parse_poly(a, ell) for a in row) for row in rows))

    @classmethod
    def from_f2(cls, m: F2Matrix) -> PolyMatrix:
        """Constant polynomial matrix with ``ell = 1``."""
        return cls(1, tuple(tuple(int(b) for b in row) for row in m.to_array()), m.ncols)

    @classmethod
    def identity(cls, n: int, ell: int) -> PolyMatrix:
        return cls(ell, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return self.width

    def conj_transpose(self) -> PolyMatrix:
        return PolyMatrix(
            self.ell,
            tuple(tuple(_conj(self.entries[i][j], self.ell) for i in range(self.nrows)) for j in range(self.ncols)),
            self.nrows,
        )

    def kron(self, other: PolyMatrix) -> PolyMatrix:
        if other.ell != self.ell:
            raise ValueError(f"ell mismatch: {self.ell} vs {other.ell}")
        rows = []
        for arow in self.entries:
            for brow in other.entries:
                rows.append(tuple(_mul(a, b, self.ell) for a in arow for b in brow))
        return PolyMatrix(self.ell, tuple(rows), self.ncols * other.ncols)

    def lift(self) -> F2Matrix:
        """Binary matrix with each entry replaced by its ``ell x ell`` circulant.

        ``x`` lifts to the shift sending basis vector ``i`` to ``i + 1``, so
        block entry ``(r, c)`` equals the coefficient of ``x^{(r - c) mod ell}``.
        """
        ell = self.ell
        out = []
        for row in self.entries:
            for r in range(ell):
                acc = 0
                for j, a in enumerate(row):
                    for e in range(ell):
                        if (a >> e) & 1:
                            acc |= 1 << (j * ell + (r - e) % ell)
                out.append(acc)
        return F2Matrix(out, self.ncols * ell)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(format_poly(a) for a in row) for row in self.entries) + "]"


def _hstack(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.nrows != b.nrows:
        raise ValueError("row count mismatch")
    return PolyMatrix(a.ell, tuple(ra + rb for ra, rb in zip(a.entries, b.entries)), a.ncols + b.ncols)


def lifted_product(a: PolyMatrix, b: PolyMatrix) -> CssCode:
    """Hypergraph-product layout over the circulant ring.

    ``hx = [A (x) I_{nB} | I_{rA} (x) B*]`` and ``hz = [I_{nA} (x) B | A* (x) I_{rB}]``
    where ``*`` is the conjugate transpose; with ``ell = 1`` this is exactly
    :func:`~ldpc_products.products.tensor.hypergraph_product`.
    """
    if a.ell != b.ell:
        raise ValueError(f"ell mismatch: {a.ell} vs {b.ell}")
    ell = a.ell
    ra, na = a.nrows, a.ncols
    rb, nb = b.nrows, b.ncols
    hx = _hstack(a.kron(PolyMatrix.identity(nb, ell)), PolyMatrix.identity(ra, ell).kron(b.conj_transpose()))
    hz = _hstack(PolyMatrix.identity(na, ell).kron(b), a.conj_transpose().kron(PolyMatrix.identity(rb, ell)))
    return CssCode(hx.lift(), hz.lift())
