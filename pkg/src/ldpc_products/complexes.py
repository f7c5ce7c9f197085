"""Chain complexes over GF(2) and their dictionary with classical and CSS codes.

A complex ``C_n -> ... -> C_1 -> C_0`` is stored by its differentials
``d_i : C_i -> C_{i-1}``.  ``diff(i)`` is total: outside ``1..n`` it returns
the zero map between the (possibly zero-dimensional) neighbouring spaces.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import cached_property
from typing import TYPE_CHECKING

from ldpc_products.f2core import DimensionError, F2Matrix, rank

if TYPE_CHECKING:
    from ldpc_products.codes import CssCode


class ChainComplex:
    """Graded sequence of GF(2) maps.

    Parameters
    ----------
    diffs
        ``[d_1, d_2, ..., d_n]``; ``d_i`` has shape ``(dim C_{i-1}, dim C_i)``.
    dims
        Space dimensions ``(dim C_0, ..., dim C_n)``.  Required only when
        ``diffs`` is empty; otherwise inferred and cross-checked.

    Shapes must chain; the composition-zero condition is *not* enforced here
    so that malformed complexes can be reported by :func:`validate`.
    """

    def __init__(self, diffs: Sequence[F2Matrix], dims: Sequence[int] | None = None) -> None:
        diffs = tuple(diffs)
        if diffs:
            inferred = [diffs[0].nrows] + [d.ncols for d in diffs]
            for i in range(1, len(diffs)):
                if diffs[i].nrows != diffs[i - 1].ncols:
                    raise DimensionError(
                        f"d_{i + 1} has {diffs[i].nrows} rows but d_{i} has {diffs[i - 1].ncols} columns"
                    )
            if dims is not None and list(dims) != inferred:
                raise DimensionError(f"declared dims {list(dims)} but maps imply {inferred}")
            dims = inferred
        elif dims is None or len(dims) != 1:
            raise DimensionError("a complex without maps needs exactly one dimension")
        self._diffs = diffs
        self._dims = tuple(int(d) for d in dims)

    @property
    def top(self) -> int:
        """Highest degree ``n``."""
        return len(self._dims) - 1

    @property
    def dims(self) -> tuple[int, ...]:
        """``(dim C_0, ..., dim C_n)``."""
        return self._dims

    @property
    def diffs(self) -> tuple[F2Matrix, ...]:
        """``(d_1, ..., d_n)``."""
        return self._diffs

    def dim(self, i: int) -> int:
        return self._dims[i] if 0 <= i <= self.top else 0

    def diff(self, i: int) -> F2Matrix:
        if 1 <= i <= self.top:
            return self._diffs[i - 1]
        return F2Matrix.zeros(self.dim(i - 1), self.dim(i))

    @cached_property
    def _ranks(self) -> tuple[int, ...]:
        return tuple(rank(d) for d in self._diffs)

    def diff_rank(self, i: int) -> int:
        return self._ranks[i - 1] if 1 <= i <= self.top else 0

    def homology_dim(self, i: int) -> int:
        """``dim ker d_i - rank d_{i+1}``."""
        if not 0 <= i <= self.top:
            raise IndexError(f"degree {i} outside 0..{self.top}")
        return self._dims[i] - self.diff_rank(i) - self.diff_rank(i + 1)

    def betti(self) -> list[int]:
        return [self.homology_dim(i) for i in range(self.top + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in enumerate(self._dims))

    def dual(self) -> ChainComplex:
        """Transposed complex with degrees mirrored: ``C^*_i = C_{n-i}``."""
        n = self.top
        maps = [self.diff(n - j + 1).T for j in range(1, n + 1)]
        return ChainComplex(maps, dims=[self._dims[n - j] for j in range(n + 1)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self._dims == other._dims and self._diffs == other._diffs

    def __hash__(self) -> int:
        return hash((self._dims, self._diffs))

    def __repr__(self) -> str:
        arrow = " -> ".join(str(d) for d in reversed(self._dims))
        return f"ChainComplex({arrow})"


def first_violation(c: ChainComplex) -> str | None:
    """Describe the first broken complex condition, or return None."""
    for i in range(2, c.top + 1):
        if not (c.diff(i - 1) @ c.diff(i)).is_zero():
            return f"d_{i - 1} d_{i} != 0"
    return None


def validate(c: ChainComplex) -> bool:
    """True iff every composition of consecutive differentials vanishes.

    Shape consistency is already guaranteed by the constructor.
    """
    return first_violation(c) is None


def homology_dim(c: ChainComplex, i: int) -> int:
    return c.homology_dim(i)


def from_classical(h: F2Matrix) -> ChainComplex:
    """Two-term complex ``bits -> checks`` with ``d_1 = h``."""
    return ChainComplex([h])


def cycle_graph(length: int) -> ChainComplex:
    """Edges-to-vertices complex of the cycle graph; edge ``i`` joins vertices ``i`` and ``i+1``."""
    if length < 1:
        raise ValueError("cycle length must be positive")
    rows = [0] * length
    for e in range(length):
        rows[e] ^= 1 << e
        rows[(e + 1) % length] ^= 1 << e
    return ChainComplex([F2Matrix(rows, length)])


def to_css(c: ChainComplex, i: int) -> CssCode:
    """CSS code with qubits in degree ``i``: ``hx = d_i`` and ``hz = d_{i+1}^T``."""
    from ldpc_products.codes import CssCode

    if not 1 <= i <= c.top - 1:
        raise IndexError(f"qubit degree {i} needs 1 <= i <= {c.top - 1}")
    return CssCode(c.diff(i), c.diff(i + 1).T)


def from_css(code: CssCode) -> ChainComplex:
    """Length-three complex ``Z-checks -> qubits -> X-checks``."""
    return ChainComplex([code.hx, code.hz.T])


# -- text serialization ---------------------------------------------------


def dumps(c: ChainComplex) -> str:
    """``degrees n`` header, then the matrix literals of ``d_n, ..., d_1``.

    A complex with no maps is written as ``degrees 0`` followed by ``dim d``.
    """
    parts = [f"degrees {c.top}"]
    if c.top == 0:
        parts.append(f"dim {c.dims[0]}")
    for i in range(c.top, 0, -1):
        parts.append(c.diff(i).to_text().rstrip("\n"))
    return "\n".join(parts) + "\n"


def loads(text: str) -> ChainComplex:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("degrees"):
        raise ValueError("complex literal must start with 'degrees n'")
    n = int(lines[0].split()[1])
    pos = 1
    if n == 0:
        if len(lines) < 2 or not lines[1].startswith("dim"):
            raise ValueError("a degree-0 complex needs a 'dim d' line")
        return ChainComplex([], dims=[int(lines[1].split()[1])])
    maps = []
    for _ in range(n):
        nrows = int(lines[pos].split()[0])
        maps.append(F2Matrix.from_text("\n".join(lines[pos : pos + nrows + 1])))
        pos += nrows + 1
    if pos != len(lines):
        raise ValueError("trailing content after the last matrix")
    return ChainComplex(list(reversed(maps)))
