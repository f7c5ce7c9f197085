"""Dense bit-packed linear algebra over GF(2).

Rows are stored as Python integers: bit ``j`` of a row is the entry in column
``j``.  Row operations are therefore single word-parallel XORs, and Hamming
weights are ``int.bit_count`` calls.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

import numpy as np
import numpy.typing as npt


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def _pack(bits: npt.ArrayLike) -> int:
    arr = np.asarray(bits, dtype=np.uint8).ravel() & 1
    if arr.size == 0:
        return 0
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def _unpack(value: int, length: int) -> np.ndarray:
    if length == 0:
        return np.zeros(0, dtype=np.uint8)
    raw = value.to_bytes((length + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:length]


class F2Vector:
    """Binary vector of fixed length."""

    __slots__ = ("_len", "_bits")

    def __init__(self, length: int, bits: int = 0) -> None:
        if length < 0:
            raise ValueError("length must be non-negative")
        if bits < 0 or bits >> length:
            raise ValueError(f"bits do not fit in a vector of length {length}")
        self._len = length
        self._bits = bits

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> F2Vector:
        arr = np.asarray(values).ravel()
        return cls(arr.size, _pack(arr))

    @classmethod
    def from_string(cls, text: str) -> F2Vector:
        text = text.strip()
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> F2Vector:
        bits = 0
        for i in support:
            if not 0 <= i < length:
                raise IndexError(i)
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def zeros(cls, length: int) -> F2Vector:
        return cls(length, 0)

    @property
    def bits(self) -> int:
        """Packed integer form; bit ``i`` is entry ``i``."""
        return self._bits

    @property
    def weight(self) -> int:
        return self._bits.bit_count()

    def support(self) -> list[int]:
        out = []
        b = self._bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def is_zero(self) -> bool:
        return self._bits == 0

    def to_array(self) -> np.ndarray:
        return _unpack(self._bits, self._len)

    def __len__(self) -> int:
        return self._len

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self._len
        if not 0 <= i < self._len:
            raise IndexError(i)
        return (self._bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return (int(b) for b in self.to_array())

    def __xor__(self, other: F2Vector) -> F2Vector:
        if len(other) != self._len:
            raise DimensionError(f"length {self._len} vs {len(other)}")
        return F2Vector(self._len, self._bits ^ other._bits)

    __add__ = __xor__

    def dot(self, other: F2Vector) -> int:
        if len(other) != self._len:
            raise DimensionError(f"length {self._len} vs {len(other)}")
        return (self._bits & other._bits).bit_count() & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Vector):
            return NotImplemented
        return self._len == other._len and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._len, self._bits))

    def __str__(self) -> str:
        return "".join("1" if (self._bits >> i) & 1 else "0" for i in range(self._len))

    def __repr__(self) -> str:
        return f"F2Vector('{self}')"


class F2Matrix:
    """Immutable dense binary matrix with bit-packed rows."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[int], ncols: int) -> None:
        rows = tuple(rows)
        if ncols < 0:
            raise ValueError("ncols must be non-negative")
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError(f"row does not fit in {ncols} columns")
        self._rows = rows
        self._ncols = ncols

    # -- construction ---------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> F2Matrix:
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls((1 << i for i in range(n)), n)

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> F2Matrix:
        arr = np.asarray(values)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2D array, got shape {arr.shape}")
        arr = arr.astype(np.uint8) & 1
        nrows, ncols = arr.shape
        if ncols == 0:
            return cls((0,) * nrows, 0)
        packed = np.packbits(arr, axis=1, bitorder="little")
        return cls((int.from_bytes(row.tobytes(), "little") for row in packed), ncols)

    @classmethod
    def from_strings(cls, rows: Sequence[str], ncols: int | None = None) -> F2Matrix:
        """Build from 0/1 strings such as ``["110", "011"]``."""
        rows = [r.strip() for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionError("column count needed for a matrix without rows")
            ncols = len(rows[0])
        packed = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionError(f"row {r!r} does not have {ncols} entries")
            packed.append(F2Vector.from_string(r).bits)
        return cls(packed, ncols)

    @classmethod
    def from_vectors(cls, vectors: Sequence[F2Vector], ncols: int | None = None) -> F2Matrix:
        if ncols is None:
            if not vectors:
                raise DimensionError("column count needed for an empty vector list")
            ncols = len(vectors[0])
        for v in vectors:
            if len(v) != ncols:
                raise DimensionError(f"vector of length {len(v)} in a {ncols}-column matrix")
        return cls((v.bits for v in vectors), ncols)

    @classmethod
    def from_text(cls, text: str) -> F2Matrix:
        """Parse the matrix literal format: ``"rows cols"`` then one 0/1 string per row."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix literal")
        try:
            nrows, ncols = (int(t) for t in lines[0].split())
        except ValueError as exc:
            raise ValueError(f"bad matrix header {lines[0]!r}") from exc
        body = lines[1:]
        if len(body) != nrows:
            raise DimensionError(f"header declares {nrows} rows, found {len(body)}")
        return cls.from_strings(body, ncols)

    def to_text(self) -> str:
        return "\n".join([f"{self.nrows} {self.ncols}", *self.to_strings()]) + "\n"

    def to_strings(self) -> list[str]:
        return [str(F2Vector(self._ncols, r)) for r in self._rows]

    # -- basic accessors ------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), self._ncols

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def int_rows(self) -> tuple[int, ...]:
        return self._rows

    def row(self, i: int) -> F2Vector:
        return F2Vector(self._ncols, self._rows[i])

    def rows(self) -> list[F2Vector]:
        return [F2Vector(self._ncols, r) for r in self._rows]

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self._rows):
            out[i] = _unpack(r, self._ncols)
        return out

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def col_weights(self) -> list[int]:
        if not self._rows:
            return [0] * self._ncols
        return [int(w) for w in self.to_array().sum(axis=0)]

    @property
    def nnz(self) -> int:
        return sum(self.row_weights())

    def is_zero(self) -> bool:
        return not any(self._rows)

    # -- algebra --------------------------------------------------------

    @property
    def T(self) -> F2Matrix:
        return F2Matrix.from_array(self.to_array().T)

    def transpose(self) -> F2Matrix:
        return self.T

    def __matmul__(self, other: F2Matrix | F2Vector) -> F2Matrix | F2Vector:
        if isinstance(other, F2Vector):
            if len(other) != self._ncols:
                raise DimensionError(f"{self.shape} @ vector of length {len(other)}")
            v = other.bits
            bits = 0
            for i, r in enumerate(self._rows):
                if (r & v).bit_count() & 1:
                    bits |= 1 << i
            return F2Vector(self.nrows, bits)
        if not isinstance(other, F2Matrix):
            return NotImplemented
        if other.nrows != self._ncols:
            raise DimensionError(f"{self.shape} @ {other.shape}")
        orows = other._rows
        out = []
        for r in self._rows:
            acc = 0
            while r:
                low = r & -r
                acc ^= orows[low.bit_length() - 1]
                r ^= low
            out.append(acc)
        return F2Matrix(out, other.ncols)

    def __xor__(self, other: F2Matrix) -> F2Matrix:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionError(f"{self.shape} + {other.shape}")
        return F2Matrix((a ^ b for a, b in zip(self._rows, other._rows)), self._ncols)

    __add__ = __xor__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols}, {self.to_strings()})"

    def select_rows(self, indices: Iterable[int]) -> F2Matrix:
        return F2Matrix((self._rows[i] for i in indices), self._ncols)

    def select_cols(self, indices: Sequence[int]) -> F2Matrix:
        return F2Matrix.from_array(self.to_array()[:, list(indices)].reshape(self.nrows, len(indices)))


def hstack(*blocks: F2Matrix) -> F2Matrix:
    if not blocks:
        raise ValueError("nothing to stack")
    nrows = blocks[0].nrows
    if any(b.nrows != nrows for b in blocks):
        raise DimensionError(f"hstack of {[b.shape for b in blocks]}")
    rows = [0] * nrows
    offset = 0
    for b in blocks:
        for i, r in enumerate(b.int_rows):
            rows[i] |= r << offset
        offset += b.ncols
    return F2Matrix(rows, offset)


def vstack(*blocks: F2Matrix) -> F2Matrix:
    if not blocks:
        raise ValueError("nothing to stack")
    ncols = blocks[0].ncols
    if any(b.ncols != ncols for b in blocks):
        raise DimensionError(f"vstack of {[b.shape for b in blocks]}")
    return F2Matrix((r for b in blocks for r in b.int_rows), ncols)


def block_matrix(blocks: Sequence[Sequence[F2Matrix]]) -> F2Matrix:
    return vstack(*(hstack(*row) for row in blocks))


def kron(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    """Kronecker product; block ``(i, j)`` of the result is ``a[i, j] * b``."""
    out = np.kron(a.to_array().astype(np.uint8), b.to_array().astype(np.uint8))
    return F2Matrix.from_array(out.reshape(a.nrows * b.nrows, a.ncols * b.ncols))


class Echelon:
    """Reduced row-echelon basis of a row space, grown incrementally.

    Each stored row has a pivot column (its lowest set bit) and is zero in
    every other stored pivot column.  With ``track=True`` every basis row also
    records which inserted vectors it is a combination of, enabling
    :meth:`solve`.
    """

    def __init__(self, ncols: int, rows: Iterable[int] = (), *, track: bool = False) -> None:
        self.ncols = ncols
        self._basis: dict[int, int] = {}
        self._combo: dict[int, int] | None = {} if track else None
        self._count = 0
        for r in rows:
            self.add(r)

    @classmethod
    def of(cls, m: F2Matrix, *, track: bool = False) -> Echelon:
        return cls(m.ncols, m.int_rows, track=track)

    @property
    def rank(self) -> int:
        return len(self._basis)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._basis)

    def basis_rows(self) -> list[int]:
        return [self._basis[p] for p in sorted(self._basis)]

    def _reduce(self, v: int) -> tuple[int, int]:
        combo = 0
        rest = v
        while rest:
            low = rest & -rest
            p = low.bit_length() - 1
            if p in self._basis:
                v ^= self._basis[p]
                if self._combo is not None:
                    combo ^= self._combo[p]
                rest = v & ~((low << 1) - 1)
            else:
                rest ^= low
        return v, combo

    def reduce(self, v: int) -> int:
        """Remainder of ``v`` modulo the row space."""
        return self._reduce(v)[0]

    def contains(self, v: int) -> bool:
        return self._reduce(v)[0] == 0

    def add(self, v: int) -> bool:
        """Insert a vector; return True if it enlarged the span."""
        index = self._count
        self._count += 1
        v, combo = self._reduce(v)
        if self._combo is not None:
            combo ^= 1 << index
        if v == 0:
            return False
        p = (v & -v).bit_length() - 1
        for q, row in self._basis.items():
            if (row >> p) & 1:
                self._basis[q] = row ^ v
                if self._combo is not None:
                    self._combo[q] ^= combo
        self._basis[p] = v
        if self._combo is not None:
            self._combo[p] = combo
        return True

    def solve(self, v: int) -> int | None:
        """Bitmask of inserted vectors summing to ``v``, or None if ``v`` is outside the span."""
        if self._combo is None:
            raise RuntimeError("solve needs track=True")
        rem, combo = self._reduce(v)
        return None if rem else combo

    def kernel_of_rows(self) -> list[int]:
        """Null space of the matrix whose rows span this echelon form."""
        out = []
        for f in range(self.ncols):
            if f in self._basis:
                continue
            v = 1 << f
            for p, row in self._basis.items():
                if (row >> f) & 1:
                    v |= 1 << p
            out.append(v)
        return out


def rank(m: F2Matrix) -> int:
    return Echelon.of(m).rank


def kernel_basis(m: F2Matrix) -> list[F2Vector]:
    """Basis of ``{v : m @ v = 0}``, one vector per free column in ascending order."""
    return [F2Vector(m.ncols, v) for v in Echelon.of(m).kernel_of_rows()]


def kernel_matrix(m: F2Matrix) -> F2Matrix:
    return F2Matrix(Echelon.of(m).kernel_of_rows(), m.ncols)


def in_rowspace(v: F2Vector, m: F2Matrix) -> bool:
    if len(v) != m.ncols:
        raise DimensionError(f"vector of length {len(v)} against {m.ncols} columns")
    return Echelon.of(m).contains(v.bits)


def row_basis(m: F2Matrix) -> F2Matrix:
    """Independent rows spanning the row space, in reduced echelon form."""
    return F2Matrix(Echelon.of(m).basis_rows(), m.ncols)


def circulant(first_column: Sequence[int] | str) -> F2Matrix:
    """Circulant matrix whose entry ``(r, c)`` is ``coeffs[(r - c) mod len]``."""
    if isinstance(first_column, str):
        coeffs = [int(ch) for ch in first_column]
    else:
        coeffs = [int(c) & 1 for c in first_column]
    ell = len(coeffs)
    arr = np.zeros((ell, ell), dtype=np.uint8)
    for r in range(ell):
        for c in range(ell):
            arr[r, c] = coeffs[(r - c) % ell]
    return F2Matrix.from_array(arr)
