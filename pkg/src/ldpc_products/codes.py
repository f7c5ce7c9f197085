"""CSS codes: validity, parameters, LDPC audit, Tanner graphs and Bravyi-Bacon-Shor codes."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ldpc_products._enumerate import min_weight_combination
from ldpc_products.f2core import DimensionError, F2Matrix, Echelon, rank


class NoLogicalQubits(ValueError):
    """The code encodes nothing, so a distance is undefined."""


@dataclass(frozen=True, eq=True)
class CssCode:
    """Pair of check matrices ``hx`` (X-checks) and ``hz`` (Z-checks) on ``n`` qubits.

    Commutation (``hz @ hx.T == 0``) is not enforced on construction; call
    :func:`validate_css`.  Z-type errors are detected by ``hx`` and X-type
    errors by ``hz``.
    """

    hx: F2Matrix
    hz: F2Matrix
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.hx.ncols != self.hz.ncols:
            raise DimensionError(f"hx has {self.hx.ncols} columns, hz has {self.hz.ncols}")

    @property
    def n(self) -> int:
        return self.hx.ncols

    @cached_property
    def rank_x(self) -> int:
        return rank(self.hx)

    @cached_property
    def rank_z(self) -> int:
        return rank(self.hz)

    @property
    def k(self) -> int:
        return self.n - self.rank_x - self.rank_z

    def checks(self, side: str) -> F2Matrix:
        """Matrix whose syndrome detects errors of type ``side``."""
        return self.hx if _side(side) == "Z" else self.hz

    def stabilizers(self, side: str) -> F2Matrix:
        """Stabilizer generators of the same Pauli type as errors of type ``side``."""
        return self.hz if _side(side) == "Z" else self.hx

    @cached_property
    def _stabilizer_echelon(self) -> dict[str, Echelon]:
        return {"Z": Echelon.of(self.hz), "X": Echelon.of(self.hx)}

    def is_stabilizer(self, side: str, bits: int) -> bool:
        """True iff the ``side``-type Pauli with support ``bits`` lies in the stabilizer group."""
        return self._stabilizer_echelon[_side(side)].contains(bits)

    def swapped(self) -> CssCode:
        return CssCode(self.hz, self.hx, self.name)


def _side(side: str) -> str:
    s = side.upper()
    if s not in ("X", "Z"):
        raise ValueError(f"side must be 'X' or 'Z', got {side!r}")
    return s


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    max_row_weight: int
    max_col_weight: int
    dx: int | None = None
    dz: int | None = None

    @property
    def d(self) -> int | None:
        if self.dx is None or self.dz is None:
            return None
        return min(self.dx, self.dz)


def validate_css(code: CssCode) -> bool:
    return (code.hz @ code.hx.T).is_zero()


def css_violation(code: CssCode) -> str | None:
    """First X-check/Z-check pair with odd overlap, described, or ``None``."""
    prod = code.hz @ code.hx.T
    for j, row in enumerate(prod.int_rows):
        if row:
            i = (row & -row).bit_length() - 1
            return (
                f"hz @ hx.T != 0: Z-check {j} and X-check {i} overlap on an odd number of qubits"
            )
    return None


@dataclass(frozen=True)
class LdpcReport:
    """Row and column weight maxima.

    ``max_col_weight`` is the combined qubit degree: the number of X- and
    Z-checks a qubit participates in together.
    """

    hx_row: int
    hx_col: int
    hz_row: int
    hz_col: int
    max_row_weight: int
    max_col_weight: int

    def as_tuple(self) -> tuple[int, int]:
        return self.max_row_weight, self.max_col_weight


def ldpc_audit(code: CssCode) -> LdpcReport:
    cx = code.hx.col_weights()
    cz = code.hz.col_weights()
    hx_row = max(code.hx.row_weights(), default=0)
    hz_row = max(code.hz.row_weights(), default=0)
    return LdpcReport(
        hx_row=hx_row,
        hx_col=max(cx, default=0),
        hz_row=hz_row,
        hz_col=max(cz, default=0),
        max_row_weight=max(hx_row, hz_row),
        max_col_weight=max((a + b for a, b in zip(cx, cz)), default=0),
    )


def params(code: CssCode) -> CodeParams:
    audit = ldpc_audit(code)
    return CodeParams(
        n=code.n,
        k=code.k,
        max_row_weight=audit.max_row_weight,
        max_col_weight=audit.max_col_weight,
    )


@dataclass(frozen=True)
class TannerGraph:
    """Three-layer incidence graph: X-checks, qubits, Z-checks."""

    n_qubits: int
    n_xchecks: int
    n_zchecks: int
    x_edges: tuple[tuple[int, int], ...]
    z_edges: tuple[tuple[int, int], ...]

    @property
    def n_nodes(self) -> int:
        return self.n_qubits + self.n_xchecks + self.n_zchecks

    @property
    def n_edges(self) -> int:
        return len(self.x_edges) + len(self.z_edges)

    def neighbourhood(self, kind: str, index: int) -> set[int]:
        edges = self.x_edges if kind.upper() == "X" else self.z_edges
        return {q for c, q in edges if c == index}

    def has_even_overlaps(self) -> bool:
        xs = [self.neighbourhood("X", i) for i in range(self.n_xchecks)]
        zs = [self.neighbourhood("Z", j) for j in range(self.n_zchecks)]
        return all(len(a & b) % 2 == 0 for a in xs for b in zs)

    def to_dot(self) -> str:
        lines = ["graph tanner {"]
        lines += [f"  q{i} [shape=circle];" for i in range(self.n_qubits)]
        lines += [f"  x{i} [shape=box];" for i in range(self.n_xchecks)]
        lines += [f"  z{i} [shape=box];" for i in range(self.n_zchecks)]
        lines += [f"  x{c} -- q{q};" for c, q in self.x_edges]
        lines += [f"  z{c} -- q{q};" for c, q in self.z_edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def tanner_export(code: CssCode) -> TannerGraph:
    def edges(m: F2Matrix) -> tuple[tuple[int, int], ...]:
        return tuple((i, q) for i, row in enumerate(m.rows()) for q in row.support())

    return TannerGraph(
        n_qubits=code.n,
        n_xchecks=code.hx.nrows,
        n_zchecks=code.hz.nrows,
        x_edges=edges(code.hx),
        z_edges=edges(code.hz),
    )


# -- Bravyi-Bacon-Shor codes ------------------------------------------------


@dataclass(frozen=True)
class BbsSpec:
    """Defining matrix of a Bravyi-Bacon-Shor subsystem code.

    When the generator matrices ``g1``, ``g2`` and the square ``q`` are given,
    ``a`` must equal ``g1.T @ q @ g2`` with ``q`` invertible.
    """

    a: F2Matrix
    g1: F2Matrix | None = None
    g2: F2Matrix | None = None
    q: F2Matrix | None = None

    def __post_init__(self) -> None:
        parts = (self.g1, self.g2, self.q)
        if all(p is None for p in parts):
            return
        if any(p is None for p in parts):
            raise ValueError("g1, g2 and q must be given together")
        if self.q.nrows != self.q.ncols or rank(self.q) != self.q.nrows:
            raise ValueError("q must be a full-rank square matrix")
        if self.g1.T @ self.q @ self.g2 != self.a:
            raise ValueError("a != g1^T q g2")

    @classmethod
    def from_generators(cls, g1: F2Matrix, g2: F2Matrix, q: F2Matrix | None = None) -> BbsSpec:
        if q is None:
            q = F2Matrix.identity(g1.nrows)
        return cls(g1.T @ q @ g2, g1, g2, q)


@dataclass(frozen=True)
class BbsParams:
    n: int
    k: int
    d: int


BBS_RANK_LIMIT = 20


def bbs_params(spec: BbsSpec) -> BbsParams:
    """Qubits at nonzero entries, ``k = rank(a)``, and ``d`` the minimum weight
    over the nonzero column span and row span of ``a``."""
    a = spec.a
    k = rank(a)
    if k == 0:
        raise NoLogicalQubits("zero matrix: no logical qubits, distance undefined")
    if k > BBS_RANK_LIMIT:
        raise ValueError(f"rank {k} exceeds the exhaustive-search limit {BBS_RANK_LIMIT}")
    best = None
    for m in (a, a.T):
        basis = Echelon.of(m).basis_rows()
        found = min_weight_combination(basis, m.ncols, start=1)
        if found is not None and (best is None or found[0] < best):
            best = found[0]
    return BbsParams(n=a.nnz, k=k, d=best)
