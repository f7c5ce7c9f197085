"""Balanced products: tensor products modulo a free action of a finite abelian group."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ldpc_products.codes import CssCode
from ldpc_products.complexes import ChainComplex, to_css
from ldpc_products.f2core import Echelon, F2Matrix, hstack, kron, rank
from ldpc_products.products.tensor import tensor, total_blocks


class ActionError(ValueError):
    """Group action is malformed, non-abelian, non-free or not a chain map."""


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Permutation ``a after b``."""
    return a[b]


@dataclass(frozen=True)
class GroupAction:
    """Abelian group given by permutation generators on every basis of two complexes.

    ``on_c[p][g]`` is the image list of generator ``g`` on the basis of ``C_p``
    (``perm[i]`` is the image of basis vector ``i``); ``on_d`` likewise for D.
    Degrees whose space is zero-dimensional may be omitted.  In the quotient,
    ``g.c (x) d`` is identified with ``c (x) g.d``.
    """

    order: int
    on_c: Mapping[int, Sequence[Sequence[int]]]
    on_d: Mapping[int, Sequence[Sequence[int]]]

    @classmethod
    def trivial(cls, c: ChainComplex, d: ChainComplex) -> GroupAction:
        return cls(
            1,
            {p: [list(range(c.dim(p)))] for p in range(c.top + 1)},
            {q: [list(range(d.dim(q)))] for q in range(d.top + 1)},
        )

    @cached_property
    def n_generators(self) -> int:
        counts = {len(gens) for gens in (*self.on_c.values(), *self.on_d.values())}
        if len(counts) != 1:
            raise ActionError(f"inconsistent generator counts {sorted(counts)}")
        return counts.pop()

    def _generators(self, c: ChainComplex, d: ChainComplex) -> list[list[np.ndarray]]:
        """Per generator, permutation arrays for every space in the order C_0..C_n, D_0..D_m."""
        spaces = [(self.on_c, c, p) for p in range(c.top + 1)] + [(self.on_d, d, q) for q in range(d.top + 1)]
        gens: list[list[np.ndarray]] = [[] for _ in range(self.n_generators)]
        for table, cx, deg in spaces:
            size = cx.dim(deg)
            perms = table.get(deg)
            if perms is None:
                if size:
                    raise ActionError(f"no action given on a {size}-dimensional space (degree {deg})")
                perms = [[] for _ in range(self.n_generators)]
            for g, perm in enumerate(perms):
                arr = np.asarray(perm, dtype=np.int64)
                if arr.shape != (size,) or sorted(arr.tolist()) != list(range(size)):
                    raise ActionError(f"generator {g} is not a permutation of {size} basis vectors (degree {deg})")
                gens[g].append(arr)
        return gens

    def elements(self, c: ChainComplex, d: ChainComplex) -> tuple[list[list[np.ndarray]], list[int]]:
        """All group elements as per-space permutations, plus the index of each element's inverse.

        Validates commutativity, the declared order, freeness on every basis and
        equivariance of all differentials.
        """
        gens = self._generators(c, d)
        dims = [c.dim(p) for p in range(c.top + 1)] + [d.dim(q) for q in range(d.top + 1)]
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                for x, y in zip(gens[a], gens[b]):
                    if not np.array_equal(_compose(x, y), _compose(y, x)):
                        raise ActionError("generators do not commute; only abelian groups are supported")

        def key(elem: list[np.ndarray]) -> tuple[int, ...]:
            return tuple(np.concatenate(elem).tolist()) if elem else ()

        identity = [np.arange(s, dtype=np.int64) for s in dims]
        elems = [identity]
        seen = {key(identity): 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    prod = [_compose(gp, ep) for gp, ep in zip(g, e)]
                    k = key(prod)
                    if k not in seen:
                        seen[k] = len(elems)
                        elems.append(prod)
                        nxt.append(prod)
            frontier = nxt
            if len(elems) > self.order:
                break
        if len(elems) != self.order:
            raise ActionError(f"generators produce a group of order {len(elems)}, declared {self.order}")

        for e in elems[1:]:
            for arr in e:
                if arr.size and np.any(arr == np.arange(arr.size)):
                    raise ActionError("action is not free: a non-identity element fixes a basis vector")

        inverse = []
        for e in elems:
            inv = [np.argsort(arr) for arr in e]
            inverse.append(seen[key(inv)])

        ncx = c.top + 1
        for g in gens:
            for cx, perms in ((c, g[:ncx]), (d, g[ncx:])):
                for i in range(1, cx.top + 1):
                    dmat = cx.diff(i).to_array()
                    # g d = d g  <=>  d[g(r), g(s)] = d[r, s]
                    if not np.array_equal(dmat[np.ix_(perms[i - 1], perms[i])], dmat):
                        raise ActionError(f"action does not commute with differential d_{i}")
        return elems, inverse


def _orbit_labels(
    c: ChainComplex, d: ChainComplex, n: int, c_perms: list[list[np.ndarray]], d_perms: list[list[np.ndarray]]
) -> tuple[np.ndarray, np.ndarray]:
    """Orbit label per basis vector of ``Tot_n`` and the representative (smallest index) of each orbit.

    ``c_perms[e][p]`` is element ``e`` on ``C_p``; ``d_perms[e][q]`` is the
    inverse element on ``D_q``, so ``(c, d)`` is identified with ``(g c, g^-1 d)``.
    """
    labels_blocks = []
    offset = 0
    for p, q in total_blocks(c, d, n):
        nc, nd = c.dim(p), d.dim(q)
        size = nc * nd
        if size == 0:
            continue
        idx = np.arange(size)
        ci, di = idx // nd, idx % nd
        images = np.stack([c_perms[e][p][ci] * nd + d_perms[e][q][di] for e in range(len(c_perms))])
        labels_blocks.append(images.min(axis=0) + offset)
        offset += size
    if not labels_blocks:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    reps_of = np.concatenate(labels_blocks)
    reps, labels = np.unique(reps_of, return_inverse=True)
    return labels, reps


def balanced_product(c: ChainComplex, d: ChainComplex, action: GroupAction) -> ChainComplex:
    """``Tot(C (x)_G D)``: the coinvariants of ``tensor(c, d)`` under the diagonal action.

    Quotient basis vectors are orbits ordered by their smallest member in the
    tensor basis, so the trivial group reproduces :func:`tensor` exactly.
    """
    elems, inverse = action.elements(c, d)
    ncx = c.top + 1
    c_perms = [e[:ncx] for e in elems]
    d_perms = [elems[inverse[i]][ncx:] for i in range(len(elems))]
    t = tensor(c, d)
    order = action.order
    labels, reps = [], []
    for n in range(t.top + 1):
        lab, rep = _orbit_labels(c, d, n, c_perms, d_perms)
        if np.any(np.bincount(lab, minlength=len(rep)) != order):
            raise ActionError(f"orbit sizes in degree {n} differ from the group order")
        labels.append(lab)
        reps.append(rep)
    dims = [len(r) for r in reps]
    if t.top == 0:
        return ChainComplex([], dims=dims)
    maps = []
    for n in range(1, t.top + 1):
        m = t.diff(n).to_array().astype(np.int64)
        summed = np.zeros((dims[n - 1], dims[n]), dtype=np.int64)
        if m.size:
            np.add.at(summed, labels[n - 1], m[:, reps[n]])
        maps.append(F2Matrix.from_array(summed & 1))
    return ChainComplex(maps, dims=dims)


def balanced_product_code(c: ChainComplex, d: ChainComplex, action: GroupAction, degree: int = 1) -> CssCode:
    return to_css(balanced_product(c, d, action), degree)


# -- Kunneth over G ------------------------------------------------------


def _permute_bits(v: int, perm: np.ndarray) -> int:
    out = 0
    i = 0
    while v:
        if v & 1:
            out |= 1 << int(perm[i])
        v >>= 1
        i += 1
    return out


def homology_representation(cx: ChainComplex, p: int, perms: Sequence[np.ndarray]) -> list[F2Matrix]:
    """Matrices of the induced action of each permutation on ``H_p``.

    Column ``j`` of each matrix holds the coordinates of the image of the
    ``j``-th homology representative.
    """
    dim = cx.dim(p)
    boundaries = Echelon(dim, cx.diff(p + 1).T.int_rows)
    bbasis = boundaries.basis_rows()
    reps = [z for z in Echelon.of(cx.diff(p)).kernel_of_rows() if boundaries.add(z)]
    coords = Echelon(dim, [*bbasis, *reps], track=True)
    h = len(reps)
    shift = len(bbasis)
    out = []
    for perm in perms:
        cols = []
        for r in reps:
            mask = coords.solve(_permute_bits(r, perm))
            if mask is None:
                raise ActionError("permutation does not preserve cycles")
            cols.append(mask >> shift)
        arr = np.zeros((h, h), dtype=np.uint8)
        for j, m in enumerate(cols):
            for i in range(h):
                arr[i, j] = (m >> i) & 1
        out.append(F2Matrix.from_array(arr))
    return out


def balanced_tensor_dim(rho_v: Sequence[F2Matrix], rho_w: Sequence[F2Matrix], dim_v: int, dim_w: int) -> int:
    """``dim(V (x)_G W)`` from generator matrices acting on ``V`` and ``W``."""
    if dim_v == 0 or dim_w == 0:
        return 0
    rels = [
        kron(rv, F2Matrix.identity(dim_w)) ^ kron(F2Matrix.identity(dim_v), rw)
        for rv, rw in zip(rho_v, rho_w)
    ]
    return dim_v * dim_w - rank(hstack(*rels))


def kunneth_over_group(c: ChainComplex, d: ChainComplex, action: GroupAction, n: int) -> int:
    """``sum_{p+q=n} dim(H_p(C) (x)_G H_q(D))`` computed from the induced homology actions."""
    gens = action._generators(c, d)
    ncx = c.top + 1
    total = 0
    for p, q in total_blocks(c, d, n):
        rv = homology_representation(c, p, [g[p] for g in gens])
        rw = homology_representation(d, q, [g[ncx + q] for g in gens])
        total += balanced_tensor_dim(rv, rw, c.homology_dim(p), d.homology_dim(q))
    return total


def rotation_action(c: ChainComplex, d: ChainComplex, order: int) -> GroupAction:
    """Cyclic group ``Z_order`` rotating two cycle-graph complexes.

    On a cycle of length ``L`` (a multiple of ``order``) the generator shifts
    vertices and edges by ``L / order``.
    """
    def perms(cx: ChainComplex) -> dict[int, list[list[int]]]:
        out = {}
        for deg in range(cx.top + 1):
            size = cx.dim(deg)
            if size % order:
                raise ActionError(f"dimension {size} not divisible by {order}")
            step = size // order
            out[deg] = [[(i + step) % size for i in range(size)]]
        return out

    return GroupAction(order, perms(c), perms(d))
