"""Chain complexes of free Z-modules and the complexes of a simplicial set.

Boundaries follow the alternating-sum convention: the boundary of an
n-simplex is sum_i (-1)^i d_i.  Normalized chains are free on the
non-degenerate generators with degenerate faces discarded; unnormalized
chains take all simplices up to a truncation degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intmatrix import IntegerMatrix
from .simplex import SimplexRef
from .sset import SimplicialSet


class ChainComplex:
    """Non-negatively graded free chain complex with labeled bases."""

    def __init__(self, ranks: list[int], boundaries: dict[int, IntegerMatrix],
                 labels: list[list[str]] | None = None, check: bool = True):
        self.ranks = list(ranks)
        while self.ranks and self.ranks[-1] == 0:
            self.ranks.pop()
        self.boundaries = {}
        for n, mat in boundaries.items():
            if n < 1 or n > self.max_degree:
                if mat.cols:
                    raise ValueError(f"boundary in impossible degree {n}")
                continue
            if mat.shape != (self.rank(n - 1), self.rank(n)):
                raise ValueError(
                    f"boundary {n} has shape {mat.shape}, wanted {(self.rank(n-1), self.rank(n))}")
            self.boundaries[n] = mat
        self.labels = labels if labels is not None else [
            [f"{n}.{k}" for k in range(r)] for n, r in enumerate(self.ranks)]
        if check:
            self.verify_dd_zero()

    @property
    def max_degree(self) -> int:
        return len(self.ranks) - 1

    def rank(self, n: int) -> int:
        if 0 <= n <= self.max_degree:
            return self.ranks[n]
        return 0

    def boundary(self, n: int) -> IntegerMatrix:
        """The matrix of the boundary from degree n to degree n-1."""
        if n in self.boundaries:
            return self.boundaries[n]
        return IntegerMatrix.zero(self.rank(n - 1), self.rank(n))

    def verify_dd_zero(self):
        for n in range(2, self.max_degree + 1):
            if not (self.boundary(n - 1) * self.boundary(n)).is_zero():
                raise ValueError(f"dd != 0 between degrees {n} and {n-2}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * r for n, r in enumerate(self.ranks))

    def __repr__(self):
        return f"ChainComplex(ranks={tuple(self.ranks)})"


class ChainMap:
    """Degreewise matrices commuting with the boundaries."""

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 matrices: dict[int, IntegerMatrix], check: bool = True):
        self.source = source
        self.target = target
        self.matrices = {}
        for n in range(max(source.max_degree, target.max_degree) + 1):
            mat = matrices.get(n)
            if mat is None:
                mat = IntegerMatrix.zero(target.rank(n), source.rank(n))
            if mat.shape != (target.rank(n), source.rank(n)):
                raise ValueError(f"degree {n} matrix has shape {mat.shape}")
            self.matrices[n] = mat
        if check:
            bad = self.commutation_failures()
            if bad:
                raise ValueError(f"not a chain map: fails in degrees {bad}")

    def matrix(self, n: int) -> IntegerMatrix:
        return self.matrices.get(n, IntegerMatrix.zero(self.target.rank(n), self.source.rank(n)))

    def commutation_failures(self) -> list[int]:
        bad = []
        for n in range(1, self.source.max_degree + 1):
            lhs = self.target.boundary(n) * self.matrix(n)
            rhs = self.matrix(n - 1) * self.source.boundary(n)
            if lhs != rhs:
                bad.append(n)
        return bad

    def compose(self, other: "ChainMap") -> "ChainMap":
        """self after other."""
        mats = {n: self.matrix(n) * other.matrix(n)
                for n in range(other.source.max_degree + 1)}
        return ChainMap(other.source, self.target, mats, check=False)


class ChainHomotopy:
    """Degree +1 maps D_n : C_n -> D_{n+1}."""

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 matrices: dict[int, IntegerMatrix]):
        self.source = source
        self.target = target
        self.matrices = {}
        for n in range(source.max_degree + 1):
            mat = matrices.get(n)
            if mat is None:
                mat = IntegerMatrix.zero(target.rank(n + 1), source.rank(n))
            if mat.shape != (target.rank(n + 1), source.rank(n)):
                raise ValueError(f"degree {n} homotopy matrix has shape {mat.shape}")
            self.matrices[n] = mat

    def matrix(self, n: int) -> IntegerMatrix:
        return self.matrices.get(
            n, IntegerMatrix.zero(self.target.rank(n + 1), self.source.rank(n)))

    def defect(self, n: int, f: ChainMap, g: ChainMap) -> IntegerMatrix:
        """dD + Dd - (g - f) in degree n; zero iff the homotopy identity holds."""
        dD = self.target.boundary(n + 1) * self.matrix(n)
        Dd = self.matrix(n - 1) * self.source.boundary(n) if n >= 1 else \
            IntegerMatrix.zero(self.target.rank(n), self.source.rank(n))
        return dD + Dd - (g.matrix(n) - f.matrix(n))

    def is_homotopy_between(self, f: ChainMap, g: ChainMap) -> bool:
        return all(self.defect(n, f, g).is_zero()
                   for n in range(self.source.max_degree + 1))


# ---------------------------------------------------------------------------
# Complexes of a simplicial set


def normalized_chains(space: SimplicialSet) -> ChainComplex:
    """Free chains on the non-degenerate generators; a face contributes
    zero when its canonical form is degenerate."""
    ranks = [space.n_gens(d) for d in range(space.top_dim + 1)]
    labels = [[g.name() for g in space.gens(d)] for d in range(space.top_dim + 1)]
    boundaries = {}
    for n in range(1, space.top_dim + 1):
        mat = IntegerMatrix.zero(ranks[n - 1], ranks[n])
        for g in space.gens(n):
            ref = SimplexRef(n, g.id)
            for i in range(n + 1):
                f = space.face(ref, i)
                if not f.is_degenerate:
                    mat.data[f.base_id][g.id] += (-1) ** i
        boundaries[n] = mat
    return ChainComplex(ranks, boundaries, labels)


def unnormalized_chains(space: SimplicialSet, up_to: int | None = None) -> ChainComplex:
    """Free chains on all simplices through degree ``up_to`` (default
    top_dim + 1), degenerate simplices kept as basis elements."""
    if up_to is None:
        up_to = space.top_dim + 1
    if up_to < 0:
        raise ValueError("up_to must be >= 0")
    if space.is_empty():
        return ChainComplex([], {})
    bases = [list(space.all_simplices(n)) for n in range(up_to + 1)]
    index = [{ref: k for k, ref in enumerate(level)} for level in bases]
    ranks = [len(level) for level in bases]
    labels = [[space.format_ref(ref) for ref in level] for level in bases]
    boundaries = {}
    for n in range(1, up_to + 1):
        mat = IntegerMatrix.zero(ranks[n - 1], ranks[n])
        for k, ref in enumerate(bases[n]):
            for i in range(n + 1):
                f = space.face(ref, i)
                mat.data[index[n - 1][f]][k] += (-1) ** i
        boundaries[n] = mat
    return ChainComplex(ranks, boundaries, labels)


@dataclass
class RelativeChains:
    """Normalized chains of a pair: the quotient basis (generators of the
    total space outside the subcomplex) plus the index bookkeeping."""

    complex: ChainComplex
    # per degree, the ambient column index of each relative basis element
    ambient_index: list[list[int]]
    # per degree, relative index by ambient generator id (None if collapsed)
    relative_index: list[dict[int, int]]


def relative_chains(space: SimplicialSet, sub_ids: frozenset[tuple[int, int]]) -> RelativeChains:
    """The quotient complex of normalized chains by a subcomplex."""
    ambient_index: list[list[int]] = []
    relative_index: list[dict[int, int]] = []
    labels: list[list[str]] = []
    for d in range(space.top_dim + 1):
        amb = [g.id for g in space.gens(d) if (d, g.id) not in sub_ids]
        ambient_index.append(amb)
        relative_index.append({gid: k for k, gid in enumerate(amb)})
        labels.append([space.gen(d, gid).name() for gid in amb])
    ranks = [len(level) for level in ambient_index]
    boundaries = {}
    for n in range(1, space.top_dim + 1):
        mat = IntegerMatrix.zero(ranks[n - 1], ranks[n])
        for k, gid in enumerate(ambient_index[n]):
            ref = SimplexRef(n, gid)
            for i in range(n + 1):
                f = space.face(ref, i)
                if f.is_degenerate:
                    continue
                row = relative_index[n - 1].get(f.base_id)
                if row is not None:
                    mat.data[row][k] += (-1) ** i
        boundaries[n] = mat
    return RelativeChains(ChainComplex(ranks, boundaries, labels), ambient_index, relative_index)


def chain_map_of(space_map, source_chains: ChainComplex | None = None,
                 target_chains: ChainComplex | None = None) -> ChainMap:
    """The induced map on normalized chains of a simplicial map."""
    src = source_chains if source_chains is not None else normalized_chains(space_map.source)
    tgt = target_chains if target_chains is not None else normalized_chains(space_map.target)
    mats = {}
    for n in range(space_map.source.top_dim + 1):
        mat = IntegerMatrix.zero(tgt.rank(n), src.rank(n))
        for g in space_map.source.gens(n):
            img = space_map.images[(n, g.id)]
            if not img.is_degenerate:
                mat.data[img.base_id][g.id] += 1
        mats[n] = mat
    return ChainMap(src, tgt, mats, check=False)


# ---------------------------------------------------------------------------
# Tensor products and mapping cones


@dataclass
class TensorComplex:
    complex: ChainComplex
    # per total degree, the list of ((p, i), (q, j)) basis pairs
    basis: list[list[tuple[tuple[int, int], tuple[int, int]]]]
    index: dict[tuple[int, int, int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for level in self.basis:
            for k, ((p, i), (q, j)) in enumerate(level):
                self.index[(p, i, q, j)] = k


def tensor_complex(left: ChainComplex, right: ChainComplex) -> TensorComplex:
    """(C (x) D)_n = sum_{p+q=n} C_p (x) D_q with the Koszul sign
    d(x (x) y) = dx (x) y + (-1)^p x (x) dy."""
    top = left.max_degree + right.max_degree
    basis = []
    for n in range(top + 1):
        level = []
        for p in range(n + 1):
            q = n - p
            for i in range(left.rank(p)):
                for j in range(right.rank(q)):
                    level.append(((p, i), (q, j)))
        basis.append(level)
    tc = TensorComplex(ChainComplex([len(l) for l in basis], {}, check=False), basis)
    boundaries = {}
    for n in range(1, top + 1):
        mat = IntegerMatrix.zero(len(basis[n - 1]), len(basis[n]))
        for col, ((p, i), (q, j)) in enumerate(basis[n]):
            if p >= 1:
                dl = left.boundary(p)
                for r in range(left.rank(p - 1)):
                    c = dl.data[r][i]
                    if c:
                        mat.data[tc.index[(p - 1, r, q, j)]][col] += c
            if q >= 1:
                dr = right.boundary(q)
                sign = (-1) ** p
                for r in range(right.rank(q - 1)):
                    c = dr.data[r][j]
                    if c:
                        mat.data[tc.index[(p, i, q - 1, r)]][col] += sign * c
        boundaries[n] = mat
    labels = [[f"{left.labels[p][i]}(x){right.labels[q][j]}"
               for (p, i), (q, j) in level] for n, level in enumerate(basis)]
    tc.complex = ChainComplex([len(l) for l in basis], boundaries, labels)
    return tc


def mapping_cone(f: ChainMap) -> ChainComplex:
    """cone(f)_n = C_{n-1} (+) D_n with d(c, d) = (-dc, dd - f(c)).

    Acyclic exactly when f is a quasi-isomorphism.
    """
    if f.commutation_failures():
        raise ValueError("mapping cone requires a chain map")
    C, D = f.source, f.target
    top = max(C.max_degree + 1, D.max_degree)
    ranks = [C.rank(n - 1) + D.rank(n) for n in range(top + 1)]
    boundaries = {}
    for n in range(1, top + 1):
        rc, rd = C.rank(n - 1), D.rank(n)
        out_c, out_d = C.rank(n - 2), D.rank(n - 1)
        mat = IntegerMatrix.zero(out_c + out_d, rc + rd)
        dc = C.boundary(n - 1)
        for i in range(out_c):
            for j in range(rc):
                mat.data[i][j] = -dc.data[i][j]
        fm = f.matrix(n - 1)
        dd = D.boundary(n)
        for i in range(out_d):
            for j in range(rc):
                mat.data[out_c + i][j] = -fm.data[i][j]
            for j in range(rd):
                mat.data[out_c + i][rc + j] = dd.data[i][j]
        boundaries[n] = mat
    labels = [[f"s{C.labels[n - 1][i]}" for i in range(C.rank(n - 1))] +
              [D.labels[n][j] for j in range(D.rank(n))] if n <= top else []
              for n in range(top + 1)]
    return ChainComplex(ranks, boundaries, labels)


def euler_characteristic(space: SimplicialSet) -> int:
    """Alternating sum of non-degenerate generator counts."""
    return sum((-1) ** d * space.n_gens(d) for d in range(space.top_dim + 1))
