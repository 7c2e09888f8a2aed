"""Ordered simplicial complexes, barycentric subdivision, and the bridge
into simplicial sets.

Subdivision lives in the affine world of ordered complexes: the
subdivided complex has one vertex per face and one k-face per flag
f0 < f1 < ... < fk of faces, and the subdivision chain map is given by
the cone formula sd(sigma) = b_sigma * sd(boundary sigma).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import ChainComplex, ChainMap
from .intmatrix import IntegerMatrix
from .simplex import NonDegenSimplex, SimplexRef
from .sset import SimplicialSet


class OrderedSimplicialComplex:
    """A finite simplicial complex on a totally ordered vertex set.

    Faces are stored as sorted vertex tuples; the family is closed
    downward (closure is taken on construction).
    """

    def __init__(self, faces, vertices=None):
        face_set: set[tuple] = set()
        for f in faces:
            f = tuple(f)
            if len(set(f)) != len(f):
                raise ValueError(f"repeated vertex in face {f}")
            face_set.add(tuple(sorted(f)))
        # downward closure
        todo = list(face_set)
        while todo:
            f = todo.pop()
            for i in range(len(f)):
                sub = f[:i] + f[i + 1:]
                if sub and sub not in face_set:
                    face_set.add(sub)
                    todo.append(sub)
        if vertices is not None:
            vertices = sorted(vertices)
            for v in vertices:
                face_set.add((v,))
        self.vertices = sorted({v for f in face_set for v in f})
        self.by_dim: list[list[tuple]] = []
        d = 0
        while True:
            level = sorted(f for f in face_set if len(f) == d + 1)
            if not level:
                break
            self.by_dim.append(level)
            d += 1

    @property
    def top_dim(self) -> int:
        return len(self.by_dim) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.by_dim)

    def faces(self, dim: int) -> list[tuple]:
        if 0 <= dim <= self.top_dim:
            return self.by_dim[dim]
        return []

    def all_faces(self) -> list[tuple]:
        return [f for level in self.by_dim for f in level]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(level) for d, level in enumerate(self.by_dim))

    def __repr__(self):
        return f"OrderedSimplicialComplex{self.counts()}"


def complex_to_sset(cx: OrderedSimplicialComplex) -> SimplicialSet:
    """One generator per face; faces by deleting vertices in order."""
    index = [{f: k for k, f in enumerate(level)} for level in cx.by_dim]
    rows = []
    for d, level in enumerate(cx.by_dim):
        row = []
        for k, f in enumerate(level):
            refs = tuple(
                SimplexRef(d - 1, index[d - 1][f[:i] + f[i + 1:]]) for i in range(d + 1)
            ) if d > 0 else ()
            row.append(NonDegenSimplex(d, k, refs, label="".join(map(str, f))))
        rows.append(row)
    return SimplicialSet(rows)


def simplicial_chains(cx: OrderedSimplicialComplex) -> ChainComplex:
    """The simplicial chain complex with the vertex-order orientation;
    identical to the normalized chains of ``complex_to_sset``."""
    index = [{f: k for k, f in enumerate(level)} for level in cx.by_dim]
    ranks = [len(level) for level in cx.by_dim]
    labels = [["".join(map(str, f)) for f in level] for level in cx.by_dim]
    boundaries = {}
    for d in range(1, cx.top_dim + 1):
        mat = IntegerMatrix.zero(ranks[d - 1], ranks[d])
        for k, f in enumerate(cx.by_dim[d]):
            for i in range(d + 1):
                sub = f[:i] + f[i + 1:]
                mat.data[index[d - 1][sub]][k] += (-1) ** i
        boundaries[d] = mat
    return ChainComplex(ranks, boundaries, labels)


@dataclass
class SubdivisionResult:
    subdivided: OrderedSimplicialComplex
    chain_map: ChainMap           # C(L) -> C(Sd L)
    vertex_of_face: dict[tuple, int]


def barycentric_subdivide(cx: OrderedSimplicialComplex) -> SubdivisionResult:
    """The barycentric subdivision together with its chain map.

    Vertices of Sd are the faces of the input ordered by (dimension,
    vertex tuple); k-faces are flags of strictly nested input faces.  The
    chain map is the cone formula expanded over flags; it is verified to
    commute with boundaries before returning.
    """
    face_order = {f: k for k, f in enumerate(
        sorted(cx.all_faces(), key=lambda f: (len(f), f)))}
    flags = []
    # flags of nested faces: grow by adding a strictly larger coface
    maximal_chains: list[list[tuple]] = [[f] for f in cx.all_faces()]
    seen = {tuple(ch) for ch in maximal_chains}
    frontier = list(maximal_chains)
    while frontier:
        new_frontier = []
        for chain in frontier:
            top = chain[-1]
            for f in cx.all_faces():
                if len(f) > len(top) and set(top) < set(f):
                    ext = chain + [f]
                    key = tuple(ext)
                    if key not in seen:
                        seen.add(key)
                        new_frontier.append(ext)
        flags.extend(frontier)
        frontier = new_frontier
    sd_faces = [tuple(face_order[f] for f in chain) for chain in flags]
    subdivided = OrderedSimplicialComplex(sd_faces, vertices=face_order.values())

    src = simplicial_chains(cx)
    tgt = simplicial_chains(subdivided)
    tgt_index = [{f: k for k, f in enumerate(level)} for level in subdivided.by_dim]

    def normalize(raw: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        """Sign of the permutation sorting an oriented tuple (0 if repeats)."""
        if len(set(raw)) != len(raw):
            return 0, ()
        perm = sorted(range(len(raw)), key=lambda i: raw[i])
        sign = 1
        # count inversions
        for a in range(len(perm)):
            for b in range(a + 1, len(perm)):
                if perm[a] > perm[b]:
                    sign = -sign
        return sign, tuple(sorted(raw))

    cache: dict[tuple, dict[tuple, int]] = {}

    def sd_chain(face: tuple) -> dict[tuple, int]:
        """sd of one input face, as a chain over Sd faces (sorted tuples)."""
        if face in cache:
            return cache[face]
        apex = face_order[face]
        if len(face) == 1:
            out = {(apex,): 1}
        else:
            out = {}
            for i in range(len(face)):
                sub = face[:i] + face[i + 1:]
                for sd_face, coeff in sd_chain(sub).items():
                    sign, sorted_face = normalize((apex,) + sd_face)
                    if sign:
                        c = coeff * ((-1) ** i) * sign
                        out[sorted_face] = out.get(sorted_face, 0) + c
            out = {f: c for f, c in out.items() if c}
        cache[face] = out
        return out

    mats = {}
    for d in range(cx.top_dim + 1):
        mat = IntegerMatrix.zero(tgt.rank(d), src.rank(d))
        for col, face in enumerate(cx.by_dim[d]):
            for sd_face, coeff in sd_chain(face).items():
                mat.data[tgt_index[d][sd_face]][col] = coeff
        mats[d] = mat
    chain_map = ChainMap(src, tgt, mats, check=True)
    return SubdivisionResult(subdivided, chain_map, dict(face_order))


def full_simplex_complex(n: int) -> OrderedSimplicialComplex:
    """The full complex on vertices 0..n (the ordered model of Delta[n])."""
    return OrderedSimplicialComplex([tuple(range(n + 1))])


def boundary_complex(n: int) -> OrderedSimplicialComplex:
    """All proper faces of the n-simplex."""
    top = tuple(range(n + 1))
    return OrderedSimplicialComplex(
        [top[:i] + top[i + 1:] for i in range(n + 1)])
