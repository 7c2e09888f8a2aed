"""Finitely presented simplicial sets and the standard constructions.

A :class:`SimplicialSet` stores its non-degenerate generators graded by
dimension, each with a face table of canonical :class:`SimplexRef` values.
All values are immutable after construction and every operation is a pure
function of its inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .simplex import (
    NonDegenSimplex,
    SimplexRef,
    compose_words,
    face_word_rewrite,
    insert_degeneracy,
)


class SimplicialSet:
    """A simplicial set presented by generators and a face table.

    ``generators[d]`` lists the non-degenerate d-simplices; a generator's
    id is its index in that list.  Structural well-formedness (faces
    resolve, canonical words, correct counts) is enforced on construction;
    the simplicial identities are checked separately by :func:`is_valid`.
    """

    def __init__(self, generators: list[list[NonDegenSimplex]], name: str | None = None):
        while generators and not generators[-1]:
            generators = generators[:-1]
        self.generators = [tuple(gens) for gens in generators]
        self.name = name
        self._check_structure()

    # -- accessors ---------------------------------------------------

    @property
    def top_dim(self) -> int:
        return len(self.generators) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.generators)

    def n_gens(self, dim: int) -> int:
        if 0 <= dim <= self.top_dim:
            return len(self.generators[dim])
        return 0

    def gens(self, dim: int) -> tuple[NonDegenSimplex, ...]:
        if 0 <= dim <= self.top_dim:
            return self.generators[dim]
        return ()

    def gen(self, dim: int, gid: int) -> NonDegenSimplex:
        if not (0 <= dim <= self.top_dim and 0 <= gid < len(self.generators[dim])):
            raise ValueError(f"no generator ({dim},{gid})")
        return self.generators[dim][gid]

    def is_empty(self) -> bool:
        return not self.generators

    def __repr__(self):
        nm = self.name or "SimplicialSet"
        return f"{nm}{self.counts()}"

    # -- the operator calculus ----------------------------------------

    def face(self, s: SimplexRef, i: int) -> SimplexRef:
        """The i-th face of any simplex, in canonical form."""
        if s.dim < 1:
            raise ValueError("faces require dimension >= 1")
        if not 0 <= i <= s.dim:
            raise ValueError(f"face index {i} out of range for dimension {s.dim}")
        word, residual = face_word_rewrite(s.degens, i)
        base = self.gen(s.base_dim, s.base_id)
        if residual is None:
            return SimplexRef(s.base_dim, s.base_id, word)
        target = base.faces[residual]
        return SimplexRef(target.base_dim, target.base_id, compose_words(word, target.degens))

    def degeneracy(self, s: SimplexRef, i: int) -> SimplexRef:
        """The i-th degeneracy of any simplex, in canonical form."""
        if not 0 <= i <= s.dim:
            raise ValueError(f"degeneracy index {i} out of range for dimension {s.dim}")
        return SimplexRef(s.base_dim, s.base_id, insert_degeneracy(s.degens, i))

    def all_simplices(self, n: int):
        """All n-simplices (degenerate included), canonical and sorted."""
        for p in range(min(n, self.top_dim) + 1):
            for g in self.generators[p]:
                for chosen in itertools.combinations(range(n), n - p):
                    yield SimplexRef(p, g.id, tuple(reversed(chosen)))

    def edge_01(self, s: SimplexRef) -> SimplexRef:
        """The edge spanned by vertices 0 and 1 (faces off vertices 2..n)."""
        if s.dim < 1:
            raise ValueError("needs dimension >= 1")
        for t in range(s.dim, 1, -1):
            s = self.face(s, t)
        return s

    def format_ref(self, s: SimplexRef) -> str:
        base = self.gen(s.base_dim, s.base_id)
        if not s.degens:
            return base.name()
        word = " ".join(f"s{j}" for j in s.degens)
        return f"{word} {base.name()}"

    # -- internal checks ----------------------------------------------

    def _check_structure(self):
        for d, gens in enumerate(self.generators):
            for k, g in enumerate(gens):
                if g.dim != d or g.id != k:
                    raise ValueError(f"generator {g.name()} misfiled at ({d},{k})")
                if len(g.faces) != (0 if d == 0 else d + 1):
                    raise ValueError(f"generator {g.name()} has {len(g.faces)} faces, wanted {d + 1}")
                for i, ref in enumerate(g.faces):
                    if ref.dim != d - 1:
                        raise ValueError(f"face {i} of {g.name()} has dimension {ref.dim}, wanted {d - 1}")
                    if not ref.words_ok():
                        raise ValueError(f"face {i} of {g.name()} has non-canonical word {ref.degens}")
                    if not (0 <= ref.base_dim < d and 0 <= ref.base_id < self.n_gens(ref.base_dim)):
                        raise ValueError(f"face {i} of {g.name()} dangles: no generator ({ref.base_dim},{ref.base_id})")


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)

    @property
    def first_violation(self) -> str | None:
        return self.problems[0] if self.problems else None


def is_valid(space: SimplicialSet) -> ValidationReport:
    """Check all invariants: canonical face tables and the simplicial
    identities d_i d_j = d_{j-1} d_i (i < j) on every generator."""
    problems = []
    for d in range(2, space.top_dim + 1):
        for g in space.gens(d):
            ref = SimplexRef(d, g.id)
            for j in range(1, d + 1):
                for i in range(j):
                    left = space.face(space.face(ref, j), i)
                    right = space.face(space.face(ref, i), j - 1)
                    if left != right:
                        problems.append(
                            f"simplicial identity fails on {g.name()} at (i,j)=({i},{j}): "
                            f"d{i} d{j} = {space.format_ref(left)} but d{j-1} d{i} = {space.format_ref(right)}"
                        )
    return ValidationReport(not problems, problems)


# ---------------------------------------------------------------------------
# Simplicial maps


class SimplicialMap:
    """A map of simplicial sets, given by a dimension-preserving image ref
    for every generator of the source."""

    def __init__(self, source: SimplicialSet, target: SimplicialSet,
                 images: dict[tuple[int, int], SimplexRef], check: bool = True):
        self.source = source
        self.target = target
        self.images = dict(images)
        for d in range(source.top_dim + 1):
            for g in source.gens(d):
                ref = self.images.get((d, g.id))
                if ref is None:
                    raise ValueError(f"no image for generator {g.name()}")
                if ref.dim != d:
                    raise ValueError(f"image of {g.name()} has dimension {ref.dim}, wanted {d}")
        if check:
            bad = self.verify()
            if bad:
                raise ValueError("not a simplicial map: " + bad[0])

    def apply(self, s: SimplexRef) -> SimplexRef:
        img = self.images[(s.base_dim, s.base_id)]
        return SimplexRef(img.base_dim, img.base_id, compose_words(s.degens, img.degens))

    def verify(self) -> list[str]:
        """All face-commutation failures f(d_i s) != d_i f(s), if any."""
        bad = []
        for d in range(1, self.source.top_dim + 1):
            for g in self.source.gens(d):
                ref = SimplexRef(d, g.id)
                for i in range(d + 1):
                    lhs = self.apply(self.source.face(ref, i))
                    rhs = self.target.face(self.apply(ref), i)
                    if lhs != rhs:
                        bad.append(f"f(d{i} {g.name()}) != d{i} f({g.name()})")
        return bad

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """self after other (other acts first)."""
        if other.target is not self.source:
            raise ValueError("composition mismatch")
        images = {key: self.apply(ref) for key, ref in other.images.items()}
        return SimplicialMap(other.source, self.target, images, check=False)

    def same_images(self, other: "SimplicialMap") -> bool:
        return self.images == other.images


def identity_map(space: SimplicialSet) -> SimplicialMap:
    images = {}
    for d in range(space.top_dim + 1):
        for g in space.gens(d):
            images[(d, g.id)] = SimplexRef(d, g.id)
    return SimplicialMap(space, space, images, check=False)


def constant_map(source: SimplicialSet, target: SimplicialSet, vertex_id: int) -> SimplicialMap:
    """The map collapsing everything to a chosen vertex of the target."""
    target.gen(0, vertex_id)
    images = {}
    for d in range(source.top_dim + 1):
        word = tuple(range(d - 1, -1, -1))
        for g in source.gens(d):
            images[(d, g.id)] = SimplexRef(0, vertex_id, word)
    return SimplicialMap(source, target, images, check=False)


# ---------------------------------------------------------------------------
# Standard simplices, boundaries, horns


def _simplex_generators(n: int, keep) -> list[list[NonDegenSimplex]]:
    """Generators of the subcomplex of Delta[n] spanned by the vertex
    subsets accepted by ``keep``."""
    by_dim: list[list[tuple[int, ...]]] = []
    index: dict[tuple[int, ...], int] = {}
    for m in range(n + 1):
        level = [vs for vs in itertools.combinations(range(n + 1), m + 1) if keep(vs)]
        by_dim.append(level)
        for k, vs in enumerate(level):
            index[vs] = k
    gens: list[list[NonDegenSimplex]] = []
    for m, level in enumerate(by_dim):
        row = []
        for k, vs in enumerate(level):
            faces = tuple(
                SimplexRef(m - 1, index[vs[:i] + vs[i + 1:]]) for i in range(m + 1)
            ) if m > 0 else ()
            row.append(NonDegenSimplex(m, k, faces, label="".join(map(str, vs))))
        gens.append(row)
    return gens


def std_simplex(n: int) -> SimplicialSet:
    """Delta[n]: one generator per monotone injection into [n]."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return SimplicialSet(_simplex_generators(n, lambda vs: True), name=f"Delta[{n}]")


def boundary(n: int) -> SimplicialSet:
    """The boundary of Delta[n] (omits the top generator)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return SimplicialSet(
        _simplex_generators(n, lambda vs: len(vs) < n + 1), name=f"dDelta[{n}]"
    )


def horn(n: int, k: int) -> SimplicialSet:
    """Lambda[n]_k: the boundary minus the face opposite vertex k."""
    if n < 1:
        raise ValueError("horns need n >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"horn index {k} out of range")
    omitted = tuple(v for v in range(n + 1) if v != k)
    return SimplicialSet(
        _simplex_generators(n, lambda vs: len(vs) < n + 1 and vs != omitted),
        name=f"Lambda[{n}]_{k}",
    )


def discrete(m: int) -> SimplicialSet:
    """m isolated points."""
    if m < 0:
        raise ValueError("m must be >= 0")
    verts = [NonDegenSimplex(0, k, (), label=f"p{k}") for k in range(m)]
    return SimplicialSet([verts] if m else [], name=f"discrete[{m}]")


# ---------------------------------------------------------------------------
# Subcomplexes, quotients, skeleta, coproducts, pushouts


def _close_ids(space: SimplicialSet, ids) -> set[tuple[int, int]]:
    todo = list(ids)
    closed: set[tuple[int, int]] = set()
    while todo:
        key = todo.pop()
        if key in closed:
            continue
        d, gid = key
        if not (0 <= d <= space.top_dim and 0 <= gid < space.n_gens(d)):
            raise ValueError(f"unknown generator id ({d},{gid})")
        closed.add(key)
        for ref in space.gen(d, gid).faces:
            todo.append((ref.base_dim, ref.base_id))
    return closed


@dataclass
class SubcomplexResult:
    space: SimplicialSet
    inclusion: SimplicialMap
    id_set: frozenset[tuple[int, int]]
    new_id: dict[tuple[int, int], int]


def subcomplex(space: SimplicialSet, ids, require_closed: bool = False) -> SubcomplexResult:
    """The subcomplex generated by a set of (dim, id) pairs.

    The face closure is computed automatically; with ``require_closed``
    any id forced in by closure is an error instead.
    """
    requested = set(ids)
    closed = _close_ids(space, requested)
    if require_closed and closed != requested:
        extra = sorted(closed - requested)
        raise ValueError(f"id set is not face-closed; closure adds {extra}")
    new_id: dict[tuple[int, int], int] = {}
    gens: list[list[NonDegenSimplex]] = []
    top = max((d for d, _ in closed), default=-1)
    for d in range(top + 1):
        row = []
        for g in space.gens(d):
            if (d, g.id) in closed:
                new_id[(d, g.id)] = len(row)
                row.append(g)
        gens.append(row)
    out: list[list[NonDegenSimplex]] = []
    for d, row in enumerate(gens):
        new_row = []
        for k, g in enumerate(row):
            faces = tuple(
                SimplexRef(r.base_dim, new_id[(r.base_dim, r.base_id)], r.degens)
                for r in g.faces
            )
            new_row.append(NonDegenSimplex(d, k, faces, label=g.label))
        out.append(new_row)
    sub = SimplicialSet(out, name=f"sub({space.name})" if space.name else None)
    images = {
        (d, new_id[(d, gid)]): SimplexRef(d, gid)
        for (d, gid) in closed
    }
    incl = SimplicialMap(sub, space, images, check=False)
    return SubcomplexResult(sub, incl, frozenset(closed), new_id)


def skeleton(space: SimplicialSet, n: int) -> SubcomplexResult:
    """The n-skeleton as a subcomplex (keeps generators of dimension <= n)."""
    ids = [
        (d, g.id)
        for d in range(min(n, space.top_dim) + 1)
        for g in space.gens(d)
    ]
    return subcomplex(space, ids)


def _as_id_set(space: SimplicialSet, sub) -> frozenset[tuple[int, int]]:
    if isinstance(sub, SubcomplexResult):
        return sub.id_set
    ids = frozenset(sub)
    if ids != frozenset(_close_ids(space, ids)):
        raise ValueError("not a subcomplex: id set is not face-closed")
    return ids


@dataclass
class QuotientResult:
    space: SimplicialSet
    projection: SimplicialMap
    collapse_log: list[str]


def quotient(space: SimplicialSet, sub) -> QuotientResult:
    """Collapse a subcomplex to a point.

    Generators of the quotient are the generators outside the subcomplex
    plus one new vertex; faces landing in the subcomplex are redirected to
    degeneracies of that vertex and re-canonicalized.  Faces whose image
    becomes degenerate in the process are recorded in the collapse log.
    """
    ids = _as_id_set(space, sub)
    if not ids:
        ident = identity_map(space)
        return QuotientResult(space, ident, [])
    new_id: dict[tuple[int, int], int] = {}
    rows: list[list[NonDegenSimplex]] = [[] for _ in range(space.top_dim + 1)]
    star = NonDegenSimplex(0, 0, (), label="*")
    rows[0].append(star)
    for d in range(space.top_dim + 1):
        for g in space.gens(d):
            if (d, g.id) not in ids:
                new_id[(d, g.id)] = len(rows[d])
                rows[d].append(None)  # placeholder, filled below
    collapse_log: list[str] = []

    def redirect(ref: SimplexRef) -> SimplexRef:
        if (ref.base_dim, ref.base_id) in ids:
            word = tuple(range(ref.dim - 1, -1, -1))
            return SimplexRef(0, 0, word)
        return SimplexRef(ref.base_dim, new_id[(ref.base_dim, ref.base_id)], ref.degens)

    for d in range(space.top_dim + 1):
        for g in space.gens(d):
            if (d, g.id) in ids:
                continue
            faces = []
            for i, ref in enumerate(g.faces):
                new_ref = redirect(ref)
                if new_ref.is_degenerate and not ref.is_degenerate:
                    collapse_log.append(f"face {i} of {g.name()} collapsed to {new_ref.degens} over *")
                faces.append(new_ref)
            rows[d][new_id[(d, g.id)]] = NonDegenSimplex(d, new_id[(d, g.id)], tuple(faces), label=g.label)
    quo = SimplicialSet(rows, name=f"{space.name}/sub" if space.name else None)
    images = {}
    for d in range(space.top_dim + 1):
        word = tuple(range(d - 1, -1, -1))
        for g in space.gens(d):
            if (d, g.id) in ids:
                images[(d, g.id)] = SimplexRef(0, 0, word)
            else:
                images[(d, g.id)] = SimplexRef(d, new_id[(d, g.id)])
    proj = SimplicialMap(space, quo, images, check=False)
    return QuotientResult(quo, proj, collapse_log)


@dataclass
class CoproductResult:
    space: SimplicialSet
    inclusions: list[SimplicialMap]


def coproduct(spaces) -> CoproductResult:
    """Disjoint union, ids offset per dimension in input order."""
    spaces = list(spaces)
    top = max((s.top_dim for s in spaces), default=-1)
    rows: list[list[NonDegenSimplex]] = [[] for _ in range(top + 1)]
    offsets = []
    for s in spaces:
        offsets.append([len(rows[d]) if d <= top else 0 for d in range(top + 1)])
        off = offsets[-1]
        for d in range(s.top_dim + 1):
            for g in s.gens(d):
                faces = tuple(
                    SimplexRef(r.base_dim, r.base_id + off[r.base_dim], r.degens)
                    for r in g.faces
                )
                rows[d].append(NonDegenSimplex(d, len(rows[d]), faces, label=g.label))
    total = SimplicialSet(rows, name="+".join(filter(None, (s.name for s in spaces))) or None)
    inclusions = []
    for s, off in zip(spaces, offsets):
        images = {}
        for d in range(s.top_dim + 1):
            for g in s.gens(d):
                images[(d, g.id)] = SimplexRef(d, g.id + off[d])
        inclusions.append(SimplicialMap(s, total, images, check=False))
    return CoproductResult(total, inclusions)


@dataclass
class PushoutResult:
    space: SimplicialSet
    from_base: SimplicialMap      # K -> P
    from_attached: SimplicialMap  # M -> P


def pushout(f: SimplicialMap, embedding: SimplicialMap) -> PushoutResult:
    """Glue ``embedding.target`` to ``f.target`` along ``f`` on the shared
    subcomplex ``f.source``.  The embedding leg must send generators to
    distinct generators (injective, non-degenerate images)."""
    if f.source is not embedding.source:
        raise ValueError("legs must share their source")
    K, M = f.target, embedding.target
    in_image: dict[tuple[int, int], tuple[int, int]] = {}
    for (d, gid), ref in embedding.images.items():
        if ref.is_degenerate:
            raise ValueError("embedding leg has a degenerate image: not injective")
        key = (ref.base_dim, ref.base_id)
        if key in in_image:
            raise ValueError("embedding leg is not injective on generators")
        in_image[key] = (d, gid)
    top = max(K.top_dim, M.top_dim)
    rows: list[list[NonDegenSimplex]] = [[] for _ in range(top + 1)]
    for d in range(K.top_dim + 1):
        for g in K.gens(d):
            rows[d].append(g)
    m_id: dict[tuple[int, int], int] = {}
    for d in range(M.top_dim + 1):
        for g in M.gens(d):
            if (d, g.id) not in in_image:
                m_id[(d, g.id)] = len(rows[d])
                rows[d].append(None)

    def redirect(ref: SimplexRef) -> SimplexRef:
        key = (ref.base_dim, ref.base_id)
        if key in in_image:
            img = f.images[in_image[key]]
            return SimplexRef(img.base_dim, img.base_id, compose_words(ref.degens, img.degens))
        return SimplexRef(ref.base_dim, m_id[key], ref.degens)

    for d in range(M.top_dim + 1):
        for g in M.gens(d):
            if (d, g.id) in in_image:
                continue
            faces = tuple(redirect(r) for r in g.faces)
            k = m_id[(d, g.id)]
            rows[d][k] = NonDegenSimplex(d, k, faces, label=g.label)
    glued = SimplicialSet(rows)
    base_images = {}
    for d in range(K.top_dim + 1):
        for g in K.gens(d):
            base_images[(d, g.id)] = SimplexRef(d, g.id)
    attached_images = {}
    for d in range(M.top_dim + 1):
        for g in M.gens(d):
            attached_images[(d, g.id)] = redirect(SimplexRef(d, g.id))
    return PushoutResult(
        glued,
        SimplicialMap(K, glued, base_images, check=False),
        SimplicialMap(M, glued, attached_images, check=False),
    )


# ---------------------------------------------------------------------------
# Products


PairKey = tuple[int, int, tuple[int, ...], int, int, tuple[int, ...]]


@dataclass
class ProductResult:
    space: SimplicialSet
    proj_left: SimplicialMap
    proj_right: SimplicialMap
    left: SimplicialSet
    right: SimplicialSet
    gen_of_pair: dict[PairKey, int]
    pair_of_gen: dict[tuple[int, int], tuple[SimplexRef, SimplexRef]]

    def ref_of_pair(self, a: SimplexRef, b: SimplexRef) -> SimplexRef:
        """Canonical ref of the simplex (a, b): factor out the shared
        degeneracies and look up the jointly non-degenerate base pair."""
        if a.dim != b.dim:
            raise ValueError("pair components must have equal dimension")
        shared = set(a.degens) & set(b.degens)
        word = tuple(sorted(shared, reverse=True))

        def strip(degens):
            out = []
            for j in degens:
                if j in shared:
                    continue
                out.append(j - sum(1 for t in shared if t < j))
            return tuple(out)

        key = (a.base_dim, a.base_id, strip(a.degens), b.base_dim, b.base_id, strip(b.degens))
        gid = self.gen_of_pair[key]
        return SimplexRef(a.dim - len(shared), gid, word)


def product(left: SimplicialSet, right: SimplicialSet) -> ProductResult:
    """The product simplicial set with its two projections.

    Non-degenerate n-simplices are jointly non-degenerate pairs
    (s_V sigma, s_W tau) with V and W disjoint degeneracy words over
    non-degenerate sigma, tau; faces are computed componentwise and
    re-canonicalized.
    """
    if left.is_empty() or right.is_empty():
        empty = SimplicialSet([], name="empty")
        return ProductResult(empty, SimplicialMap(empty, left, {}, check=False),
                             SimplicialMap(empty, right, {}, check=False),
                             left, right, {}, {})
    top = left.top_dim + right.top_dim
    gen_of_pair: dict[PairKey, int] = {}
    pair_of_gen: dict[tuple[int, int], tuple[SimplexRef, SimplexRef]] = {}
    pairs_by_dim: list[list[tuple[SimplexRef, SimplexRef]]] = []
    for n in range(top + 1):
        level = []
        for p in range(min(n, left.top_dim) + 1):
            for q in range(min(n, right.top_dim) + 1):
                if p + q < n:
                    continue
                for sigma in left.gens(p):
                    for tau in right.gens(q):
                        for vset in itertools.combinations(range(n), n - p):
                            rest = [t for t in range(n) if t not in vset]
                            for wset in itertools.combinations(rest, n - q):
                                a = SimplexRef(p, sigma.id, tuple(reversed(vset)))
                                b = SimplexRef(q, tau.id, tuple(reversed(wset)))
                                level.append((a, b))
        level.sort(key=lambda ab: (ab[0].base_dim, ab[0].base_id, ab[0].degens,
                                   ab[1].base_dim, ab[1].base_id, ab[1].degens))
        for gid, (a, b) in enumerate(level):
            gen_of_pair[(a.base_dim, a.base_id, a.degens, b.base_dim, b.base_id, b.degens)] = gid
            pair_of_gen[(n, gid)] = (a, b)
        pairs_by_dim.append(level)

    result = ProductResult(None, None, None, left, right, gen_of_pair, pair_of_gen)  # type: ignore

    rows: list[list[NonDegenSimplex]] = []
    for n, level in enumerate(pairs_by_dim):
        row = []
        for gid, (a, b) in enumerate(level):
            faces = tuple(
                result.ref_of_pair(left.face(a, i), right.face(b, i))
                for i in range(n + 1)
            ) if n > 0 else ()
            la = left.format_ref(a)
            lb = right.format_ref(b)
            row.append(NonDegenSimplex(n, gid, faces, label=f"({la}|{lb})"))
        rows.append(row)
    lname = left.name or "?"
    rname = right.name or "?"
    space = SimplicialSet(rows, name=f"{lname}x{rname}")
    result.space = space
    result.proj_left = SimplicialMap(
        space, left, {key: ab[0] for key, ab in pair_of_gen.items()}, check=False)
    result.proj_right = SimplicialMap(
        space, right, {key: ab[1] for key, ab in pair_of_gen.items()}, check=False)
    return result
