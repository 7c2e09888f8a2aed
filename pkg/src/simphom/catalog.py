"""The named-space catalog and the corpus used by the verification suites.

Names: ``delta:n``, ``boundary:n``, ``horn:n:k``, ``sphere:n`` (the
quotient of delta:n by its boundary), ``circle``, ``torus``, ``rp2``
(the 6-vertex triangulation), ``klein`` (a document shipped with the
package), ``point``, ``discrete:m``.
"""

from __future__ import annotations

import importlib.resources

from .simplex import SimplexRef
from .sset import (
    ProductResult,
    SimplicialSet,
    discrete,
    horn,
    product,
    quotient,
    skeleton,
    std_simplex,
)
from .sset import boundary as boundary_space
from .subdivision import (
    OrderedSimplicialComplex,
    boundary_complex,
    complex_to_sset,
    full_simplex_complex,
)

# the classic 6-vertex triangulation of the projective plane: every pair
# of vertices spans an edge, ten triangles, vertex links are 5-cycles
RP2_TRIANGLES = [
    (1, 2, 3), (1, 3, 4), (1, 2, 6), (1, 5, 6), (1, 4, 5),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]

CATALOG_NAMES = [
    "point", "circle", "torus", "rp2", "klein",
    "delta:n", "boundary:n", "horn:n:k", "sphere:n", "discrete:m",
]


def rp2_complex() -> OrderedSimplicialComplex:
    return OrderedSimplicialComplex(RP2_TRIANGLES)


def circle() -> SimplicialSet:
    d1 = std_simplex(1)
    space = quotient(d1, skeleton(d1, 0)).space
    space.name = "circle"
    return space


def torus_product() -> ProductResult:
    return product(circle(), circle())


def klein_bottle() -> SimplicialSet:
    text = importlib.resources.files("simphom").joinpath("data/klein.sset").read_text()
    from .io import parse_space

    return parse_space(text)


def catalog(name: str) -> SimplicialSet:
    """Look up a space by name; raises ValueError for unknown names."""
    parts = name.split(":")
    kind = parts[0]
    try:
        if kind == "point" and len(parts) == 1:
            return std_simplex(0)
        if kind == "circle" and len(parts) == 1:
            return circle()
        if kind == "torus" and len(parts) == 1:
            space = torus_product().space
            space.name = "torus"
            return space
        if kind == "rp2" and len(parts) == 1:
            space = complex_to_sset(rp2_complex())
            space.name = "rp2"
            return space
        if kind == "klein" and len(parts) == 1:
            return klein_bottle()
        if kind == "delta" and len(parts) == 2:
            return std_simplex(int(parts[1]))
        if kind == "boundary" and len(parts) == 2:
            return boundary_space(int(parts[1]))
        if kind == "horn" and len(parts) == 3:
            return horn(int(parts[1]), int(parts[2]))
        if kind == "sphere" and len(parts) == 2:
            n = int(parts[1])
            dn = std_simplex(n)
            space = quotient(dn, skeleton(dn, n - 1)).space
            space.name = f"sphere:{n}"
            return space
        if kind == "discrete" and len(parts) == 2:
            return discrete(int(parts[1]))
    except ValueError as exc:
        if "invalid literal" in str(exc):
            raise ValueError(f"bad numeric argument in space name {name!r}") from None
        raise
    raise ValueError(f"unknown space name {name!r}")


def ordered_complex_catalog(name: str) -> OrderedSimplicialComplex:
    """Ordered-complex models for the subdivision operations."""
    parts = name.split(":")
    if parts[0] == "rp2" and len(parts) == 1:
        return rp2_complex()
    if parts[0] == "delta" and len(parts) == 2:
        return full_simplex_complex(int(parts[1]))
    if parts[0] == "boundary" and len(parts) == 2:
        return boundary_complex(int(parts[1]))
    if parts[0] == "point" and len(parts) == 1:
        return OrderedSimplicialComplex([(0,)])
    raise ValueError(f"no ordered-complex model for {name!r}")


def connected_catalog_spaces() -> list[SimplicialSet]:
    """The connected corpus used by the presentation/homology cross-checks."""
    return [
        catalog("point"),
        catalog("circle"),
        catalog("torus"),
        catalog("rp2"),
        catalog("klein"),
        catalog("delta:1"),
        catalog("delta:2"),
        catalog("delta:3"),
        catalog("boundary:2"),
        catalog("boundary:3"),
        catalog("boundary:4"),
        catalog("horn:2:0"),
        catalog("horn:2:1"),
        catalog("sphere:2"),
        catalog("sphere:3"),
    ]


def all_catalog_spaces() -> list[SimplicialSet]:
    return connected_catalog_spaces() + [catalog("discrete:2"), catalog("boundary:1")]


# ---------------------------------------------------------------------------
# Nerve-style maps into standard simplices (used by the homotopy corpus)


def vertex_sequence(space: SimplicialSet, ref: SimplexRef) -> list[int]:
    """The monotone vertex labels of a simplex in a standard-simplex-like
    space (vertex labels must be single integers)."""
    out = []
    for t in range(ref.dim + 1):
        r = ref
        for u in range(ref.dim, t, -1):
            r = space.face(r, u)
        for _ in range(t):
            r = space.face(r, 0)
        out.append(int(space.gen(0, r.base_id).label))
    return out


def simplex_with_vertices(space: SimplicialSet, seq: list[int]) -> SimplexRef:
    """The canonical simplex of a standard-simplex-like space with the
    given monotone vertex sequence."""
    word = tuple(sorted((i for i in range(len(seq) - 1) if seq[i] == seq[i + 1]),
                        reverse=True))
    distinct = sorted(set(seq))
    label = "".join(map(str, distinct))
    dim = len(distinct) - 1
    base = next(g for g in space.gens(dim) if g.label == label)
    return SimplexRef(dim, base.id, word)
