"""Shared fixtures: catalog spaces and the corpus of simplicial homotopies."""

from __future__ import annotations

import pytest

from simphom.catalog import catalog, simplex_with_vertices, vertex_sequence
from simphom.operators import Cylinder, constant_homotopy, cylinder
from simphom.simplex import SimplexRef
from simphom.sset import SimplicialMap, SimplicialSet, constant_map, identity_map


@pytest.fixture(scope="session")
def circle():
    return catalog("circle")


@pytest.fixture(scope="session")
def torus():
    return catalog("torus")


@pytest.fixture(scope="session")
def rp2():
    return catalog("rp2")


@pytest.fixture(scope="session")
def klein():
    return catalog("klein")


def meet_contraction(space: SimplicialSet, cyl: Cylinder) -> SimplicialMap:
    """The contraction H(x, t) = x if t = 1 else 0 for spaces whose
    generators are monotone vertex tuples with meets (standard simplices,
    their subcomplexes with vertex 0, zero-anchored horns)."""
    interval = cyl.prod.right
    images = {}
    for d in range(cyl.space.top_dim + 1):
        for g in cyl.space.gens(d):
            a, b = cyl.prod.pair_of_gen[(d, g.id)]
            va = vertex_sequence(space, a)
            vb = vertex_sequence(interval, b)
            seq = [x if t == 1 else 0 for x, t in zip(va, vb)]
            images[(d, g.id)] = simplex_with_vertices(space, seq)
    return SimplicialMap(cyl.space, space, images, check=True)


def cross_space_contraction() -> tuple:
    """The horn included in the triangle, contracted onto vertex 0: a
    homotopy between maps with distinct source and target."""
    source = catalog("horn:2:0")
    target = catalog("delta:2")
    cyl = cylinder(source)
    interval = cyl.prod.right
    images = {}
    for d in range(cyl.space.top_dim + 1):
        for g in cyl.space.gens(d):
            a, b = cyl.prod.pair_of_gen[(d, g.id)]
            va = vertex_sequence(source, a)
            vb = vertex_sequence(interval, b)
            seq = [x if t == 1 else 0 for x, t in zip(va, vb)]
            images[(d, g.id)] = simplex_with_vertices(target, seq)
    homotopy = SimplicialMap(cyl.space, target, images, check=True)
    inclusion_images = {}
    for d in range(source.top_dim + 1):
        for g in source.gens(d):
            inclusion_images[(d, g.id)] = simplex_with_vertices(
                target, vertex_sequence(source, SimplexRef(d, g.id)))
    inclusion = SimplicialMap(source, target, inclusion_images, check=True)
    return ("horn into triangle", constant_map(source, target, 0),
            inclusion, homotopy, cyl)


def homotopy_corpus():
    """(name, f, g, homotopy, cylinder) tuples: constant homotopies on the
    closed catalog spaces plus genuine contractions of the cone-shaped
    ones and one cross-space homotopy."""
    corpus = []
    for name in ("point", "circle", "torus", "klein"):
        space = catalog(name)
        cyl = cylinder(space)
        ident = identity_map(space)
        corpus.append((f"constant:{name}", ident, ident,
                       constant_homotopy(ident, cyl), cyl))
    for name in ("delta:1", "delta:2", "horn:2:0"):
        space = catalog(name)
        cyl = cylinder(space)
        corpus.append((f"contraction:{name}",
                       constant_map(space, space, 0),
                       identity_map(space),
                       meet_contraction(space, cyl), cyl))
    corpus.append(cross_space_contraction())
    return corpus


@pytest.fixture(scope="session")
def homotopies():
    return homotopy_corpus()
