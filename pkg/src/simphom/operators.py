"""Explicit chain-level operators: the prism homotopy, the
Alexander-Whitney and shuffle maps, cup and cross products, and the
Kunneth comparison.

Conventions fixed once: front_p takes vertices 0..p and back_q takes
vertices p..p+q; the shuffle sign is (-1)^{#(s,t): s in S, t in T, s<t}
for the partition S (degeneracies on the left factor) and T (right);
the tensor differential carries the Koszul sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abgroup import AbelianGroup
from .chains import (
    ChainComplex,
    ChainHomotopy,
    ChainMap,
    TensorComplex,
    chain_map_of,
    normalized_chains,
    tensor_complex,
)
from .homology import Subquotient, cohomology_data, homology_data
from .intmatrix import IntegerMatrix
from .simplex import SimplexRef
from .sset import ProductResult, SimplicialMap, SimplicialSet, product, std_simplex


# ---------------------------------------------------------------------------
# Cylinders and the prism operator


@dataclass
class Cylinder:
    """K x Delta[1] with its two ends and the projection to K."""

    base: SimplicialSet
    prod: ProductResult
    end0: SimplicialMap   # K -> K x Delta[1] at vertex 0
    end1: SimplicialMap
    projection: SimplicialMap

    @property
    def space(self) -> SimplicialSet:
        return self.prod.space


def cylinder(space: SimplicialSet) -> Cylinder:
    interval = std_simplex(1)
    pr = product(space, interval)

    def end(vertex: int) -> SimplicialMap:
        images = {}
        for d in range(space.top_dim + 1):
            word = tuple(range(d - 1, -1, -1))
            for g in space.gens(d):
                images[(d, g.id)] = pr.ref_of_pair(
                    SimplexRef(d, g.id), SimplexRef(0, vertex, word))
        return SimplicialMap(space, pr.space, images, check=False)

    return Cylinder(space, pr, end(0), end(1), pr.proj_left)


def constant_homotopy(f: SimplicialMap, cyl: Cylinder) -> SimplicialMap:
    """The homotopy f . projection from f to itself."""
    return f.compose(cyl.projection)


def prism_homotopy(homotopy: SimplicialMap, cyl: Cylinder) -> ChainHomotopy:
    """The chain homotopy of a simplicial homotopy H : K x Delta[1] -> L.

    D(sigma) = sum_i (-1)^i H(s_i sigma, eta_i) where eta_i sends
    0..i to 0 and i+1..n+1 to 1.  Satisfies dD + Dd = (H.end1)# - (H.end0)#.
    """
    if homotopy.source is not cyl.space:
        raise ValueError("homotopy must start from the given cylinder")
    K = cyl.base
    L = homotopy.target
    src = normalized_chains(K)
    tgt = normalized_chains(L)
    mats = {}
    for n in range(K.top_dim + 1):
        mat = IntegerMatrix.zero(tgt.rank(n + 1), src.rank(n))
        for g in K.gens(n):
            for i in range(n + 1):
                # eta_i: the (n+1)-simplex of Delta[1] jumping after i
                eta_word = tuple(j for j in range(n, -1, -1) if j != i)
                eta = SimplexRef(1, 0, eta_word)
                prism_cell = cyl.prod.ref_of_pair(
                    K.degeneracy(SimplexRef(n, g.id), i), eta)
                img = homotopy.apply(prism_cell)
                if not img.is_degenerate:
                    mat.data[img.base_id][g.id] += (-1) ** i
        mats[n] = mat
    return ChainHomotopy(src, tgt, mats)


@dataclass
class HomotopyReport:
    prism_identity_holds: bool
    ends_match: bool
    degrees_compared: list[int]
    induced_maps_equal: bool

    @property
    def passed(self) -> bool:
        return self.prism_identity_holds and self.ends_match and self.induced_maps_equal

    def lines(self) -> list[str]:
        return [
            ("PASS" if self.ends_match else "FAIL") + " homotopy restricts to f and g on the ends",
            ("PASS" if self.prism_identity_holds else "FAIL") + " dD + Dd = g# - f# entry-exact",
            ("PASS" if self.induced_maps_equal else "FAIL")
            + f" induced maps agree on homology in degrees {self.degrees_compared}",
        ]


def homotopic_maps_equal_on_homology(f: SimplicialMap, g: SimplicialMap,
                                     homotopy: SimplicialMap, cyl: Cylinder) -> HomotopyReport:
    """Verify f ~ g via the prism identity and compare f*, g* in every
    degree of the source."""
    ends_match = (homotopy.compose(cyl.end0).same_images(f)
                  and homotopy.compose(cyl.end1).same_images(g))
    src = normalized_chains(cyl.base)
    tgt = normalized_chains(homotopy.target)
    f_chain = chain_map_of(f, src, tgt)
    g_chain = chain_map_of(g, src, tgt)
    D = prism_homotopy(homotopy, cyl)
    identity_holds = D.is_homotopy_between(f_chain, g_chain)
    degrees = list(range(cyl.base.top_dim + 1))
    equal = True
    for n in degrees:
        h_src = homology_data(src, n)
        h_tgt = homology_data(tgt, n)
        for vec in h_src.generator_vectors():
            fv = h_tgt.reduce(f_chain.matrix(n).apply(vec))
            gv = h_tgt.reduce(g_chain.matrix(n).apply(vec))
            if fv != gv:
                equal = False
    return HomotopyReport(identity_holds, ends_match, degrees, equal)


# ---------------------------------------------------------------------------
# Alexander-Whitney and Eilenberg-Zilber


def _front(space: SimplicialSet, ref: SimplexRef, p: int) -> SimplexRef:
    for t in range(ref.dim, p, -1):
        ref = space.face(ref, t)
    return ref


def _back(space: SimplicialSet, ref: SimplexRef, q: int) -> SimplexRef:
    for _ in range(ref.dim - q):
        ref = space.face(ref, 0)
    return ref


def _shuffle_sign(left_word: tuple[int, ...], right_word: tuple[int, ...]) -> int:
    inversions = sum(1 for s in left_word for t in right_word if s < t)
    return -1 if inversions % 2 else 1


@dataclass
class EilenbergZilberData:
    prod: ProductResult
    tensor: TensorComplex
    aw: ChainMap   # N(K x L) -> N(K) (x) N(L)
    ez: ChainMap   # N(K) (x) N(L) -> N(K x L)


def alexander_whitney(prod: ProductResult) -> EilenbergZilberData:
    """Both comparison maps for a product, verified to be chain maps with
    AW . EZ = id on the tensor complex."""
    K, L = prod.left, prod.right
    ck = normalized_chains(K)
    cl = normalized_chains(L)
    tc = tensor_complex(ck, cl)
    cp = normalized_chains(prod.space)

    aw_mats = {}
    for n in range(prod.space.top_dim + 1):
        mat = IntegerMatrix.zero(tc.complex.rank(n), cp.rank(n))
        for g in prod.space.gens(n):
            a, b = prod.pair_of_gen[(n, g.id)]
            for i in range(n + 1):
                fr = _front(K, a, i)
                bk = _back(L, b, n - i)
                if fr.is_degenerate or bk.is_degenerate:
                    continue
                row = tc.index[(i, fr.base_id, n - i, bk.base_id)]
                mat.data[row][g.id] += 1
        aw_mats[n] = mat
    aw = ChainMap(cp, tc.complex, aw_mats, check=True)

    ez_mats = {}
    for n in range(tc.complex.max_degree + 1):
        mat = IntegerMatrix.zero(cp.rank(n), tc.complex.rank(n))
        if n > prod.space.top_dim:
            ez_mats[n] = mat
            continue
        for col, ((p, i), (q, j)) in enumerate(tc.basis[n]):
            for s_set in itertools.combinations(range(n), q):
                t_set = tuple(t for t in range(n) if t not in s_set)
                left_word = tuple(reversed(s_set))
                right_word = tuple(reversed(t_set))
                key = (p, i, left_word, q, j, right_word)
                gid = prod.gen_of_pair[key]
                mat.data[gid][col] += _shuffle_sign(left_word, right_word)
        ez_mats[n] = mat
    ez = ChainMap(tc.complex, cp, ez_mats, check=True)

    data = EilenbergZilberData(prod, tc, aw, ez)
    for n in range(tc.complex.max_degree + 1):
        composite = aw.matrix(n) * ez.matrix(n)
        if composite != IntegerMatrix.identity(tc.complex.rank(n)):
            raise AssertionError(f"AW.EZ != id in degree {n}")
    return data


def shuffle_ez(prod: ProductResult) -> ChainMap:
    return alexander_whitney(prod).ez


# ---------------------------------------------------------------------------
# Cochains and cup products


@dataclass
class Cochain:
    """A homogeneous cochain: values on the non-degenerate generators,
    with coefficients Z (modulus 0) or Z/modulus."""

    degree: int
    modulus: int
    values: tuple[int, ...]

    def normalized(self) -> "Cochain":
        if self.modulus:
            return Cochain(self.degree, self.modulus,
                           tuple(v % self.modulus for v in self.values))
        return self

    def value_on(self, ref: SimplexRef) -> int:
        if ref.is_degenerate:
            return 0
        return self.values[ref.base_id]


def coboundary(space: SimplicialSet, c: Cochain, chains: ChainComplex | None = None) -> Cochain:
    cc = chains if chains is not None else normalized_chains(space)
    mat = cc.boundary(c.degree + 1).transpose()
    vals = mat.apply(list(c.values))
    return Cochain(c.degree + 1, c.modulus, tuple(vals)).normalized()


def is_cocycle(space: SimplicialSet, c: Cochain, chains: ChainComplex | None = None) -> bool:
    delta = coboundary(space, c, chains)
    if c.modulus:
        return all(v % c.modulus == 0 for v in delta.values)
    return all(v == 0 for v in delta.values)


def cup_product(space: SimplicialSet, alpha: Cochain, beta: Cochain) -> Cochain:
    """(alpha u beta)(sigma) = alpha(front) * beta(back) on generators.

    Inputs must be cocycles over the same coefficient ring.
    """
    if alpha.modulus != beta.modulus:
        raise ValueError("cochains over different coefficient rings")
    chains = normalized_chains(space)
    for c in (alpha, beta):
        if not is_cocycle(space, c, chains):
            raise ValueError(f"degree {c.degree} input is not a cocycle")
    p, q = alpha.degree, beta.degree
    n = p + q
    vals = []
    for g in space.gens(n):
        ref = SimplexRef(n, g.id)
        fr = _front(space, ref, p)
        bk = _back(space, ref, q)
        vals.append(alpha.value_on(fr) * beta.value_on(bk))
    return Cochain(n, alpha.modulus, tuple(vals)).normalized()


@dataclass
class RingTable:
    space_name: str
    modulus: int
    basis: dict[int, list[Cochain]]             # degree -> cocycle representatives
    classes: dict[int, Subquotient]             # degree -> cohomology data
    products: dict[tuple[int, int, int, int], tuple[int, ...]]
    # (p, i, q, j) -> coordinates of [basis_p[i] u basis_q[j]] in H^{p+q}

    def coords(self, p: int, i: int, q: int, j: int) -> tuple[int, ...]:
        return self.products[(p, i, q, j)]

    def lines(self) -> list[str]:
        ring = "Z" if self.modulus == 0 else f"Z/{self.modulus}"
        out = [f"cup products of {self.space_name} with {ring} coefficients"]
        for p in sorted(self.basis):
            group = self.classes[p].group
            out.append(f"H^{p} = {group} with {len(self.basis[p])} generator(s)")
        header = f"{'left':>10} {'right':>10}   class"
        out.append(header)
        for (p, i, q, j), coords in sorted(self.products.items()):
            out.append(f"{f'a{p}_{i}':>10} {f'a{q}_{j}':>10}   {coords}")
        return out


def cohomology_ring_table(space: SimplicialSet, coeff_modulus: int,
                          degrees=None) -> RingTable:
    """Cup products of a chosen basis of cocycle representatives, reduced
    to canonical coordinates in the target cohomology group."""
    chains = normalized_chains(space)
    if degrees is None:
        degrees = range(chains.max_degree + 1)
    degrees = [n for n in degrees if n <= chains.max_degree]
    classes = {n: cohomology_data(chains, n, coeff_modulus) for n in degrees}
    basis = {
        n: [Cochain(n, coeff_modulus, tuple(vec)).normalized()
            for vec in classes[n].generator_vectors()]
        for n in degrees
    }
    products = {}
    for p in degrees:
        for q in degrees:
            n = p + q
            if n not in classes:
                continue
            for i, a in enumerate(basis[p]):
                for j, b in enumerate(basis[q]):
                    cup = cup_product(space, a, b)
                    products[(p, i, q, j)] = classes[n].reduce(list(cup.values))
    return RingTable(space.name or "K", coeff_modulus, basis, classes, products)


# ---------------------------------------------------------------------------
# Cross products and the Kunneth comparison


@dataclass
class CrossProductEntry:
    left_degree: int
    left_index: int
    right_degree: int
    right_index: int
    target_coords: tuple[int, ...]


def cross_product(prod: ProductResult) -> list[CrossProductEntry]:
    """The homology pairing H_p(K) (x) H_q(L) -> H_{p+q}(K x L) on the
    computed generators, via the shuffle map on representative cycles."""
    K, L = prod.left, prod.right
    ez_data = alexander_whitney(prod)
    ck = ez_data.aw.source  # N(K x L)
    ck_target = normalized_chains(prod.space)
    tc = ez_data.tensor
    cl_k = normalized_chains(K)
    cl_l = normalized_chains(L)
    entries = []
    h_prod = {}
    for p in range(cl_k.max_degree + 1):
        hk = homology_data(cl_k, p)
        for q in range(cl_l.max_degree + 1):
            hl = homology_data(cl_l, q)
            n = p + q
            if n not in h_prod:
                h_prod[n] = homology_data(ck_target, n)
            for i, zk in enumerate(hk.generator_vectors()):
                for j, zl in enumerate(hl.generator_vectors()):
                    tensor_vec = [0] * tc.complex.rank(n)
                    for a, va in enumerate(zk):
                        if va == 0:
                            continue
                        for b, vb in enumerate(zl):
                            if vb:
                                tensor_vec[tc.index[(p, a, q, b)]] += va * vb
                    cycle = ez_data.ez.matrix(n).apply(tensor_vec)
                    entries.append(CrossProductEntry(
                        p, i, q, j, h_prod[n].reduce(cycle)))
    return entries


@dataclass
class KunnethReport:
    degrees: list[int]
    sides: list[tuple[AbelianGroup, AbelianGroup]]

    @property
    def passed(self) -> bool:
        return all(a == b for a, b in self.sides)

    def lines(self) -> list[str]:
        out = []
        for n, (lhs, rhs) in zip(self.degrees, self.sides):
            ok = "PASS" if lhs == rhs else "FAIL"
            out.append(f"{ok} H_{n}(KxL) = {lhs} vs tensor/Tor sum {rhs}")
        return out


def kunneth_check(left: SimplicialSet, right: SimplicialSet,
                  up_to: int | None = None,
                  prod: ProductResult | None = None) -> KunnethReport:
    """Compare H(K x L) against sum of H(K) (x) H(L) plus the Tor shift,
    both sides computed independently."""
    if prod is None:
        prod = product(left, right)
    hk = [homology_data(normalized_chains(left), p).group
          for p in range(left.top_dim + 1)]
    hl = [homology_data(normalized_chains(right), q).group
          for q in range(right.top_dim + 1)]
    cp = normalized_chains(prod.space)
    top = cp.max_degree if up_to is None else min(up_to, cp.max_degree)
    degrees = list(range(top + 1))
    sides = []
    for n in degrees:
        direct = homology_data(cp, n).group
        predicted = AbelianGroup.trivial()
        for p in range(n + 1):
            q = n - p
            if p < len(hk) and q < len(hl):
                predicted = predicted.direct_sum(hk[p].tensor(hl[q]))
        for p in range(n):
            q = n - 1 - p
            if p < len(hk) and q < len(hl):
                predicted = predicted.direct_sum(hk[p].tor(hl[q]))
        sides.append((direct, predicted))
    return KunnethReport(degrees, sides)
