"""Homology of chain complexes and the exact-sequence machinery.

Groups are computed by Smith normal form as subquotients ker/im with
explicit generator representatives, so induced maps and connecting
homomorphisms come out as integer matrices and exactness of a sequence
is decided by exact lattice comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroup import AbelianGroup
from .chains import ChainComplex, normalized_chains, relative_chains
from .intmatrix import IntegerMatrix, mod_rank, rational_rank
from .snf import Subquotient, lattice_equal, smith_normal_form
from .sset import SimplicialSet, SubcomplexResult, subcomplex


# ---------------------------------------------------------------------------
# Degree-by-degree homology with generators


def _kernel_gens(mat: IntegerMatrix) -> IntegerMatrix:
    return IntegerMatrix.from_columns(smith_normal_form(mat).kernel_basis(), rows=mat.cols)


def homology_data(c: ChainComplex, n: int) -> Subquotient:
    """H_n = ker d_n / im d_{n+1} with representatives."""
    rank = c.rank(n)
    if n == 0:
        big = IntegerMatrix.identity(rank)
    else:
        big = _kernel_gens(c.boundary(n))
    small = c.boundary(n + 1)
    return Subquotient(big, small)


def homology(c: ChainComplex, degrees=None, reduced: bool = False) -> list[AbelianGroup]:
    """Homology groups per degree (default all degrees of the complex)."""
    c.verify_dd_zero()
    if degrees is None:
        degrees = range(c.max_degree + 1)
    out = []
    for n in degrees:
        g = homology_data(c, n).group
        if reduced and n == 0:
            if g.betti < 1:
                raise ValueError("reduced homology needs a nonempty complex")
            g = AbelianGroup(g.betti - 1, g.torsion)
        out.append(g)
    return out


def homology_of_space(space: SimplicialSet, degrees=None, reduced: bool = False) -> list[AbelianGroup]:
    return homology(normalized_chains(space), degrees, reduced)


def betti_numbers_rational(c: ChainComplex) -> list[int]:
    """Betti numbers by rational ranks only (independent of SNF)."""
    return [c.rank(n) - rational_rank(c.boundary(n)) - rational_rank(c.boundary(n + 1))
            for n in range(c.max_degree + 1)]


def mod_betti_numbers(c: ChainComplex, p: int) -> list[int]:
    """dim H_n(C; Z/p) over the field Z/p, via mod-p ranks."""
    return [c.rank(n) - mod_rank(c.boundary(n), p) - mod_rank(c.boundary(n + 1), p)
            for n in range(c.max_degree + 1)]


# ---------------------------------------------------------------------------
# Maps between computed groups, and exactness


@dataclass
class GroupData:
    """A computed group presented by generators: torsion orders are paired
    with their generator positions (free generators carry no relation)."""

    group: AbelianGroup
    n_generators: int
    relations: list[tuple[int, int]]  # (generator index, order)

    @classmethod
    def from_subquotient(cls, sq: Subquotient) -> "GroupData":
        return cls(sq.group, sq.n_generators,
                   [(k, d) for k, d in enumerate(sq.torsion_orders)])

    @classmethod
    def zero(cls) -> "GroupData":
        return cls(AbelianGroup.trivial(), 0, [])

    def direct_sum(self, other: "GroupData") -> "GroupData":
        rels = list(self.relations)
        rels += [(self.n_generators + k, d) for k, d in other.relations]
        return GroupData(self.group.direct_sum(other.group),
                         self.n_generators + other.n_generators, rels)

    def relations_matrix(self) -> IntegerMatrix:
        cols = []
        for k, d in self.relations:
            col = [0] * self.n_generators
            col[k] = d
            cols.append(col)
        return IntegerMatrix.from_columns(cols, rows=self.n_generators)


def induced_matrix(src: Subquotient, dst: Subquotient, push) -> IntegerMatrix:
    """Matrix of the map sending each source generator class through the
    chain-level function ``push`` and reducing in the target."""
    cols = [list(dst.reduce(push(vec))) for vec in src.generator_vectors()]
    return IntegerMatrix.from_columns(cols, rows=dst.n_generators)


def exact_at(incoming: IntegerMatrix, outgoing: IntegerMatrix,
             here: GroupData, after: GroupData) -> bool:
    """Is im(incoming) = ker(outgoing) inside the group ``here``?

    Both maps are given by integer lifts on presentation generators;
    ``after`` presents the target of the outgoing map.
    """
    m = here.n_generators
    if incoming.rows != m or outgoing.cols != m:
        raise ValueError("map shapes do not match the group")
    rel_here = here.relations_matrix()
    image = incoming.hstack(rel_here)
    stacked = outgoing.hstack(after.relations_matrix())
    kernel_cols = [vec[:m] for vec in smith_normal_form(stacked).kernel_basis()]
    kernel = IntegerMatrix.from_columns(kernel_cols, rows=m).hstack(rel_here)
    return lattice_equal(image, kernel)


@dataclass
class SequenceNode:
    label: str
    group: AbelianGroup
    exact: bool


@dataclass
class ExactSequenceReport:
    kind: str
    nodes: list[SequenceNode]
    groups: dict[str, AbelianGroup] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(node.exact for node in self.nodes)

    def lines(self) -> list[str]:
        out = []
        for node in self.nodes:
            status = "PASS" if node.exact else "FAIL"
            out.append(f"{status} exact at {node.label} [{node.group}]")
        return out


def _zero_map(n_rows: int) -> IntegerMatrix:
    return IntegerMatrix.zero(n_rows, 0)


# ---------------------------------------------------------------------------
# The long exact sequence of a pair


def _as_subcomplex(space: SimplicialSet, sub) -> SubcomplexResult:
    if isinstance(sub, SubcomplexResult):
        return sub
    return subcomplex(space, sub)


def _inclusion_push(sub: SubcomplexResult, dim: int, total_rank: int):
    """Chain-level inclusion of a subcomplex in degree ``dim``."""
    old_of_new = {}
    for (d, old), new in sub.new_id.items():
        if d == dim:
            old_of_new[new] = old

    def push(vec):
        out = [0] * total_rank
        for k, v in enumerate(vec):
            out[old_of_new[k]] = v
        return out

    return push


def pair_les(space: SimplicialSet, sub, up_to: int | None = None) -> ExactSequenceReport:
    """... -> H_p(L) -> H_p(K) -> H_p(K, L) -> H_{p-1}(L) -> ...

    The connecting map is computed constructively: lift a relative cycle,
    apply the ambient boundary, read the result in the subcomplex.
    Exactness is verified at every node.
    """
    L = _as_subcomplex(space, sub)
    ck = normalized_chains(space)
    cl = normalized_chains(L.space)
    rel = relative_chains(space, L.id_set)
    top = space.top_dim if up_to is None else min(up_to, space.top_dim)

    hl = [homology_data(cl, p) for p in range(top + 1)]
    hk = [homology_data(ck, p) for p in range(top + 1)]
    hrel = [homology_data(rel.complex, p) for p in range(top + 1)]

    def incl(p):
        push = _inclusion_push(L, p, ck.rank(p))
        return induced_matrix(hl[p], hk[p], push)

    def proj(p):
        def push(vec):
            return [vec[gid] for gid in rel.ambient_index[p]]
        return induced_matrix(hk[p], hrel[p], push)

    def connecting(p):
        if p == 0:
            return IntegerMatrix.zero(0, hrel[0].n_generators)
        lid_of_gid = {}
        for (d, old), new in L.new_id.items():
            if d == p - 1:
                lid_of_gid[old] = new

        def push(vec):
            lift = [0] * ck.rank(p)
            for k, gid in enumerate(rel.ambient_index[p]):
                lift[gid] = vec[k]
            w = ck.boundary(p).apply(lift)
            out = [0] * cl.rank(p - 1)
            for gid, v in enumerate(w):
                if v == 0:
                    continue
                lid = lid_of_gid.get(gid)
                if lid is None:
                    raise AssertionError("connecting map left the subcomplex")
                out[lid] = v
            return out

        return induced_matrix(hrel[p], hl[p - 1], push)

    i_maps = [incl(p) for p in range(top + 1)]
    j_maps = [proj(p) for p in range(top + 1)]
    d_maps = [connecting(p) for p in range(top + 1)]

    gd_l = [GroupData.from_subquotient(x) for x in hl]
    gd_k = [GroupData.from_subquotient(x) for x in hk]
    gd_r = [GroupData.from_subquotient(x) for x in hrel]
    zero = GroupData.zero()

    nodes = []
    groups = {}
    for p in range(top, -1, -1):
        groups[f"H_{p}(L)"] = gd_l[p].group
        groups[f"H_{p}(K)"] = gd_k[p].group
        groups[f"H_{p}(K,L)"] = gd_r[p].group
        incoming = d_maps[p + 1] if p + 1 <= top else _zero_map(gd_l[p].n_generators)
        nodes.append(SequenceNode(
            f"H_{p}(L)", gd_l[p].group,
            exact_at(incoming, i_maps[p], gd_l[p], gd_k[p])))
        nodes.append(SequenceNode(
            f"H_{p}(K)", gd_k[p].group,
            exact_at(i_maps[p], j_maps[p], gd_k[p], gd_r[p])))
        after = gd_l[p - 1] if p >= 1 else zero
        outgoing = d_maps[p] if p >= 1 else IntegerMatrix.zero(0, gd_r[p].n_generators)
        nodes.append(SequenceNode(
            f"H_{p}(K,L)", gd_r[p].group,
            exact_at(j_maps[p], outgoing, gd_r[p], after)))
    return ExactSequenceReport("pair", nodes, groups)


def relative_homology(space: SimplicialSet, sub, degrees=None) -> list[AbelianGroup]:
    L = _as_subcomplex(space, sub)
    if degrees is None:
        degrees = range(space.top_dim + 1)
    return homology(relative_chains(space, L.id_set).complex, degrees)


def connecting_matrix(space: SimplicialSet, sub, p: int) -> tuple[IntegerMatrix, AbelianGroup, AbelianGroup]:
    """The connecting homomorphism H_p(K, L) -> H_{p-1}(L) as a matrix on
    presentation generators, with both groups."""
    L = _as_subcomplex(space, sub)
    ck = normalized_chains(space)
    cl = normalized_chains(L.space)
    rel = relative_chains(space, L.id_set)
    h_rel = homology_data(rel.complex, p)
    h_l = homology_data(cl, p - 1)
    lid_of_gid = {old: new for (d, old), new in L.new_id.items() if d == p - 1}

    def push(vec):
        lift = [0] * ck.rank(p)
        for k, gid in enumerate(rel.ambient_index[p]):
            lift[gid] = vec[k]
        w = ck.boundary(p).apply(lift)
        out = [0] * cl.rank(p - 1)
        for gid, v in enumerate(w):
            if v:
                out[lid_of_gid[gid]] = v
        return out

    return induced_matrix(h_rel, h_l, push), h_rel.group, h_l.group


# ---------------------------------------------------------------------------
# Mayer-Vietoris


def mayer_vietoris(space: SimplicialSet, a_sub, b_sub, up_to: int | None = None) -> ExactSequenceReport:
    """The Mayer-Vietoris sequence of a generator-wise cover K = A u B,
    with the connecting map from the explicit chain splitting."""
    A = _as_subcomplex(space, a_sub)
    B = _as_subcomplex(space, b_sub)
    all_ids = {(d, g.id) for d in range(space.top_dim + 1) for g in space.gens(d)}
    if A.id_set | B.id_set != all_ids:
        missing = sorted(all_ids - (A.id_set | B.id_set))
        raise ValueError(f"A u B misses generators {missing}")
    AB = subcomplex(space, A.id_set & B.id_set)

    ck = normalized_chains(space)
    ca = normalized_chains(A.space)
    cb = normalized_chains(B.space)
    cab = normalized_chains(AB.space)
    top = space.top_dim if up_to is None else min(up_to, space.top_dim)

    h_ab = [homology_data(cab, p) for p in range(top + 1)]
    h_a = [homology_data(ca, p) for p in range(top + 1)]
    h_b = [homology_data(cb, p) for p in range(top + 1)]
    h_k = [homology_data(ck, p) for p in range(top + 1)]

    def sub_push(sub: SubcomplexResult, inner: SubcomplexResult, dim: int, inner_rank: int):
        """Chain inclusion of ``inner`` into ``sub`` (both subcomplexes of K)."""
        old_of_inner = {new: old for (d, old), new in inner.new_id.items() if d == dim}

        def push(vec):
            out = [0] * sub.space.n_gens(dim)
            for k, v in enumerate(vec):
                if v:
                    out[sub.new_id[(dim, old_of_inner[k])]] = v
            return out

        return push

    def alpha(p):
        pa = sub_push(A, AB, p, cab.rank(p))
        pb = sub_push(B, AB, p, cab.rank(p))
        cols = []
        for vec in h_ab[p].generator_vectors():
            ca_coords = list(h_a[p].reduce(pa(vec)))
            cb_coords = list(h_b[p].reduce(pb(vec)))
            cols.append(ca_coords + cb_coords)
        rows = h_a[p].n_generators + h_b[p].n_generators
        return IntegerMatrix.from_columns(cols, rows=rows)

    def beta(p):
        pha = _inclusion_push(A, p, ck.rank(p))
        phb = _inclusion_push(B, p, ck.rank(p))
        cols = []
        for vec in h_a[p].generator_vectors():
            cols.append(list(h_k[p].reduce(pha(vec))))
        for vec in h_b[p].generator_vectors():
            cols.append([-v for v in h_k[p].reduce(phb(vec))])
        return IntegerMatrix.from_columns(cols, rows=h_k[p].n_generators)

    a_gids = [{old for (d, old) in A.id_set if d == dim} for dim in range(space.top_dim + 1)]

    def connecting(p):
        if p == 0:
            return IntegerMatrix.zero(0, h_k[0].n_generators)
        ab_of_gid = {old: new for (d, old), new in AB.new_id.items() if d == p - 1}

        def push(vec):
            za = [v if gid in a_gids[p] else 0 for gid, v in enumerate(vec)]
            w = ck.boundary(p).apply(za)
            out = [0] * cab.rank(p - 1)
            for gid, v in enumerate(w):
                if v:
                    out[ab_of_gid[gid]] = v
            return out

        return induced_matrix(h_k[p], h_ab[p - 1], push)

    alphas = [alpha(p) for p in range(top + 1)]
    betas = [beta(p) for p in range(top + 1)]
    deltas = [connecting(p) for p in range(top + 1)]

    gd_ab = [GroupData.from_subquotient(x) for x in h_ab]
    gd_sum = [GroupData.from_subquotient(h_a[p]).direct_sum(GroupData.from_subquotient(h_b[p]))
              for p in range(top + 1)]
    gd_k = [GroupData.from_subquotient(x) for x in h_k]
    zero = GroupData.zero()

    nodes = []
    groups = {}
    for p in range(top, -1, -1):
        groups[f"H_{p}(AnB)"] = gd_ab[p].group
        groups[f"H_{p}(A)+H_{p}(B)"] = gd_sum[p].group
        groups[f"H_{p}(K)"] = gd_k[p].group
        incoming = deltas[p + 1] if p + 1 <= top else _zero_map(gd_ab[p].n_generators)
        nodes.append(SequenceNode(
            f"H_{p}(AnB)", gd_ab[p].group,
            exact_at(incoming, alphas[p], gd_ab[p], gd_sum[p])))
        nodes.append(SequenceNode(
            f"H_{p}(A)+H_{p}(B)", gd_sum[p].group,
            exact_at(alphas[p], betas[p], gd_sum[p], gd_k[p])))
        after = gd_ab[p - 1] if p >= 1 else zero
        outgoing = deltas[p] if p >= 1 else IntegerMatrix.zero(0, gd_k[p].n_generators)
        nodes.append(SequenceNode(
            f"H_{p}(K)", gd_k[p].group,
            exact_at(betas[p], outgoing, gd_k[p], after)))
    return ExactSequenceReport("mayer-vietoris", nodes, groups)


# ---------------------------------------------------------------------------
# Coefficients, cohomology, universal coefficients


def _mod_kernel_lattice(mat: IntegerMatrix, modulus: int) -> IntegerMatrix:
    """Generators of {x : mat x = 0 mod modulus} as a sublattice of Z^cols."""
    stacked = mat.hstack(IntegerMatrix.diagonal([modulus] * mat.rows, mat.rows, mat.rows))
    cols = [vec[:mat.cols] for vec in smith_normal_form(stacked).kernel_basis()]
    return IntegerMatrix.from_columns(cols, rows=mat.cols)


def homology_mod_data(c: ChainComplex, n: int, modulus: int) -> Subquotient:
    """H_n(C; Z/modulus) as a subquotient of the integral chains."""
    rank = c.rank(n)
    if n == 0:
        big = IntegerMatrix.identity(rank)
    else:
        big = _mod_kernel_lattice(c.boundary(n), modulus)
    small = c.boundary(n + 1).hstack(
        IntegerMatrix.diagonal([modulus] * rank, rank, rank))
    return Subquotient(big, small)


def with_coefficients(c: ChainComplex, coeffs: AbelianGroup, degrees=None) -> list[AbelianGroup]:
    """Homology of C (x) coeffs, cyclic summand by cyclic summand."""
    if degrees is None:
        degrees = range(c.max_degree + 1)
    integral = {}
    out = []
    for n in degrees:
        parts = []
        if coeffs.betti:
            if n not in integral:
                integral[n] = homology_data(c, n).group
            parts.extend([integral[n]] * coeffs.betti)
        for d in coeffs.torsion:
            parts.append(homology_mod_data(c, n, d).group)
        total = AbelianGroup.trivial()
        for g in parts:
            total = total.direct_sum(g)
        out.append(total)
    return out


def cohomology_data(c: ChainComplex, n: int, modulus: int = 0) -> Subquotient:
    """H^n with Z (modulus 0) or Z/modulus coefficients, as a subquotient
    of the integral cochains Hom(C_n, Z)."""
    delta_out = c.boundary(n + 1).transpose()   # C^n -> C^{n+1}
    delta_in = c.boundary(n).transpose()        # C^{n-1} -> C^n
    rank = c.rank(n)
    if modulus == 0:
        big = _kernel_gens(delta_out)
        small = delta_in
    else:
        big = _mod_kernel_lattice(delta_out, modulus)
        small = delta_in.hstack(IntegerMatrix.diagonal([modulus] * rank, rank, rank))
    return Subquotient(big, small)


def cohomology(c: ChainComplex, coeffs: AbelianGroup, degrees=None) -> list[AbelianGroup]:
    """Cohomology of Hom(C, coeffs), cyclic summand by cyclic summand."""
    if degrees is None:
        degrees = range(c.max_degree + 1)
    out = []
    for n in degrees:
        parts = []
        parts.extend([cohomology_data(c, n, 0).group] * coeffs.betti)
        for d in coeffs.torsion:
            parts.append(cohomology_data(c, n, d).group)
        total = AbelianGroup.trivial()
        for g in parts:
            total = total.direct_sum(g)
        out.append(total)
    return out


def cohomology_of_pair(space: SimplicialSet, sub, coeffs: AbelianGroup, degrees=None) -> list[AbelianGroup]:
    """H^*(K, L; coeffs); pass an empty subcomplex for absolute cohomology."""
    L = _as_subcomplex(space, sub) if sub is not None else None
    if L is None or not L.id_set:
        c = normalized_chains(space)
    else:
        c = relative_chains(space, L.id_set).complex
    if degrees is None:
        degrees = range(space.top_dim + 1)
    return cohomology(c, coeffs, degrees)


@dataclass
class UctReport:
    degrees: list[int]
    homology_sides: list[tuple[AbelianGroup, AbelianGroup]]
    cohomology_sides: list[tuple[AbelianGroup, AbelianGroup]]

    @property
    def passed(self) -> bool:
        return (all(a == b for a, b in self.homology_sides)
                and all(a == b for a, b in self.cohomology_sides))

    def lines(self) -> list[str]:
        out = []
        for n, (lhs, rhs) in zip(self.degrees, self.homology_sides):
            ok = "PASS" if lhs == rhs else "FAIL"
            out.append(f"{ok} H_{n}: direct {lhs} vs tensor/Tor {rhs}")
        for n, (lhs, rhs) in zip(self.degrees, self.cohomology_sides):
            ok = "PASS" if lhs == rhs else "FAIL"
            out.append(f"{ok} H^{n}: direct {lhs} vs Hom/Ext {rhs}")
        return out


def uct_check(space: SimplicialSet, coeffs: AbelianGroup, degrees=None) -> UctReport:
    """Universal coefficients, both directions, both sides computed
    independently: H_n(K; G) vs H_n (x) G + Tor(H_{n-1}, G) and
    H^n(K; G) vs Hom(H_n, G) + Ext(H_{n-1}, G)."""
    c = normalized_chains(space)
    if degrees is None:
        degrees = list(range(c.max_degree + 1))
    else:
        degrees = list(degrees)
    integral = [homology_data(c, n).group for n in range(c.max_degree + 2)]

    def h_int(n):
        return integral[n] if 0 <= n < len(integral) else AbelianGroup.trivial()

    hom_sides = []
    coh_sides = []
    for n in degrees:
        direct_h = with_coefficients(c, coeffs, [n])[0]
        predicted_h = h_int(n).tensor(coeffs).direct_sum(h_int(n - 1).tor(coeffs))
        hom_sides.append((direct_h, predicted_h))
        direct_c = cohomology(c, coeffs, [n])[0]
        predicted_c = h_int(n).hom(coeffs).direct_sum(h_int(n - 1).ext(coeffs))
        coh_sides.append((direct_c, predicted_c))
    return UctReport(degrees, hom_sides, coh_sides)
