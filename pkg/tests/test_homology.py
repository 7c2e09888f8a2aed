"""Homology groups, exact sequences, coefficients, and cohomology."""

import pytest

from simphom.abgroup import AbelianGroup
from simphom.catalog import catalog
from simphom.chains import normalized_chains, unnormalized_chains
from simphom.homology import (
    betti_numbers_rational,
    cohomology,
    cohomology_of_pair,
    connecting_matrix,
    homology,
    homology_of_space,
    mayer_vietoris,
    mod_betti_numbers,
    pair_les,
    relative_homology,
    uct_check,
    with_coefficients,
)
from simphom.sset import (
    boundary,
    coproduct,
    skeleton,
    std_simplex,
    subcomplex,
)

Z = AbelianGroup.free(1)
Z2 = AbelianGroup.cyclic(2)
trivial = AbelianGroup.trivial()


def groups_of(name):
    return homology_of_space(catalog(name))


def test_known_spaces(circle, torus, rp2, klein):
    assert homology_of_space(circle) == [Z, Z]
    assert homology_of_space(torus) == [Z, AbelianGroup.free(2), Z]
    assert homology_of_space(rp2) == [Z, Z2, trivial]
    assert homology_of_space(klein) == [Z, AbelianGroup(1, (2,)), trivial]
    assert homology_of_space(std_simplex(0)) == [Z]
    for n in range(2, 5):
        expected = [Z] + [trivial] * (n - 2) + [Z]
        assert homology_of_space(boundary(n)) == expected


def test_reduced_homology():
    assert homology(normalized_chains(std_simplex(0)), reduced=True) == [trivial]
    two = coproduct([std_simplex(0), std_simplex(0)]).space
    assert homology(normalized_chains(two), reduced=True) == [Z]


def test_h0_counts_components():
    pieces = coproduct([catalog("circle"), catalog("torus"), std_simplex(0)])
    h0 = homology_of_space(pieces.space, [0])[0]
    assert h0 == AbelianGroup.free(3)


def test_h0_is_free_on_components_everywhere():
    from simphom.catalog import all_catalog_spaces
    from simphom.pi1 import pi0
    for space in all_catalog_spaces():
        components = pi0(space).count
        h0 = homology_of_space(space, [0])[0]
        assert h0 == AbelianGroup.free(components), space.name


def test_additivity_on_coproducts():
    a, b = catalog("rp2"), catalog("circle")
    both = coproduct([a, b]).space
    ha, hb = homology_of_space(a), homology_of_space(b)
    hb = hb + [trivial] * (len(ha) - len(hb))
    assert homology_of_space(both) == [x.direct_sum(y) for x, y in zip(ha, hb)]


def test_normalized_equals_truncated_unnormalized(circle, torus, rp2, klein):
    for space in (circle, torus, rp2, klein, boundary(3), catalog("sphere:2")):
        top = space.top_dim
        normalized = homology(normalized_chains(space), range(top + 1))
        unnorm = homology(unnormalized_chains(space, top + 1), range(top + 1))
        assert normalized == unnorm


def test_relative_sphere_pairs():
    for p in (1, 2, 3):
        dp = std_simplex(p)
        rim = skeleton(dp, p - 1)
        groups = relative_homology(dp, rim)
        assert groups == [trivial] * p + [Z]


def test_connecting_map_is_isomorphism_onto_reduced():
    for p in (1, 2, 3):
        dp = std_simplex(p)
        rim = skeleton(dp, p - 1)
        mat, source, target = connecting_matrix(dp, rim, p)
        assert source == Z
        # the image of the generator has infinite order and spans the
        # reduced part: quotient of H_{p-1}(rim) by the image is Z for
        # p = 1 (two components) and trivial otherwise
        col = mat.column(0)
        assert any(v != 0 for v in col)
        from simphom.intmatrix import IntegerMatrix
        from simphom.snf import Subquotient
        rim_h = homology_of_space(rim.space, [p - 1])[0]
        ambient = IntegerMatrix.identity(rim_h.betti)
        quotient_group = Subquotient(ambient, IntegerMatrix.from_columns([col])).group
        if p == 1:
            assert quotient_group == Z
        else:
            assert quotient_group == trivial


def test_pair_les_exact_for_corpus_pairs(torus, rp2, klein):
    pairs = [
        (std_simplex(1), skeleton(std_simplex(1), 0)),
        (std_simplex(2), skeleton(std_simplex(2), 1)),
        (std_simplex(3), skeleton(std_simplex(3), 2)),
        (torus, skeleton(torus, 1)),
        (rp2, skeleton(rp2, 1)),
        (klein, skeleton(klein, 1)),
        (torus, skeleton(torus, 2)),
        (std_simplex(2), subcomplex(std_simplex(2), [(1, 0), (1, 1)])),
    ]
    for space, sub in pairs:
        report = pair_les(space, sub)
        assert report.passed, report.lines()


def test_pair_les_horn_is_homologically_trivial():
    d2 = std_simplex(2)
    horn_sub = subcomplex(d2, [(1, 0), (1, 1)])
    assert relative_homology(d2, horn_sub) == [trivial, trivial, trivial]


def test_mayer_vietoris_boundary_triangle():
    b2 = boundary(2)
    report = mayer_vietoris(b2, subcomplex(b2, [(1, 0), (1, 1)]),
                            subcomplex(b2, [(1, 2)]))
    assert report.passed
    assert report.groups["H_1(K)"] == Z


def test_mayer_vietoris_degenerate_cover(torus):
    report = mayer_vietoris(torus, skeleton(torus, 2), subcomplex(torus, []))
    assert report.passed


def test_mayer_vietoris_torus_two_cylinders(torus):
    a = subcomplex(torus, [(2, 0)])
    b = subcomplex(torus, [(2, 1)])
    report = mayer_vietoris(torus, a, b)
    assert report.passed
    assert report.groups["H_1(K)"] == AbelianGroup.free(2)


def test_mayer_vietoris_rejects_bad_cover(torus):
    with pytest.raises(ValueError):
        mayer_vietoris(torus, skeleton(torus, 1), skeleton(torus, 1))


def test_coefficients_rp2(rp2):
    c = normalized_chains(rp2)
    assert with_coefficients(c, Z2) == [Z2, Z2, Z2]
    assert with_coefficients(c, trivial) == [trivial, trivial, trivial]
    assert with_coefficients(c, Z) == homology(c)


def test_cohomology_rp2(rp2):
    c = normalized_chains(rp2)
    assert cohomology(c, Z) == [Z, trivial, Z2]
    assert cohomology(c, Z2) == [Z2, Z2, Z2]


def test_cohomology_of_pair():
    d2 = std_simplex(2)
    rim = skeleton(d2, 1)
    assert cohomology_of_pair(d2, rim, Z) == [trivial, trivial, Z]
    assert cohomology_of_pair(d2, None, Z) == [Z, trivial, trivial]


def test_uct_rp2_z2(rp2):
    report = uct_check(rp2, Z2, [0, 1, 2])
    assert report.passed
    assert [lhs for lhs, _ in report.homology_sides] == [Z2, Z2, Z2]


def test_uct_klein_z4(klein):
    report = uct_check(klein, AbelianGroup.cyclic(4))
    assert report.passed


def test_uct_with_integral_coefficients_reduces_to_homology(torus):
    report = uct_check(torus, Z)
    assert report.passed
    assert [lhs for lhs, _ in report.homology_sides] == homology_of_space(torus)


def test_uct_mixed_coefficients(rp2, torus):
    pi = AbelianGroup.parse("Z^2 + Z/4")
    for space in (rp2, torus):
        assert uct_check(space, pi).passed


def test_rational_and_mod2_cross_checks(circle, torus, rp2, klein):
    for space in (circle, torus, rp2, klein):
        c = normalized_chains(space)
        groups = homology(c)
        assert betti_numbers_rational(c) == [g.betti for g in groups]
        mod2 = mod_betti_numbers(c, 2)
        for n, g in enumerate(groups):
            below = groups[n - 1] if n else trivial
            expected = (g.betti + sum(1 for d in g.torsion if d % 2 == 0)
                        + sum(1 for d in below.torsion if d % 2 == 0))
            assert mod2[n] == expected


def test_euler_equals_alternating_betti(circle, torus, rp2, klein):
    from simphom.chains import euler_characteristic
    for space in (circle, torus, rp2, klein, boundary(3), catalog("sphere:2")):
        groups = homology_of_space(space)
        chi = sum((-1) ** n * g.betti for n, g in enumerate(groups))
        assert chi == euler_characteristic(space)


def test_corrupted_complex_detected():
    from simphom.chains import ChainComplex
    from simphom.intmatrix import IntegerMatrix
    with pytest.raises(ValueError):
        ChainComplex([1, 1, 1], {1: IntegerMatrix([[2]]), 2: IntegerMatrix([[3]])})
