"""Biset algebra: constructors, realization oracle, both composition engines."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bisetkit.bisets import (
    compose,
    cross,
    decompose_concrete,
    def_,
    disjoint_union,
    empty_concrete,
    identity_biset,
    ind,
    inf,
    iso,
    mackey_compose,
    oviz,
    realize_concrete,
    res,
    transitive,
    zero_element,
)
from bisetkit.errors import GroupMismatch, NotASubgroup, NotBijective
from bisetkit.groups import (
    GroupMap,
    Subgroup,
    cyclic_group,
    diagonal,
    direct_product,
    generated_subgroup,
    subgroup_lattice,
    symmetric_group,
    trivial_group,
)


def all_basis(h, g):
    p = direct_product(h, g)
    return [transitive(h, g, s) for s in subgroup_lattice(p).reps]


def test_transitive_identity_class(c2):
    idb = identity_biset(c2)
    (t, c), = idb.terms()
    assert c == 1 and t.stab.order == 2
    assert transitive(c2, c2, diagonal(c2)) == idb


def test_transitive_rejects_non_subgroup(c2):
    p = direct_product(c2, c2)
    with pytest.raises(NotASubgroup):
        transitive(c2, c2, Subgroup(p, (0, 1, 2)))


def test_free_biset_realizes_to_four_points(c2):
    p = direct_product(c2, c2)
    free = transitive(c2, c2, Subgroup(p, (0,)))
    (t, _), = free.terms()
    x = realize_concrete(t)
    assert x.n_points == 4
    assert x.check()
    assert decompose_concrete(x) == free


def test_ind_from_trivial_is_group_itself(c2, s3):
    b = ind(c2, Subgroup(c2, (0,)))
    (t, _), = b.terms()
    assert t.stab.order == 1
    assert realize_concrete(t).n_points == 2
    b2 = ind(s3, generated_subgroup(s3, [1]))
    (t2, _), = b2.terms()
    assert realize_concrete(t2).n_points == 6


def test_inf_def_stabilizers(c4, c2):
    n = generated_subgroup(c4, [2])
    b = inf(c4, n)
    (t, _), = b.terms()
    assert t.stab.order == 4
    d = def_(c4, n)
    (td, _), = d.terms()
    assert td.stab.order == 4


def test_iso_identity_is_identity_biset(s3):
    f = GroupMap(s3, s3, tuple(s3.elements()))
    assert iso(f) == identity_biset(s3)


def test_iso_rejects_non_bijective(c2, c4):
    f = GroupMap(c4, c2, (0, 1, 0, 1))
    with pytest.raises(NotBijective):
        iso(f)


def test_identity_realizes_to_order_points(c2):
    (t, _), = identity_biset(c2).terms()
    assert realize_concrete(t).n_points == 2


def test_decompose_realize_roundtrip_exhaustive(c2, c3, v4):
    for h in (c2, c3, v4):
        for g in (c2, c3):
            for b in all_basis(h, g):
                (t, _), = b.terms()
                assert decompose_concrete(realize_concrete(t)) == b


def test_decompose_disjoint_union_and_empty(c2):
    (t, _), = identity_biset(c2).terms()
    x = realize_concrete(t)
    two = disjoint_union(x, x)
    decomposed = decompose_concrete(two)
    assert decomposed == 2 * identity_biset(c2)
    assert decompose_concrete(empty_concrete(c2, c2)) == zero_element(c2, c2)


def test_res_after_ind_counts_cosets(c2):
    one = Subgroup(c2, (0,))
    r, i = res(one, c2), ind(c2, one)
    left = compose(r, i)
    (t, c), = left.terms()
    assert c == 2 and t.left.order == 1
    assert compose(i, r) == transitive(
        c2, c2, Subgroup(direct_product(c2, c2), (0,))
    )
    assert mackey_compose(r, i) == left


def test_identity_is_unit_exhaustive(c2, c3):
    for h in (c2, c3):
        for g in (c2, c3):
            for b in all_basis(h, g):
                assert compose(identity_biset(h), b) == b
                assert compose(b, identity_biset(g)) == b
                assert mackey_compose(identity_biset(h), b) == b
                assert mackey_compose(b, identity_biset(g)) == b


def test_compose_group_mismatch(c2, c3):
    with pytest.raises(GroupMismatch):
        compose(identity_biset(c2), identity_biset(c3))
    with pytest.raises(GroupMismatch):
        mackey_compose(identity_biset(c2), identity_biset(c3))


def test_engines_agree_exhaustive_small(c2, c3, v4):
    groups = (trivial_group(), c2, c3)
    for h in groups:
        for g in groups:
            for k in groups:
                for b in all_basis(h, g):
                    for a in all_basis(g, k):
                        assert compose(b, a) == mackey_compose(b, a)


def test_inf_then_def_idempotent(c4):
    n = generated_subgroup(c4, [2])
    e = mackey_compose(inf(c4, n), def_(c4, n))
    assert e != identity_biset(c4)
    assert mackey_compose(e, e) == e
    assert compose(inf(c4, n), def_(c4, n)) == e


def test_associativity_random_triples():
    rng = random.Random(1)
    groups = [trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)]
    done = 0
    while done < 100:
        h, g, k, j = (groups[rng.randrange(len(groups))] for _ in range(4))
        if h.order * g.order > 36 or g.order * k.order > 36 or k.order * j.order > 36:
            continue
        b1 = _random_elem(rng, h, g)
        b2 = _random_elem(rng, g, k)
        b3 = _random_elem(rng, k, j)
        lhs = compose(compose(b1, b2), b3)
        rhs = compose(b1, compose(b2, b3))
        assert lhs == rhs
        assert mackey_compose(mackey_compose(b1, b2), b3) == lhs
        done += 1


def _random_elem(rng, h, g):
    reps = subgroup_lattice(direct_product(h, g)).reps
    out = zero_element(h, g)
    for _ in range(rng.randint(1, 2)):
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        out = out + coeff * transitive(h, g, reps[rng.randrange(len(reps))])
    return out


def _as_g_set(g, members):
    """[G/K] viewed as a (G, 1)-biset."""
    one = trivial_group()
    p = direct_product(g, one)
    return transitive(g, one, Subgroup(p, members))


def test_cross_examples(c2, c3):
    idg, idh = identity_biset(c2), identity_biset(c3)
    assert cross(idg, idh) == identity_biset(direct_product(c2, c3))
    one = trivial_group()
    b1 = _as_g_set(c2, (0,))
    b2 = _as_g_set(c3, (0,))
    prod = cross(b1, b2)
    (t, c), = prod.terms()
    assert c == 1 and t.stab.order == 1
    x = realize_concrete(t)
    assert x.n_points == 6
    assert cross(b1, zero_element(c3, one)) == zero_element(
        direct_product(c2, c3), direct_product(one, one)
    )


def test_cross_bilinear(c2, c3):
    a = _as_g_set(c2, (0,))
    b = identity_biset(c3)
    lhs = cross(2 * a, b)
    assert lhs == 2 * cross(a, b)
    full = _as_g_set(c2, (0, 1))
    assert cross(a + full, b) == cross(a, b) + cross(full, b)


def test_cross_associative_up_to_regrouping_iso(c2, c3):
    a, b, c = identity_biset(c2), identity_biset(c3), identity_biset(c2)
    lhs = cross(cross(a, b), c)
    rhs = cross(a, cross(b, c))
    # transport rhs along the explicit regrouping isomorphism bisets, which
    # with flat lexicographic indexing have identity images
    f_left = GroupMap(rhs.left, lhs.left, tuple(range(lhs.left.order)))
    f_right = GroupMap(lhs.right, rhs.right, tuple(range(lhs.right.order)))
    moved = mackey_compose(iso(f_left), mackey_compose(rhs, iso(f_right)))
    assert moved == lhs


def test_oviz(c2, c3):
    from bisetkit.burnside import as_burnside, convert

    one = trivial_group()
    got = oviz(one)
    want = identity_biset(one)
    target = direct_product(want.left, want.right)
    assert convert(as_burnside(got, direct_product(got.left, got.right)), target) == (
        as_burnside(want, target)
    )
    for g in (c2, c3):
        el = oviz(g)
        (t, c), = el.terms()
        assert c == 1
        assert t.left is one
        assert t.stab.order == g.order


@given(st.integers(min_value=-5, max_value=5), st.integers(min_value=-5, max_value=5))
@settings(max_examples=20, deadline=None)
def test_compose_bilinear(m, n):
    c2 = cyclic_group(2)
    one = Subgroup(c2, (0,))
    r, i = res(one, c2), ind(c2, one)
    lhs = compose(Fraction(m) * r, Fraction(n) * i)
    assert lhs == Fraction(m * n) * compose(r, i)


def test_compose_respects_ambient_caps(s3):
    from bisetkit.config import Caps
    from bisetkit.errors import AmbientCapExceeded

    tight = Caps(ambient=30)
    with pytest.raises(AmbientCapExceeded):
        identity_biset(s3, caps=tight)


def test_engines_agree_wider_range(s3, c2):
    """Beyond the default family: a 12-point middle and mixed orders."""
    for h, g, k in [(s3, c2, s3), (c2, s3, c2), (s3, s3, trivial_group())]:
        for b in all_basis(h, g):
            for a in all_basis(g, k):
                assert compose(b, a) == mackey_compose(b, a)
