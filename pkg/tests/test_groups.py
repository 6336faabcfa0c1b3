"""Group kernel: construction, lattices, canonical forms, Mobius, quotients."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bisetkit.errors import (
    ClosureCapExceeded,
    InvalidPermutation,
    LatticeCapExceeded,
    NotInInterval,
    NotNormal,
)
from bisetkit.config import Caps
from bisetkit.groups import (
    Subgroup,
    canonical_subgroup_rep,
    conjugate_subgroup,
    cyclic_group,
    diagonal,
    direct_product,
    first_projection,
    generated_subgroup,
    group_from_generators,
    is_normal,
    klein_four,
    mobius,
    normalizer,
    quotient,
    second_projection,
    subgroup_lattice,
    symmetric_group,
    trivial_group,
)


def brute_force_subgroups(group):
    """Oracle: all subsets closed under multiplication containing the identity."""
    out = []
    elems = list(group.elements())
    for r in range(1, group.order + 1):
        for subset in itertools.combinations(elems, r):
            s = set(subset)
            if group.identity not in s:
                continue
            if all(group.mul(a, b) in s for a in s for b in s):
                out.append(tuple(sorted(s)))
    return sorted(out, key=lambda m: (len(m), m))


def test_group_from_generators_s3():
    g = group_from_generators(3, [(1, 0, 2), (1, 2, 0)])
    assert g.order == 6
    orders = sorted(g.element_order(x) for x in g.elements())
    assert orders == [1, 2, 2, 2, 3, 3]


def test_group_from_generators_trivial_and_c2():
    assert group_from_generators(1, []).order == 1
    g = group_from_generators(2, [(1, 0)])
    assert g.order == 2 and g.element_order(1) == 2


def test_group_from_generators_errors():
    with pytest.raises(InvalidPermutation):
        group_from_generators(3, [(0, 0, 1)])
    with pytest.raises(ClosureCapExceeded):
        group_from_generators(5, [(1, 2, 3, 4, 0)], caps=Caps(closure=3))


def test_direct_product_examples(c2, c3):
    v = direct_product(c2, c2)
    assert v.order == 4
    assert sum(1 for x in v.elements() if v.element_order(x) == 2) == 3
    c6 = direct_product(c2, c3)
    assert max(c6.element_order(x) for x in c6.elements()) == 6
    g = symmetric_group(3)
    og = direct_product(trivial_group(), g)
    assert og.order == g.order
    assert [og.projections[1].apply(i) for i in range(og.order)] == list(range(g.order))


def test_product_projection_injection_roundtrip(c2, c3):
    p = direct_product(c2, c3)
    for i, inj in enumerate(p.injections):
        proj = p.projections[i]
        for x in inj.source.elements():
            assert proj.apply(inj.apply(x)) == x


@pytest.mark.parametrize(
    "maker,count,classes",
    [
        (lambda: symmetric_group(3), 6, 4),
        (klein_four, 5, 5),
        (lambda: cyclic_group(2), 2, 2),
    ],
)
def test_lattice_counts_against_brute_force(maker, count, classes):
    g = maker()
    lat = subgroup_lattice(g)
    assert len(lat.subgroups) == count
    assert len(lat.classes) == classes
    assert [s.members for s in lat.subgroups] == brute_force_subgroups(g)


def test_lattice_cap():
    with pytest.raises(LatticeCapExceeded):
        subgroup_lattice(symmetric_group(4), caps=Caps(lattice=10))


def test_canonical_rep_constant_and_idempotent(s3, v4, c4):
    for g in (s3, v4, c4):
        lat = subgroup_lattice(g)
        for cls in lat.classes:
            canon = {canonical_subgroup_rep(g, lat.subgroups[i]).members for i in cls}
            assert len(canon) == 1
            rep = canonical_subgroup_rep(g, lat.subgroups[cls[0]])
            assert canonical_subgroup_rep(g, rep) == rep


def test_canonical_rep_of_conjugates(s3):
    sub = generated_subgroup(s3, [1])
    reps = {
        canonical_subgroup_rep(s3, conjugate_subgroup(sub, x)).members
        for x in s3.elements()
    }
    assert len(reps) == 1


def test_class_times_normalizer(s3, v4):
    for g in (s3, v4):
        lat = subgroup_lattice(g)
        for cls, rep in zip(lat.classes, lat.reps):
            assert len(cls) * normalizer(g, rep).order == g.order


def brute_mobius(subsets, lo, hi):
    """Oracle: Mobius recursion over an explicit subset list."""
    if lo == hi:
        return 1
    total = 0
    for mid in subsets:
        if set(lo) <= set(mid) and set(mid) <= set(hi) and mid != lo:
            total += brute_mobius(subsets, mid, hi)
    return -total


def test_mobius_values(v4, c2):
    latv = subgroup_lattice(v4)
    bottom = latv.subgroups[0]
    top = latv.subgroups[-1]
    assert mobius(latv, top, top) == 1
    assert mobius(latv, bottom, top) == 2
    latc = subgroup_lattice(c2)
    assert mobius(latc, latc.subgroups[0], latc.subgroups[1]) == -1
    # against the independent recursion over the brute-force subset poset
    subsets = brute_force_subgroups(v4)
    for lo in subsets:
        for hi in subsets:
            if set(lo) <= set(hi):
                got = mobius(latv, Subgroup(v4, lo), Subgroup(v4, hi))
                assert got == brute_mobius(subsets, lo, hi)


def test_mobius_interval_sums(s3, v4, c4):
    for g in (s3, v4, c4):
        lat = subgroup_lattice(g)
        for hi_idx, hi in enumerate(lat.subgroups):
            for lo_idx in lat.subs_of[hi_idx]:
                if lo_idx == hi_idx:
                    continue
                lo = lat.subgroups[lo_idx]
                total = sum(
                    lat.mobius_by_index(mid_idx, hi_idx)
                    for mid_idx in lat.subs_of[hi_idx]
                    if lo._member_set <= lat.subgroups[mid_idx]._member_set
                )
                assert total == 0


def test_mobius_not_in_interval(v4):
    lat = subgroup_lattice(v4)
    two = [s for s in lat.subgroups if s.order == 2]
    with pytest.raises(NotInInterval):
        mobius(lat, two[0], two[1])


def test_quotient_examples(c4, c2, v4, s3):
    q, proj = quotient(c4, generated_subgroup(c4, [2]))
    assert q.order == 2
    g2, proj2 = quotient(s3, Subgroup(s3, (s3.identity,)))
    assert g2 is s3 and proj2.images == tuple(s3.elements())
    diag = generated_subgroup(v4, [3])
    qv, projv = quotient(v4, diag)
    assert qv.order == 2
    # projection is surjective with kernel exactly N
    assert set(projv.images) == set(qv.elements())
    assert projv.kernel().members == diag.members


def test_quotient_not_normal(s3):
    sub = generated_subgroup(s3, [1])
    assert not is_normal(s3, sub)
    with pytest.raises(NotNormal):
        quotient(s3, sub)


def test_diagonal_and_projections(c2, s3, c3):
    d = diagonal(c2)
    assert d.order == 2
    assert second_projection(d).members == tuple(c2.elements())
    d1 = diagonal(trivial_group())
    assert d1.order == 1
    ds3 = diagonal(s3)
    assert ds3.order == 6
    assert second_projection(ds3).members == tuple(s3.elements())
    p = direct_product(c2, c2)
    c2x1 = Subgroup(p, (0, 2), check=True)
    assert second_projection(c2x1).order == 1
    sp = direct_product(s3, c3)
    swap_e = Subgroup(sp, (0, 1 * c3.order), check=True)
    assert second_projection(swap_e).order == 1
    assert first_projection(swap_e).order == 2


@pytest.mark.parametrize(
    "maker",
    [lambda: trivial_group(), lambda: cyclic_group(2), lambda: cyclic_group(6),
     klein_four, lambda: symmetric_group(3), lambda: symmetric_group(4)],
)
def test_associativity_exhaustive_small(maker):
    g = maker()
    assert g.order <= 64
    for a in g.elements():
        for b in g.elements():
            for c in g.elements():
                assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_associativity_sampled_large():
    g = symmetric_group(5)
    rng = random.Random(0)
    for _ in range(1000):
        a, b, c = (rng.randrange(g.order) for _ in range(3))
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


@given(st.integers(min_value=1, max_value=24))
@settings(max_examples=24, deadline=None)
def test_cyclic_lattice_counts_divisors(n):
    g = cyclic_group(n)
    lat = subgroup_lattice(g)
    divisors = sum(1 for d in range(1, n + 1) if n % d == 0)
    assert len(lat.subgroups) == divisors == len(lat.classes)


def test_direct_product_cap(s3):
    from bisetkit.errors import AmbientCapExceeded

    with pytest.raises(AmbientCapExceeded):
        direct_product(s3, s3, caps=Caps(ambient=30))


def test_canonical_rep_rejects_non_subgroup(v4):
    from bisetkit.errors import NotASubgroup

    with pytest.raises(NotASubgroup):
        canonical_subgroup_rep(v4, Subgroup(v4, (0, 1, 2)))
    with pytest.raises(NotASubgroup):
        canonical_subgroup_rep(v4, Subgroup(cyclic_group(2), (0,)))


def test_lattice_counts_s4_s5():
    """Known subgroup censuses: S4 has 30 subgroups in 11 classes, S5 156 in 19."""
    s4 = symmetric_group(4)
    lat4 = subgroup_lattice(s4)
    assert (len(lat4.subgroups), len(lat4.classes)) == (30, 11)
    s5 = symmetric_group(5)
    lat5 = subgroup_lattice(s5)
    assert (len(lat5.subgroups), len(lat5.classes)) == (156, 19)


def test_order_16_lattices_against_generator_oracle(c4, v4):
    """Independent oracle: enumerate subgroups as closures of generator sets."""
    for g in (direct_product(c4, c4), direct_product(c4, v4)):
        lat = subgroup_lattice(g)
        found = set()
        for r in range(0, 4):
            for gens in itertools.combinations(range(g.order), r):
                found.add(generated_subgroup(g, gens).members)
        found.add(tuple(g.elements()))
        assert {s.members for s in lat.subgroups} == found
