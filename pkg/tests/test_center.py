"""Commutant and center over finite group families."""

import pytest

from bisetkit.burnside import BurnsideElement, basis_element, convert, unit
from bisetkit.center import (
    CenterCandidate,
    GroupFamily,
    center_product,
    commutant_report,
    commutant_subspace,
    commutes,
    component_group,
    identity_candidate,
    iota,
    is_center_element,
    pi,
    square_commutes,
)
from bisetkit.errors import GroupMismatch
from bisetkit.green import PAMorphism, get_instance, unit_of
from bisetkit.groups import (
    cyclic_group,
    direct_product,
    klein_four,
    trivial_group,
)

QB = get_instance("burnside")


@pytest.fixture(scope="module")
def family():
    return GroupFamily((trivial_group(), cyclic_group(2), klein_four()))


def test_family_requires_trivial_group(c2):
    with pytest.raises(GroupMismatch):
        GroupFamily((c2,))


def test_commutes_basics(c2, c3, v4):
    a = basis_element(c2, (0,))
    for h, members in ((c3, (0,)), (v4, (0, 1))):
        b = basis_element(h, members)
        assert commutes(QB, a, c2, b, h)
        assert commutes(QB, b, h, a, c2)
    assert commutes(QB, unit_of(QB, c2), c2, basis_element(v4, (0,)), v4)


def test_commutant_full_for_burnside(family, c2, v4):
    for g in (c2, v4):
        basis = commutant_subspace(QB, g, family)
        assert len(basis) == QB.dim(g)


def test_commutant_full_for_shift(family, c2):
    from bisetkit.green import ShiftedFunctor

    sh = ShiftedFunctor(QB, c2)
    for g in (trivial_group(), c2):
        basis = commutant_subspace(sh, g, family)
        assert len(basis) == sh.dim(g)


def test_commutant_report_shape(family, c2):
    rep = commutant_report(QB, unit(c2), c2, family)
    assert rep.verdict
    payload = rep.to_json()
    assert payload["family"] == ["1", "C2", "V4"]
    assert all(set(c) == {"H", "basis_index", "ok"} for c in payload["checks"])


def test_identity_candidate_and_scalar_units(family):
    idc = identity_candidate(QB, family)
    assert is_center_element(idc).verdict
    one = trivial_group()
    assert pi(idc) == unit(one)


def test_iota_natural_and_pi_inverse(family, c2):
    for b in QB.basis(c2):
        cand = iota(QB, b, c2, family)
        assert is_center_element(cand).verdict
        assert pi(cand) == b


def test_iota_component_at_trivial_is_input(family, c2):
    a = basis_element(c2, (0,))
    cand = iota(QB, a, c2, family)
    one = trivial_group()
    assert convert(cand.component(one), c2) == a


def test_zeroed_component_fails(family, c2):
    a = basis_element(c2, (0,))
    cand = iota(QB, a, c2, family)
    comps = list(cand.components)
    comps[1] = BurnsideElement(component_group(QB, c2, c2))
    bad = CenterCandidate(QB, c2, family, tuple(comps))
    assert not is_center_element(bad).verdict


def test_naturality_monotone_under_family_growth(c2):
    small = GroupFamily((trivial_group(), c2))
    big = GroupFamily((trivial_group(), c2, klein_four()))
    a = basis_element(c2, (0,))
    cand_big = iota(QB, a, c2, big)
    comps_big = list(cand_big.components)
    comps_big[1] = BurnsideElement(component_group(QB, c2, c2))
    bad_big = CenterCandidate(QB, c2, big, tuple(comps_big))
    bad_small = CenterCandidate(QB, c2, small, tuple(comps_big[:2]))
    verdict_small = is_center_element(bad_small).verdict
    verdict_big = is_center_element(bad_big).verdict
    # a bigger family only adds conjuncts
    assert not verdict_small
    assert not verdict_big


def test_center_product_associative_on_iota_images(family, c2):
    cands = [iota(QB, b, c2, family) for b in QB.basis(c2)]
    t, s = cands[0], cands[1]
    r = cands[0]
    lhs = center_product(center_product(t, s), r)
    rhs = center_product(t, center_product(s, r))
    for a, b in zip(lhs.components, rhs.components):
        assert convert(b, a.group) == a


def test_center_product_matches_iota_of_cross(family, c2):
    """iota is multiplicative: iota(a) x iota(b) = iota-like family of a x b."""
    from bisetkit.burnside import cross_burnside

    for a in QB.basis(c2):
        ca = iota(QB, a, c2, family)
        for b in QB.basis(c2):
            cb = iota(QB, b, c2, family)
            prod = center_product(ca, cb)
            crossed = iota(QB, cross_burnside(a, b), direct_product(c2, c2), family)
            for pc, cc in zip(prod.components, crossed.components):
                assert convert(pc, cc.group) == cc


def test_square_commutes_examples(c2, c3):
    hg = direct_product(c2, c3)
    alpha = PAMorphism(QB, c3, c2, QB.basis(hg)[0])
    lk = direct_product(c3, c2)
    beta = PAMorphism(QB, c2, c3, QB.basis(lk)[1])
    assert square_commutes(QB, alpha, beta)
    eps = PAMorphism(QB, trivial_group(), c2, unit(direct_product(c2, trivial_group())))
    assert square_commutes(QB, eps, beta)


def test_square_commutes_iff_commutes_small(c2, c3):
    groups = (trivial_group(), c2, c3)
    for h in groups:
        for g in groups:
            hg = direct_product(h, g)
            for b1 in QB.basis(hg):
                alpha = PAMorphism(QB, g, h, b1)
                for ll in groups:
                    for k in groups:
                        lk = direct_product(ll, k)
                        for b2 in QB.basis(lk):
                            beta = PAMorphism(QB, k, ll, b2)
                            assert square_commutes(QB, alpha, beta) == commutes(
                                QB, b1, hg, b2, lk
                            )


def test_commutant_contains_upsilon_image(family, c2):
    """The canonical morphism from the Burnside functor lands in the commutant."""
    from bisetkit import linalg
    from bisetkit.green import ShiftedFunctor, upsilon

    sh = ShiftedFunctor(QB, c2)
    for g in (trivial_group(), c2):
        span = commutant_subspace(sh, g, family)
        rows = [list(sh.coords(v, g)) for v in span]
        ech, pivots = linalg.rref(rows)
        for b in QB.basis(g):
            image = upsilon(sh, g, b)
            assert linalg.in_span(ech, pivots, list(sh.coords(image, g)))
