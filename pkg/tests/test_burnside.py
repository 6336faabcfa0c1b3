"""Burnside algebras: product, marks, idempotents, cross, inflation."""

from fractions import Fraction

import pytest

from bisetkit.bisets import ind, res
from bisetkit.burnside import (
    BurnsideElement,
    act,
    as_biset,
    basis,
    basis_element,
    cross_burnside,
    idempotents,
    inflate,
    marks,
    mult,
    table_of_marks,
    unit,
    zero,
)
from bisetkit.errors import GroupMismatch
from bisetkit.groups import (
    Subgroup,
    cyclic_group,
    direct_product,
    generated_subgroup,
    subgroup_lattice,
    symmetric_group,
    trivial_group,
)


def test_mult_unit_law(c2, s3):
    for g in (c2, s3):
        u = unit(g)
        for b in basis(g):
            assert mult(u, b) == b


def test_mult_free_square(c2):
    a = basis_element(c2, (0,))
    assert mult(a, a) == 2 * a


def test_mult_s3_c3_square(s3):
    c3sub = generated_subgroup(s3, [2])
    a = basis_element(s3, c3sub.members)
    assert mult(a, a) == 2 * a


def test_mult_group_mismatch(c2, c3):
    with pytest.raises(GroupMismatch):
        mult(unit(c2), unit(c3))


def test_marks_examples(c2):
    m = marks(basis_element(c2, (0,)))
    assert m.values == (Fraction(2), Fraction(0))
    assert marks(unit(c2)).values == (Fraction(1), Fraction(1))
    assert marks(zero(c2)).values == (Fraction(0), Fraction(0))


@pytest.mark.parametrize("maker", [
    lambda: cyclic_group(2), lambda: cyclic_group(3), lambda: cyclic_group(4),
    lambda: cyclic_group(6), lambda: symmetric_group(3), lambda: symmetric_group(4),
])
def test_marks_is_ring_homomorphism(maker):
    g = maker()
    assert g.order <= 24
    for a in basis(g):
        for b in basis(g):
            assert marks(mult(a, b)) == marks(a).pointwise(marks(b))


def test_table_of_marks_triangular(s3):
    tom = table_of_marks(s3)
    # m_J(G/K) = 0 unless some conjugate of J is inside K; class order sorts it
    assert tom[0][0] == 6
    assert all(tom[j][-1] == 1 for j in range(len(tom)))


def test_idempotents_c2_exact(c2):
    idem = idempotents(c2)
    assert idem[0] == Fraction(1, 2) * basis_element(c2, (0,))
    assert idem[1] == unit(c2) - Fraction(1, 2) * basis_element(c2, (0,))


def test_idempotents_v4_sum(v4):
    idem = idempotents(v4)
    total = zero(v4)
    for e in idem.values():
        total = total + e
    assert total == unit(v4)


def test_idempotents_s3_denominators(s3):
    lat = subgroup_lattice(s3)
    idem = idempotents(s3)
    assert len(idem) == 4
    from bisetkit.groups import normalizer

    for cls, e in idem.items():
        norm = normalizer(s3, lat.reps[cls]).order
        for _, coeff in e.terms():
            assert (coeff * norm).denominator == 1


def test_idempotents_marks_delta(s3, v4, c4):
    for g in (s3, v4, c4):
        idem = idempotents(g)
        n = len(idem)
        for k, e in idem.items():
            assert marks(e).values == tuple(
                Fraction(1 if j == k else 0) for j in range(n)
            )


def test_cross_burnside_examples(c2):
    u = cross_burnside(unit(c2), unit(c2))
    v4p = direct_product(c2, c2)
    assert u == unit(v4p)
    mixed = cross_burnside(basis_element(c2, (0,)), unit(c2))
    assert mixed == basis_element(v4p, (0, 1))
    idem = idempotents(c2)
    e11 = cross_burnside(idem[0], idem[0])
    assert e11 == Fraction(1, 4) * basis_element(v4p, (0,))


def test_inflate_examples(c4, c2):
    n = generated_subgroup(c4, [2])
    q, _ = __import__("bisetkit.groups", fromlist=["quotient"]).quotient(c4, n)
    assert inflate(unit(q), c4, n) == unit(c4)
    idem_q = idempotents(q)
    got = inflate(idem_q[0], c4, n)
    idem4 = idempotents(c4)
    assert got == idem4[0] + idem4[1]
    a, b = idem_q[0], idem_q[1]
    assert inflate(a + b, c4, n) == inflate(a, c4, n) + inflate(b, c4, n)


def test_inflate_is_unital_ring_homomorphism(c4, v4):
    cases = [(c4, generated_subgroup(c4, [2])), (v4, generated_subgroup(v4, [1]))]
    from bisetkit.groups import quotient

    for g, n in cases:
        q, _ = quotient(g, n)
        assert inflate(unit(q), g, n) == unit(g)
        for a in basis(q):
            for b in basis(q):
                assert inflate(mult(a, b), g, n) == mult(
                    inflate(a, g, n), inflate(b, g, n)
                )


@pytest.mark.parametrize("maker", [
    lambda: cyclic_group(4), lambda: symmetric_group(3),
])
def test_frobenius_identities(maker):
    """Induction and restriction satisfy both Frobenius reciprocity laws."""
    g = maker()
    lat = subgroup_lattice(g)
    for rep in lat.reps:
        if rep.order in (1, g.order):
            continue
        g_l = ind(g, rep)
        g_r = res(rep, g)
        s_grp = g_l.right
        for a0 in basis(s_grp):
            for b in basis(g):
                lhs = mult(act(g_l, a0), b)
                rhs = act(g_l, mult(a0, act(g_r, b)))
                assert lhs == rhs
                lhs2 = mult(b, act(g_l, a0))
                rhs2 = act(g_l, mult(act(g_r, b), a0))
                assert lhs2 == rhs2


def test_act_matches_classical_restriction(s3):
    sub = generated_subgroup(s3, [1])
    r = res(sub, s3)
    # Res_S [G/1] = [G:1]/|S| free S-orbits
    restricted = act(r, basis_element(s3, (s3.identity,)))
    (members, coeff), = restricted.terms()
    assert coeff == 3 and len(members) == 1


def test_as_biset_roundtrip(c2, c3):
    p = direct_product(c2, c3)
    for b in basis(p):
        m = as_biset(b, c2, c3)
        from bisetkit.burnside import as_burnside

        assert as_burnside(m, p) == b


def test_idempotents_s4_complete_family():
    s4 = symmetric_group(4)
    idem = idempotents(s4)
    n = len(idem)
    assert n == 11
    for k in range(n):
        assert marks(idem[k]).values == tuple(
            Fraction(1 if j == k else 0) for j in range(n)
        )
    total = zero(s4)
    for e in idem.values():
        total = total + e
    assert total == unit(s4)
