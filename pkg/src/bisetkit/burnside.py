"""Rational Burnside algebras: products, marks, Gluck idempotents, inflation.

Elements of QB(G) are exact rational combinations of transitive G-sets
[G/K], keyed by the canonical conjugacy-class representative of K. The ring
product is the classical double-coset formula; the mark homomorphism is the
independent characterization used to verify idempotents.

A note on the primitive idempotent formula: some sources print the weight
|K| inside the sum, but that normalization already fails the defining mark
property m_J(e_K) = delta for the two-element group. This module uses the
classical Gluck/Yoshida weight |L|:

    e_K = (1/|N_G(K)|) * sum over L <= K of |L| * mu(L, K) * [G/L].
"""

from __future__ import annotations

from fractions import Fraction

from . import kernels
from .bisets import BisetElement, TransitiveBiset, mackey_compose
from .config import DEFAULT_CAPS, Caps
from .errors import GroupMismatch
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    canonical_members,
    direct_product,
    quotient,
    subgroup_lattice,
    trivial_group,
)


class BurnsideElement:
    """Element of QB(G): canonical subgroup-class -> rational coefficient."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs=None):
        self.group = group
        self.coeffs: dict[tuple[int, ...], Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.coeffs[k] = v

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "BurnsideElement") -> None:
        if self.group is not other.group:
            raise GroupMismatch(
                f"elements live over different groups ({self.group.name} vs {other.group.name})"
            )

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BurnsideElement(self.group, out)

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "BurnsideElement":
        s = Fraction(scalar)
        return BurnsideElement(self.group, {k: s * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BurnsideElement)
            and self.group is other.group
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*[{self.group.name}/{list(k)}]" for k, c in self.terms())


def zero(group: FiniteGroup) -> BurnsideElement:
    return BurnsideElement(group)


def basis_element(group: FiniteGroup, members) -> BurnsideElement:
    """[G/K] for the subgroup with the given members."""
    canon = canonical_members(group, tuple(sorted(int(m) for m in members)))
    return BurnsideElement(group, {canon: Fraction(1)})


def unit(group: FiniteGroup) -> BurnsideElement:
    return BurnsideElement(group, {tuple(range(group.order)): Fraction(1)})


def basis(group: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> list[BurnsideElement]:
    """All basis classes [G/K], in lattice class order."""
    lat = subgroup_lattice(group, caps=caps)
    return [BurnsideElement(group, {rep.members: Fraction(1)}) for rep in lat.reps]


def _mult_classes(
    group: FiniteGroup, k_members: tuple[int, ...], l_members: tuple[int, ...]
) -> dict[tuple[int, ...], int]:
    """[G/K].[G/L] = sum over KxL double cosets of [G/(K cap xLx^-1)]."""
    out: dict[tuple[int, ...], int] = {}
    k_set = set(k_members)
    for x in kernels.double_cosets(group.table, k_members, l_members):
        x = int(x)
        inter = tuple(sorted(k_set.intersection(group.conjugate(x, m) for m in l_members)))
        canon = canonical_members(group, inter)
        out[canon] = out.get(canon, 0) + 1
    return out


def mult(a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Commutative ring product of QB(G) (double-coset formula)."""
    a._check(b)
    g = a.group
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            c = ca * cb
            for canon, n in _mult_classes(g, ka, kb).items():
                coeffs[canon] = coeffs.get(canon, Fraction(0)) + n * c
    return BurnsideElement(g, coeffs)


class MarkVector:
    """Per-subgroup-class fixed-point counts, in lattice class order."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.values = tuple(Fraction(v) for v in values)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MarkVector)
            and self.group is other.group
            and self.values == other.values
        )

    def pointwise(self, other: "MarkVector") -> "MarkVector":
        return MarkVector(self.group, tuple(x * y for x, y in zip(self.values, other.values)))

    def __repr__(self) -> str:
        return f"MarkVector({self.group.name}, {[str(v) for v in self.values]})"


def _fixed_points(group: FiniteGroup, j_members, k_members) -> int:
    """#{xK in G/K : J x K = x K}."""
    point_of, reps = kernels.coset_space(group.table, k_members)
    count = 0
    for r in reps:
        if all(point_of[int(group.table[j, r])] == point_of[r] for j in j_members):
            count += 1
    return count


def table_of_marks(group: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> list[list[int]]:
    """Matrix m[J][K] = #fixed points of (class rep) J on G/K, memoized."""
    lat = subgroup_lattice(group, caps=caps)
    cached = getattr(lat, "_marks_matrix", None)
    if cached is None:
        cached = [
            [_fixed_points(group, j.members, k.members) for k in lat.reps] for j in lat.reps
        ]
        lat._marks_matrix = cached
    return cached


def marks(a: BurnsideElement, caps: Caps = DEFAULT_CAPS) -> MarkVector:
    """The mark homomorphism: m_J(a) = sum coeff_K * #fix_J(G/K)."""
    lat = subgroup_lattice(a.group, caps=caps)
    tom = table_of_marks(a.group, caps=caps)
    vals = [Fraction(0)] * len(lat.reps)
    for members, c in a.coeffs.items():
        col = lat._class_of[members]
        for j in range(len(lat.reps)):
            vals[j] += c * tom[j][col]
    return MarkVector(a.group, vals)


def idempotents(group: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> dict[int, BurnsideElement]:
    """Complete family of primitive idempotents e_K of QB(G), by class index."""
    lat = subgroup_lattice(group, caps=caps)
    cached = getattr(lat, "_idempotents", None)
    if cached is not None:
        return cached
    out: dict[int, BurnsideElement] = {}
    for cls, rep in enumerate(lat.reps):
        hi = lat.index_of(rep)
        norm = lat.normalizers[hi].order
        coeffs: dict[tuple[int, ...], Fraction] = {}
        for lo in lat.subs_of[hi]:
            sub = lat.subgroups[lo]
            weight = Fraction(sub.order * lat.mobius_by_index(lo, hi), norm)
            if weight:
                canon = canonical_members(group, sub.members)
                coeffs[canon] = coeffs.get(canon, Fraction(0)) + weight
        out[cls] = BurnsideElement(group, coeffs)
    lat._idempotents = out
    return out


def cross_burnside(
    a: BurnsideElement, b: BurnsideElement, caps: Caps = DEFAULT_CAPS
) -> BurnsideElement:
    """[G/K] x [H/L] = [(GxH)/(KxL)], bilinear."""
    p = direct_product(a.group, b.group, caps=caps)
    nh = b.group.order
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            members = tuple(sorted(x * nh + y for x in ka for y in kb))
            canon = canonical_members(p, members)
            coeffs[canon] = coeffs.get(canon, Fraction(0)) + ca * cb
    return BurnsideElement(p, coeffs)


def inflate(
    a: BurnsideElement, group: FiniteGroup, n: Subgroup, caps: Caps = DEFAULT_CAPS
) -> BurnsideElement:
    """Inflation along G -> G/N; ``a`` must live over the quotient of G by N."""
    q, proj = quotient(group, n, caps=caps)
    if a.group is not q:
        raise GroupMismatch("element does not live over G/N")
    return pull_subgroups(a, proj)


# ---------------------------------------------------------------------------
# Payload-level elementary operations. These implement the classical species
# of Res/Ind/Inf/Def/Iso directly on Burnside elements, which keeps the
# ambient of an elementary biset from ever being materialized as a product.


def push_subgroups(
    x: BurnsideElement, images, target: FiniteGroup
) -> BurnsideElement:
    """[C/K] -> [target/images(K)] for a homomorphism given by per-element images.

    Covers Iso (bijective), Ind (injective inclusion) and Def (surjection).
    """
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for k, c in x.coeffs.items():
        members = tuple(sorted({images[m] for m in k}))
        canon = canonical_members(target, members)
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(target, coeffs)


def pull_subgroups(x: BurnsideElement, proj: GroupMap) -> BurnsideElement:
    """Inflation: [Q/R] -> [C/preimage(R)] along a surjection proj: C -> Q."""
    if proj.target is not x.group:
        raise GroupMismatch("projection target does not match element group")
    source = proj.source
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for r, c in x.coeffs.items():
        rset = set(r)
        members = tuple(m for m in source.elements() if proj.images[m] in rset)
        canon = canonical_members(source, members)
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(source, coeffs)


def res_to(
    x: BurnsideElement, s_members: tuple[int, ...], to_target, target: FiniteGroup
) -> BurnsideElement:
    """Restriction to the subgroup S followed by the iso S -> target.

    ``to_target`` maps ambient member indices of S to target element indices.
    Res_S [C/K] = sum over S\\C/K double cosets x of [S/(S cap xKx^-1)].
    """
    c_group = x.group
    s_set = set(s_members)
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for k, coeff in x.coeffs.items():
        for rep in kernels.double_cosets(c_group.table, s_members, k):
            rep = int(rep)
            inter = [
                to_target[y] for m in k if (y := c_group.conjugate(rep, m)) in s_set
            ]
            canon = canonical_members(target, tuple(sorted(inter)))
            coeffs[canon] = coeffs.get(canon, Fraction(0)) + coeff
    return BurnsideElement(target, coeffs)


# ---------------------------------------------------------------------------
# Conversions between the morphism view B(H,G) and the element view QB(HxG),
# and index-preserving reinterpretation between index-compatible groups.


def convert(x: BurnsideElement, target: FiniteGroup) -> BurnsideElement:
    """Reinterpret over an index-compatible group (same order, same table)."""
    if x.group is target:
        return x
    if x.group.order != target.order:
        raise GroupMismatch("groups are not index-compatible")
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for k, c in x.coeffs.items():
        canon = canonical_members(target, k)
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(target, coeffs)


def as_biset(
    x: BurnsideElement, left: FiniteGroup, right: FiniteGroup, caps: Caps = DEFAULT_CAPS
) -> BisetElement:
    """View an element of QB(ambient) as a morphism in B(left, right)."""
    p = direct_product(left, right, caps=caps)
    if p.order != x.group.order:
        raise GroupMismatch("ambient order does not match left x right")
    coeffs: dict[TransitiveBiset, Fraction] = {}
    for k, c in x.coeffs.items():
        canon = Subgroup(p, canonical_members(p, k))
        t = TransitiveBiset(left, right, canon)
        coeffs[t] = coeffs.get(t, Fraction(0)) + c
    return BisetElement(left, right, coeffs)


def as_burnside(b: BisetElement, target: FiniteGroup) -> BurnsideElement:
    """Forget the (left, right) split of a biset element."""
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for t, c in b.coeffs.items():
        canon = canonical_members(target, t.stab.members)
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(target, coeffs)


def act(phi: BisetElement, x: BurnsideElement, caps: Caps = DEFAULT_CAPS) -> BurnsideElement:
    """Biset action of phi in B(K, H) on an element of QB(H)."""
    if phi.right.order != x.group.order:
        raise GroupMismatch("biset source does not match element group")
    xm = as_biset(x, phi.right, trivial_group(), caps=caps)
    result = mackey_compose(phi, xm, caps=caps)
    return as_burnside(result, phi.left)
