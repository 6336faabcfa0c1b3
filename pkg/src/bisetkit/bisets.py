"""The morphism algebra of the biset category over Q.

An (H,G)-biset is a left H x G-set via (h,g).u = h u g^-1; transitive ones
are coset spaces (H x G)/L, so basis elements are conjugacy classes of
subgroups of H x G. Two independent composition engines are provided:

* ``compose`` -- set-level: realize both bisets as point sets, form the
  tensor quotient over the middle group by union-find, and read off orbit
  stabilizers. Structural, used as the primary engine at desk scale.
* ``mackey_compose`` -- the double-coset formula with star-product
  stabilizers. Much faster on transitive inputs.

Their exhaustive agreement is the correctness anchor for everything built
on top (see the acceptance suite).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import kernels
from .config import DEFAULT_CAPS, Caps
from .errors import GroupMismatch, NotASubgroup, NotBijective
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    canonical_members,
    diagonal,
    direct_product,
    quotient,
    subgroup_as_group,
    trivial_group,
)


class TransitiveBiset:
    """Class of the transitive (H,G)-biset with the given stabilizer."""

    __slots__ = ("left", "right", "stab")

    def __init__(self, left: FiniteGroup, right: FiniteGroup, stab: Subgroup):
        self.left = left
        self.right = right
        self.stab = stab

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TransitiveBiset)
            and self.left is other.left
            and self.right is other.right
            and self.stab.members == other.stab.members
        )

    def __hash__(self) -> int:
        return hash((self.left.uid, self.right.uid, self.stab.members))

    def __repr__(self) -> str:
        return f"[({self.left.name}x{self.right.name})/{list(self.stab.members)}]"


class BisetElement:
    """Exact rational combination of transitive (H,G)-biset classes."""

    __slots__ = ("left", "right", "coeffs")

    def __init__(self, left: FiniteGroup, right: FiniteGroup, coeffs=None):
        self.left = left
        self.right = right
        self.coeffs: dict[TransitiveBiset, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                v = Fraction(v)
                if v:
                    self.coeffs[k] = v

    def terms(self) -> list[tuple[TransitiveBiset, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].stab.members)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_compatible(self, other: "BisetElement") -> None:
        if self.left is not other.left or self.right is not other.right:
            raise GroupMismatch("biset elements live over different group pairs")

    def __add__(self, other: "BisetElement") -> "BisetElement":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return BisetElement(self.left, self.right, out)

    def __sub__(self, other: "BisetElement") -> "BisetElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "BisetElement":
        s = Fraction(scalar)
        return BisetElement(self.left, self.right, {k: s * v for k, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BisetElement)
            and self.left is other.left
            and self.right is other.right
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*{t!r}" for t, c in self.terms())


def zero_element(left: FiniteGroup, right: FiniteGroup) -> BisetElement:
    return BisetElement(left, right)


def transitive(
    left: FiniteGroup, right: FiniteGroup, stab: Subgroup, caps: Caps = DEFAULT_CAPS
) -> BisetElement:
    """The basis element with coefficient 1 on the class of ``stab``."""
    ambient = direct_product(left, right, caps=caps)
    if stab.ambient is not ambient:
        raise NotASubgroup("stabilizer must be a subgroup of the product ambient")
    if stab.members not in ambient._canon_cache and not stab._is_subgroup():
        raise NotASubgroup(f"{stab.members} is not closed in {ambient.name}")
    canon = Subgroup(ambient, canonical_members(ambient, stab.members))
    t = TransitiveBiset(left, right, canon)
    return BisetElement(left, right, {t: Fraction(1)})


def _transitive_from_members(
    left: FiniteGroup, right: FiniteGroup, members, caps: Caps = DEFAULT_CAPS
) -> TransitiveBiset:
    ambient = direct_product(left, right, caps=caps)
    canon = Subgroup(ambient, canonical_members(ambient, tuple(sorted(set(members)))))
    return TransitiveBiset(left, right, canon)


def identity_biset(g: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """[(G x G)/diagonal] -- the identity of B(G,G)."""
    d = diagonal(g, caps=caps)
    return transitive(g, g, d, caps=caps)


def ind(g: FiniteGroup, s: Subgroup, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Induction: the (G, S)-biset G with stabilizer {(s,s)}."""
    if s.ambient is not g:
        raise NotASubgroup("subgroup does not live in the given group")
    sg, _inc = subgroup_as_group(s)
    members = [m * sg.order + i for i, m in enumerate(s.members)]
    t = _transitive_from_members(g, sg, members, caps=caps)
    return BisetElement(g, sg, {t: Fraction(1)})


def res(s: Subgroup, g: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Restriction: the (S, G)-biset G with stabilizer {(s,s)}."""
    if s.ambient is not g:
        raise NotASubgroup("subgroup does not live in the given group")
    sg, _inc = subgroup_as_group(s)
    members = [i * g.order + m for i, m in enumerate(s.members)]
    t = _transitive_from_members(sg, g, members, caps=caps)
    return BisetElement(sg, g, {t: Fraction(1)})


def inf(g: FiniteGroup, n: Subgroup, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Inflation along G -> G/N: stabilizer {(g, gN)}."""
    q, proj = quotient(g, n, caps=caps)
    members = [x * q.order + proj.images[x] for x in g.elements()]
    t = _transitive_from_members(g, q, members, caps=caps)
    return BisetElement(g, q, {t: Fraction(1)})


def def_(g: FiniteGroup, n: Subgroup, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Deflation along G -> G/N: stabilizer {(gN, g)}."""
    q, proj = quotient(g, n, caps=caps)
    members = [proj.images[x] * g.order + x for x in g.elements()]
    t = _transitive_from_members(q, g, members, caps=caps)
    return BisetElement(q, g, {t: Fraction(1)})


def iso(f: GroupMap, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Transport along an isomorphism: stabilizer the graph {(f(x), x)}."""
    if not f.is_bijective or not f.is_homomorphism():
        raise NotBijective("iso requires a bijective homomorphism")
    members = [f.images[x] * f.source.order + x for x in f.source.elements()]
    t = _transitive_from_members(f.target, f.source, members, caps=caps)
    return BisetElement(f.target, f.source, {t: Fraction(1)})


class ConcreteBiset:
    """An explicit (H,G)-biset on points 0..n-1 with dense action tables."""

    __slots__ = ("left", "right", "n_points", "left_action", "right_action")

    def __init__(self, left, right, left_action, right_action):
        self.left = left
        self.right = right
        self.left_action = np.ascontiguousarray(left_action, dtype=np.int32)
        self.right_action = np.ascontiguousarray(right_action, dtype=np.int32)
        self.n_points = int(self.left_action.shape[1]) if self.left_action.size else int(
            self.right_action.shape[0]
        )

    def check(self) -> bool:
        """Actions commute and identities act trivially."""
        la, ra = self.left_action, self.right_action
        h_id, g_id = self.left.identity, self.right.identity
        n = self.n_points
        if n == 0:
            return True
        if not (la[h_id] == np.arange(n)).all() or not (ra[:, g_id] == np.arange(n)).all():
            return False
        for h in self.left.elements():
            for g in self.right.elements():
                for p in range(n):
                    if ra[la[h, p], g] != la[h, ra[p, g]]:
                        return False
        return True


def empty_concrete(left: FiniteGroup, right: FiniteGroup) -> ConcreteBiset:
    return ConcreteBiset(
        left,
        right,
        np.zeros((left.order, 0), dtype=np.int32),
        np.zeros((0, right.order), dtype=np.int32),
    )


def disjoint_union(x: ConcreteBiset, y: ConcreteBiset) -> ConcreteBiset:
    if x.left is not y.left or x.right is not y.right:
        raise GroupMismatch("bisets over different group pairs")
    la = np.concatenate([x.left_action, y.left_action + x.n_points], axis=1)
    ra = np.concatenate([x.right_action, y.right_action + x.n_points], axis=0)
    return ConcreteBiset(x.left, x.right, la, ra)


def realize_concrete(b: TransitiveBiset, caps: Caps = DEFAULT_CAPS) -> ConcreteBiset:
    """The coset space (H x G)/stab with its two actions."""
    h, g = b.left, b.right
    p = direct_product(h, g, caps=caps)
    point_of, reps = kernels.coset_space(p.table, b.stab.members)
    n = len(reps)
    ng = g.order
    la = np.empty((h.order, n), dtype=np.int32)
    ra = np.empty((n, ng), dtype=np.int32)
    for hh in h.elements():
        enc = hh * ng + g.identity
        row = p.table[enc]
        for pt, rep in enumerate(reps):
            la[hh, pt] = point_of[int(row[rep])]
    for gg in g.elements():
        enc = h.identity * ng + g.inverse(gg)
        row = p.table[enc]
        for pt, rep in enumerate(reps):
            ra[pt, gg] = point_of[int(row[rep])]
    return ConcreteBiset(h, g, la, ra)


def decompose_concrete(x: ConcreteBiset, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Orbit decomposition: one canonical stabilizer class per orbit."""
    h, g = x.left, x.right
    n = x.n_points
    out = BisetElement(h, g)
    if n == 0:
        return out
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    la, ra = x.left_action, x.right_action
    for p in range(n):
        for hh in h.elements():
            a, b = find(p), find(int(la[hh, p]))
            if a != b:
                parent[max(a, b)] = min(a, b)
        for gg in g.elements():
            a, b = find(p), find(int(ra[p, gg]))
            if a != b:
                parent[max(a, b)] = min(a, b)
    ginv = [g.inverse(gg) for gg in g.elements()]
    ng = g.order
    coeffs: dict[TransitiveBiset, Fraction] = {}
    for p in range(n):
        if find(p) != p:
            continue
        members = []
        for hh in h.elements():
            row = la[hh]
            for gg in g.elements():
                if row[int(ra[p, ginv[gg]])] == p:
                    members.append(hh * ng + gg)
        t = _transitive_from_members(h, g, members, caps=caps)
        coeffs[t] = coeffs.get(t, Fraction(0)) + 1
    return BisetElement(h, g, coeffs)


def tensor_concrete(x: ConcreteBiset, y: ConcreteBiset, caps: Caps = DEFAULT_CAPS) -> ConcreteBiset:
    """(X x Y)/G for the middle group: points are classes of (x.g, y) ~ (x, g.y)."""
    if x.right is not y.left:
        raise GroupMismatch("middle groups do not match")
    nx, ny = x.n_points, y.n_points
    if nx == 0 or ny == 0:
        return empty_concrete(x.left, y.right)
    labels = kernels.tensor_orbits(x.right_action, y.left_action)
    nz = max(labels) + 1
    rep_pair = [None] * nz
    for p, lab in enumerate(labels):
        if rep_pair[lab] is None:
            rep_pair[lab] = divmod(p, ny)
    h, k = x.left, y.right
    la = np.empty((h.order, nz), dtype=np.int32)
    ra = np.empty((nz, k.order), dtype=np.int32)
    for z, (px, py) in enumerate(rep_pair):
        for hh in h.elements():
            la[hh, z] = labels[int(x.left_action[hh, px]) * ny + py]
        for kk in k.elements():
            ra[z, kk] = labels[px * ny + int(y.right_action[py, kk])]
    return ConcreteBiset(h, k, la, ra)


def compose(beta: BisetElement, alpha: BisetElement, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Set-level composition B(H,G) x B(G,K) -> B(H,K), bilinear."""
    if beta.right is not alpha.left:
        raise GroupMismatch(
            f"cannot compose: middle groups differ ({beta.right.name} vs {alpha.left.name})"
        )
    out = BisetElement(beta.left, alpha.right)
    for tb, cb in beta.coeffs.items():
        xb = realize_concrete(tb, caps=caps)
        for ta, ca in alpha.coeffs.items():
            z = tensor_concrete(xb, realize_concrete(ta, caps=caps), caps=caps)
            out = out + (cb * ca) * decompose_concrete(z, caps=caps)
    return out


def _pairs(t: TransitiveBiset) -> list[tuple[int, int]]:
    nr = t.right.order
    return [divmod(m, nr) for m in t.stab.members]


def mackey_compose(
    beta: BisetElement, alpha: BisetElement, caps: Caps = DEFAULT_CAPS
) -> BisetElement:
    """Double-coset composition with star-product stabilizers.

    [(HxG)/U] o [(GxK)/V] = sum over x in p2(U)\\G/p1(V) of
    [(HxK)/{(h,k) : exists g with (h,g) in U and (x^-1 g x, k) in V}].
    """
    if beta.right is not alpha.left:
        raise GroupMismatch(
            f"cannot compose: middle groups differ ({beta.right.name} vs {alpha.left.name})"
        )
    h, g, k = beta.left, beta.right, alpha.right
    nk = k.order
    coeffs: dict[TransitiveBiset, Fraction] = {}
    for tb, cb in beta.coeffs.items():
        u_pairs = _pairs(tb)
        p2u = sorted({p[1] for p in u_pairs})
        for ta, ca in alpha.coeffs.items():
            v_pairs = _pairs(ta)
            p1v = sorted({p[0] for p in v_pairs})
            vmap: dict[int, list[int]] = {}
            for gg, kk in v_pairs:
                vmap.setdefault(gg, []).append(kk)
            c = cb * ca
            for x in kernels.double_cosets(g.table, p2u, p1v):
                xi = g.inverse(int(x))
                members = set()
                for hh, gg in u_pairs:
                    gp = g.mul(g.mul(xi, gg), int(x))
                    for kk in vmap.get(gp, ()):
                        members.add(hh * nk + kk)
                t = _transitive_from_members(h, k, members, caps=caps)
                coeffs[t] = coeffs.get(t, Fraction(0)) + c
    return BisetElement(h, k, coeffs)


def cross(
    beta: BisetElement, delta: BisetElement, caps: Caps = DEFAULT_CAPS
) -> BisetElement:
    """B(H,G) x B(H',G') -> B(HxH', GxG'), reordering (H,G,H',G') -> (H,H',G,G')."""
    hh = direct_product(beta.left, delta.left, caps=caps)
    gg = direct_product(beta.right, delta.right, caps=caps)
    n_g, n_h2, n_g2 = beta.right.order, delta.left.order, delta.right.order
    coeffs: dict[TransitiveBiset, Fraction] = {}
    for tb, cb in beta.coeffs.items():
        b_pairs = _pairs(tb)
        for td, cd in delta.coeffs.items():
            members = []
            for h1, g1 in b_pairs:
                for m in td.stab.members:
                    h2, g2 = divmod(m, n_g2)
                    members.append(((h1 * n_h2 + h2) * n_g + g1) * n_g2 + g2)
            t = _transitive_from_members(hh, gg, members, caps=caps)
            coeffs[t] = coeffs.get(t, Fraction(0)) + cb * cd
    return BisetElement(hh, gg, coeffs)


def oviz(g: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> BisetElement:
    """Def to the trivial group after Res to the diagonal, as one element of B(1, GxG)."""
    d = diagonal(g, caps=caps)
    dgrp, _inc = subgroup_as_group(d)
    full = Subgroup(dgrp, range(dgrp.order))
    deflation = def_(dgrp, full, caps=caps)
    restriction = res(d, d.ambient, caps=caps)
    result = mackey_compose(deflation, restriction, caps=caps)
    assert result.left is trivial_group()
    return result
