"""Finite-group kernel: Cayley tables, subgroups, lattices, Mobius functions.

Groups are dense order x order multiplication tables over element indices
0..order-1. Everything downstream (bisets, Burnside rings, functor shifts)
works with these indices, so products use flat lexicographic indexing:
(a, b) -> a*|B| + b. That makes coordinate projections, injections and the
canonical product-regrouping isomorphisms pure index arithmetic.

All values are immutable after construction and all operations are pure;
per-group caches (lattice, canonical forms) are write-once memos.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .config import DEFAULT_CAPS, Caps
from .errors import (
    BisetKitError,
    InvalidPermutation,
    NotASubgroup,
    NotBijective,
    NotInInterval,
    NotNormal,
)

_uid_counter = itertools.count()


class FiniteGroup:
    """A finite group given by a Cayley table.

    ``table[a, b]`` is the index of the product a*b. The identity has a fixed
    index (0 for all built-in constructions).
    """

    def __init__(
        self,
        table,
        identity: int = 0,
        name: str | None = None,
        labels: tuple[str, ...] | None = None,
        provenance: str | None = None,
        validate: bool = True,
    ):
        t = np.ascontiguousarray(table, dtype=np.int32)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise BisetKitError("multiplication table must be square")
        n = t.shape[0]
        self.order: int = int(n)
        self.identity: int = int(identity)
        self.uid: int = next(_uid_counter)
        self.name: str = name if name is not None else f"G{self.uid}"
        self.labels = labels
        self.provenance = provenance
        if validate:
            self._validate_table(t)
        t.setflags(write=False)
        self.table = t
        inv = np.argmax(t == self.identity, axis=1).astype(np.int32)
        inv.setflags(write=False)
        self.inv_table = inv
        self._canon_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._lattice: SubgroupLattice | None = None
        self._subgroup_groups: dict[tuple[int, ...], tuple[FiniteGroup, GroupMap]] = {}

    def _validate_table(self, t: np.ndarray) -> None:
        n = self.order
        if not (0 <= self.identity < n):
            raise BisetKitError("identity index out of range")
        if t.min() < 0 or t.max() >= n:
            raise BisetKitError("table entries out of range")
        ar = np.arange(n, dtype=np.int32)
        if not (np.sort(t, axis=1) == ar).all() or not (np.sort(t, axis=0) == ar[:, None]).all():
            raise BisetKitError("table is not a latin square")
        e = self.identity
        if not (t[e] == ar).all() or not (t[:, e] == ar).all():
            raise BisetKitError("identity does not act as identity")
        if n <= 64 and not (t[t] == t[:, t]).all():
            raise BisetKitError("table is not associative")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv_table[a])

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.table[int(self.table[g, x]), int(self.inv_table[g])])

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = int(self.table[x, a])
            k += 1
        return k

    def label(self, a: int) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    @property
    def is_abelian(self) -> bool:
        cached = getattr(self, "_abelian", None)
        if cached is None:
            cached = bool((self.table == self.table.T).all())
            self._abelian = cached
        return cached

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order {self.order})"


@dataclass(frozen=True)
class GroupMap:
    """A group homomorphism given by per-element images."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise BisetKitError("images length does not match source order")

    def apply(self, x: int) -> int:
        return self.images[x]

    def is_homomorphism(self) -> bool:
        s, t, im = self.source, self.target, self.images
        return all(
            im[s.mul(a, b)] == t.mul(im[a], im[b])
            for a in s.elements()
            for b in s.elements()
        )

    @property
    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order

    def kernel(self) -> "Subgroup":
        e = self.target.identity
        return Subgroup(self.source, tuple(x for x in self.source.elements() if self.images[x] == e))

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other."""
        if other.target is not self.source:
            raise BisetKitError("maps not composable")
        return GroupMap(other.source, self.target, tuple(self.images[i] for i in other.images))

    def inverse_map(self) -> "GroupMap":
        if not self.is_bijective:
            raise NotBijective("map is not bijective")
        inv = [0] * self.target.order
        for x, y in enumerate(self.images):
            inv[y] = x
        return GroupMap(self.target, self.source, tuple(inv))


class Subgroup:
    """A subgroup of an ambient group, stored as a sorted member tuple."""

    __slots__ = ("ambient", "members", "_member_set")

    def __init__(self, ambient: FiniteGroup, members, check: bool = False):
        self.ambient = ambient
        self.members: tuple[int, ...] = tuple(sorted({int(m) for m in members}))
        self._member_set = frozenset(self.members)
        if check and not self._is_subgroup():
            raise NotASubgroup(f"{self.members} is not a subgroup of {ambient.name}")

    def _is_subgroup(self) -> bool:
        g = self.ambient
        ms = self._member_set
        if g.identity not in ms:
            return False
        return all(g.mul(a, b) in ms for a in ms for b in ms)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.ambient is other.ambient
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.ambient.uid, self.members))

    def __repr__(self) -> str:
        return f"Subgroup({self.ambient.name}, order {self.order})"


class ProductGroup(FiniteGroup):
    """Direct product with flat lexicographic element indexing."""

    def __init__(self, left: FiniteGroup, right: FiniteGroup, name: str | None = None):
        nl, nr = left.order, right.order
        tl = left.table.astype(np.int64)
        tr = right.table.astype(np.int64)
        # T[(a1,b1),(a2,b2)] = tl[a1,a2]*nr + tr[b1,b2], flattened lexicographically.
        t = (tl[:, None, :, None] * nr + tr[None, :, None, :]).reshape(nl * nr, nl * nr)
        ident = left.identity * nr + right.identity
        if name is None:
            name = f"{_pname(left)}x{_pname(right)}"
        labels = None
        if left.labels is not None and right.labels is not None and nl * nr <= 4096:
            labels = tuple(
                f"({left.labels[a]},{right.labels[b]})" for a in range(nl) for b in range(nr)
            )
        super().__init__(t, identity=ident, name=name, labels=labels, validate=False)
        self.factors = (left, right)
        self.projections = (
            GroupMap(self, left, tuple(i // nr for i in range(nl * nr))),
            GroupMap(self, right, tuple(i % nr for i in range(nl * nr))),
        )
        self.injections = (
            GroupMap(left, self, tuple(a * nr + right.identity for a in range(nl))),
            GroupMap(right, self, tuple(left.identity * nr + b for b in range(nr))),
        )

    def encode(self, a: int, b: int) -> int:
        return a * self.factors[1].order + b

    def decode(self, i: int) -> tuple[int, int]:
        return divmod(i, self.factors[1].order)


def _pname(g: FiniteGroup) -> str:
    return f"({g.name})" if "x" in g.name else g.name


_product_cache: dict[tuple[int, int], ProductGroup] = {}


def direct_product(g: FiniteGroup, h: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> ProductGroup:
    """Memoized direct product G x H with lexicographic indexing."""
    caps.check_ambient(g.order * h.order)
    key = (g.uid, h.uid)
    prod = _product_cache.get(key)
    if prod is None:
        prod = ProductGroup(g, h)
        _product_cache[key] = prod
    return prod


def product_group(*factors: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> FiniteGroup:
    """Left-fold product of several groups; one factor is returned as-is."""
    if not factors:
        raise BisetKitError("product of no factors")
    acc = factors[0]
    for f in factors[1:]:
        acc = direct_product(acc, f, caps=caps)
    return acc


def group_from_generators(
    degree: int,
    generators: list[tuple[int, ...]],
    name: str | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> FiniteGroup:
    """Permutation group on {0..degree-1} generated by the given permutations.

    Element 0 is the identity; the remaining elements appear in breadth-first
    order of multiplication by the generators, so the table is deterministic.
    """
    if degree < 1:
        raise InvalidPermutation("degree must be positive")
    idset = tuple(range(degree))
    for p in generators:
        if len(p) != degree or sorted(p) != list(idset):
            raise InvalidPermutation(f"not a permutation of 0..{degree - 1}: {p}")
    gens = [tuple(p) for p in generators]
    elements: list[tuple[int, ...]] = [idset]
    index = {idset: 0}
    queue = [idset]
    while queue:
        x = queue.pop(0)
        for p in gens:
            y = tuple(x[p[i]] for i in range(degree))
            if y not in index:
                caps.check_closure(len(elements) + 1)
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[tuple(a[b[k]] for k in range(degree))]
    labels = tuple(_cycle_string(p) for p in elements)
    return FiniteGroup(table, identity=0, name=name, labels=labels,
                       provenance=f"perm_group(degree={degree})", validate=False)


def _cycle_string(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) if parts else "e"


# Built-in groups are memoized so that repeated lookups share identity.
_builtin_cache: dict[str, FiniteGroup] = {}


def trivial_group() -> FiniteGroup:
    g = _builtin_cache.get("trivial")
    if g is None:
        g = FiniteGroup(np.zeros((1, 1), dtype=np.int32), name="1", labels=("e",), validate=False)
        _builtin_cache["trivial"] = g
    return g


def cyclic_group(n: int) -> FiniteGroup:
    key = f"C{n}"
    g = _builtin_cache.get(key)
    if g is None:
        if n < 1:
            raise BisetKitError("cyclic group order must be positive")
        if n == 1:
            return trivial_group()
        ar = np.arange(n, dtype=np.int32)
        table = (ar[:, None] + ar[None, :]) % n
        labels = tuple("e" if i == 0 else f"g^{i}" if i > 1 else "g" for i in range(n))
        g = FiniteGroup(table.astype(np.int32), name=key, labels=labels, validate=False)
        _builtin_cache[key] = g
    return g


def symmetric_group(n: int) -> FiniteGroup:
    if n > 5:
        raise BisetKitError("symmetric groups are built in only up to S5")
    key = f"S{n}"
    g = _builtin_cache.get(key)
    if g is None:
        if n <= 1:
            return trivial_group()
        gens = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
        if n == 2:
            gens = [(1, 0)]
        g = group_from_generators(n, gens, name=key)
        _builtin_cache[key] = g
    return g


def klein_four() -> FiniteGroup:
    g = _builtin_cache.get("V4")
    if g is None:
        g = group_from_generators(4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="V4")
        _builtin_cache["V4"] = g
    return g


def generated_subgroup(g: FiniteGroup, gens) -> Subgroup:
    gens = np.asarray(sorted(set(int(x) for x in gens)), dtype=np.int32)
    members = kernels.closure(g.table, g.identity, gens)
    return Subgroup(g, members)


def conjugate_subgroup(s: Subgroup, g: int) -> Subgroup:
    amb = s.ambient
    gi = amb.inverse(g)
    return Subgroup(amb, (int(amb.table[int(amb.table[g, m]), gi]) for m in s.members))


def canonical_subgroup_rep(g: FiniteGroup, s: Subgroup) -> Subgroup:
    """The conjugate of S whose sorted member tuple is lexicographically least."""
    if s.ambient is not g:
        raise NotASubgroup("subgroup does not live in the given group")
    if s.members not in g._canon_cache and not s._is_subgroup():
        raise NotASubgroup(f"{s.members} is not closed in {g.name}")
    return Subgroup(g, canonical_members(g, s.members))


def canonical_members(g: FiniteGroup, members: tuple[int, ...]) -> tuple[int, ...]:
    cached = g._canon_cache.get(members)
    if cached is None:
        cached = tuple(int(x) for x in kernels.canonical_conjugate(g.table, g.inv_table, members))
        g._canon_cache[members] = cached
        g._canon_cache.setdefault(cached, cached)
    return cached


def normalizer(g: FiniteGroup, s: Subgroup) -> Subgroup:
    ms = s._member_set
    t, inv = g.table, g.inv_table
    out = []
    for x in g.elements():
        xi = int(inv[x])
        if all(int(t[int(t[x, m]), xi]) in ms for m in s.members):
            out.append(x)
    return Subgroup(g, out)


def is_normal(g: FiniteGroup, s: Subgroup) -> bool:
    ms = s._member_set
    t, inv = g.table, g.inv_table
    return all(
        int(t[int(t[x, m]), int(inv[x])]) in ms for x in g.elements() for m in s.members
    )


def diagonal(g: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> Subgroup:
    """The diagonal subgroup {(x, x)} of G x G."""
    p = direct_product(g, g, caps=caps)
    n = g.order
    return Subgroup(p, (x * n + x for x in g.elements()))


def second_projection(l: Subgroup) -> Subgroup:
    """Image of L <= G x H under the projection to the second factor."""
    amb = l.ambient
    if not isinstance(amb, ProductGroup):
        raise BisetKitError("ambient group is not a product")
    nr = amb.factors[1].order
    return Subgroup(amb.factors[1], {m % nr for m in l.members})


def first_projection(l: Subgroup) -> Subgroup:
    amb = l.ambient
    if not isinstance(amb, ProductGroup):
        raise BisetKitError("ambient group is not a product")
    nr = amb.factors[1].order
    return Subgroup(amb.factors[0], {m // nr for m in l.members})


def subgroup_as_group(s: Subgroup) -> tuple[FiniteGroup, GroupMap]:
    """S as a FiniteGroup in its own right, with the inclusion map."""
    amb = s.ambient
    cached = amb._subgroup_groups.get(s.members)
    if cached is not None:
        return cached
    pos = {m: i for i, m in enumerate(s.members)}
    k = s.order
    table = np.empty((k, k), dtype=np.int32)
    for i, a in enumerate(s.members):
        row = amb.table[a]
        for j, b in enumerate(s.members):
            table[i, j] = pos[int(row[b])]
    labels = tuple(amb.label(m) for m in s.members) if amb.labels else None
    grp = FiniteGroup(table, identity=pos[amb.identity],
                      name=f"{amb.name}|{','.join(map(str, s.members[:4]))}{'...' if s.order > 4 else ''}",
                      labels=labels, validate=False)
    inc = GroupMap(grp, amb, s.members)
    amb._subgroup_groups[s.members] = (grp, inc)
    return grp, inc


def quotient(g: FiniteGroup, n: Subgroup, caps: Caps = DEFAULT_CAPS) -> tuple[FiniteGroup, GroupMap]:
    """G/N with the canonical projection. Cosets are ordered by least element.

    Quotient by the trivial subgroup returns G itself; quotient by G returns
    the shared trivial group. Results are memoized per (G, N).
    """
    if n.ambient is not g:
        raise NotASubgroup("subgroup does not live in the given group")
    cache = getattr(g, "_quotients", None)
    if cache is None:
        cache = g._quotients = {}
    cached = cache.get(n.members)
    if cached is not None:
        return cached
    if not is_normal(g, n):
        raise NotNormal(f"{n.members} is not normal in {g.name}")
    if n.order == g.order:
        grp = trivial_group()
        result = (grp, GroupMap(g, grp, (0,) * g.order))
        cache[n.members] = result
        return result
    if n.order == 1:
        result = (g, GroupMap(g, g, tuple(g.elements())))
        cache[n.members] = result
        return result
    point_of, reps = kernels.coset_space(g.table, n.members)
    q = len(reps)
    table = np.empty((q, q), dtype=np.int32)
    for i, a in enumerate(reps):
        row = g.table[a]
        for j, b in enumerate(reps):
            table[i, j] = point_of[int(row[b])]
    labels = tuple(f"[{g.label(r)}]" for r in reps) if g.labels else None
    grp = FiniteGroup(table, identity=point_of[g.identity],
                      name=f"{g.name}/{'.'.join(map(str, n.members))}", labels=labels,
                      validate=False)
    proj = GroupMap(g, grp, tuple(int(p) for p in point_of))
    result = (grp, proj)
    cache[n.members] = result
    return result


@dataclass
class SubgroupLattice:
    """All subgroups of a group with conjugacy classes and containment."""

    group: FiniteGroup
    subgroups: list[Subgroup]
    classes: list[list[int]] = field(default_factory=list)
    reps: list[Subgroup] = field(default_factory=list)
    normalizers: list[Subgroup] = field(default_factory=list)
    subs_of: list[tuple[int, ...]] = field(default_factory=list)
    _index: dict[tuple[int, ...], int] = field(default_factory=dict)
    _class_of: dict[tuple[int, ...], int] = field(default_factory=dict)
    _mobius: dict[tuple[int, int], int] = field(default_factory=dict)

    def index_of(self, s: Subgroup) -> int:
        idx = self._index.get(s.members)
        if idx is None:
            raise NotASubgroup("not a subgroup of the lattice's group")
        return idx

    def class_of(self, s: Subgroup) -> int:
        """Index of the conjugacy class of S (S need not be canonical)."""
        canon = canonical_members(self.group, s.members)
        cls = self._class_of.get(canon)
        if cls is None:
            raise NotASubgroup("not a subgroup of the lattice's group")
        return cls

    def mobius_by_index(self, lo: int, hi: int) -> int:
        if lo == hi:
            return 1
        key = (lo, hi)
        val = self._mobius.get(key)
        if val is None:
            lo_set = self.subgroups[lo]._member_set
            total = 0
            for mid in self.subs_of[hi]:
                if mid != lo and lo_set <= self.subgroups[mid]._member_set:
                    total += self.mobius_by_index(mid, hi)
            val = -total
            self._mobius[key] = val
        return val


def subgroup_lattice(g: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> SubgroupLattice:
    """Complete subgroup lattice, memoized per group (write-once)."""
    caps.check_lattice(g.order)
    if g._lattice is not None:
        return g._lattice
    triv = (g.identity,)
    found: dict[tuple[int, ...], list[int]] = {triv: []}
    queue = [triv]
    table, ident = g.table, g.identity
    while queue:
        members = queue.pop()
        gens = found[members]
        mset = set(members)
        for x in g.elements():
            if x in mset:
                continue
            new_gens = gens + [x]
            closed = tuple(kernels.closure(table, ident, np.asarray(new_gens, dtype=np.int32)))
            if closed not in found:
                found[closed] = new_gens
                queue.append(closed)
    member_lists = sorted(found, key=lambda m: (len(m), m))
    subgroups = [Subgroup(g, m) for m in member_lists]
    lat = SubgroupLattice(group=g, subgroups=subgroups)
    lat._index = {s.members: i for i, s in enumerate(subgroups)}
    by_canon: dict[tuple[int, ...], list[int]] = {}
    for i, s in enumerate(subgroups):
        by_canon.setdefault(canonical_members(g, s.members), []).append(i)
    for canon in sorted(by_canon, key=lambda m: (len(m), m)):
        cls = len(lat.classes)
        lat.classes.append(by_canon[canon])
        lat.reps.append(subgroups[lat._index[canon]])
        lat._class_of[canon] = cls
    lat.normalizers = [normalizer(g, s) for s in subgroups]
    sets = [s._member_set for s in subgroups]
    lat.subs_of = [
        tuple(j for j in range(len(subgroups)) if sets[j] <= sets[i])
        for i in range(len(subgroups))
    ]
    g._lattice = lat
    return lat


def mobius(lattice: SubgroupLattice, lower: Subgroup, upper: Subgroup) -> int:
    """Mobius value of the interval [L, K] in the subgroup poset."""
    lo = lattice.index_of(lower)
    hi = lattice.index_of(upper)
    if not (lower._member_set <= upper._member_set):
        raise NotInInterval(f"{lower.members} is not contained in {upper.members}")
    return lattice.mobius_by_index(lo, hi)

