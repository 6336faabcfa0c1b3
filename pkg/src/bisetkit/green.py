"""Green biset functor instances and the category-of-morphisms machinery.

An instance is data: a carrier assignment, basis, biset action, cross
product and unit. Every instance here is Burnside-payload-backed: the value
of A at an object G is an exact rational combination of subgroup classes of
``carrier(G)``, where

* the Burnside functor has carrier(G) = G,
* the shift by L has carrier(G) = base.carrier(G x L),
* an idempotent block shares its base's carriers.

Morphisms of the associated category P_A from G to H are values at H x G;
composition contracts the middle group. The shift functors (psi/theta/rho/
lambda) act on stabilizer members by pure index arithmetic, so no oversized
ambient product is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import burnside, linalg
from .bisets import BisetElement, cross as biset_cross, identity_biset, mackey_compose, transitive
from .burnside import BurnsideElement, as_biset, as_burnside, convert
from .config import DEFAULT_CAPS, Caps
from .errors import BisetKitError, GroupMismatch
from .groups import (
    FiniteGroup,
    Subgroup,
    canonical_members,
    direct_product,
    product_group,
    subgroup_lattice,
    trivial_group,
)


class GreenFunctorInstance:
    """Base class; subclasses fix carrier/act/cross/unit."""

    name: str = "abstract"

    def carrier(self, g: FiniteGroup) -> FiniteGroup:
        raise NotImplementedError

    def basis(self, g: FiniteGroup) -> list[BurnsideElement]:
        """Ordered basis of A(G), by lattice class order of the carrier."""
        return burnside.basis(self.carrier(g))

    def dim(self, g: FiniteGroup) -> int:
        return len(self.basis(g))

    def coords(self, v: BurnsideElement, g: FiniteGroup) -> tuple[Fraction, ...]:
        lat = subgroup_lattice(self.carrier(g))
        return tuple(v.coeffs.get(rep.members, Fraction(0)) for rep in lat.reps)

    def from_coords(self, coords, g: FiniteGroup) -> BurnsideElement:
        lat = subgroup_lattice(self.carrier(g))
        return BurnsideElement(
            self.carrier(g),
            {rep.members: Fraction(c) for rep, c in zip(lat.reps, coords)},
        )

    def zero(self, g: FiniteGroup) -> BurnsideElement:
        return BurnsideElement(self.carrier(g))

    def act(self, phi: BisetElement, v: BurnsideElement) -> BurnsideElement:
        """Functorial action of phi in B(K, H) on a value at H."""
        raise NotImplementedError

    def cross(
        self, v: BurnsideElement, g: FiniteGroup, w: BurnsideElement, h: FiniteGroup
    ) -> BurnsideElement:
        """Bilinear product A(G) x A(H) -> A(G x H)."""
        raise NotImplementedError

    def unit(self) -> BurnsideElement:
        raise NotImplementedError

    def ring_mult(self, a: BurnsideElement, b: BurnsideElement, g: FiniteGroup) -> BurnsideElement:
        return dot(self, a, b, g)

    def idempotent_action(
        self, e: BurnsideElement, v: BurnsideElement, g: FiniteGroup
    ) -> BurnsideElement:
        """e x v followed by the identification 1 x G = G."""
        z = self.cross(e, trivial_group(), v, g)
        return convert(z, self.carrier(g))

    def hom_compose(self, beta: "PAMorphism", alpha: "PAMorphism") -> BurnsideElement | None:
        """Optional fast path for P_A composition; None means use the generic route."""
        return None

    def __repr__(self) -> str:
        return f"<GreenFunctorInstance {self.name}>"


class BurnsideFunctor(GreenFunctorInstance):
    """The rational Burnside functor QB."""

    name = "burnside"

    def carrier(self, g: FiniteGroup) -> FiniteGroup:
        return g

    def act(self, phi: BisetElement, v: BurnsideElement) -> BurnsideElement:
        return burnside.act(phi, v)

    def cross(self, v, g, w, h) -> BurnsideElement:
        if v.group is not g or w.group is not h:
            raise GroupMismatch("value does not live at the stated group")
        return burnside.cross_burnside(v, w)

    def unit(self) -> BurnsideElement:
        return burnside.unit(trivial_group())

    def ring_mult(self, a, b, g) -> BurnsideElement:
        return burnside.mult(a, b)

    def hom_compose(self, beta: "PAMorphism", alpha: "PAMorphism") -> BurnsideElement:
        h, g, k = beta.target, beta.source, alpha.source
        bm = as_biset(beta.value, h, g)
        am = as_biset(alpha.value, g, k)
        return as_burnside(mackey_compose(bm, am), direct_product(h, k))


class ShiftedFunctor(GreenFunctorInstance):
    """Yoneda-Dress shift A_L with the diagonal product."""

    def __init__(self, base: GreenFunctorInstance, shift_group: FiniteGroup):
        self.base = base
        self.shift_group = shift_group
        self.name = f"{base.name}_shift:{shift_group.name}"

    def carrier(self, g: FiniteGroup) -> FiniteGroup:
        return self.base.carrier(direct_product(g, self.shift_group))

    def act(self, phi: BisetElement, v: BurnsideElement) -> BurnsideElement:
        phi_l = biset_cross(phi, identity_biset(self.shift_group))
        return self.base.act(phi_l, v)

    def cross(self, v, g, w, h) -> BurnsideElement:
        """The diagonal product x^d: restrict the base cross to equal shifts."""
        ll = self.shift_group
        gl = direct_product(g, ll)
        hl = direct_product(h, ll)
        z = self.base.cross(v, gl, w, hl)
        target = self.carrier(direct_product(g, h))
        ng, nh, nl = g.order, h.order, ll.order
        r = z.group.order // (ng * nh * nl * nl)
        members = []
        to_target = {}
        for gi in range(ng):
            for l in range(nl):
                base_c = (gi * nl + l) * (nh * nl)
                for hi in range(nh):
                    c_idx = (base_c + hi * nl + l) * r
                    t_idx = ((gi * nh + hi) * nl + l) * r
                    for rem in range(r):
                        members.append(c_idx + rem)
                        to_target[c_idx + rem] = t_idx + rem
        members.sort()
        return burnside.res_to(z, tuple(members), to_target, target)

    def unit(self) -> BurnsideElement:
        eps = unit_of(self.base, self.shift_group)
        return convert(eps, self.carrier(trivial_group()))

    def idempotent_action(self, e, v, g) -> BurnsideElement:
        """e x^d v computed as (inflation of e to G x L) . v in the base ring."""
        ll = self.shift_group
        e_at_l = convert(e, self.base.carrier(ll))
        gl = direct_product(g, ll)
        members = [(x * ll.order + l) * ll.order + l for x in g.elements() for l in ll.elements()]
        inf_biset = transitive(gl, ll, Subgroup(direct_product(gl, ll), members))
        inflated = self.base.act(inf_biset, e_at_l)
        return self.base.ring_mult(inflated, v, gl)


class BlockFunctor(GreenFunctorInstance):
    """The Green functor e.A cut out by an idempotent e in A(1)."""

    def __init__(self, base: GreenFunctorInstance, e: BurnsideElement, label: str):
        self.base = base
        self.e = e
        self.label = label
        self.name = f"block:{base.name}:{label}"
        self._basis_cache: dict[int, tuple[list[BurnsideElement], list, list[int]]] = {}

    def carrier(self, g: FiniteGroup) -> FiniteGroup:
        return self.base.carrier(g)

    def _block_data(self, g: FiniteGroup):
        cached = self._basis_cache.get(g.uid)
        if cached is None:
            base_basis = self.base.basis(g)
            rows = [
                list(self.base.coords(self.base.idempotent_action(self.e, b, g), g))
                for b in base_basis
            ]
            ech, pivots = linalg.rref(rows)
            vectors = [self.base.from_coords(row, g) for row in ech]
            cached = (vectors, ech, pivots)
            self._basis_cache[g.uid] = cached
        return cached

    def basis(self, g: FiniteGroup) -> list[BurnsideElement]:
        return list(self._block_data(g)[0])

    def coords(self, v: BurnsideElement, g: FiniteGroup) -> tuple[Fraction, ...]:
        _vectors, ech, pivots = self._block_data(g)
        vec = list(self.base.coords(v, g))
        out = []
        for row, p in zip(ech, pivots):
            c = vec[p]
            out.append(c)
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        if any(vec):
            raise BisetKitError("value does not lie in the block subspace")
        return tuple(out)

    def from_coords(self, coords, g: FiniteGroup) -> BurnsideElement:
        vectors = self._block_data(g)[0]
        out = self.zero(g)
        for c, vct in zip(coords, vectors):
            out = out + Fraction(c) * vct
        return out

    def act(self, phi, v) -> BurnsideElement:
        return self.base.act(phi, v)

    def cross(self, v, g, w, h) -> BurnsideElement:
        return self.base.cross(v, g, w, h)

    def unit(self) -> BurnsideElement:
        return self.e

    def ring_mult(self, a, b, g) -> BurnsideElement:
        return self.base.ring_mult(a, b, g)

    def idempotent_action(self, e, v, g) -> BurnsideElement:
        return self.base.idempotent_action(e, v, g)


# ---------------------------------------------------------------------------
# Value-level operations.


def unit_of(a: GreenFunctorInstance, g: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> BurnsideElement:
    """A(Inf_1^G)(eps): the ring unit of A(G)."""
    prod = direct_product(g, trivial_group(), caps=caps)
    phi = transitive(g, trivial_group(), Subgroup(prod, range(prod.order)), caps=caps)
    return a.act(phi, a.unit())


def dot(
    a_inst: GreenFunctorInstance,
    x: BurnsideElement,
    y: BurnsideElement,
    g: FiniteGroup,
    caps: Caps = DEFAULT_CAPS,
) -> BurnsideElement:
    """The ring product rebuilt from the cross product: restrict to the diagonal."""
    z = a_inst.cross(x, g, y, g)
    c = z.group
    n = g.order
    r = c.order // (n * n)
    target = a_inst.carrier(g)
    members = []
    to_target = {}
    for gg in range(n):
        base = (gg * n + gg) * r
        tbase = gg * r
        for rem in range(r):
            members.append(base + rem)
            to_target[base + rem] = tbase + rem
    return burnside.res_to(z, tuple(members), to_target, target)


def upsilon(
    a_inst: GreenFunctorInstance, g: FiniteGroup, x: BurnsideElement, caps: Caps = DEFAULT_CAPS
) -> BurnsideElement:
    """The canonical morphism from QB: send a G-set to its action on the unit."""
    if x.group is not g:
        raise GroupMismatch("upsilon input must be a Burnside element over G")
    phi = as_biset(x, g, trivial_group(), caps=caps)
    return a_inst.act(phi, a_inst.unit())


# ---------------------------------------------------------------------------
# The category P_A.


@dataclass(frozen=True)
class PAMorphism:
    """Morphism source -> target in P_A: a value of A at target x source."""

    functor: GreenFunctorInstance
    source: FiniteGroup
    target: FiniteGroup
    value: BurnsideElement

    def __post_init__(self):
        expected = self.functor.carrier(direct_product(self.target, self.source))
        if self.value.group is not expected:
            raise GroupMismatch("morphism value does not live at carrier(target x source)")

    def __add__(self, other: "PAMorphism") -> "PAMorphism":
        if (
            self.functor is not other.functor
            or self.source is not other.source
            or self.target is not other.target
        ):
            raise GroupMismatch("morphisms are not parallel")
        return PAMorphism(self.functor, self.source, self.target, self.value + other.value)

    def __rmul__(self, scalar) -> "PAMorphism":
        return PAMorphism(self.functor, self.source, self.target, Fraction(scalar) * self.value)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PAMorphism)
            and self.functor is other.functor
            and self.source is other.source
            and self.target is other.target
            and self.value == other.value
        )


def pa_identity(
    a_inst: GreenFunctorInstance, g: FiniteGroup, caps: Caps = DEFAULT_CAPS
) -> PAMorphism:
    """A(Ind_diag^{GxG} Inf_1^diag)(eps)."""
    gg = direct_product(g, g, caps=caps)
    prod = direct_product(gg, trivial_group(), caps=caps)
    members = [x * g.order + x for x in g.elements()]
    phi = transitive(gg, trivial_group(), Subgroup(prod, members), caps=caps)
    return PAMorphism(a_inst, g, g, a_inst.act(phi, a_inst.unit()))


def _contract_biset(
    prefix: list[FiniteGroup], mid: FiniteGroup, suffix: list[FiniteGroup], caps: Caps
) -> BisetElement:
    """The transitive biset implementing Def after Res through the middle group."""
    left = product_group(*(prefix + suffix), caps=caps) if prefix + suffix else trivial_group()
    pm = product_group(*(prefix + [mid]), caps=caps)
    mq = product_group(*([mid] + suffix), caps=caps)
    right = direct_product(pm, mq, caps=caps)
    np_ = 1
    for f in prefix:
        np_ *= f.order
    nq = 1
    for f in suffix:
        nq *= f.order
    nm = mid.order
    members = []
    for p in range(np_):
        for m in range(nm):
            for q in range(nq):
                l_idx = p * nq + q
                r_idx = (p * nm + m) * (nm * nq) + (m * nq + q)
                members.append(l_idx * right.order + r_idx)
    prod = direct_product(left, right, caps=caps)
    return transitive(left, right, Subgroup(prod, members), caps=caps)


def pa_compose(
    beta: PAMorphism, alpha: PAMorphism, caps: Caps = DEFAULT_CAPS, generic: bool = False
) -> PAMorphism:
    """Composition in P_A: contract the middle group of beta x alpha."""
    if beta.functor is not alpha.functor:
        raise GroupMismatch("morphisms live over different functors")
    if beta.source is not alpha.target:
        raise GroupMismatch(
            f"cannot compose: middle objects differ ({beta.source.name} vs {alpha.target.name})"
        )
    a_inst = beta.functor
    h, g, k = beta.target, beta.source, alpha.source
    if not generic:
        fast = a_inst.hom_compose(beta, alpha)
        if fast is not None:
            return PAMorphism(a_inst, k, h, fast)
    z = a_inst.cross(
        beta.value, direct_product(h, g), alpha.value, direct_product(g, k)
    )
    phi = _contract_biset([h], g, [k], caps)
    return PAMorphism(a_inst, k, h, a_inst.act(phi, z))


# ---------------------------------------------------------------------------
# Shift functors on P_A and the adjunction bijections. All of these act on
# stabilizer members by index arithmetic: a carrier index is always
# (object index) * R + r with R the accumulated shift radix.


def _map_value(value: BurnsideElement, target: FiniteGroup, term_map) -> BurnsideElement:
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for members, c in value.coeffs.items():
        canon = canonical_members(target, tuple(sorted(term_map(members))))
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(target, coeffs)


def psi_l(alpha: PAMorphism, shifted: ShiftedFunctor, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """Inflation functor P_A -> P_{A_L}: identity on objects."""
    a_inst = shifted.base
    if alpha.functor is not a_inst:
        raise GroupMismatch("morphism does not live over the base functor")
    h, g, ll = alpha.target, alpha.source, shifted.shift_group
    hg = direct_product(h, g, caps=caps)
    target = shifted.carrier(hg)
    r = alpha.value.group.order // hg.order
    nl = ll.order

    def term_map(members):
        return [
            ((m // r) * nl + l) * r + (m % r) for m in members for l in range(nl)
        ]

    return PAMorphism(shifted, g, h, _map_value(alpha.value, target, term_map))


def theta_l(alpha: PAMorphism, shifted: ShiftedFunctor, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """Induction functor P_{A_L} -> P_A: G goes to G x L."""
    a_inst = shifted.base
    if alpha.functor is not shifted:
        raise GroupMismatch("morphism does not live over the shifted functor")
    h, g, ll = alpha.target, alpha.source, shifted.shift_group
    hl = direct_product(h, ll, caps=caps)
    gl = direct_product(g, ll, caps=caps)
    p_obj = direct_product(hl, gl, caps=caps)
    target = a_inst.carrier(p_obj)
    nh, ng, nl = h.order, g.order, ll.order
    r = alpha.value.group.order // (nh * ng * nl)

    def term_map(members):
        out = []
        for m in members:
            hgl, rem = divmod(m, r)
            hg, l = divmod(hgl, nl)
            hh, gg = divmod(hg, ng)
            out.append(((hh * nl + l) * (ng * nl) + (gg * nl + l)) * r + rem)
        return out

    return PAMorphism(a_inst, gl, hl, _map_value(alpha.value, target, term_map))


def rho_l(alpha: PAMorphism, ll: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """The right L-shift endofunctor of P_A: alpha x L by Ind after Inf."""
    a_inst = alpha.functor
    h, g = alpha.target, alpha.source
    hl = direct_product(h, ll, caps=caps)
    gl = direct_product(g, ll, caps=caps)
    p_obj = direct_product(hl, gl, caps=caps)
    target = a_inst.carrier(p_obj)
    nh, ng, nl = h.order, g.order, ll.order
    r = alpha.value.group.order // (nh * ng)

    def term_map(members):
        out = []
        for m in members:
            hg, rem = divmod(m, r)
            hh, gg = divmod(hg, ng)
            for l in range(nl):
                out.append(((hh * nl + l) * (ng * nl) + (gg * nl + l)) * r + rem)
        return out

    return PAMorphism(a_inst, gl, hl, _map_value(alpha.value, target, term_map))


def lambda_l(alpha: PAMorphism, ll: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """The left L-shift endofunctor of P_A: L x alpha."""
    a_inst = alpha.functor
    h, g = alpha.target, alpha.source
    lh = direct_product(ll, h, caps=caps)
    lg = direct_product(ll, g, caps=caps)
    p_obj = direct_product(lh, lg, caps=caps)
    target = a_inst.carrier(p_obj)
    nh, ng, nl = h.order, g.order, ll.order
    r = alpha.value.group.order // (nh * ng)

    def term_map(members):
        out = []
        for m in members:
            hg, rem = divmod(m, r)
            hh, gg = divmod(hg, ng)
            for l in range(nl):
                out.append(((l * nh + hh) * (nl * ng) + (l * ng + gg)) * r + rem)
        return out

    return PAMorphism(a_inst, lg, lh, _map_value(alpha.value, target, term_map))


def right_shift(alpha: PAMorphism, ll: FiniteGroup, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """Alias of rho_l: the endofunctor - x L on morphisms."""
    return rho_l(alpha, ll, caps=caps)


def left_shift(ll: FiniteGroup, alpha: PAMorphism, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """Alias of lambda_l: the endofunctor L x - on morphisms."""
    return lambda_l(alpha, ll, caps=caps)


def adj_tilde(alpha: PAMorphism, shifted: ShiftedFunctor, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """Hom_{P_{A_L}}(G, psi(H)) -> Hom_{P_A}(theta(G), H): the stored value is reused."""
    if alpha.functor is not shifted:
        raise GroupMismatch("morphism does not live over the shifted functor")
    h, g, ll = alpha.target, alpha.source, shifted.shift_group
    gl = direct_product(g, ll, caps=caps)
    target = shifted.base.carrier(direct_product(h, gl, caps=caps))
    return PAMorphism(shifted.base, gl, h, convert(alpha.value, target))


def adj_tilde_inv(
    beta: PAMorphism, shifted: ShiftedFunctor, h: FiniteGroup, g: FiniteGroup,
    caps: Caps = DEFAULT_CAPS,
) -> PAMorphism:
    """Inverse of adj_tilde for beta: theta(G) -> H."""
    target = shifted.carrier(direct_product(h, g, caps=caps))
    return PAMorphism(shifted, g, h, convert(beta.value, target))


def adj_hat(alpha: PAMorphism, shifted: ShiftedFunctor, caps: Caps = DEFAULT_CAPS) -> PAMorphism:
    """Hom_{P_{A_L}}(psi(G), H) -> Hom_{P_A}(G, theta(H)): swap the G and L slots."""
    if alpha.functor is not shifted:
        raise GroupMismatch("morphism does not live over the shifted functor")
    h, g, ll = alpha.target, alpha.source, shifted.shift_group
    hl = direct_product(h, ll, caps=caps)
    target = shifted.base.carrier(direct_product(hl, g, caps=caps))
    nh, ng, nl = h.order, g.order, ll.order
    r = alpha.value.group.order // (nh * ng * nl)

    def term_map(members):
        out = []
        for m in members:
            hgl, rem = divmod(m, r)
            hg, l = divmod(hgl, nl)
            hh, gg = divmod(hg, ng)
            out.append(((hh * nl + l) * ng + gg) * r + rem)
        return out

    return PAMorphism(shifted.base, g, hl, _map_value(alpha.value, target, term_map))


# ---------------------------------------------------------------------------
# Functor-presented modules: representables A(- x X), with A itself as the
# empty-suffix case, and blocks e.M through the block instances.


@dataclass(frozen=True)
class RepresentableModule:
    """M(G) = A(G x X1 x ... x Xn); suffix () presents A as a module over itself."""

    functor: GreenFunctorInstance
    suffix: tuple[FiniteGroup, ...] = ()

    def value_object(self, g: FiniteGroup) -> FiniteGroup:
        return product_group(*((g,) + self.suffix))

    def space(self, g: FiniteGroup) -> list[BurnsideElement]:
        return self.functor.basis(self.value_object(g))

    def coords(self, m: BurnsideElement, g: FiniteGroup):
        return self.functor.coords(m, self.value_object(g))


def module_action(
    module: RepresentableModule,
    alpha: PAMorphism,
    m: BurnsideElement,
    caps: Caps = DEFAULT_CAPS,
) -> BurnsideElement:
    """alpha . m for alpha: G -> H in P_A and m in M(G)."""
    a_inst = module.functor
    if alpha.functor is not a_inst and alpha.functor is not getattr(a_inst, "base", None):
        raise GroupMismatch("morphism and module functors differ")
    h, g = alpha.target, alpha.source
    z = a_inst.cross(alpha.value, direct_product(h, g), m, module.value_object(g))
    phi = _contract_biset([h], g, list(module.suffix), caps)
    return a_inst.act(phi, z)


# ---------------------------------------------------------------------------
# Instance registry.

_registry: dict[str, GreenFunctorInstance] = {}


def register(inst: GreenFunctorInstance) -> GreenFunctorInstance:
    _registry[inst.name] = inst
    return inst


def get_instance(name: str, group_resolver=None) -> GreenFunctorInstance:
    """Resolve `burnside` and `burnside_shift:<group>` names; blocks register
    themselves when constructed."""
    inst = _registry.get(name)
    if inst is not None:
        return inst
    if name == "burnside":
        return register(BurnsideFunctor())
    if "_shift:" in name:
        base_name, _, group_expr = name.rpartition("_shift:")
        if group_resolver is None:
            raise BisetKitError(f"cannot resolve group expression {group_expr!r}")
        base = get_instance(base_name, group_resolver)
        return register(ShiftedFunctor(base, group_resolver(group_expr)))
    raise BisetKitError(f"unknown functor instance {name!r}")
