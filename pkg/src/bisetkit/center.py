"""Finite-family commutant and center machinery.

The commutant and center are defined by quantifying over a class of groups;
here both are computed relative to an explicit finite family D' of groups
(default {1, C2, C3, V4}). Reports always carry the family they were checked
against: a "true" verdict means "natural/commuting against every basis
morphism over D'", nothing stronger.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .burnside import BurnsideElement, convert
from .config import DEFAULT_CAPS, Caps
from .errors import GroupMismatch, NotInCommutant
from .green import (
    GreenFunctorInstance,
    PAMorphism,
    lambda_l,
    pa_compose,
    pa_identity,
    rho_l,
)
from .groups import (
    FiniteGroup,
    canonical_members,
    cyclic_group,
    direct_product,
    klein_four,
    product_group,
    trivial_group,
)


@dataclass(frozen=True)
class GroupFamily:
    """Ordered finite family D' of groups; must contain the trivial group."""

    groups: tuple[FiniteGroup, ...]
    caps: Caps = DEFAULT_CAPS

    def __post_init__(self):
        if not any(g.order == 1 for g in self.groups):
            raise GroupMismatch("family must contain the trivial group")

    def names(self) -> list[str]:
        return [g.name for g in self.groups]


def default_family(caps: Caps = DEFAULT_CAPS) -> GroupFamily:
    return GroupFamily((trivial_group(), cyclic_group(2), cyclic_group(3), klein_four()), caps)


@dataclass
class CommutantReport:
    """Per-check outcomes for a commutation or naturality verification."""

    subject: str
    family: list[str]
    checks: list[dict] = field(default_factory=list)
    verdict: bool = True

    def record(self, ok: bool, **where) -> None:
        self.checks.append({**where, "ok": bool(ok)})
        self.verdict = self.verdict and bool(ok)

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "family": list(self.family),
            "checks": self.checks,
            "verdict": self.verdict,
        }


def _swap_cross(
    a_inst: GreenFunctorInstance,
    b: BurnsideElement,
    h: FiniteGroup,
    a: BurnsideElement,
    g: FiniteGroup,
) -> BurnsideElement:
    """A(Iso_{HxG}^{GxH})(b x a), as a value at carrier(G x H)."""
    z = a_inst.cross(b, h, a, g)
    target = a_inst.carrier(direct_product(g, h))
    nh, ng = h.order, g.order
    r = z.group.order // (nh * ng)

    def images(idx: int) -> int:
        hg, rem = divmod(idx, r)
        hh, gg = divmod(hg, ng)
        return (gg * nh + hh) * r + rem

    coeffs: dict[tuple[int, ...], Fraction] = {}
    for members, c in z.coeffs.items():
        canon = canonical_members(target, tuple(sorted(images(m) for m in members)))
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(target, coeffs)


def commutes(
    a_inst: GreenFunctorInstance,
    a: BurnsideElement,
    g: FiniteGroup,
    b: BurnsideElement,
    h: FiniteGroup,
) -> bool:
    """a x b == Iso(b x a), exactly."""
    return a_inst.cross(a, g, b, h) == _swap_cross(a_inst, b, h, a, g)


def commutant_report(
    a_inst: GreenFunctorInstance,
    a: BurnsideElement,
    g: FiniteGroup,
    family: GroupFamily,
) -> CommutantReport:
    report = CommutantReport(subject=repr(a), family=family.names())
    for h in family.groups:
        for i, b in enumerate(a_inst.basis(h)):
            report.record(commutes(a_inst, a, g, b, h), H=h.name, basis_index=i)
    return report


def commutant_subspace(
    a_inst: GreenFunctorInstance, g: FiniteGroup, family: GroupFamily
) -> list[BurnsideElement]:
    """Basis of {a in A(G) : a commutes with every basis element over D'}.

    The commutation condition is linear in a, so basis quantification over
    the family is complete for the family.
    """
    basis_g = a_inst.basis(g)
    n = len(basis_g)
    rows: list[list[Fraction]] = []
    for h in family.groups:
        for b in a_inst.basis(h):
            gh = direct_product(g, h)
            diffs = [
                a_inst.coords(
                    a_inst.cross(ai, g, b, h) - _swap_cross(a_inst, b, h, ai, g), gh
                )
                for ai in basis_g
            ]
            for row_idx in range(len(diffs[0]) if diffs else 0):
                row = [diffs[col][row_idx] for col in range(n)]
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * n]
    null = linalg.nullspace(rows, n)
    return [a_inst.from_coords(v, g) for v in null]


@dataclass(frozen=True)
class CenterCandidate:
    """A family (t_G) with t_G in A(G x L x G), indexed by the group family."""

    functor: GreenFunctorInstance
    shift_group: FiniteGroup
    family: GroupFamily
    components: tuple[BurnsideElement, ...]

    def __post_init__(self):
        if len(self.components) != len(self.family.groups):
            raise GroupMismatch("one component per family group is required")

    def component(self, g: FiniteGroup) -> BurnsideElement:
        for grp, comp in zip(self.family.groups, self.components):
            if grp is g:
                return comp
        raise GroupMismatch(f"{g.name} is not in the candidate's family")

    def component_morphism(self, g: FiniteGroup) -> PAMorphism:
        """t_G as the morphism G -> G x L in P_A."""
        gl = direct_product(g, self.shift_group)
        value = convert(self.component(g), self.functor.carrier(direct_product(gl, g)))
        return PAMorphism(self.functor, g, gl, value)


def component_group(a_inst, g: FiniteGroup, shift: FiniteGroup) -> FiniteGroup:
    return a_inst.carrier(product_group(g, shift, g))


def is_center_element(cand: CenterCandidate) -> CommutantReport:
    """Naturality of (t_G): alpha o_G t_G == t_H o_H alpha for all basis alpha.

    The left side contracts alpha against t_G read as a morphism L x G -> G,
    the right side contracts t_H (read as H -> H x L) against alpha; both
    land in A(H x L x G) and must agree exactly.
    """
    a_inst = cand.functor
    ll = cand.shift_group
    report = CommutantReport(
        subject=f"center candidate at {ll.name}", family=cand.family.names()
    )
    for g in cand.family.groups:
        lg = direct_product(ll, g)
        t_g_nat = PAMorphism(
            a_inst, lg, g, convert(cand.component(g), a_inst.carrier(direct_product(g, lg)))
        )
        for h in cand.family.groups:
            t_h = cand.component_morphism(h)
            hg = direct_product(h, g)
            lhs_carrier = a_inst.carrier(direct_product(h, lg))
            for i, b in enumerate(a_inst.basis(hg)):
                alpha = PAMorphism(a_inst, g, h, b)
                lhs = pa_compose(alpha, t_g_nat).value
                rhs = convert(pa_compose(t_h, alpha).value, lhs_carrier)
                report.record(lhs == rhs, G=g.name, H=h.name, basis_index=i)
    return report


def identity_candidate(
    a_inst: GreenFunctorInstance, family: GroupFamily
) -> CenterCandidate:
    """The identity transformation, as a candidate at the trivial shift."""
    comps = []
    for g in family.groups:
        ident = pa_identity(a_inst, g)
        target = component_group(a_inst, g, trivial_group())
        comps.append(convert(ident.value, target))
    return CenterCandidate(a_inst, trivial_group(), family, tuple(comps))


def iota(
    a_inst: GreenFunctorInstance,
    alpha: BurnsideElement,
    k: FiniteGroup,
    family: GroupFamily,
) -> CenterCandidate:
    """The candidate (G x alpha)_G built from a commutant element alpha in A(K).

    Refuses non-commutant input: naturality of the resulting family needs it.
    """
    for h in family.groups:
        for b in a_inst.basis(h):
            if not commutes(a_inst, alpha, k, b, h):
                raise NotInCommutant(
                    f"element is not in the commutant relative to the family (fails at {h.name})"
                )
    alpha_m = PAMorphism(
        a_inst,
        trivial_group(),
        k,
        convert(alpha, a_inst.carrier(direct_product(k, trivial_group()))),
    )
    comps = []
    for g in family.groups:
        lam = lambda_l(alpha_m, g)
        comps.append(convert(lam.value, component_group(a_inst, g, k)))
    return CenterCandidate(a_inst, k, family, tuple(comps))


def pi(cand: CenterCandidate) -> BurnsideElement:
    """Projection to the component at the trivial group, as a value in A(L)."""
    one = next(g for g in cand.family.groups if g.order == 1)
    return convert(cand.component(one), cand.functor.carrier(cand.shift_group))


def center_product(t: CenterCandidate, s: CenterCandidate) -> CenterCandidate:
    """(t x s)_G = t_G composed with s_G, a candidate at L x K."""
    if t.functor is not s.functor:
        raise GroupMismatch("candidates live over different functors")
    if t.family is not s.family and t.family.groups != s.family.groups:
        raise GroupMismatch("candidates use different families")
    a_inst = t.functor
    lk = direct_product(t.shift_group, s.shift_group)
    comps = []
    for g in t.family.groups:
        t_m = t.component_morphism(g)
        # s_G viewed as a morphism K x G -> G by reading its last G as the source.
        kg = direct_product(s.shift_group, g)
        s_nat = PAMorphism(
            a_inst,
            kg,
            g,
            convert(s.component(g), a_inst.carrier(direct_product(g, kg))),
        )
        comp = pa_compose(t_m, s_nat)
        comps.append(convert(comp.value, component_group(a_inst, g, lk)))
    return CenterCandidate(a_inst, lk, t.family, tuple(comps))


def square_commutes(
    a_inst: GreenFunctorInstance,
    alpha: PAMorphism,
    beta: PAMorphism,
) -> bool:
    """(alpha x L) after (G x beta) == (H x beta) after (alpha x K)."""
    g, h = alpha.source, alpha.target
    k, ll = beta.source, beta.target
    lhs = pa_compose(rho_l(alpha, ll), lambda_l(beta, g))
    rhs = pa_compose(lambda_l(beta, h), rho_l(alpha, k))
    return lhs == rhs


def permute_four(
    a_inst: GreenFunctorInstance,
    value: BurnsideElement,
    dims: tuple[FiniteGroup, FiniteGroup, FiniteGroup, FiniteGroup],
    perm: tuple[int, int, int, int],
    target: FiniteGroup,
) -> BurnsideElement:
    """Apply the coordinate-permuting Iso to a value at a 4-fold product."""
    orders = [d.order for d in dims]
    total = orders[0] * orders[1] * orders[2] * orders[3]
    r = value.group.order // total

    def images(idx: int) -> int:
        coord, rem = divmod(idx, r)
        cs = []
        for o in reversed(orders):
            coord, ci = divmod(coord, o)
            cs.append(ci)
        cs.reverse()
        out = 0
        for pidx in perm:
            out = out * orders[pidx] + cs[pidx]
        return out * r + rem

    coeffs: dict[tuple[int, ...], Fraction] = {}
    for members, c in value.coeffs.items():
        canon = canonical_members(target, tuple(sorted(images(m) for m in members)))
        coeffs[canon] = coeffs.get(canon, Fraction(0)) + c
    return BurnsideElement(target, coeffs)


def commute_identity_lhs(a_inst, alpha: PAMorphism, beta: PAMorphism):
    """Both sides of (alpha x L) o (G x beta) = Iso(alpha x beta)."""
    g, h = alpha.source, alpha.target
    k, ll = beta.source, beta.target
    lhs = pa_compose(rho_l(alpha, ll), lambda_l(beta, g)).value
    crossed = a_inst.cross(
        alpha.value, direct_product(h, g), beta.value, direct_product(ll, k)
    )
    hl = direct_product(h, ll)
    gk = direct_product(g, k)
    target = a_inst.carrier(direct_product(hl, gk))
    rhs = permute_four(a_inst, crossed, (h, g, ll, k), (0, 2, 1, 3), target)
    return lhs, rhs


def commute_identity_rhs(a_inst, alpha: PAMorphism, beta: PAMorphism):
    """Both sides of (H x beta) o (alpha x K) = Iso(beta x alpha)."""
    g, h = alpha.source, alpha.target
    k, ll = beta.source, beta.target
    lhs = pa_compose(lambda_l(beta, h), rho_l(alpha, k)).value
    crossed = a_inst.cross(
        beta.value, direct_product(ll, k), alpha.value, direct_product(h, g)
    )
    hl = direct_product(h, ll)
    gk = direct_product(g, k)
    target = a_inst.carrier(direct_product(hl, gk))
    rhs = permute_four(a_inst, crossed, (ll, k, h, g), (2, 0, 3, 1), target)
    return lhs, rhs
