"""Verification suites: exact, deterministic checks behind `biset-kit verify`
and the acceptance test module.

Every check is exact (Fraction arithmetic, zero tolerance). Suite output
order is canonical, so reports are byte-stable for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import burnside, bisets, center as center_mod, decomp as decomp_mod, green, linalg
from .burnside import convert
from .config import DEFAULT_CAPS, Caps
from .green import PAMorphism, RepresentableModule
from .groups import (
    FiniteGroup,
    cyclic_group,
    direct_product,
    klein_four,
    subgroup_lattice,
    symmetric_group,
    trivial_group,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = f": {self.detail}" if (self.detail and not self.ok) else ""
        return f"{status} {self.name}{suffix}"


def _qb() -> green.BurnsideFunctor:
    return green.get_instance("burnside")


def suite_idempotents(caps: Caps = DEFAULT_CAPS) -> list[Check]:
    """Primitive idempotent families for C2, C3, C4, V4, S3: exact."""
    checks = []
    for h in (cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(), symmetric_group(3)):
        idem = burnside.idempotents(h, caps=caps)
        lat = subgroup_lattice(h, caps=caps)
        n = len(lat.reps)
        orth = all(
            burnside.mult(idem[i], idem[j])
            == (idem[i] if i == j else burnside.zero(h))
            for i in range(n)
            for j in range(n)
        )
        checks.append(Check(f"idempotents/{h.name}/orthogonality", orth))
        total = burnside.zero(h)
        for i in range(n):
            total = total + idem[i]
        checks.append(Check(f"idempotents/{h.name}/sum-is-unit", total == burnside.unit(h)))
        marks_ok = all(
            burnside.marks(idem[k], caps=caps).values
            == tuple(Fraction(1 if j == k else 0) for j in range(n))
            for k in range(n)
        )
        checks.append(Check(f"idempotents/{h.name}/marks-delta", marks_ok))
    return checks


def _engine_triples(caps: Caps, family=None):
    fam = family or (trivial_group(), cyclic_group(2), cyclic_group(3), klein_four())
    for h in fam:
        for g in fam:
            for k in fam:
                if h.order * g.order * g.order * k.order <= 144:
                    yield h, g, k


def suite_engines(seed: int = 0, caps: Caps = DEFAULT_CAPS, family=None) -> list[Check]:
    """Set-level and double-coset composition agree: exhaustive and randomized."""
    checks = []
    bad = 0
    pairs = 0
    for h, g, k in _engine_triples(caps, family):
        left = [bisets.transitive(h, g, s, caps=caps) for s in _stabs(h, g, caps)]
        right = [bisets.transitive(g, k, s, caps=caps) for s in _stabs(g, k, caps)]
        for b in left:
            for a in right:
                pairs += 1
                if bisets.compose(b, a, caps=caps) != bisets.mackey_compose(b, a, caps=caps):
                    bad += 1
    checks.append(
        Check("engines/exhaustive-transitive-pairs", bad == 0, f"{bad} of {pairs} disagree")
    )
    rng = random.Random(seed)
    triples = list(_engine_triples(caps, family))
    bad = 0
    for _ in range(200):
        h, g, k = triples[rng.randrange(len(triples))]
        b = _random_element(rng, h, g, caps)
        a = _random_element(rng, g, k, caps)
        if bisets.compose(b, a, caps=caps) != bisets.mackey_compose(b, a, caps=caps):
            bad += 1
    checks.append(Check("engines/random-rational-elements", bad == 0, f"{bad} of 200 disagree"))
    return checks


def _stabs(h: FiniteGroup, g: FiniteGroup, caps: Caps):
    return subgroup_lattice(direct_product(h, g, caps=caps), caps=caps).reps


def _random_element(rng: random.Random, h: FiniteGroup, g: FiniteGroup, caps: Caps):
    reps = _stabs(h, g, caps)
    out = bisets.zero_element(h, g)
    for _ in range(rng.randint(1, 3)):
        s = reps[rng.randrange(len(reps))]
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        out = out + coeff * bisets.transitive(h, g, s, caps=caps)
    return out


def _axiom_instances(caps: Caps):
    qb = _qb()
    sh2 = green.ShiftedFunctor(qb, cyclic_group(2))
    sh3 = green.ShiftedFunctor(qb, cyclic_group(3))
    fam = decomp_mod.burnside_shift_family(sh2, caps=caps)
    blocks = [
        decomp_mod.block_green_functor(e, sh2, label, caps=caps)
        for e, label in zip(fam.elements, fam.labels)
    ]
    return [qb, sh2, sh3] + blocks


def suite_axioms(caps: Caps = DEFAULT_CAPS, family=None) -> list[Check]:
    """Green axioms and both directions of the ring/cross equivalence."""
    checks = []
    small = tuple(family) if family else (trivial_group(), cyclic_group(2), cyclic_group(3))
    for inst in _axiom_instances(caps):
        ok_assoc = True
        ok_unit = True
        ok_fun = True
        eps = inst.unit()
        for g in small:
            for h in small:
                for k in small:
                    if inst.carrier(direct_product(g, direct_product(h, k))).order > 216:
                        continue
                    gh = direct_product(g, h)
                    hk = direct_product(h, k)
                    target = inst.carrier(direct_product(gh, k))
                    for a in inst.basis(g):
                        for b in inst.basis(h):
                            for c in inst.basis(k):
                                lhs = inst.cross(inst.cross(a, g, b, h), gh, c, k)
                                rhs = inst.cross(a, g, inst.cross(b, h, c, k), hk)
                                if lhs != convert(rhs, target):
                                    ok_assoc = False
        for g in small + (klein_four(),):
            cg = inst.carrier(g)
            for a in inst.basis(g):
                left = convert(inst.cross(eps, trivial_group(), a, g), cg)
                right = convert(inst.cross(a, g, eps, trivial_group()), cg)
                if left != a or right != a:
                    ok_unit = False
        two = (trivial_group(), cyclic_group(2))
        for g in two:
            for gp in two:
                for h in two:
                    for hp in two:
                        phis = [
                            bisets.transitive(gp, g, s, caps=caps) for s in _stabs(gp, g, caps)
                        ]
                        psis = [
                            bisets.transitive(hp, h, s, caps=caps) for s in _stabs(hp, h, caps)
                        ]
                        gh = direct_product(g, h)
                        gphp = direct_product(gp, hp)
                        for phi in phis:
                            for psi in psis:
                                phixpsi = bisets.cross(phi, psi, caps=caps)
                                for a in inst.basis(g):
                                    for b in inst.basis(h):
                                        lhs = inst.act(phixpsi, inst.cross(a, g, b, h))
                                        rhs = inst.cross(
                                            inst.act(phi, a), gp, inst.act(psi, b), hp
                                        )
                                        if lhs != rhs:
                                            ok_fun = False
        checks.append(Check(f"axioms/{inst.name}/associativity", ok_assoc))
        checks.append(Check(f"axioms/{inst.name}/unit", ok_unit))
        checks.append(Check(f"axioms/{inst.name}/functoriality", ok_fun))
        ok_defeq = True
        for g in small:
            for h in small:
                gh = direct_product(g, h)
                for a in inst.basis(g):
                    ia = inst.act(_inf_biset(gh, g, h, caps), a)
                    for b in inst.basis(h):
                        ib = inst.act(_inf_biset_right(gh, g, h, caps), b)
                        if inst.cross(a, g, b, h) != inst.ring_mult(ia, ib, gh):
                            ok_defeq = False
        checks.append(Check(f"axioms/{inst.name}/cross-from-ring", ok_defeq))
    qb = _qb()
    ok_dot = True
    for g in (cyclic_group(2), cyclic_group(3), klein_four(), symmetric_group(3)):
        for a in qb.basis(g):
            for b in qb.basis(g):
                if green.dot(qb, a, b, g) != burnside.mult(a, b):
                    ok_dot = False
    checks.append(Check("axioms/burnside/ring-from-cross", ok_dot))
    rng = random.Random(216)
    ok_assoc_big = True
    big = (klein_four(), symmetric_group(3), cyclic_group(4))
    for g in big:
        for h in big:
            for k in big:
                gh = direct_product(g, h)
                hk = direct_product(h, k)
                target = qb.carrier(direct_product(gh, k))
                bg, bh, bk = qb.basis(g), qb.basis(h), qb.basis(k)
                for _ in range(3):
                    a = bg[rng.randrange(len(bg))]
                    b = bh[rng.randrange(len(bh))]
                    c = bk[rng.randrange(len(bk))]
                    lhs = qb.cross(qb.cross(a, g, b, h), gh, c, k)
                    rhs = qb.cross(a, g, qb.cross(b, h, c, k), hk)
                    if lhs != convert(rhs, target):
                        ok_assoc_big = False
    checks.append(Check("axioms/burnside/associativity-random-large", ok_assoc_big))
    return checks


def _inf_biset(gh, g, h, caps: Caps):
    """Inflation biset for G x H -> (G x H)/(1 x H) = G."""
    from .groups import Subgroup

    prod = direct_product(gh, g, caps=caps)
    members = [(x * h.order + y) * g.order + x for x in g.elements() for y in h.elements()]
    return bisets.transitive(gh, g, Subgroup(prod, members), caps=caps)


def _inf_biset_right(gh, g, h, caps: Caps):
    from .groups import Subgroup

    prod = direct_product(gh, h, caps=caps)
    members = [(x * h.order + y) * h.order + y for x in g.elements() for y in h.elements()]
    return bisets.transitive(gh, h, Subgroup(prod, members), caps=caps)


def suite_pa(caps: Caps = DEFAULT_CAPS) -> list[Check]:
    """P_A structure over {1, C2, C3} and agreement with biset composition."""
    qb = _qb()
    fam = (trivial_group(), cyclic_group(2), cyclic_group(3))
    checks = []
    ok_unit = True
    ok_biset = True
    ok_generic = True
    for g in fam:
        for h in fam:
            idg = green.pa_identity(qb, g, caps=caps)
            idh = green.pa_identity(qb, h, caps=caps)
            for b in qb.basis(direct_product(h, g)):
                alpha = PAMorphism(qb, g, h, b)
                if green.pa_compose(idh, alpha, caps=caps) != alpha:
                    ok_unit = False
                if green.pa_compose(alpha, idg, caps=caps) != alpha:
                    ok_unit = False
    for g in fam:
        for h in fam:
            for k in fam:
                hg = direct_product(h, g)
                gk = direct_product(g, k)
                hk = direct_product(h, k)
                for b in qb.basis(hg):
                    beta = PAMorphism(qb, g, h, b)
                    bm = burnside.as_biset(b, h, g, caps=caps)
                    for a in qb.basis(gk):
                        alpha = PAMorphism(qb, k, g, a)
                        am = burnside.as_biset(a, g, k, caps=caps)
                        fast = green.pa_compose(beta, alpha, caps=caps)
                        if fast != green.pa_compose(beta, alpha, caps=caps, generic=True):
                            ok_generic = False
                        composed = burnside.as_burnside(
                            bisets.compose(bm, am, caps=caps), hk
                        )
                        if fast.value != composed:
                            ok_biset = False
    checks.append(Check("pa/unit-laws", ok_unit))
    checks.append(Check("pa/generic-equals-fast", ok_generic))
    checks.append(Check("pa/agrees-with-biset-composition", ok_biset))
    ok_assoc = True
    rng_groups = fam
    for g in rng_groups:
        for h in rng_groups:
            for k in rng_groups:
                for j in rng_groups:
                    basis1 = qb.basis(direct_product(j, k))
                    basis2 = qb.basis(direct_product(k, h))
                    basis3 = qb.basis(direct_product(h, g))
                    for c in basis1[:2]:
                        gamma = PAMorphism(qb, k, j, c)
                        for b in basis2[:2]:
                            beta = PAMorphism(qb, h, k, b)
                            for a in basis3[:2]:
                                alpha = PAMorphism(qb, g, h, a)
                                lhs = green.pa_compose(
                                    green.pa_compose(gamma, beta, caps=caps), alpha, caps=caps
                                )
                                rhs = green.pa_compose(
                                    gamma, green.pa_compose(beta, alpha, caps=caps), caps=caps
                                )
                                if lhs != rhs:
                                    ok_assoc = False
    checks.append(Check("pa/associativity", ok_assoc))
    return checks


def suite_shifts(caps: Caps = DEFAULT_CAPS) -> list[Check]:
    """Shift functors, rho = theta o psi, functoriality, adjunction naturality."""
    qb = _qb()
    checks = []
    objs = (trivial_group(), cyclic_group(2))
    for ll in (cyclic_group(2), cyclic_group(3)):
        sh = green.ShiftedFunctor(qb, ll)
        ok_rho = True
        ok_psi = True
        ok_theta = True
        ok_lambda = True
        ok_ids = True
        ok_nat_g = True
        ok_nat_h = True
        for g in objs:
            idg = green.pa_identity(qb, g, caps=caps)
            if green.rho_l(idg, ll, caps=caps) != green.pa_identity(
                qb, direct_product(g, ll), caps=caps
            ):
                ok_ids = False
            if green.lambda_l(idg, ll, caps=caps) != green.pa_identity(
                qb, direct_product(ll, g), caps=caps
            ):
                ok_ids = False
            if green.psi_l(idg, sh, caps=caps) != green.pa_identity(sh, g, caps=caps):
                ok_ids = False
            if green.theta_l(green.pa_identity(sh, g, caps=caps), sh, caps=caps) != (
                green.pa_identity(qb, direct_product(g, ll), caps=caps)
            ):
                ok_ids = False
        for g in objs:
            for h in objs:
                hg = direct_product(h, g)
                for b in qb.basis(hg):
                    alpha = PAMorphism(qb, g, h, b)
                    if green.rho_l(alpha, ll, caps=caps) != green.theta_l(
                        green.psi_l(alpha, sh, caps=caps), sh, caps=caps
                    ):
                        ok_rho = False
        for g in objs:
            for h in objs:
                for k in objs:
                    for b in qb.basis(direct_product(k, h)):
                        beta = PAMorphism(qb, h, k, b)
                        for a in qb.basis(direct_product(h, g)):
                            alpha = PAMorphism(qb, g, h, a)
                            comp = green.pa_compose(beta, alpha, caps=caps)
                            if green.psi_l(comp, sh, caps=caps) != green.pa_compose(
                                green.psi_l(beta, sh, caps=caps),
                                green.psi_l(alpha, sh, caps=caps),
                                caps=caps,
                            ):
                                ok_psi = False
                            if green.rho_l(comp, ll, caps=caps) != green.pa_compose(
                                green.rho_l(beta, ll, caps=caps),
                                green.rho_l(alpha, ll, caps=caps),
                                caps=caps,
                            ):
                                ok_rho = False
                            if green.lambda_l(comp, ll, caps=caps) != green.pa_compose(
                                green.lambda_l(beta, ll, caps=caps),
                                green.lambda_l(alpha, ll, caps=caps),
                                caps=caps,
                            ):
                                ok_lambda = False
                    for b in sh.basis(direct_product(k, h)):
                        beta = PAMorphism(sh, h, k, b)
                        for a in sh.basis(direct_product(h, g)):
                            alpha = PAMorphism(sh, g, h, a)
                            comp = green.pa_compose(beta, alpha, caps=caps)
                            if green.theta_l(comp, sh, caps=caps) != green.pa_compose(
                                green.theta_l(beta, sh, caps=caps),
                                green.theta_l(alpha, sh, caps=caps),
                                caps=caps,
                            ):
                                ok_theta = False
        for g in objs:
            for h in objs:
                hg = direct_product(h, g)
                for b in sh.basis(hg):
                    alpha = PAMorphism(sh, g, h, b)
                    for gp in objs:
                        for u_val in sh.basis(direct_product(g, gp)):
                            u = PAMorphism(sh, gp, g, u_val)
                            lhs = green.adj_tilde(green.pa_compose(alpha, u, caps=caps), sh, caps=caps)
                            rhs = green.pa_compose(
                                green.adj_tilde(alpha, sh, caps=caps),
                                green.theta_l(u, sh, caps=caps),
                                caps=caps,
                            )
                            if lhs != rhs:
                                ok_nat_g = False
                    for hp in objs:
                        for v_val in qb.basis(direct_product(hp, h)):
                            v = PAMorphism(qb, h, hp, v_val)
                            lhs = green.adj_tilde(
                                green.pa_compose(green.psi_l(v, sh, caps=caps), alpha, caps=caps),
                                sh,
                                caps=caps,
                            )
                            rhs = green.pa_compose(
                                v, green.adj_tilde(alpha, sh, caps=caps), caps=caps
                            )
                            if lhs != rhs:
                                ok_nat_h = False
        name = f"shifts/L={ll.name}"
        checks.append(Check(f"{name}/rho-equals-theta-psi", ok_rho))
        checks.append(Check(f"{name}/identities-preserved", ok_ids))
        checks.append(Check(f"{name}/psi-functorial", ok_psi))
        checks.append(Check(f"{name}/theta-functorial", ok_theta))
        checks.append(Check(f"{name}/lambda-functorial", ok_lambda))
        checks.append(Check(f"{name}/adjunction-natural-in-source", ok_nat_g))
        checks.append(Check(f"{name}/adjunction-natural-in-target", ok_nat_h))
    return checks


def suite_commute(caps: Caps = DEFAULT_CAPS) -> list[Check]:
    """The two coordinate-permutation identities and the commuting-square
    equivalence, exhaustively over groups of order <= 4."""
    qb = _qb()
    fam = (trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four())
    ok_lhs = True
    ok_rhs = True
    ok_iff = True
    for h in fam:
        for g in fam:
            alphas = [
                PAMorphism(qb, g, h, b) for b in qb.basis(direct_product(h, g))
            ]
            for ll in fam:
                for k in fam:
                    betas = [
                        PAMorphism(qb, k, ll, b) for b in qb.basis(direct_product(ll, k))
                    ]
                    for alpha in alphas:
                        rho_alpha_l = green.rho_l(alpha, ll, caps=caps)
                        rho_alpha_k = green.rho_l(alpha, k, caps=caps)
                        for beta in betas:
                            lhs1 = green.pa_compose(
                                rho_alpha_l, green.lambda_l(beta, g, caps=caps), caps=caps
                            ).value
                            crossed = qb.cross(
                                alpha.value, direct_product(h, g), beta.value, direct_product(ll, k)
                            )
                            target = qb.carrier(
                                direct_product(direct_product(h, ll), direct_product(g, k))
                            )
                            rhs1 = center_mod.permute_four(
                                qb, crossed, (h, g, ll, k), (0, 2, 1, 3), target
                            )
                            if lhs1 != rhs1:
                                ok_lhs = False
                            lhs2 = green.pa_compose(
                                green.lambda_l(beta, h, caps=caps), rho_alpha_k, caps=caps
                            ).value
                            crossed2 = qb.cross(
                                beta.value, direct_product(ll, k), alpha.value, direct_product(h, g)
                            )
                            rhs2 = center_mod.permute_four(
                                qb, crossed2, (ll, k, h, g), (2, 0, 3, 1), target
                            )
                            if lhs2 != rhs2:
                                ok_rhs = False
                            square = lhs1 == lhs2
                            comm = center_mod.commutes(
                                qb,
                                alpha.value,
                                direct_product(h, g),
                                beta.value,
                                direct_product(ll, k),
                            )
                            if square != comm:
                                ok_iff = False
    return [
        Check("commute/left-identity", ok_lhs),
        Check("commute/right-identity", ok_rhs),
        Check("commute/square-iff-commutes", ok_iff),
    ]


def suite_center(caps: Caps = DEFAULT_CAPS) -> list[Check]:
    """Center machinery for the Burnside functor over {1, C2, V4}."""
    qb = _qb()
    c2 = cyclic_group(2)
    fam = center_mod.GroupFamily((trivial_group(), c2, klein_four()), caps)
    checks = []
    ok_iota = True
    ok_pi = True
    for b in qb.basis(c2):
        cand = center_mod.iota(qb, b, c2, fam)
        if not center_mod.is_center_element(cand):
            ok_iota = False
        if center_mod.pi(cand) != b:
            ok_pi = False
    checks.append(Check("center/iota-is-natural", ok_iota))
    checks.append(Check("center/pi-iota-identity", ok_pi))
    idc = center_mod.identity_candidate(qb, fam)
    checks.append(
        Check("center/identity-candidate-natural", bool(center_mod.is_center_element(idc)))
    )
    ok_neutral = True
    ok_pi_prod = True
    for b in qb.basis(c2):
        cand = center_mod.iota(qb, b, c2, fam)
        for prod in (
            center_mod.center_product(cand, idc),
            center_mod.center_product(idc, cand),
        ):
            for pc, cc in zip(prod.components, cand.components):
                if convert(pc, cc.group) != cc:
                    ok_neutral = False
    checks.append(Check("center/identity-neutral-for-product", ok_neutral))
    basis_c2 = qb.basis(c2)
    for b1 in basis_c2:
        t = center_mod.iota(qb, b1, c2, fam)
        for b2 in basis_c2:
            s = center_mod.iota(qb, b2, c2, fam)
            prod = center_mod.center_product(t, s)
            composed = _compose_at_one(qb, center_mod.pi(t), center_mod.pi(s), c2, c2, caps)
            if convert(center_mod.pi(prod), composed.group) != composed:
                ok_pi_prod = False
    checks.append(Check("center/pi-of-product-is-composition", ok_pi_prod))
    ok_full = True
    for g in fam.groups:
        if len(center_mod.commutant_subspace(qb, g, fam)) != qb.dim(g):
            ok_full = False
    checks.append(Check("center/commutant-full-for-commutative", ok_full))
    return checks


def _compose_at_one(qb, t1, s1, l_group, k_group, caps: Caps):
    """t_1 o s_1: the contraction A(L) x A(K) -> A(L x K) through the trivial group."""
    one = trivial_group()
    t_m = PAMorphism(qb, one, l_group, convert(t1, qb.carrier(direct_product(l_group, one))))
    s_nat = PAMorphism(
        qb,
        direct_product(k_group, one),
        one,
        convert(s1, qb.carrier(direct_product(one, direct_product(k_group, one)))),
    )
    comp = green.pa_compose(t_m, s_nat, caps=caps)
    return convert(comp.value, qb.carrier(direct_product(l_group, k_group)))


def suite_decomp(caps: Caps = DEFAULT_CAPS) -> list[Check]:
    """Block decomposition dims and the second-projection prediction."""
    qb = _qb()
    c2 = cyclic_group(2)
    sh = green.ShiftedFunctor(qb, c2)
    fam = decomp_mod.burnside_shift_family(sh, caps=caps)
    module = RepresentableModule(sh)
    report = decomp_mod.decompose(module, fam, [trivial_group(), c2], caps=caps)
    dims = {
        entry["group"]: tuple(b["dim"] for b in entry["blocks"]) for entry in report.groups
    }
    checks = [
        Check(
            "decomp/shifted-C2-dims",
            report.verdict and dims.get("1") == (1, 1) and dims.get("C2") == (2, 3),
            f"dims {dims}",
        )
    ]
    builtins = [
        trivial_group(),
        c2,
        cyclic_group(3),
        cyclic_group(4),
        klein_four(),
        symmetric_group(3),
    ]
    ok_pred = True
    for h in builtins:
        sh_h = green.ShiftedFunctor(qb, h)
        fam_h = decomp_mod.burnside_shift_family(sh_h, caps=caps)
        mod_h = RepresentableModule(sh_h)
        lat_h = subgroup_lattice(h, caps=caps)
        for g in builtins:
            if g.order * h.order > 36:
                continue
            gh = direct_product(g, h, caps=caps)
            for cls, krep in enumerate(lat_h.reps):
                predicted = decomp_mod.shifted_burnside_block_basis(h, krep, g, caps=caps)
                pred_rows = [list(qb.coords(p, gh)) for p in predicted]
                rows, _p = decomp_mod.apply_block(fam_h.elements[cls], mod_h, g, caps=caps)
                if not linalg.span_equal(pred_rows, rows):
                    ok_pred = False
    checks.append(Check("decomp/second-projection-prediction", ok_pred))
    return checks


SUITES = {
    "idempotents": suite_idempotents,
    "engines": suite_engines,
    "axioms": suite_axioms,
    "pa": suite_pa,
    "shifts": suite_shifts,
    "commute": suite_commute,
    "center": suite_center,
    "decomp": suite_decomp,
}


def run_suites(
    names: list[str], seed: int = 0, caps: Caps = DEFAULT_CAPS, family=None
) -> dict:
    """Run the named suites; returns a canonical, byte-stable report dict."""
    if names == ["all"]:
        names = list(SUITES)
    out_checks = []
    for name in names:
        if name not in SUITES:
            raise KeyError(name)
        fn = SUITES[name]
        if name == "engines":
            checks = fn(seed=seed, caps=caps, family=family)
        elif name == "axioms":
            checks = fn(caps=caps, family=family)
        else:
            checks = fn(caps=caps)
        out_checks.extend(checks)
    return {
        "seed": seed,
        "suites": list(names),
        "checks": [
            {"name": c.name, "ok": c.ok, **({"detail": c.detail} if c.detail else {})}
            for c in out_checks
        ],
        "verdict": all(c.ok for c in out_checks),
    }
