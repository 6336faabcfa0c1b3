"""Idempotent block decomposition of module categories at evaluation level.

An orthogonal idempotent family in A(1) splits every module evaluation
M(G) into block images e.M(G); the reports record block bases (echelonized
over Q with leftmost pivots) together with the dimension-sum and pairwise
independence checks that witness the direct-sum decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import burnside, linalg
from .burnside import BurnsideElement, convert
from .config import DEFAULT_CAPS, Caps
from .errors import FamilyInvalid, GroupMismatch
from .green import (
    BlockFunctor,
    GreenFunctorInstance,
    RepresentableModule,
    ShiftedFunctor,
    register,
    unit_of,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    canonical_members,
    direct_product,
    second_projection,
    subgroup_lattice,
    trivial_group,
)


@dataclass(frozen=True)
class IdempotentFamily:
    """Idempotents of A(1) meant to be orthogonal, idempotent and complete."""

    functor: GreenFunctorInstance
    elements: tuple[BurnsideElement, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.elements) != len(self.labels):
            raise GroupMismatch("one label per idempotent is required")


@dataclass
class ValidationReport:
    ok: bool = True
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.failures.append(message)

    def __bool__(self) -> bool:
        return self.ok


def validate_family(fam: IdempotentFamily) -> ValidationReport:
    """Exact orthogonality, idempotence and completeness in the ring A(1)."""
    a_inst = fam.functor
    one = trivial_group()
    report = ValidationReport()
    for i, e in enumerate(fam.elements):
        if a_inst.ring_mult(e, e, one) != e:
            report.fail(f"{fam.labels[i]} is not idempotent")
    for i in range(len(fam.elements)):
        for j in range(i + 1, len(fam.elements)):
            prod = a_inst.ring_mult(fam.elements[i], fam.elements[j], one)
            if not prod.is_zero():
                report.fail(f"{fam.labels[i]}*{fam.labels[j]} is nonzero")
    total = a_inst.zero(one)
    for e in fam.elements:
        total = total + e
    if total != unit_of(a_inst, one):
        report.fail("family does not sum to the unit")
    return report


def apply_block(
    e: BurnsideElement,
    module: RepresentableModule,
    g: FiniteGroup,
    caps: Caps = DEFAULT_CAPS,
) -> tuple[list[list[Fraction]], list[int]]:
    """Echelon basis (rows, pivots) of the image of m -> e x m on M(G)."""
    a_inst = module.functor
    obj = module.value_object(g)
    rows = [
        list(a_inst.coords(a_inst.idempotent_action(e, m, obj), obj))
        for m in module.space(g)
    ]
    return linalg.rref(rows)


@dataclass
class DecompositionReport:
    functor: str
    labels: list[str]
    groups: list[dict] = field(default_factory=list)
    verdict: bool = True

    def to_json(self) -> dict:
        return {
            "functor": self.functor,
            "blocks": list(self.labels),
            "groups": self.groups,
            "verdict": self.verdict,
        }


def decompose(
    module: RepresentableModule,
    fam: IdempotentFamily,
    groups: list[FiniteGroup],
    caps: Caps = DEFAULT_CAPS,
) -> DecompositionReport:
    """Verify M(G) = direct sum of the block images, for each listed group."""
    validation = validate_family(fam)
    if not validation:
        raise FamilyInvalid("; ".join(validation.failures))
    report = DecompositionReport(functor=module.functor.name, labels=list(fam.labels))
    for g in groups:
        dim = len(module.space(g))
        blocks = []
        all_rows: list[list[Fraction]] = []
        for label, e in zip(fam.labels, fam.elements):
            rows, _pivots = apply_block(e, module, g, caps=caps)
            blocks.append(
                {
                    "label": label,
                    "dim": len(rows),
                    "basis": [[str(x) for x in row] for row in rows],
                }
            )
            all_rows.extend(rows)
        total = sum(b["dim"] for b in blocks)
        independent = linalg.rank(all_rows) == total if all_rows else total == 0
        sum_ok = total == dim
        report.groups.append(
            {
                "group": g.name,
                "dim": dim,
                "blocks": blocks,
                "sum_ok": sum_ok,
                "independent": independent,
            }
        )
        report.verdict = report.verdict and sum_ok and independent
    return report


def burnside_shift_family(
    shifted: ShiftedFunctor, caps: Caps = DEFAULT_CAPS
) -> IdempotentFamily:
    """The primitive idempotents of A_H(1) = QB(H) as an IdempotentFamily."""
    h = shifted.shift_group
    idem = burnside.idempotents(h, caps=caps)
    lat = subgroup_lattice(h, caps=caps)
    carrier_one = shifted.carrier(trivial_group())
    elements = []
    labels = []
    for cls in sorted(idem):
        elements.append(convert(idem[cls], carrier_one))
        labels.append(f"e[{','.join(map(str, lat.reps[cls].members))}]")
    return IdempotentFamily(shifted, tuple(elements), tuple(labels))


def shifted_burnside_block_basis(
    h: FiniteGroup,
    k: Subgroup,
    g: FiniteGroup,
    caps: Caps = DEFAULT_CAPS,
) -> list[BurnsideElement]:
    """Predicted basis of the e_K block of the H-shifted Burnside functor at G:
    the idempotents e_L of QB(G x H) whose second projection is conjugate to K."""
    if k.ambient is not h:
        raise GroupMismatch("K must be a subgroup of H")
    gh = direct_product(g, h, caps=caps)
    lat = subgroup_lattice(gh, caps=caps)
    idem = burnside.idempotents(gh, caps=caps)
    k_canon = canonical_members(h, k.members)
    out = []
    for cls, rep in enumerate(lat.reps):
        p2 = second_projection(rep)
        if canonical_members(h, p2.members) == k_canon:
            out.append(idem[cls])
    return out


def block_green_functor(
    e: BurnsideElement,
    a_inst: GreenFunctorInstance,
    label: str | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> BlockFunctor:
    """The Green functor e.A, registered under block:<base>:<label>."""
    one = trivial_group()
    if a_inst.ring_mult(e, e, one) != e:
        raise FamilyInvalid("element is not idempotent in A(1)")
    if label is None:
        label = "e[" + ",".join(map(str, sorted(e.coeffs))) + "]"
    inst = BlockFunctor(a_inst, e, label)
    return register(inst)
