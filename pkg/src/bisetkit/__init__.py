"""bisetkit: exact finite-group biset algebra at desk scale.

Burnside rings with marks and primitive idempotents, the double Burnside
category with two independent composition engines, Green biset functor
instances (Burnside, Yoneda-Dress shifts, idempotent blocks) with the
category P_A, commutant/center verification over finite group families,
and idempotent block decompositions of module evaluations.
"""

from .config import Caps, DEFAULT_CAPS
from .groups import (
    FiniteGroup,
    GroupMap,
    ProductGroup,
    Subgroup,
    SubgroupLattice,
    canonical_subgroup_rep,
    cyclic_group,
    diagonal,
    direct_product,
    group_from_generators,
    klein_four,
    mobius,
    product_group,
    quotient,
    second_projection,
    subgroup_lattice,
    symmetric_group,
    trivial_group,
)
from .bisets import (
    BisetElement,
    ConcreteBiset,
    TransitiveBiset,
    compose,
    cross,
    decompose_concrete,
    def_,
    identity_biset,
    ind,
    inf,
    iso,
    mackey_compose,
    oviz,
    realize_concrete,
    res,
    transitive,
)
from .burnside import (
    BurnsideElement,
    MarkVector,
    basis_element,
    cross_burnside,
    idempotents,
    inflate,
    marks,
    mult,
    table_of_marks,
)
from .green import (
    BlockFunctor,
    BurnsideFunctor,
    GreenFunctorInstance,
    PAMorphism,
    RepresentableModule,
    ShiftedFunctor,
    adj_hat,
    adj_tilde,
    dot,
    get_instance,
    lambda_l,
    module_action,
    pa_compose,
    pa_identity,
    psi_l,
    register,
    rho_l,
    theta_l,
    unit_of,
    upsilon,
)
from .center import (
    CenterCandidate,
    CommutantReport,
    GroupFamily,
    center_product,
    commutant_subspace,
    commutes,
    iota,
    is_center_element,
    pi,
    square_commutes,
)
from .decomp import (
    DecompositionReport,
    IdempotentFamily,
    apply_block,
    block_green_functor,
    burnside_shift_family,
    decompose,
    shifted_burnside_block_basis,
    validate_family,
)

__version__ = "0.1.0"
