"""Exact-arithmetic toolkit: root data, central-quotient lifting obstructions,
spin branching and plethysm identities, quadratic form invariants, and the
Heisenberg local-global conjugacy laboratory."""

from .intmat import (
    BoundError,
    FinAbGroup,
    InputError,
    IntMatrix,
    SmithForm,
    cokernel_invariants,
    ext1_to_Z,
    smith_normal_form,
    torus_lift,
)
from .rootdata import (
    BasedRootDatum,
    CentralQuotientData,
    center_characters,
    central_quotient_data,
    datum_by_name,
    dual,
    half_sum_positive_roots,
    simple_type,
    validate,
    weyl_group,
)
from .cmdata import (
    CMEmbeddingData,
    galois_char_feasible,
    hecke_extension_feasible,
    validate_cm,
)
from .lifting import (
    HodgeFamily,
    ObstructionReport,
    ParameterPair,
    algebraicity_class,
    classify_simple_types,
    geometric_lift_exists,
    lift_archimedean_parameter,
    obstruction_classes,
    twist_by_witness,
)
from .weights import (
    LatticeMap,
    WeightMultiset,
    center_action_parity,
    irrep_weight_multiset,
    kuga_satake_embedding,
    restrict_multiset,
    spin_weight_multiset,
    verify_plethysm,
    verify_spin_branching,
    verify_spin_factorization,
    weyl_dimension,
)
from .qforms import (
    QForm,
    QFormInvariants,
    diagonalize,
    even_clifford_split,
    hilbert_symbol,
    invariants,
    k3_primitive,
)
from .heisenberg import (
    HeisenbergGroup,
    MonomialRep,
    elementwise_projective_conjugate,
    globally_twist_equivalent,
    heisenberg_group,
    rep_determinant,
    rep_rho,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
