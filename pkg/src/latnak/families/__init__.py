from latnak.families.axioms import (
    AxiomReport,
    AxiomResult,
    FamilyHoms,
    check_end_lattice,
    check_family,
    check_gluing,
    check_lss1,
    check_prime_conditions,
    check_row_lemma,
    check_triangle_lemma,
    check_weak,
    check_Y,
    end_algebra_pattern,
    end_is_lattice,
    is_full,
)
from latnak.families.chains import (
    ChainLink,
    LatticeChain,
    apply_chain,
    chain_certificates,
    main1_transform,
    main3_transform,
    nonexample_a4_d4,
)
from latnak.families.constructions import (
    duality_family,
    lad_family,
    lad_family_prime,
    ladder_family,
    nak_family,
    trivial_family,
)
from latnak.families.family import SFamily, subfamily, translate_family, transpose_family
from latnak.families.mutations import mutate, mutate_I, mutate_I_inv, mutate_I_t, mutate_II, mutate_II_t

__all__ = [
    "AxiomReport",
    "AxiomResult",
    "ChainLink",
    "FamilyHoms",
    "LatticeChain",
    "SFamily",
    "apply_chain",
    "chain_certificates",
    "check_Y",
    "check_end_lattice",
    "check_family",
    "check_gluing",
    "check_lss1",
    "check_prime_conditions",
    "check_row_lemma",
    "check_triangle_lemma",
    "check_weak",
    "duality_family",
    "end_algebra_pattern",
    "end_is_lattice",
    "is_full",
    "lad_family",
    "lad_family_prime",
    "ladder_family",
    "main1_transform",
    "main3_transform",
    "mutate",
    "mutate_I",
    "mutate_I_inv",
    "mutate_I_t",
    "mutate_II",
    "mutate_II_t",
    "nak_family",
    "nonexample_a4_d4",
    "subfamily",
    "translate_family",
    "transpose_family",
    "trivial_family",
]
