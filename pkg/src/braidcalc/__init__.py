"""Braid word calculus.

Free group words, braid words with an action-based equality oracle,
strand deletion and insertion, Markov combing, Cohen and Brunnian
predicates, lifting constructions, the face-system solver, and small
exactly-verified finite models of surface braid groups.
"""

from .braids import (
    DEFAULT_LETTER_BUDGET,
    BraidWord,
    BudgetExceededError,
    FreeEndo,
    Perm,
    a_gen,
    artin_endo,
    braid_pow,
    braids_equal,
    compose,
    half_twist,
    invert_braid,
    is_pure,
    perm_of,
)
from .cohen import (
    Braidlike,
    CommutatorTree,
    NotCohenError,
    NotUnaryError,
    P3CohenForm,
    P3Refusal,
    StrandPartition,
    all_faces,
    all_indices_commutator_check,
    band_commutator,
    brunnian_generator,
    cohen_commutator_certificate,
    cohen_p3_decompose,
    common_face,
    delta_square_word,
    is_brunnian,
    is_cohen,
    is_generalized_cohen,
    is_trivial,
    is_unary,
    same_braid,
    split_power_word,
    unary_factor,
)
from .combing import (
    DEFAULT_COMPONENT_BUDGET,
    CombedForm,
    PureAWord,
    aword_equal,
    aword_trivial,
    coface_on_aword,
    comb,
    conj_rule,
    face_on_aword,
    is_harmonic,
    same_band_word,
)
from .expr import (
    NotAWordError,
    ParseError,
    format_aword,
    format_braid,
    format_expression,
    parse,
    to_aword,
    to_braid,
    uses_only_bands,
)
from .faces import (
    coface_on_pure_gen,
    delete_strand,
    face_on_pure_gen,
    insert_strand,
    perm_face,
)
from .finite_models import (
    FiniteGroupModel,
    build_p1_rp2,
    build_p2_rp2,
    build_p3_s2,
    derive_rp2_face_assignments,
    enumerate_brunnian,
    enumerate_cohen,
    h_element_check,
    trivial_model,
)
from .lifting import (
    apply_skip,
    cohen_lift,
    full_lift,
    hopf_decompose,
    james_hopf,
    reassemble,
    skip_map,
    solve_cohen_system,
    tau_spread,
)
from .words import AlphabetMismatchError, GenSym, GroupWord, a_sym, commutator, x_sym

__all__ = [
    "AlphabetMismatchError",
    "Braidlike",
    "BraidWord",
    "BudgetExceededError",
    "CombedForm",
    "CommutatorTree",
    "DEFAULT_COMPONENT_BUDGET",
    "DEFAULT_LETTER_BUDGET",
    "FiniteGroupModel",
    "FreeEndo",
    "GenSym",
    "GroupWord",
    "NotAWordError",
    "NotCohenError",
    "NotUnaryError",
    "P3CohenForm",
    "P3Refusal",
    "ParseError",
    "Perm",
    "PureAWord",
    "StrandPartition",
    "a_gen",
    "a_sym",
    "all_faces",
    "all_indices_commutator_check",
    "apply_skip",
    "artin_endo",
    "aword_equal",
    "aword_trivial",
    "band_commutator",
    "braid_pow",
    "braids_equal",
    "brunnian_generator",
    "build_p1_rp2",
    "build_p2_rp2",
    "build_p3_s2",
    "coface_on_aword",
    "coface_on_pure_gen",
    "cohen_commutator_certificate",
    "cohen_lift",
    "cohen_p3_decompose",
    "comb",
    "common_face",
    "commutator",
    "compose",
    "conj_rule",
    "delete_strand",
    "delta_square_word",
    "derive_rp2_face_assignments",
    "enumerate_brunnian",
    "enumerate_cohen",
    "face_on_aword",
    "face_on_pure_gen",
    "format_aword",
    "format_braid",
    "format_expression",
    "full_lift",
    "h_element_check",
    "half_twist",
    "hopf_decompose",
    "insert_strand",
    "invert_braid",
    "is_brunnian",
    "is_cohen",
    "is_generalized_cohen",
    "is_harmonic",
    "is_pure",
    "is_trivial",
    "is_unary",
    "james_hopf",
    "parse",
    "perm_face",
    "perm_of",
    "reassemble",
    "same_band_word",
    "same_braid",
    "skip_map",
    "solve_cohen_system",
    "split_power_word",
    "tau_spread",
    "to_aword",
    "to_braid",
    "trivial_model",
    "unary_factor",
    "uses_only_bands",
]
