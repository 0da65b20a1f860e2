"""Exact arithmetic for the characters of Gamma_0(4), the induced
6-dimensional monomial representations of PSL(2,Z), and the congruence
certification of their kernels."""

from .analyzer import (
    AbelianProbeReport,
    CongruenceCertificate,
    GammaDInfo,
    KernelReport,
    UndecidedAtBoundError,
    abelianness_probe,
    decide_congruence,
    gamma_d_info,
    kernel_report,
    newman_genus,
    wohlfahrt_level,
)
from .character import (
    Alpha,
    Gamma04Word,
    chi,
    decompose_gamma04,
    in_ker_chi,
    n_of_alpha,
    parse_alpha,
    t_exponent,
    v_power,
)
from .engine import (
    EnumeratedMonomialGroup,
    GroupTooLargeError,
    KernelWitness,
    ModulusBoundError,
    SchreierData,
    contains_gamma_n_in_kernel,
    diagonal_subgroup,
    enumerate_monomial_group,
    enumerate_psl2_zn,
    schreier_generators,
)
from .induced import (
    COSET_REPS,
    a_generators,
    d_alpha,
    gamma4_generators,
    in_ker_u,
    in_ker_u_by_conjugation,
    u_alpha,
    u_zero,
)
from .monomial import Monomial, Phase, mono_mul, mono_order
from .psl2z import (
    IDENTITY,
    MembershipError,
    ModularElement,
    ParseError,
    ResidueElement,
    S,
    STWord,
    T,
    commutator,
    decompose_st,
    delta_gamma04,
    eval_word,
    in_gamma,
    in_gamma0,
    in_h,
    index_gamma,
    index_gamma0,
    parse_element,
    parse_matrix,
    parse_word,
    t_power,
)

__version__ = "0.1.0"
