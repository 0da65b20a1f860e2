"""Headline invariants and certificates: the kernel data of the induced
representation, the congruence decision with an explicit witness, and the
area/genus bound arithmetic for the genus-zero character kernels.

Everything numeric is exact (integers and Fractions); areas are stored as
rational multiples of pi and the spectral constants 3/16 and 8(g+1)/(2d)
enter only as rational comparisons.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .character import Alpha, n_of_alpha
from .engine import (
    DEFAULT_CAP,
    DEFAULT_MAX_MODULUS,
    GroupTooLargeError,
    KernelWitness,
    contains_gamma_n_in_kernel,
    diagonal_subgroup,
    enumerate_monomial_group,
)
from .induced import gamma4_generators, u_alpha
from .psl2z import IDENTITY, ModularElement, S, T, commutator, in_gamma, index_gamma

KERNEL_GAMMA4 = "Gamma(4)"
KERNEL_GAMMA8 = "Gamma(8)"
KERNEL_NONCONGRUENCE = "noncongruence"


class UndecidedAtBoundError(RuntimeError):
    """The decision would need a modulus beyond the configured bound."""

    def __init__(self, modulus: int, bound: int) -> None:
        super().__init__(
            f"deciding needs Gamma({modulus}) data but the modulus bound is {bound}"
        )
        self.modulus = modulus
        self.bound = bound


@dataclass(frozen=True)
class CrossChecks:
    image_order: int
    diagonal_order: int
    t_image_order: int


@dataclass(frozen=True)
class KernelReport:
    """The five invariants of the representation kernel for one alpha."""

    alpha: Alpha
    n_order: int
    index: int
    genus: int
    cusps: int
    level: int
    free_generators: int
    area_over_pi: Fraction
    cross_checks: CrossChecks | None = None

    def to_json_dict(self) -> dict:
        out = {
            "alpha": str(self.alpha),
            "N": self.n_order,
            "index": self.index,
            "genus": self.genus,
            "cusps": self.cusps,
            "level": self.level,
            "free_generators": self.free_generators,
            "area_over_pi": str(self.area_over_pi),
        }
        if self.cross_checks is not None:
            out["cross_checks"] = {
                "image_order": self.cross_checks.image_order,
                "diagonal_order": self.cross_checks.diagonal_order,
                "t_image_order": self.cross_checks.t_image_order,
            }
        return out


def newman_genus(mu: int, level: int) -> Fraction:
    """Genus of a normal subgroup of index mu and level n via the identity
    g = 1 + mu/12 - t/2 with t = mu/n; t must be integral."""
    if level < 1 or mu % level != 0:
        raise ValueError(f"level {level} must divide the index {mu}")
    t = mu // level
    return 1 + Fraction(mu, 12) - Fraction(t, 2)


def wohlfahrt_level(a: Alpha) -> int:
    """Level as the cusp width at infinity: the order of the image of T.

    The kernel is normal, so all cusps share this width and the lcm is
    the width itself.
    """
    return u_alpha(a, T).order()


def kernel_report(
    a: Alpha,
    verify: bool = False,
    cap: int = DEFAULT_CAP,
) -> KernelReport:
    """Invariant suite for ker U_alpha; with verify, enumerate the image
    group and fail loudly if the counts disagree with the formulas."""
    n = n_of_alpha(a)
    index = 24 * n**3
    genus = 1 + 2 * n**3 - 3 * n**2
    cusps = 6 * n**2
    level = 4 * n
    free_generators = 4 * n**3 + 1
    area_over_pi = Fraction(index, 3)
    assert area_over_pi == 2 * (2 * genus - 2 + cusps)
    assert newman_genus(index, level) == genus
    cross = None
    if verify:
        if index > cap:
            raise GroupTooLargeError(index, cap)
        group = enumerate_monomial_group([u_alpha(a, S), u_alpha(a, T)], cap=cap)
        diag = diagonal_subgroup(group)
        cross = CrossChecks(group.order, diag.order, wohlfahrt_level(a))
        if cross.image_order != index:
            raise RuntimeError(f"enumerated image order {cross.image_order} != {index}")
        if cross.diagonal_order != n**3:
            raise RuntimeError(f"diagonal order {cross.diagonal_order} != {n**3}")
        if cross.t_image_order != level:
            raise RuntimeError(f"order of image of T {cross.t_image_order} != {level}")
    return KernelReport(
        a, n, index, genus, cusps, level, free_generators, area_over_pi, cross
    )


@dataclass(frozen=True)
class CongruenceCertificate:
    """Machine-checkable congruence verdict for one alpha.

    congruent means Gamma(4N) is contained in the kernel, the level 4N
    being the only modulus a congruence kernel could realize.  A witness
    is attached exactly in the noncongruence case.
    """

    alpha: Alpha
    n_order: int
    congruent: bool
    kernel_id: str
    checked_level: int
    witness: KernelWitness | None = None

    def to_json_dict(self) -> dict:
        out = {
            "alpha": str(self.alpha),
            "N": self.n_order,
            "congruent": self.congruent,
            "kernel": self.kernel_id,
            "level": self.checked_level,
        }
        if self.witness is not None:
            w = self.witness
            out["witness"] = {
                "matrix": [[w.element.a, w.element.b], [w.element.c, w.element.d]],
                "word": str(w.word),
                "image": w.image.to_json_dict(),
            }
        return out


def decide_congruence(
    a: Alpha,
    max_modulus: int = DEFAULT_MAX_MODULUS,
    cap: int = DEFAULT_CAP,
    cache_dir: str | Path | None = None,
) -> CongruenceCertificate:
    """Decide congruence of ker U_alpha by scanning Gamma(4N).

    Congruent kernels are identified as Gamma(4) (N = 1) or Gamma(8)
    (N = 2); for N = 2 the reverse inclusion is certified by the index
    count |image| = [PSL(2,Z) : Gamma(8)].  Noncongruence comes with the
    first failing Schreier generator as witness.
    """
    n = n_of_alpha(a)
    level = 4 * n
    if level > max_modulus:
        raise UndecidedAtBoundError(level, max_modulus)
    contained, witness = contains_gamma_n_in_kernel(
        a, level, max_modulus=max_modulus, cache_dir=cache_dir
    )
    if not contained:
        assert witness is not None
        return CongruenceCertificate(a, n, False, KERNEL_NONCONGRUENCE, level, witness)
    if n == 1:
        kernel_id = KERNEL_GAMMA4
    elif n == 2:
        group = enumerate_monomial_group([u_alpha(a, S), u_alpha(a, T)], cap=cap)
        if group.order != index_gamma(8):
            raise RuntimeError(
                f"image order {group.order} contradicts the Gamma(8) identification"
            )
        kernel_id = KERNEL_GAMMA8
    else:
        raise RuntimeError(f"Gamma({level}) contained in kernel with N = {n}")
    return CongruenceCertificate(a, n, True, kernel_id, level)


@dataclass(frozen=True)
class AbelianProbeReport:
    """Result of sampling commutators of Gamma(4) elements mod 2^(k+2)."""

    k: int
    modulus: int
    samples: int
    sampled_all_in: bool
    first_failure: ModularElement | None
    witness_commutator: ModularElement
    witness_in: bool


def abelianness_probe(k: int, samples: int, seed: int = 0) -> AbelianProbeReport:
    """Test whether commutators of Gamma(4) land in Gamma(2^(k+2)).

    Samples random length <= 10 words in the five standard generators.
    The fixed pair (T^4, S T^4 S) has commutator [[17,64],[64,241]], which
    settles the k >= 3 direction deterministically.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    modulus = 2 ** (k + 2)
    gens = gamma4_generators()
    pool = gens + tuple(g.inverse() for g in gens)
    rng = random.Random(seed)

    def sample() -> ModularElement:
        m = IDENTITY
        for _ in range(rng.randint(1, 10)):
            m = m * rng.choice(pool)
        return m

    all_in = True
    first_failure = None
    for _ in range(samples):
        comm = commutator(sample(), sample())
        if not in_gamma(comm, modulus):
            all_in = False
            first_failure = comm
            break
    h1 = ModularElement(1, 4, 0, 1)
    h2 = ModularElement(-1, 0, 4, -1)
    wit = commutator(h1, h2)
    return AbelianProbeReport(
        k, modulus, samples, all_in, first_failure, wit, in_gamma(wit, modulus)
    )


@dataclass(frozen=True)
class GammaDInfo:
    """Signature and bound arithmetic for the genus-zero character kernels
    of index d inside Gamma_0(4)."""

    d: int
    index_in_psl: int
    genus: int
    cusps: int
    parabolic_generators: int
    area_over_pi: Fraction
    gauss_bonnet_area_over_pi: Fraction
    zograf_applicable: bool
    congruence_excluded_by_bound: bool
    known_congruent: bool

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "index_in_psl": self.index_in_psl,
            "genus": self.genus,
            "cusps": self.cusps,
            "parabolic_generators": self.parabolic_generators,
            "area_over_pi": str(self.area_over_pi),
            "gauss_bonnet_area_over_pi": str(self.gauss_bonnet_area_over_pi),
            "zograf_applicable": self.zograf_applicable,
            "congruence_excluded_by_bound": self.congruence_excluded_by_bound,
            "known_congruent": self.known_congruent,
        }


def gamma_d_info(d: int) -> GammaDInfo:
    """Exact data for the index-d kernel: area 2*pi*d, genus 0, d+2 cusps.

    The eigenvalue bound lambda_1 < 8pi(g+1)/area applies once the area
    reaches 32pi(g+1), i.e. d >= 16; combined with the congruence lower
    bound 3/16 it excludes congruence exactly when 4/d <= 3/16.  The two
    conditions are reported separately because the bound's precondition
    genuinely fails for d < 16.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    genus = 0
    cusps = d + 2
    area_over_pi = Fraction(2 * d)
    gauss_bonnet = Fraction(2 * (2 * genus - 2 + cusps))
    applicable = area_over_pi >= 32 * (genus + 1)
    excluded = applicable and not (Fraction(3, 16) < Fraction(8 * (genus + 1), 2 * d))
    return GammaDInfo(
        d=d,
        index_in_psl=6 * d,
        genus=genus,
        cusps=cusps,
        parabolic_generators=cusps,
        area_over_pi=area_over_pi,
        gauss_bonnet_area_over_pi=gauss_bonnet,
        zograf_applicable=applicable,
        congruence_excluded_by_bound=excluded,
        known_congruent=d in (1, 2, 4, 8),
    )
