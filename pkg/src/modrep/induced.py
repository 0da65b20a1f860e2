"""The 6-dimensional monomial representation induced from the character.

The coset representatives of Gamma_0(4) in PSL(2,Z) are frozen, in order,
as (Id, S, ST, ST^2, ST^3, ST^2 S); all matrices and JSON output index
rows and columns 1..6 against this list.  Entry (i, j) of the image of g
is chi(r_i g r_j^-1) when r_i g r_j^-1 lies in Gamma_0(4) and 0 otherwise;
exactly one row fires per column, which makes the image monomial.
"""

from __future__ import annotations

from .character import Alpha, chi, in_ker_chi
from .monomial import Monomial, Phase
from .psl2z import ModularElement, STWord, in_gamma0, parse_word

COSET_REPS: tuple[ModularElement, ...] = tuple(
    parse_word(text).eval()
    for text in ("", "S", "S T", "S T^2", "S T^3", "S T^2 S")
)

_REP_INVERSES = tuple(r.inverse() for r in COSET_REPS)


def _column_hit(g_rinv: ModularElement, j: int) -> tuple[int, ModularElement]:
    """Row index i and conjugate r_i * (g * r_j^-1) landing in Gamma_0(4)."""
    found = None
    for i, r in enumerate(COSET_REPS):
        cand = r * g_rinv
        if in_gamma0(cand, 4):
            if found is not None:
                raise RuntimeError(f"column {j + 1} hit two rows; coset list broken")
            found = (i, cand)
    if found is None:
        raise RuntimeError(f"column {j + 1} hit no row; coset list broken")
    return found


def u_alpha(a: Alpha, g: ModularElement) -> Monomial:
    """Image of g under the representation induced from the character."""
    perm = [0] * 6
    phases = [Phase.zero()] * 6
    for j in range(6):
        i, cand = _column_hit(g * _REP_INVERSES[j], j)
        perm[j] = i
        phases[j] = chi(a, cand)
    return Monomial(perm, phases)


def u_zero(g: ModularElement) -> Monomial:
    """Image of g under the permutation representation (trivial character)."""
    perm = [0] * 6
    for j in range(6):
        i, _ = _column_hit(g * _REP_INVERSES[j], j)
        perm[j] = i
    return Monomial(perm, (Phase.zero(),) * 6)


def d_alpha(a: Alpha, g: ModularElement) -> Monomial:
    """Diagonal factor: entry i is chi(r_i g r(i)^-1) with r(i) the rep
    for which the conjugate lands in Gamma_0(4).  Satisfies
    u_alpha(a, g) == d_alpha(a, g) * u_zero(g)."""
    phases = [Phase.zero()] * 6
    for i, r in enumerate(COSET_REPS):
        r_g = r * g
        hit = None
        for rj_inv in _REP_INVERSES:
            cand = r_g * rj_inv
            if in_gamma0(cand, 4):
                if hit is not None:
                    raise RuntimeError(f"row {i + 1} hit two columns; coset list broken")
                hit = cand
        if hit is None:
            raise RuntimeError(f"row {i + 1} hit no column; coset list broken")
        phases[i] = chi(a, hit)
    return Monomial.diagonal(phases)


def in_ker_u(a: Alpha, g: ModularElement) -> bool:
    """True iff the induced image of g is the identity matrix."""
    return u_alpha(a, g).is_identity()


def in_ker_u_by_conjugation(a: Alpha, g: ModularElement) -> bool:
    """Kernel test via the conjugation criterion: every r g r^-1 must lie
    in the character kernel.  Slower than in_ker_u; kept as a cross-check."""
    return all(in_ker_chi(a, r * g * rinv) for r, rinv in zip(COSET_REPS, _REP_INVERSES))


_GAMMA4_WORDS = ("T^4", "S T^-4 S", "T^-1 S T^4 S T", "T^-2 S T^-4 S T^-2", "T S T^-4 S T^-1")


def gamma4_generators() -> tuple[ModularElement, ...]:
    """The five standard generators of Gamma(4): T^4, S T^-4 S, and the
    conjugates T^-1 V T, T^-2 V^-1 T^-2, T V^-1 T^-1."""
    return tuple(parse_word(w).eval() for w in _GAMMA4_WORDS)


def gamma4_generator_words() -> tuple[STWord, ...]:
    return tuple(parse_word(w) for w in _GAMMA4_WORDS)


def a_generators(a: Alpha) -> tuple[Monomial, Monomial, Monomial]:
    """Images of the first three Gamma(4) generators: the diagonal
    generators of the abelian image of Gamma(4)."""
    g1, g2, g3, _, _ = gamma4_generators()
    images = (u_alpha(a, g1), u_alpha(a, g2), u_alpha(a, g3))
    for m in images:
        assert m.is_diagonal()
    return images
