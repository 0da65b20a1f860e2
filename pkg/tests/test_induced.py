import random

from modrep.character import Alpha, in_ker_chi
from modrep.induced import (
    COSET_REPS,
    a_generators,
    d_alpha,
    gamma4_generators,
    in_ker_u,
    in_ker_u_by_conjugation,
    u_alpha,
    u_zero,
)
from modrep.monomial import Monomial, Phase
from modrep.psl2z import (
    IDENTITY,
    ModularElement,
    ResidueElement,
    S,
    STWord,
    T,
    in_gamma,
    in_gamma0,
    index_gamma0,
)


def rand_word(rng, max_len=25):
    tokens = []
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.4:
            tokens.append(("S", 1))
        else:
            tokens.append(("T", rng.randint(-4, 4)))
    return STWord(tokens)


def rand_alpha(rng, max_q=16):
    q = rng.randint(1, max_q)
    p = rng.randint(0, q - 1)
    return Alpha(p, q)


def expected_u_t(a: Alpha) -> Monomial:
    # col 1 -> row 1 (phase alpha), cols 2..5 cycle, col 6 -> row 6 (-alpha)
    phase = a.as_phase()
    return Monomial((0, 4, 1, 2, 3, 5), (phase, Phase.zero(), Phase.zero(), Phase.zero(), Phase.zero(), -phase))


def expected_u_s(a: Alpha) -> Monomial:
    # cols 1,2 swap; col 3 -> row 5 (phase alpha), col 5 -> row 3 (-alpha); cols 4,6 swap
    phase = a.as_phase()
    return Monomial((1, 0, 4, 5, 2, 3), (Phase.zero(), Phase.zero(), phase, Phase.zero(), -phase, Phase.zero()))


def test_coset_reps_are_pairwise_inequivalent():
    assert len(COSET_REPS) == index_gamma0(4) == 6
    assert COSET_REPS[0] == IDENTITY
    for i, ri in enumerate(COSET_REPS):
        for j, rj in enumerate(COSET_REPS):
            if i != j:
                assert not in_gamma0(ri * rj.inverse(), 4)


def test_u_alpha_matches_displayed_matrices():
    for a in (Alpha(1, 8), Alpha(1, 3), Alpha(2, 5), Alpha(3, 7)):
        assert u_alpha(a, T) == expected_u_t(a)
        assert u_alpha(a, S) == expected_u_s(a)
    assert u_alpha(Alpha(1, 8), IDENTITY).is_identity()


def test_u_zero():
    assert u_zero(T) == expected_u_t(Alpha(0))
    assert u_zero(S) == expected_u_s(Alpha(0))
    rng = random.Random(30)
    for _ in range(100):
        g = rand_word(rng).eval()
        assert u_zero(g) == u_alpha(Alpha(0), g)
    for g in gamma4_generators():
        assert u_zero(g).is_identity()


def test_homomorphism_small():
    rng = random.Random(31)
    a = Alpha(1, 8)
    for _ in range(200):
        x, y = rand_word(rng).eval(), rand_word(rng).eval()
        assert u_alpha(a, x * y) == u_alpha(a, x) * u_alpha(a, y)
    assert (u_alpha(a, S) ** 2).is_identity()
    assert ((u_alpha(a, S) * u_alpha(a, T)) ** 3).is_identity()


def test_d_alpha_decomposition():
    a = Alpha(1, 3)
    assert d_alpha(a, IDENTITY).is_identity()
    g1 = gamma4_generators()[0]
    phase = a.as_phase().scaled(4)
    assert d_alpha(a, g1) == Monomial.diagonal(
        (phase, Phase.zero(), Phase.zero(), Phase.zero(), Phase.zero(), -phase)
    )
    rng = random.Random(32)
    for _ in range(200):
        g = rand_word(rng).eval()
        d = d_alpha(a, g)
        assert d.is_diagonal()
        assert d * u_zero(g) == u_alpha(a, g)


def test_gamma4_generators_match_fixed_matrices():
    g1, g2, g3, g4, g5 = gamma4_generators()
    assert g1 == ModularElement(1, 4, 0, 1)
    assert g2 == ModularElement(1, 0, 4, 1)
    assert g3 == ModularElement(-5, -4, 4, 3)
    assert g4 == ModularElement(7, -12, -4, 7)
    assert g5 == ModularElement(-5, 4, -4, 3)
    for g in (g1, g2, g3, g4, g5):
        assert in_gamma(g, 4)


def test_a_generators_phase_patterns():
    rng = random.Random(33)
    for _ in range(25):
        a = rand_alpha(rng)
        p = a.as_phase().scaled(4)
        z = Phase.zero()
        a1, a2, a3 = a_generators(a)
        assert a1 == Monomial.diagonal((p, z, z, z, z, -p))
        assert a2 == Monomial.diagonal((z, -p, z, p, z, z))
        assert a3 == Monomial.diagonal((z, z, p, z, -p, z))


def test_image_relations():
    rng = random.Random(34)
    for _ in range(50):
        a = rand_alpha(rng)
        g1, g2, g3, g4, g5 = gamma4_generators()
        assert u_alpha(a, g5) == u_alpha(a, g3)
        assert u_alpha(a, g4) == (u_alpha(a, g1) * u_alpha(a, g2)).inverse()


def test_in_ker_u_examples():
    from modrep.character import n_of_alpha

    for a in (Alpha(0), Alpha(1, 8), Alpha(1, 3), Alpha(2, 5)):
        g1 = gamma4_generators()[0]
        assert in_ker_u(a, g1 ** n_of_alpha(a))
    assert not in_ker_u(Alpha(1, 8), T)
    g3, g5 = gamma4_generators()[2], gamma4_generators()[4]
    for a in (Alpha(0), Alpha(1, 8), Alpha(1, 3), Alpha(3, 11)):
        assert in_ker_u(a, g3.inverse() * g5)


def test_in_ker_u_agrees_with_conjugation_route():
    rng = random.Random(35)
    a = Alpha(1, 3)
    for _ in range(200):
        g = rand_word(rng).eval()
        assert in_ker_u(a, g) == in_ker_u_by_conjugation(a, g)


def test_ker_u_inside_ker_chi():
    # sample inside Gamma(4) so that kernel membership actually occurs
    rng = random.Random(36)
    pool = gamma4_generators() + tuple(g.inverse() for g in gamma4_generators())
    for a in (Alpha(1, 8), Alpha(1, 3)):
        hits = 0
        for _ in range(300):
            g = IDENTITY
            for _ in range(rng.randint(0, 6)):
                g = g * rng.choice(pool)
            if in_ker_u(a, g):
                hits += 1
                assert in_ker_chi(a, g)
        assert hits > 0


def test_g3_inv_g5_residue():
    g3, g5 = gamma4_generators()[2], gamma4_generators()[4]
    m = g3.inverse() * g5
    assert ResidueElement.reduce(m, 16) == ResidueElement.make(16, 1, 8, 8, 1)
    assert not in_gamma(m, 16)
