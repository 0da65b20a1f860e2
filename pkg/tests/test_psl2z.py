import random
from fractions import Fraction

import pytest

from modrep.psl2z import (
    IDENTITY,
    ModularElement,
    ParseError,
    ResidueElement,
    S,
    STWord,
    T,
    commutator,
    decompose_st,
    delta_gamma04,
    in_gamma,
    in_gamma0,
    in_h,
    index_gamma,
    index_gamma0,
    parse_matrix,
    parse_word,
    t_power,
)


def rand_word(rng, max_len=40):
    tokens = []
    for _ in range(rng.randint(0, max_len)):
        if rng.random() < 0.4:
            tokens.append(("S", 1))
        else:
            tokens.append(("T", rng.randint(-4, 4)))
    return STWord(tokens)


def test_canonical_form():
    m = ModularElement(-1, 0, -4, -1)
    assert m.entries() == (1, 0, 4, 1)
    assert ModularElement(1, 0, 4, 1) == m
    # c == 0 representative has d > 0
    assert ModularElement(-1, -7, 0, -1) == t_power(7)
    # canonicalization is idempotent and kills the global sign
    assert ModularElement(*m.entries()) == m


def test_determinant_validation():
    with pytest.raises(ValueError):
        ModularElement(1, 2, 3, 4)


def test_mul_examples():
    assert S * S == IDENTITY
    for a, b in [(3, 5), (-2, 2), (0, -7)]:
        assert t_power(a) * t_power(b) == t_power(a + b)
    g4 = t_power(-2) * (S * t_power(-4) * S) * t_power(-2)
    assert g4 == ModularElement(7, -12, -4, 7)


def test_inverse_and_pow():
    rng = random.Random(1)
    for _ in range(50):
        m = rand_word(rng).eval()
        assert m * m.inverse() == IDENTITY
        assert m**3 == m * m * m
        assert m**-2 == m.inverse() * m.inverse()


def test_relations():
    assert S * S == IDENTITY
    assert (S * T) ** 3 == IDENTITY


def test_eval_word_examples():
    assert parse_word("S T^4 S").eval() == ModularElement(-1, 0, 4, -1)
    assert STWord().eval() == IDENTITY
    assert parse_word("T^-1 S T^4 S T").eval() == ModularElement(-5, -4, 4, 3)


def test_word_reduction():
    w = STWord([("T", 2), ("T", -2), ("S", 1), ("S", 1), ("T", 3)])
    assert w.tokens == (("T", 3),)
    assert (w * w.inverse()).tokens == ()


def test_eval_is_multiplicative():
    rng = random.Random(2)
    for _ in range(1000):
        w1, w2 = rand_word(rng), rand_word(rng)
        assert (w1 * w2).eval() == w1.eval() * w2.eval()


def test_decompose_st_examples():
    assert decompose_st(IDENTITY).tokens == ()
    assert str(decompose_st(ModularElement(1, 7, 0, 1))) == "T^7"
    m = ModularElement(7, -12, -4, 7)
    assert decompose_st(m).eval() == m


def test_decompose_st_round_trip():
    rng = random.Random(3)
    for _ in range(300):
        m = rand_word(rng).eval()
        word = decompose_st(m)
        assert word.eval() == m
        # O(log) length: tokens bounded well below the entry sizes
        assert len(word) <= 2 * max(abs(x) for x in m.entries()).bit_length() + 3


def test_in_gamma0():
    assert in_gamma0(T, 4)
    assert not in_gamma0(S, 4)
    assert in_gamma0(ModularElement(-1, 0, 4, -1), 4)


def test_in_gamma():
    assert in_gamma(ModularElement(1, 4, 0, 1), 4)
    w = ModularElement(17, 64, 64, 241)
    assert in_gamma(w, 16)
    assert not in_gamma(w, 32)
    assert not in_gamma(S, 2)


def test_in_h():
    # every Gamma(4) element is scalar (alpha = 1) mod 4
    assert in_h(ModularElement(1, 4, 0, 1), 4)
    assert in_h(ModularElement(-5, -4, 4, 3), 4)
    assert not in_h(S, 4)


def test_in_h_scalar_mod_8():
    # brute-force a determinant-1 element congruent to diag(3,3) mod 8
    found = None
    for a in range(-21, 22):
        for d in range(-21, 22):
            if a % 8 != 3 or d % 8 != 3:
                continue
            rem = a * d - 1
            for b in range(-24, 25, 8):
                if b != 0 and rem % b == 0 and (rem // b) % 8 == 0:
                    found = ModularElement(a, b, rem // b, d)
                    break
            if found:
                break
        if found:
            break
    assert found is not None
    assert in_h(found, 8)
    assert not in_gamma(found, 8)


def test_index_gamma():
    assert index_gamma(2) == 6
    # (1/2) n^3 prod (1 - 1/p^2), evaluated independently with Fractions
    for n, primes in [(4, [2]), (8, [2]), (12, [2, 3])]:
        expect = Fraction(n**3, 2)
        for p in primes:
            expect *= 1 - Fraction(1, p * p)
        assert index_gamma(n) == expect
    assert index_gamma(4) == 24
    assert index_gamma(8) == 192
    with pytest.raises(ValueError):
        index_gamma(1)


def test_index_gamma0():
    assert index_gamma0(4) == 6
    assert index_gamma0(1) == 1
    assert index_gamma0(6) == 12


def test_index_gamma0_against_coset_count():
    # group order / #{residues with c = 0 mod n} must equal the index
    from modrep.engine import enumerate_psl2_zn

    for n in range(2, 13):
        data = enumerate_psl2_zn(n)
        stabilizer = sum(1 for e in data.elements() if e.c % n == 0)
        assert index_gamma0(n) * stabilizer == len(data)


def test_delta_gamma04():
    assert delta_gamma04(T) == 1
    assert delta_gamma04(S) == 0
    st2s = parse_word("S T^2 S").eval()
    assert delta_gamma04(st2s) == (1 if st2s.c % 4 == 0 else 0)
    assert delta_gamma04(st2s) == 0


def test_commutator_explicit_pair():
    h1 = ModularElement(1, 4, 0, 1)
    h2 = ModularElement(-1, 0, 4, -1)
    assert commutator(h1, h2) == ModularElement(17, 64, 64, 241)


def test_gamma4_commutators_in_gamma16():
    from modrep.induced import gamma4_generators

    gens = gamma4_generators()
    pool = gens + tuple(g.inverse() for g in gens)
    rng = random.Random(4)

    def sample():
        m = IDENTITY
        for _ in range(rng.randint(1, 10)):
            m = m * rng.choice(pool)
        return m

    for _ in range(1000):
        assert in_gamma(commutator(sample(), sample()), 16)


def test_residue_reduction_is_homomorphism():
    rng = random.Random(5)
    for n in (2, 4, 7, 12):
        for _ in range(100):
            x, y = rand_word(rng, 20).eval(), rand_word(rng, 20).eval()
            assert ResidueElement.reduce(x * y, n) == ResidueElement.reduce(x, n).mul(
                ResidueElement.reduce(y, n)
            )


def test_residue_sign_canonical():
    assert ResidueElement.make(5, 1, 0, 0, 1) == ResidueElement.make(5, -1, 0, 0, -1)
    assert ResidueElement.make(5, 1, 0, 0, 1).is_identity()


def test_parse_matrix():
    assert parse_matrix("[[1, 5], [0, 1]]") == t_power(5)
    assert parse_matrix("[[0,-1],[1,0]]") == S
    for bad in ("[[1,2],[3]]", "[[1,2],[3,4]]", "nonsense", "[[1.5,0],[0,1]]"):
        with pytest.raises(ParseError):
            parse_matrix(bad)


def test_parse_word():
    assert parse_word("T^-1 S T^4 S T").eval() == ModularElement(-5, -4, 4, 3)
    assert str(parse_word("S T T^3")) == "S T^4"
    with pytest.raises(ParseError):
        parse_word("T^x")
    with pytest.raises(ParseError):
        parse_word("Q")
