"""Exact arithmetic in the projective modular group PSL(2,Z).

Elements are integer 2x2 matrices of determinant 1 taken modulo +-Id and
stored in a fixed sign-canonical form, so equality and hashing are plain
field comparisons.  Words over the generators S = [[0,-1],[1,0]] and
T = [[1,1],[0,1]] can be evaluated and recovered by continued-fraction
descent.  All values are immutable; every function here is pure.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Iterable, NamedTuple

Token = tuple[str, int]


class ParseError(ValueError):
    """A matrix, word, or fraction string could not be parsed."""


class MembershipError(ValueError):
    """An element lies outside the subgroup required by an operation."""


class ModularElement:
    """An element of PSL(2,Z) as a sign-normalized matrix [[a,b],[c,d]].

    The stored representative is the one with c > 0, or c == 0 and d > 0
    (for determinant 1, c == 0 forces d != 0).  Canonicalization happens
    in the constructor, so canon(canon(m)) == canon(m) and m == -m hold
    by construction.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int) -> None:
        if a * d - b * c != 1:
            raise ValueError(f"determinant must be 1, got {a * d - b * c}")
        if c < 0 or (c == 0 and d < 0):
            a, b, c, d = -a, -b, -c, -d
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModularElement):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __mul__(self, other: "ModularElement") -> "ModularElement":
        return ModularElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "ModularElement":
        return ModularElement(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "ModularElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = IDENTITY
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __repr__(self) -> str:
        return f"ModularElement({self.a}, {self.b}, {self.c}, {self.d})"


IDENTITY = ModularElement(1, 0, 0, 1)
S = ModularElement(0, -1, 1, 0)
T = ModularElement(1, 1, 0, 1)


def t_power(k: int) -> ModularElement:
    return ModularElement(1, k, 0, 1)


def commutator(x: ModularElement, y: ModularElement) -> ModularElement:
    """The defect (x*y)^-1 * (y*x) by which x and y fail to commute."""
    return (x * y).inverse() * (y * x)


class ResidueElement(NamedTuple):
    """An element of PSL(2,Z/n): residues mod n up to a global sign."""

    n: int
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def make(cls, n: int, a: int, b: int, c: int, d: int) -> "ResidueElement":
        if n < 1:
            raise ValueError("modulus must be >= 1")
        t = (a % n, b % n, c % n, d % n)
        u = ((-a) % n, (-b) % n, (-c) % n, (-d) % n)
        return cls(n, *min(t, u))

    @classmethod
    def reduce(cls, m: ModularElement, n: int) -> "ResidueElement":
        return cls.make(n, m.a, m.b, m.c, m.d)

    def mul(self, other: "ResidueElement") -> "ResidueElement":
        if self.n != other.n:
            raise ValueError("modulus mismatch")
        return ResidueElement.make(
            self.n,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def is_identity(self) -> bool:
        return self == ResidueElement.make(self.n, 1, 0, 0, 1)


class STWord:
    """A freely reduced word over S and T^k tokens.

    Tokens are ("S", 1) or ("T", k) with k != 0; reduction merges adjacent
    T tokens and cancels S pairs (S has order 2 in PSL(2,Z)).
    """

    __slots__ = ("tokens",)

    def __init__(self, tokens: Iterable[Token] = ()) -> None:
        out: list[Token] = []
        for gen, k in tokens:
            if gen == "S":
                if k % 2 == 0:
                    continue
                out.append(("S", 1))
            elif gen == "T":
                if k == 0:
                    continue
                out.append(("T", k))
            else:
                raise ValueError(f"unknown generator {gen!r}")
            while len(out) >= 2:
                (g1, k1), (g2, k2) = out[-2], out[-1]
                if g1 == "T" and g2 == "T":
                    out.pop()
                    out.pop()
                    if k1 + k2 != 0:
                        out.append(("T", k1 + k2))
                elif g1 == "S" and g2 == "S":
                    out.pop()
                    out.pop()
                else:
                    break
        self.tokens = tuple(out)

    def eval(self) -> ModularElement:
        m = IDENTITY
        for gen, k in self.tokens:
            m = m * (S if gen == "S" else t_power(k))
        return m

    def inverse(self) -> "STWord":
        return STWord((gen, -k if gen == "T" else k) for gen, k in reversed(self.tokens))

    def __mul__(self, other: "STWord") -> "STWord":
        return STWord(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, STWord):
            return NotImplemented
        return self.tokens == other.tokens

    def __hash__(self) -> int:
        return hash(self.tokens)

    def __str__(self) -> str:
        parts = []
        for gen, k in self.tokens:
            if gen == "S":
                parts.append("S")
            elif k == 1:
                parts.append("T")
            else:
                parts.append(f"T^{k}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"STWord({self.tokens!r})"


def eval_word(word: STWord) -> ModularElement:
    return word.eval()


def _round_div(a: int, c: int) -> int:
    """Integer q nearest to a/c; ties go to the q of smaller magnitude."""
    q, r = divmod(a, c)
    if 2 * abs(r) > abs(c):
        return q + 1
    if 2 * abs(r) == abs(c) and abs(q + 1) < abs(q):
        return q + 1
    return q


def decompose_st(m: ModularElement) -> STWord:
    """Write m as a word in S and T by Euclidean descent on the c entry.

    While c != 0, stripping T^q * S with q nearest a/c replaces |c| by
    |a - q*c| <= |c|/2, so the word has O(log max-entry) tokens.  The
    result re-evaluates to m exactly.
    """
    tokens: list[Token] = []
    cur = m
    while cur.c != 0:
        q = _round_div(cur.a, cur.c)
        if q != 0:
            tokens.append(("T", q))
        tokens.append(("S", 1))
        cur = S * t_power(-q) * cur
    if cur.b != 0:
        tokens.append(("T", cur.b))
    return STWord(tokens)


def in_gamma0(m: ModularElement, n: int) -> bool:
    """Hecke congruence condition: lower-left entry divisible by n."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    return m.c % n == 0


def in_gamma(m: ModularElement, n: int) -> bool:
    """Principal congruence condition: m == +-Id mod n."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if m.b % n or m.c % n:
        return False
    return (m.a % n == 1 and m.d % n == 1) or (m.a % n == n - 1 and m.d % n == n - 1)


def in_h(m: ModularElement, n: int) -> bool:
    """Membership in the largest normal subgroup of PSL(2,Z) inside Gamma_0(n).

    True iff m is +- a scalar matrix mod n whose scalar squares to 1 mod n.
    """
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if m.b % n or m.c % n:
        return False
    return m.a % n == m.d % n and (m.a * m.a) % n == 1 % n


def delta_gamma04(m: ModularElement) -> int:
    """Indicator of Gamma_0(4) membership."""
    return 1 if in_gamma0(m, 4) else 0


def _prime_factors(n: int) -> list[int]:
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def index_gamma(n: int) -> int:
    """Index of the principal congruence subgroup of level n in PSL(2,Z)."""
    if n < 2:
        raise ValueError("index formula requires n >= 2")
    if n == 2:
        return 6
    value = Fraction(n**3, 2)
    for p in _prime_factors(n):
        value *= Fraction(p * p - 1, p * p)
    assert value.denominator == 1
    return value.numerator


def index_gamma0(n: int) -> int:
    """Index of the Hecke congruence subgroup of level n in PSL(2,Z)."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    value = Fraction(n)
    for p in _prime_factors(n):
        value *= Fraction(p + 1, p)
    assert value.denominator == 1
    return value.numerator


def parse_matrix(text: str) -> ModularElement:
    """Parse "[[a,b],[c,d]]" (whitespace allowed) into a ModularElement."""
    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"not a matrix: {text!r}") from exc
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or any(not isinstance(row, (list, tuple)) or len(row) != 2 for row in value)
        or any(not isinstance(x, int) for row in value for x in row)
    ):
        raise ParseError(f"expected [[a,b],[c,d]] with integer entries: {text!r}")
    (a, b), (c, d) = value
    if a * d - b * c != 1:
        raise ParseError(f"determinant must be 1: {text!r}")
    return ModularElement(a, b, c, d)


def parse_word(text: str) -> STWord:
    """Parse whitespace-separated tokens S, T, T^k, T^-k into an STWord."""
    tokens: list[Token] = []
    for part in text.split():
        if part == "S":
            tokens.append(("S", 1))
        elif part == "T":
            tokens.append(("T", 1))
        elif part.startswith("T^"):
            try:
                tokens.append(("T", int(part[2:])))
            except ValueError as exc:
                raise ParseError(f"bad token {part!r}") from exc
        else:
            raise ParseError(f"bad token {part!r}")
    return STWord(tokens)


def parse_element(text: str) -> ModularElement:
    """Accept either a matrix or an S/T word and return the element."""
    stripped = text.strip()
    if stripped.startswith("["):
        return parse_matrix(stripped)
    return parse_word(stripped).eval()
