"""The unitary character on Gamma_0(4) sending T to e^(2*pi*i*alpha).

Gamma_0(4) is free on T and V = S T^4 S, so the character is determined
by chi(T) = e^(2*pi*i*alpha) and chi(V) = 1.  Evaluation goes through the
free T/V decomposition: chi(m) is the total T exponent of m times alpha.
No closed form in the matrix entries is used anywhere; the homomorphism
property of the rewriting is what the tests pin down.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

from .monomial import Phase
from .psl2z import (
    MembershipError,
    ModularElement,
    ParseError,
    STWord,
    _round_div,
    in_gamma0,
    t_power,
)

GammaToken = tuple[str, int]


class Alpha:
    """The character parameter: a reduced fraction p/q taken mod 1."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int = 1) -> None:
        if q == 0:
            raise ZeroDivisionError("alpha denominator must be nonzero")
        if q < 0:
            p, q = -p, -q
        p %= q
        g = gcd(p, q)
        self.p = p // g
        self.q = q // g

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Alpha":
        return cls(value.numerator, value.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def as_phase(self) -> Phase:
        return Phase(self.p, self.q)

    def conjugate(self) -> "Alpha":
        """The parameter 1 - alpha of the complex-conjugate character."""
        return Alpha(self.q - self.p, self.q)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alpha):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __str__(self) -> str:
        return "0" if self.q == 1 else f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"Alpha({self.p}, {self.q})"


def parse_alpha(text: str) -> Alpha:
    """Parse "p/q" (or a bare integer such as "0") into an Alpha."""
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Alpha(int(parts[0]), 1)
        if len(parts) == 2:
            return Alpha(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad alpha {text!r}") from exc
    raise ParseError(f"bad alpha {text!r}")


def n_of_alpha(a: Alpha) -> int:
    """The least n >= 1 such that q divides 4n, i.e. q / gcd(q, 4)."""
    return a.q // gcd(a.q, 4)


def v_power(k: int) -> ModularElement:
    """The k-th power of V = S T^4 S as a ModularElement."""
    return ModularElement(1, 0, -4 * k, 1)


class Gamma04Word:
    """A freely reduced word over the free generators T and V of Gamma_0(4)."""

    __slots__ = ("tokens",)

    def __init__(self, tokens: Iterable[GammaToken] = ()) -> None:
        out: list[GammaToken] = []
        for gen, k in tokens:
            if gen not in ("T", "V"):
                raise ValueError(f"unknown generator {gen!r}")
            if k == 0:
                continue
            if out and out[-1][0] == gen:
                merged = out[-1][1] + k
                out.pop()
                if merged != 0:
                    out.append((gen, merged))
            else:
                out.append((gen, k))
        self.tokens = tuple(out)

    def eval(self) -> ModularElement:
        m = ModularElement(1, 0, 0, 1)
        for gen, k in self.tokens:
            m = m * (t_power(k) if gen == "T" else v_power(k))
        return m

    @property
    def t_exponent(self) -> int:
        return sum(k for gen, k in self.tokens if gen == "T")

    def to_st_word(self) -> STWord:
        parts: list[tuple[str, int]] = []
        for gen, k in self.tokens:
            if gen == "T":
                parts.append(("T", k))
            else:
                parts.extend((("S", 1), ("T", 4 * k), ("S", 1)))
        return STWord(parts)

    def __len__(self) -> int:
        return len(self.tokens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gamma04Word):
            return NotImplemented
        return self.tokens == other.tokens

    def __hash__(self) -> int:
        return hash(self.tokens)

    def __str__(self) -> str:
        return " ".join(f"{gen}^{k}" for gen, k in self.tokens)

    def __repr__(self) -> str:
        return f"Gamma04Word({self.tokens!r})"


def decompose_gamma04(m: ModularElement) -> Gamma04Word:
    """Write m in Gamma_0(4) as a reduced word in T and V by ping-pong descent.

    T strips reduce |a| to at most |c|/2 and V strips reduce |c| to at
    most 2|a| (left multiplication by V^-j adds 4*j*a to c).  For c
    divisible by 4, |a| = |c|/2 is impossible, so |a| + |c| strictly
    decreases and exactly one move applies at each step; the emitted word
    is already freely reduced.  Exponent ties break toward the smaller
    magnitude.
    """
    if not in_gamma0(m, 4):
        raise MembershipError(f"{m} is not in Gamma_0(4)")
    tokens: list[GammaToken] = []
    cur = m
    while cur.c != 0:
        if abs(cur.c) > 2 * abs(cur.a):
            j = _round_div(-cur.c, 4 * cur.a)
            tokens.append(("V", j))
            cur = v_power(-j) * cur
        else:
            k = _round_div(cur.a, cur.c)
            tokens.append(("T", k))
            cur = t_power(-k) * cur
    if cur.b != 0:
        tokens.append(("T", cur.b))
    return Gamma04Word(tokens)


def t_exponent(m: ModularElement) -> int:
    """Total T exponent of the free T/V decomposition; additive under mul."""
    return decompose_gamma04(m).t_exponent


def chi(a: Alpha, m: ModularElement) -> Phase:
    """Character value at m in Gamma_0(4), as the phase t_exponent(m)*alpha."""
    return Phase(t_exponent(m) * a.p, a.q)


def in_ker_chi(a: Alpha, m: ModularElement) -> bool:
    """True iff m lies in Gamma_0(4) and the character value is 1."""
    if not in_gamma0(m, 4):
        return False
    return chi(a, m).is_zero()
