"""Exact phases in Q/Z and monomial matrices with root-of-unity entries.

A Phase k/m stands for the root of unity e^(2*pi*i*k/m); storing the
exponent as a reduced fraction keeps every matrix identity decidable,
which the kernel tests depend on.  A Monomial is a permutation together
with one phase per column: column j carries e^(2*pi*i*phase_j) in row
perm(j).  The representation is dimension-generic, though only dimension
6 is exercised by the public constructors.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Sequence


class Phase:
    """An element of Q/Z, stored as a reduced fraction 0 <= num < den."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1) -> None:
        if den == 0:
            raise ZeroDivisionError("phase denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        num %= den
        g = gcd(num, den)
        self.num = num // g
        self.den = den // g

    @classmethod
    def zero(cls) -> "Phase":
        return cls(0, 1)

    def __add__(self, other: "Phase") -> "Phase":
        return Phase(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Phase":
        return Phase(-self.num, self.den)

    def __sub__(self, other: "Phase") -> "Phase":
        return self + (-other)

    def scaled(self, k: int) -> "Phase":
        return Phase(self.num * k, self.den)

    @property
    def order(self) -> int:
        """Least n >= 1 with n * self == 0 in Q/Z."""
        return self.den

    def is_zero(self) -> bool:
        return self.num == 0

    def key(self) -> tuple[int, int]:
        return (self.den, self.num)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Phase):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Phase({self.num}, {self.den})"


def phase_add(x: Phase, y: Phase) -> Phase:
    return x + y


def phase_neg(x: Phase) -> Phase:
    return -x


def phase_scale(x: Phase, k: int) -> Phase:
    return x.scaled(k)


class Monomial:
    """A monomial matrix: a permutation part and one phase per column.

    perm is a 0-based tuple with perm[j] the row of the single nonzero
    entry in column j; phases[j] is that entry's phase.  Composition
    follows matrix multiplication: (x*y).perm = x.perm o y.perm and
    (x*y).phases[j] = y.phases[j] + x.phases[y.perm[j]].
    """

    __slots__ = ("perm", "phases")

    def __init__(self, perm: Sequence[int], phases: Sequence[Phase]) -> None:
        perm = tuple(perm)
        phases = tuple(phases)
        if len(perm) != len(phases):
            raise ValueError("permutation and phase vector lengths differ")
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {perm}")
        self.perm = perm
        self.phases = phases

    @classmethod
    def identity(cls, dim: int = 6) -> "Monomial":
        return cls(tuple(range(dim)), (Phase.zero(),) * dim)

    @classmethod
    def diagonal(cls, phases: Iterable[Phase]) -> "Monomial":
        phases = tuple(phases)
        return cls(tuple(range(len(phases))), phases)

    @property
    def dim(self) -> int:
        return len(self.perm)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        perm = tuple(self.perm[p] for p in other.perm)
        phases = tuple(
            other.phases[j] + self.phases[other.perm[j]] for j in range(self.dim)
        )
        return Monomial(perm, phases)

    def inverse(self) -> "Monomial":
        inv = [0] * self.dim
        for j, p in enumerate(self.perm):
            inv[p] = j
        phases = tuple(-self.phases[inv[i]] for i in range(self.dim))
        return Monomial(tuple(inv), phases)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            return self.inverse() ** (-n)
        result = Monomial.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def order(self) -> int:
        """Least n >= 1 with self**n equal to the identity.

        Computed per permutation cycle: a cycle of length L whose phases
        sum to p contributes L * order(p).
        """
        seen = [False] * self.dim
        result = 1
        for start in range(self.dim):
            if seen[start]:
                continue
            length = 0
            total = Phase.zero()
            j = start
            while not seen[j]:
                seen[j] = True
                total = total + self.phases[j]
                j = self.perm[j]
                length += 1
            result = lcm(result, length * total.order)
        return result

    def is_diagonal(self) -> bool:
        return all(p == j for j, p in enumerate(self.perm))

    def is_identity(self) -> bool:
        return self.is_diagonal() and all(p.is_zero() for p in self.phases)

    def to_dense(self) -> list[list[Phase | None]]:
        """Dense grid with Phase entries at (perm[j], j) and None elsewhere."""
        grid: list[list[Phase | None]] = [[None] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            grid[self.perm[j]][j] = self.phases[j]
        return grid

    def to_json_dict(self) -> dict:
        """JSON form with 1-based permutation images and "k/m" phases."""
        return {
            "perm": [p + 1 for p in self.perm],
            "phases": [str(p) for p in self.phases],
        }

    def key(self) -> tuple:
        return (self.perm, tuple(p.key() for p in self.phases))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.perm == other.perm and self.phases == other.phases

    def __hash__(self) -> int:
        return hash((self.perm, self.phases))

    def __repr__(self) -> str:
        return f"Monomial({self.perm!r}, {self.phases!r})"


def mono_mul(x: Monomial, y: Monomial) -> Monomial:
    return x * y


def mono_order(x: Monomial) -> int:
    return x.order()
