"""Finite-group machinery: BFS closures of monomial groups, enumeration of
PSL(2,Z/n) with a Schreier coset table over {S, T}, and kernel scans.

Everything is deterministic: BFS discovery order is fixed by the element
and generator ordering, and enumerated groups are returned in a canonical
sorted order, so repeated runs (and cached runs) produce identical data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .character import Alpha
from .induced import u_alpha
from .monomial import Monomial
from .psl2z import ModularElement, ResidueElement, S, STWord, T, index_gamma

DEFAULT_CAP = 10**6
DEFAULT_MAX_MODULUS = 64
CACHE_FORMAT_VERSION = 1

# Generator ids for the coset action: S, T, S^-1, T^-1.
_GEN_TOKENS: tuple[tuple[str, int], ...] = (("S", 1), ("T", 1), ("S", 1), ("T", -1))


class GroupTooLargeError(RuntimeError):
    """BFS closure exceeded the element cap."""

    def __init__(self, count: int, cap: int) -> None:
        super().__init__(f"group exceeds cap {cap} (saw {count} elements)")
        self.count = count
        self.cap = cap


class ModulusBoundError(ValueError):
    """Requested modulus lies outside the configured enumeration bound."""

    def __init__(self, n: int, bound: int) -> None:
        super().__init__(f"modulus {n} exceeds bound {bound}")
        self.n = n
        self.bound = bound


class EnumeratedMonomialGroup:
    """A fully enumerated group of monomial matrices, canonically sorted."""

    __slots__ = ("elements", "generators", "_index")

    def __init__(self, elements: Iterable[Monomial], generators: Iterable[Monomial] = ()) -> None:
        self.elements = tuple(sorted(elements, key=Monomial.key))
        self.generators = tuple(generators)
        self._index = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._index


def enumerate_monomial_group(
    gens: Sequence[Monomial], cap: int = DEFAULT_CAP
) -> EnumeratedMonomialGroup:
    """BFS closure of gens under multiplication.

    Raises GroupTooLargeError past cap, carrying the partial count (the
    usual cause is an alpha with a huge denominator).
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = tuple(gens)
    seen: dict[Monomial, None] = {}
    frontier: list[Monomial] = []
    for g in gens:
        if g not in seen:
            seen[g] = None
            frontier.append(g)
    while frontier:
        nxt: list[Monomial] = []
        for b in frontier:
            for g in gens:
                c = b * g
                if c not in seen:
                    seen[c] = None
                    nxt.append(c)
                    if len(seen) > cap:
                        raise GroupTooLargeError(len(seen), cap)
        frontier = nxt
    return EnumeratedMonomialGroup(seen, gens)


def diagonal_subgroup(group: EnumeratedMonomialGroup) -> EnumeratedMonomialGroup:
    """The subgroup of diagonal elements (the intersection with Delta)."""
    return EnumeratedMonomialGroup(
        (m for m in group.elements if m.is_diagonal())
    )


def _apply_gen(n: int, e: tuple[int, int, int, int], gid: int) -> tuple[int, int, int, int]:
    a, b, c, d = e
    if gid == 0:  # right-multiply by S
        a, b, c, d = b, -a, d, -c
    elif gid == 1:  # T
        a, b, c, d = a, a + b, c, c + d
    elif gid == 2:  # S^-1
        a, b, c, d = -b, a, -d, c
    else:  # T^-1
        a, b, c, d = a, b - a, c, d - c
    t = (a % n, b % n, c % n, d % n)
    u = ((-a) % n, (-b) % n, (-c) % n, (-d) % n)
    return t if t <= u else u


class SchreierData:
    """Coset table of PSL(2,Z) over Gamma(n), i.e. of PSL(2,Z/n).

    Elements are canonical residue quadruples in BFS discovery order from
    the identity over (S, T, S^-1, T^-1).  parent[i] records the tree edge
    that discovered element i, so each element has a representative word
    that evaluates to it mod n.
    """

    def __init__(
        self,
        n: int,
        elems: list[tuple[int, int, int, int]],
        parent: list[tuple[int, int]],
        table: list[list[int]],
    ) -> None:
        self.n = n
        self._elems = elems
        self._parent = parent
        self._table = table

    def __len__(self) -> int:
        return len(self._elems)

    def element(self, i: int) -> ResidueElement:
        return ResidueElement(self.n, *self._elems[i])

    def elements(self) -> list[ResidueElement]:
        return [ResidueElement(self.n, *e) for e in self._elems]

    def transition(self, i: int, gid: int) -> int:
        return self._table[i][gid]

    def parent_edge(self, i: int) -> tuple[int, int]:
        return self._parent[i]

    def word(self, i: int) -> STWord:
        """BFS tree word for element i; evaluates to element i mod n."""
        tokens: list[tuple[str, int]] = []
        while i != 0:
            p, gid = self._parent[i]
            tokens.append(_GEN_TOKENS[gid])
            i = p
        return STWord(reversed(tokens))

    def schreier_pairs(self) -> Iterator[tuple[int, int, int]]:
        """All (element, generator in {S, T}, target) triples that are not
        BFS tree edges; the tree edges give identity Schreier generators."""
        for i in range(len(self._elems)):
            for gid in (0, 1):
                j = self._table[i][gid]
                if self._parent[j] == (i, gid):
                    continue
                yield i, gid, j

    def schreier_word(self, i: int, gid: int) -> STWord:
        j = self._table[i][gid]
        return self.word(i) * STWord([_GEN_TOKENS[gid]]) * self.word(j).inverse()

    def to_payload(self) -> dict:
        return {
            "format_version": CACHE_FORMAT_VERSION,
            "kind": "psl2_zn_schreier",
            "n": self.n,
            "elements": [list(e) for e in self._elems],
            "parent": [list(p) for p in self._parent],
            "table": self._table,
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "SchreierData":
        if payload.get("format_version") != CACHE_FORMAT_VERSION:
            raise ValueError("cache format version mismatch")
        if payload.get("kind") != "psl2_zn_schreier":
            raise ValueError("cache kind mismatch")
        return cls(
            payload["n"],
            [tuple(e) for e in payload["elements"]],
            [tuple(p) for p in payload["parent"]],
            [list(r) for r in payload["table"]],
        )


def _build_schreier(n: int) -> SchreierData:
    ident = (1 % n, 0, 0, 1 % n)
    elems: list[tuple[int, int, int, int]] = [ident]
    index: dict[tuple[int, int, int, int], int] = {ident: 0}
    parent: list[tuple[int, int]] = [(-1, -1)]
    table: list[list[int]] = []
    head = 0
    while head < len(elems):
        e = elems[head]
        row = []
        for gid in range(4):
            f = _apply_gen(n, e, gid)
            j = index.get(f)
            if j is None:
                j = len(elems)
                elems.append(f)
                index[f] = j
                parent.append((head, gid))
            row.append(j)
        table.append(row)
        head += 1
    data = SchreierData(n, elems, parent, table)
    if n >= 2 and len(data) != index_gamma(n):
        raise RuntimeError(f"enumeration of PSL(2,Z/{n}) disagrees with index formula")
    return data


_SCHREIER_MEMO: dict[int, SchreierData] = {}


def enumerate_psl2_zn(
    n: int,
    max_modulus: int = DEFAULT_MAX_MODULUS,
    cache_dir: str | Path | None = None,
) -> SchreierData:
    """Enumerate PSL(2,Z/n) by BFS over (S, T, S^-1, T^-1).

    Results are memoized per process; with cache_dir set, payloads are
    also stored as JSON files keyed by (kind, n).
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    if n > max_modulus:
        raise ModulusBoundError(n, max_modulus)
    data = _SCHREIER_MEMO.get(n)
    if data is not None:
        return data
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / f"psl2_zn_schreier_{n}.json"
        if path.exists():
            try:
                data = SchreierData.from_payload(json.loads(path.read_text()))
            except (ValueError, KeyError, json.JSONDecodeError):
                data = None
            if data is not None and data.n == n:
                _SCHREIER_MEMO[n] = data
                return data
    data = _build_schreier(n)
    _SCHREIER_MEMO[n] = data
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data.to_payload(), sort_keys=True))
    return data


def schreier_generators(
    n: int,
    max_modulus: int = DEFAULT_MAX_MODULUS,
    cache_dir: str | Path | None = None,
) -> list[tuple[ModularElement, STWord]]:
    """Deduplicated Schreier generators of Gamma(n), with their words.

    Each generator is word(e) * x * word(e*x)^-1 for a coset e and
    x in {S, T}; identities are dropped.
    """
    data = enumerate_psl2_zn(n, max_modulus=max_modulus, cache_dir=cache_dir)
    out: list[tuple[ModularElement, STWord]] = []
    seen: set[ModularElement] = set()
    for i, gid, _ in data.schreier_pairs():
        word = data.schreier_word(i, gid)
        m = word.eval()
        if m.is_identity() or m in seen:
            continue
        seen.add(m)
        out.append((m, word))
    return out


@dataclass(frozen=True)
class KernelWitness:
    """A certified element of Gamma(n) outside the representation kernel."""

    element: ModularElement
    word: STWord
    image: Monomial


def contains_gamma_n_in_kernel(
    a: Alpha,
    n: int,
    max_modulus: int = DEFAULT_MAX_MODULUS,
    cache_dir: str | Path | None = None,
) -> tuple[bool, KernelWitness | None]:
    """Decide whether every Schreier generator of Gamma(n) maps to the
    identity monomial; on failure return the first failing generator.

    Images are accumulated along the BFS tree (one monomial product per
    element) instead of evaluating integer matrices, which is the same
    value by the homomorphism law.  The witness element is rebuilt from
    its word and its image recomputed through the direct route as a
    self-check.
    """
    data = enumerate_psl2_zn(n, max_modulus=max_modulus, cache_dir=cache_dir)
    u_s = u_alpha(a, S)
    u_t = u_alpha(a, T)
    gen_mono = (u_s, u_t, u_s.inverse(), u_t.inverse())
    images: list[Monomial | None] = [None] * len(data)
    images[0] = Monomial.identity()

    def image_of(i: int) -> Monomial:
        chain = []
        while images[i] is None:
            chain.append(i)
            i = data.parent_edge(i)[0]
        m = images[i]
        for j in reversed(chain):
            m = m * gen_mono[data.parent_edge(j)[1]]
            images[j] = m
        return m

    for i, gid, j in data.schreier_pairs():
        cand = image_of(i) * gen_mono[gid] * image_of(j).inverse()
        if not cand.is_identity():
            word = data.schreier_word(i, gid)
            elem = word.eval()
            direct = u_alpha(a, elem)
            if direct != cand:
                raise RuntimeError("incremental and direct images disagree")
            return False, KernelWitness(elem, word, direct)
    return True, None
