"""
Symmetric-group combinatorics for type A: permutations of {1, ..., n+1} in
one-line notation, inversions, Bruhat inversions, supports, Coxeter elements
and c-sortability.

Simple reflections act on the *left* by swapping letters, so
``compose(s(2), s(1))`` is the product s_2 s_1 and has one-line word 312.

>>> w = Permutation.parse("534216")
>>> length(w)
9
>>> sorted(str(t) for t in bruhat_inversions(w))
['(1 2)', '(2 3)', '(2 4)', '(3 5)', '(4 5)']
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .quiver import TypeAQuiver

__all__ = [
    "MAX_RANK", "Permutation", "Transposition", "SortabilityCertificate",
    "identity", "s", "from_word", "compose", "inverse", "apply_transposition",
    "length", "inversions", "bruhat_inversions", "support", "support_from_word",
    "reduced_word", "coxeter_word", "coxeter_element", "is_c_sortable",
    "is_sortable_for_word", "enumerate_c_sortables", "all_permutations",
]

# exhaustive sweeps are factorial in n+1
MAX_RANK = 12


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_{n+1}, stored as its one-line word w(1) ... w(n+1)."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")
        if len(word) > MAX_RANK:
            raise ValueError(f"rank {len(word)} exceeds cap {MAX_RANK}")

    @property
    def n_plus_1(self) -> int:
        return len(self.word)

    def __call__(self, k: int) -> int:
        return self.word[k - 1]

    def __len__(self):
        return len(self.word)

    def position(self, letter: int) -> int:
        """1-based position of `letter`, i.e. w^{-1}(letter)."""
        return self.word.index(letter) + 1

    def is_identity(self) -> bool:
        return all(x == k for k, x in enumerate(self.word, 1))

    def __str__(self):
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if not text:
            raise ValueError("empty permutation string")
        if "," in text:
            parts = text.split(",")
            for pos, part in enumerate(parts, 1):
                if not part.strip().isdigit():
                    raise ValueError(f"bad entry {part!r} at position {pos}")
            return cls(tuple(int(p) for p in parts))
        for pos, ch in enumerate(text, 1):
            if not ch.isdigit():
                raise ValueError(f"bad character {ch!r} at position {pos}")
        return cls(tuple(int(ch) for ch in text))


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition (i j) of letters, normalised so that i < j."""
    i: int
    j: int

    def __post_init__(self):
        i, j = int(self.i), int(self.j)
        if i == j:
            raise ValueError("transposition needs two distinct letters")
        if i > j:
            i, j = j, i
        object.__setattr__(self, "i", i)
        object.__setattr__(self, "j", j)

    def __str__(self):
        return f"({self.i} {self.j})"


@dataclass(frozen=True)
class SortabilityCertificate:
    """Reduced factorisation w = c^0 c^1 ... c^t into subwords of a Coxeter word."""
    factors: tuple[tuple[int, ...], ...]
    coxeter_word: tuple[int, ...]

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for f in self.factors for x in f)

    def supports(self) -> list[frozenset[int]]:
        return [frozenset(f) for f in self.factors]


def identity(n_plus_1: int) -> Permutation:
    return Permutation(tuple(range(1, n_plus_1 + 1)))


def s(i: int, n_plus_1: int) -> Permutation:
    """The simple reflection s_i = (i i+1) in S_{n+1}."""
    if not 1 <= i < n_plus_1:
        raise ValueError(f"s_{i} not defined in S_{n_plus_1}")
    w = list(range(1, n_plus_1 + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def _swap_letters(word: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    return tuple(b if x == a else a if x == b else x for x in word)


def from_word(indices: Iterable[int], n_plus_1: int) -> Permutation:
    """The product s_{i_1} s_{i_2} ... s_{i_k}."""
    word = tuple(range(1, n_plus_1 + 1))
    for i in reversed(list(indices)):
        if not 1 <= i < n_plus_1:
            raise ValueError(f"s_{i} not defined in S_{n_plus_1}")
        word = _swap_letters(word, i, i + 1)
    return Permutation(word)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u v)(k) = u(v(k))."""
    if u.n_plus_1 != v.n_plus_1:
        raise ValueError(f"rank mismatch: S_{u.n_plus_1} vs S_{v.n_plus_1}")
    return Permutation(tuple(u.word[x - 1] for x in v.word))


def inverse(w: Permutation) -> Permutation:
    out = [0] * w.n_plus_1
    for k, x in enumerate(w.word, 1):
        out[x - 1] = k
    return Permutation(tuple(out))


def apply_transposition(sigma: Transposition, w: Permutation) -> Permutation:
    """sigma * w: swap the letters sigma.i and sigma.j in the one-line word."""
    if sigma.j > w.n_plus_1 or sigma.i < 1:
        raise ValueError(f"{sigma} out of range for S_{w.n_plus_1}")
    return Permutation(_swap_letters(w.word, sigma.i, sigma.j))


def _left_mul_s(i: int, w: Permutation) -> Permutation:
    return Permutation(_swap_letters(w.word, i, i + 1))


def length(w: Permutation) -> int:
    word = w.word
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word))
               if word[a] > word[b])


def inversions(w: Permutation) -> frozenset[Transposition]:
    """{(i j) : j precedes i in the one-line word}."""
    word = w.word
    return frozenset(Transposition(word[b], word[a])
                     for a in range(len(word)) for b in range(a + 1, len(word))
                     if word[a] > word[b])


def _inversion_pairs(w: Permutation) -> set[tuple[int, int]]:
    return {(t.i, t.j) for t in inversions(w)}


def bruhat_inversions(w: Permutation) -> frozenset[Transposition]:
    """Inversions (i j) with no l, i < l < j, such that (i l) and (l j) are inversions."""
    inv = _inversion_pairs(w)
    return frozenset(
        Transposition(i, j) for (i, j) in inv
        if not any((i, l) in inv and (l, j) in inv for l in range(i + 1, j)))


def support(w: Permutation) -> frozenset[int]:
    """i is in the support iff max{w(k) : k <= i} > i."""
    out, m = set(), 0
    for i in range(1, w.n_plus_1):
        m = max(m, w(i))
        if m > i:
            out.add(i)
    return frozenset(out)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word for w, peeling the smallest left descent each time."""
    out = []
    while not w.is_identity():
        pos = {x: k for k, x in enumerate(w.word)}
        i = next(i for i in range(1, w.n_plus_1) if pos[i + 1] < pos[i])
        out.append(i)
        w = _left_mul_s(i, w)
    return tuple(out)


def support_from_word(w: Permutation) -> frozenset[int]:
    return frozenset(reduced_word(w))


def coxeter_word(quiver: "TypeAQuiver") -> tuple[int, ...]:
    """Order s_1..s_n so that s_i precedes s_j whenever there is an arrow j -> i.

    Among valid orders the lexicographically smallest is returned; all of them
    give the same Coxeter element since the remaining freedom only swaps
    commuting letters.
    """
    n = quiver.n
    succ: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    indeg = {v: 0 for v in range(1, n + 1)}
    for src, tgt in quiver.arrows():
        # arrow src -> tgt puts s_tgt before s_src
        succ[tgt].append(src)
        indeg[src] += 1
    heap = [v for v in indeg if indeg[v] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for u in succ[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                heapq.heappush(heap, u)
    assert len(out) == n
    return tuple(out)


def coxeter_element(quiver: "TypeAQuiver") -> tuple[tuple[int, ...], Permutation]:
    word = coxeter_word(quiver)
    return word, from_word(word, quiver.n + 1)


def is_sortable_for_word(w: Permutation, cword: Sequence[int]) -> SortabilityCertificate | None:
    """Decide c-sortability of w for the Coxeter word `cword`.

    Walks c c c ... letter by letter. An active letter that is a left descent
    of the remaining element is peeled into the current factor; otherwise it
    must be outside the remaining support and is frozen for good.
    """
    cword = tuple(cword)
    active = set(cword)
    rest = w
    factors: list[tuple[int, ...]] = []
    while not rest.is_identity():
        current = []
        for q in cword:
            if q not in active:
                continue
            shorter = _left_mul_s(q, rest)
            if length(shorter) < length(rest):
                current.append(q)
                rest = shorter
            elif q in support(rest):
                return None
            else:
                active.discard(q)
        if not current:
            return None
        factors.append(tuple(current))
    return SortabilityCertificate(tuple(factors), cword)


def is_c_sortable(w: Permutation, quiver: "TypeAQuiver") -> SortabilityCertificate | None:
    if w.n_plus_1 != quiver.n + 1:
        raise ValueError(f"S_{w.n_plus_1} does not match A_{quiver.n}")
    return is_sortable_for_word(w, coxeter_word(quiver))


def all_permutations(n_plus_1: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n_plus_1 + 1))]


@lru_cache(maxsize=None)
def _sortables_up_to(cword: tuple[int, ...], n_plus_1: int, k: int) -> frozenset[tuple[int, ...]]:
    # c-sortables of length <= k: either s is not a left descent and w lives in
    # the parabolic subgroup without s, or w = s v with v (s c s)-sortable
    e = tuple(range(1, n_plus_1 + 1))
    if not cword or k == 0:
        return frozenset([e])
    q, rest = cword[0], cword[1:]
    out = set(_sortables_up_to(rest, n_plus_1, k))
    for v in _sortables_up_to(rest + (q,), n_plus_1, k - 1):
        pos_q, pos_q1 = v.index(q), v.index(q + 1)
        if pos_q < pos_q1:  # s_q v is longer than v
            out.add(_swap_letters(v, q, q + 1))
    return frozenset(out)


def enumerate_c_sortables(quiver: "TypeAQuiver") -> list[Permutation]:
    """All c_Q-sortable elements of S_{n+1}, in lexicographic one-line order."""
    n1 = quiver.n + 1
    found = _sortables_up_to(coxeter_word(quiver), n1, n1 * (n1 - 1) // 2)
    return [Permutation(p) for p in sorted(found)]
