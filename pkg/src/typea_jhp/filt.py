"""
Brute-force filtration oracle.

A filtration 0 = M_0 < M_1 < ... < M_m = M with every subquotient in a
generator set X is encoded by its cone sequence (M_1/M_0, ..., M_m/M_{m-1}).
Sequences are built front to back: pick a member X, a monomorphism X -> M
(up to cokernel class), and recurse on the cokernel. Everything is computed on
iso-classes, so results are exact for type A at the sizes used here.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable

from .quiver import (
    DEFAULT_FIELD, BoundError, Interval, IsoClass, Rep, TypeAQuiver, decompose, hom_dim,
    interval_hom_dim, isoclass_monos_up_to_cokernel, isoclass_to_rep, isoclasses_up_to,
    monos_up_to_cokernel,
)

__all__ = [
    "GeneratorSet", "FiltrationRecord", "FiltReport", "DEFAULT_UNIVERSE_DIM",
    "filtrations", "x_length", "check_wjhp", "check_jhp", "is_semibrick", "simples_in",
    "monos_from",
]

DEFAULT_UNIVERSE_DIM = 8


@dataclass(frozen=True)
class GeneratorSet:
    quiver: TypeAQuiver
    members: tuple[IsoClass, ...]
    p: int = DEFAULT_FIELD
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        ms = []
        for m in self.members:
            m = IsoClass.of(m) if isinstance(m, Interval) else m
            if m.is_zero():
                raise ValueError("generator sets cannot contain the zero object")
            ms.append(m)
        if len(set(ms)) != len(ms):
            raise ValueError("generator set members must be pairwise non-isomorphic")
        object.__setattr__(self, "members", tuple(sorted(ms)))

    @classmethod
    def of_intervals(cls, quiver: TypeAQuiver, intervals: Iterable[Interval],
                     p: int = DEFAULT_FIELD) -> "GeneratorSet":
        return cls(quiver, tuple(IsoClass.of(x) for x in intervals), p)

    def __str__(self):
        return "{" + ", ".join(str(m) for m in self.members) + "}"


@dataclass(frozen=True)
class FiltrationRecord:
    cone_sequence: tuple[IsoClass, ...]

    @property
    def length(self) -> int:
        return len(self.cone_sequence)

    def multiset(self) -> tuple[IsoClass, ...]:
        return tuple(sorted(self.cone_sequence))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.cone_sequence) + ")"


def monos_from(quiver: TypeAQuiver, x: IsoClass, m: IsoClass, p: int = DEFAULT_FIELD) -> frozenset[IsoClass]:
    """Cokernel classes of monomorphisms X -> M; fast path for interval X."""
    n = quiver.n
    if any(a > b for a, b in zip(x.dim_vector(n), m.dim_vector(n))):
        return frozenset()
    if len(x) == 1:
        return isoclass_monos_up_to_cokernel(quiver, x.summands[0], m, p)
    return monos_up_to_cokernel(isoclass_to_rep(quiver, x, p), isoclass_to_rep(quiver, m, p))


def _as_class(m: Rep | IsoClass | Interval) -> IsoClass:
    if isinstance(m, Rep):
        return decompose(m)
    if isinstance(m, Interval):
        return IsoClass.of(m)
    return m


def _sequences(m: IsoClass, gens: GeneratorSet) -> frozenset[tuple[IsoClass, ...]]:
    memo = gens._cache.setdefault("seq", {})
    if m in memo:
        return memo[m]
    if m.is_zero():
        return frozenset([()])
    out = set()
    for x in gens.members:
        for c in monos_from(gens.quiver, x, m, gens.p):
            for rest in _sequences(c, gens):
                out.add((x,) + rest)
    memo[m] = frozenset(out)
    return memo[m]


def _outcomes(m: IsoClass, gens: GeneratorSet) -> dict[tuple[IsoClass, ...], tuple[IsoClass, ...]]:
    """Cone multisets realised by filtrations of M, each with one witness sequence."""
    memo = gens._cache.setdefault("out", {})
    if m in memo:
        return memo[m]
    if m.is_zero():
        return {(): ()}
    out: dict = {}
    for x in gens.members:
        for c in sorted(monos_from(gens.quiver, x, m, gens.p)):
            for ms, seq in _outcomes(c, gens).items():
                key = tuple(sorted((x,) + ms))
                cand = (x,) + seq
                if key not in out or cand < out[key]:
                    out[key] = cand
    memo[m] = out
    return out


def filtrations(m: Rep | IsoClass | Interval, gens: GeneratorSet,
                cap: int | None = None) -> frozenset[FiltrationRecord]:
    """All cone sequences of X-filtrations of M (empty set iff M is not in Filt(X))."""
    m = _as_class(m)
    if cap is not None and m.total_dim > cap:
        raise BoundError(f"total dimension {m.total_dim} exceeds cap {cap}")
    return frozenset(FiltrationRecord(s) for s in _sequences(m, gens))


def x_length(m: Rep | IsoClass | Interval, gens: GeneratorSet) -> int | None:
    outs = _outcomes(_as_class(m), gens)
    return min((len(k) for k in outs), default=None)


@dataclass
class FiltReport:
    generator_set: str
    universe_bound: int
    verdict: str
    counterexamples: list[dict]
    inconclusive: bool
    checked: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        return json.dumps({
            "generator_set": self.generator_set,
            "universe_bound": self.universe_bound,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "inconclusive": self.inconclusive,
        }, sort_keys=True)


def _reachable(dv: tuple[int, ...], vecs: list[tuple[int, ...]]) -> bool:
    # is dv a nonnegative integer combination of the member dimension vectors?
    seen, stack = set(), [dv]
    while stack:
        cur = stack.pop()
        if not any(cur):
            return True
        if cur in seen:
            continue
        seen.add(cur)
        for v in vecs:
            nxt = tuple(a - b for a, b in zip(cur, v))
            if min(nxt) >= 0:
                stack.append(nxt)
    return False


def _universe(gens: GeneratorSet, bound: int, within: Iterable[Interval] | None) -> list[IsoClass]:
    n = gens.quiver.n
    vecs = [x.dim_vector(n) for x in gens.members]
    return [m for m in isoclasses_up_to(gens.quiver, bound, within)
            if _reachable(m.dim_vector(n), vecs)]


def _fmt(seq: Iterable[IsoClass]) -> list[str]:
    return [str(c) for c in seq]


def _check(gens: GeneratorSet, bound: int, within, weak: bool) -> FiltReport:
    bad, inconclusive, checked = [], False, 0
    for m in _universe(gens, bound, within):
        try:
            outs = _outcomes(m, gens)
        except BoundError:
            inconclusive = True
            continue
        if not outs:
            continue
        checked += 1
        keys = sorted(outs, key=lambda k: (len(k), k))
        if weak:
            shortest = len(keys[0])
            keys = [k for k in keys if len(k) == shortest]
        if len(keys) > 1:
            bad.append({"module": str(m), "seq_a": _fmt(outs[keys[0]]), "seq_b": _fmt(outs[keys[1]])})
    verdict = "fail" if bad else "pass"
    return FiltReport(str(gens), bound, verdict, bad, inconclusive, checked)


def check_wjhp(gens: GeneratorSet, bound: int = DEFAULT_UNIVERSE_DIM,
               within: Iterable[Interval] | None = None) -> FiltReport:
    """Minimal-length filtrations of every M in Filt(X) (total dim <= bound) share one cone multiset."""
    return _check(gens, bound, within, weak=True)


def check_jhp(gens: GeneratorSet, bound: int = DEFAULT_UNIVERSE_DIM,
              within: Iterable[Interval] | None = None) -> FiltReport:
    """All filtrations of every M in Filt(X) (total dim <= bound) share one cone multiset.

    `within` restricts the universe to direct sums of the given intervals.
    """
    return _check(gens, bound, within, weak=False)


def is_semibrick(gens: GeneratorSet) -> bool:
    q, p = gens.quiver, gens.p

    def hom(a: IsoClass, b: IsoClass) -> int:
        if len(a) == 1 and len(b) == 1:
            return interval_hom_dim(q, a.summands[0], b.summands[0], p)
        return hom_dim(isoclass_to_rep(q, a, p), isoclass_to_rep(q, b, p))

    for a in gens.members:
        if hom(a, a) != 1:
            return False
    return all(hom(a, b) == 0 for a, b in itertools.permutations(gens.members, 2))


def _sub_candidates(quiver: TypeAQuiver, m: Interval, allowed: list[Interval]) -> list[IsoClass]:
    n = quiver.n
    top = m.dim_vector(n)
    out = []
    for r in range(1, m.dim + 1):
        for combo in itertools.combinations_with_replacement(allowed, r):
            a = IsoClass(combo)
            dv = a.dim_vector(n)
            if all(x <= y for x, y in zip(dv, top)) and dv != top:
                out.append(a)
    return out


def simples_in(members: Iterable[Interval], quiver: TypeAQuiver, p: int = DEFAULT_FIELD) -> frozenset[Interval]:
    """Members M admitting no 0 -> A -> M -> B -> 0 with A, B nonzero direct sums of members."""
    allowed = sorted(set(members))
    keep = set(allowed)
    out = set()
    for m in allowed:
        target = IsoClass.of(m)
        split = False
        for a in _sub_candidates(quiver, m, allowed):
            if any(set(c.summands) <= keep for c in monos_from(quiver, a, target, p)):
                split = True
                break
        if not split:
            out.add(m)
    return frozenset(out)
