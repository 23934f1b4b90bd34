"""
Torsion-free classes F(w) = add{[i,j) : (i j) an inversion of w}, their simple
objects, the support/Bruhat-inversion count criterion for the Jordan-Hoelder
property, a bounded brute-force torsion-free test, and the pattern criterion
for the quiver 1 <- 2 -> 3 -> ... -> n.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .quiver import (
    DEFAULT_FIELD, Interval, IsoClass, TypeAQuiver, all_intervals,
    isoclass_monos_up_to_cokernel, isoclasses_with_dim,
)
from .symgroup import (
    Permutation, bruhat_inversions, inversions, is_c_sortable, support, s, compose,
)

__all__ = [
    "TorsionFreeClass", "NotSortableError", "Bounds", "OracleVerdict", "BBVerdict",
    "tf_class_of", "raw_class", "simples_of", "jhp_by_count", "supp_of_class",
    "is_torsion_free_oracle", "torsion_free_verdict", "enumerate_tf_classes_bruteforce",
    "bb_criterion", "bb_quiver", "class_to_json",
]


class NotSortableError(ValueError):
    pass


@dataclass(frozen=True)
class TorsionFreeClass:
    quiver: TypeAQuiver
    intervals: frozenset[Interval]
    source: Permutation | None = None

    def __str__(self):
        return "{" + ", ".join(str(x) for x in sorted(self.intervals)) + "}"


def class_to_json(intervals: Iterable[Interval]) -> str:
    return json.dumps(sorted(str(x) for x in intervals))


def raw_class(w: Permutation, quiver: TypeAQuiver) -> TorsionFreeClass:
    """The interval set of w with no sortability check (may fail to be torsion-free)."""
    if w.n_plus_1 != quiver.n + 1:
        raise ValueError(f"S_{w.n_plus_1} does not match A_{quiver.n}")
    return TorsionFreeClass(quiver, frozenset(Interval(t.i, t.j) for t in inversions(w)), w)


def tf_class_of(w: Permutation, quiver: TypeAQuiver) -> TorsionFreeClass:
    if is_c_sortable(w, quiver) is None:
        raise NotSortableError(
            f"{w} is not c-sortable for {quiver.pretty()}; use raw_class for the bare interval set")
    return raw_class(w, quiver)


def simples_of(cls: TorsionFreeClass) -> frozenset[Interval]:
    if cls.source is None:
        raise ValueError("class has no source permutation")
    return frozenset(Interval(t.i, t.j) for t in bruhat_inversions(cls.source))


def jhp_by_count(w: Permutation) -> bool:
    return len(support(w)) == len(bruhat_inversions(w))


def supp_of_class(cls: TorsionFreeClass | Iterable[Interval]) -> frozenset[int]:
    ivs = cls.intervals if isinstance(cls, TorsionFreeClass) else cls
    return frozenset(v for x in ivs for v in x.support)


@dataclass(frozen=True)
class Bounds:
    max_summands: int = 2
    max_dim: int | None = None  # defaults to max_summands * n


class OracleVerdict(enum.Enum):
    TORSION_FREE = "torsion-free"
    NOT_TORSION_FREE = "not torsion-free"
    INCONCLUSIVE = "inconclusive-at-bound"

    def __bool__(self):
        return self is OracleVerdict.TORSION_FREE


@lru_cache(maxsize=None)
def _sub_table(quiver: TypeAQuiver, total: IsoClass, p: int) -> frozenset[Interval]:
    """Indecomposables admitting a monomorphism into `total`."""
    return frozenset(x for x in all_intervals(quiver.n)
                     if isoclass_monos_up_to_cokernel(quiver, x, total, p))


@lru_cache(maxsize=None)
def _extension_middles(quiver: TypeAQuiver, x: Interval, y: Interval, p: int) -> frozenset[IsoClass]:
    """Iso-classes E with a short exact sequence 0 -> Y -> E -> X -> 0."""
    n = quiver.n
    dv = tuple(a + b for a, b in zip(x.dim_vector(n), y.dim_vector(n)))
    target = IsoClass.of(x)
    return frozenset(e for e in isoclasses_with_dim(quiver, dv)
                     if target in isoclass_monos_up_to_cokernel(quiver, y, e, p))


def torsion_free_verdict(intervals: Iterable[Interval], quiver: TypeAQuiver,
                         bounds: Bounds = Bounds(), p: int = DEFAULT_FIELD) -> OracleVerdict:
    """Bounded test of closure under submodules and extensions.

    Submodules: every indecomposable subobject of a sum of at most
    `bounds.max_summands` members lies in the set. Extensions: every middle
    term of 0 -> Y -> E -> X -> 0 with X, Y members has all summands in the set.
    """
    members = frozenset(intervals)
    max_dim = bounds.max_dim if bounds.max_dim is not None else bounds.max_summands * quiver.n
    inconclusive = False
    for k in range(1, bounds.max_summands + 1):
        for combo in itertools.combinations_with_replacement(sorted(members), k):
            total = IsoClass(combo)
            if total.total_dim > max_dim:
                inconclusive = True
                continue
            if not _sub_table(quiver, total, p) <= members:
                return OracleVerdict.NOT_TORSION_FREE
    for x in members:
        for y in members:
            if x.dim + y.dim > max_dim:
                inconclusive = True
                continue
            for e in _extension_middles(quiver, x, y, p):
                if not set(e.summands) <= members:
                    return OracleVerdict.NOT_TORSION_FREE
    return OracleVerdict.INCONCLUSIVE if inconclusive else OracleVerdict.TORSION_FREE


def is_torsion_free_oracle(intervals: Iterable[Interval], quiver: TypeAQuiver,
                           bounds: Bounds = Bounds(), p: int = DEFAULT_FIELD) -> OracleVerdict:
    """Verdict object; truthy only for a conclusive torsion-free answer."""
    return torsion_free_verdict(intervals, quiver, bounds, p)


def enumerate_tf_classes_bruteforce(quiver: TypeAQuiver, bounds: Bounds = Bounds(),
                                    p: int = DEFAULT_FIELD) -> list[frozenset[Interval]]:
    """Every subset of indecomposables passing the oracle, ordered by (size, sorted members)."""
    if quiver.n > 5:
        raise ValueError("power-set scan is limited to n <= 5")
    ivs = all_intervals(quiver.n)
    out = []
    for r in range(len(ivs) + 1):
        for subset in itertools.combinations(ivs, r):
            if torsion_free_verdict(subset, quiver, bounds, p) is OracleVerdict.TORSION_FREE:
                out.append(frozenset(subset))
    return out


class BBVerdict(enum.Enum):
    NOT_TORSION_FREE = "NotTorsionFree"
    TORSION_FREE_JHP = "TorsionFreeJHP"
    TORSION_FREE_NOT_JHP = "TorsionFreeNotJHP"


def bb_quiver(n: int) -> TypeAQuiver:
    """1 <- 2 -> 3 -> ... -> n."""
    if n < 2:
        raise ValueError("needs at least two vertices")
    return TypeAQuiver("<" + ">" * (n - 2))


def _precedes(w: Permutation, *letters: int) -> bool:
    pos = [w.position(x) for x in letters]
    return all(a < b for a, b in zip(pos, pos[1:]))


def _printed_patterns_ok(w: Permutation) -> bool:
    n = w.n_plus_1 - 1
    # w != ... 2 ... k ... 1 ... for 2 < k < n+1
    if any(_precedes(w, 2, k, 1) for k in range(3, n + 1)):
        return False
    # w != ... k ... i ... j for j in {3..n}, i < j < k
    return not any(_precedes(w, k, i, j)
                   for j in range(3, n + 1) for i in range(1, j) for k in range(j + 1, n + 2))


def _corrected_patterns_ok(w: Permutation) -> bool:
    n = w.n_plus_1 - 1
    # 2 is entered by the arrow 2 -> 1: forbid ... k ... 1 ... 2 ... for k > 2
    if any(_precedes(w, k, 1, 2) for k in range(3, n + 2)):
        return False
    # j in {3..n} carries the arrow j-1 -> j: forbid ... j ... k ... i ... for i < j < k
    return not any(_precedes(w, j, k, i)
                   for j in range(3, n + 1) for i in range(1, j) for k in range(j + 1, n + 2))


def _alpha(u: Permutation) -> frozenset[int]:
    binv = {(t.i, t.j) for t in bruhat_inversions(u)}
    return frozenset(t for t in range(3, u.n_plus_1 + 1) if (2, t) in binv)


def bb_criterion(w: Permutation, quiver: TypeAQuiver | None = None,
                 reading: str = "corrected") -> BBVerdict:
    """Pattern criterion for torsion-freeness and (JHP) of F(w) on 1 <- 2 -> ... -> n.

    reading="printed" forbids the patterns 2-k-1 and k-i-j and counts all of
    alpha(s_1 w). Those conditions disagree with c_Q-sortability under this
    package's conventions (already at n = 2, where they accept 312). The default
    "corrected" reading forbids k-1-2 and j-k-i instead, and counts only the
    alpha-letters t with (2 t) an inversion of w.
    """
    n = w.n_plus_1 - 1
    if quiver is not None and quiver != bb_quiver(n):
        raise ValueError(f"pattern criterion needs {bb_quiver(n).pretty()}, got {quiver.pretty()}")
    if reading not in ("corrected", "printed"):
        raise ValueError(f"unknown reading {reading!r}")
    ok = _corrected_patterns_ok(w) if reading == "corrected" else _printed_patterns_ok(w)
    if not ok:
        return BBVerdict.NOT_TORSION_FREE
    if _precedes(w, 1, 2) or w(1) == 2:
        return BBVerdict.TORSION_FREE_JHP
    alpha = _alpha(compose(s(1, w.n_plus_1), w))
    if reading == "corrected":
        inv = {(t.i, t.j) for t in inversions(w)}
        alpha = frozenset(t for t in alpha if (2, t) in inv)
    return BBVerdict.TORSION_FREE_JHP if len(alpha) == 1 else BBVerdict.TORSION_FREE_NOT_JHP
