"""
Semibricks for the linearly oriented path algebra Lambda of n -> n-1 -> ... -> 1.

Modules are named M(i,j) with 0 <= i < j <= n, supported on the vertices
i < l <= j. Internally this is the interval [i+1, j+1) on the quiver "<<...<".
Shifted objects M(i,j)[k] live in the bounded derived category; between
indecomposables only shift differences 0 and +-1 can carry morphisms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .quiver import Interval, TypeAQuiver, interval_ext_dim, interval_hom_dim

__all__ = [
    "LinearModule", "ShiftedInterval", "lambda_quiver", "to_interval", "from_interval",
    "h_sets", "is_semibrick_linear", "is_semibrick_linear_by_hom", "enumerate_semibricks_linear",
    "catalan", "shifted_hom_dim", "pair_ok_by_cases", "pair_ok_by_hsets",
    "is_semibrick_shifted", "is_semibrick_shifted_by_hom", "all_linear_modules", "example_sets",
]

LinearModule = tuple[int, int]  # (i, j) for M(i,j)


def lambda_quiver(n: int) -> TypeAQuiver:
    return TypeAQuiver("<" * (n - 1))


def to_interval(m: LinearModule) -> Interval:
    i, j = m
    return Interval(i + 1, j + 1)


def from_interval(x: Interval) -> LinearModule:
    return (x.i - 1, x.j - 1)


def all_linear_modules(n: int) -> list[LinearModule]:
    return [(i, j) for i in range(n) for j in range(i + 1, n + 1)]


def catalan(n: int) -> int:
    """Number of semibricks over A_n: C(2n+2, n+1) / (n+2)."""
    return comb(2 * n + 2, n + 1) // (n + 2)


def h_sets(m: LinearModule, n: int) -> tuple[frozenset, frozenset, frozenset, frozenset]:
    """(H0+, H0-, H1+, H1-) of M(i,j) from the closed-form index ranges."""
    i, j = m
    if not 0 <= i < j <= n:
        raise ValueError(f"M({i},{j}) is not a module over A_{n}")
    h0p = frozenset((s, t) for s in range(i, j) for t in range(j, n + 1))
    h0m = frozenset((s, t) for s in range(0, i + 1) for t in range(i + 1, j + 1))
    h1p = frozenset((s, t) for s in range(0, i) for t in range(i, j) if s < t)
    h1m = frozenset((s, t) for s in range(i + 1, j + 1) for t in range(j + 1, n + 1))
    return h0p, h0m, h1p, h1m


def _hom(a: LinearModule, b: LinearModule, n: int) -> int:
    return interval_hom_dim(lambda_quiver(n), to_interval(a), to_interval(b))


def _ext(a: LinearModule, b: LinearModule, n: int) -> int:
    return interval_ext_dim(lambda_quiver(n), to_interval(a), to_interval(b))


def is_semibrick_linear(modules: Iterable[LinearModule]) -> bool:
    """Distinct left ends, and y_j <= x_i or y_j >= y_i + 1 whenever x_j < x_i."""
    ms = sorted(set(modules))
    xs = [x for x, _ in ms]
    if len(set(xs)) != len(xs):
        return False
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            (_, yj), (xi, yi) = ms[a], ms[b]
            if not (yj <= xi or yj >= yi + 1):
                return False
    return True


def is_semibrick_linear_by_hom(modules: Iterable[LinearModule], n: int) -> bool:
    ms = sorted(set(modules))
    return all(_hom(a, b, n) == 0 and _hom(b, a, n) == 0 for a, b in combinations(ms, 2))


def enumerate_semibricks_linear(n: int) -> list[tuple[LinearModule, ...]]:
    """Every semibrick (the empty one included), by backtracking over pairwise compatibility."""
    mods = all_linear_modules(n)
    ok = {(a, b): is_semibrick_linear([a, b]) for a in mods for b in mods if a < b}
    out: list[tuple[LinearModule, ...]] = []

    def grow(start: int, chosen: list[LinearModule]):
        out.append(tuple(chosen))
        for k in range(start, len(mods)):
            m = mods[k]
            if all(ok[(c, m)] for c in chosen):
                chosen.append(m)
                grow(k + 1, chosen)
                chosen.pop()

    grow(0, [])
    return out


@dataclass(frozen=True, order=True)
class ShiftedInterval:
    i: int
    j: int
    k: int = 0

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise ValueError(f"bad module M({self.i},{self.j})")

    @property
    def module(self) -> LinearModule:
        return (self.i, self.j)

    def __str__(self):
        return f"M({self.i},{self.j})[{self.k}]"

    @classmethod
    def parse(cls, text: str) -> "ShiftedInterval":
        hit = re.fullmatch(r"\s*M\((\d+),(\d+)\)(?:\[(-?\d+)\])?\s*", text)
        if not hit:
            raise ValueError(f"shifted interval {text!r} must look like M(i,j)[k]")
        return cls(int(hit[1]), int(hit[2]), int(hit[3] or 0))


def shifted_hom_dim(x: ShiftedInterval, y: ShiftedInterval, n: int) -> int:
    """dim Hom(X[k], Y[l]) in the derived category."""
    d = y.k - x.k
    if d == 0:
        return _hom(x.module, y.module, n)
    if d == 1:
        return _ext(x.module, y.module, n)
    return 0


def _case_a(i, j, s, t, n) -> bool:
    if 0 <= s <= i - 1:
        return s + 1 <= t <= i or j + 1 <= t <= n
    if i + 1 <= s <= j - 2:
        return s + 1 <= t <= j - 1
    if j <= s <= n:
        return s + 1 <= t <= n
    return False  # s == i or s == j - 1


def _case_b(i, j, s, t, n) -> bool:
    if 0 <= s <= i - 1:
        return s + 1 <= t <= i - 1 or j <= t <= n
    return s + 1 <= t <= n


def _case_c(i, j, s, t, n) -> bool:
    if 0 <= s <= i:
        return s + 1 <= t <= n
    if i + 1 <= s <= j - 1:
        return s + 1 <= t <= j
    if j + 1 <= s <= n:
        return s + 1 <= t <= n
    return False  # s == j


def pair_ok_by_cases(x: ShiftedInterval, y: ShiftedInterval, n: int) -> bool:
    """Index-inequality test that {X, Y} (X != Y) is a semibrick, split on l - k."""
    (i, j), (s, t), d = x.module, y.module, y.k - x.k
    if d == 0:
        return _case_a(i, j, s, t, n)
    if d == 1:
        return _case_b(i, j, s, t, n)
    if d == -1:
        return _case_c(i, j, s, t, n)
    return True


def pair_ok_by_hsets(x: ShiftedInterval, y: ShiftedInterval, n: int) -> bool:
    """The same test phrased as non-membership in the H-sets of X."""
    h0p, h0m, h1p, h1m = h_sets(x.module, n)
    st, d = y.module, y.k - x.k
    if d == 0:
        return st not in h0p | h0m
    if d == 1:
        return st not in h1p
    if d == -1:
        return st not in h1m
    return True


def is_semibrick_shifted(objs: Iterable[ShiftedInterval], n: int) -> bool:
    objs = sorted(set(objs))
    for o in objs:
        if o.j > n:
            raise ValueError(f"{o} does not live over A_{n}")
    return all(pair_ok_by_cases(a, b, n) for a, b in combinations(objs, 2))


def is_semibrick_shifted_by_hom(objs: Iterable[ShiftedInterval], n: int) -> bool:
    objs = sorted(set(objs))
    if any(shifted_hom_dim(o, o, n) != 1 for o in objs):
        return False
    return all(shifted_hom_dim(a, b, n) == 0 and shifted_hom_dim(b, a, n) == 0
               for a, b in combinations(objs, 2))


def example_sets() -> dict[str, frozenset[ShiftedInterval]]:
    """The shifted sets over 1 -> 2 -> 3, rewritten over Lambda (n = 3) via a -> 4 - a.

    S3, S2, S1, P1 become M(0,1), M(1,2), M(2,3), M(0,3). The top row of the
    derived AR quiver is periodic (S3[-1], S2[-1], S1[-1], P1, S3[1], ...), so
    "X0" is its window of shifts -1..2.
    """
    s3, s2, s1, p1 = (0, 1), (1, 2), (2, 3), (0, 3)

    def sh(m, k):
        return ShiftedInterval(m[0], m[1], k)

    x0 = frozenset([sh(s3, 2 * m - 1) for m in (0, 1)] + [sh(s2, 2 * m - 1) for m in (0, 1)]
                   + [sh(s1, 2 * m - 1) for m in (0, 1)] + [sh(p1, 2 * m) for m in (0, 1)])
    return {
        "X0": x0,
        "X1": frozenset([sh(s3, -1), sh(s2, -1), sh(s1, -1), sh(p1, 0)]),
        "X2": frozenset([sh(s2, -1), sh(s1, -1), sh(p1, 0)]),
        "X3": frozenset([sh(s2, -1), sh(s1, -1), sh(s1, 0)]),
    }
