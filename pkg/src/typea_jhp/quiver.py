"""
Type-A quivers, interval modules and explicit representations over F_p.

A quiver on the path 1 - 2 - ... - n is written as a string of n-1 arrows:
position a holds ">" for a -> a+1 and "<" for a+1 -> a, so "><" is 1 -> 2 <- 3.
The interval [i, j) with 1 <= i < j <= n+1 names the indecomposable supported
on the vertices i, ..., j-1.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from . import gf

__all__ = [
    "TypeAQuiver", "Interval", "IsoClass", "Rep", "BoundError", "InconsistencyError",
    "DEFAULT_FIELD", "all_intervals", "interval_to_rep", "direct_sum", "isoclass_to_rep",
    "hom_basis", "hom_dim", "euler_form", "ext_dim", "decompose", "cokernel",
    "is_injective", "interval_mono_cokernel", "monos_up_to_cokernel",
    "isoclass_monos_up_to_cokernel", "interval_hom_dim", "interval_ext_dim",
    "isoclasses_with_dim", "isoclasses_up_to",
]

DEFAULT_FIELD = 2


class BoundError(RuntimeError):
    """An enumeration would exceed its configured cap."""


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; this signals a bug, not bad input."""


@dataclass(frozen=True, order=True)
class TypeAQuiver:
    dirs: str

    def __post_init__(self):
        bad = [k for k, ch in enumerate(self.dirs, 1) if ch not in "<>"]
        if bad:
            raise ValueError(f"quiver string {self.dirs!r}: bad character at position {bad[0]}")
        if len(self.dirs) + 2 > 12:
            raise ValueError("rank cap exceeded: n+1 must be at most 12")

    @classmethod
    def parse(cls, text: str) -> "TypeAQuiver":
        return cls(text.strip())

    @classmethod
    def linear(cls, n: int) -> "TypeAQuiver":
        """1 -> 2 -> ... -> n."""
        return cls(">" * (n - 1))

    @classmethod
    def all_orientations(cls, n: int) -> list["TypeAQuiver"]:
        return [cls("".join(d)) for d in itertools.product("<>", repeat=n - 1)]

    @property
    def n(self) -> int:
        return len(self.dirs) + 1

    def arrows(self) -> list[tuple[int, int]]:
        """Arrows as (source, target), one per edge a - a+1."""
        return [(a, a + 1) if d == ">" else (a + 1, a) for a, d in enumerate(self.dirs, 1)]

    def is_linear(self) -> bool:
        return set(self.dirs) <= {">"}

    def sinks(self) -> frozenset[int]:
        return frozenset(v for v in range(1, self.n + 1)
                         if all(t == v for (src, t) in self.arrows() if v in (src, t)))

    def sources(self) -> frozenset[int]:
        return frozenset(v for v in range(1, self.n + 1)
                         if all(src == v for (src, t) in self.arrows() if v in (src, t)))

    def mutate(self, i: int) -> "TypeAQuiver":
        """Reverse every arrow at the sink or source i."""
        if i not in self.sinks() and i not in self.sources():
            raise ValueError(f"vertex {i} of {self} is neither a sink nor a source")
        d = list(self.dirs)
        flip = {">": "<", "<": ">"}
        for edge in (i - 1, i):
            if 1 <= edge <= self.n - 1:
                d[edge - 1] = flip[d[edge - 1]]
        return TypeAQuiver("".join(d))

    def __str__(self):
        return self.dirs

    def pretty(self) -> str:
        out = "1"
        for a, d in enumerate(self.dirs, 1):
            out += ("->" if d == ">" else "<-") + str(a + 1)
        return out


@dataclass(frozen=True, order=True)
class Interval:
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError(f"bad interval [{self.i},{self.j})")

    @property
    def support(self) -> range:
        return range(self.i, self.j)

    def dim_vector(self, n: int) -> tuple[int, ...]:
        return tuple(int(self.i <= v < self.j) for v in range(1, n + 1))

    @property
    def dim(self) -> int:
        return self.j - self.i

    def __str__(self):
        return f"[{self.i},{self.j})"

    @classmethod
    def parse(cls, text: str) -> "Interval":
        t = text.strip()
        if not (t.startswith("[") and t.endswith(")")):
            raise ValueError(f"interval {text!r} must look like [i,j)")
        a, b = t[1:-1].split(",")
        return cls(int(a), int(b))


def all_intervals(n: int) -> list[Interval]:
    return [Interval(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]


@dataclass(frozen=True, order=True)
class IsoClass:
    """A multiset of intervals: the Krull-Schmidt normal form of a representation."""
    summands: tuple[Interval, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, *intervals: Interval) -> "IsoClass":
        return cls(tuple(intervals))

    @classmethod
    def from_counts(cls, counts: dict[Interval, int]) -> "IsoClass":
        return cls(tuple(x for x, m in counts.items() for _ in range(m)))

    def counts(self) -> Counter:
        return Counter(self.summands)

    def dim_vector(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for x in self.summands:
            for v in x.support:
                out[v - 1] += 1
        return tuple(out)

    @property
    def total_dim(self) -> int:
        return sum(x.dim for x in self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def __add__(self, other: "IsoClass") -> "IsoClass":
        return IsoClass(self.summands + other.summands)

    def __sub__(self, other: "IsoClass") -> "IsoClass":
        left = self.counts()
        left.subtract(other.counts())
        if any(v < 0 for v in left.values()):
            raise ValueError(f"{other} is not a summand of {self}")
        return IsoClass.from_counts(left)

    def __len__(self):
        return len(self.summands)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.summands)

    def __str__(self):
        if not self.summands:
            return "0"
        return "+".join(str(x) for x in self.summands)


@dataclass(frozen=True)
class Rep:
    """A representation: per-vertex dimensions and per-arrow matrices over F_p.

    `maps[(s, t)]` has dims[t-1] rows and dims[s-1] columns.
    """
    quiver: TypeAQuiver
    dims: tuple[int, ...]
    maps: dict = field(compare=False)
    p: int = DEFAULT_FIELD

    def __post_init__(self):
        if len(self.dims) != self.quiver.n:
            raise ValueError("dimension vector length does not match the quiver")
        for (src, tgt) in self.quiver.arrows():
            m = self.maps.get((src, tgt))
            ds, dt = self.dims[src - 1], self.dims[tgt - 1]
            if m is None:
                self.maps[(src, tgt)] = gf.zeros(dt, ds)
                continue
            if len(m) != dt or any(len(row) != ds for row in m):
                raise ValueError(f"arrow {src}->{tgt}: matrix shape does not match dims")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @classmethod
    def zero(cls, quiver: TypeAQuiver, p: int = DEFAULT_FIELD) -> "Rep":
        return cls(quiver, (0,) * quiver.n, {}, p)


def interval_to_rep(quiver: TypeAQuiver, interval: Interval, p: int = DEFAULT_FIELD) -> Rep:
    if interval.j > quiver.n + 1:
        raise ValueError(f"{interval} does not fit on A_{quiver.n}")
    dims = interval.dim_vector(quiver.n)
    maps = {}
    for (src, tgt) in quiver.arrows():
        both = dims[src - 1] and dims[tgt - 1]
        maps[(src, tgt)] = [[1]] if both else gf.zeros(dims[tgt - 1], dims[src - 1])
    return Rep(quiver, dims, maps, p)


def direct_sum(reps: Iterable[Rep], quiver: TypeAQuiver, p: int = DEFAULT_FIELD) -> Rep:
    reps = list(reps)
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(quiver.n))
    maps = {}
    for (src, tgt) in quiver.arrows():
        m = gf.zeros(dims[tgt - 1], dims[src - 1])
        ro = co = 0
        for r in reps:
            block = r.maps[(src, tgt)]
            for a, row in enumerate(block):
                for b, x in enumerate(row):
                    m[ro + a][co + b] = x
            ro += r.dims[tgt - 1]
            co += r.dims[src - 1]
        maps[(src, tgt)] = m
    return Rep(quiver, dims, maps, p)


def isoclass_to_rep(quiver: TypeAQuiver, iso: IsoClass, p: int = DEFAULT_FIELD) -> Rep:
    return direct_sum((interval_to_rep(quiver, x, p) for x in iso), quiver, p)


def _check_pair(m: Rep, n: Rep):
    if m.quiver != n.quiver:
        raise ValueError("representations live on different quivers")
    if m.p != n.p:
        raise ValueError("representations live over different fields")


def _hom_system(m: Rep, n: Rep) -> tuple[list[list[int]], list[tuple[int, int, int]]]:
    # unknowns: entries phi_v[r][c] of each phi_v : M_v -> N_v
    var = []
    index = {}
    for v in range(1, m.quiver.n + 1):
        for r in range(n.dims[v - 1]):
            for c in range(m.dims[v - 1]):
                index[(v, r, c)] = len(var)
                var.append((v, r, c))
    rows = []
    p = m.p
    for (src, tgt) in m.quiver.arrows():
        ma, na = m.maps[(src, tgt)], n.maps[(src, tgt)]
        # phi_tgt @ M_a - N_a @ phi_src = 0, entry (r, c)
        for r in range(n.dims[tgt - 1]):
            for c in range(m.dims[src - 1]):
                eq = [0] * len(var)
                for k in range(m.dims[tgt - 1]):
                    if ma[k][c]:
                        eq[index[(tgt, r, k)]] += ma[k][c]
                for k in range(n.dims[src - 1]):
                    if na[r][k]:
                        eq[index[(src, k, c)]] -= na[r][k]
                rows.append([x % p for x in eq])
    return rows, var


def hom_basis(m: Rep, n: Rep) -> list[dict[int, gf.Matrix]]:
    """A basis of Hom(M, N); each morphism maps vertex -> matrix N_v x M_v."""
    _check_pair(m, n)
    rows, var = _hom_system(m, n)
    out = []
    for vec in gf.nullspace(rows, m.p, len(var)):
        phi = {v: gf.zeros(n.dims[v - 1], m.dims[v - 1]) for v in range(1, m.quiver.n + 1)}
        for k, (v, r, c) in enumerate(var):
            phi[v][r][c] = vec[k]
        out.append(phi)
    return out


def hom_dim(m: Rep, n: Rep) -> int:
    _check_pair(m, n)
    rows, var = _hom_system(m, n)
    return len(var) - (gf.rank(rows, m.p) if rows else 0)


def euler_form(d: tuple[int, ...], e: tuple[int, ...], quiver: TypeAQuiver) -> int:
    return (sum(a * b for a, b in zip(d, e))
            - sum(d[src - 1] * e[tgt - 1] for (src, tgt) in quiver.arrows()))


def ext_dim(m: Rep, n: Rep) -> int:
    """dim Ext^1(M, N) via the Euler form of the hereditary path algebra."""
    value = hom_dim(m, n) - euler_form(m.dims, n.dims, m.quiver)
    if value < 0:
        raise InconsistencyError(f"negative Ext dimension {value}")
    return value


@lru_cache(maxsize=None)
def interval_hom_dim(quiver: TypeAQuiver, a: Interval, b: Interval, p: int = DEFAULT_FIELD) -> int:
    return hom_dim(interval_to_rep(quiver, a, p), interval_to_rep(quiver, b, p))


@lru_cache(maxsize=None)
def interval_ext_dim(quiver: TypeAQuiver, a: Interval, b: Interval, p: int = DEFAULT_FIELD) -> int:
    return ext_dim(interval_to_rep(quiver, a, p), interval_to_rep(quiver, b, p))


@lru_cache(maxsize=None)
def _hom_table_inverse(quiver: TypeAQuiver, p: int) -> tuple[tuple[Interval, ...], tuple[tuple[Fraction, ...], ...]]:
    ivs = tuple(all_intervals(quiver.n))
    k = len(ivs)
    # hom_dim(I, M) = sum_J mult_J * H[I][J]; invert H exactly
    aug = [[Fraction(interval_hom_dim(quiver, a, b, p)) for b in ivs] + [Fraction(int(r == c)) for c in range(k)]
           for r, a in enumerate(ivs)]
    for c in range(k):
        piv = next(r for r in range(c, k) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        f = aug[c][c]
        aug[c] = [x / f for x in aug[c]]
        for r in range(k):
            if r != c and aug[r][c] != 0:
                g = aug[r][c]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[c])]
    return ivs, tuple(tuple(row[k:]) for row in aug)


def decompose(m: Rep) -> IsoClass:
    """Krull-Schmidt decomposition by inverting the interval hom-count system."""
    ivs, hinv = _hom_table_inverse(m.quiver, m.p)
    counts = [hom_dim(interval_to_rep(m.quiver, x, m.p), m) for x in ivs]
    # H[I][J] = hom(I, J); counts[I] = sum_J H[I][J] mult_J -> mult = H^{-1} counts
    mult = {}
    for r, x in enumerate(ivs):
        val = sum(hinv[r][c] * counts[c] for c in range(len(ivs)))
        if val.denominator != 1 or val < 0:
            raise InconsistencyError(f"non-integral multiplicity {val} for {x}")
        if val:
            mult[x] = int(val)
    iso = IsoClass.from_counts(mult)
    if iso.dim_vector(m.quiver.n) != m.dims:
        raise InconsistencyError("decomposition does not reproduce the dimension vector")
    return iso


def is_injective(phi: dict[int, gf.Matrix], m: Rep, p: int) -> bool:
    return all(gf.rank(phi[v], p) == m.dims[v - 1] for v in range(1, m.quiver.n + 1)
               if m.dims[v - 1])


def cokernel(phi: dict[int, gf.Matrix], m: Rep, n: Rep) -> Rep:
    """The quotient N / phi(M) with the induced arrow maps."""
    p, q = n.p, n.quiver
    proj, sect, dims = {}, {}, []
    for v in range(1, q.n + 1):
        nv = n.dims[v - 1]
        image, extra = gf.column_space_complement(phi[v], p, nv) if nv else ([], [])
        basis_cols = image + [[int(r == k) for r in range(nv)] for k in extra]
        if nv:
            b = [[basis_cols[c][r] for c in range(nv)] for r in range(nv)]
            binv = gf.inverse(b, p)
            proj[v] = binv[len(image):]
        else:
            proj[v] = []
        sect[v] = [[int(r == k) for k in extra] for r in range(nv)]
        dims.append(len(extra))
    maps = {}
    for (src, tgt) in q.arrows():
        ds, dt = n.dims[src - 1], n.dims[tgt - 1]
        lifted = gf.matmul(n.maps[(src, tgt)], sect[src], p, dt, ds, dims[src - 1])
        maps[(src, tgt)] = gf.matmul(proj[tgt], lifted, p, dims[tgt - 1], dt, dims[src - 1])
    return Rep(q, tuple(dims), maps, p)


def _combine(basis: list[dict[int, gf.Matrix]], coeffs: tuple[int, ...], m: Rep, n: Rep, p: int):
    phi = {v: gf.zeros(n.dims[v - 1], m.dims[v - 1]) for v in range(1, m.quiver.n + 1)}
    for c, b in zip(coeffs, basis):
        if not c:
            continue
        for v, mat in b.items():
            for r, row in enumerate(mat):
                for k, x in enumerate(row):
                    if x:
                        phi[v][r][k] = (phi[v][r][k] + c * x) % p
    return phi


# brute-force morphism enumeration cap: p ** hom_dim maps are visited
MAX_BRUTE_MAPS = 1 << 14


def monos_up_to_cokernel(x: Rep, m: Rep, max_dim: int | None = None) -> frozenset[IsoClass]:
    """Cokernel classes over every monomorphism X -> M, by enumerating all of Hom(X, M)."""
    _check_pair(x, m)
    if max_dim is not None and m.total_dim > max_dim:
        raise BoundError(f"total dimension {m.total_dim} exceeds cap {max_dim}")
    if any(a > b for a, b in zip(x.dims, m.dims)):
        return frozenset()
    basis = hom_basis(x, m)
    if x.p ** len(basis) > MAX_BRUTE_MAPS:
        raise BoundError(f"{x.p}^{len(basis)} morphisms exceed the enumeration cap")
    out = set()
    for coeffs in itertools.product(range(x.p), repeat=len(basis)):
        phi = _combine(basis, coeffs, x, m, x.p)
        if is_injective(phi, x, x.p):
            out.add(decompose(cokernel(phi, x, m)))
    return frozenset(out)


@lru_cache(maxsize=None)
def _canonical_map_cokernel(quiver: TypeAQuiver, x: Interval, targets: tuple[Interval, ...], p: int) -> IsoClass | None:
    """Cokernel of the diagonal X -> (+) targets built from each 1-dimensional Hom(X, J)."""
    xr = interval_to_rep(quiver, x, p)
    target = isoclass_to_rep(quiver, IsoClass(targets), p)
    phi = {v: gf.zeros(target.dims[v - 1], xr.dims[v - 1]) for v in range(1, quiver.n + 1)}
    offsets = {v: 0 for v in range(1, quiver.n + 1)}
    for j in IsoClass(targets):
        jr = interval_to_rep(quiver, j, p)
        (b,) = hom_basis(xr, jr)
        for v in range(1, quiver.n + 1):
            for r, row in enumerate(b[v]):
                for c, val in enumerate(row):
                    phi[v][offsets[v] + r][c] = val
            offsets[v] += jr.dims[v - 1]
    if not is_injective(phi, xr, p):
        return None
    return decompose(cokernel(phi, xr, target))


def isoclass_monos_up_to_cokernel(quiver: TypeAQuiver, x: Interval, m: IsoClass,
                                  p: int = DEFAULT_FIELD) -> frozenset[IsoClass]:
    """Cokernel classes of monomorphisms from an interval X into the class M.

    Hom(X, J) is at most one-dimensional for intervals, so automorphisms of M
    move any morphism to a sum of canonical maps into one copy of each chosen
    summand type. Only those representatives are visited.
    """
    if any(a > b for a, b in zip(x.dim_vector(quiver.n), m.dim_vector(quiver.n))):
        return frozenset()
    types = sorted(j for j in set(m.summands) if interval_hom_dim(quiver, x, j, p))
    out = set()
    for r in range(1, len(types) + 1):
        for chosen in itertools.combinations(types, r):
            coker = _canonical_map_cokernel(quiver, x, chosen, p)
            if coker is not None:
                out.add(coker + (m - IsoClass(chosen)))
    return frozenset(out)


def interval_mono_cokernel(quiver: TypeAQuiver, sub: Interval, big: Interval,
                           p: int = DEFAULT_FIELD) -> IsoClass | None:
    """Cokernel class of a monomorphism sub -> big, or None when none exists."""
    if not interval_hom_dim(quiver, sub, big, p):
        return None
    return _canonical_map_cokernel(quiver, sub, (big,), p)


def isoclasses_with_dim(quiver: TypeAQuiver, dim_vector: tuple[int, ...],
                        allowed: Iterable[Interval] | None = None) -> list[IsoClass]:
    """Every multiset of intervals (from `allowed`) with the given dimension vector."""
    ivs = sorted(allowed) if allowed is not None else all_intervals(quiver.n)
    out: list[IsoClass] = []

    def rec(k: int, remaining: list[int], chosen: list[Interval]):
        if not any(remaining):
            out.append(IsoClass(tuple(chosen)))
            return
        if k == len(ivs):
            return
        x = ivs[k]
        rec(k + 1, remaining, chosen)
        rem = list(remaining)
        picked = list(chosen)
        while all(rem[v - 1] > 0 for v in x.support):
            for v in x.support:
                rem[v - 1] -= 1
            picked.append(x)
            rec(k + 1, rem, picked)

    rec(0, list(dim_vector), [])
    return sorted(out)


def isoclasses_up_to(quiver: TypeAQuiver, max_dim: int,
                     allowed: Iterable[Interval] | None = None) -> list[IsoClass]:
    """All nonzero iso-classes with total dimension <= max_dim, smallest first."""
    ivs = sorted(allowed) if allowed is not None else all_intervals(quiver.n)
    out: list[IsoClass] = []

    def rec(k: int, budget: int, chosen: list[Interval]):
        if k == len(ivs):
            if chosen:
                out.append(IsoClass(tuple(chosen)))
            return
        x = ivs[k]
        picked = list(chosen)
        b = budget
        rec(k + 1, b, picked)
        while b >= x.dim:
            b -= x.dim
            picked = picked + [x]
            rec(k + 1, b, picked)

    rec(0, max_dim, [])
    return sorted(out, key=lambda c: (c.total_dim, c))
