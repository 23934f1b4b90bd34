"""
Reflection functors on interval modules, the alpha/beta/gamma statistics,
the per-step support and simple-count changes (dagger / ddagger), reflection
sequences along a sink-mutation plan, and the resulting (JHP) decision.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from . import gf
from .quiver import (
    InconsistencyError, Interval, Rep, TypeAQuiver,
)
from .symgroup import (
    Permutation, bruhat_inversions, coxeter_word, inversions, is_c_sortable,
    is_sortable_for_word, length, s, compose, enumerate_c_sortables,
)

__all__ = [
    "ReflectionPlan", "ReflectionSequence", "Step", "Main6Result",
    "reflect_plus_interval", "reflect_minus_interval", "reflect_plus_rep", "reflect_minus_rep",
    "alpha", "beta", "gamma", "dagger", "ddagger", "sink_plan_to_linear",
    "reflection_sequence", "main6_jhp", "sorting_word", "TableRow", "TABLE_HEADER",
    "table_rows", "render_table",
]


def _shorten(i: int, w: Permutation) -> Permutation:
    return compose(s(i, w.n_plus_1), w)


def _descends(i: int, w: Permutation) -> bool:
    return length(_shorten(i, w)) == length(w) - 1


def _by_dimension_rule(quiver: TypeAQuiver, i: int, x: Interval) -> Interval | None:
    # new dimension at i: (number of neighbours of i inside the support) - [i in support]
    inside = set(x.support)
    neighbours = sum(1 for v in (i - 1, i + 1) if 1 <= v <= quiver.n and v in inside)
    dims = {v: 1 for v in inside}
    dims[i] = neighbours - (1 if i in inside else 0)
    if dims[i] < 0:
        return None
    supp = sorted(v for v, d in dims.items() if d)
    if not supp:
        return None
    if supp != list(range(supp[0], supp[-1] + 1)) or any(dims[v] > 1 for v in supp):
        raise InconsistencyError(f"reflection of {x} at {i} is not an interval")
    return Interval(supp[0], supp[-1] + 1)


def _table_first_sink(x: Interval) -> Interval | None:
    s_, t = x.i, x.j
    if s_ == 1 and t == 2:
        return None
    if s_ == 1:
        return Interval(2, t)
    if s_ == 2:
        return Interval(1, t)
    return x


def _table_inner_sink(i: int, x: Interval) -> Interval | None:
    s_, t = x.i, x.j
    if t == s_ + 1 == i + 1:
        return None
    if t <= i - 1 or s_ >= i + 2:
        return x
    if t == i:
        return Interval(s_, i + 1)
    if t == i + 1 and s_ <= i - 1:
        return Interval(s_, i)
    if s_ <= i - 1 and t >= i + 2:
        return x
    if s_ == i + 1:
        return Interval(i, t)
    assert s_ == i and t >= i + 2
    return Interval(i + 1, t)


def reflect_plus_interval(quiver: TypeAQuiver, i: int, x: Interval) -> Interval | None:
    """R+_i of an interval at the sink i; None stands for the zero module."""
    if i not in quiver.sinks():
        raise ValueError(f"vertex {i} is not a sink of {quiver.pretty()}")
    if x.j > quiver.n + 1:
        raise ValueError(f"{x} does not fit on A_{quiver.n}")
    if i == 1 and quiver.n > 1:
        return _table_first_sink(x)
    if 1 < i < quiver.n:
        return _table_inner_sink(i, x)
    return _by_dimension_rule(quiver, i, x)


def reflect_minus_interval(quiver: TypeAQuiver, i: int, x: Interval | None) -> Interval | None:
    """R-_i of an interval (or of zero) at the source i."""
    if i not in quiver.sources():
        raise ValueError(f"vertex {i} is not a source of {quiver.pretty()}")
    if x is None:
        return None
    return _by_dimension_rule(quiver, i, x)


def reflect_plus_rep(quiver: TypeAQuiver, i: int, m: Rep) -> Rep:
    """Kernel construction: vertex i becomes ker((+) M_i' -> M_i) over the arrows i' -> i."""
    if i not in quiver.sinks():
        raise ValueError(f"vertex {i} is not a sink of {quiver.pretty()}")
    p = m.p
    ins = [src for (src, tgt) in quiver.arrows() if tgt == i]
    widths = [m.dims[v - 1] for v in ins]
    total = sum(widths)
    di = m.dims[i - 1]
    # block row [M_a for each incoming arrow]
    big = [[0] * total for _ in range(di)]
    off = 0
    for v, wdt in zip(ins, widths):
        block = m.maps[(v, i)]
        for r in range(di):
            for c in range(wdt):
                big[r][off + c] = block[r][c]
        off += wdt
    kernel = gf.nullspace(big, p, total) if di else [[int(r == c) for r in range(total)] for c in range(total)]
    new_q = quiver.mutate(i)
    dims = list(m.dims)
    dims[i - 1] = len(kernel)
    maps = {}
    for (src, tgt) in new_q.arrows():
        if src == i:
            k = ins.index(tgt)
            start = sum(widths[:k])
            maps[(src, tgt)] = [[vec[start + r] for vec in kernel] for r in range(widths[k])]
        else:
            maps[(src, tgt)] = m.maps[(src, tgt)]
    return Rep(new_q, tuple(dims), maps, p)


def reflect_minus_rep(quiver: TypeAQuiver, i: int, m: Rep) -> Rep:
    """Cokernel construction: vertex i becomes coker(M_i -> (+) M_i') over the arrows i -> i'."""
    if i not in quiver.sources():
        raise ValueError(f"vertex {i} is not a source of {quiver.pretty()}")
    p = m.p
    outs = [tgt for (src, tgt) in quiver.arrows() if src == i]
    widths = [m.dims[v - 1] for v in outs]
    total = sum(widths)
    di = m.dims[i - 1]
    stacked = [[0] * di for _ in range(total)]
    off = 0
    for v, wdt in zip(outs, widths):
        block = m.maps[(i, v)]
        for r in range(wdt):
            stacked[off + r] = list(block[r])
        off += wdt
    image, extra = gf.column_space_complement(stacked, p, total) if total else ([], [])
    if total:
        basis = [[(image + [[int(r == k) for r in range(total)] for k in extra])[c][r]
                  for c in range(total)] for r in range(total)]
        proj = gf.inverse(basis, p)[len(image):]
    else:
        proj = []
    new_q = quiver.mutate(i)
    dims = list(m.dims)
    dims[i - 1] = len(extra)
    maps = {}
    for (src, tgt) in new_q.arrows():
        if tgt == i:
            k = outs.index(src)
            start = sum(widths[:k])
            maps[(src, tgt)] = [[row[start + c] for c in range(widths[k])] for row in proj]
        else:
            maps[(src, tgt)] = m.maps[(src, tgt)]
    return Rep(new_q, tuple(dims), maps, p)


def _binv_pairs(u: Permutation) -> set[tuple[int, int]]:
    return {(t.i, t.j) for t in bruhat_inversions(u)}


def alpha(u: Permutation) -> frozenset[int]:
    binv = _binv_pairs(u)
    return frozenset(t for t in range(3, u.n_plus_1 + 1) if (2, t) in binv)


def _check_inner(u: Permutation, i: int):
    n = u.n_plus_1 - 1
    if not 1 < i < n:
        raise ValueError(f"need 1 < i < {n}, got i = {i}")


def beta(u: Permutation, i: int) -> frozenset[int]:
    _check_inner(u, i)
    binv = _binv_pairs(u)
    pos = u.position
    return frozenset(t for t in range(1, i)
                     if (t, i) in binv and pos(i) < pos(i + 1) < pos(t))


def gamma(u: Permutation, i: int) -> frozenset[int]:
    _check_inner(u, i)
    binv = _binv_pairs(u)
    pos = u.position
    return frozenset(t for t in range(i + 2, u.n_plus_1 + 1)
                     if (i + 1, t) in binv and pos(t) < pos(i) < pos(i + 1))


def _check_step(i: int, w: Permutation):
    n = w.n_plus_1 - 1
    if not 1 <= i < n:
        raise ValueError(f"need 1 <= i < {n}, got i = {i}")
    if not _descends(i, w):
        raise ValueError(f"l(s_{i} w) != l(w) - 1 for w = {w}")


def dagger(i: int, w: Permutation) -> int:
    """Change in support size when s_i is peeled off the left of w."""
    _check_step(i, w)
    if i == 1:
        return int(w(1) == 2)
    u = _shorten(i, w)
    return int(max(u.word[:i]) <= i)


def ddagger(i: int, w: Permutation, printed: bool = False) -> int:
    """Change in the number of Bruhat inversions when s_i is peeled off w.

    For i = 1 only the letters t of alpha(s_1 w) that also precede 2 in w are
    counted. `printed=True` counts all of alpha(s_1 w) instead, which differs
    exactly when w = ... 2 ... t ... 1 ... and then breaks the identity with the
    Bruhat-inversion count (first at w = 4231 on 1 <- 2 -> 3).
    """
    _check_step(i, w)
    u = _shorten(i, w)
    if i == 1:
        if w(1) == 2:
            return 1
        a = alpha(u)
        if not printed:
            inv = {(t.i, t.j) for t in inversions(w)}
            a = frozenset(t for t in a if (2, t) in inv)
        return 1 - len(a)
    return 1 - (len(beta(u, i)) + len(gamma(u, i)))


@dataclass(frozen=True)
class ReflectionPlan:
    start: TypeAQuiver
    vertices: tuple[int, ...]

    def __post_init__(self):
        q = self.start
        for y, j in enumerate(self.vertices, 1):
            if not 1 <= j < q.n:
                raise ValueError(f"plan vertex {j} at step {y} is outside [1, {q.n - 1}]")
            if j not in q.sinks():
                raise ValueError(f"plan vertex {j} at step {y} is not a sink of {q.pretty()}")
            q = q.mutate(j)
        if not q.is_linear():
            raise ValueError(f"plan ends at {q.pretty()}, not the linear orientation")

    @property
    def quivers(self) -> tuple[TypeAQuiver, ...]:
        out = [self.start]
        for j in self.vertices:
            out.append(out[-1].mutate(j))
        return tuple(out)


def sink_plan_to_linear(quiver: TypeAQuiver) -> ReflectionPlan:
    """Shortest sink-mutation plan to 1 -> 2 -> ... -> n (lexicographically first on ties)."""
    target = TypeAQuiver.linear(quiver.n)
    parent: dict[TypeAQuiver, tuple[TypeAQuiver, int] | None] = {quiver: None}
    queue = deque([quiver])
    while queue:
        q = queue.popleft()
        if q == target:
            break
        for j in sorted(q.sinks()):
            if j >= q.n:
                continue
            nxt = q.mutate(j)
            if nxt not in parent:
                parent[nxt] = (q, j)
                queue.append(nxt)
    if target not in parent:
        raise InconsistencyError(f"no sink plan from {quiver.pretty()} to the linear orientation")
    path, q = [], target
    while parent[q] is not None:
        q, j = parent[q]
        path.append(j)
    return ReflectionPlan(quiver, tuple(reversed(path)))


@dataclass(frozen=True)
class ReflectionSequence:
    indices: tuple[int, ...]          # 1-based positions t_1 < ... < t_x into the plan
    vertices: tuple[int, ...]         # j_{t_1}, ..., j_{t_x}
    permutations: tuple[Permutation, ...]  # w, s_{j_{t_1}} w, ...


def reflection_sequence(w: Permutation, plan: ReflectionPlan) -> ReflectionSequence | None:
    """Greedy subsequence of the plan along which w loses one unit of length per step."""
    if w.n_plus_1 != plan.start.n + 1:
        raise ValueError("permutation rank does not match the plan's quiver")
    idx, verts, perms = [], [], [w]
    cur = w
    for y, j in enumerate(plan.vertices, 1):
        if _descends(j, cur):
            idx.append(y)
            verts.append(j)
            cur = _shorten(j, cur)
            perms.append(cur)
    if not idx:
        return None
    return ReflectionSequence(tuple(idx), tuple(verts), tuple(perms))


@dataclass(frozen=True)
class Step:
    vertex: int
    dagger: int
    ddagger: int
    perm_before: Permutation
    perm_after: Permutation


@dataclass(frozen=True)
class Main6Result:
    plan: ReflectionPlan
    sequence: ReflectionSequence | None
    steps: tuple[Step, ...]
    dagger_total: int
    ddagger_total: int
    final: Permutation

    @property
    def jhp(self) -> bool:
        return self.dagger_total == self.ddagger_total

    def to_json(self) -> str:
        return json.dumps({
            "plan": list(self.plan.vertices),
            "sequence": list(self.sequence.vertices) if self.sequence else None,
            "steps": [{"vertex": st.vertex, "dagger": st.dagger, "ddagger": st.ddagger,
                       "perm_before": str(st.perm_before), "perm_after": str(st.perm_after)}
                      for st in self.steps],
            "totals": {"dagger": self.dagger_total, "ddagger": self.ddagger_total},
            "jhp": self.jhp,
        }, sort_keys=True)


def main6_jhp(w: Permutation, quiver: TypeAQuiver, plan: ReflectionPlan | None = None,
              printed: bool = False) -> Main6Result:
    """Decide (JHP) for F(w) by comparing the dagger and ddagger totals along a plan.

    Every intermediate permutation is re-checked for sortability against the
    Coxeter element of the current quiver; a failure raises InconsistencyError.
    """
    if is_c_sortable(w, quiver) is None:
        raise ValueError(f"{w} is not c-sortable for {quiver.pretty()}")
    plan = plan or sink_plan_to_linear(quiver)
    if plan.start != quiver:
        raise ValueError("plan starts at a different quiver")
    seq = reflection_sequence(w, plan)
    steps = []
    cur = w
    for j, q_next in zip(plan.vertices, plan.quivers[1:]):
        if _descends(j, cur):
            nxt = _shorten(j, cur)
            steps.append(Step(j, dagger(j, cur), ddagger(j, cur, printed), cur, nxt))
            cur = nxt
        if is_sortable_for_word(cur, coxeter_word(q_next)) is None:
            raise InconsistencyError(f"{cur} is not c-sortable for {q_next.pretty()}")
    return Main6Result(plan, seq, tuple(steps),
                       sum(st.dagger for st in steps), sum(st.ddagger for st in steps), cur)


def sorting_word(w: Permutation, quiver: TypeAQuiver) -> str:
    """The c-sorting word of w as text, e.g. "s2s1s3s2=3412" or "e=1234"."""
    cert = is_sortable_for_word(w, coxeter_word(quiver))
    if cert is None:
        raise ValueError(f"{w} is not c-sortable for {quiver.pretty()}")
    word = "".join(f"s{i}" for i in cert.word) or "e"
    return f"{word}={w}"


@dataclass(frozen=True)
class TableRow:
    w: str
    sequence: str
    w_prime: str
    dagger: int
    ddagger: int

    def cells(self) -> list[str]:
        return [self.w, self.sequence, self.w_prime, str(self.dagger), str(self.ddagger)]


TABLE_HEADER = ["w", "reflection sequence", "w'", "dagger", "ddagger"]


def table_rows(quiver: TypeAQuiver, plan: ReflectionPlan | None = None,
               printed: bool = False) -> list[TableRow]:
    """One row per c_Q-sortable element in lexicographic order; every cell recomputed."""
    plan = plan or sink_plan_to_linear(quiver)
    target = plan.quivers[-1]
    rows = []
    for w in enumerate_c_sortables(quiver):
        res = main6_jhp(w, quiver, plan, printed)
        seq = ",".join(map(str, res.sequence.vertices)) if res.sequence else "absence"
        rows.append(TableRow(sorting_word(w, quiver), seq, sorting_word(res.final, target),
                             res.dagger_total, res.ddagger_total))
    return rows


def render_table(rows: list[TableRow]) -> str:
    lines = [" | ".join(TABLE_HEADER)] + [" | ".join(r.cells()) for r in rows]
    return "\n".join(lines) + "\n"
