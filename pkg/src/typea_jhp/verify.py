"""Cross-check suites comparing the combinatorial criteria against the brute-force oracles."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .filt import GeneratorSet, check_jhp, check_wjhp, is_semibrick, simples_in
from .quiver import (
    DEFAULT_FIELD, Interval, IsoClass, Rep, TypeAQuiver, all_intervals, decompose, direct_sum,
    euler_form, ext_dim, hom_dim, interval_ext_dim, interval_hom_dim, interval_mono_cokernel,
    interval_to_rep, monos_up_to_cokernel,
)
from .reflect import (
    dagger, ddagger, main6_jhp, reflect_minus_interval, reflect_plus_interval, reflect_plus_rep,
)
from .semibrick import (
    all_linear_modules, catalan, enumerate_semibricks_linear, h_sets, is_semibrick_linear,
    is_semibrick_linear_by_hom, lambda_quiver, to_interval,
)
from .symgroup import (
    all_permutations, apply_transposition, bruhat_inversions, compose, enumerate_c_sortables,
    from_word, inversions, is_c_sortable, length, s, support, support_from_word,
)
from .torsion import (
    BBVerdict, Bounds, bb_criterion, bb_quiver, enumerate_tf_classes_bruteforce, jhp_by_count,
    simples_of, supp_of_class, tf_class_of, torsion_free_verdict,
)

__all__ = ["Check", "SUITES", "run_suite", "run_all"]


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _quivers(quiver: TypeAQuiver | None, max_n: int) -> list[TypeAQuiver]:
    if quiver is not None:
        return [quiver]
    return [q for n in range(1, max_n + 1) for q in TypeAQuiver.all_orientations(n)]


def suite_symgroup(quiver, max_n, **_) -> list[Check]:
    out = []
    ns = [quiver.n] if quiver else range(1, max_n + 1)
    bad_binv = bad_supp = 0
    for n in ns:
        for w in all_permutations(n + 1):
            if any(length(apply_transposition(t, w)) != length(w) - 1 for t in bruhat_inversions(w)):
                bad_binv += 1
            if support(w) != support_from_word(w) or len(inversions(w)) != length(w):
                bad_supp += 1
    out.append(Check("symgroup", "bruhat inversions drop length by one", bad_binv == 0, f"{bad_binv} bad"))
    out.append(Check("symgroup", "prefix-max support equals reduced-word support", bad_supp == 0, f"{bad_supp} bad"))
    bad_cert, bad_count = 0, []
    for q in _quivers(quiver, max_n):
        sortables = enumerate_c_sortables(q)
        if len(sortables) != catalan(q.n):
            bad_count.append(str(q))
        for w in sortables:
            cert = is_c_sortable(w, q)
            sup = cert.supports() if cert else []
            if (cert is None or from_word(cert.word, q.n + 1) != w or len(cert.word) != length(w)
                    or any(not a >= b for a, b in zip(sup, sup[1:]))):
                bad_cert += 1
    out.append(Check("symgroup", "sortability certificates are reduced with nested supports", bad_cert == 0,
                     f"{bad_cert} bad"))
    out.append(Check("symgroup", "sortable count is Catalan", not bad_count, ", ".join(bad_count)))
    return out


def _random_rep(q: TypeAQuiver, rng: random.Random, p: int) -> Rep:
    dims = tuple(rng.randint(0, 2) for _ in range(q.n))
    maps = {(a, b): [[rng.randrange(p) for _ in range(dims[a - 1])] for _ in range(dims[b - 1])]
            for (a, b) in q.arrows()}
    return Rep(q, dims, maps, p)


def suite_quiver(quiver, max_n, p=DEFAULT_FIELD, seed=0, **_) -> list[Check]:
    out = []
    bad01 = bad_dec = bad_mono = 0
    for q in _quivers(quiver, max_n):
        ivs = all_intervals(q.n)
        for a, b in itertools.product(ivs, repeat=2):
            if interval_hom_dim(q, a, b, p) > 1 or interval_ext_dim(q, a, b, p) > 1:
                bad01 += 1
            ra, rb = interval_to_rep(q, a, p), interval_to_rep(q, b, p)
            if decompose(direct_sum([ra, rb], q, p)) != IsoClass.of(a, b):
                bad_dec += 1
            fast = interval_mono_cokernel(q, a, b, p)
            slow = monos_up_to_cokernel(ra, rb)
            if (fast is None and slow) or (fast is not None and slow != {fast}):
                bad_mono += 1
    out.append(Check("quiver", "interval hom/ext dimensions are 0 or 1", bad01 == 0, f"{bad01} bad"))
    out.append(Check("quiver", "decompose recovers pairs of intervals", bad_dec == 0, f"{bad_dec} bad"))
    out.append(Check("quiver", "fast interval cokernels match brute force", bad_mono == 0, f"{bad_mono} bad"))
    rng = random.Random(seed)
    bad_euler = 0
    qs = _quivers(quiver, max_n)
    for _ in range(100):
        q = rng.choice(qs)
        m, n = _random_rep(q, rng, p), _random_rep(q, rng, p)
        if hom_dim(m, n) - ext_dim(m, n) != euler_form(m.dims, n.dims, q):
            bad_euler += 1
    out.append(Check("quiver", "Euler form on random representations", bad_euler == 0, f"{bad_euler} bad"))
    return out


def suite_torsion(quiver, max_n, p=DEFAULT_FIELD, pair_sum=2, **_) -> list[Check]:
    out = []
    bad_bij, bad_supp = [], 0
    for q in _quivers(quiver, max_n):
        brute = set(enumerate_tf_classes_bruteforce(q, Bounds(pair_sum), p))
        sort = {tf_class_of(w, q).intervals for w in enumerate_c_sortables(q)}
        if brute != sort:
            bad_bij.append(str(q))
        for w in enumerate_c_sortables(q):
            if supp_of_class(tf_class_of(w, q)) != support(w):
                bad_supp += 1
            if len(bruhat_inversions(w)) < len(support(w)):
                bad_supp += 1
    out.append(Check("torsion", "brute-force torsion-free classes equal F(sortables)", not bad_bij,
                     ", ".join(bad_bij)))
    out.append(Check("torsion", "supp F(w) = supp w and |Binv| >= |supp|", bad_supp == 0, f"{bad_supp} bad"))
    bad_bb = 0
    ns = [quiver.n] if quiver else range(2, max_n + 1)
    for n in ns:
        q = bb_quiver(n)
        if quiver is not None and q != quiver:
            continue
        for w in all_permutations(n + 1):
            expect = (BBVerdict.NOT_TORSION_FREE if is_c_sortable(w, q) is None
                      else BBVerdict.TORSION_FREE_JHP if jhp_by_count(w) else BBVerdict.TORSION_FREE_NOT_JHP)
            if bb_criterion(w, q) != expect:
                bad_bb += 1
    out.append(Check("torsion", "pattern criterion matches sortability and counts", bad_bb == 0, f"{bad_bb} bad"))
    return out


def suite_reflect(quiver, max_n, p=DEFAULT_FIELD, pair_sum=2, **_) -> list[Check]:
    out = []
    bad_tab = bad_rt = 0
    for q in _quivers(quiver, max(max_n, 5) if quiver is None else max_n):
        for i in sorted(q.sinks()):
            for x in all_intervals(q.n):
                r = reflect_plus_interval(q, i, x)
                kern = decompose(reflect_plus_rep(q, i, interval_to_rep(q, x, p)))
                if kern != (IsoClass.of(r) if r else IsoClass()):
                    bad_tab += 1
                if x != Interval(i, i + 1) and reflect_minus_interval(q.mutate(i), i, r) != x:
                    bad_rt += 1
    out.append(Check("reflect", "reflection tables match the kernel construction", bad_tab == 0, f"{bad_tab} bad"))
    out.append(Check("reflect", "R- R+ is the identity off the simple", bad_rt == 0, f"{bad_rt} bad"))
    bad47 = bad_main = bad_img = 0
    for q in _quivers(quiver, max_n):
        for w in enumerate_c_sortables(q):
            if main6_jhp(w, q).jhp != jhp_by_count(w):
                bad_main += 1
            for i in sorted(q.sinks()):
                if i >= q.n:
                    continue
                u = compose(s(i, q.n + 1), w)
                if length(u) != length(w) - 1:
                    continue
                if (dagger(i, w) != len(support(w)) - len(support(u))
                        or ddagger(i, w) != len(bruhat_inversions(w)) - len(bruhat_inversions(u))
                        or len(simples_of(tf_class_of(w, q))) - len(simples_of(tf_class_of(u, q.mutate(i))))
                        != ddagger(i, w)):
                    bad47 += 1
                if q.n <= 3:
                    image = {reflect_plus_interval(q, i, x) for x in tf_class_of(w, q).intervals} - {None}
                    if (Interval(i, i + 1) in image
                            or not torsion_free_verdict(image, q.mutate(i), Bounds(pair_sum), p)):
                        bad_img += 1
    out.append(Check("reflect", "dagger/ddagger equal support and Binv drops", bad47 == 0, f"{bad47} bad"))
    out.append(Check("reflect", "reflection-sequence verdict equals the count verdict", bad_main == 0,
                     f"{bad_main} bad"))
    out.append(Check("reflect", "R+ of F(w) is torsion-free without the new simple", bad_img == 0, f"{bad_img} bad"))
    return out


def suite_filt(quiver, max_n, p=DEFAULT_FIELD, universe_dim=8, **_) -> list[Check]:
    out = []
    bad_sb, n_sb = [], 0
    bad_sim = bad_jhp = 0
    for q in _quivers(quiver, min(max_n, 3)):
        ivs = all_intervals(q.n)
        for r in range(1, len(ivs) + 1):
            for sub in itertools.combinations(ivs, r):
                g = GeneratorSet.of_intervals(q, sub, p)
                if not is_semibrick(g):
                    continue
                n_sb += 1
                a, b = check_wjhp(g, universe_dim), check_jhp(g, universe_dim)
                if not (a.passed and b.passed) or a.inconclusive or b.inconclusive:
                    bad_sb.append(f"{q}:{g}")
        for w in enumerate_c_sortables(q):
            f = tf_class_of(w, q)
            if simples_in(f.intervals, q, p) != simples_of(f):
                bad_sim += 1
            sims = simples_of(f)
            if sims:
                rep = check_jhp(GeneratorSet.of_intervals(q, sims, p), universe_dim, within=f.intervals)
                if rep.passed != jhp_by_count(w):
                    bad_jhp += 1
    out.append(Check("filt", "every semibrick passes WJHP and JHP", not bad_sb,
                     f"{n_sb} semibricks; " + "; ".join(bad_sb[:5])))
    out.append(Check("filt", "simples of F(w) are the Binv intervals", bad_sim == 0, f"{bad_sim} bad"))
    out.append(Check("filt", "filtration JHP verdict equals the count verdict", bad_jhp == 0, f"{bad_jhp} bad"))
    return out


def suite_semibrick(quiver, max_n, p=DEFAULT_FIELD, **_) -> list[Check]:
    from .semibrick import ShiftedInterval, is_semibrick_shifted, is_semibrick_shifted_by_hom
    out = []
    top = quiver.n if quiver else max(max_n, 5)
    counts = [len(enumerate_semibricks_linear(n)) for n in range(1, top + 1)]
    out.append(Check("semibrick", "semibrick counts are Catalan",
                     counts == [catalan(n) for n in range(1, top + 1)], str(counts)))
    bad_h = bad_lin = bad_sh = 0
    for n in range(1, top + 1):
        q = lambda_quiver(n)
        for a in all_linear_modules(n):
            h = h_sets(a, n)
            for b in all_linear_modules(n):
                ia, ib = to_interval(a), to_interval(b)
                got = (b in h[0], b in h[1], b in h[2], b in h[3])
                want = (interval_hom_dim(q, ia, ib) > 0, interval_hom_dim(q, ib, ia) > 0,
                        interval_ext_dim(q, ia, ib) > 0, interval_ext_dim(q, ib, ia) > 0)
                bad_h += got != want
    for n in range(1, min(top, 4) + 1):
        mods = all_linear_modules(n)
        for r in range(len(mods) + 1):
            for sub in itertools.combinations(mods, r):
                bad_lin += is_semibrick_linear(sub) != is_semibrick_linear_by_hom(sub, n)
        objs = [ShiftedInterval(i, j, k) for (i, j) in mods for k in range(-2, 3)]
        for r in range(1, 4):
            for sub in itertools.combinations(objs, r):
                bad_sh += is_semibrick_shifted(sub, n) != is_semibrick_shifted_by_hom(sub, n)
    out.append(Check("semibrick", "closed-form H-sets match Hom/Ext", bad_h == 0, f"{bad_h} bad"))
    out.append(Check("semibrick", "index criterion matches hom vanishing", bad_lin == 0, f"{bad_lin} bad"))
    out.append(Check("semibrick", "shifted criterion matches shifted homs", bad_sh == 0, f"{bad_sh} bad"))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "symgroup": suite_symgroup,
    "quiver": suite_quiver,
    "torsion": suite_torsion,
    "reflect": suite_reflect,
    "filt": suite_filt,
    "semibrick": suite_semibrick,
}


def run_suite(name: str, quiver: TypeAQuiver | None = None, max_n: int = 3, **kw) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](quiver, max_n, **kw)


def run_all(quiver: TypeAQuiver | None = None, max_n: int = 3, threads: int = 1, **kw) -> list[Check]:
    names = list(SUITES)
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_named, [(n, quiver, max_n, kw) for n in names]))
    else:
        parts = [run_suite(n, quiver, max_n, **kw) for n in names]
    return [c for part in parts for c in part]


def _run_named(args) -> list[Check]:
    name, quiver, max_n, kw = args
    return run_suite(name, quiver, max_n, **kw)
