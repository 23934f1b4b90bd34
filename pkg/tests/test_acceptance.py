"""The twelve acceptance criteria, each at its stated tolerance and time limit.

Each test records a one-line verdict through the `acceptance` fixture; the
lines are printed in the pytest terminal summary.
"""

import gc
import itertools
import time
from pathlib import Path

from typea_jhp.filt import GeneratorSet, check_jhp, check_wjhp, is_semibrick, simples_in
from typea_jhp.quiver import (
    Interval, IsoClass, TypeAQuiver, all_intervals, decompose, interval_ext_dim, interval_hom_dim,
    interval_to_rep,
)
from typea_jhp.reflect import (
    dagger, ddagger, main6_jhp, reflect_minus_interval, reflect_plus_interval, reflect_plus_rep,
    render_table, table_rows,
)
from typea_jhp.semibrick import (
    ShiftedInterval, all_linear_modules, catalan, enumerate_semibricks_linear, example_sets, h_sets,
    is_semibrick_linear, is_semibrick_linear_by_hom, is_semibrick_shifted, is_semibrick_shifted_by_hom,
    lambda_quiver, to_interval,
)
from typea_jhp.symgroup import (
    Permutation, Transposition, all_permutations, bruhat_inversions, compose, enumerate_c_sortables,
    inversions, is_c_sortable, length, s, support,
)
from typea_jhp.torsion import (
    BBVerdict, bb_criterion, bb_quiver, enumerate_tf_classes_bruteforce, jhp_by_count, tf_class_of,
    torsion_free_verdict,
)

GOLDEN = Path(__file__).parent / "golden"
T = Transposition


def _orientations(max_n):
    return [q for n in range(1, max_n + 1) for q in TypeAQuiver.all_orientations(n)]


def test_c01_inversion_fidelity(acceptance):
    w = Permutation.parse("534216")
    # single timed run with the collector paused, as timeit does
    gc.disable()
    try:
        t0 = time.perf_counter()
        inv, binv = inversions(w), bruhat_inversions(w)
        elapsed = time.perf_counter() - t0
    finally:
        gc.enable()
    want_inv = {T(1, 2), T(1, 3), T(1, 4), T(1, 5), T(2, 3), T(2, 4), T(2, 5), T(3, 5), T(4, 5)}
    want_binv = {T(1, 2), T(2, 3), T(2, 4), T(3, 5), T(4, 5)}
    ok = inv == want_inv and binv == want_binv and elapsed < 1e-3
    acceptance(1, "inversion fidelity", ok, f"{len(inv)} / {len(binv)} elements, {elapsed * 1e3:.3f} ms")
    assert inv == want_inv
    assert binv == want_binv
    assert elapsed < 1e-3


def test_c02_sortable_counts(acceptance):
    t0 = time.perf_counter()
    five = len(enumerate_c_sortables(TypeAQuiver("<")))
    fourteen = len(enumerate_c_sortables(TypeAQuiver("><")))
    bad = [str(q) for q in _orientations(4) if len(enumerate_c_sortables(q)) != catalan(q.n)]
    elapsed = time.perf_counter() - t0
    ok = five == 5 and fourteen == 14 and not bad and elapsed < 5
    acceptance(2, "sortable counts", ok, f"5={five}, 14={fourteen}, off-Catalan: {bad or 'none'}, {elapsed:.2f} s")
    assert (five, fourteen, bad) == (5, 14, [])
    assert elapsed < 5


def _table_subchecks(ours: str, reference: str) -> list[str]:
    """Cell-level comparison keyed by the one-line permutation; returns the differences."""
    def parse(text):
        rows = [line.split(" | ") for line in text.strip().splitlines()[1:]]
        return [(r[0].split("=")[1], r[1], r[2].split("=")[1], r[3], r[4]) for r in rows]

    a, b = parse(ours), parse(reference)
    notes = []
    if len({r[0] for r in b}) != len(b):
        dup = sorted({r[0] for r in b if sum(x[0] == r[0] for x in b) > 1})
        notes.append(f"reference repeats {','.join(dup)}")
    missing = sorted({r[0] for r in a} - {r[0] for r in b})
    if missing:
        notes.append(f"reference lacks {','.join(missing)}")
    ours_by = {r[0]: r for r in a}
    for r in b:
        mine = ours_by.get(r[0])
        if mine and mine != r:
            notes.append(f"{r[0]}: reference {r[1:]} vs computed {mine[1:]}")
    return notes


def test_c03_table_reproduction(acceptance):
    q = TypeAQuiver("><")
    t0 = time.perf_counter()
    rows = table_rows(q)
    text = render_table(rows)
    elapsed = time.perf_counter() - t0
    reference = (GOLDEN / "jhp_table_reference.txt").read_text()
    absences = sum(r.sequence == "absence" for r in rows)
    unequal = [r.w.split("=")[1] for r in rows if r.dagger != r.ddagger]
    diffs = _table_subchecks(text, reference)
    exact = text == reference
    detail = (f"byte-exact={exact}; rows={len(rows)}; absence rows={absences} (4 required); "
              f"dagger!=ddagger rows={unequal}; {elapsed:.3f} s; differences: {'; '.join(diffs) or 'none'}")
    ok = exact and len(rows) == 14 and absences == 4 and unequal == ["3412"] and elapsed < 1
    acceptance(3, "table reproduction", ok, detail)
    # sub-checks that hold
    assert len(rows) == 14
    assert unequal == ["3412"]
    assert elapsed < 1
    # the criterion itself: byte-exact against the reference table
    assert text == reference, detail


def test_c04_criterion_equivalence(acceptance):
    t0 = time.perf_counter()
    total, bad, bad_printed = 0, [], 0
    for q in _orientations(4):
        for w in enumerate_c_sortables(q):
            total += 1
            if main6_jhp(w, q).jhp != jhp_by_count(w):
                bad.append(f"{q}:{w}")
            if main6_jhp(w, q, printed=True).jhp != jhp_by_count(w):
                bad_printed += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    acceptance(4, "reflection-sequence verdict = count verdict", ok,
               f"{total} pairs, {len(bad)} mismatches; printed i=1 formula: {bad_printed} mismatches; {elapsed:.2f} s")
    assert not bad
    assert elapsed < 30


def test_c05_pattern_criterion(acceptance):
    t0 = time.perf_counter()
    total, bad, bad_printed = 0, [], 0
    for n in range(2, 5):
        q = bb_quiver(n)
        for w in all_permutations(n + 1):
            total += 1
            if is_c_sortable(w, q) is None:
                expect = BBVerdict.NOT_TORSION_FREE
            else:
                expect = BBVerdict.TORSION_FREE_JHP if jhp_by_count(w) else BBVerdict.TORSION_FREE_NOT_JHP
            if bb_criterion(w, q) != expect:
                bad.append(str(w))
            if bb_criterion(w, q, reading="printed") != expect:
                bad_printed += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    acceptance(5, "pattern criterion", ok,
               f"{total} permutations, corrected reading {len(bad)} mismatches; "
               f"printed reading {bad_printed} mismatches; {elapsed:.2f} s")
    assert not bad
    assert elapsed < 10


def test_c06_bijection_with_bruteforce(acceptance):
    t0 = time.perf_counter()
    bad, sizes = [], {}
    for q in _orientations(4):
        brute = set(enumerate_tf_classes_bruteforce(q))
        sortable = {tf_class_of(w, q).intervals for w in enumerate_c_sortables(q)}
        sizes.setdefault(q.n, set()).add(len(brute))
        if brute != sortable:
            bad.append(str(q))
    elapsed = time.perf_counter() - t0
    ok = not bad and sizes[3] == {14} and sizes[4] == {42} and elapsed < 120
    acceptance(6, "bijection with brute force", ok,
               f"class counts by n {dict(sorted((k, sorted(v)) for k, v in sizes.items()))}, "
               f"mismatching quivers {bad or 'none'}, {elapsed:.2f} s")
    assert not bad
    assert sizes[3] == {14} and sizes[4] == {42}
    assert elapsed < 120


def test_c07_semibrick_oracle(acceptance):
    t0 = time.perf_counter()
    count, bad = 0, []
    for q in _orientations(3):
        ivs = all_intervals(q.n)
        for r in range(1, len(ivs) + 1):
            for sub in itertools.combinations(ivs, r):
                g = GeneratorSet.of_intervals(q, sub)
                if not is_semibrick(g):
                    continue
                count += 1
                wj, j = check_wjhp(g, 8), check_jhp(g, 8)
                if not (wj.passed and j.passed) or wj.inconclusive or j.inconclusive:
                    bad.append(f"{q}:{g}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    acceptance(7, "semibricks satisfy WJHP and JHP", ok,
               f"{count} semibricks, {len(bad)} counterexamples, {elapsed:.2f} s")
    assert not bad
    assert elapsed < 300


def test_c08_worked_example(acceptance):
    t0 = time.perf_counter()
    q = TypeAQuiver("><")
    f = tf_class_of(Permutation.parse("4312"), q)
    p1, p2, p3, i2, s3 = Interval(1, 3), Interval(2, 3), Interval(2, 4), Interval(1, 4), Interval(3, 4)
    facts = {
        "class is add{P1,P2,P3,I2,S3}": f.intervals == {p1, p2, p3, i2, s3},
        "torsion-free": bool(torsion_free_verdict(f.intervals, q)),
        "sim T = {P1,P2,S3}": simples_in(f.intervals, q) == {p1, p2, s3},
        "Hom(P2,P1) != 0": interval_hom_dim(q, p2, p1) != 0,
        "sim T not a semibrick": not is_semibrick(GeneratorSet.of_intervals(q, [p1, p2, s3])),
        "JHP on T": check_jhp(GeneratorSet.of_intervals(q, [p1, p2, s3]), 8, within=f.intervals).passed,
    }
    elapsed = time.perf_counter() - t0
    ok = all(facts.values()) and elapsed < 10
    acceptance(8, "worked torsion-free example", ok,
               ", ".join(k for k, v in facts.items() if not v) or f"all facts hold, {elapsed:.2f} s")
    assert all(facts.values()), facts
    assert elapsed < 10


def test_c09_reflection_tables(acceptance):
    t0 = time.perf_counter()
    cases, bad_kernel, bad_round = 0, 0, 0
    for q in _orientations(5):
        for i in sorted(q.sinks()):
            for x in all_intervals(q.n):
                cases += 1
                r = reflect_plus_interval(q, i, x)
                if decompose(reflect_plus_rep(q, i, interval_to_rep(q, x))) != (IsoClass.of(r) if r else IsoClass()):
                    bad_kernel += 1
                if x != Interval(i, i + 1) and reflect_minus_interval(q.mutate(i), i, r) != x:
                    bad_round += 1
    elapsed = time.perf_counter() - t0
    ok = bad_kernel == 0 and bad_round == 0 and elapsed < 30
    acceptance(9, "reflection tables", ok,
               f"{cases} cases, kernel mismatches {bad_kernel}, round-trip failures {bad_round}, {elapsed:.2f} s")
    assert bad_kernel == 0 and bad_round == 0
    assert elapsed < 30


def test_c10_dagger_ddagger_identities(acceptance):
    t0 = time.perf_counter()
    cases, bad, bad_printed = 0, [], 0
    for q in _orientations(4):
        for w in enumerate_c_sortables(q):
            for i in sorted(q.sinks()):
                if i >= q.n:
                    continue
                u = compose(s(i, q.n + 1), w)
                if length(u) != length(w) - 1:
                    continue
                cases += 1
                d_supp = len(support(w)) - len(support(u))
                d_binv = len(bruhat_inversions(w)) - len(bruhat_inversions(u))
                if dagger(i, w) != d_supp or ddagger(i, w) != d_binv:
                    bad.append(f"{q}:{w}:{i}")
                if ddagger(i, w, printed=True) != d_binv:
                    bad_printed += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    acceptance(10, "dagger/ddagger step identities", ok,
               f"{cases} cases, {len(bad)} mismatches; printed i=1 formula: {bad_printed} mismatches; {elapsed:.2f} s")
    assert not bad
    assert elapsed < 60


def test_c11_semibrick_catalan(acceptance):
    t0 = time.perf_counter()
    counts = [len(enumerate_semibricks_linear(n)) for n in range(1, 6)]
    bad = 0
    for n in range(1, 5):
        mods = all_linear_modules(n)
        for r in range(len(mods) + 1):
            for sub in itertools.combinations(mods, r):
                bad += is_semibrick_linear(sub) != is_semibrick_linear_by_hom(sub, n)
    elapsed = time.perf_counter() - t0
    ok = counts == [2, 5, 14, 42, 132] == [catalan(n) for n in range(1, 6)] and bad == 0 and elapsed < 60
    acceptance(11, "semibrick Catalan count", ok, f"counts {counts}, {bad} disagreements, {elapsed:.2f} s")
    assert counts == [2, 5, 14, 42, 132]
    assert bad == 0
    assert elapsed < 60


def test_c12_hsets_and_shifted(acceptance):
    t0 = time.perf_counter()
    bad_h = 0
    for n in range(1, 6):
        q = lambda_quiver(n)
        for a in all_linear_modules(n):
            h = h_sets(a, n)
            for b in all_linear_modules(n):
                ia, ib = to_interval(a), to_interval(b)
                want = (interval_hom_dim(q, ia, ib) > 0, interval_hom_dim(q, ib, ia) > 0,
                        interval_ext_dim(q, ia, ib) > 0, interval_ext_dim(q, ib, ia) > 0)
                bad_h += tuple(b in x for x in h) != want
    bad_s, sets = 0, 0
    for n in range(1, 5):
        objs = [ShiftedInterval(i, j, k) for (i, j) in all_linear_modules(n) for k in range(-2, 3)]
        for r in range(1, 4):
            for sub in itertools.combinations(objs, r):
                sets += 1
                bad_s += is_semibrick_shifted(sub, n) != is_semibrick_shifted_by_hom(sub, n)
    examples = {name: is_semibrick_shifted(objs, 3) for name, objs in example_sets().items()}
    elapsed = time.perf_counter() - t0
    ok = bad_h == 0 and bad_s == 0 and all(examples.values()) and elapsed < 120
    acceptance(12, "H-sets and shifted semibricks", ok,
               f"H-set mismatches {bad_h}, shifted mismatches {bad_s}/{sets}, examples {examples}, {elapsed:.2f} s")
    assert bad_h == 0 and bad_s == 0
    assert all(examples.values())
    assert elapsed < 120
