import pytest

from typea_jhp.quiver import Interval, TypeAQuiver, decompose, interval_to_rep
from typea_jhp.reflect import (
    ReflectionPlan, alpha, beta, dagger, ddagger, gamma, main6_jhp, reflect_minus_interval,
    reflect_plus_interval, reflect_plus_rep, reflection_sequence, sink_plan_to_linear, sorting_word,
    table_rows,
)
from typea_jhp.symgroup import Permutation, bruhat_inversions, enumerate_c_sortables, support
from typea_jhp.torsion import jhp_by_count

P = Permutation.parse
I = Interval


def _all_plans(q, max_len):
    out = []

    def go(cur, vs):
        if cur.is_linear():
            out.append(tuple(vs))
        if len(vs) == max_len:
            return
        for j in sorted(cur.sinks()):
            if j < cur.n:
                go(cur.mutate(j), vs + [j])

    go(q, [])
    return out


def test_alpha_beta_gamma():
    assert alpha(P("1423")) == {4}
    assert alpha(P("3412")) == {3, 4}
    assert beta(P("2413"), 2) == frozenset()
    assert gamma(P("2413"), 2) == frozenset()


@pytest.mark.parametrize("i", [1, 3])
def test_beta_gamma_need_inner_vertex(i):
    with pytest.raises(ValueError):
        beta(P("2413"), i)
    with pytest.raises(ValueError):
        gamma(P("2413"), i)


def test_step_statistics_for_3412():
    assert (dagger(2, P("3412")), ddagger(2, P("3412"))) == (0, 1)
    assert (dagger(1, P("2413")), ddagger(1, P("2413"))) == (1, 1)


def test_step_preconditions():
    with pytest.raises(ValueError):
        dagger(1, P("1234"))  # s1 is not a left descent
    with pytest.raises(ValueError):
        ddagger(3, P("4321"))  # i must be < n


def test_printed_first_vertex_formula_differs_at_4231():
    w = P("4231")
    assert ddagger(1, w) == 1
    assert ddagger(1, w, printed=True) == 0
    # the corrected value matches the drop in Bruhat inversions
    u = P("4132")
    assert ddagger(1, w) == len(bruhat_inversions(w)) - len(bruhat_inversions(u))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_step_statistics_count_differences(n):
    for q in TypeAQuiver.all_orientations(n):
        for w in enumerate_c_sortables(q):
            for st in main6_jhp(w, q).steps:
                assert st.dagger == len(support(st.perm_before)) - len(support(st.perm_after))
                assert st.ddagger == (len(bruhat_inversions(st.perm_before))
                                      - len(bruhat_inversions(st.perm_after)))


def test_plan_validation():
    q = TypeAQuiver("><")
    assert sink_plan_to_linear(q).vertices == (2, 1)
    assert len(ReflectionPlan(q, (2, 1)).quivers) == 3
    with pytest.raises(ValueError):
        ReflectionPlan(q, (1,))  # 1 is a source
    with pytest.raises(ValueError):
        ReflectionPlan(q, (2,))  # does not reach 1 -> 2 -> 3 -> 4
    with pytest.raises(ValueError):
        ReflectionPlan(TypeAQuiver("<<"), (3,))


def test_reflection_sequence_of_3412():
    seq = reflection_sequence(P("3412"), sink_plan_to_linear(TypeAQuiver("><")))
    assert seq.indices == (1, 2)
    assert seq.vertices == (2, 1)
    assert [str(w) for w in seq.permutations] == ["3412", "2413", "1423"]
    assert reflection_sequence(P("1234"), sink_plan_to_linear(TypeAQuiver("><"))) is None


def test_main6_on_3412_and_4312():
    q = TypeAQuiver("><")
    r = main6_jhp(P("3412"), q)
    assert (r.dagger_total, r.ddagger_total, r.jhp) == (1, 2, False)
    assert str(r.final) == "1423"
    assert main6_jhp(P("4312"), q).jhp
    with pytest.raises(ValueError):
        main6_jhp(P("4231"), q)  # not sortable for this quiver


@pytest.mark.parametrize("dirs", ["<<", "><", "<>", "<><", "><>", "<<>"])
def test_totals_do_not_depend_on_the_plan(dirs):
    q = TypeAQuiver(dirs)
    plans = [ReflectionPlan(q, p) for p in _all_plans(q, 6)]
    for w in enumerate_c_sortables(q):
        totals = {(r.dagger_total, r.ddagger_total) for r in (main6_jhp(w, q, p) for p in plans)}
        assert len(totals) == 1
        assert main6_jhp(w, q).jhp == jhp_by_count(w)


def test_sorting_word_text():
    assert sorting_word(P("3412"), TypeAQuiver("><")) == "s2s1s3s2=3412"
    assert sorting_word(P("1234"), TypeAQuiver("><")) == "e=1234"


def test_table_shape():
    rows = table_rows(TypeAQuiver("><"))
    assert len(rows) == 14
    assert [r.w.split("=")[1] for r in rows if r.dagger != r.ddagger] == ["3412"]
    assert sum(r.sequence == "absence" for r in rows) == 2


def test_reflection_tables_match_kernels():
    q = TypeAQuiver("<>>")
    for i in sorted(q.sinks()):
        for n_x in [I(a, b) for a in range(1, 5) for b in range(a + 1, 6)]:
            got = reflect_plus_interval(q, i, n_x)
            rep = reflect_plus_rep(q, i, interval_to_rep(q, n_x))
            want = decompose(rep).summands
            assert want == ((got,) if got else ())


def test_reflect_round_trip():
    q = TypeAQuiver("><")
    for x in [I(1, 2), I(1, 3), I(2, 4), I(1, 4), I(3, 4)]:
        y = reflect_plus_interval(q, 2, x)
        if y is None:
            assert x == I(2, 3)
        else:
            assert reflect_minus_interval(q.mutate(2), 2, y) == x
    with pytest.raises(ValueError):
        reflect_plus_interval(q, 1, I(1, 2))
