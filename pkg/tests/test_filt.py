import json

import pytest

from typea_jhp.filt import (
    GeneratorSet, check_jhp, check_wjhp, filtrations, is_semibrick, monos_from, simples_in, x_length,
)
from typea_jhp.quiver import BoundError, Interval, IsoClass, TypeAQuiver

I = Interval
Q = TypeAQuiver("<<")


def test_generator_set_normalises():
    g = GeneratorSet.of_intervals(Q, [I(2, 3), I(1, 2)])
    assert g.members == (IsoClass.of(I(1, 2)), IsoClass.of(I(2, 3)))
    with pytest.raises(ValueError):
        GeneratorSet.of_intervals(Q, [I(1, 2), I(1, 2)])
    with pytest.raises(ValueError):
        GeneratorSet(Q, (IsoClass(()),))


def test_filtrations_of_projective():
    g = GeneratorSet.of_intervals(Q, [I(1, 3), I(2, 3), I(1, 2)])
    recs = filtrations(I(1, 3), g)
    assert sorted(str(r) for r in recs) == ["([1,2), [2,3))", "([1,3))"]
    assert x_length(I(1, 3), g) == 1
    with pytest.raises(BoundError):
        filtrations(I(1, 3), g, cap=1)


def test_not_in_filt():
    g = GeneratorSet.of_intervals(Q, [I(1, 2)])
    assert filtrations(I(2, 3), g) == frozenset()
    assert x_length(I(2, 3), g) is None


def test_monos_from_simple():
    m = IsoClass.of(I(1, 3))
    assert monos_from(Q, IsoClass.of(I(1, 2)), m) == {IsoClass.of(I(2, 3))}
    assert monos_from(Q, IsoClass.of(I(2, 3)), m) == frozenset()


def test_semibrick_passes_both():
    g = GeneratorSet.of_intervals(Q, [I(1, 2), I(2, 3)])
    assert is_semibrick(g)
    assert check_wjhp(g, 4).passed and check_jhp(g, 4).passed


def test_wjhp_without_jhp():
    g = GeneratorSet.of_intervals(Q, [I(1, 3), I(2, 3), I(1, 2)])
    assert not is_semibrick(g)
    assert check_wjhp(g, 4).passed
    rep = check_jhp(g, 4)
    assert rep.verdict == "fail"
    assert rep.counterexamples[0]["module"] == "[1,3)"


def test_wjhp_failure_report():
    g = GeneratorSet.of_intervals(Q, [I(1, 2), I(1, 3), I(2, 4), I(3, 4)])
    rep = check_wjhp(g, 5)
    assert not rep.passed
    payload = json.loads(rep.to_json())
    assert payload["verdict"] == "fail"
    assert {"module": "[1,4)", "seq_a": ["[1,2)", "[2,4)"], "seq_b": ["[1,3)", "[3,4)"]} in payload["counterexamples"]


def test_simples_of_torsion_free_class():
    members = [I(1, 3), I(1, 4), I(2, 3), I(2, 4), I(3, 4)]
    assert simples_in(members, TypeAQuiver("><")) == {I(1, 3), I(2, 3), I(3, 4)}
