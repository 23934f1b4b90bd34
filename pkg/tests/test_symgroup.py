import pytest

from typea_jhp.quiver import TypeAQuiver
from typea_jhp.symgroup import (
    Permutation, Transposition, all_permutations, bruhat_inversions, compose, coxeter_word,
    enumerate_c_sortables, from_word, identity, inverse, inversions, is_c_sortable, length,
    reduced_word, s, support, support_from_word,
)

P = Permutation.parse
T = Transposition


def test_parse_and_str_round_trip():
    assert str(P("534216")) == "534216"
    assert P("312")(1) == 3


@pytest.mark.parametrize("bad", ["", "1224", "0123", "13", "12a"])
def test_parse_rejects_non_permutations(bad):
    with pytest.raises(ValueError):
        P(bad)


def test_transposition_is_normalised():
    with pytest.raises(ValueError):
        T(2, 2)
    assert T(3, 1) == T(1, 3)
    assert str(T(3, 1)) == "(1 3)"


def test_left_action_swaps_letters():
    # s_2 s_1 in one-line notation with composition u(v(k))
    assert str(compose(s(2, 3), s(1, 3))) == "312"
    assert str(compose(s(1, 3), s(2, 3))) == "231"


def test_from_word_matches_products():
    assert from_word((2, 1, 3, 2), 4) == P("3412")
    assert reduced_word(P("3412")) == (2, 1, 3, 2)
    assert from_word(reduced_word(P("534216")), 6) == P("534216")


def test_inverse_and_identity():
    w = P("534216")
    assert compose(w, inverse(w)) == identity(6)


def test_inversions_of_534216():
    w = P("534216")
    assert length(w) == 9
    assert inversions(w) == {T(1, 2), T(1, 3), T(1, 4), T(1, 5), T(2, 3), T(2, 4), T(2, 5), T(3, 5), T(4, 5)}
    assert bruhat_inversions(w) == {T(1, 2), T(2, 3), T(2, 4), T(3, 5), T(4, 5)}


def test_support():
    assert support(P("2134")) == {1}
    assert support(P("1234")) == frozenset()
    assert support(P("4123")) == {1, 2, 3}
    for w in all_permutations(4):
        assert support(w) == support_from_word(w)


def test_coxeter_words():
    assert coxeter_word(TypeAQuiver("<")) == (1, 2)
    assert coxeter_word(TypeAQuiver(">")) == (2, 1)
    assert coxeter_word(TypeAQuiver("><")) == (2, 1, 3)


def test_sortability_on_two_vertices():
    # with c = s1 s2 (quiver 1 <- 2), s1 s2 = 231 is sortable, s2 s1 = 312 is not
    q = TypeAQuiver("<")
    assert is_c_sortable(P("231"), q) is not None
    assert is_c_sortable(P("312"), q) is None


def test_3412_certificate():
    cert = is_c_sortable(P("3412"), TypeAQuiver("><"))
    assert cert.factors == ((2, 1, 3), (2,))


def test_catalan_many_sortables():
    for n, want in [(1, 2), (2, 5), (3, 14), (4, 42)]:
        for q in TypeAQuiver.all_orientations(n):
            assert len(enumerate_c_sortables(q)) == want
