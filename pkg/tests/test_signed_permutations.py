from itertools import product

import pytest
from hypothesis import given, strategies as st

from shifted_hecke.signed_permutations import (
    SignedPermutation,
    all_signed_permutations,
    canonical_reduced_word,
    classify,
    coxeter_length,
    demazure_product,
    hecke_words,
    is_reduced,
    make_grassmannian,
    make_wabk,
    product_split,
    top_element,
    trapezoid_shape,
    word_peak_set,
)
from shifted_hecke.shapes_tableaux import SkewShape

W = SignedPermutation


def brute_hecke(w, p, letters):
    n = max(letters) + 1
    return sorted(a for a in product(letters, repeat=p) if demazure_product(a, n) == w)


def test_demazure_examples():
    assert demazure_product((1, 0, 2), 3) == W((-2, 3, 1))
    assert demazure_product((), 2) == W.identity(2)
    assert demazure_product((1, 0, 2, 0), 3) == W((-2, 3, 1))


def test_demazure_rejects_large_letter():
    with pytest.raises(ValueError):
        demazure_product((3,), 3)


def test_demazure_idempotent_generator():
    assert demazure_product((0, 0)) == demazure_product((0,)) == W((-1,))


def test_stable_equality():
    assert W((-2, 3, 1)) == W((-2, 3, 1, 4, 5))
    assert hash(W((1, 2))) == hash(W(()))


def test_length_examples():
    assert coxeter_length(W((-2, 3, 1))) == 3
    assert coxeter_length(W.identity(4)) == 0
    assert coxeter_length(W((-1, 2))) == 1


def test_hecke_examples():
    w = W((-2, 3, 1))
    assert hecke_words(w, 3) == [(1, 0, 2), (1, 2, 0)]
    assert hecke_words(W.identity(3), 0) == [()]
    assert hecke_words(w, 2) == []


def test_h4_of_reference_element_has_eight_words():
    w = W((-2, 3, 1))
    words = hecke_words(w, 4)
    assert words == brute_hecke(w, 4, range(3))
    assert len(words) == 8
    # the word missing from the printed list of seven
    assert (1, 1, 2, 0) in words


@pytest.mark.parametrize("w", all_signed_permutations(3))
def test_hecke_words_match_brute_force(w):
    for p in range(0, 6):
        assert hecke_words(w, p) == brute_hecke(w, p, range(3))


@given(st.lists(st.integers(0, 3), max_size=8))
def test_length_bounded_by_word(word):
    w = demazure_product(word, 4)
    assert coxeter_length(w) <= len(word)
    assert (coxeter_length(w) == len(word)) == is_reduced(word)


@given(st.sampled_from(all_signed_permutations(3)))
def test_canonical_word_is_reduced(w):
    word = canonical_reduced_word(w)
    assert len(word) == coxeter_length(w)
    assert demazure_product(word, 3) == w


def test_support_assertion():
    for w in all_signed_permutations(3):
        letters = {a for p in range(coxeter_length(w), coxeter_length(w) + 3) for x in hecke_words(w, p) for a in x}
        assert letters == set(w.support())


def test_classify_examples():
    c = classify(W((-4, -1, 2, 3)))
    assert c.grassmannian and c.shape == (4, 1)
    c = classify(W.identity(3))
    assert c.grassmannian and c.shape == ()
    c = classify(W((3, 2, 1)))
    assert not c.vexillary and not c.top_fully_commutative


def test_classify_stable():
    for w in all_signed_permutations(3):
        assert classify(w) == classify(W(w.padded(4)))


def test_make_grassmannian():
    assert make_grassmannian((4, 1), 4) == W((-4, -1, 2, 3))
    assert make_grassmannian((), 3) == W.identity(3)
    assert make_grassmannian((2, 1), 3) == W((-2, -1, 3))
    with pytest.raises(ValueError):
        make_grassmannian((4,), 3)


def test_wabk_and_trapezoid():
    assert make_wabk(1, 2, 1) == W((1, 3, 4, 2))
    assert trapezoid_shape(1, 5) == (5,)
    assert trapezoid_shape(2, 2) == (3, 1)
    with pytest.raises(ValueError):
        trapezoid_shape(3, 2)


def test_top_element_examples():
    w, word = top_element(SkewShape((6, 5, 4, 2, 1), (4, 1)))
    assert word == (4, 5, 1, 2, 3, 4, 0, 1, 2, 3, 0, 1, 0)
    assert coxeter_length(w) == len(word)
    w, word = top_element((1,))
    assert word == (0,) and w == W((-1,))
    assert top_element((2, 1))[0] == make_grassmannian((2, 1), 2)


def _has_forbidden_factor(word):
    s = tuple(word)
    for t in range(len(s) - 2):
        a, b, c = s[t:t + 3]
        if a == c and abs(a - b) == 1 and min(a, b) >= 1:
            return True
        if (a, b, c) == (1, 0, 1):
            return True
    for t in range(len(s) - 3):
        if s[t:t + 4] in ((0, 1, 0, 1), (1, 0, 1, 0)):
            return True
    return False


@pytest.mark.parametrize("shape", [SkewShape((3, 1)), SkewShape((4, 2), (1,)), SkewShape((3, 2, 1), (2,))])
def test_top_element_is_fully_commutative(shape):
    w, _ = top_element(shape)
    assert classify(w).top_fully_commutative
    for word in hecke_words(w, coxeter_length(w)):
        assert not _has_forbidden_factor(word)


def test_word_peaks():
    assert word_peak_set((1, 0, 2)) == set()
    assert word_peak_set((0, 2, 1)) == {2}
    assert word_peak_set((1, 2, 0, 2, 1, 0)) == {2, 4}


def test_product_split():
    u, v = make_grassmannian((2, 1), 2), make_wabk(1, 1, 2)
    uv = product_split(u, v, 2)
    assert coxeter_length(uv) == coxeter_length(u) + coxeter_length(v)
    assert product_split(W.identity(2), v, 2) == v
    assert product_split(u, W.identity(4), 2) == u
    with pytest.raises(ValueError):
        product_split(u, W((2, 1)), 2)


@given(st.sampled_from(all_signed_permutations(3)), st.sampled_from(all_signed_permutations(3)))
def test_group_laws(u, v):
    e = W.identity(3)
    assert u * u.inverse() == e
    assert (u * v).inverse() == v.inverse() * u.inverse()


def test_json_roundtrip():
    w = W((-2, 3, 1))
    assert W(tuple(w.to_json())) == w
    assert W.parse("-2,3,1") == w


def _fully_commutative_top_by_words(w):
    return not any(_has_forbidden_factor(x) for x in hecke_words(w, coxeter_length(w)))


@pytest.mark.parametrize("n", [3, 4])
def test_top_patterns_match_reduced_words(n):
    for w in all_signed_permutations(n):
        assert classify(w).top_fully_commutative == _fully_commutative_top_by_words(w), w
