import pytest

from shifted_hecke.residue_map import (
    UnimodalFactorization,
    res_inverse,
    res_semistandard,
    res_standard,
)
from shifted_hecke.shapes_tableaux import (
    SetValuedTableau,
    SkewShape,
    enumerate_shset,
    enumerate_shssyt,
    standardize,
    strict_subpartitions,
)
from shifted_hecke.signed_permutations import coxeter_length, demazure_product, hecke_words, top_element

SKEW = SkewShape((5, 3, 1), (2,))
T_SKEW = SetValuedTableau.from_mapping(
    SKEW, {(1, 3): (2,), (1, 4): (3,), (1, 5): (6,), (2, 2): (1,), (2, 3): (4,), (2, 4): (7,), (3, 3): (5,)}
)
T_SEMI = SetValuedTableau.from_rows(
    SkewShape((6, 4, 3, 2)),
    [[1, 1, 1, -2, -3, -5], [2, 2, -3, (-4, 3)], [4, 4, 4], [5, 5]],
)


def test_standard_example():
    assert res_standard(T_SKEW) == (0, 2, 3, 1, 0, 4, 2)
    w, _ = top_element(SKEW)
    assert demazure_product((0, 2, 3, 1, 0, 4, 2)) == w
    assert res_inverse((0, 2, 3, 1, 0, 4, 2), SKEW) == T_SKEW


def test_semistandard_example():
    f = res_semistandard(T_SEMI)
    assert f.render() == "(|012)(3|01)(42|3)(3|012)(5|01)"
    counts = [sum(abs(v) == k for e in T_SEMI.entries for v in e) for k in range(1, 6)]
    assert list(f.weight()) == counts
    assert res_standard(standardize(T_SEMI)) == f.word


def test_empty():
    empty = SetValuedTableau.from_rows((), [])
    assert res_standard(empty) == ()
    assert res_semistandard(empty).word == ()


def test_standard_as_factorization():
    t = enumerate_shset((3, 1), 4)[0]
    f = res_semistandard(t)
    assert f.indices == (1, 2, 3, 4)
    assert f.word == res_standard(t)


def test_syt_gives_reduced_word():
    for lam in [(3, 1), (4, 2, 1), (3, 2)]:
        w, _ = top_element(lam)
        for t in enumerate_shset(lam, sum(lam)):
            word = res_standard(t)
            assert demazure_product(word) == w and coxeter_length(w) == len(word)


def test_canonical_word_gives_row_reading():
    w, word = top_element(SKEW)
    t = res_inverse(word, SKEW)
    cells = SKEW.cells()
    assert all(t[c] == (k,) for k, c in enumerate(cells, start=1))


@pytest.mark.parametrize("lam", [l for l in strict_subpartitions((4, 2, 1)) if l])
def test_bijection_onto_hecke_words(lam):
    w, _ = top_element(lam)
    for n in range(sum(lam), 7):
        tabs = enumerate_shset(lam, n)
        images = [res_standard(t) for t in tabs]
        assert len(set(images)) == len(images)
        assert sorted(images) == hecke_words(w, n)
        for t, word in zip(tabs, images):
            assert res_inverse(word, lam) == t


def test_res_inverse_rejects_foreign_word():
    with pytest.raises(ValueError):
        res_inverse((1, 0, 1), (2, 1))


def test_semistandard_weight_and_standardization():
    for shape in [(2, 1), SkewShape((3, 1), (1,))]:
        for t in enumerate_shssyt(shape, 2, 4):
            f = res_semistandard(t)
            letters = sorted(abs(v) for e in t.entries for v in e)
            assert sorted(abs(i) for i in f.indices) == letters
            assert res_standard(standardize(t)) == f.word


def test_factorization_validation():
    with pytest.raises(ValueError):
        UnimodalFactorization((0, 1), (-1, -1))
    with pytest.raises(ValueError):
        UnimodalFactorization((1, 0), (1, 1))
    with pytest.raises(ValueError):
        UnimodalFactorization((0,), (0,))
    f = UnimodalFactorization((1, 0, 2), (-1, -1, 1))
    assert f.render() == "(10|2)"
    assert f.render(keep_empty=True) == "(10|2)"
    assert UnimodalFactorization((0,), (2,)).render(keep_empty=True) == "()(|0)"
