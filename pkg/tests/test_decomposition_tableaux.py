from itertools import product

import pytest
from hypothesis import given, strategies as st

from shifted_hecke.decomposition_tableaux import (
    a_coeff,
    bottom_view,
    dip_index,
    enumerate_sdt,
    is_reduced_decomposition_tableau,
    is_sdt,
    is_unimodal,
    longest_unimodal_subsequence,
    reading_word,
    render_rows,
    rows_are_maximal_unimodal,
    sdts_for,
    top_view,
    validate_by_configurations,
    validate_by_definition,
)
from shifted_hecke.kh_insertion import kh
from shifted_hecke.shapes_tableaux import strict_partitions, strict_subpartitions
from shifted_hecke.signed_permutations import (
    SignedPermutation,
    all_signed_permutations,
    coxeter_length,
    demazure_product,
    hecke_words,
)

U1 = ((1, 0, 2),)
U2 = ((2, 0), (1,))
U3 = ((2, 0, 2), (1,))
V = ((2, 0, 1), (1,))
W_TAB = ((2, 1, 0), (1, 0))
u = demazure_product((1, 0, 2))


def fillings(shape, top):
    cells = [(i, t) for i, n in enumerate(shape) for t in range(n)]
    for values in product(range(top + 1), repeat=len(cells)):
        rows = [[] for _ in shape]
        for (i, _), v in zip(cells, values):
            rows[i].append(v)
        yield tuple(tuple(r) for r in rows)


def test_unimodal_rows():
    assert is_unimodal((3, 1, 0, 2))
    assert is_unimodal((0,)) and is_unimodal((2, 0))
    assert not is_unimodal((0, 2, 1))
    assert not is_unimodal((1, 1))
    assert is_unimodal((2, 0, 0), weak=True)
    assert dip_index((3, 1, 0, 2)) == 2
    assert top_view((3, 1, 0, 2)) == [-3, -1, 0, 2]
    assert bottom_view((3, 1, 0, 2)) == [-3, -1, 0, 2] and bottom_view((3, 1, 2)) == [-3, -1, 2]


def test_definition_examples():
    assert is_sdt(U3)
    ok, why = validate_by_definition(((2, 0, 2), (3,)))
    assert not ok and why.condition == "b"
    ok, why = validate_by_definition(((4, 3, 1, 0, 1, 3), (3, 2, 1)))
    assert not ok and why.condition == "c" and why.witness is not None


def test_configuration_examples():
    assert validate_by_configurations(U2)
    assert not validate_by_configurations(((1, 0), (1,)))


@pytest.mark.parametrize("outer", [(3, 1)])
def test_validators_agree_small(outer):
    for lam in strict_subpartitions(outer):
        if not lam:
            continue
        for rows in fillings(lam, 3):
            assert validate_by_configurations(rows) == validate_by_definition(rows)[0], rows


def test_literal_configuration_reading_has_a_gap():
    # the witness 1 sits under the dip; the literal (iii) requires v < z there
    rows = ((3, 1, 2), (0, 1))
    assert not is_sdt(rows)
    assert not validate_by_configurations(rows)
    assert validate_by_configurations(rows, literal=True)


def test_reading_words():
    assert reading_word(U2) == (1, 2, 0)
    assert reading_word(U3) == (1, 2, 0, 2)
    assert reading_word(U1) == (1, 0, 2)


def test_enumerate_examples():
    assert enumerate_sdt((1,), 2) == [((0,),), ((1,),), ((2,),)]
    assert U2 in enumerate_sdt((2, 1), 2)
    brute = sorted(r for r in fillings((3, 1), 2) if is_sdt(r))
    assert enumerate_sdt((3, 1), 2) == brute


@pytest.mark.parametrize("shape", [(2,), (2, 1), (3, 1), (3, 2), (4, 1)])
def test_enumerate_brute_force(shape):
    brute = sorted(r for r in fillings(shape, 3) if is_sdt(r))
    assert enumerate_sdt(shape, 3) == brute


def test_a_coeff_examples():
    assert a_coeff(u, (3,)) == 1 and sdts_for(u, (3,)) == [U1]
    assert a_coeff(u, (2, 1)) == 1 and sdts_for(u, (2, 1)) == [U2]
    assert a_coeff(u, (3, 1)) == 1 and sdts_for(u, (3, 1)) == [U3]
    assert a_coeff(SignedPermutation.identity(2), ()) == 1
    assert a_coeff(demazure_product((1, 0, 2, 1)), (3, 1)) == 1
    assert sdts_for(demazure_product((1, 0, 2, 1, 0)), (3, 2)) == [W_TAB]
    assert sdts_for(demazure_product((1, 0, 2, 1)), (3, 1)) == [V]
    assert u == SignedPermutation((-2, 3, 1))


@pytest.mark.parametrize("w", all_signed_permutations(3))
def test_a_coeff_matches_filter(w):
    for d in range(coxeter_length(w), coxeter_length(w) + 2):
        for lam in strict_partitions(d):
            brute = [t for t in enumerate_sdt(lam, 2) if demazure_product(reading_word(t), 3) == w]
            assert sdts_for(w, lam) == brute


@pytest.mark.parametrize("w", all_signed_permutations(3))
def test_a_coeff_reduced_matches_insertion(w):
    ell = coxeter_length(w)
    tabs = {kh(word)[0] for word in hecke_words(w, ell)}
    by_shape = {}
    for t in tabs:
        by_shape.setdefault(tuple(len(r) for r in t), set()).add(t)
    for lam in strict_partitions(ell):
        assert a_coeff(w, lam) == len(by_shape.get(lam, ()))


def test_reduced_decomposition_tableaux():
    assert is_reduced_decomposition_tableau(U1)
    assert is_reduced_decomposition_tableau(U2)
    assert not is_reduced_decomposition_tableau(U3)
    assert is_reduced_decomposition_tableau(((0,),))


def test_reduced_implies_sdt():
    for lam in [(2, 1), (3, 1), (3, 2)]:
        for rows in fillings(lam, 3):
            if is_reduced_decomposition_tableau(rows):
                assert is_sdt(rows)


def test_rows_maximal_unimodal_on_sdts():
    for lam in [(3, 1), (3, 2), (4, 2), (3, 2, 1)]:
        for t in enumerate_sdt(lam, 4):
            assert rows_are_maximal_unimodal(t)


@given(st.lists(st.integers(0, 5), max_size=9))
def test_longest_unimodal_brute(seq):
    from itertools import combinations

    best = 0
    for k in range(len(seq), 0, -1):
        if any(is_unimodal([seq[i] for i in idx]) for idx in combinations(range(len(seq)), k)):
            best = k
            break
    assert longest_unimodal_subsequence(seq) == best


def test_render():
    assert render_rows(U2) == "2 0\n  1"


@pytest.mark.slow
def test_large_example_coefficient():
    w = SignedPermutation((-5, -2, -1, 3, 4, 8, 9, 10, 6, 7))
    found = sdts_for(w, (10, 3, 2))
    assert found == sorted(
        [
            ((9, 6, 4, 3, 2, 1, 0, 6, 7, 8), (8, 1, 0), (0, 7)),
            ((9, 6, 4, 3, 2, 1, 0, 6, 7, 8), (8, 1, 0), (7, 0)),
        ]
    )
