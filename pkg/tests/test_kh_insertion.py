from itertools import product

import pytest
from hypothesis import given, strategies as st

from shifted_hecke.decomposition_tableaux import is_sdt, reading_word
from shifted_hecke.kh_insertion import (
    INF,
    UndefinedInverseError,
    insert_letter,
    inverse_kh,
    inverse_left,
    inverse_right,
    kh,
    left_insert,
    right_insert,
)
from shifted_hecke.shapes_tableaux import SetValuedTableau, SkewShape, enumerate_shset
from shifted_hecke.signed_permutations import demazure_product
from shifted_hecke.verify import check_word

U2 = ((2, 0), (1,))
U3 = ((2, 0, 2), (1,))
W_TAB = ((2, 1, 0), (1, 0))


# ---------------------------------------------------------------- forward row steps


def test_forward_1_append():
    a, R, rule, _ = right_insert(2, (3, 0), ())
    assert (a, R, rule) == (INF, (3, 0, 2), "R1")
    b, R2, lrule, _ = left_insert(a, R, ())
    assert b == INF and R2 == (3, 0, 2)


def test_forward_2_r1_then_l1():
    a, R, rule, _ = right_insert(1, (3, 0, 2), ())
    assert (a, R, rule) == (2, (3, 0, 1), "R1")
    b, R2, lrule, _ = left_insert(2, R, (), 2)
    assert (b, R2, lrule) == (0, (3, 2, 1), "L1")


def test_forward_3_r2_then_l1():
    a, R, rule, _ = right_insert(0, (2, 0, 1), ())
    assert (a, R, rule) == (1, (2, 0, 0), "R2")
    b, R2, lrule, _ = left_insert(1, R, (), 2)
    assert (b, R2, lrule) == (0, (2, 1, 0), "L1")
    res = insert_letter(((2, 0, 1),), 0)
    assert res.rows == ((2, 1, 0), (0,)) and res.new_cell == (2, 2)


def test_forward_4_r3_terminates():
    a, R, rule, _ = right_insert(1, (2, 0, 1), ())
    assert (a, R, rule) == (INF, (2, 0, 1), "R3")


def test_forward_5_r3_bumps():
    a, R, rule, _ = right_insert(1, (4, 2, 0, 1, 3), (2, 0, 1))
    assert (a, R, rule) == (2, (4, 2, 0, 1, 3), "R3")


@pytest.mark.parametrize(
    "a,R,S,b,rule",
    [
        (2, (4, 2, 0, 1, 3), (2, 0, 1), 1, "L2(I)"),
        (3, (4, 3, 1, 0, 1, 3), (3, 2), 2, "L2(I)"),
        (4, (5, 4, 2, 3), (0, 1), 1, "L2(II)"),
        (2, (4, 2, 1, 3), (0, 1, 3), 1, "L2(II)"),
        (2, (4, 2, 1, 0), (2, 3), 1, "L2(II)"),
    ],
    ids=["ex6", "ex7", "ex8", "ex9", "ex10"],
)
def test_forward_left_examples(a, R, S, b, rule):
    out, R2, got, _ = left_insert(a, R, S)
    assert (out, got) == (b, rule)
    assert R2 == R


def test_forward_bumping_path_example():
    P = ((8, 7, 6, 4, 3, 1, 0, 1, 3, 4, 7), (7, 6, 4, 2, 1, 0, 3, 4, 7), (6, 4, 1, 3), (5,))
    res = insert_letter(P, 0)
    assert res.rows == (
        (8, 7, 6, 4, 3, 1, 0, 1, 3, 4, 7),
        (7, 6, 4, 3, 1, 0, 3, 4, 7),
        (6, 4, 3, 2),
        (5, 1),
    )
    assert res.trace.rules == ("R3", "L2(I)", "R3", "L1", "R1", "L1", "R1")
    assert res.trace.right_positions == (7, 7, 6, 5)
    assert res.trace.left_positions == (6, 5, 5)
    assert is_sdt(res.rows)


def test_forward_u2_to_u3():
    assert insert_letter(U2, 2).rows == U3


def test_insert_into_empty():
    res = insert_letter((), 0)
    assert res.rows == ((0,),) and res.new_cell == (1, 1)


# ---------------------------------------------------------------- inverse row steps


def test_inverse_1_undefined():
    with pytest.raises(UndefinedInverseError):
        inverse_left(1, (4, 3, 1, 0, 1, 3), (3, 2))


@pytest.mark.parametrize(
    "a,R,S,a2,R2,rule",
    [
        (0, (3, 2, 1), (), 2, (3, 0, 1), "L1"),
        (2, (4, 3, 1, 0, 1, 3), (3, 2), 3, (4, 3, 1, 0, 1, 3), "L2(I)"),
        (0, (4, 1, 0, 1), (3, 0), 1, (4, 1, 0, 1), "L2(I)"),
        (1, (5, 4, 2, 3), (0, 1), 4, (5, 4, 2, 3), "L2(II)"),
        (1, (4, 2, 1, 3), (0, 1, 3), 2, (4, 2, 1, 3), "L2(II)"),
        (1, (4, 2, 1, 0), (2, 3), 2, (4, 2, 1, 0), "L2(II)"),
        (0, (3, 2, 0, 3), (0, 1), 2, (3, 0, 0, 3), "L1"),
    ],
    ids=["ex2", "ex3", "ex4", "ex5", "ex6", "ex7", "ex9"],
)
def test_inverse_left_examples(a, R, S, a2, R2, rule):
    out, row, got, _ = inverse_left(a, R, S)
    assert (out, row, got) == (a2, R2, rule)


def test_inverse_8_outside_domain():
    # right inserting 0 into the row (0, 1) breaks condition (c)
    with pytest.raises(UndefinedInverseError):
        inverse_left(0, (3, 0, 2, 3), (0, 1))
    out, row, rule, _ = inverse_left(0, (3, 0, 2, 3), (0, 1), check=False)
    assert out == 3 and rule == "L1" and row == (0, 0, 2, 3)


@pytest.mark.parametrize(
    "a,R,S,b,R2,rule",
    [
        (2, (3, 0, 0, 3), (0, 1), 0, (3, 0, 2, 3), "R1/R2"),
        (2, (4, 2, 0, 1, 3), (2, 0, 1), 1, (4, 2, 0, 1, 3), "R3(I)"),
        # printed as "b = r_{i-1} = 3"; r_{i-1} = r_4 = 1 and the figure shows 1
        (3, (4, 1, 0, 1, 3), (1, 0, 1), 1, (4, 1, 0, 1, 3), "R3(II)"),
    ],
    ids=["ex10", "ex11", "ex12"],
)
def test_inverse_right_examples(a, R, S, b, R2, rule):
    out, row, got, _ = inverse_right(a, R, S)
    assert (out, row, got) == (b, R2, rule)


# ---------------------------------------------------------------- full insertion


def test_kh_examples():
    P, Q, _ = kh((1, 2, 0))
    assert P == U2
    assert Q == SetValuedTableau.from_rows((2, 1), [[1, 2], [3]])
    assert kh((1, 0, 2, 0, 1, 0))[0] == W_TAB
    assert kh((1, 2, 0, 2, 1, 0))[0] == W_TAB
    P, Q, traces = kh(())
    assert P == () and Q.size == 0 and traces == []


def test_calibration_witness():
    P, Q, _ = kh((1, 2, 0, 0))
    assert is_sdt(P)
    assert demazure_product(reading_word(P)) == demazure_product((1, 2, 0))
    assert Q == SetValuedTableau.from_rows((2, 1), [[1, 2], [(3, 4)]])


def test_inverse_kh_examples():
    Q = SetValuedTableau.from_rows((2, 1), [[1, 2], [3]])
    assert inverse_kh(U2, Q) == (1, 2, 0)
    assert inverse_kh(((0,),), SetValuedTableau.from_rows((1,), [[1]])) == (0,)


def test_inverse_kh_rejects_mismatch():
    with pytest.raises(ValueError):
        inverse_kh(U2, SetValuedTableau.from_rows((2,), [[1, 2]]))


@pytest.mark.parametrize("letters,maxlen", [(3, 5), (4, 4)])
def test_exhaustive_roundtrip(letters, maxlen):
    for n in range(1, maxlen + 1):
        for word in product(range(letters), repeat=n):
            bad, lemmas = check_word(word)
            assert not bad and not lemmas, (word, bad, lemmas)


@given(st.lists(st.integers(0, 5), max_size=12))
def test_random_roundtrip(word):
    bad, lemmas = check_word(word)
    assert not bad and not lemmas


@given(st.lists(st.integers(0, 4), max_size=10))
def test_every_prefix_is_sdt_and_hecke_equivalent(word):
    rows = ()
    for p, a in enumerate(word, start=1):
        rows = insert_letter(rows, a).rows
        assert is_sdt(rows)
        assert demazure_product(reading_word(rows), 6) == demazure_product(word[:p], 6)


def test_kh_after_inverse_on_pairs():
    # every (P, Q) reached from a word comes back to itself
    seen = {}
    for n in range(1, 6):
        for word in product(range(3), repeat=n):
            P, Q, _ = kh(word)
            seen[(P, Q)] = word
    for (P, Q), word in seen.items():
        back = inverse_kh(P, Q)
        assert kh(back)[:2] == (P, Q)


def test_bijection_counts_for_one_shape():
    # words of length 4 on {0,1,2} whose P has shape (3,1) pair off with ShSet_4((3,1))
    tableaux = {}
    for word in product(range(3), repeat=4):
        P, Q, _ = kh(word)
        if tuple(len(r) for r in P) == (3, 1):
            tableaux.setdefault(P, set()).add(Q)
    for P, qs in tableaux.items():
        assert qs <= set(enumerate_shset((3, 1), 4))


def test_trace_json():
    _, _, traces = kh((1, 2, 0))
    events = [e.to_json() for t in traces for e in t.events]
    assert events[0]["right_out"] is None
    assert all(isinstance(e["rule"] if "rule" in e else e["right_rule"], str) for e in events)
