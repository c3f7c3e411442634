"""Kraskiewicz-Hecke insertion and its inverse.

Row conventions.  ``R = (r_1, ..., r_l)`` is the row receiving a letter and
``S = (s_2, ..., s_k)`` the row below it, stored as a plain tuple whose first
entry is ``s_2``; ``s_t`` sits directly under ``r_t``.  Out-of-range indices
read as sentinels: ``r_0 = s_1 = -inf``, ``r_{l+1} = inf`` and ``s_t = inf``
for ``t > k``.  The pool ``A_d`` holds the real entries
``s_{d+1}, ..., s_k, r_1, ..., r_{d-1}``.

``q`` is the dip index of ``R`` and ``p`` the dip index of ``S`` in the same
indexing (``p = 0`` when ``S`` is empty).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .decomposition_tableaux import Rows, as_rows, is_sdt, validate_by_definition
from .shapes_tableaux import SetValuedTableau, SkewShape

INF = math.inf
NEG_INF = -math.inf

Row = tuple[int, ...]


class UndefinedInverseError(ValueError):
    """Raised when an inverse row step is asked for an input outside its domain."""


def _r(R: Sequence[int], t: int):
    if t <= 0:
        return NEG_INF
    if t > len(R):
        return INF
    return R[t - 1]


def _s(S: Sequence[int], t: int):
    if t <= 1:
        return NEG_INF
    if t - 2 >= len(S):
        return INF
    return S[t - 2]


def _pool(R: Sequence[int], S: Sequence[int], d: int) -> list[int]:
    k = len(S) + 1
    return [S[t - 2] for t in range(max(d + 1, 2), k + 1)] + list(R[: max(d - 1, 0)])


def _dip(R: Sequence[int]) -> int:
    """1-based index of the first minimum."""
    return min(range(len(R)), key=lambda t: (R[t], t)) + 1


def _bottom_dip(S: Sequence[int]) -> int:
    return 0 if not S else _dip(S) + 1


def _case_one(j: int, S: Sequence[int]) -> bool:
    """Whether ``(L2)`` and its inverse use case (I), i.e. ``j < p``.

    ``p = 0`` for an empty ``S``.  When ``j = 1`` the missing ``s_1`` acts as
    ``+inf`` inside case (I), mirroring the missing left neighbour in (R2).
    """
    return j < _bottom_dip(S)


# ---------------------------------------------------------------- forward steps


def right_insert(a: int, R: Sequence[int], S: Sequence[int] = ()):
    """Right insertion of ``a`` into ``R`` (with ``S`` below).

    Returns ``(a_out, R_mid, rule, i)``; ``a_out`` is ``inf`` when the pass
    through this row terminates.
    """
    R = list(R)
    if not R:
        return INF, (a,), "R1", 1
    q = _dip(R)
    ell = len(R)
    if a == R[q - 1]:
        i = q
    else:
        i = next(t for t in range(q + 1, ell + 2) if _r(R, t) >= a)
    ri = _r(R, i)
    if ri != a:
        if i == ell + 1:
            R.append(a)
        else:
            R[i - 1] = a
        return ri, tuple(R), "R1", i
    left = R[i - 2] if i >= 2 else INF
    if left > _r(R, i + 1):
        out = _r(R, i + 1)
        R[i] = R[i - 1]
        return out, tuple(R), "R2", i
    nxt = _r(R, i + 1)
    lo = _s(S, i)
    cands = [x for x in _pool(R, S, i) if lo < x < nxt]
    return min([nxt] + cands), tuple(R), "R3", i


def left_insert(a: int, R: Sequence[int], S: Sequence[int] = (), q: int | None = None):
    """Left insertion of the right-insertion output ``a`` into ``R``.

    ``q`` is the dip index of the row before right insertion (the row handed
    in may be a pseudo row after rule ``R2``).  Returns ``(b, R_out, rule, j)``.
    """
    R = list(R)
    if a == INF:
        return INF, tuple(R), None, None
    if q is None:
        q = _dip(R)
    j = next(t for t in range(1, q + 1) if R[t - 1] <= a)
    rj = R[j - 1]
    if rj != a:
        R[j - 1] = a
        return rj, tuple(R), "L1", j
    b, rule = _l2_output(R, S, j)
    return b, tuple(R), rule, j


def _l2_output(R: Sequence[int], S: Sequence[int], j: int):
    """Output of rule (L2) at position ``j``; the row itself is unchanged."""
    q = _dip(R)
    r1 = _r(R, j + 1)
    if _case_one(j, S):
        sj = INF if j == 1 else _s(S, j)
        pool = _pool(R, S, j)
        lo = r1 if j + 1 < q else NEG_INF
        cands = [x for x in pool if lo < x < sj]
        return (max(cands) if cands else r1), "L2(I)"
    rj, s1 = R[j - 1], _s(S, j + 1)
    cond_b = r1 > s1 or (_r(R, j + 2) > rj and _s(S, j + 2) > rj and rj > s1)
    if j + 1 >= q and cond_b:
        return s1, "L2(II)"
    return r1, "L2(II)"


# ---------------------------------------------------------------- inverse steps


def inverse_left(a: int, R: Sequence[int], S: Sequence[int] = (), check: bool = True):
    """Undo a left insertion that produced ``a``.  Returns ``(a_in, R_mid, rule, j)``."""
    R = list(R)
    if check:
        _guard_left(a, R, S)
    q = _dip(R)
    js = [t for t in range(1, q) if R[t - 1] > a]
    if not js:
        raise UndefinedInverseError(f"no entry left of the dip exceeds {a} in {tuple(R)}")
    j = max(js)
    rj = R[j - 1]
    r1 = _r(R, j + 1)
    if _case_one(j, S):
        if a == _l2_output(R, S, j)[0]:
            return rj, tuple(R), "L2(I)", j
    else:
        s1 = _s(S, j + 1)
        r2, s2 = _r(R, j + 2), _s(S, j + 2)
        if j + 1 >= q and ((a == s1 and s1 < r1) or (r2 > rj and s2 > rj and rj > s1 and s1 == a)):
            return rj, tuple(R), "L2(II)", j
        if a == r1:
            k = len(S) + 1
            late = any(s1 < _s(S, t) <= rj for t in range(j + 2, k + 1))
            if r2 <= rj or (s1 < rj and late):
                return rj, tuple(R), "L2(II)", j
    R[j - 1] = a
    return rj, tuple(R), "L1", j


def inverse_right(a: int, R: Sequence[int], S: Sequence[int] = ()):
    """Undo a right insertion whose output was ``a``.  Returns ``(b, R_out, rule, i)``."""
    R = list(R)
    q = _dip(R)
    ell = len(R)
    i = max(t for t in range(q, ell + 1) if R[t - 1] <= a)
    ri = R[i - 1]
    si = _s(S, i)
    if si < a:
        cands = [x for x in _pool(R, S, i) if si < x < _r(R, i + 1)]
        if cands and a == min(cands):
            return ri, tuple(R), "R3(I)", i
    if a == ri and ri >= _r(R, i - 2):
        cands = [x for x in _pool(R, S, i - 1) if _s(S, i - 1) < x < ri]
        if a == min([ri] + cands):
            return _r(R, i - 1), tuple(R), "R3(II)", i
    R[i - 1] = a
    return ri, tuple(R), "R1/R2", i


def inverse_right_last(R: Sequence[int]):
    """Undo an insertion that appended to or terminated at the end of ``R``."""
    return R[-1]


def _guard_left(a: int, R: Sequence[int], S: Sequence[int]) -> None:
    if a == INF:
        raise UndefinedInverseError("cannot left-invert infinity")
    b, S_mid, _, _ = right_insert(a, S, ())
    _, S_new, _, _ = left_insert(b, S_mid, (), _dip(S) if S else None)
    rows = [tuple(R), S_new] if S_new else [tuple(R)]
    ok, why = validate_by_definition(rows)
    if not ok:
        raise UndefinedInverseError(
            f"right inserting {a} into the row below gives a non-decomposition tableau ({why})"
        )


# ---------------------------------------------------------------- full insertion


@dataclass(frozen=True)
class RowEvent:
    row: int
    letter: int
    right_rule: str
    right_out: float
    mid: Row
    left_rule: str | None
    left_out: float
    result: Row
    right_column: int
    left_column: int | None

    def to_json(self) -> dict:
        def num(x):
            return None if x in (INF, NEG_INF) else int(x)

        return {
            "row": self.row,
            "letter": self.letter,
            "right_rule": self.right_rule,
            "right_out": num(self.right_out),
            "mid": list(self.mid),
            "left_rule": self.left_rule,
            "left_out": num(self.left_out),
            "result": list(self.result),
            "right_column": self.right_column,
            "left_column": self.left_column,
        }


@dataclass(frozen=True)
class BumpingTrace:
    events: tuple[RowEvent, ...] = field(default=())

    @property
    def right_positions(self) -> tuple[int, ...]:
        return tuple(e.right_column for e in self.events)

    @property
    def left_positions(self) -> tuple[int, ...]:
        return tuple(e.left_column for e in self.events if e.left_column is not None)

    @property
    def rules(self) -> tuple[str, ...]:
        out = []
        for e in self.events:
            out.append(e.right_rule)
            if e.left_rule:
                out.append(e.left_rule)
        return tuple(out)


@dataclass(frozen=True)
class InsertionResult:
    rows: Rows
    terminal_row: int
    new_cell: tuple[int, int] | None
    trace: BumpingTrace


def insert_letter(rows: Sequence[Sequence[int]], a: int) -> InsertionResult:
    rows = [tuple(r) for r in as_rows(rows)]
    events = []
    letter = a
    k = 0
    while True:
        k += 1
        if k > len(rows):
            rows.append((letter,))
            events.append(RowEvent(k, letter, "R1", INF, (letter,), None, INF, (letter,), k, None))
            return InsertionResult(tuple(rows), k, (k, k), BumpingTrace(tuple(events)))
        R = rows[k - 1]
        S = rows[k] if k < len(rows) else ()
        q = _dip(R)
        a_out, mid, rrule, _ = right_insert(letter, R, S)
        b, new, lrule, _ = left_insert(a_out, mid, S, q)
        rows[k - 1] = new
        first = k
        rcol = first - 1 + max(t for t in range(1, len(new) + 1) if new[t - 1] == letter)
        lcol = None
        if a_out != INF:
            lcol = first - 1 + min(t for t in range(1, len(new) + 1) if new[t - 1] == a_out)
        events.append(RowEvent(k, letter, rrule, a_out, mid, lrule, b, new, rcol, lcol))
        if a_out == INF:
            grew = len(new) > len(R)
            cell = (k, k + len(new) - 1) if grew else None
            return InsertionResult(tuple(rows), k, cell, BumpingTrace(tuple(events)))
        letter = b


def kh(word: Sequence[int]):
    """Insert ``word`` left to right.  Returns ``(P, Q, traces)``.

    ``P`` is a tuple of rows and ``Q`` a standard set-valued tableau of the
    same shifted shape.
    """
    rows: Rows = ()
    qcells: dict[tuple[int, int], list[int]] = {}
    traces = []
    for p, a in enumerate(word, start=1):
        res = insert_letter(rows, a)
        rows = res.rows
        if res.new_cell is not None:
            qcells[res.new_cell] = [p]
        else:
            lam = [len(r) for r in rows]
            k = res.terminal_row
            ell = max(t for t in range(1, len(lam) + 1) if lam[t - 1] + t == lam[k - 1] + k)
            qcells[(ell, lam[ell - 1] + ell - 1)].append(p)
        traces.append(res.trace)
    shape = SkewShape(tuple(len(r) for r in rows))
    Q = SetValuedTableau.from_mapping(shape, qcells)
    return rows, Q, traces


def inverse_kh(rows: Sequence[Sequence[int]], Q: SetValuedTableau) -> tuple[int, ...]:
    rows = [tuple(r) for r in as_rows(rows)]
    if tuple(len(r) for r in rows) != Q.shape.outer or Q.shape.inner:
        raise ValueError("P and Q have different shapes")
    if not Q.is_standard():
        raise ValueError("Q is not a standard set-valued tableau")
    cells = {c: list(e) for c, e in Q.mapping.items()}
    where = Q.cell_of()
    letters = []
    for n in range(Q.size, 0, -1):
        (r, c) = where[n]
        cells[(r, c)].remove(n)
        x = rows[r - 1][c - r]
        if not cells[(r, c)]:
            if c - r != len(rows[r - 1]) - 1:
                raise ValueError("removed box is not an outer corner")
            del cells[(r, c)]
            rows[r - 1] = rows[r - 1][:-1]
            if not rows[r - 1]:
                rows.pop()
        b = x
        for t in range(r - 1, 0, -1):
            S = rows[t] if t < len(rows) else ()
            a_mid, mid, _, _ = inverse_left(b, rows[t - 1], S, check=False)
            b, new, _, _ = inverse_right(a_mid, mid, S)
            rows[t - 1] = new
        letters.append(int(b))
    return tuple(reversed(letters))


def check_pair(rows, Q) -> bool:
    return is_sdt(rows) and Q.is_standard() and Q.shape.outer == tuple(len(r) for r in rows)
