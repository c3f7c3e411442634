"""Strict decomposition tableaux: validation, reading words, enumeration.

A tableau is a tuple of rows; row ``i`` (1-based) starts in diagram column
``i``.  Rows must be strictly unimodal: strictly decreasing down to the dip
(the minimum), then strictly increasing.  The dip belongs to the increasing
part, so that part is never empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .signed_permutations import (
    SignedPermutation,
    coxeter_length,
    demazure_product,
    lower_interval,
)

Rows = tuple[tuple[int, ...], ...]


def as_rows(rows: Sequence[Sequence[int]]) -> Rows:
    return tuple(tuple(int(v) for v in r) for r in rows if len(r) > 0)


def is_unimodal(row: Sequence[int], weak: bool = False) -> bool:
    if not row:
        return False
    q = dip_index(row)
    if weak:
        return all(row[t] >= row[t + 1] for t in range(q)) and all(
            row[t] <= row[t + 1] for t in range(q, len(row) - 1)
        )
    return all(row[t] > row[t + 1] for t in range(q)) and all(
        row[t] < row[t + 1] for t in range(q, len(row) - 1)
    )


def dip_index(row: Sequence[int]) -> int:
    """0-based position of the (first) minimum."""
    return min(range(len(row)), key=lambda t: (row[t], t))


def top_view(row: Sequence[int]) -> list[int]:
    """``T(R)``: entries left of the dip negated."""
    q = dip_index(row)
    return [-v for v in row[:q]] + list(row[q:])


def bottom_view(row: Sequence[int]) -> list[int]:
    """``B(R)``: entries up to and including the dip negated."""
    q = dip_index(row)
    return [-v for v in row[: q + 1]] + list(row[q + 1:])


def shape_of(rows: Rows) -> tuple[int, ...]:
    return tuple(len(r) for r in rows)


def reading_word(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Bottom row first, each row left to right."""
    return tuple(v for r in reversed(list(rows)) for v in r)


@dataclass(frozen=True)
class Violation:
    condition: str
    rows: tuple[int, ...]
    column: int | None = None
    witness: int | None = None

    def __str__(self):
        s = f"condition ({self.condition}) fails at rows {self.rows}"
        if self.column is not None:
            s += f", column {self.column}"
        if self.witness is not None:
            s += f", witness {self.witness}"
        return s


def _pair_violation(top: Sequence[int], bot: Sequence[int], i: int) -> Violation | None:
    """Conditions (b) and (c) for row ``i`` over row ``i+1``."""
    if bot[0] >= top[0] or bot[-1] >= top[0]:
        return Violation("b", (i, i + 1))
    a = top_view(top)
    b = bottom_view(bot)
    # row i covers columns i .. i+len-1, row i+1 covers i+1 .. i+len(bot)
    for t in range(len(bot)):
        col = i + 1 + t
        aj = a[t + 1]
        bj = b[t]
        pool = [x for v in a[: t + 1] for x in (v, -v)]
        pool += [x for v in b[t + 1:] for x in (v, -v)]
        for x in pool:
            if bj < x <= aj:
                return Violation("c", (i, i + 1), col, x)
    return None


def validate_by_definition(rows, weak: bool = False) -> tuple[bool, Violation | None]:
    rows = as_rows(rows)
    lens = shape_of(rows)
    if any(lens[k] <= lens[k + 1] for k in range(len(lens) - 1)):
        return False, Violation("shape", tuple(range(1, len(rows) + 1)))
    for k, r in enumerate(rows, start=1):
        if not is_unimodal(r, weak):
            return False, Violation("a", (k,))
    for k in range(len(rows) - 1):
        v = _pair_violation(rows[k], rows[k + 1], k + 1)
        if v is not None:
            return False, v
    return True, None


def is_sdt(rows) -> bool:
    return validate_by_definition(rows)[0]


def _pair_has_configuration(top: Sequence[int], bot: Sequence[int], literal: bool = False) -> str | None:
    # bot[t] sits below top[t + 1]
    q = dip_index(top)
    if any(b >= top[0] for b in bot):
        return "i"
    for t, c in enumerate(bot):
        a = top[t + 1]
        if any(a <= b < c for b in bot[t + 1:]):
            return "ii"
    for t, x in enumerate(bot):
        z, v = top[t + 1], top[t]
        rising = v < z or (not literal and t + 1 == q)
        if rising and any(x < y <= z for y in bot[t + 1:]):
            return "iii"
    for t, x in enumerate(bot):
        z = top[t + 1]
        if any(x < y <= z for y in top[: t + 1]):
            return "iv/v"
    return None


def validate_by_configurations(rows, weak: bool = False, literal: bool = False) -> bool:
    """Unimodal rows avoiding the five forbidden two-row configurations.

    In configuration (iii) the entry ``z`` must lie in the increasing part of
    its row.  ``v < z`` says exactly that, except when ``z`` is the dip; the
    dip is treated as increasing unless ``literal`` is set.
    """
    rows = as_rows(rows)
    lens = shape_of(rows)
    if any(lens[k] <= lens[k + 1] for k in range(len(lens) - 1)):
        return False
    if not all(is_unimodal(r, weak) for r in rows):
        return False
    return all(
        _pair_has_configuration(rows[k], rows[k + 1], literal) is None for k in range(len(rows) - 1)
    )


def longest_unimodal_subsequence(seq: Sequence[int]) -> int:
    n = len(seq)
    dec = [1] * n
    uni = [1] * n
    for i in range(n):
        for j in range(i):
            if seq[j] > seq[i]:
                dec[i] = max(dec[i], dec[j] + 1)
            if seq[j] < seq[i]:
                uni[i] = max(uni[i], uni[j] + 1)
        uni[i] = max(uni[i], dec[i])
    return max(uni, default=0)


def rows_are_maximal_unimodal(rows) -> bool:
    rows = as_rows(rows)
    for i in range(len(rows)):
        word = reading_word(rows[i:])
        if longest_unimodal_subsequence(word) != len(rows[i]):
            return False
    return True


def is_reduced_decomposition_tableau(rows) -> bool:
    rows = as_rows(rows)
    if not all(is_unimodal(r) for r in rows):
        return False
    word = reading_word(rows)
    if coxeter_length(demazure_product(word)) != len(word):
        return False
    return rows_are_maximal_unimodal(rows)


def _unimodal_rows(length: int, max_letter: int):
    """All strictly unimodal rows of the given length, lexicographically."""
    out = []

    def rec(prefix: list[int], rising: bool):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for v in range(0, max_letter + 1):
            if not prefix or (not rising and v < prefix[-1]):
                prefix.append(v)
                rec(prefix, False)
                prefix.pop()
            elif v > prefix[-1]:
                prefix.append(v)
                rec(prefix, True)
                prefix.pop()

    rec([], False)
    return out


def enumerate_sdt(shape: Sequence[int], max_letter: int) -> list[Rows]:
    """All SDTs of shape ``shape`` with entries in ``0..max_letter`` (lex order
    of the row tuple, top row first)."""
    shape = tuple(shape)
    found: list[Rows] = []
    if not shape:
        return [()]

    def rec(k: int, below: tuple[int, ...] | None, acc: list):
        # fill rows from the bottom (index k) upward
        if k < 0:
            found.append(tuple(reversed(acc)))
            return
        bound = None if below is None else max(below) + 1
        for row in _unimodal_rows(shape[k], max_letter):
            if bound is not None and row[0] < bound:
                continue
            if below is not None and _pair_violation(row, below, k + 1) is not None:
                continue
            acc.append(row)
            rec(k - 1, row, acc)
            acc.pop()

    rec(len(shape) - 1, None, [])
    found.sort()
    return found


def _fill_reading_order(shape, letters, w, interval, waste_budget, callback):
    """Backtrack in reading order, pruning by the Demazure prefix.

    ``callback(rows)`` receives every SDT whose reading word has product ``w``.
    """
    k = len(shape)
    rows: list[list[int]] = [[] for _ in range(k)]
    n = len(w.stable_window)

    def row_ok_so_far(row: list[int]) -> bool:
        # strict unimodality of a prefix: no up-step followed by a down-step,
        # and no equal neighbours
        rising = False
        for t in range(1, len(row)):
            if row[t] == row[t - 1]:
                return False
            if row[t] > row[t - 1]:
                rising = True
            elif rising:
                return False
        return True

    def rec(r: int, cur: SignedPermutation, waste: int):
        # r: 0-based row currently being filled (bottom row is k-1)
        row = rows[r]
        if len(row) == shape[r]:
            if r + 1 < k and _pair_violation(tuple(row), tuple(rows[r + 1]), r + 1) is not None:
                return
            if r == 0:
                if cur == w:
                    callback(tuple(tuple(x) for x in rows))
                return
            rec(r - 1, cur, waste)
            return
        for a in letters:
            if not row and r + 1 < k and a <= max(rows[r + 1]):
                continue
            nxt = cur.demazure(a)
            extra = waste + (nxt == cur)
            if extra > waste_budget or nxt not in interval:
                continue
            row.append(a)
            if row_ok_so_far(row):
                rec(r, nxt, extra)
            row.pop()

    rec(k - 1, SignedPermutation.identity(n), 0)


def sdts_for(w: SignedPermutation, shape: Sequence[int]) -> list[Rows]:
    """SDTs of the given shape whose reading word is a Hecke word for ``w``."""
    shape = tuple(shape)
    size = sum(shape)
    ell = coxeter_length(w)
    if size < ell:
        return []
    if not shape:
        return [()] if ell == 0 else []
    letters = sorted(w.support())
    out: list[Rows] = []
    _fill_reading_order(shape, letters, w, lower_interval(w), size - ell, out.append)
    out.sort()
    return out


def a_coeff(w: SignedPermutation, shape: Sequence[int]) -> int:
    """Number of SDTs of ``shape`` whose reading word has Demazure product ``w``."""
    return len(sdts_for(w, shape))


def render_rows(rows) -> str:
    rows = as_rows(rows)
    width = max((len(str(v)) for r in rows for v in r), default=1)
    lines = []
    for i, r in enumerate(rows):
        lines.append(" ".join([" " * width] * i + [str(v).rjust(width) for v in r]).rstrip())
    return "\n".join(lines)
