"""Strict partitions, shifted skew diagrams and set-valued tableaux.

Row ``i`` of the shifted diagram of ``lambda`` occupies columns
``i, ..., lambda_i + i - 1``.  Primed letters ``k'`` are stored as ``-k`` and
ordered ``1' < 1 < 2' < 2 < ...``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Cell = tuple[int, int]


def check_strict(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts) or any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not a strict partition: {parts}")
    return parts


def strict_partitions(size: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Strict partitions of ``size`` in decreasing lex order."""
    if max_part is None:
        max_part = size
    if size == 0:
        return [()]
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in strict_partitions(size - first, first - 1):
            out.append((first,) + rest)
    return out


def strict_subpartitions(outer: Sequence[int]) -> list[tuple[int, ...]]:
    """All strict partitions contained in ``outer`` (componentwise)."""
    outer = tuple(outer)
    out = []

    def rec(i, prefix):
        out.append(tuple(prefix))
        if i == len(outer):
            return
        cap = outer[i] if not prefix else min(outer[i], prefix[-1] - 1)
        for v in range(1, cap + 1):
            rec(i + 1, prefix + [v])

    rec(0, [])
    return sorted(set(out), key=lambda p: (sum(p), tuple(-x for x in p)))


@dataclass(frozen=True)
class SkewShape:
    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = check_strict(self.outer)
        inner = check_strict(self.inner)
        if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(inner))):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def row_bounds(self, i: int) -> tuple[int, int]:
        """First and last column (inclusive) of row ``i``; empty rows give first > last."""
        mu = self.inner[i - 1] if i <= len(self.inner) else 0
        return i + mu, i + self.outer[i - 1] - 1

    @cached_property
    def cell_list(self) -> tuple[Cell, ...]:
        cells = []
        for i in range(1, len(self.outer) + 1):
            lo, hi = self.row_bounds(i)
            cells.extend((i, j) for j in range(lo, hi + 1))
        return tuple(cells)

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cell_list)

    def cells(self) -> tuple[Cell, ...]:
        return self.cell_list

    @property
    def size(self) -> int:
        return len(self.cell_list)

    def __contains__(self, cell) -> bool:
        return cell in self.cell_set

    def __str__(self):
        o = ",".join(map(str, self.outer))
        if not self.inner:
            return f"({o})"
        return f"({o})/({','.join(map(str, self.inner))})"


def as_skew_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(tuple(shape))


def parse_skew_shape(text: str) -> SkewShape:
    """Parse ``"(2,1)/(1)"`` or ``"2,1"``."""
    def part(t):
        t = t.strip().strip("()")
        return tuple(int(x) for x in t.split(",") if x.strip())

    if "/" in text:
        a, b = text.split("/", 1)
        return SkewShape(part(a), part(b))
    return SkewShape(part(text))


def letter_key(v: int) -> tuple[int, int]:
    """Sort key for the order ``1' < 1 < 2' < 2 < ...`` (primes are negative)."""
    return (abs(v), 0 if v < 0 else 1)


def format_letter(v: int) -> str:
    return f"{-v}'" if v < 0 else str(v)


@dataclass(frozen=True)
class SetValuedTableau:
    """A filling of a shifted skew shape by nonempty sets of (signed) integers.

    ``entries`` lists the sets in row-major cell order, each sorted by the
    letter order.  Standard and semistandard conditions are checked by
    :meth:`is_standard` and :meth:`is_semistandard`.
    """

    shape: SkewShape
    entries: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        shape = as_skew_shape(self.shape)
        entries = tuple(tuple(sorted(set(e), key=letter_key)) for e in self.entries)
        if len(entries) != shape.size or any(not e for e in entries):
            raise ValueError("need one nonempty set per cell")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, shape, mapping: dict) -> "SetValuedTableau":
        shape = as_skew_shape(shape)
        return cls(shape, tuple(tuple(mapping[c]) for c in shape.cells()))

    @classmethod
    def from_rows(cls, shape, rows: Sequence[Sequence]) -> "SetValuedTableau":
        """Build from row lists; an entry may be an int or a collection."""
        shape = as_skew_shape(shape)
        flat = []
        for row in rows:
            for e in row:
                flat.append((e,) if isinstance(e, int) else tuple(e))
        return cls(shape, tuple(flat))

    @cached_property
    def mapping(self) -> dict[Cell, tuple[int, ...]]:
        return dict(zip(self.shape.cells(), self.entries))

    def __getitem__(self, cell: Cell) -> tuple[int, ...]:
        return self.mapping[cell]

    def get(self, cell: Cell):
        return self.mapping.get(cell)

    @property
    def size(self) -> int:
        return sum(len(e) for e in self.entries)

    def rows(self) -> list[list[tuple[int, ...]]]:
        out: dict[int, list] = {}
        for (i, _), e in zip(self.shape.cells(), self.entries):
            out.setdefault(i, []).append(e)
        return [out.get(i, []) for i in range(1, len(self.shape.outer) + 1)]

    def values(self) -> list[int]:
        return [v for e in self.entries for v in e]

    def is_standard(self) -> bool:
        vals = sorted(self.values())
        if vals != list(range(1, len(vals) + 1)):
            return False
        m = self.mapping
        for (i, j), e in m.items():
            for nb in ((i, j + 1), (i + 1, j)):
                if nb in m and max(e) >= min(m[nb]):
                    return False
        return True

    def is_semistandard(self) -> bool:
        m = self.mapping
        for (i, j), e in m.items():
            if any(v == 0 for v in e):
                return False
            top = max(e, key=letter_key)
            right = m.get((i, j + 1))
            if right is not None:
                low = min(right, key=letter_key)
                if letter_key(top) > letter_key(low) or (top == low and top < 0):
                    return False
            below = m.get((i + 1, j))
            if below is not None:
                low = min(below, key=letter_key)
                if letter_key(top) > letter_key(low) or (top == low and top > 0):
                    return False
        return True

    def cell_of(self) -> dict[int, Cell]:
        """Value -> cell (standard tableaux only)."""
        return {v: c for c, e in self.mapping.items() for v in e}

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "cells": [list(e) for e in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SetValuedTableau":
        shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", ())))
        return cls(shape, tuple(tuple(e) for e in data["cells"]))

    def render(self) -> str:
        texts = {c: ",".join(format_letter(v) for v in e) for c, e in self.mapping.items()}
        width = max((len(t) for t in texts.values()), default=1)
        lines = []
        for i in range(1, len(self.shape.outer) + 1):
            lo, hi = self.shape.row_bounds(i)
            pieces = [" " * width] * (lo - 1) + [texts[(i, j)].rjust(width) for j in range(lo, hi + 1)]
            lines.append(" ".join(pieces).rstrip())
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def _neighbours_before(shape: SkewShape, cell: Cell) -> list[Cell]:
    i, j = cell
    return [c for c in ((i, j - 1), (i - 1, j)) if c in shape]


def _neighbours_after(shape: SkewShape, cell: Cell) -> list[Cell]:
    i, j = cell
    return [c for c in ((i, j + 1), (i + 1, j)) if c in shape]


def enumerate_shset(shape, n: int) -> list[SetValuedTableau]:
    """All standard set-valued tableaux of ``shape`` whose sets partition ``[n]``."""
    shape = as_skew_shape(shape)
    cells = shape.cells()
    if n < len(cells):
        return []
    filled: dict[Cell, list[int]] = {}
    out = []

    def place(v: int):
        if len(cells) - len(filled) > n - v + 1:
            return
        if v > n:
            if len(filled) == len(cells):
                out.append(SetValuedTableau(shape, tuple(tuple(filled[c]) for c in cells)))
            return
        for c in cells:
            if c in filled:
                if all(nb not in filled for nb in _neighbours_after(shape, c)):
                    filled[c].append(v)
                    place(v + 1)
                    filled[c].pop()
            elif all(nb in filled for nb in _neighbours_before(shape, c)):
                filled[c] = [v]
                place(v + 1)
                del filled[c]

    place(1)
    out.sort(key=lambda t: t.entries)
    return out


def restricted_shset_star(shape, max_size: int) -> list[SetValuedTableau]:
    """Standard set-valued tableaux of sizes ``|shape|..max_size`` with no two
    consecutive values in one box."""
    shape = as_skew_shape(shape)
    out = []
    for n in range(shape.size, max_size + 1):
        for t in enumerate_shset(shape, n):
            if all(e[k + 1] != e[k] + 1 for e in t.entries for k in range(len(e) - 1)):
                out.append(t)
    return out


def enumerate_shssyt(shape, m: int, max_size: int) -> list[SetValuedTableau]:
    """Semistandard set-valued tableaux over ``{+-1, ..., +-m}`` of total size <= ``max_size``."""
    shape = as_skew_shape(shape)
    cells = shape.cells()
    alphabet = sorted([v for k in range(1, m + 1) for v in (-k, k)], key=letter_key)
    out = []
    chosen: dict[Cell, tuple[int, ...]] = {}

    def lower_ok(v: int, cell: Cell) -> bool:
        i, j = cell
        left = chosen.get((i, j - 1))
        if left is not None:
            top = left[-1]
            if letter_key(top) > letter_key(v) or (top == v and v < 0):
                return False
        up = chosen.get((i - 1, j))
        if up is not None:
            top = up[-1]
            if letter_key(top) > letter_key(v) or (top == v and v > 0):
                return False
        return True

    def subsets(start: int, budget: int):
        # nonempty increasing tuples from alphabet[start:], at most budget letters
        if budget <= 0:
            return
        for k in range(start, len(alphabet)):
            yield (alphabet[k],)
            for rest in subsets(k + 1, budget - 1):
                yield (alphabet[k],) + rest

    def rec(idx: int, used: int):
        if idx == len(cells):
            out.append(SetValuedTableau(shape, tuple(chosen[c] for c in cells)))
            return
        cell = cells[idx]
        budget = max_size - used - (len(cells) - idx - 1)
        for start, v in enumerate(alphabet):
            if not lower_ok(v, cell):
                continue
            for sub in subsets(start, budget):
                chosen[cell] = sub
                rec(idx + 1, used + len(sub))
                del chosen[cell]
            break

    if shape.size <= max_size:
        rec(0, 0)
    return out


def standardize(t: SetValuedTableau) -> SetValuedTableau:
    """Replace primed ``k'`` top to bottom, then unprimed ``k`` bottom-left to
    top-right, by consecutive integers, letter value by letter value."""
    m = t.mapping
    new = {c: [] for c in m}
    nxt = 1
    for k in sorted({abs(v) for e in t.entries for v in e}):
        primed = sorted((c for c, e in m.items() if -k in e), key=lambda c: (c[0], -c[1]))
        for c in primed:
            new[c].append(nxt)
            nxt += 1
        plain = sorted((c for c, e in m.items() if k in e), key=lambda c: (c[1], -c[0]))
        for c in plain:
            new[c].append(nxt)
            nxt += 1
    return SetValuedTableau.from_mapping(t.shape, new)


def tableau_peak_set(t: SetValuedTableau) -> set[int]:
    """Values ``i`` with ``i-1`` strictly left of ``i`` and ``i+1`` strictly below ``i``.

    Values sharing a box have equal row and column, so they never count as
    left of or below one another.
    """
    where = t.cell_of()
    return {
        i
        for i in where
        if i - 1 in where and i + 1 in where
        and where[i - 1][1] < where[i][1]
        and where[i + 1][0] > where[i][0]
    }


def superstandard(shape: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Rows of the column-constant decomposition tableau ``P^lambda``."""
    lam = check_strict(shape)
    if not lam:
        return ()
    k = len(lam)
    taken = set(lam[1:]) | {0}
    comp = [v for v in range(lam[0]) if v not in taken]
    rows = []
    for i in range(1, k + 1):
        row = tuple(lam[i:]) + (0,) + tuple(comp[: lam[i - 1] - k + i - 1])
        rows.append(row)
    return tuple(rows)


def shifted_syt_count(shape: Sequence[int]) -> int:
    """Number of linear extensions of the shifted diagram (memoised over order ideals)."""
    shape = tuple(shape)
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def count(filled: tuple[int, ...]) -> int:
        if filled == shape:
            return 1
        total = 0
        for i in range(len(shape)):
            if filled[i] < shape[i]:
                col = i + 1 + filled[i]
                if i == 0 or filled[i - 1] + i - 1 >= col:
                    nxt = list(filled)
                    nxt[i] += 1
                    total += count(tuple(nxt))
        return total

    return count(tuple(0 for _ in shape))
