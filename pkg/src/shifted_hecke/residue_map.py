"""The residue map between shifted set-valued tableaux and Hecke words.

A cell ``(i, j)`` of a shifted diagram has content ``j - i``.  Reading the
contents of a standard set-valued tableau in the order of its values gives
a Hecke word for the top element of the shape; semistandard tableaux give
unimodal factorizations.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .shapes_tableaux import SetValuedTableau, SkewShape, as_skew_shape, letter_key
from .signed_permutations import SignedPermutation, Word, demazure_product, top_element


@dataclass(frozen=True)
class UnimodalFactorization:
    """A word with a signed, weakly increasing index sequence.

    ``indices[t] = -k`` marks letter ``t`` as part of the descending half of
    block ``k``, ``+k`` as part of its ascending half.  Indices are ordered
    ``-1 < 1 < -2 < 2 < ...``.
    """

    word: Word
    indices: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "indices", idx)
        if len(word) != len(idx):
            raise ValueError("word and indices differ in length")
        if any(i == 0 for i in idx):
            raise ValueError("index 0 is not allowed")
        for t in range(len(word) - 1):
            a, b = letter_key(idx[t]), letter_key(idx[t + 1])
            if a > b:
                raise ValueError(f"indices not weakly increasing at position {t + 1}")
            if a == b:
                if idx[t] < 0 and not word[t] > word[t + 1]:
                    raise ValueError(f"descending half not strictly decreasing at {t + 1}")
                if idx[t] > 0 and not word[t] < word[t + 1]:
                    raise ValueError(f"ascending half not strictly increasing at {t + 1}")

    @property
    def num_blocks(self) -> int:
        return max((abs(i) for i in self.indices), default=0)

    def blocks(self, m: int | None = None) -> list[tuple[Word, Word]]:
        """``(descending part, ascending part)`` for blocks ``1..m``."""
        m = self.num_blocks if m is None else m
        out: list[tuple[list[int], list[int]]] = [([], []) for _ in range(m)]
        for a, i in zip(self.word, self.indices):
            out[abs(i) - 1][0 if i < 0 else 1].append(a)
        return [(tuple(d), tuple(u)) for d, u in out]

    def weight(self) -> tuple[int, ...]:
        w = [0] * self.num_blocks
        for i in self.indices:
            w[abs(i) - 1] += 1
        return tuple(w)

    def render(self, keep_empty: bool = False) -> str:
        """Text form such as ``(|012)(3|01)``; empty blocks are dropped unless asked."""
        parts = []
        for d, u in self.blocks():
            if not d and not u:
                if keep_empty:
                    parts.append("()")
                continue
            parts.append("(" + "".join(map(str, d)) + "|" + "".join(map(str, u)) + ")")
        return "".join(parts)

    def __str__(self):
        return self.render()

    def to_json(self) -> dict:
        return {"word": list(self.word), "indices": list(self.indices), "text": self.render()}


def content(cell: tuple[int, int]) -> int:
    return cell[1] - cell[0]


def res_standard(t: SetValuedTableau) -> Word:
    """Letter ``k`` is the content of the cell containing ``k``."""
    if not t.is_standard():
        raise ValueError("tableau is not standard set-valued")
    where = t.cell_of()
    return tuple(content(where[k]) for k in range(1, t.size + 1))


def res_semistandard(t: SetValuedTableau) -> UnimodalFactorization:
    if not t.is_semistandard():
        raise ValueError("tableau is not semistandard set-valued")
    m = t.mapping
    word: list[int] = []
    idx: list[int] = []
    top = max((abs(v) for e in t.entries for v in e), default=0)
    for k in range(1, top + 1):
        barred = sorted((c for c, e in m.items() if -k in e), key=lambda c: c[0])
        plain = sorted((c for c, e in m.items() if k in e), key=lambda c: c[1])
        for c in barred:
            word.append(content(c))
            idx.append(-k)
        for c in plain:
            word.append(content(c))
            idx.append(k)
    return UnimodalFactorization(tuple(word), tuple(idx))


def _reduced_word_tableau(shape: SkewShape, positions: Sequence[int], letters: Sequence[int]):
    """Place a reduced word of the top element as a linear extension.

    Each letter goes to the unique addable cell of its content; failure means
    the word is not a reduced word of the top element.
    """
    filled: dict[tuple[int, int], list[int]] = {}
    for pos, a in zip(positions, letters):
        spot = None
        for cell in shape.cells():
            if cell in filled or content(cell) != a:
                continue
            i, j = cell
            if all(nb in filled or nb not in shape for nb in ((i, j - 1), (i - 1, j))):
                spot = cell
                break
        if spot is None:
            raise ValueError("word is not a Hecke word for the top element of the shape")
        filled[spot] = [pos]
    return filled


def res_inverse(word: Sequence[int], shape) -> SetValuedTableau:
    """The standard set-valued tableau whose residue word is ``word``."""
    shape = as_skew_shape(shape)
    word = tuple(int(a) for a in word)
    w, _ = top_element(shape)
    n = max(max(word, default=0), len(w.stable_window)) + 1
    if demazure_product(word, n) != w:
        raise ValueError("word is not a Hecke word for the top element of the shape")
    growth, rest = [], []
    cur = SignedPermutation.identity(n)
    for pos, a in enumerate(word, start=1):
        nxt = cur.demazure(a)
        (growth if nxt != cur else rest).append(pos)
        cur = nxt
    filled = _reduced_word_tableau(shape, growth, [word[p - 1] for p in growth])
    if len(filled) != shape.size:
        raise ValueError("word is not a Hecke word for the top element of the shape")
    home = {v[0]: c for c, v in filled.items()}
    for pos in rest:
        m = max(g for g in growth if g < pos and word[g - 1] == word[pos - 1])
        filled[home[m]].append(pos)
    return SetValuedTableau.from_mapping(shape, filled)
