"""Signed permutations, the 0-Hecke (Demazure) product and Hecke words.

A signed permutation is stored through its window ``(w(1), ..., w(n))``.
Generators act on the right: ``s_0`` negates the first window entry and
``s_i`` (``i >= 1``) swaps window positions ``i`` and ``i+1``.  A word
``(a_1, ..., a_p)`` therefore has product ``s_{a_1} s_{a_2} ... s_{a_p}``
obtained by applying the generators to the identity window left to right.

>>> demazure_product((1, 0, 2), 3)
SignedPermutation(window=(-2, 3, 1))
>>> coxeter_length(SignedPermutation((-2, 3, 1)))
3
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"not a signed permutation window: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def stable_window(self) -> tuple[int, ...]:
        """Window with trailing fixed points removed."""
        w = self.window
        k = len(w)
        while k > 0 and w[k - 1] == k:
            k -= 1
        return w[:k]

    def __eq__(self, other):
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.stable_window == other.stable_window

    def __hash__(self):
        return hash(self.stable_window)

    def __repr__(self):
        return f"SignedPermutation(window={self.window})"

    def __str__(self):
        return ",".join(str(v) for v in self.window)

    @classmethod
    def identity(cls, n: int = 0) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Parse ``"-2,3,1"`` (bars written as minus signs)."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    def padded(self, n: int) -> tuple[int, ...]:
        if n < self.n:
            if n < len(self.stable_window):
                raise ValueError(f"window {self.window} does not fit in W_{n}")
            return self.stable_window + tuple(range(len(self.stable_window) + 1, n + 1))
        return self.window + tuple(range(self.n + 1, n + 1))

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self(-i)
        if i == 0:
            return 0
        return self.window[i - 1] if i <= self.n else i

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        n = max(self.n, other.n)
        return SignedPermutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, v in enumerate(self.window, start=1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(inv))

    def length(self) -> int:
        return coxeter_length(self)

    def has_right_descent(self, i: int) -> bool:
        if i == 0:
            return self(1) < 0
        return self(i) > self(i + 1)

    def times_generator(self, i: int) -> "SignedPermutation":
        w = list(self.padded(max(self.n, i + 1)))
        if i == 0:
            w[0] = -w[0]
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return SignedPermutation(tuple(w))

    def demazure(self, i: int) -> "SignedPermutation":
        """Right 0-Hecke product ``self o s_i``."""
        if self.has_right_descent(i):
            return self
        return self.times_generator(i)

    def support(self) -> frozenset[int]:
        return frozenset(canonical_reduced_word(self))

    def to_json(self) -> list[int]:
        return list(self.window)


def _letters_ok(word: Sequence[int], n: int) -> None:
    for a in word:
        if not 0 <= a < n:
            raise ValueError(f"invalid letter {a} for W_{n}")


def demazure_product(word: Iterable[int], n: int | None = None) -> SignedPermutation:
    """0-Hecke product ``s_{a_1} o ... o s_{a_p}`` inside ``W_n``."""
    word = tuple(word)
    if n is None:
        n = max(word, default=-1) + 1
    _letters_ok(word, n)
    return _demazure_tuple(word, n)


@lru_cache(maxsize=1 << 16)
def _demazure_tuple(word: Word, n: int) -> SignedPermutation:
    w = list(range(1, n + 1))
    for a in word:
        if a == 0:
            if w[0] > 0:
                w[0] = -w[0]
        elif w[a - 1] < w[a]:
            w[a - 1], w[a] = w[a], w[a - 1]
    return SignedPermutation(tuple(w))


def coxeter_length(w: SignedPermutation) -> int:
    """Type B length: inversions plus pairs ``i <= j`` with ``w(i) + w(j) < 0``."""
    v = w.window
    n = len(v)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    nsp = sum(1 for i in range(n) for j in range(i, n) if v[i] + v[j] < 0)
    return inv + nsp


def canonical_reduced_word(w: SignedPermutation) -> Word:
    """A reduced word for ``w`` found by stripping right descents greedily."""
    letters = []
    cur = w
    while True:
        for i in range(0, cur.n):
            if cur.has_right_descent(i):
                letters.append(i)
                cur = cur.times_generator(i)
                break
        else:
            break
    return tuple(reversed(letters))


def is_reduced(word: Sequence[int]) -> bool:
    return coxeter_length(demazure_product(word)) == len(word)


def lower_interval(w: SignedPermutation) -> frozenset[SignedPermutation]:
    """All Demazure products of subwords of a reduced word of ``w``.

    Every prefix product of a Hecke word for ``w`` lies in this set, which
    makes it a sharp pruning filter for word and tableau searches.
    """
    n = len(w.stable_window)
    seen = {SignedPermutation.identity(n)}
    for a in canonical_reduced_word(w):
        seen |= {u.demazure(a) for u in seen}
    return frozenset(seen)


def hecke_words(w: SignedPermutation, p: int) -> list[Word]:
    """All words of length ``p`` whose Demazure product is ``w`` (lex order)."""
    ell = coxeter_length(w)
    if p < ell:
        return []
    support = sorted(w.support())
    n = len(w.stable_window)
    interval = lower_interval(w)
    out: list[Word] = []

    def walk(cur: SignedPermutation, depth: int, prefix: list[int], waste: int):
        if depth == p:
            if cur == w:
                out.append(tuple(prefix))
            return
        for a in support:
            nxt = cur.demazure(a)
            extra = waste + (nxt == cur)
            if extra > p - ell or nxt not in interval:
                continue
            prefix.append(a)
            walk(nxt, depth + 1, prefix, extra)
            prefix.pop()

    walk(SignedPermutation.identity(n), 0, [], 0)
    return out


def all_signed_permutations(n: int) -> list[SignedPermutation]:
    from itertools import permutations, product

    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(SignedPermutation(tuple(s * v for s, v in zip(signs, perm))))
    return out


VEXILLARY_PATTERNS: tuple[tuple[int, ...], ...] = (
    (-1, 3, 2), (-2, 3, 1), (3, -1, 2), (3, 2, 1), (-3, 2, 1), (3, 2, -1), (-3, 2, -1),
    (2, 1, 4, 3), (2, -3, 4, -1), (-2, -3, 4, -1), (2, 4, 1, 3), (3, 1, 4, 2),
    (3, -4, 1, -2), (-3, -4, 1, -2), (3, -4, -1, -2), (-3, -4, -1, -2),
    (-4, 1, -2, 3), (-4, -1, -2, 3),
)

TOP_PATTERNS: tuple[tuple[int, ...], ...] = (
    (-1, -2), (-1, 2), (-3, 2, -1), (-3, 2, 1), (3, 2, -1), (3, 2, 1),
)


def _standardized(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(abs(x) for x in seq), start=1)}
    return tuple(ranks[abs(x)] * (1 if x > 0 else -1) for x in seq)


def contains_pattern(w: SignedPermutation, pattern: Sequence[int]) -> bool:
    pattern = tuple(pattern)
    window = w.window
    for idx in combinations(range(len(window)), len(pattern)):
        if _standardized([window[i] for i in idx]) == pattern:
            return True
    return False


@dataclass(frozen=True)
class Classification:
    grassmannian: bool
    vexillary: bool
    top_fully_commutative: bool
    shape: tuple[int, ...] | None


def _reversed_complement(w: SignedPermutation) -> SignedPermutation:
    """Window read right to left with absolute values complemented.

    The top patterns are stated for the convention in which ``s_0`` acts on
    the last position; this converts our windows into that convention.
    """
    n = len(w.window)
    return SignedPermutation(tuple((n + 1 - abs(v)) * (1 if v > 0 else -1) for v in reversed(w.window)))


def classify(w: SignedPermutation) -> Classification:
    window = w.window
    grass = all(window[i] < window[i + 1] for i in range(len(window) - 1))
    shape = tuple(-v for v in window if v < 0) if grass else None
    return Classification(
        grassmannian=grass,
        vexillary=not any(contains_pattern(w, p) for p in VEXILLARY_PATTERNS),
        top_fully_commutative=not any(contains_pattern(_reversed_complement(w), p) for p in TOP_PATTERNS),
        shape=shape,
    )


def make_grassmannian(shape: Sequence[int], n: int) -> SignedPermutation:
    shape = tuple(shape)
    if any(shape[i] <= shape[i + 1] for i in range(len(shape) - 1)) or any(v <= 0 for v in shape):
        raise ValueError(f"not a strict partition: {shape}")
    if shape and shape[0] > n:
        raise ValueError(f"largest part {shape[0]} exceeds n={n}")
    rest = [v for v in range(1, n + 1) if v not in shape]
    return SignedPermutation(tuple(-v for v in shape) + tuple(rest))


def make_wabk(a: int, b: int, k: int) -> SignedPermutation:
    """The ordinary permutation ``1..k, l+1..n, k+1..l`` with ``l = a+k``, ``n = a+b+k``."""
    if min(a, b, k) < 0:
        raise ValueError("a, b, k must be nonnegative")
    ell, n = a + k, a + b + k
    return SignedPermutation(
        tuple(range(1, k + 1)) + tuple(range(ell + 1, n + 1)) + tuple(range(k + 1, ell + 1))
    )


def trapezoid_shape(a: int, b: int) -> tuple[int, ...]:
    if a > b:
        raise ValueError(f"trapezoid needs a <= b, got a={a}, b={b}")
    return tuple(b + a - 1 - 2 * i for i in range(a))


def word_peak_set(word: Sequence[int]) -> set[int]:
    return {i for i in range(2, len(word)) if word[i - 2] < word[i - 1] > word[i]}


def product_split(u: SignedPermutation, v: SignedPermutation, k: int | None = None) -> SignedPermutation:
    """Group product ``uv`` for ``u`` in ``W_k`` and ``v`` a permutation fixing ``[k]``."""
    if k is None:
        k = len(u.stable_window)
    if len(u.stable_window) > k:
        raise ValueError(f"u is not in W_{k}")
    for i in range(1, max(v.n, k) + 1):
        if i <= k and v(i) != i:
            raise ValueError(f"v does not fix {i}")
        if v(i) < 0:
            raise ValueError("v must be an ordinary permutation")
    return u * v


def top_element(shape) -> tuple[SignedPermutation, Word]:
    """Top fully commutative element of a shifted skew shape and its canonical word."""
    from .shapes_tableaux import as_skew_shape

    shape = as_skew_shape(shape)
    word = tuple(j - i for (i, j) in shape.cells())
    n = max(word, default=-1) + 1
    return demazure_product(word, n), word
