"""Truncated power series in ``x_1..x_m`` and ``beta``, and the functions
GQ, GS, G^C and the multipeak quasisymmetric functions.

Every series keeps only monomials of total x-degree at most ``D``.  The
beta-exponent is stored explicitly with each term and never substituted.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .decomposition_tableaux import a_coeff
from .shapes_tableaux import SkewShape, as_skew_shape, letter_key, strict_partitions
from .signed_permutations import (
    SignedPermutation,
    coxeter_length,
    hecke_words,
    lower_interval,
)

Key = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer combination of ``beta^b x^e`` with ``len(e) == m`` and ``|e| <= D``."""

    m: int
    D: int
    terms: Mapping[Key, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Key, int] = {}
        for (exps, b), c in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.m:
                raise ValueError(f"exponent vector {exps} has length != {self.m}")
            if c and sum(exps) <= self.D:
                clean[(exps, int(b))] = clean.get((exps, int(b)), 0) + int(c)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    # construction -------------------------------------------------------
    @classmethod
    def one(cls, m: int, D: int) -> "TruncatedSeries":
        return cls(m, D, {((0,) * m, 0): 1})

    @classmethod
    def zero(cls, m: int, D: int) -> "TruncatedSeries":
        return cls(m, D, {})

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "TruncatedSeries"):
        if self.m != other.m:
            raise ValueError("series use different variable counts")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = defaultdict(int, self.terms)
        for k, v in other.terms.items():
            out[k] += v
        return TruncatedSeries(self.m, min(self.D, other.D), out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.m, self.D, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c: int, beta_shift: int = 0) -> "TruncatedSeries":
        return TruncatedSeries(
            self.m, self.D, {(e, b + beta_shift): c * v for (e, b), v in self.terms.items()}
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        D = min(self.D, other.D)
        out: dict[Key, int] = defaultdict(int)
        right = [(e, b, v, sum(e)) for (e, b), v in other.terms.items()]
        for (e1, b1), v1 in self.terms.items():
            d1 = sum(e1)
            for e2, b2, v2, d2 in right:
                if d1 + d2 <= D:
                    out[(tuple(x + y for x, y in zip(e1, e2)), b1 + b2)] += v1 * v2
        return TruncatedSeries(self.m, D, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.m == other.m and self.D == other.D and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.m, self.D, frozenset(self.terms.items())))

    # queries ------------------------------------------------------------
    def truncate(self, D: int) -> "TruncatedSeries":
        return TruncatedSeries(self.m, min(D, self.D), self.terms)

    def coefficient(self, exps: Sequence[int], beta: int) -> int:
        exps = tuple(exps) + (0,) * (self.m - len(exps))
        return self.terms.get((exps, beta), 0)

    def beta_slice(self, beta: int) -> "TruncatedSeries":
        return TruncatedSeries(self.m, self.D, {k: v for k, v in self.terms.items() if k[1] == beta})

    def degree_slice(self, d: int) -> "TruncatedSeries":
        return TruncatedSeries(self.m, self.D, {k: v for k, v in self.terms.items() if sum(k[0]) == d})

    def is_symmetric(self) -> bool:
        """Every rearrangement of each stored exponent vector carries the same coefficient."""
        orbits: dict[Key, list[int]] = defaultdict(list)
        for (e, b), v in self.terms.items():
            orbits[(tuple(sorted(e, reverse=True)), b)].append(v)
        for (e, _), values in orbits.items():
            orbit_size = factorial(self.m)
            for k in Counter(e).values():
                orbit_size //= factorial(k)
            if len(values) != orbit_size or len(set(values)) != 1:
                return False
        return True

    def is_homogeneous(self, offset: int) -> bool:
        """Whether every term has ``beta``-exponent ``degree - offset``."""
        return all(b == sum(e) - offset for (e, b) in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int, int]]:
        return sorted(((e, b, v) for (e, b), v in self.terms.items()), key=lambda t: (sum(t[0]), t[1], tuple(-x for x in t[0])))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "D": self.D,
            "terms": [{"exponents": list(e), "beta": b, "coeff": v} for e, b, v in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls(
            data["m"], data["D"], {(tuple(t["exponents"]), t["beta"]): t["coeff"] for t in data["terms"]}
        )

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, b, v in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            beta = "" if b == 0 else ("b" if b == 1 else f"b^{b}")
            body = "*".join(p for p in (beta, mono) if p)
            pieces.append(f"{v}" + (f"*{body}" if body else ""))
        return " + ".join(pieces)


def _bump(exps: tuple[int, ...], i: int, by: int = 1) -> tuple[int, ...]:
    lst = list(exps)
    lst[i] += by
    return tuple(lst)


# ---------------------------------------------------------------- GQ and GS


def gq(shape, m: int, D: int) -> TruncatedSeries:
    """``GQ`` of a shifted (skew) shape, as a transfer over letters ``-1, 1, -2, 2, ...``.

    The state records which cells already hold a letter (an order ideal of
    the shape) and the exponent vector so far.  For each letter we choose the
    set of cells receiving it: a cell may take a letter only while no cell to
    its right or below holds anything, a fresh cell needs its left and upper
    neighbours filled, and two horizontally (vertically) adjacent cells may
    share only a positive (negative) letter.
    """
    shape = as_skew_shape(shape)
    cells = shape.cells()
    index = {c: t for t, c in enumerate(cells)}
    full = (1 << len(cells)) - 1
    size = len(cells)
    if size > D:
        return TruncatedSeries.zero(m, D)
    right = [index.get((i, j + 1)) for (i, j) in cells]
    below = [index.get((i + 1, j)) for (i, j) in cells]
    left = [index.get((i, j - 1)) for (i, j) in cells]
    above = [index.get((i - 1, j)) for (i, j) in cells]

    def choices(started: int, v: int, room: int):
        """Bitmasks of cells that receive the letter ``v`` (at most ``room`` cells)."""
        out = []

        def rec(t: int, chosen: int, count: int):
            if t == size:
                out.append((chosen, count))
                return
            rec(t + 1, chosen, count)
            if count == room:
                return
            bit = 1 << t
            for nb in (right[t], below[t]):
                if nb is not None and started >> nb & 1:
                    return
            if not started & bit:
                for nb in (left[t], above[t]):
                    if nb is not None and not (started | chosen) >> nb & 1:
                        return
            if left[t] is not None and chosen >> left[t] & 1 and v < 0:
                return
            if above[t] is not None and chosen >> above[t] & 1 and v > 0:
                return
            rec(t + 1, chosen | bit, count + 1)

        rec(0, 0, 0)
        return out

    states: dict[tuple[int, tuple[int, ...]], int] = {(0, (0,) * m): 1}
    for k in range(1, m + 1):
        for v in (-k, k):
            nxt: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
            for (started, exps), c in states.items():
                deg = sum(exps)
                room = D - deg
                for chosen, count in choices(started, v, room):
                    new_started = started | chosen
                    still = size - bin(new_started).count("1")
                    if deg + count + still > D:
                        continue
                    nxt[(new_started, _bump(exps, k - 1, count) if count else exps)] += c
            states = nxt
    terms = {(exps, sum(exps) - size): c for (started, exps), c in states.items() if started == full}
    return TruncatedSeries(m, D, terms)


def staircase_realization(nu: Sequence[int]) -> SkewShape:
    """The shifted skew shape whose diagram is the ordinary diagram of ``nu``."""
    nu = tuple(v for v in nu if v)
    if any(nu[i] < nu[i + 1] for i in range(len(nu) - 1)):
        raise ValueError(f"not a partition: {nu}")
    k = len(nu)
    lam = tuple(nu[i] + k - 1 - i for i in range(k))
    mu = tuple(range(k - 1, 0, -1))
    return SkewShape(lam, mu)


def gs(nu: Sequence[int], m: int, D: int) -> TruncatedSeries:
    return gq(staircase_realization(nu), m, D)


def schur_q(shape, m: int, D: int) -> TruncatedSeries:
    """Lowest beta-degree part of ``gq``."""
    return gq(shape, m, D).beta_slice(0)


# ---------------------------------------------------------------- G^C


def _operator_letters(n: int) -> list[int]:
    return list(range(n - 1, -1, -1)) + list(range(0, n))


def gc_operator(w: SignedPermutation, m: int, D: int) -> TruncatedSeries:
    """Coefficient of ``u_w`` in the product of ``(1 + x_i u_a)`` factors.

    Only elements of the Bruhat interval below ``w`` can be prefixes of a
    Hecke word for ``w``, so the state map is restricted to that interval.
    """
    n = len(w.stable_window)
    ell = coxeter_length(w)
    interval = lower_interval(w)
    letters = [a for a in _operator_letters(n)]
    e0 = (0,) * m
    states: dict[tuple[SignedPermutation, tuple[int, ...]], int] = {
        (SignedPermutation.identity(n), e0): 1
    }
    for i in range(m):
        for a in letters:
            nxt = defaultdict(int, states)
            for (u, exps), c in states.items():
                if sum(exps) >= D:
                    continue
                v = u.demazure(a)
                if v not in interval:
                    continue
                nxt[(v, _bump(exps, i))] += c
            states = nxt
    terms = {(exps, sum(exps) - ell): c for (u, exps), c in states.items() if u == w}
    return TruncatedSeries(m, D, terms)


def unimodal_splits(block: Sequence[int]) -> int:
    """Number of ways to cut ``block`` into a strictly decreasing prefix and a
    strictly increasing suffix."""
    r = len(block)
    count = 0
    for t in range(r + 1):
        if all(block[s] > block[s + 1] for s in range(t - 1)) and all(
            block[s] < block[s + 1] for s in range(t, r - 1)
        ):
            count += 1
    return count


def gc_factorizations(w: SignedPermutation, m: int, D: int) -> TruncatedSeries:
    """Sum over unimodal factorizations of Hecke words of ``w`` of length ``<= D``."""
    ell = coxeter_length(w)
    terms: dict[Key, int] = defaultdict(int)
    for p in range(ell, D + 1):
        for word in hecke_words(w, p):
            splits = {
                (s, e): unimodal_splits(word[s:e]) for s in range(p + 1) for e in range(s, p + 1)
            }

            def rec(block: int, start: int, exps: list[int], weight: int):
                if block == m:
                    if start == p:
                        terms[(tuple(exps), p - ell)] += weight
                    return
                for end in range(start, p + 1):
                    c = splits[(start, end)]
                    if not c:
                        break
                    exps.append(end - start)
                    rec(block + 1, end, exps, weight * c)
                    exps.pop()

            rec(0, 0, [], 1)
    return TruncatedSeries(m, D, terms)


# ---------------------------------------------------------------- multipeak


def check_peak_set(I: Iterable[int], n: int) -> frozenset[int]:
    I = frozenset(I)
    for i in I:
        if not 2 <= i <= n - 1:
            raise ValueError(f"peak position {i} outside 2..{n - 1}")
        if i + 1 in I:
            raise ValueError(f"peak positions {i} and {i + 1} are consecutive")
    return I


def multipeak(I: Iterable[int], n: int, m: int, D: int) -> TruncatedSeries:
    """The multipeak quasisymmetric function ``K_I`` truncated at degree ``D``."""
    I = check_peak_set(I, n)
    alphabet = sorted([v for k in range(1, m + 1) for v in (-k, k)], key=letter_key)
    rank = {v: t for t, v in enumerate(alphabet)}

    def sets_from(start: int, budget: int):
        # nonempty increasing tuples over alphabet[start:], size <= budget
        def rec(t: int, acc: list[int]):
            if acc:
                yield tuple(acc)
            if len(acc) == budget:
                return
            for s in range(t, len(alphabet)):
                acc.append(alphabet[s])
                yield from rec(s + 1, acc)
                acc.pop()

        if budget > 0:
            yield from rec(start, [])

    if n > D:
        return TruncatedSeries.zero(m, D)
    # state: rank of max(S_i) (or -1 before S_1), exponents
    states: dict[tuple[int, tuple[int, ...]], int] = {(-1, (0,) * m): 1}
    for i in range(1, n + 1):
        nxt: dict[tuple[int, tuple[int, ...]], int] = defaultdict(int)
        for (top, exps), c in states.items():
            budget = D - sum(exps) - (n - i)
            start = max(top, 0)
            for S in sets_from(start, budget):
                if top >= 0 and rank[S[0]] == top:
                    shared = alphabet[top]
                    if (i - 1 in I and shared > 0) or (i - 1 not in I and shared < 0):
                        continue
                e = list(exps)
                for v in S:
                    e[abs(v) - 1] += 1
                nxt[(rank[S[-1]], tuple(e))] += c
        states = nxt
    terms: dict[Key, int] = defaultdict(int)
    for (_, exps), c in states.items():
        terms[(exps, sum(exps) - n)] += c
    return TruncatedSeries(m, D, terms)


# ---------------------------------------------------------------- expansion


@dataclass(frozen=True)
class GQCombination:
    """Integer combination of ``beta^b GQ_lambda``; keys are ``(lambda, b)``."""

    terms: Mapping[tuple[tuple[int, ...], int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {(tuple(l), int(b)): int(c) for (l, b), c in self.terms.items() if c}
        )

    def __eq__(self, other):
        if not isinstance(other, GQCombination):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficients(self) -> dict[tuple[int, ...], int]:
        """``lambda -> coefficient`` (beta-exponents dropped)."""
        out: dict[tuple[int, ...], int] = defaultdict(int)
        for (lam, _), c in self.terms.items():
            out[lam] += c
        return dict(out)

    def sorted_terms(self):
        return sorted(
            ((lam, b, c) for (lam, b), c in self.terms.items()),
            key=lambda t: (sum(t[0]), tuple(-x for x in t[0]), t[1]),
        )

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def assemble(self, m: int, D: int) -> TruncatedSeries:
        total = TruncatedSeries.zero(m, D)
        for lam, b, c in self.sorted_terms():
            total = total + gq(lam, m, D).scale(c, b)
        return total

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "beta": b, "coeff": c} for lam, b, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "GQCombination":
        return cls({(tuple(t["partition"]), t["beta"]): t["coeff"] for t in data})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for lam, b, c in self.sorted_terms():
            beta = "" if b == 0 else ("b*" if b == 1 else f"b^{b}*")
            coef = "" if c == 1 else f"{c}*"
            out.append(f"{coef}{beta}GQ({','.join(map(str, lam))})")
        return " + ".join(out)


class ExpansionError(ValueError):
    def __init__(self, message: str, monomial=None, partial: GQCombination | None = None):
        super().__init__(message)
        self.monomial = monomial
        self.partial = partial


def expand_gq(F: TruncatedSeries, D: int | None = None) -> GQCombination:
    """Triangular expansion of a symmetric series in the ``GQ`` basis.

    Degrees are handled in ascending order and, within a degree, partitions
    in lexicographically decreasing order (a linear extension of dominance).
    """
    D = F.D if D is None else min(D, F.D)
    if F.m < D:
        raise ValueError(f"need at least D={D} variables, got m={F.m}")
    residual = F.truncate(D)
    found: dict[tuple[tuple[int, ...], int], int] = {}
    cache: dict[tuple[int, ...], TruncatedSeries] = {}
    for d in range(D + 1):
        for lam in sorted(strict_partitions(d), reverse=True):
            exps = tuple(lam) + (0,) * (F.m - len(lam))
            for (e, b), c in sorted(residual.terms.items()):
                if e != exps:
                    continue
                q, r = divmod(c, 2 ** len(lam))
                if r:
                    raise ExpansionError(
                        f"coefficient {c} of beta^{b} x^{lam} is not divisible by {2 ** len(lam)}",
                        (exps, b),
                        GQCombination(found),
                    )
                if lam not in cache:
                    cache[lam] = gq(lam, F.m, D)
                found[(lam, b)] = q
                residual = residual - cache[lam].scale(q, b)
    if not residual.is_zero():
        e, b, c = residual.sorted_terms()[0]
        raise ExpansionError(
            f"nonzero residual, e.g. {c} * beta^{b} x^{e}", (e, b), GQCombination(found)
        )
    return GQCombination(found)


def conjectured_expansion(w: SignedPermutation, D: int) -> GQCombination:
    """``lambda -> a_coeff(w, lambda)`` with beta-exponent ``|lambda| - l(w)``."""
    ell = coxeter_length(w)
    terms = {}
    for d in range(ell, D + 1):
        for lam in strict_partitions(d):
            c = a_coeff(w, lam)
            if c:
                terms[(lam, d - ell)] = c
    return GQCombination(terms)


def permute_variables(F: TruncatedSeries, perm: Sequence[int]) -> TruncatedSeries:
    return TruncatedSeries(
        F.m, F.D, {(tuple(e[perm[i]] for i in range(F.m)), b): v for (e, b), v in F.terms.items()}
    )


def all_variable_permutations(m: int):
    return permutations(range(m))
