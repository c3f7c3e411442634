"""Verification suites.

Each suite sweeps a finite family of instances, checks one identity per
instance and returns a :class:`SuiteReport`.  Instances are independent, so
they can be farmed out to worker processes; results are collected in task
order, which keeps reports identical for every worker count.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Sequence

from .decomposition_tableaux import (
    a_coeff,
    reading_word,
    rows_are_maximal_unimodal,
    validate_by_configurations,
    validate_by_definition,
)
from .kh_insertion import INF, inverse_kh, kh
from .residue_map import res_inverse, res_standard
from .shapes_tableaux import (
    SkewShape,
    enumerate_shset,
    restricted_shset_star,
    strict_partitions,
    strict_subpartitions,
    superstandard,
    tableau_peak_set,
)
from .signed_permutations import (
    SignedPermutation,
    all_signed_permutations,
    coxeter_length,
    demazure_product,
    hecke_words,
    make_grassmannian,
    make_wabk,
    product_split,
    top_element,
    trapezoid_shape,
)
from .symfunc import (
    ExpansionError,
    TruncatedSeries,
    conjectured_expansion,
    expand_gq,
    gc_factorizations,
    gc_operator,
    gq,
    multipeak,
)

SUITES = (
    "roundtrip",
    "counting",
    "expansion",
    "skew",
    "trapezoid",
    "res",
    "multipeak",
    "validators",
    "products",
)

MAX_COUNTEREXAMPLES = 20

# Expansions printed in the obstruction example, keyed by reduced word.
REFERENCE_EXPANSIONS: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {
    (1, 0, 2): {(3,): 1, (2, 1): 1, (3, 1): 1},
    (1, 0, 2, 1): {(3, 1): 1},
    (1, 0, 2, 1, 0): {(3, 2): 1},
}


def thread_limit(default: int = 1) -> int:
    """Worker count from ``KH_THREADS`` (at least 1)."""
    raw = os.environ.get("KH_THREADS", "").strip()
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"KH_THREADS must be an integer, got {raw!r}") from None


def run_tasks(fn: Callable, tasks: Sequence, threads: int | None = None) -> list:
    """``[fn(t) for t in tasks]``, possibly in worker processes, in task order."""
    threads = thread_limit() if threads is None else threads
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(threads, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


@dataclass
class VerifyConfig:
    letters: int = 3
    maxlen: int = 6
    extra_letters: int = 4
    extra_maxlen: int = 5
    window: int = 3
    counting_maxlen: int = 6
    m: int = 6
    degree: int = 6
    w: str | None = None
    skew_outer: tuple[int, ...] = (4, 3, 2, 1)
    trapezoids: tuple[tuple[int, int, int], ...] = ((1, 1, 1), (1, 2, 1), (1, 2, 2), (2, 2, 1))
    res_outer: tuple[int, ...] = (4, 2, 1)
    res_maxsize: int = 6
    multipeak_shapes: tuple[tuple[int, ...], ...] = ((1,), (2,), (2, 1), (3, 1))
    multipeak_degree: int = 4
    validator_outer: tuple[int, ...] = (3, 2, 1)
    validator_max_entry: int = 3
    products: tuple[tuple[tuple[int, ...], int, int, int], ...] = (
        ((1,), 1, 1, 1),
        ((1,), 1, 2, 1),
        ((1,), 1, 1, 2),
        ((2,), 1, 1, 2),
        ((2, 1), 1, 1, 2),
    )
    threads: int | None = None


@dataclass
class SuiteReport:
    suite: str
    passed: bool
    counts: dict[str, int] = field(default_factory=dict)
    runtime_s: float = 0.0
    counterexamples: list[Any] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self, timings: bool = True) -> dict:
        data = asdict(self)
        if not timings:
            data.pop("runtime_s")
        return data


def _finish(name: str, t0: float, counts: dict, bad: list, details: dict | None = None) -> SuiteReport:
    return SuiteReport(
        suite=name,
        passed=not bad,
        counts=counts,
        runtime_s=round(time.perf_counter() - t0, 3),
        counterexamples=bad[:MAX_COUNTEREXAMPLES],
        details=details or {},
    )


def _merge_counts(parts: Iterable[dict]) -> dict[str, int]:
    total: dict[str, int] = {}
    for p in parts:
        for k, v in p.items():
            total[k] = total.get(k, 0) + v
    return total


# ---------------------------------------------------------------- roundtrip


def step_lemma_violations(word: Sequence[int], traces) -> list[str]:
    """Bumping-path monotonicity and the size discipline of single row steps."""
    out = []
    for p, tr in enumerate(traces, start=1):
        rc, lc = tr.right_positions, tr.left_positions
        if any(rc[t] < rc[t + 1] for t in range(len(rc) - 1)):
            out.append(f"letter {p}: right path {rc} not weakly decreasing")
        if any(lc[t] < lc[t + 1] for t in range(len(lc) - 1)):
            out.append(f"letter {p}: left path {lc} not weakly decreasing")
        for e in tr.events:
            if not e.right_out > e.letter:
                out.append(f"letter {p}, row {e.row}: right output {e.right_out} <= input {e.letter}")
            if e.right_out != INF:
                if e.right_out == min(e.mid):
                    out.append(f"letter {p}, row {e.row}: right insertion output the dip")
                if not e.left_out < e.right_out:
                    out.append(f"letter {p}, row {e.row}: left output {e.left_out} >= input {e.right_out}")
    return out


def check_word(word: Sequence[int]) -> tuple[list[str], list[str]]:
    """``(bijection failures, step-lemma failures)`` for one word."""
    word = tuple(word)
    P, Q, traces = kh(word)
    bad = []
    if not validate_by_definition(P)[0]:
        bad.append("P fails the definition")
    if not validate_by_configurations(P):
        bad.append("P fails the configuration test")
    if not Q.is_standard() or Q.size != len(word) or Q.shape != SkewShape(tuple(len(r) for r in P)):
        bad.append("Q is not a standard set-valued tableau of shape(P)")
    if demazure_product(reading_word(P)) != demazure_product(word):
        bad.append("reading word of P is not Hecke equivalent to the input")
    if not bad:
        try:
            back = inverse_kh(P, Q)
        except ValueError as exc:
            bad.append(f"inverse raised: {exc}")
        else:
            if back != word:
                bad.append(f"inverse gave {list(back)}")
    return bad, step_lemma_violations(word, traces)


def _roundtrip_chunk(task: tuple[int, int, int]) -> dict:
    letters, length, first = task
    counts = {"words": 0, "bijection_failures": 0, "lemma_failures": 0}
    bad = []
    for rest in product(range(letters), repeat=length - 1):
        word = (first,) + rest
        counts["words"] += 1
        b, lem = check_word(word)
        counts["bijection_failures"] += bool(b)
        counts["lemma_failures"] += bool(lem)
        if b or lem:
            bad.append({"word": list(word), "bijection": b, "lemmas": lem[:3]})
    return {"counts": counts, "bad": bad[:MAX_COUNTEREXAMPLES]}


def words_tasks(letters: int, maxlen: int) -> list[tuple[int, int, int]]:
    return [(letters, n, a) for n in range(1, maxlen + 1) for a in range(letters)]


def suite_roundtrip(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    tasks = words_tasks(cfg.letters, cfg.maxlen)
    if cfg.extra_letters and cfg.extra_maxlen:
        tasks += words_tasks(cfg.extra_letters, cfg.extra_maxlen)
    parts = run_tasks(_roundtrip_chunk, tasks, cfg.threads)
    counts = _merge_counts(p["counts"] for p in parts)
    bad = [b for p in parts for b in p["bad"]]
    return _finish("roundtrip", t0, counts, bad)


# ---------------------------------------------------------------- counting


def counting_sides(w: SignedPermutation, p: int, _cache: dict | None = None) -> tuple[int, int]:
    """``|H_p(w)|`` and ``sum_lambda a(w, lambda) |ShSet_p(lambda)|``."""
    cache = {} if _cache is None else _cache
    lhs = len(hecke_words(w, p))
    rhs = 0
    for d in range(coxeter_length(w), p + 1):
        for lam in strict_partitions(d):
            key = (w, lam)
            if key not in cache:
                cache[key] = a_coeff(w, lam)
            if cache[key]:
                rhs += cache[key] * len(enumerate_shset(lam, p))
    return lhs, rhs


def hecke_coefficient_sides(w: SignedPermutation, n: int) -> tuple[int, int]:
    """Coefficient of ``beta^(n-l) x_1...x_n`` in ``G^C_w`` against ``2^n |H_n(w)|``."""
    ell = coxeter_length(w)
    if n < ell:
        return 0, 0
    series = gc_factorizations(w, n, n)
    return series.coefficient((1,) * n, n - ell), 2 ** n * len(hecke_words(w, n))


def _counting_one(task: tuple[list[int], int]) -> dict:
    window, maxlen = task
    w = SignedPermutation(tuple(window))
    cache: dict = {}
    rows, bad = [], []
    for p in range(maxlen + 1):
        lhs, rhs = counting_sides(w, p, cache)
        rows.append([p, lhs, rhs])
        if lhs != rhs:
            bad.append({"w": list(window), "p": p, "hecke_words": lhs, "tableau_side": rhs})
        got, want = hecke_coefficient_sides(w, p)
        if got != want:
            bad.append({"w": list(window), "n": p, "coefficient": got, "expected": want})
    return {"rows": rows, "bad": bad}


def suite_counting(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    elements = all_signed_permutations(cfg.window)
    tasks = [(list(w.padded(cfg.window)), cfg.counting_maxlen) for w in elements]
    parts = run_tasks(_counting_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p["bad"]]
    table = {str(SignedPermutation(tuple(t[0]))): p["rows"] for t, p in zip(tasks, parts)}
    details = {"table": table}
    ref = SignedPermutation((-2, 3, 1))
    if cfg.window >= 3:
        details["reference"] = {
            "w": str(ref),
            "p=3": table[str(ref)][3][1:] if cfg.counting_maxlen >= 3 else None,
            "p=4": table[str(ref)][4][1:] if cfg.counting_maxlen >= 4 else None,
        }
    counts = {"elements": len(elements), "identities": len(elements) * (cfg.counting_maxlen + 1) * 2}
    return _finish("counting", t0, counts, bad, details)


# ---------------------------------------------------------------- expansion


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        word = tuple(int(t) for t in text.replace(" ", ",").split(",") if t)
    except ValueError:
        raise ValueError(f"malformed word: {text!r}") from None
    if any(a < 0 for a in word):
        raise ValueError(f"letters must be nonnegative generator indices: {text!r}")
    return word


def _expansion_one(task: tuple[list[int], int, int, bool]) -> dict:
    window, m, D, dual = task
    w = SignedPermutation(tuple(window))
    bad: list[dict] = []
    F = gc_operator(w, m, D)
    ell = coxeter_length(w)
    out: dict[str, Any] = {"w": str(w), "length": ell}
    if dual and gc_factorizations(w, m, D) != F:
        bad.append({"w": list(window), "check": "operator vs factorizations"})
    if not F.is_symmetric():
        bad.append({"w": list(window), "check": "series not symmetric"})
    if not F.is_homogeneous(ell):
        bad.append({"w": list(window), "check": "beta-degree is not degree minus length"})
    try:
        got = expand_gq(F)
    except ExpansionError as exc:
        bad.append({"w": list(window), "check": "expansion failed", "error": str(exc)})
        out["bad"] = bad
        return out
    out["expansion"] = got.to_json()
    if not got.is_nonnegative():
        bad.append({"w": list(window), "check": "negative coefficient", "expansion": got.to_json()})
    want = conjectured_expansion(w, D)
    if got != want:
        bad.append(
            {
                "w": list(window),
                "check": "decomposition-tableau count differs",
                "expansion": got.to_json(),
                "tableau_count": want.to_json(),
            }
        )
    for word, ref in REFERENCE_EXPANSIONS.items():
        if demazure_product(word) == w and got.coefficients() != ref:
            bad.append({"w": list(window), "check": "reference expansion", "expected": str(ref)})
    out["bad"] = bad
    return out


def suite_expansion(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    if cfg.w is not None:
        word = parse_word(cfg.w)
        w = demazure_product(word)
        targets = [w]
    else:
        targets = all_signed_permutations(cfg.window)
    n = max([cfg.window] + [len(w.stable_window) for w in targets])
    tasks = [(list(w.padded(n)), cfg.m, cfg.degree, True) for w in targets]
    parts = run_tasks(_expansion_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p.pop("bad")]
    counts = {"elements": len(tasks), "degree": cfg.degree, "variables": cfg.m}
    return _finish("expansion", t0, counts, bad, {"expansions": parts})


# ---------------------------------------------------------------- skew / trapezoid


def skew_shapes(outer: Sequence[int]) -> list[SkewShape]:
    out = []
    for lam in strict_subpartitions(outer):
        for mu in strict_subpartitions(lam):
            if mu != lam:
                out.append(SkewShape(lam, mu))
    return out


def _skew_one(task: tuple[list[int], list[int], int, int]) -> dict:
    lam, mu, m, D = task
    shape = SkewShape(tuple(lam), tuple(mu))
    w, _ = top_element(shape)
    lhs, rhs = gc_operator(w, m, D), gq(shape, m, D)
    bad = []
    if lhs != rhs:
        diff = (lhs - rhs).sorted_terms()[:3]
        bad.append({"shape": str(shape), "w": str(w), "difference": [list(map(str, t)) for t in diff]})
    return {"bad": bad}


def suite_skew(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    shapes = skew_shapes(cfg.skew_outer)
    tasks = [(list(s.outer), list(s.inner), cfg.m, cfg.degree) for s in shapes]
    parts = run_tasks(_skew_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p["bad"]]
    return _finish("skew", t0, {"shapes": len(shapes)}, bad)


def _trapezoid_one(task: tuple[int, int, int, int, int]) -> dict:
    a, b, k, m, D = task
    w = make_wabk(a, b, k)
    lhs, rhs = gc_operator(w, m, D), gq(trapezoid_shape(a, b), m, D)
    return {"bad": [] if lhs == rhs else [{"a": a, "b": b, "k": k, "w": str(w)}]}


def suite_trapezoid(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    tasks = [(a, b, k, cfg.m, cfg.degree) for a, b, k in cfg.trapezoids]
    parts = run_tasks(_trapezoid_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p["bad"]]
    return _finish("trapezoid", t0, {"instances": len(tasks)}, bad)


# ---------------------------------------------------------------- residue map


def _res_one(task: tuple[list[int], int]) -> dict:
    lam, n = task
    lam = tuple(lam)
    w, _ = top_element(lam)
    tableaux = enumerate_shset(lam, n)
    words = set(hecke_words(w, n))
    P = superstandard(lam)
    bad = []
    images = set()
    for T in tableaux:
        word = res_standard(T)
        images.add(word)
        if word not in words:
            bad.append({"shape": list(lam), "tableau": T.to_json(), "check": "not a Hecke word"})
            continue
        if res_inverse(word, lam) != T:
            bad.append({"shape": list(lam), "tableau": T.to_json(), "check": "res_inverse(res(T)) != T"})
        P2, Q2, _ = kh(word)
        if P2 != P or Q2 != T:
            bad.append({"shape": list(lam), "word": list(word), "check": "kh(res(T)) != (P^lambda, T)"})
    if len(images) != len(tableaux) or images != words:
        bad.append({"shape": list(lam), "n": n, "check": "not a bijection",
                    "tableaux": len(tableaux), "hecke_words": len(words)})
    for word in sorted(words - images):
        try:
            T = res_inverse(word, lam)
            if res_standard(T) != word:
                bad.append({"shape": list(lam), "word": list(word), "check": "res(res_inverse(a)) != a"})
        except ValueError as exc:
            bad.append({"shape": list(lam), "word": list(word), "check": str(exc)})
    return {"tableaux": len(tableaux), "bad": bad}


def suite_res(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    shapes = [lam for lam in strict_subpartitions(cfg.res_outer) if lam]
    tasks = [(list(lam), n) for lam in shapes for n in range(sum(lam), cfg.res_maxsize + 1)]
    parts = run_tasks(_res_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p["bad"]]
    counts = {"shapes": len(shapes), "instances": len(tasks), "tableaux": sum(p["tableaux"] for p in parts)}
    return _finish("res", t0, counts, bad)


# ---------------------------------------------------------------- multipeak


def peak_expansion(shape: Sequence[int], m: int, D: int) -> TruncatedSeries:
    """``sum_T beta^(|T|-|shape|) K_Peak(T)`` over restricted standard tableaux."""
    size = sum(shape)
    total = TruncatedSeries.zero(m, D)
    for T in restricted_shset_star(shape, D):
        total = total + multipeak(tableau_peak_set(T), T.size, m, D).scale(1, T.size - size)
    return total


def _multipeak_one(task: tuple[list[int], int, int]) -> dict:
    lam, m, D = task
    ok = gq(tuple(lam), m, D) == peak_expansion(tuple(lam), m, D)
    return {"bad": [] if ok else [{"shape": lam, "m": m, "D": D}]}


def suite_multipeak(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    D = cfg.multipeak_degree
    tasks = [(list(lam), D, D) for lam in cfg.multipeak_shapes]
    parts = run_tasks(_multipeak_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p["bad"]]
    return _finish("multipeak", t0, {"shapes": len(tasks)}, bad)


# ---------------------------------------------------------------- validators


def _validators_one(task: tuple[list[int], int]) -> dict:
    lam, top = task
    lam = tuple(lam)
    cells = [(i, t) for i, n in enumerate(lam) for t in range(n)]
    counts = {"fillings": 0, "valid": 0, "literal_mismatches": 0}
    bad = []
    for values in product(range(top + 1), repeat=len(cells)):
        rows = [[] for _ in lam]
        for (i, _), v in zip(cells, values):
            rows[i].append(v)
        counts["fillings"] += 1
        by_def = validate_by_definition(rows)[0]
        if validate_by_configurations(rows) != by_def:
            bad.append({"rows": rows, "definition": by_def})
        counts["literal_mismatches"] += validate_by_configurations(rows, literal=True) != by_def
        if by_def:
            counts["valid"] += 1
            if not rows_are_maximal_unimodal(rows):
                bad.append({"rows": rows, "check": "rows are not maximal unimodal"})
    return {"counts": counts, "bad": bad}


def suite_validators(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    shapes = [lam for lam in strict_subpartitions(cfg.validator_outer) if lam]
    tasks = [(list(lam), cfg.validator_max_entry) for lam in shapes]
    parts = run_tasks(_validators_one, tasks, cfg.threads)
    counts = _merge_counts(p["counts"] for p in parts)
    literal = counts.pop("literal_mismatches")
    bad = [b for p in parts for b in p["bad"]]
    return _finish("validators", t0, counts, bad, {"literal_reading_mismatches": literal})


# ---------------------------------------------------------------- products


def product_element(lam: Sequence[int], a: int, b: int, k: int) -> SignedPermutation:
    return product_split(make_grassmannian(lam, k), make_wabk(a, b, k), k)


def product_sides(lam, a, b, k, m, D) -> tuple[TruncatedSeries, TruncatedSeries]:
    lhs = gc_operator(product_element(lam, a, b, k), m, D)
    rhs = gq(tuple(lam), m, D) * gq(trapezoid_shape(a, b), m, D)
    return lhs, rhs


def _products_one(task) -> dict:
    lam, a, b, k, m, D = task
    lhs, rhs = product_sides(lam, a, b, k, m, D)
    out: dict[str, Any] = {"lambda": list(lam), "a": a, "b": b, "k": k, "bad": []}
    if lhs != rhs:
        out["bad"].append({"lambda": list(lam), "a": a, "b": b, "k": k, "check": "G^C(uv) != GQ*GQ"})
        return out
    try:
        comb = expand_gq(lhs)
    except ExpansionError as exc:
        out["bad"].append({"lambda": list(lam), "a": a, "b": b, "k": k, "check": str(exc)})
        return out
    out["expansion"] = comb.to_json()
    if not comb.is_nonnegative():
        out["bad"].append({"lambda": list(lam), "a": a, "b": b, "k": k, "check": "negative coefficient"})
    return out


def suite_products(cfg: VerifyConfig) -> SuiteReport:
    t0 = time.perf_counter()
    tasks = [(list(lam), a, b, k, cfg.m, cfg.degree) for lam, a, b, k in cfg.products]
    parts = run_tasks(_products_one, tasks, cfg.threads)
    bad = [b for p in parts for b in p.pop("bad")]
    return _finish("products", t0, {"instances": len(tasks)}, bad, {"expansions": parts})


SUITE_FUNCTIONS: dict[str, Callable[[VerifyConfig], SuiteReport]] = {
    "roundtrip": suite_roundtrip,
    "counting": suite_counting,
    "expansion": suite_expansion,
    "skew": suite_skew,
    "trapezoid": suite_trapezoid,
    "res": suite_res,
    "multipeak": suite_multipeak,
    "validators": suite_validators,
    "products": suite_products,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> list[SuiteReport]:
    cfg = cfg or VerifyConfig()
    if name == "all":
        return [SUITE_FUNCTIONS[s](cfg) for s in SUITES]
    if name not in SUITE_FUNCTIONS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    return [SUITE_FUNCTIONS[name](cfg)]

