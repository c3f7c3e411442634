"""Command-line entry point: ``python -m shifted_hecke <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from .decomposition_tableaux import (
    enumerate_sdt,
    render_rows,
    sdts_for,
    validate_by_definition,
)
from .kh_insertion import inverse_kh, kh
from .shapes_tableaux import SetValuedTableau, SkewShape, enumerate_shset, parse_skew_shape
from .signed_permutations import (
    SignedPermutation,
    all_signed_permutations,
    coxeter_length,
    demazure_product,
    hecke_words,
    trapezoid_shape,
)
from .symfunc import ExpansionError, expand_gq, gc_operator, gq
from .verify import SUITES, VerifyConfig, parse_word, product_element, run_suite


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _element(args) -> tuple[SignedPermutation, str]:
    if args.window is not None:
        w = SignedPermutation.parse(args.window)
        return w, f"window [{args.window}]"
    word = parse_word(args.perm)
    return demazure_product(word), f"word ({','.join(map(str, word))})"


def _parse_product(text: str):
    """``"(lambda);(a,b,k)"`` with ``k`` optional (defaults to ``lambda_1``)."""
    try:
        lam_text, abk_text = text.split(";")
        lam = tuple(int(v) for v in lam_text.strip().strip("()").split(",") if v.strip())
        abk = tuple(int(v) for v in abk_text.strip().strip("()").split(",") if v.strip())
    except ValueError:
        raise ValueError(f"malformed product target {text!r}; expected '(lambda);(a,b,k)'") from None
    if len(abk) == 2:
        abk = abk + (lam[0] if lam else 0,)
    if len(abk) != 3:
        raise ValueError(f"product target needs (a,b) or (a,b,k), got {abk}")
    return lam, abk


# ---------------------------------------------------------------- commands


def cmd_insert(args) -> int:
    word = parse_word(args.word)
    P, Q, traces = kh(word)
    payload = {
        "word": list(word),
        "P": [list(r) for r in P],
        "Q": Q.to_json(),
        "trace": [[e.to_json() for e in tr.events] for tr in traces],
    }
    lines = ["P:", render_rows(P) or "(empty)", "Q:", Q.render() or "(empty)", "trace:"]
    for p, tr in enumerate(traces, start=1):
        lines.append(f"  {p}: insert {word[p - 1]}  rules {' '.join(tr.rules)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _load_pair(args):
    if args.file:
        with open(args.file) as fh:
            data = json.load(fh)
        rows, qdata = data["P"], data["Q"]
    else:
        rows = json.loads(args.P)
        qdata = json.loads(args.Q)
    rows = tuple(tuple(r) for r in rows)
    if isinstance(qdata, dict):
        Q = SetValuedTableau.from_json(qdata)
    else:
        Q = SetValuedTableau.from_rows(SkewShape(tuple(len(r) for r in qdata)), qdata)
    return rows, Q


def cmd_inverse(args) -> int:
    rows, Q = _load_pair(args)
    ok, why = validate_by_definition(rows)
    if not ok:
        raise ValueError(f"P is not a strict decomposition tableau: {why}")
    word = inverse_kh(rows, Q)
    _emit(args, {"word": list(word)}, ",".join(map(str, word)))
    return 0


def cmd_expand(args) -> int:
    m = args.m if args.m is not None else args.degree
    D = args.degree
    payload: dict = {"degree": D, "variables": m}
    if args.skew is not None:
        shape = parse_skew_shape(args.skew)
        payload["target"] = {"skew": str(shape)}
        F = gq(shape, m, D)
    elif args.product is not None:
        lam, (a, b, k) = _parse_product(args.product)
        w = product_element(lam, a, b, k)
        F = gc_operator(w, m, D)
        rhs = gq(lam, m, D) * gq(trapezoid_shape(a, b), m, D)
        payload["target"] = {"lambda": list(lam), "a": a, "b": b, "k": k, "w": str(w)}
        payload["product_identity"] = F == rhs
    else:
        w, label = _element(args)
        payload["target"] = {"element": str(w), "from": label, "length": coxeter_length(w)}
        F = gc_operator(w, m, D)
    try:
        comb = expand_gq(F, D)
    except ExpansionError as exc:
        payload.update(ok=False, error=str(exc))
        if exc.partial is not None:
            payload["partial"] = exc.partial.to_json()
        _emit(args, payload, f"expansion failed: {exc}")
        return 1
    payload.update(ok=True, expansion=comb.to_json(), nonnegative=comb.is_nonnegative())
    ok = payload.get("product_identity", True)
    text = str(comb)
    if not comb.is_nonnegative():
        text += "\n(negative coefficient present)"
    if not ok:
        text += "\nG^C of the product differs from the product of GQ functions"
    _emit(args, payload, text)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    cfg = VerifyConfig()
    overrides = {
        k: getattr(args, k)
        for k in ("letters", "maxlen", "window", "m", "degree", "w")
        if getattr(args, k) is not None
    }
    if "maxlen" in overrides:
        overrides["counting_maxlen"] = overrides["maxlen"]
    if args.no_extra:
        overrides.update(extra_letters=0, extra_maxlen=0)
    if args.threads is not None:
        overrides["threads"] = args.threads
    cfg = replace(cfg, **overrides)
    reports = run_suite(args.suite, cfg)
    passed = all(r.passed for r in reports)
    payload = {"passed": passed, "suites": [r.to_json(timings=not args.no_timings) for r in reports]}
    lines = []
    for r in reports:
        counts = ", ".join(f"{k}={v}" for k, v in r.counts.items())
        timing = "" if args.no_timings else f" ({r.runtime_s:.2f}s)"
        lines.append(f"{r.suite:<11} {'PASS' if r.passed else 'FAIL'}{timing}  {counts}")
        for c in r.counterexamples[:5]:
            lines.append(f"    counterexample: {json.dumps(c)}")
    _emit(args, payload, "\n".join(lines))
    return 0 if passed else 1


def cmd_enumerate(args) -> int:
    kind = args.kind
    items: list = []
    if kind == "hecke":
        w, _ = _element(args)
        items = [list(x) for x in hecke_words(w, args.length)]
        text = "\n".join(",".join(map(str, x)) for x in items)
    elif kind == "sdt":
        shape = tuple(parse_skew_shape(args.shape).outer)
        if args.perm is not None or args.window is not None:
            w, _ = _element(args)
            found = sdts_for(w, shape)
        else:
            found = enumerate_sdt(shape, args.max_letter)
        items = [[list(r) for r in t] for t in found]
        text = "\n\n".join(render_rows(t) for t in found)
    elif kind == "shset":
        shape = parse_skew_shape(args.shape)
        found = enumerate_shset(shape, args.length)
        items = [t.to_json() for t in found]
        text = "\n\n".join(t.render() for t in found)
    elif kind == "signed":
        found = all_signed_permutations(args.n)
        items = [list(w.padded(args.n)) for w in found]
        text = "\n".join(",".join(map(str, x)) for x in items)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(kind)
    _emit(args, {"kind": kind, "count": len(items), "items": items}, text + f"\n({len(items)} found)")
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="shifted-hecke", description=__doc__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    p = sub.add_parser("insert", help="insert a word, print (P, Q) and the bumping trace")
    p.add_argument("word", nargs="?", default="", help='comma separated letters, e.g. "1,2,0"')
    common(p)
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("inverse", help="recover the word of an insertion/recording pair")
    p.add_argument("--P", help="rows as JSON, e.g. '[[2,0],[1]]'")
    p.add_argument("--Q", help="rows of sets as JSON, e.g. '[[[1],[2]],[[3]]]'")
    p.add_argument("--file", help="JSON file with keys P and Q (as printed by insert --json)")
    common(p)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("expand", help="expand a G^C or GQ function in the GQ basis")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--perm", help='a Hecke word, e.g. "1,0,2" ("" for the identity)')
    g.add_argument("--window", help='a signed permutation window, e.g. "-2,3,1"')
    g.add_argument("--skew", help='a shifted skew shape, e.g. "(2,1)/(1)"')
    g.add_argument("--product", help='"(lambda);(a,b,k)", e.g. "(1);(1,1,1)"')
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--m", type=int, default=None, help="number of variables (default: degree)")
    common(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--letters", type=int)
    p.add_argument("--maxlen", type=int)
    p.add_argument("--window", type=int, help="rank n of the group W_n swept by counting/expansion")
    p.add_argument("--degree", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--w", help='restrict the expansion suite to one word, e.g. "1,0,2"')
    p.add_argument("--threads", type=int, help="overrides KH_THREADS")
    p.add_argument("--no-extra", action="store_true", help="skip the second (4-letter) roundtrip sweep")
    p.add_argument("--no-timings", action="store_true", help="omit runtimes for byte-stable reports")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list Hecke words, tableaux or group elements")
    p.add_argument("kind", choices=("hecke", "sdt", "shset", "signed"))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--perm", help="a Hecke word naming the element")
    g.add_argument("--window", help="a signed permutation window")
    p.add_argument("--length", type=int, default=0, help="word length / tableau size")
    p.add_argument("--shape", default="", help='shape such as "(3,1)"')
    p.add_argument("--max-letter", type=int, default=3, dest="max_letter")
    p.add_argument("--n", type=int, default=2, help="rank for 'signed'")
    common(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate" and args.kind == "hecke":
        if args.perm is None and args.window is None:
            parser.error("enumerate hecke needs --perm or --window")
    if args.command == "inverse" and not args.file and (args.P is None or args.Q is None):
        parser.error("inverse needs --file or both --P and --Q")
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        if args.json:
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
