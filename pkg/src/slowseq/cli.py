"""Command-line interface.

Every subcommand validates ``--rec`` before doing any work.  Exit status:
0 on success, 1 on any validation or usage problem (one-line diagnostic
on stderr), 2 when ``verify`` finds a mismatch.  With ``--json`` the
output is a single JSON document conforming to the shipped schema
(``schemas/cli_output.schema.json``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import asymptotics, nested, trees, zeckendorf
from .errors import SlowSeqError
from .recurrence import LinearRecurrence, SequenceCache, parse_recurrence

#: Recurrences exercised by the default ``verify`` run.
DEFAULT_SUITE = ["2", "3", "1,1", "1,0,1", "2,1", "1,2,0,3"]
DEFAULT_SHIFTS = [0, 1, 3]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's 2
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="slowseq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, shift: bool = True) -> None:
        p.add_argument("--rec", required=True, help="coefficients, e.g. 1,2,0,3")
        if shift:
            p.add_argument("--shift", type=int, default=0)
        p.add_argument("--json", action="store_true")
        p.add_argument("--budget", type=int, default=10**6,
                       help="node/index budget")

    p = sub.add_parser("seq", help="terms of the linear recurrence")
    common(p, shift=False)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--format", choices=["text", "bfile"], default="text")

    p = sub.add_parser("slow", help="the slow sequence")
    common(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--route", choices=["recurrence", "oracle", "frequency"],
                   default="recurrence")
    p.add_argument("--format", choices=["text", "bfile"], default="text")

    p = sub.add_parser("tree", help="tree rendering")
    tree_sub = p.add_subparsers(dest="tree_command", required=True)
    q = tree_sub.add_parser("render")
    common(q)
    group = q.add_mutually_exclusive_group(required=True)
    group.add_argument("--finite", type=int, metavar="J")
    group.add_argument("--skeleton", type=int, metavar="T")
    q.add_argument("--labels", type=int, metavar="N",
                   help="label a skeleton truncation with 1..N")

    p = sub.add_parser("recurrence", help="nested recurrence display")
    rec_sub = p.add_subparsers(dest="rec_command", required=True)
    q = rec_sub.add_parser("print")
    common(q)
    q.add_argument("--name", default="C")

    p = sub.add_parser("zeck", help="digit codec")
    zeck_sub = p.add_subparsers(dest="zeck_command", required=True)
    q = zeck_sub.add_parser("encode")
    common(q, shift=False)
    q.add_argument("number", type=int)
    q = zeck_sub.add_parser("decode")
    common(q, shift=False)
    q.add_argument("digits")
    q = zeck_sub.add_parser("enumerate")
    common(q, shift=False)
    q.add_argument("--count", type=int, required=True)

    p = sub.add_parser("freq", help="frequency of a value in the slow sequence")
    common(p)
    p.add_argument("number", type=int)

    p = sub.add_parser("verify", help="cross-validate the construction routes")
    p.add_argument("--rec", action="append", default=None,
                   help="repeatable; defaults to the built-in suite")
    p.add_argument("--shift", type=int, action="append", default=None)
    p.add_argument("--n-max", type=int, default=1000)
    p.add_argument("--mode", choices=["theorem", "three-route"],
                   default="three-route")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=10**6)

    p = sub.add_parser("asympt", help="dominant root and density")
    common(p)
    p.add_argument("--n", type=int, default=None,
                   help="also report the empirical ratio at this index")
    p.add_argument("--tol", type=float, default=asymptotics.DEFAULT_TOL)

    return parser


def _emit(args, payload: dict, text: str, out) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(text, file=out)


def _sequence_output(args, values: list[int], start: int) -> str:
    if getattr(args, "format", "text") == "bfile":
        return "\n".join(
            f"{n} {v}" for n, v in enumerate(values, start=start)
        )
    return " ".join(str(v) for v in values)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    """Entry point; returns the exit status instead of raising SystemExit."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"slowseq: {exc}", file=err)
        return 1
    try:
        return _dispatch(args, out, err)
    except (SlowSeqError, ValueError) as exc:
        print(f"slowseq: {exc}", file=err)
        return 1


def _dispatch(args, out, err) -> int:
    if args.command == "verify":
        return _cmd_verify(args, out, err)
    rec = parse_recurrence(args.rec)
    handler = {
        "seq": _cmd_seq,
        "slow": _cmd_slow,
        "tree": _cmd_tree,
        "recurrence": _cmd_recurrence,
        "zeck": _cmd_zeck,
        "freq": _cmd_freq,
        "asympt": _cmd_asympt,
    }[args.command]
    return handler(args, rec, out)


def _cmd_seq(args, rec: LinearRecurrence, out) -> int:
    cache = SequenceCache(rec, index_budget=args.budget)
    values = cache.prefix(args.n_max)
    payload = {"command": "seq", "rec": rec.text(), "start": 0,
               "values": values}
    _emit(args, payload, _sequence_output(args, values, start=0), out)
    return 0


def _cmd_slow(args, rec: LinearRecurrence, out) -> int:
    if args.n_max > args.budget:
        raise SlowSeqError(f"n-max {args.n_max} exceeds budget {args.budget}")
    if args.route == "oracle":
        values = trees.leaf_count_prefix(rec, args.shift, args.n_max)
    elif args.route == "frequency":
        values = zeckendorf.frequencies_to_slow(rec, args.shift, args.n_max)
    else:
        values = nested.eval_slow(rec, args.shift, args.n_max).prefix()
    payload = {"command": "slow", "rec": rec.text(), "shift": args.shift,
               "route": args.route, "start": 1, "values": values}
    _emit(args, payload, _sequence_output(args, values, start=1), out)
    return 0


def _cmd_tree(args, rec: LinearRecurrence, out) -> int:
    if args.finite is not None:
        tree = trees.build_finite_tree(rec, args.finite, budget=args.budget)
        labeled = None
    else:
        tree = trees.build_skeleton(rec, args.skeleton, budget=args.budget)
        labeled = None
        if args.labels is not None:
            labeled = trees.label_skeleton(tree, args.shift, args.labels)
    shown = labeled.tree if labeled is not None else tree
    payload = {"command": "tree", "rec": rec.text(),
               "kind": tree.kind, "height": tree.height,
               "nodes": trees.to_nested_list(shown)}
    _emit(args, payload, trees.render_tree(tree, labeled), out)
    return 0


def _cmd_recurrence(args, rec: LinearRecurrence, out) -> int:
    exprs = nested.build_recurrence(rec, args.shift)
    text = nested.render(exprs, args.name)
    payload = {"command": "recurrence", "rec": rec.text(),
               "shift": args.shift, "rendered": text,
               "depths": list(rec.mu_table)}
    _emit(args, payload, text, out)
    return 0


def _cmd_zeck(args, rec: LinearRecurrence, out) -> int:
    if args.zeck_command == "encode":
        digits = zeckendorf.encode_fast(rec, args.number)
        text = zeckendorf.digits_to_text(rec, digits)
        payload = {"command": "zeck-encode", "rec": rec.text(),
                   "number": args.number, "digits": list(digits),
                   "text": text}
        _emit(args, payload, text, out)
    elif args.zeck_command == "decode":
        digits = zeckendorf.text_to_digits(rec, args.digits)
        number = zeckendorf.decode_fast(rec, digits)
        payload = {"command": "zeck-decode", "rec": rec.text(),
                   "digits": list(digits), "number": number}
        _emit(args, payload, str(number), out)
    else:
        seqs = zeckendorf.enumerate_valid(rec, args.count)
        texts = [zeckendorf.digits_to_text(rec, d) for d in seqs]
        payload = {"command": "zeck-enumerate", "rec": rec.text(),
                   "count": args.count, "sequences": texts}
        _emit(args, payload, "\n".join(texts), out)
    return 0


def _cmd_freq(args, rec: LinearRecurrence, out) -> int:
    count = zeckendorf.frequency(rec, args.shift, args.number)
    payload = {"command": "freq", "rec": rec.text(), "shift": args.shift,
               "number": args.number, "frequency": count}
    _emit(args, payload, str(count), out)
    return 0


def _cmd_asympt(args, rec: LinearRecurrence, out) -> int:
    kappa = asymptotics.dominant_root(rec, args.tol)
    ratio = 1.0 - 1.0 / kappa
    payload = {"command": "asympt", "rec": rec.text(), "kappa": kappa,
               "limit_ratio": ratio}
    lines = [f"kappa = {kappa:.10f}", f"limit ratio = {ratio:.10f}"]
    if args.n is not None:
        emp = asymptotics.empirical_ratio(rec, args.shift, args.n)
        payload["empirical_ratio"] = float(emp)
        payload["empirical_n"] = args.n
        lines.append(f"empirical ratio at n={args.n}: {float(emp):.10f}")
    _emit(args, payload, "\n".join(lines), out)
    return 0


def _cmd_verify(args, out, err) -> int:
    rec_texts = args.rec if args.rec else DEFAULT_SUITE
    shifts = args.shift if args.shift else DEFAULT_SHIFTS
    recs = [parse_recurrence(t) for t in rec_texts]
    results = []
    ok = True
    for rec in recs:
        for s in shifts:
            entry = {"rec": rec.text(), "shift": s, "n_max": args.n_max}
            if args.mode == "theorem":
                report = nested.verify_theorem(rec, s, args.n_max)
                entry["mismatches"] = [list(m) for m in report.mismatches]
                entry["ok"] = report.ok
            else:
                oracle = trees.leaf_count_prefix(rec, s, args.n_max)
                recur = nested.eval_slow(rec, s, args.n_max).prefix()
                freq = zeckendorf.frequencies_to_slow(rec, s, args.n_max)
                bad = [
                    [n + 1, oracle[n], recur[n], freq[n]]
                    for n in range(args.n_max)
                    if not oracle[n] == recur[n] == freq[n]
                ]
                entry["mismatches"] = bad
                entry["ok"] = not bad
            ok = ok and entry["ok"]
            results.append(entry)
    payload = {"command": "verify", "mode": args.mode, "ok": ok,
               "results": results}
    if args.json:
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        for entry in results:
            status = "ok" if entry["ok"] else "MISMATCH"
            print(f"{entry['rec']} shift={entry['shift']} "
                  f"n_max={entry['n_max']}: {status}", file=out)
        print("all routes agree" if ok else "MISMATCHES FOUND", file=out)
    return 0 if ok else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
