"""Command-line front end: ``dkn <command> ...``.

Exit status is 0 on success, 1 when a mathematical check fails (or a search
stops at its budget), and 2 on invalid input.
"""
from __future__ import annotations

import argparse
import datetime
import json
import os
import sys

from . import __version__, approx, bounds, characters, gap, sieve
from .errors import InvalidParameter, PreconditionFailed, SearchBudgetExceeded
from .tuples import (Checkpoint, PowerPolicy, TupleRecord, euler_family, extend,
                     search, search_digest, verify)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj, out=None):
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    (out or sys.stdout).write(text + "\n")


def _policy(args) -> PowerPolicy:
    return PowerPolicy(getattr(args, "allow_zero", False), getattr(args, "allow_negative", False))


def _record(args) -> TupleRecord:
    return TupleRecord.from_set(args.k, args.n, args.set)


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("DKN_WORKERS", "1")))
    except ValueError:
        return 1


# ------------------------------------------------------------------ handlers


def cmd_verify(args):
    t = _record(args)
    rep = verify(t, _policy(args))
    _emit({"record": t.to_json(), "report": rep.to_json()})
    return 0 if rep.ok else 1


def cmd_euler(args):
    t = euler_family(args.a, args.b)
    _emit({"a": args.a, "b": args.b, "record": t.to_json() if t else None})
    return 0 if t else 1


def cmd_extend(args):
    t = _record(args)
    xs = extend(t, args.max, _policy(args))
    _emit({"record": t.to_json(), "max": args.max, "extensions": xs})
    return 0


def _write_manifest(args, argv, outputs, digest):
    manifest = {
        "command": ["dkn", *argv],
        "tool_version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "input_digest": digest,
        "outputs": outputs,
    }
    with open(args.out + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_search(args, argv):
    policy = _policy(args)
    resume = None
    if args.resume:
        with open(args.resume) as fh:
            resume = Checkpoint.loads(fh.read())
    workers = args.workers or _default_workers()
    status = 0
    checkpoint = None
    try:
        records = search(args.n, args.k, args.m, args.max, policy=policy,
                         workers=workers, node_budget=args.budget, resume=resume)
    except SearchBudgetExceeded as exc:
        records, checkpoint, status = exc.partial, exc.checkpoint, 1
        print(f"dkn: {exc}", file=sys.stderr)
    lines = "".join(r.dumps() + "\n" for r in records)
    outputs = []
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(lines)
        outputs.append(args.out)
    else:
        sys.stdout.write(lines)
    if checkpoint is not None:
        path = args.checkpoint or (args.out + ".checkpoint.json" if args.out else None)
        if path:
            with open(path, "w") as fh:
                fh.write(checkpoint.dumps() + "\n")
            outputs.append(path)
            print(f"dkn: checkpoint written to {path}", file=sys.stderr)
        else:
            print(f"dkn: checkpoint {checkpoint.dumps()}", file=sys.stderr)
    if args.out:
        _write_manifest(args, argv, outputs, search_digest(args.n, args.k, args.m, args.max, policy))
    return status


def cmd_gap(args):
    if args.which == "gyar":
        res = gap.check_gyar(args.a, args.b, args.c, args.d, args.n, args.k)
    elif args.which == "abcd":
        res = gap.check_abcd(args.a, args.b, args.c, args.d, args.n)
    elif args.which == "neg":
        res = gap.check_gap_neg(args.a, args.b, args.c, args.d, args.n, args.k)
    else:
        t = TupleRecord.from_set(args.k, args.n, args.set)
        sign = 1 if args.n > 0 else -1
        verdicts = gap.growth_certificate(t, sign, args.L, check_property=not args.no_verify)
        _emit({"record": t.to_json(), "verdicts": [{"j": j, "holds": h} for j, h in verdicts]})
        return 0 if all(h for _, h in verdicts) else 1
    _emit(res.to_json())
    return 0 if res.holds else 1


def _residues(text, p, units):
    if text == "all":
        return list(range(1 if units else 0, p))
    return _ints(text)


def cmd_char_sum(args):
    chi = characters.make_character(args.p, args.k)
    A = _residues(args.A, args.p, True)
    B = _residues(args.B, args.p, False)
    res = characters.char_sum(chi, A, B, args.n)
    _emit({"p": args.p, "k": args.k, "g": chi.g, "n": args.n, **res.to_json()})
    return 0 if res.holds else 1


def _write_csv(report, path):
    with open(path, "w") as fh:
        fh.write("\n".join(report.csv_rows()) + "\n")


def cmd_sieve(args):
    if args.which == "pnt-check":
        _emit(sieve.pnt_check(args.Q, args.k, args.a).to_json())
        return 0
    if args.which == "gallagher":
        rep = sieve.gallagher_bound(args.set, args.N, args.Q, args.mod)
        status = 0 if rep.bound is None or len(set(args.set)) <= rep.bound else 1
    else:
        rep = sieve.apriori_sieve_bound(args.n, args.k, args.Q)
        status = 0
    if args.csv:
        _write_csv(rep, args.csv)
    _emit(rep.to_json())
    return status


def cmd_approx(args):
    if args.which == "height":
        _emit(approx.height_of_root(args.a1, args.a2, args.k).to_json())
        return 0
    t = _record(args)
    if args.which == "pairs":
        _emit({"record": t.to_json(), "pairs": [p.to_json() for p in approx.solution_pairs(t)]})
        return 0
    indices = [args.i] if args.i else list(range(3, t.m + 1))
    checks = [approx.approx_check(t, i) for i in indices]
    _emit({"record": t.to_json(), "checks": [c.to_json() for c in checks]})
    return 0


def cmd_bounds(args):
    w = args.which
    if w == "evertse":
        _emit({"r": args.r, "kappa": args.kappa, "value": bounds.evertse_count(args.r, args.kappa)})
        return 0
    if w == "large":
        rep = bounds.effective_large_bound(args.k, args.refined)
    elif w == "main-term":
        rep = bounds.main_term(args.n, args.k)
    elif w == "q0":
        rep = bounds.q0_report(args.k)
    elif w == "prior":
        rep = bounds.prior_bounds(args.n, args.k)
    else:
        rows = bounds.bounds_table(args.n, args.k)
        if args.table:
            print(bounds.markdown_table(rows))
        else:
            _emit([r.to_json() for r in rows])
        return 0
    _emit(rep.to_json())
    return 0


# ------------------------------------------------------------------ parser


def _tuple_args(p, with_set=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    if with_set:
        p.add_argument("--set", type=_ints, required=True, help="comma-separated elements")


def _policy_args(p):
    p.add_argument("--allow-zero", action="store_true", help="admit a*b + n = 0")
    p.add_argument("--allow-negative", action="store_true",
                   help="admit negative k-th powers for odd k")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dkn", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check property D_k(n) for a set")
    _tuple_args(p)
    _policy_args(p)

    p = sub.add_parser("euler", help="Euler's D(1) quadruple from a < b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("extend", help="all x <= max extending a D_k(n) set")
    _tuple_args(p)
    p.add_argument("--max", type=int, required=True)
    _policy_args(p)

    p = sub.add_parser("search", help="exhaustive search for m-tuples in [1, max]")
    _tuple_args(p, with_set=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", help="JSON Lines results file")
    p.add_argument("--workers", type=int, default=None, help="default: $DKN_WORKERS or 1")
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.add_argument("--checkpoint", help="where to write a checkpoint if the budget runs out")
    p.add_argument("--resume", help="checkpoint file to resume from")
    _policy_args(p)

    g = sub.add_parser("gap-check", help="gap-principle inequalities")
    gs = g.add_subparsers(dest="which", required=True)
    for name in ("gyar", "abcd", "neg"):
        p = gs.add_parser(name)
        for v in "abcd":
            p.add_argument(f"--{v}", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if name != "abcd":
            p.add_argument("--k", type=int, required=True)
    p = gs.add_parser("growth")
    _tuple_args(p)
    p.add_argument("--L", type=int, default=3)
    p.add_argument("--no-verify", action="store_true", help="skip the D_k(n) check")

    p = sub.add_parser("char-sum", help="bilinear sum of an order-k character mod p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--A", default="all", help="comma-separated units, or 'all'")
    p.add_argument("--B", default="all", help="comma-separated residues, or 'all'")

    s = sub.add_parser("sieve", help="larger-sieve bounds")
    ss = s.add_subparsers(dest="which", required=True)
    p = ss.add_parser("gallagher")
    p.add_argument("--set", type=_ints, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--mod", type=int, default=1, help="use primes p = 1 mod this (1: all)")
    p.add_argument("--csv", help="write per-prime rows here")
    p = ss.add_parser("apriori")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--Q", type=int, default=None)
    p.add_argument("--csv", help="write per-prime rows here")
    p = ss.add_parser("pnt-check")
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, default=1)

    a = sub.add_parser("approx", help="approximations to (a1/a2)^(1/k)")
    asub = a.add_subparsers(dest="which", required=True)
    p = asub.add_parser("pairs")
    _tuple_args(p)
    p = asub.add_parser("height")
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = asub.add_parser("check")
    _tuple_args(p)
    p.add_argument("--i", type=int, default=None, help="1-based element index (default: all)")

    b = sub.add_parser("bounds", help="closed-form bounds")
    bsub = b.add_subparsers(dest="which", required=True)
    p = bsub.add_parser("evertse")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kappa", type=float, required=True)
    p = bsub.add_parser("large")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--refined", action="store_true")
    for name in ("main-term", "prior", "table"):
        p = bsub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        if name == "table":
            p.add_argument("--table", action="store_true", help="Markdown instead of JSON")
    p = bsub.add_parser("q0")
    p.add_argument("--k", type=int, required=True)
    return ap


HANDLERS = {
    "verify": cmd_verify, "euler": cmd_euler, "extend": cmd_extend,
    "gap-check": cmd_gap, "char-sum": cmd_char_sum, "sieve": cmd_sieve,
    "approx": cmd_approx, "bounds": cmd_bounds,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "search":
            return cmd_search(args, argv)
        return HANDLERS[args.command](args)
    except (InvalidParameter, PreconditionFailed) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        return 2
    except OSError as exc:
        print(f"dkn: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
