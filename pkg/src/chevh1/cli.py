"""
Command-line entry point ``chevh1``.

Subcommands: ``h1``, ``hasse``, ``weights``, ``verify``, ``linkage``.
JSON output is wrapped in an envelope ``{schema_version, query, result}``.

Exit codes: 0 success (or a proved dimension), 1 bad flags, 2 a failing
verification check, 3 an open case, 4 a query outside every result.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import paperchecks
from .charweights import RankGuardError, format_table, support_to_json, weight_support, dominant_mults
from .fixtures import format_weight
from .h1 import OPEN_CASE, OUT_OF_SCOPE, Query, h1_dim, is_prime
from .posets import HasseDiagram, hasse
from .rootsys import RootSystemError, RootSystemId, build, build_label
from .weyl import dot_canonical_rep

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_OPEN, EXIT_OUT = 0, 1, 2, 3, 4
WEIGHTS_RANK_GUARD = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def envelope(query: dict, result) -> dict:
    # normalise tuples to lists so the envelope equals its own JSON round trip
    return json.loads(json.dumps({"schema_version": SCHEMA_VERSION, "query": query, "result": result}))


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------- parsing

def parse_system(type_: str, rank: Optional[int]):
    """``(RootSystem, label)`` from ``--type`` and ``--rank``.

    ``--type`` may also carry a full label such as ``E8`` or ``A1xA1``.
    """
    try:
        if rank is None:
            rs = build_label(type_)
        else:
            rs = build(RootSystemId(type_.strip().upper(), rank))
    except (RootSystemError, ValueError, KeyError) as exc:
        raise UsageError(f"bad root system: {exc}") from exc
    return rs, rs.label


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.replace(" ", "").split(",") if t != "")
    except ValueError as exc:
        raise UsageError(f"bad weight {text!r}: expected comma-separated integers") from exc
    if len(vals) != rank:
        raise UsageError(f"weight {text!r} has {len(vals)} coordinates, rank is {rank}")
    return vals


def parse_primes(text: str) -> list[int]:
    """``"5..31"`` (primes in the closed range) or a comma list of primes."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split(".."))
            ps = [x for x in range(lo, hi + 1) if is_prime(x)]
            if not ps:
                raise UsageError(f"no primes in {text!r}")
            return ps
        ps = [int(t) for t in text.split(",") if t]
    except ValueError as exc:
        raise UsageError(f"bad prime range {text!r}") from exc
    if not ps:
        raise UsageError("empty prime list")
    bad = [x for x in ps if not is_prime(x)]
    if bad:
        raise UsageError(f"not prime: {bad}")
    return ps


def _lambda_arg(args, rs) -> tuple[int, ...]:
    if getattr(args, "fundamental", None) is not None:
        if args.lam is not None:
            raise UsageError("give either --lambda or --fundamental, not both")
        if not 1 <= args.fundamental <= rs.rank:
            raise UsageError(f"--fundamental must lie in 1..{rs.rank}")
        return rs.fundamental(args.fundamental)
    if args.lam is None:
        raise UsageError("--lambda is required")
    return parse_weight(args.lam, rs.rank)


# ---------------------------------------------------------------- cache

def cache_dir(args) -> Optional[Path]:
    d = os.environ.get("CHEVH1_CACHE") or getattr(args, "cache", None)
    return Path(d) if d else None


def cache_key(command: str, query: dict) -> str:
    blob = json.dumps([command, query, SCHEMA_VERSION], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cached(args, command: str, query: dict, compute):
    d = cache_dir(args)
    if d is None:
        return compute()
    path = d / f"{command}-{cache_key(command, query)}.json"
    if path.exists():
        return json.loads(path.read_text())
    env = compute()
    d.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(dumps(env))
    tmp.replace(path)
    return env


def emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------- commands

def cmd_h1(args) -> int:
    if args.rank is None:
        raise UsageError("--rank is required")
    try:
        rid = RootSystemId(args.type.strip().upper(), args.rank)
    except (RootSystemError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    rs = build(rid)
    lam = parse_weight(args.lam, rs.rank) if args.lam is not None else None
    if lam is None:
        raise UsageError("--lambda is required")
    try:
        q = Query(rid, args.p, args.r, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = h1_dim(q)
    if args.format == "json":
        emit(args, dumps(envelope(q.to_json(), res.to_json())))
    else:
        lines = [f"system   {rid}", f"p, r     {q.p}, {q.r} (q = {q.q})",
                 f"lambda   {format_weight(lam)}", f"status   {res.status}",
                 f"dim      {'unknown' if res.dim is None else res.dim}", f"rule     {res.rule}"]
        if res.violated:
            lines.append(f"missing  {res.violated}")
        lines.append("trace")
        for t in res.trace:
            mark = "*" if t.fired else "-"
            lines.append(f"  {mark} {t.rule}" + (f": {t.note}" if t.note else ""))
        emit(args, "\n".join(lines))
    if res.status == OPEN_CASE:
        return EXIT_OPEN
    if res.status == OUT_OF_SCOPE:
        return EXIT_OUT
    return EXIT_OK


def hasse_to_dot(hd: HasseDiagram) -> str:
    """DOT digraph; nodes labelled by coordinates, edges from larger to smaller."""
    def nid(v):
        return '"' + ",".join(map(str, v)) + '"'

    lines = [f'digraph "{hd.system} {",".join(map(str, hd.top))}" {{', "  rankdir=TB;",
             "  node [shape=box];"]
    for v in hd.vertices:
        attrs = [f'label="{format_weight(v)}\\n({",".join(map(str, v))})"']
        ps = hd.annotations.get(v, [])
        if ps:
            attrs.append(f'linked="{",".join(map(str, ps))}"')
        lines.append(f"  {nid(v)} [{', '.join(attrs)}];")
    for a, b in hd.edges:
        lines.append(f"  {nid(a)} -> {nid(b)};")
    lines.append("}")
    return "\n".join(lines)


def cmd_hasse(args) -> int:
    rs, label = parse_system(args.type, args.rank)
    lam = _lambda_arg(args, rs)
    if any(c < 0 for c in lam):
        raise UsageError("--lambda must be dominant")
    primes = parse_primes(args.primes)
    query = {"system": label, "lambda": list(lam), "primes": primes}
    env = cached(args, "hasse", query, lambda: envelope(query, hasse(rs, lam, primes).to_json()))
    if args.format == "json":
        emit(args, dumps(env))
    else:
        emit(args, hasse_to_dot(HasseDiagram.from_json(env["result"])))
    return EXIT_OK


def cmd_weights(args) -> int:
    rs, label = parse_system(args.type, args.rank)
    lam = _lambda_arg(args, rs)
    if any(c < 0 for c in lam):
        raise UsageError("--lambda must be dominant")
    if rs.rank > WEIGHTS_RANK_GUARD and not args.force:
        raise UsageError(f"full weight support is limited to rank <= {WEIGHTS_RANK_GUARD}; pass --force")
    try:
        entries = weight_support(rs, lam, force=args.force)
    except RankGuardError as exc:
        raise UsageError(str(exc)) from exc
    query = {"system": label, "lambda": list(lam)}
    if args.format == "json":
        table = dominant_mults(rs, lam).to_json()
        table["support"] = support_to_json(entries)
        emit(args, dumps(envelope(query, table)))
    else:
        emit(args, format_table(rs, lam, entries))
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = []
    for s in args.suite or ["all"]:
        suites += [t for t in s.split(",") if t]
    if "all" in suites:
        suites = list(paperchecks.SUITES)
    unknown = [s for s in suites if s not in paperchecks.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from all, {', '.join(paperchecks.SUITES)}")
    cfg = paperchecks.VerifyConfig(suites=tuple(suites))
    if args.primes:
        cfg.primes = tuple(parse_primes(args.primes))
    if args.max_rank is not None:
        if args.max_rank < 3:
            raise UsageError("--max-rank must be >= 3")
        cfg.ks_n_max = args.max_rank
    if args.type:
        labs = [t.strip().upper() for t in args.type.split(",") if t.strip()]
        bad = [t for t in labs if t not in paperchecks.EXCEPTIONAL]
        if bad:
            raise UsageError(f"--type for verify takes exceptional labels, got {bad}")
        cfg.systems = tuple(labs)
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    query = {"suites": list(cfg.suites), "systems": list(cfg.systems), "primes": list(cfg.primes),
             "ks_n_max": cfg.ks_n_max}
    env = cached(args, "verify", query,
                 lambda: envelope(query, paperchecks.run_all(cfg, jobs=args.jobs).to_json()))
    if args.report == "md":
        rep = paperchecks.VerificationReport([
            paperchecks.CheckEntry(c["check"], c["scope"], c["status"], c["counterexamples"], c["details"])
            for c in env["result"]["checks"]])
        emit(args, rep.to_markdown())
    else:
        emit(args, dumps(env))
    return EXIT_OK if env["result"]["passed"] else EXIT_FAIL


def _word_text(word) -> list[str]:
    out = []
    for step in word:
        if step[0] == "s":
            out.append(f"s{step[1] + 1}")
        else:
            out.append(f"s[root {step[1] + 1}, {step[2]}p]")
    return out


def cmd_linkage(args) -> int:
    rs, label = parse_system(args.type, args.rank)
    if not is_prime(args.p):
        raise UsageError(f"p = {args.p} is not prime")
    if args.lam is None:
        raise UsageError("--lambda is required")
    lam = parse_weight(args.lam, rs.rank)
    mu = parse_weight(args.mu, rs.rank) if args.mu else rs.zero
    rl, wl = dot_canonical_rep(rs, args.p, lam)
    rm, wm = dot_canonical_rep(rs, args.p, mu)
    res = {"linked": rl == rm, "lambda_rep": list(rl), "mu_rep": list(rm),
           "lambda_word": _word_text(wl), "mu_word": _word_text(wm)}
    query = {"system": label, "p": args.p, "lambda": list(lam), "mu": list(mu)}
    if args.format == "json":
        emit(args, dumps(envelope(query, res)))
    else:
        emit(args, "\n".join([
            f"linked   {'true' if res['linked'] else 'false'}",
            f"lambda   {format_weight(lam)} -> {format_weight(rl)}  via {' '.join(res['lambda_word']) or '(empty)'}",
            f"mu       {format_weight(mu)} -> {format_weight(rm)}  via {' '.join(res['mu_word']) or '(empty)'}",
        ]))
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="chevh1", description="First cohomology of finite Chevalley groups "
                 "with coefficients in simple modules below a fundamental weight.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def system_flags(p, rank_required=False):
        p.add_argument("--type", required=True, help="family letter, or a full label such as E8 or A1xA1")
        p.add_argument("--rank", type=int, required=rank_required)

    h = sub.add_parser("h1", help="decide dim H^1(G(F_q), L(lambda))")
    system_flags(h)
    h.add_argument("-p", type=int, required=True)
    h.add_argument("-r", type=int, default=1)
    h.add_argument("--lambda", dest="lam", required=True, help="omega-coordinates c1,...,cn")
    h.add_argument("--format", choices=("text", "json"), default="text")
    h.add_argument("--out")
    h.set_defaults(func=cmd_h1)

    g = sub.add_parser("hasse", help="Hasse diagram of dominant weights below lambda")
    system_flags(g)
    g.add_argument("--lambda", dest="lam")
    g.add_argument("--fundamental", type=int)
    g.add_argument("--primes", default="5..31")
    g.add_argument("--format", choices=("dot", "json"), default="dot")
    g.add_argument("--out")
    g.add_argument("--cache")
    g.set_defaults(func=cmd_hasse)

    w = sub.add_parser("weights", help="weights nu of H^0(lambda) with theta = lambda - nu")
    system_flags(w)
    w.add_argument("--lambda", dest="lam")
    w.add_argument("--fundamental", type=int)
    w.add_argument("--format", choices=("text", "json"), default="text")
    w.add_argument("--force", action="store_true")
    w.add_argument("--out")
    w.set_defaults(func=cmd_weights)

    v = sub.add_parser("verify", help="run the machine checks")
    v.add_argument("--suite", action="append", help="all or a suite name; repeat or comma-separate")
    v.add_argument("--type", help="comma-separated exceptional labels (default all)")
    v.add_argument("--primes", help="lo..hi or a comma list (default 2..37)")
    v.add_argument("--max-rank", type=int, help="largest n for the type C digit comparison")
    v.add_argument("--report", choices=("json", "md"), default="json")
    v.add_argument("--out")
    v.add_argument("--cache")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("linkage", help="test W_p dot-linkage of two weights")
    system_flags(k)
    k.add_argument("-p", type=int, required=True)
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--mu")
    k.add_argument("--format", choices=("text", "json"), default="text")
    k.add_argument("--out")
    k.set_defaults(func=cmd_linkage)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # --help and argparse errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sub = ap._subparsers._group_actions[0].choices[args.command]
        sub.print_usage(sys.stderr)
        print(f"chevh1 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
