"""Command-line surface: build identities, run checks, compute representations.

Exit codes: 0 when a verdict or artifact was produced, 1 when a check stopped
on its time budget without a verdict, 2 for bad arguments or unreadable
inputs. All randomness flows from --seed (fallback: the PLACID_SEED
environment variable), which is echoed into every emitted report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path as FsPath

from . import bench as bench_mod
from .checker import (
    ExhaustiveStrategy,
    RandomStrategy,
    TropSearchConfig,
    check_plactic,
    check_tropical,
)
from .forge import BuiltIdentity, IdentityWords, build_identity
from .rep import rho_word
from .tableaux import format_word, parse_word, tableau_of_word
from .tropical import matrix_to_json


def _seed_from(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PLACID_SEED")
    return int(env) if env else 0


def _emit(payload: dict, human: str, args) -> None:
    text = json.dumps(payload, indent=2) if args.format == "json" else human
    if getattr(args, "out", None):
        FsPath(args.out).write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)


def _load_identity(path: str) -> IdentityWords:
    try:
        data = json.loads(FsPath(path).read_text())
        return IdentityWords(data["lhs"], data["rhs"])
    except FileNotFoundError:
        print(f"error: identity file not found: {path}", file=sys.stderr)
        raise SystemExit(2)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"error: cannot parse identity file {path}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def cmd_identity_build(args) -> int:
    built = build_identity(args.n, constrained=args.constrained, minimal=args.mode == "minimal")
    human = "\n".join(
        [
            f"n={built.n} constrained={built.constrained} mode={built.mode}",
            f"q = {built.q}  (|q| = {len(built.q)}, h = {built.h})",
            f"pre-substitution u = {built.pre_lhs}",
            f"pre-substitution v = {built.pre_rhs}",
            f"lhs = {built.identity.lhs}",
            f"rhs = {built.identity.rhs}",
            f"length = {built.length}",
        ]
    )
    _emit(built.to_json(), human, args)
    return 0


def cmd_check_plactic(args) -> int:
    identity = _load_identity(args.identity_file)
    seed = _seed_from(args)
    if args.exhaustive_len is not None:
        strategy = ExhaustiveStrategy(args.exhaustive_len)
    else:
        strategy = RandomStrategy(args.samples, args.max_word_len, seed)
    report = check_plactic(identity, args.n, strategy, time_budget=args.budget)
    human = f"verdict: {report.verdict} after {report.samples_run} pairs ({report.elapsed_s:.2f}s)"
    if report.counterexample:
        x, y = report.counterexample
        human += f"\ncounterexample: x = {format_word(x) or '(empty)'}, y = {format_word(y) or '(empty)'}"
    _emit(report.to_json(), human, args)
    return 1 if report.budget_exhausted and report.counterexample is None else 0


def cmd_check_ut(args) -> int:
    identity = _load_identity(args.identity_file)
    config = TropSearchConfig(
        samples=args.samples,
        min_entry=args.min_entry,
        max_entry=args.max_entry,
        neginf_density=args.neginf_density,
        seed=_seed_from(args),
    )
    report = check_tropical(identity, args.k, config, time_budget=args.budget)
    human = f"verdict: {report.verdict} after {report.samples_run} samples ({report.elapsed_s:.2f}s)"
    if report.witness:
        i, j, lv, rv = report.witness.differing_entry
        human += f"\ndiffering entry ({i},{j}): lhs={lv} rhs={rv}"
    _emit(report.to_json(), human, args)
    return 1 if report.budget_exhausted and report.witness is None else 0


def cmd_rho(args) -> int:
    word = parse_word(args.word)
    m = rho_word(args.rank, word)
    labels = [s.text for s in m.labels]
    width = max(len(t) for t in labels)
    lines = [f"rho_{args.rank}({format_word(word) or 'empty word'}): {m.dim}x{m.dim}"]
    for label, row in zip(labels, m.rows):
        cells = " ".join(f"{('-inf' if v == float('-inf') else str(v)):>4}" for v in row)
        lines.append(f"{label:>{width}} | {cells}")
    _emit(matrix_to_json(m), "\n".join(lines), args)
    return 0


def cmd_tableau(args) -> int:
    word = parse_word(args.word)
    t = tableau_of_word(word)
    _emit(t.to_json(), t.render(), args)
    return 0


def cmd_bench(args) -> int:
    names = sorted(bench_mod.SUITES) if args.suite == "all" else [args.suite]
    seed = _seed_from(args)
    results = bench_mod.run_suites(names, args.n, seed)
    out_dir = FsPath(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = "bench_" + ("all" if args.suite == "all" else args.suite)
    csv_path = out_dir / f"{stem}.csv"
    bench_mod.write_csv(results, csv_path)
    wrote = [str(csv_path)]
    if not args.no_figure:
        png_path = out_dir / f"{stem}.png"
        bench_mod.write_figure(results, png_path)
        wrote.append(str(png_path))
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(f"[{status}] {r.suite}: {r.check} ({r.seconds:.3f}s) {r.detail}")
    print(f"wrote {', '.join(wrote)}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="placid",
        description="plactic monoid identities over tropical matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    identity = sub.add_parser("identity", help="build or check identities")
    idsub = identity.add_subparsers(dest="subcommand", required=True)

    p = idsub.add_parser("build", help="construct the rank-n identity pair")
    p.add_argument("-n", type=int, required=True, help="plactic rank (>= 2)")
    p.add_argument("--constrained", action="store_true", help="q begins with b, ends in a^(n-1), avoids a^n")
    p.add_argument("--mode", choices=["minimal", "any"], default="minimal")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write output to a file")
    p.set_defaults(func=cmd_identity_build)

    p = idsub.add_parser("check-plactic", help="substitution check in the rank-n plactic monoid")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--identity-file", required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--max-word-len", type=int, default=8)
    p.add_argument("--exhaustive-len", type=int, default=None, help="check all pairs up to this length instead of sampling")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=float, default=60.0, help="time budget in seconds")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_plactic)

    p = idsub.add_parser("check-ut", help="witness search in k x k upper-triangular tropical matrices")
    p.add_argument("-k", type=int, required=True, help="matrix dimension")
    p.add_argument("--identity-file", required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--min-entry", type=int, default=-3)
    p.add_argument("--max-entry", type=int, default=3)
    p.add_argument("--neginf-density", type=float, default=0.25)
    p.add_argument("--budget", type=float, default=60.0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_ut)

    p = sub.add_parser("rho", help="representation matrix of a word")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True, help='space-separated letters, e.g. "1 3 1 4"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("tableau", help="insert a word and render its tableau")
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("bench", help="run timed self-check suites (CSV + figure)")
    p.add_argument("--suite", default="all", choices=sorted(bench_mod.SUITES) + ["all"])
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out-dir", default="bench-out")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
