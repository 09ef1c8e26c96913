"""Timed self-check suites with delimited and figure output.

Each suite runs a handful of named checks (scaled-down versions of the
acceptance criteria), records pass/fail and wall time, and the report path
writes one CSV row per check plus a bar-chart PNG alongside it.
"""

from __future__ import annotations

import csv
import itertools
import random
import time
from dataclasses import dataclass
from pathlib import Path as FsPath

from . import checker, forge, paths, rep, subsets, tableaux, tropical


@dataclass
class BenchResult:
    suite: str
    check: str
    passed: bool
    seconds: float
    detail: str = ""


def _run(suite: str, check: str, fn) -> BenchResult:
    start = time.perf_counter()
    try:
        detail = fn() or ""
        passed = True
    except Exception as exc:  # a failing check is a result, not a crash
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    return BenchResult(suite, check, passed, time.perf_counter() - start, str(detail))


def _brute_glb(subs, s, t):
    lower = [m for m in subs if subsets.subset_leq(m, s) and subsets.subset_leq(m, t)]
    glb = [m for m in lower if all(subsets.subset_leq(p, m) for p in lower)]
    return glb[0] if len(glb) == 1 else None


def _brute_lub(subs, s, t):
    upper = [m for m in subs if subsets.subset_leq(s, m) and subsets.subset_leq(t, m)]
    lub = [m for m in upper if all(subsets.subset_leq(m, p) for p in upper)]
    return lub[0] if len(lub) == 1 else None


def suite_lattice(n: int, seed: int) -> list[BenchResult]:
    n = min(n, 5)
    subs = subsets.all_subsets(n)

    def oracle():
        for s in subs:
            for t in subs:
                if subsets.meet(s, t) != _brute_glb(subs, s, t):
                    raise AssertionError(f"meet({s},{t})")
                if subsets.join(s, t) != _brute_lub(subs, s, t):
                    raise AssertionError(f"join({s},{t})")
        return f"{len(subs)**2} pairs"

    def chain_bound():
        best = max(
            subsets.chain_length(s, t)
            for s in subs
            for t in subs
            if s.size == t.size and subsets.subset_leq(s, t)
        )
        expected = n * n // 4 + 1
        if best != expected:
            raise AssertionError(f"max chain {best} != {expected}")
        return f"max chain {best}"

    def split_post():
        rng = random.Random(seed)
        done = 0
        while done < 300:
            s, t = rng.choice(subs), rng.choice(subs)
            if s.size != t.size or not s.lt(t):
                continue
            w = subsets.WordCounts.of_word(
                [rng.randint(1, n) for _ in range(rng.randint(0, 12))]
            )
            nn = subsets.split(n, w, s, t)
            ok = (
                nn != s
                and subsets.subset_leq(s, nn)
                and subsets.subset_leq(nn, t)
                and w.of_set(nn) >= min(w.of_set(s), w.of_set(t))
                and subsets.chain_length(s, nn) <= n
            )
            if not ok:
                raise AssertionError(f"split({s},{t})")
            done += 1
        return f"{done} instances"

    return [
        _run("lattice", "meet/join vs brute force", oracle),
        _run("lattice", "chain length bound", chain_bound),
        _run("lattice", "split postconditions", split_post),
    ]


def suite_rep(n: int, seed: int) -> list[BenchResult]:
    n = min(n, 3)

    def knuth_invariance():
        count = 0
        r = range(1, n + 1)
        for a in r:
            for b in r:
                for c in r:
                    if a < b <= c:
                        lhs, rhs = (b, c, a), (b, a, c)
                    elif a <= b < c:
                        lhs, rhs = (c, a, b), (a, c, b)
                    else:
                        continue
                    if rep.rho_word(n, lhs).rows != rep.rho_word(n, rhs).rows:
                        raise AssertionError(f"{lhs} vs {rhs}")
                    count += 1
        return f"{count} relations"

    def readability():
        subs = [s for s in subsets.all_subsets(n)]
        pairs = [
            (s, t)
            for s in subs
            for t in subs
            if s.size == t.size and subsets.subset_leq(s, t)
        ]
        rng = random.Random(seed)
        for _ in range(40):
            w = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 6)))
            m = rep.rho_word(n, w)
            for s, t in pairs:
                got = m.rows[rep.subset_index(n, s)][rep.subset_index(n, t)]
                if got != rep.max_readable_length(w, s, t):
                    raise AssertionError(f"{w} {s} {t}")
        return "40 words, all entries"

    return [
        _run("rep", "Knuth invariance", knuth_invariance),
        _run("rep", "entries = readable lengths", readability),
    ]


def suite_paths(n: int, seed: int) -> list[BenchResult]:
    n = min(n, 3)

    def splitting_inequality():
        rng = random.Random(seed)
        subs = subsets.all_subsets(n)
        done = 0
        while done < 100:
            x = tuple(rng.randint(1, n) for _ in range(rng.randint(1, 4)))
            y = tuple(rng.randint(1, n) for _ in range(rng.randint(1, 4)))
            g = paths.build_digraph(rep.rho_word(n, x), rep.rho_word(n, y))
            s, t = rng.choice(subs), rng.choice(subs)
            if s.size != t.size or not subsets.subset_leq(s, t):
                continue
            members = subsets.interval_same_size(s, t)
            labels = "".join(rng.choice("XY") for _ in range(rng.randint(1, 6)))
            verts = [s]
            for _ in labels:
                verts.append(rng.choice([m for m in members if subsets.subset_leq(verts[-1], m)]))
            verts[-1] = t
            if not all(subsets.subset_leq(a, b) for a, b in zip(verts, verts[1:])):
                continue
            gamma = paths.make_path(g, verts, labels)
            nn = rng.choice(members)
            sigma, tau, lam = paths.splitting_paths(g, gamma, nn)
            if gamma.weight + lam.weight > sigma.weight + tau.weight:
                raise AssertionError(f"{gamma} at {nn}")
            done += 1
        return f"{done} instances"

    def dp_vs_product():
        rng = random.Random(seed + 1)
        for _ in range(20):
            x = tropical.random_ut(3, -2, 2, rng=rng, neginf_density=0.3)
            y = tropical.random_ut(3, -2, 2, rng=rng, neginf_density=0.3)
            word = "".join(rng.choice("ab") for _ in range(rng.randint(1, 5)))
            m = tropical.eval_word(word, x, y)
            g = paths.build_digraph(x, y)
            for i in range(3):
                for j in range(3):
                    if paths.max_weight_path(g, word, i, j)[0] != m.rows[i][j]:
                        raise AssertionError(f"{word} ({i},{j})")
        return "20 words, all entries"

    return [
        _run("paths", "splitting inequality", splitting_inequality),
        _run("paths", "path DP vs product", dp_vs_product),
    ]


def suite_forge(n: int, seed: int) -> list[BenchResult]:
    def q_words():
        for rank in range(2, 9):
            for constrained in (False, True):
                forge.build_q(rank, constrained)  # verify_q gates internally
        return "ranks 2..8, both modes"

    def lengths():
        b = forge.build_identity(6)
        if b.length != 2 * (2 * b.h * len(b.q) + 1):
            raise AssertionError("length law")
        if b.length != 1298:
            raise AssertionError(f"rank-6 length {b.length}")
        return "rank-6 length 1298"

    return [
        _run("forge", "q construction + verification", q_words),
        _run("forge", "identity length law", lengths),
    ]


def suite_checker(n: int, seed: int) -> list[BenchResult]:
    def plactic_quick():
        b = forge.build_identity(2, constrained=True)
        r = checker.check_plactic(
            b.identity, 2, checker.RandomStrategy(300, 6, seed), time_budget=30
        )
        if r.verdict != "pass":
            raise AssertionError(r.verdict)
        return f"{r.samples_run} samples"

    def witness_quick():
        b = forge.build_identity(2, constrained=True)
        r = checker.check_tropical(
            b.identity, 3, checker.TropSearchConfig(samples=5000, seed=seed),
            time_budget=30,
        )
        if r.verdict != "witness":
            raise AssertionError("no witness in 5000 samples")
        return f"witness at sample {r.samples_run}"

    return [
        _run("checker", "rank-2 identity holds (sampled)", plactic_quick),
        _run("checker", "UT3 witness search", witness_quick),
    ]


SUITES = {
    "lattice": suite_lattice,
    "rep": suite_rep,
    "paths": suite_paths,
    "forge": suite_forge,
    "checker": suite_checker,
}


def run_suites(names: list[str], n: int, seed: int) -> list[BenchResult]:
    results: list[BenchResult] = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        results.extend(SUITES[name](n, seed))
    return results


def write_csv(results: list[BenchResult], path: FsPath) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "check", "passed", "seconds", "detail"])
        for r in results:
            writer.writerow([r.suite, r.check, r.passed, f"{r.seconds:.4f}", r.detail])


def write_figure(results: list[BenchResult], path: FsPath) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [f"{r.suite}: {r.check}" for r in results]
    times = [r.seconds for r in results]
    colors = ["#2a9d44" if r.passed else "#c0392b" for r in results]
    fig, ax = plt.subplots(figsize=(8, 0.5 * len(results) + 1.5))
    ax.barh(range(len(results)), times, color=colors)
    ax.set_yticks(range(len(results)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title("placid bench (green = pass, red = fail)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
