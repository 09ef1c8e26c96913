"""Verdicts for candidate identities: plactic checks and tropical witness search.

Plactic checking substitutes word pairs into both sides and compares tableau
canonical forms (matrices are reserved for the cross-validation route, which
is quadratically heavier). Tropical checking searches seeded-random pairs of
upper-triangular matrices for an evaluation mismatch; a found witness is
re-verified through the independent path dynamic program before it is
reported. All sampling is reproducible from the seeds echoed into reports.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterator

from .forge import IdentityWords
from .paths import build_digraph, max_weight_path
from .rep import rho_word
from .tableaux import Word, format_word, tableau_key, _insert_into_rows
from .tropical import (
    NEG_INF,
    TropMatrix,
    eval_word,
    is_upper_triangular,
    matrix_from_json,
    matrix_to_json,
    random_ut,
    trop_mul,
    value_from_json,
    value_to_json,
)

DEFAULT_TIME_BUDGET = 60.0


@dataclass(frozen=True)
class ExhaustiveStrategy:
    """All substitution pairs (x, y) with |x|, |y| <= max_len, in (length, lex) order."""

    max_len: int

    def to_json(self) -> dict:
        return {"type": "exhaustive", "max_len": self.max_len}


@dataclass(frozen=True)
class RandomStrategy:
    """Seeded pairs; lengths uniform in [0, max_len], letters i.i.d. uniform."""

    samples: int
    max_len: int
    seed: int = 0

    def to_json(self) -> dict:
        return {
            "type": "random",
            "samples": self.samples,
            "max_len": self.max_len,
            "seed": self.seed,
        }


Strategy = ExhaustiveStrategy | RandomStrategy


def strategy_from_json(data: dict) -> Strategy:
    if data["type"] == "exhaustive":
        return ExhaustiveStrategy(data["max_len"])
    if data["type"] == "random":
        return RandomStrategy(data["samples"], data["max_len"], data["seed"])
    raise ValueError(f"unknown strategy type {data['type']!r}")


def _words_up_to(n: int, max_len: int) -> Iterator[Word]:
    for k in range(max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=k)


def _pairs(n: int, strategy: Strategy) -> Iterator[tuple[Word, Word]]:
    if isinstance(strategy, ExhaustiveStrategy):
        words = list(_words_up_to(n, strategy.max_len))
        for x in words:
            for y in words:
                yield x, y
        return
    rng = random.Random(strategy.seed)
    for _ in range(strategy.samples):
        x = tuple(rng.randint(1, n) for _ in range(rng.randint(0, strategy.max_len)))
        y = tuple(rng.randint(1, n) for _ in range(rng.randint(0, strategy.max_len)))
        yield x, y


def _substituted_tableau_key(side: str, x: Word, y: Word) -> tuple:
    rows: list[list[int]] = []
    for c in side:
        for letter in x if c == "a" else y:
            _insert_into_rows(rows, letter)
    return tuple(tuple(row) for row in rows)


def substitute_words(side: str, x: Word, y: Word) -> Word:
    """The word over {1,..,n} obtained by sending a -> x and b -> y."""
    out: list[int] = []
    for c in side:
        out.extend(x if c == "a" else y)
    return tuple(out)


@dataclass
class PlacticCheckReport:
    identity: IdentityWords
    n: int
    strategy: Strategy
    samples_run: int
    counterexample: tuple[Word, Word] | None
    budget_exhausted: bool
    elapsed_s: float

    @property
    def verdict(self) -> str:
        if self.counterexample is not None:
            return "counterexample"
        return "inconclusive" if self.budget_exhausted else "pass"

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {
                "x": format_word(self.counterexample[0]),
                "y": format_word(self.counterexample[1]),
            }
        return {
            "kind": "plactic-check",
            "identity": self.identity.to_json(),
            "n": self.n,
            "strategy": self.strategy.to_json(),
            "verdict": self.verdict,
            "samples_run": self.samples_run,
            "counterexample": ce,
            "budget_exhausted": self.budget_exhausted,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def check_plactic(
    identity: IdentityWords,
    n: int,
    strategy: Strategy,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> PlacticCheckReport:
    """Does the identity survive substitution into the rank-n plactic monoid?

    Stops at the first violating pair. Any counterexample is re-verified with
    a fresh substitution/insertion pass before it enters the report.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    start = time.monotonic()
    samples = 0
    counterexample = None
    exhausted = False
    for x, y in _pairs(n, strategy):
        samples += 1
        lk = _substituted_tableau_key(identity.lhs, x, y)
        rk = _substituted_tableau_key(identity.rhs, x, y)
        if lk != rk:
            counterexample = (x, y)
            break
        if samples % 128 == 0 and time.monotonic() - start > time_budget:
            exhausted = True
            break
    if counterexample is not None:
        lu = substitute_words(identity.lhs, *counterexample)
        ru = substitute_words(identity.rhs, *counterexample)
        if tableau_key(lu) == tableau_key(ru):
            raise AssertionError("counterexample failed re-verification")
    return PlacticCheckReport(
        identity=identity,
        n=n,
        strategy=strategy,
        samples_run=samples,
        counterexample=counterexample,
        budget_exhausted=exhausted,
        elapsed_s=time.monotonic() - start,
    )


@dataclass(frozen=True)
class TropSearchConfig:
    samples: int = 100_000
    max_entry: int = 3
    min_entry: int = -3
    neginf_density: float = 0.25
    seed: int = 0
    structured_samples: int = 512  # chain-flavored warmup before uniform phase

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "min_entry": self.min_entry,
            "max_entry": self.max_entry,
            "neginf_density": self.neginf_density,
            "seed": self.seed,
            "structured_samples": self.structured_samples,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TropSearchConfig":
        return cls(**data)


@dataclass(frozen=True)
class TropWitness:
    """Upper-triangular pair separating the two sides, with the differing entry."""

    identity: IdentityWords
    dim: int
    x: TropMatrix
    y: TropMatrix
    differing_entry: tuple[int, int, int | float, int | float]

    def __post_init__(self) -> None:
        if not (is_upper_triangular(self.x) and is_upper_triangular(self.y)):
            raise ValueError("witness matrices must be upper triangular")
        i, j, lv, rv = self.differing_entry
        lm = eval_word(self.identity.lhs, self.x, self.y)
        rm = eval_word(self.identity.rhs, self.x, self.y)
        if lm.rows[i][j] != lv or rm.rows[i][j] != rv or lv == rv:
            raise ValueError("witness does not reproduce the differing entry")

    def verify_by_paths(self) -> bool:
        """Independent route: per-entry maximum-weight-path DP, not matrix folds."""
        g = build_digraph(self.x, self.y)
        i, j, lv, rv = self.differing_entry
        lw, _ = max_weight_path(g, self.identity.lhs, i, j)
        rw, _ = max_weight_path(g, self.identity.rhs, i, j)
        return lw == lv and rw == rv and lw != rw

    def to_json(self) -> dict:
        i, j, lv, rv = self.differing_entry
        return {
            "kind": "ut-witness",
            "identity": self.identity.to_json(),
            "dim": self.dim,
            "X": matrix_to_json(self.x),
            "Y": matrix_to_json(self.y),
            "differing_entry": {
                "row": i,
                "col": j,
                "lhs": value_to_json(lv),
                "rhs": value_to_json(rv),
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "TropWitness":
        de = data["differing_entry"]
        return cls(
            identity=IdentityWords.from_json(data["identity"]),
            dim=data["dim"],
            x=matrix_from_json(data["X"]),
            y=matrix_from_json(data["Y"]),
            differing_entry=(
                de["row"],
                de["col"],
                value_from_json(de["lhs"]),
                value_from_json(de["rhs"]),
            ),
        )


@dataclass
class TropCheckReport:
    identity: IdentityWords
    dim: int
    config: TropSearchConfig
    samples_run: int
    witness: TropWitness | None
    budget_exhausted: bool
    elapsed_s: float

    @property
    def verdict(self) -> str:
        return "witness" if self.witness is not None else "not-found"

    def to_json(self) -> dict:
        return {
            "kind": "ut-check",
            "identity": self.identity.to_json(),
            "dim": self.dim,
            "config": self.config.to_json(),
            "verdict": self.verdict,
            "samples_run": self.samples_run,
            "witness": self.witness.to_json() if self.witness else None,
            "budget_exhausted": self.budget_exhausted,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _common_split(lhs: str, rhs: str) -> tuple[int, int]:
    pl = 0
    limit = min(len(lhs), len(rhs))
    while pl < limit and lhs[pl] == rhs[pl]:
        pl += 1
    sl = 0
    while sl < limit - pl and lhs[len(lhs) - 1 - sl] == rhs[len(rhs) - 1 - sl]:
        sl += 1
    return pl, sl


def _fold_segments(segments: list[TropMatrix | None]) -> TropMatrix | None:
    acc = None
    for seg in segments:
        if seg is None:
            continue
        acc = seg if acc is None else trop_mul(acc, seg)
    return acc


def _structured_pair(
    rng: random.Random, dim: int, lo: int, hi: int
) -> tuple[TropMatrix, TropMatrix]:
    # X rewards stepping along the superdiagonal while its diagonal may be
    # absent, so long X-runs dominate; Y carries non-positive loop weights.
    xr = []
    for i in range(dim):
        row: list = [NEG_INF] * dim
        if rng.random() < 0.7:
            row[i] = 0
        if i + 1 < dim:
            row[i + 1] = 1
        xr.append(tuple(row))
    yr = []
    for i in range(dim):
        row = [NEG_INF] * dim
        row[i] = rng.randint(lo, 0)
        for j in range(i + 1, dim):
            if rng.random() < 0.3:
                row[j] = rng.randint(lo, hi)
        yr.append(tuple(row))
    return TropMatrix(tuple(xr)), TropMatrix(tuple(yr))


def check_tropical(
    identity: IdentityWords,
    dim: int,
    config: TropSearchConfig = TropSearchConfig(),
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> TropCheckReport:
    """Search upper-triangular dim x dim pairs for a failure of the identity.

    Not finding a witness proves nothing and is reported as such. Evaluation
    shares the sides' common prefix/suffix products; a hit is re-verified via
    the path DP before the report is built.
    """
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    lhs, rhs = identity.lhs, identity.rhs
    pl, sl = _common_split(lhs, rhs)
    prefix = lhs[:pl]
    suffix = lhs[len(lhs) - sl :] if sl else ""
    mid_l = lhs[pl : len(lhs) - sl]
    mid_r = rhs[pl : len(rhs) - sl]

    rng = random.Random(config.seed)
    lo, hi = config.min_entry, config.max_entry
    start = time.monotonic()
    samples = 0
    witness = None
    exhausted = False
    for s in range(config.samples):
        samples += 1
        if s < config.structured_samples:
            x, y = _structured_pair(rng, dim, lo, hi)
        else:
            x = random_ut(dim, lo, hi, rng=rng, neginf_density=config.neginf_density)
            y = random_ut(dim, lo, hi, rng=rng, neginf_density=config.neginf_density)
        pm = eval_word(prefix, x, y) if prefix else None
        sm = eval_word(suffix, x, y) if suffix else None
        lm = _fold_segments([pm, eval_word(mid_l, x, y) if mid_l else None, sm])
        rm = _fold_segments([pm, eval_word(mid_r, x, y) if mid_r else None, sm])
        if lm is None or rm is None:  # identical sides
            break
        if lm.rows != rm.rows:
            entry = next(
                (i, j, lm.rows[i][j], rm.rows[i][j])
                for i in range(dim)
                for j in range(dim)
                if lm.rows[i][j] != rm.rows[i][j]
            )
            witness = TropWitness(identity, dim, x, y, entry)
            if not witness.verify_by_paths():
                raise AssertionError("witness failed independent path verification")
            break
        if samples % 64 == 0 and time.monotonic() - start > time_budget:
            exhausted = True
            break
    return TropCheckReport(
        identity=identity,
        dim=dim,
        config=config,
        samples_run=samples,
        witness=witness,
        budget_exhausted=exhausted,
        elapsed_s=time.monotonic() - start,
    )


@dataclass
class RhoConsistencyReport:
    identity: IdentityWords
    n: int
    samples_run: int
    matrix_counterexamples: list[tuple[Word, Word]] = field(default_factory=list)
    route_disagreements: list[tuple[Word, Word]] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """Matrix route and tableau route never disagreed on any sample."""
        return not self.route_disagreements

    @property
    def all_equal(self) -> bool:
        return not self.matrix_counterexamples and self.consistent

    def to_json(self) -> dict:
        return {
            "kind": "rho-consistency",
            "identity": self.identity.to_json(),
            "n": self.n,
            "samples_run": self.samples_run,
            "matrix_counterexamples": [
                {"x": format_word(x), "y": format_word(y)}
                for x, y in self.matrix_counterexamples
            ],
            "route_disagreements": [
                {"x": format_word(x), "y": format_word(y)}
                for x, y in self.route_disagreements
            ],
        }


def check_rho_consistency(
    identity: IdentityWords,
    n: int,
    samples: int,
    seed: int = 0,
    max_word_len: int = 4,
) -> RhoConsistencyReport:
    """Cross-validate the tableau check through the matrix representation.

    For each sampled pair, both sides are evaluated as matrix products of the
    representation images and compared; the verdict must match the tableau
    route on the same pair. Any disagreement breaks faithfulness and is
    reported separately from ordinary identity violations.
    """
    if n > 4:
        raise ValueError("consistency route is desk-scale: n <= 4")
    rng = random.Random(seed)
    report = RhoConsistencyReport(identity=identity, n=n, samples_run=0)
    for _ in range(samples):
        x = tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_word_len)))
        y = tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_word_len)))
        report.samples_run += 1
        xm, ym = rho_word(n, x), rho_word(n, y)
        matrices_equal = (
            eval_word(identity.lhs, xm, ym).rows
            == eval_word(identity.rhs, xm, ym).rows
        )
        tableaux_equal = _substituted_tableau_key(
            identity.lhs, x, y
        ) == _substituted_tableau_key(identity.rhs, x, y)
        if matrices_equal != tableaux_equal:
            report.route_disagreements.append((x, y))
        elif not matrices_equal:
            report.matrix_counterexamples.append((x, y))
    return report
