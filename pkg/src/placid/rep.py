"""The tropical representation of the rank-n plactic monoid.

Matrices are indexed by all subsets of {1,..,n} in canonical order. The image
of a generator x has entry 1 at (P, Q) when |P| = |Q|, P <= Q and x lies in
the union of the order interval [P, Q]; entry 0 at other comparable same-size
pairs; bottom elsewhere. Words map to max-plus products of generator images,
and the (S, T) entry of a word image equals the longest scattered subword
readable from S to T.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .subsets import (
    SubsetOfN,
    WordCounts,
    all_subsets,
    interval_same_size,
    interval_union,
    subset_leq,
)
from .tableaux import Word, tableau_key, validate_word
from .tropical import NEG_INF, TropMatrix, trop_mul


@lru_cache(maxsize=None)
def _comparable_same_size_pairs(n: int) -> tuple[tuple[int, int], ...]:
    subs = all_subsets(n)
    return tuple(
        (i, j)
        for i, p in enumerate(subs)
        for j, q in enumerate(subs)
        if p.size == q.size and subset_leq(p, q)
    )


@lru_cache(maxsize=None)
def rho_identity(n: int) -> TropMatrix:
    """Image of the empty word: 0 on comparable same-size pairs, bottom elsewhere."""
    subs = all_subsets(n)
    dim = len(subs)
    rows = [[NEG_INF] * dim for _ in range(dim)]
    for i, j in _comparable_same_size_pairs(n):
        rows[i][j] = 0
    return TropMatrix(tuple(tuple(r) for r in rows), subs)


@lru_cache(maxsize=None)
def rho_generator(n: int, x: int) -> TropMatrix:
    """Image of the generator x in the subset-indexed matrix monoid."""
    if not 1 <= x <= n:
        raise ValueError(f"generator {x} outside [1, {n}]")
    subs = all_subsets(n)
    dim = len(subs)
    rows = [[NEG_INF] * dim for _ in range(dim)]
    for i, j in _comparable_same_size_pairs(n):
        rows[i][j] = 1 if x in interval_union(subs[i], subs[j]) else 0
    return TropMatrix(tuple(tuple(r) for r in rows), subs)


def rho_word(n: int, word: Word) -> TropMatrix:
    """Product of generator images along the word; empty word maps to rho_identity."""
    validate_word(word, n)
    acc = rho_identity(n)
    for x in word:
        acc = trop_mul(acc, rho_generator(n, x))
    return acc


def subset_index(n: int, s: SubsetOfN) -> int:
    return all_subsets(n).index(s)


def rho_entry(n: int, word: Word, s: SubsetOfN, t: SubsetOfN) -> int | float:
    m = rho_word(n, word)
    return m.rows[subset_index(n, s)][subset_index(n, t)]


def max_readable_length(w: Word, s: SubsetOfN, t: SubsetOfN) -> int:
    """Longest scattered subword of w readable from s to t.

    A subword u is readable when some weakly increasing sequence of sets
    s <= P_1 <= ... <= P_|u| <= t has u_i in P_i. Weak steps matter: the same
    set may absorb consecutive letters. Dynamic program over (prefix of w,
    interval member holding the letters consumed so far).
    """
    if s.size != t.size or not subset_leq(s, t):
        raise ValueError(f"need |s| = |t| and s <= t, got {s}, {t}")
    members = interval_same_size(s, t)
    below = {m: tuple(p for p in members if subset_leq(p, m)) for m in members}
    # best[m] = most letters consumed so far with the last set exactly m
    best = {m: 0 for m in members}
    for letter in w:
        holders = [m for m in members if letter in m]
        if not holders:
            continue
        prev = dict(best)
        for m in holders:
            # consume the letter at m; earlier sets must sit at or below m
            cand = max(prev[p] for p in below[m]) + 1
            if cand > best[m]:
                best[m] = cand
    return max(best.values())


@dataclass
class FaithfulnessReport:
    """Outcome of cross-checking matrix equality against tableau equality."""

    n: int
    max_len: int
    exhaustive: bool
    words_checked: int
    classes: int
    violations: list[tuple[Word, Word]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _matrix_key(m: TropMatrix) -> tuple:
    return m.rows


def faithfulness_check(
    n: int,
    max_len: int,
    exhaustive_word_limit: int = 5000,
    sample_pairs: int = 500,
    seed: int = 0,
) -> FaithfulnessReport:
    """Check rho_word(u) = rho_word(v) iff tableau(u) = tableau(v).

    Exhaustive over all words up to max_len when the universe is small
    (grouping words by both keys covers every pair); seeded sampling
    otherwise. Violating pairs are reported, not raised.
    """
    import itertools
    import random

    words: list[Word] = []
    total = sum(n**k for k in range(max_len + 1))
    exhaustive = total <= exhaustive_word_limit
    if exhaustive:
        for k in range(max_len + 1):
            words.extend(itertools.product(range(1, n + 1), repeat=k))
    else:
        rng = random.Random(seed)
        words = [
            tuple(rng.randint(1, n) for _ in range(rng.randint(0, max_len)))
            for _ in range(2 * sample_pairs)
        ]

    by_tab: dict[tuple, dict] = {}
    by_rho: dict[tuple, dict] = {}
    violations: list[tuple[Word, Word]] = []
    for w in words:
        tk = tableau_key(w)
        rk = _matrix_key(rho_word(n, w))
        prev = by_tab.setdefault(tk, {"rho": rk, "word": w})
        if prev["rho"] != rk:
            violations.append((prev["word"], w))
        prev = by_rho.setdefault(rk, {"tab": tk, "word": w})
        if prev["tab"] != tk:
            violations.append((prev["word"], w))
    return FaithfulnessReport(
        n=n,
        max_len=max_len,
        exhaustive=exhaustive,
        words_checked=len(words),
        classes=len(by_tab),
        violations=violations,
    )


def word_weight(n: int, word: Word, s: SubsetOfN) -> int:
    """Diagonal entry semantics: letters of the word that lie in s."""
    return WordCounts.of_word(word).of_set(s)
