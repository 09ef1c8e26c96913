"""Subsets of {1,..,n} under the size-then-elementwise order.

A subset S is compared to T by: S <= T iff |S| >= |T| and the i-th smallest
element of S is <= the i-th smallest element of T, for every i up to |T|.
Under this order the power set is a lattice; the empty set is the global top.
This module provides the order, meet/join, order intervals, maximal chain
lengths, and the constructive "split" selections used by the identity
machinery.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator


@lru_cache(maxsize=None)
def _elements_of_mask(mask: int) -> tuple[int, ...]:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


@dataclass(frozen=True)
class SubsetOfN:
    """Immutable subset of {1,..,n}, stored as a bitmask (bit x-1 <-> element x)."""

    mask: int = 0

    @classmethod
    def from_elements(cls, elements: Iterable[int]) -> "SubsetOfN":
        mask = 0
        for x in elements:
            if x < 1:
                raise ValueError(f"subset elements must be >= 1, got {x}")
            mask |= 1 << (x - 1)
        return cls(mask)

    @classmethod
    def from_text(cls, text: str) -> "SubsetOfN":
        """Parse the ``{1,3,4}`` text form (whitespace tolerated, ``{}`` is empty)."""
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"subset text must look like {{1,3}}, got {text!r}")
        body = body[1:-1].strip()
        if not body:
            return cls(0)
        return cls.from_elements(int(part) for part in body.split(","))

    @property
    def elements(self) -> tuple[int, ...]:
        return _elements_of_mask(self.mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def nth(self, i: int) -> int:
        """The i-th smallest element, 1-indexed."""
        return self.elements[i - 1]

    def __contains__(self, x: int) -> bool:
        return x >= 1 and bool(self.mask >> (x - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.size

    def with_element(self, x: int) -> "SubsetOfN":
        return SubsetOfN(self.mask | 1 << (x - 1))

    def without_element(self, x: int) -> "SubsetOfN":
        return SubsetOfN(self.mask & ~(1 << (x - 1)))

    def leq(self, other: "SubsetOfN") -> bool:
        return subset_leq(self, other)

    def lt(self, other: "SubsetOfN") -> bool:
        return self != other and subset_leq(self, other)

    @property
    def text(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __repr__(self) -> str:
        return self.text


def subset_leq(s: SubsetOfN, t: SubsetOfN) -> bool:
    """True iff |s| >= |t| and the i-th smallest elements satisfy s_i <= t_i."""
    se, te = s.elements, t.elements
    if len(se) < len(te):
        return False
    for a, b in zip(se, te):
        if a > b:
            return False
    return True


def canonical_key(s: SubsetOfN) -> tuple[int, tuple[int, ...]]:
    """Sort key fixing the row order of representation matrices across runs."""
    return (s.size, s.elements)


@lru_cache(maxsize=None)
def all_subsets(n: int) -> tuple[SubsetOfN, ...]:
    """All subsets of {1,..,n}, canonically ordered (size asc, then lex)."""
    subs = [SubsetOfN(mask) for mask in range(1 << n)]
    subs.sort(key=canonical_key)
    return tuple(subs)


def meet(s: SubsetOfN, t: SubsetOfN) -> SubsetOfN:
    """Greatest lower bound: elementwise minima plus the larger set's tail."""
    se, te = s.elements, t.elements
    if len(se) < len(te):
        se, te = te, se
    k = len(te)
    out = [min(a, b) for a, b in zip(se, te)]
    out.extend(se[k:])
    return SubsetOfN.from_elements(out)


def join(s: SubsetOfN, t: SubsetOfN) -> SubsetOfN:
    """Least upper bound: elementwise maxima over the shorter length."""
    se, te = s.elements, t.elements
    k = min(len(se), len(te))
    return SubsetOfN.from_elements(max(se[i], te[i]) for i in range(k))


def _require_comparable(s: SubsetOfN, t: SubsetOfN) -> None:
    if not subset_leq(s, t):
        raise ValueError(f"{s} is not <= {t}")


def _require_same_size(s: SubsetOfN, t: SubsetOfN) -> None:
    if s.size != t.size:
        raise ValueError(f"sizes differ: |{s}| = {s.size}, |{t}| = {t.size}")


def interval_same_size(s: SubsetOfN, t: SubsetOfN) -> tuple[SubsetOfN, ...]:
    """All M with s <= M <= t, for |s| = |t| (every member then has that size)."""
    _require_same_size(s, t)
    _require_comparable(s, t)
    se, te = s.elements, t.elements
    k = len(se)
    out: list[SubsetOfN] = []

    def rec(i: int, chosen: list[int]) -> None:
        if i == k:
            out.append(SubsetOfN.from_elements(chosen))
            return
        lo = max(se[i], chosen[-1] + 1 if chosen else 1)
        for x in range(lo, te[i] + 1):
            chosen.append(x)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return tuple(out)


def enumerate_interval(n: int, s: SubsetOfN, t: SubsetOfN) -> tuple[SubsetOfN, ...]:
    """All M in 2^{1..n} with s <= M <= t.

    Mixed-size intervals contain sets of every size between |t| and |s|; the
    ambient n bounds the elements that may appear beyond position |t|.
    """
    _require_comparable(s, t)
    if s.size == t.size:
        return interval_same_size(s, t)
    out = []
    for size in range(t.size, s.size + 1):
        for combo in combinations(range(1, n + 1), size):
            m = SubsetOfN.from_elements(combo)
            if subset_leq(s, m) and subset_leq(m, t):
                out.append(m)
    out.sort(key=canonical_key)
    return tuple(out)


def interval_union(s: SubsetOfN, t: SubsetOfN) -> SubsetOfN:
    """Union of all sets in the interval [s, t], for |s| = |t|."""
    mask = 0
    for m in interval_same_size(s, t):
        mask |= m.mask
    return SubsetOfN(mask)


def chain_length(s: SubsetOfN, t: SubsetOfN) -> int:
    """Maximal t with s = P_1 < ... < P_t = t inside [s, t] (longest-path search)."""
    _require_same_size(s, t)
    _require_comparable(s, t)
    members = interval_same_size(s, t)
    best: dict[SubsetOfN, int] = {}

    def longest_from(p: SubsetOfN) -> int:
        if p == t:
            return 1
        cached = best.get(p)
        if cached is not None:
            return cached
        value = 1 + max(longest_from(q) for q in members if p != q and subset_leq(p, q))
        best[p] = value
        return value

    return longest_from(s)


def chain_length_formula(s: SubsetOfN, t: SubsetOfN) -> int:
    """Closed form 1 + sum_i (t_i - s_i); kept equivalent to chain_length by test."""
    _require_same_size(s, t)
    _require_comparable(s, t)
    return 1 + sum(b - a for a, b in zip(s.elements, t.elements))


@dataclass(frozen=True)
class WordCounts:
    """Letter multiplicities of a word over {1,..,n}."""

    counts: dict[int, int] = field(default_factory=dict)

    @classmethod
    def of_word(cls, word: Iterable[int]) -> "WordCounts":
        return cls(dict(Counter(word)))

    def count(self, letter: int) -> int:
        return self.counts.get(letter, 0)

    def of_set(self, s: SubsetOfN) -> int:
        return sum(self.counts.get(x, 0) for x in s.elements)


def split(n: int, w: WordCounts, s: SubsetOfN, t: SubsetOfN) -> SubsetOfN:
    """Pick N in [s, t] with N != s, |w|_N >= min(|w|_s, |w|_t), chain(s, N) <= n.

    When the interval is already short (chain length <= n) the top works.
    Otherwise swap one element: with s' = s\\t = {s_1 < ...} and t' = t\\s,
    the least index i with count(t_i) - count(s_i) >= min(0, |w|_t - |w|_s)
    always exists, and N = (s \\ {s_i}) | {t_i} has all three properties.
    """
    _require_same_size(s, t)
    if not s.lt(t):
        raise ValueError(f"need {s} < {t}")
    if chain_length(s, t) <= n:
        return t
    s_only = sorted(set(s.elements) - set(t.elements))
    t_only = sorted(set(t.elements) - set(s.elements))
    threshold = min(0, w.of_set(t) - w.of_set(s))
    for si, ti in zip(s_only, t_only):
        if w.count(ti) - w.count(si) >= threshold:
            return s.without_element(si).with_element(ti)
    raise AssertionError("no admissible swap index; counting argument violated")


def _extremal(candidates: list[SubsetOfN], maximal: bool) -> SubsetOfN:
    keep = [
        m
        for m in candidates
        if not any(
            other != m and (subset_leq(m, other) if maximal else subset_leq(other, m))
            for other in candidates
        )
    ]
    # several maximal/minimal elements may exist; canonical order makes the
    # selection deterministic (any of them satisfies the postconditions)
    return min(keep, key=canonical_key)


def split_apply_increasing(
    n: int, w: WordCounts, s: SubsetOfN, t: SubsetOfN
) -> SubsetOfN:
    """N != s with chain(s, N) <= n dominating every member of [s, N] in weight.

    Requires |w|_s <= |w|_t. One split lands above s with weight >= |w|_s;
    a minimal heavy element of the short interval then dominates it all.
    """
    if w.of_set(s) > w.of_set(t):
        raise ValueError("increasing variant needs |w|_s <= |w|_t")
    n1 = split(n, w, s, t)
    bar = w.of_set(n1)
    candidates = [m for m in interval_same_size(s, n1) if m != s and w.of_set(m) >= bar]
    return _extremal(candidates, maximal=False)


def split_apply_decreasing(
    n: int, w: WordCounts, s: SubsetOfN, t: SubsetOfN
) -> SubsetOfN:
    """N != t with chain(N, t) <= n dominating every member of [N, t] in weight.

    Requires |w|_t <= |w|_s. Splits are iterated upward from s until the
    remaining interval to t is short; each step strictly shrinks the chain
    length, which is asserted to guarantee termination.
    """
    if w.of_set(t) > w.of_set(s):
        raise ValueError("decreasing variant needs |w|_t <= |w|_s")
    _require_same_size(s, t)
    if not s.lt(t):
        raise ValueError(f"need {s} < {t}")
    base = s
    remaining = chain_length(base, t)
    while remaining > n:
        base = split(n, w, base, t)
        now = chain_length(base, t)
        if now >= remaining:
            raise AssertionError("chain length failed to decrease; split is broken")
        remaining = now
    bar = w.of_set(base)
    candidates = [m for m in interval_same_size(base, t) if m != t and w.of_set(m) >= bar]
    return _extremal(candidates, maximal=True)
