import random

import pytest

from placid.subsets import (
    SubsetOfN,
    WordCounts,
    all_subsets,
    canonical_key,
    chain_length,
    chain_length_formula,
    enumerate_interval,
    interval_same_size,
    interval_union,
    join,
    meet,
    split,
    split_apply_decreasing,
    split_apply_increasing,
    subset_leq,
)

S = SubsetOfN.from_elements


def brute_glb(n, s, t):
    subs = all_subsets(n)
    lower = [m for m in subs if subset_leq(m, s) and subset_leq(m, t)]
    greatest = [m for m in lower if all(subset_leq(p, m) for p in lower)]
    assert len(greatest) == 1, f"no unique glb for {s}, {t}"
    return greatest[0]


def brute_lub(n, s, t):
    subs = all_subsets(n)
    upper = [m for m in subs if subset_leq(s, m) and subset_leq(t, m)]
    least = [m for m in upper if all(subset_leq(m, p) for p in upper)]
    assert len(least) == 1, f"no unique lub for {s}, {t}"
    return least[0]


class TestOrder:
    def test_leq_componentwise(self):
        assert subset_leq(S([1, 2]), S([2, 3]))

    def test_leq_size_rule(self):
        assert not subset_leq(S([1]), S([1, 2]))

    def test_leq_smaller_target(self):
        assert subset_leq(S([1, 2, 3]), S([3]))

    def test_empty_is_top(self):
        for n in range(5):
            for s in all_subsets(4):
                assert subset_leq(s, S([]))

    def test_text_roundtrip(self):
        for text in ("{}", "{1}", "{1,3,4}"):
            assert SubsetOfN.from_text(text).text == text

    def test_accessors(self):
        s = S([2, 5, 7])
        assert s.elements == (2, 5, 7)
        assert s.size == 3 and len(s) == 3
        assert s.nth(2) == 5
        assert 5 in s and 3 not in s

    def test_canonical_order_starts_small(self):
        subs = all_subsets(2)
        assert subs == (S([]), S([1]), S([2]), S([1, 2]))


class TestLattice:
    def test_meet_join_examples(self):
        assert meet(S([1, 4]), S([2, 3])) == S([1, 3])
        assert join(S([1, 4]), S([2, 3])) == S([2, 4])

    def test_mixed_size_example(self):
        assert meet(S([2, 5]), S([1, 3, 4])) == S([1, 3, 4])
        assert join(S([2, 5]), S([1, 3, 4])) == S([2, 5])

    def test_idempotent(self):
        for s in all_subsets(3):
            assert meet(s, s) == s == join(s, s)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_brute_force(self, n):
        subs = all_subsets(n)
        for s in subs:
            for t in subs:
                assert meet(s, t) == brute_glb(n, s, t)
                assert join(s, t) == brute_lub(n, s, t)

    def test_axioms_n3(self):
        subs = all_subsets(3)
        for s in subs:
            for t in subs:
                assert meet(s, t) == meet(t, s)
                assert join(s, t) == join(t, s)
                assert meet(s, join(s, t)) == s
                assert join(s, meet(s, t)) == s
                for u in subs:
                    assert meet(meet(s, t), u) == meet(s, meet(t, u))
                    assert join(join(s, t), u) == join(s, join(t, u))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_meet_join_monotone(self, n):
        subs = all_subsets(n)
        for s in subs:
            for t in subs:
                if not subset_leq(s, t):
                    continue
                for m in subs:
                    assert subset_leq(meet(s, m), meet(t, m))
                    assert subset_leq(join(s, m), join(t, m))


class TestChains:
    def test_forced_chain(self):
        assert chain_length(S([1]), S([3])) == 3

    def test_singleton_interval(self):
        assert chain_length(S([2, 4]), S([2, 4])) == 1

    def test_widest_pair_in_four(self):
        assert chain_length(S([1, 2]), S([3, 4])) == 5

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            chain_length(S([1]), S([1, 2]))
        with pytest.raises(ValueError):
            chain_length(S([3]), S([1]))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_formula_matches_search(self, n):
        subs = all_subsets(n)
        for s in subs:
            for t in subs:
                if s.size == t.size and subset_leq(s, t):
                    assert chain_length(s, t) == chain_length_formula(s, t)


class TestIntervals:
    def test_two_element(self):
        assert set(enumerate_interval(2, S([1]), S([2]))) == {S([1]), S([2])}

    def test_point(self):
        assert enumerate_interval(3, S([1, 3]), S([1, 3])) == (S([1, 3]),)

    def test_pairs_in_three(self):
        got = set(enumerate_interval(3, S([1, 2]), S([2, 3])))
        assert got == {S([1, 2]), S([1, 3]), S([2, 3])}

    def test_mixed_sizes_need_ambient(self):
        inside3 = set(enumerate_interval(3, S([1, 2, 3]), S([3])))
        inside4 = set(enumerate_interval(4, S([1, 2, 3]), S([3])))
        assert inside3 < inside4
        for m in inside4:
            assert subset_leq(S([1, 2, 3]), m) and subset_leq(m, S([3]))

    def test_rejects_incomparable(self):
        with pytest.raises(ValueError):
            enumerate_interval(3, S([2]), S([1]))

    def test_union(self):
        assert interval_union(S([1]), S([2])) == S([1, 2])
        assert interval_union(S([1, 2]), S([3, 4])) == S([1, 2, 3, 4])

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_union_matches_elementwise_ranges(self, n):
        # closed form candidate: union of the ranges [s_i, t_i]
        subs = all_subsets(n)
        for s in subs:
            for t in subs:
                if s.size != t.size or not subset_leq(s, t):
                    continue
                closed = set()
                for a, b in zip(s.elements, t.elements):
                    closed.update(range(a, b + 1))
                assert interval_union(s, t) == SubsetOfN.from_elements(closed)


def random_equal_size_pair(rng, n):
    while True:
        size = rng.randint(1, n)
        s = S(rng.sample(range(1, n + 1), size))
        t = S(rng.sample(range(1, n + 1), size))
        if s.lt(t):
            return s, t


def check_split_postconditions(n, w, s, t, got):
    assert got != s
    assert subset_leq(s, got) and subset_leq(got, t)
    assert w.of_set(got) >= min(w.of_set(s), w.of_set(t))
    assert chain_length(s, got) <= n


class TestSplit:
    def test_spec_example(self):
        w = WordCounts.of_word((1, 2, 3, 4))
        got = split(4, w, S([1, 2]), S([3, 4]))
        assert got == S([2, 3])
        check_split_postconditions(4, w, S([1, 2]), S([3, 4]), got)

    def test_short_interval_returns_top(self):
        w = WordCounts.of_word((3, 3, 1))
        assert split(3, w, S([1]), S([3])) == S([3])

    def test_rejects_bad_preconditions(self):
        w = WordCounts.of_word((1,))
        with pytest.raises(ValueError):
            split(3, w, S([1]), S([1]))
        with pytest.raises(ValueError):
            split(3, w, S([1]), S([1, 2]))

    def test_random_instances(self):
        rng = random.Random(5)
        for _ in range(400):
            n = rng.randint(2, 6)
            s, t = random_equal_size_pair(rng, n)
            w = WordCounts.of_word(
                [rng.randint(1, n) for _ in range(rng.randint(0, 15))]
            )
            check_split_postconditions(n, w, s, t, split(n, w, s, t))


class TestSplitApply:
    def test_trivial_increasing(self):
        w = WordCounts.of_word((1, 2, 3))
        assert split_apply_increasing(3, w, S([1]), S([2])) == S([2])

    def test_increasing_spec_example(self):
        w = WordCounts.of_word((1, 2, 3, 4))
        s, t = S([1, 2]), S([3, 4])
        got = split_apply_increasing(4, w, s, t)
        assert got != s and chain_length(s, got) <= 4
        for m in interval_same_size(s, got):
            assert w.of_set(m) <= w.of_set(got)

    def test_rejects_wrong_direction(self):
        w = WordCounts.of_word((1, 1, 1))
        with pytest.raises(ValueError):
            split_apply_increasing(3, w, S([1]), S([3]))
        w2 = WordCounts.of_word((3, 3, 3))
        with pytest.raises(ValueError):
            split_apply_decreasing(3, w2, S([1]), S([3]))

    def test_random_instances(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(2, 5)
            s, t = random_equal_size_pair(rng, n)
            w = WordCounts.of_word(
                [rng.randint(1, n) for _ in range(rng.randint(0, 15))]
            )
            if w.of_set(s) <= w.of_set(t):
                got = split_apply_increasing(n, w, s, t)
                assert got != s and chain_length(s, got) <= n
                assert subset_leq(s, got) and subset_leq(got, t)
                for m in interval_same_size(s, got):
                    assert w.of_set(m) <= w.of_set(got)
            if w.of_set(t) <= w.of_set(s):
                got = split_apply_decreasing(n, w, s, t)
                assert got != t and chain_length(got, t) <= n
                assert subset_leq(s, got) and subset_leq(got, t)
                for m in interval_same_size(got, t):
                    assert w.of_set(m) <= w.of_set(got)


class TestWordCounts:
    def test_counts(self):
        w = WordCounts.of_word((1, 2, 2, 5))
        assert w.count(2) == 2 and w.count(3) == 0
        assert w.of_set(S([2, 5])) == 3
        assert w.of_set(S([])) == 0
