import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from placid.tableaux import (
    Tableau,
    format_word,
    insert,
    knuth_neighbors,
    parse_word,
    plactic_equal,
    tableau_key,
    tableau_of_word,
)


class TestWordFormat:
    def test_parse(self):
        assert parse_word("1 3 1 4") == (1, 3, 1, 4)
        assert parse_word("1,3, 1,4") == (1, 3, 1, 4)
        assert parse_word("") == ()
        assert parse_word("12 3") == (12, 3)  # multi-digit letters stay unambiguous

    def test_format_roundtrip(self):
        for w in ((), (1,), (10, 2, 10)):
            assert parse_word(format_word(w)) == w

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            parse_word("0 1")


class TestInsert:
    def test_base_case(self):
        assert insert(Tableau(), 1).rows == ((1,),)

    def test_bump(self):
        assert insert(Tableau(((1, 3),)), 1).rows == ((1, 1), (3,))

    def test_crosscheck_with_word(self):
        assert insert(Tableau(((1, 3),)), 1) == tableau_of_word((1, 3, 1))


class TestTableauOfWord:
    @pytest.mark.parametrize("word", [(1, 3, 1, 4), (1, 3, 4, 1), (3, 1, 1, 4)])
    def test_paper_example(self, word):
        assert tableau_of_word(word).rows == ((1, 1, 4), (3,))

    def test_empty(self):
        assert tableau_of_word(()).rows == ()

    def test_invariants_validated_on_construction(self):
        with pytest.raises(ValueError):
            Tableau(((2, 1),))  # row decreases
        with pytest.raises(ValueError):
            Tableau(((1, 1), (1,)))  # column not strict
        with pytest.raises(ValueError):
            Tableau(((1,), (2, 3)))  # upper row longer

    def test_render_and_json(self):
        t = tableau_of_word((1, 3, 1, 4))
        assert t.render() == "3\n1 1 4"
        assert Tableau.from_json(t.to_json()) == t


class TestPlacticEqual:
    def test_example_pair(self):
        assert plactic_equal((1, 3, 1, 4), (3, 1, 1, 4))

    def test_distinct_generators(self):
        assert not plactic_equal((1,), (2,))

    def test_neighbors_are_equal(self):
        w = (2, 1, 2, 2, 1)
        neighbors = knuth_neighbors(w)
        assert neighbors
        for v in neighbors:
            assert plactic_equal(w, v)


class TestKnuthNeighbors:
    def test_constant_word(self):
        assert knuth_neighbors((1, 1, 1)) == set()

    def test_213(self):
        assert knuth_neighbors((2, 1, 3)) == {(2, 3, 1)}

    def test_132(self):
        assert knuth_neighbors((1, 3, 2)) == {(3, 1, 2)}

    def test_symmetric(self):
        rng = random.Random(0)
        for _ in range(200):
            w = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 7)))
            for v in knuth_neighbors(w):
                assert w in knuth_neighbors(v)


def union_find_partition(words, neighbors):
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for v in neighbors(w):
            ra, rb = find(w), find(v)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for w in words:
        groups.setdefault(find(w), set()).add(w)
    return {frozenset(g) for g in groups.values()}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rewrite_closure_matches_tableaux(n):
    """Knuth-rewrite components equal tableau classes for every length <= 6.

    Partition equality covers all word pairs: u ~ v under rewrites iff the
    canonical forms agree.
    """
    for length in range(7):
        words = list(itertools.product(range(1, n + 1), repeat=length))
        rewrite = union_find_partition(words, knuth_neighbors)
        by_tab = {}
        for w in words:
            by_tab.setdefault(tableau_key(w), set()).add(w)
        assert rewrite == {frozenset(g) for g in by_tab.values()}


word_strategy = st.lists(st.integers(1, 6), max_size=40).map(tuple)


@settings(max_examples=150, deadline=None)
@given(word_strategy)
def test_tableau_invariants_hold(w):
    t = tableau_of_word(w)  # Tableau.__post_init__ checks all shape invariants
    assert t.size == len(w)


@settings(max_examples=80, deadline=None)
@given(word_strategy, word_strategy)
def test_equivalence_respects_concatenation(u, w):
    for v in knuth_neighbors(u):
        assert plactic_equal(u + w, v + w)
        assert plactic_equal(w + u, w + v)
