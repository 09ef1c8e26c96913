"""Words over {1,..,n}, Schensted row insertion, and plactic equality.

Words are tuples of integer letters. Tableaux store their rows bottom-first
(the bottom row is the insertion row); rows are weakly increasing and columns
strictly increase going upward. Two words are equal in the plactic monoid
exactly when they insert to the same tableau.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable

Word = tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse space- or comma-separated integer letters ("1 3 1 4")."""
    cleaned = text.replace(",", " ").strip()
    if not cleaned:
        return ()
    letters = tuple(int(part) for part in cleaned.split())
    if any(x < 1 for x in letters):
        raise ValueError(f"letters must be >= 1: {text!r}")
    return letters


def format_word(word: Iterable[int]) -> str:
    return " ".join(str(x) for x in word)


def validate_word(word: Word, n: int) -> None:
    for x in word:
        if not 1 <= x <= n:
            raise ValueError(f"letter {x} outside [1, {n}]")


@dataclass(frozen=True)
class Tableau:
    """Semistandard Young tableau; ``rows[0]`` is the bottom (longest) row."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        for i, row in enumerate(self.rows):
            if not row:
                raise ValueError("empty tableau row")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {i} not weakly increasing: {row}")
            if i:
                below = self.rows[i - 1]
                if len(row) > len(below):
                    raise ValueError("row lengths must weakly decrease upward")
                if any(a >= b for a, b in zip(below, row)):
                    raise ValueError("columns must strictly increase upward")

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def reading_word(self) -> Word:
        """Row reading word: top row first, each row left to right."""
        out: list[int] = []
        for row in reversed(self.rows):
            out.extend(row)
        return tuple(out)

    def to_json(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(tuple(tuple(row) for row in data["rows"]))

    def render(self) -> str:
        """Text rendering, top row printed first."""
        if not self.rows:
            return "(empty tableau)"
        return "\n".join(" ".join(str(x) for x in row) for row in reversed(self.rows))


def _insert_into_rows(rows: list[list[int]], x: int) -> None:
    # bump the leftmost entry strictly greater than x, carrying upward
    for row in rows:
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return
        row[j], x = x, row[j]
    rows.append([x])


def insert(t: Tableau, x: int) -> Tableau:
    """Schensted row insertion of one letter (returns a new tableau)."""
    if x < 1:
        raise ValueError(f"letter must be >= 1, got {x}")
    rows = [list(row) for row in t.rows]
    _insert_into_rows(rows, x)
    return Tableau(tuple(tuple(row) for row in rows))


def tableau_of_word(word: Iterable[int]) -> Tableau:
    """Left fold of Schensted insertion over the word, from the empty tableau."""
    rows: list[list[int]] = []
    for x in word:
        _insert_into_rows(rows, x)
    return Tableau(tuple(tuple(row) for row in rows))


def tableau_key(word: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Canonical-form key for equality checks, skipping Tableau validation."""
    rows: list[list[int]] = []
    for x in word:
        _insert_into_rows(rows, x)
    return tuple(tuple(row) for row in rows)


def plactic_equal(u: Iterable[int], v: Iterable[int]) -> bool:
    """True iff u and v insert to the same tableau."""
    return tableau_key(u) == tableau_key(v)


def knuth_neighbors(word: Word) -> set[Word]:
    """Words reachable by one Knuth rewrite, in either direction.

    The two schemas are yzx = yxz for x < y <= z and zxy = xzy for x <= y < z
    (single application at a single position). Test oracle only; production
    equality goes through tableaux.
    """
    w = tuple(word)
    out: set[Word] = set()
    for i in range(len(w) - 2):
        x, y, z = w[i], w[i + 1], w[i + 2]
        # (b,c,a) <-> (b,a,c) for a < b <= c: swap the last two letters
        if z < x <= y or y < x <= z:
            out.add(w[:i] + (x, z, y) + w[i + 3 :])
        # (c,a,b) <-> (a,c,b) for a <= b < c: swap the first two letters
        if y <= z < x or x <= z < y:
            out.add(w[:i] + (y, x, z) + w[i + 3 :])
    return out
