"""Max-plus matrices with exact integer entries.

Scalars are Python ints plus the absorbing bottom element NEG_INF (the float
-inf constant: it is a distinct non-integer value, never collides with entry
arithmetic, and max/+ behave correctly). All comparisons are exact; no
tolerance policy exists anywhere in this package. JSON writes the bottom
element as the string "-inf".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .subsets import SubsetOfN

NEG_INF = float("-inf")

TropValue = int | float  # int, or NEG_INF


@dataclass(frozen=True)
class TropMatrix:
    """Square max-plus matrix, optionally labeled by canonical subsets."""

    rows: tuple[tuple[TropValue, ...], ...]
    labels: tuple[SubsetOfN, ...] | None = None

    def __post_init__(self) -> None:
        d = len(self.rows)
        if any(len(row) != d for row in self.rows):
            raise ValueError("matrix must be square")
        if self.labels is not None and len(self.labels) != d:
            raise ValueError("label count must equal the dimension")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> TropValue:
        return self.rows[i][j]

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[TropValue]],
        labels: Sequence[SubsetOfN] | None = None,
    ) -> "TropMatrix":
        return cls(
            tuple(tuple(row) for row in rows),
            tuple(labels) if labels is not None else None,
        )


def trop_identity(dim: int) -> TropMatrix:
    return TropMatrix(
        tuple(
            tuple(0 if i == j else NEG_INF for j in range(dim)) for i in range(dim)
        )
    )


def trop_mul(a: TropMatrix, b: TropMatrix) -> TropMatrix:
    """Max-plus product: C_ij = max_k (A_ik + B_kj)."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.labels is not None and b.labels is not None and a.labels != b.labels:
        raise ValueError("label mismatch")
    cols = tuple(zip(*b.rows))
    rows = tuple(
        tuple(max(x + y for x, y in zip(arow, col)) for col in cols)
        for arow in a.rows
    )
    return TropMatrix(rows, a.labels or b.labels)


def trop_pow(a: TropMatrix, k: int) -> TropMatrix:
    if k < 1:
        raise ValueError("exponent must be >= 1")
    acc = a
    for _ in range(k - 1):
        acc = trop_mul(acc, a)
    return acc


_LETTER_TO_SLOT = {"a": 0, "X": 0, "b": 1, "Y": 1}


def eval_word(word: str, x: TropMatrix, y: TropMatrix) -> TropMatrix:
    """Evaluate a two-letter word (a/b, or X/Y labels) at the matrix pair."""
    if not word:
        raise ValueError("cannot evaluate the empty word")
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")
    pair = (x, y)
    try:
        acc = pair[_LETTER_TO_SLOT[word[0]]]
        for letter in word[1:]:
            acc = trop_mul(acc, pair[_LETTER_TO_SLOT[letter]])
    except KeyError as exc:
        raise ValueError(f"word letter {exc.args[0]!r} not in {{a,b}}") from None
    return acc


def is_upper_triangular(a: TropMatrix) -> bool:
    return all(
        a.rows[i][j] == NEG_INF for i in range(a.dim) for j in range(i)
    )


def random_ut(
    dim: int,
    lo: int,
    hi: int,
    seed: int | None = None,
    rng: random.Random | None = None,
    neginf_density: float = 0.0,
) -> TropMatrix:
    """Random upper-triangular matrix with integer entries in [lo, hi].

    Strictly-above-diagonal entries are independently replaced by NEG_INF with
    probability ``neginf_density``; diagonal entries stay finite. Deterministic
    for a fixed seed (or caller-owned rng).
    """
    if rng is None:
        rng = random.Random(seed)
    rows = []
    for i in range(dim):
        row: list[TropValue] = [NEG_INF] * dim
        for j in range(i, dim):
            if j > i and rng.random() < neginf_density:
                continue
            row[j] = rng.randint(lo, hi)
        rows.append(tuple(row))
    return TropMatrix(tuple(rows))


def value_to_json(v: TropValue) -> int | str:
    return "-inf" if v == NEG_INF else int(v)


def value_from_json(v: int | str) -> TropValue:
    if v == "-inf":
        return NEG_INF
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"tropical entries are integers or '-inf', got {v!r}")
    return v


def matrix_to_json(m: TropMatrix) -> dict:
    data: dict = {
        "dim": m.dim,
        "rows": [[value_to_json(v) for v in row] for row in m.rows],
    }
    if m.labels is not None:
        data["labels"] = [list(s.elements) for s in m.labels]
    return data


def matrix_from_json(data: dict) -> TropMatrix:
    rows = tuple(tuple(value_from_json(v) for v in row) for row in data["rows"])
    labels = None
    if data.get("labels") is not None:
        labels = tuple(SubsetOfN.from_elements(el) for el in data["labels"])
    m = TropMatrix(rows, labels)
    if m.dim != data["dim"]:
        raise ValueError("dim field disagrees with row count")
    return m
