"""Labelled weighted digraphs of a matrix pair, and path transforms.

A pair (X, Y) of equal-dimension max-plus matrices defines a digraph whose
vertices index the matrices and whose X- and Y-labelled edges are the finite
entries. The (i, j) entry of a word evaluated at (X, Y) is the maximum weight
of an (i -> j) path carrying that label word. When vertices are subsets,
paths can be pushed through vertexwise meet/join with a fixed set N, which is
what the splitting construction uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .subsets import SubsetOfN, canonical_key, join, meet, subset_leq
from .tropical import NEG_INF, TropMatrix, TropValue, value_from_json, value_to_json

Vertex = int | SubsetOfN

_LABEL_TO_SLOT = {"X": 0, "a": 0, "Y": 1, "b": 1}


def normalize_labels(word: str) -> str:
    """Map a word over {a,b} or {X,Y} to the canonical X/Y label string."""
    try:
        return "".join("XY"[_LABEL_TO_SLOT[c]] for c in word)
    except KeyError as exc:
        raise ValueError(f"bad edge label {exc.args[0]!r}") from None


@dataclass(frozen=True)
class LabeledDigraph:
    """Vertices plus the X/Y matrices whose finite entries are the edges."""

    x: TropMatrix
    y: TropMatrix

    def __post_init__(self) -> None:
        if self.x.dim != self.y.dim:
            raise ValueError(f"dimension mismatch: {self.x.dim} vs {self.y.dim}")
        if self.x.labels != self.y.labels:
            raise ValueError("matrices must agree on vertex labels")

    @property
    def dim(self) -> int:
        return self.x.dim

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        if self.x.labels is not None:
            return self.x.labels
        return tuple(range(self.dim))

    @property
    def subset_labeled(self) -> bool:
        return self.x.labels is not None

    def index_of(self, v: Vertex) -> int:
        if self.x.labels is not None:
            return self.x.labels.index(v)
        if not isinstance(v, int):
            raise ValueError(f"vertex {v!r} on an integer-indexed digraph")
        return v

    def matrix(self, label: str) -> TropMatrix:
        return (self.x, self.y)[_LABEL_TO_SLOT[label]]

    def edge_weight(self, src: Vertex, dst: Vertex, label: str) -> TropValue:
        return self.matrix(label).rows[self.index_of(src)][self.index_of(dst)]

    def edges(self) -> list[tuple[Vertex, Vertex, str, TropValue]]:
        verts = self.vertices
        out = []
        for label, m in (("X", self.x), ("Y", self.y)):
            for i in range(self.dim):
                for j in range(self.dim):
                    w = m.rows[i][j]
                    if w != NEG_INF:
                        out.append((verts[i], verts[j], label, w))
        return out


def build_digraph(x: TropMatrix, y: TropMatrix) -> LabeledDigraph:
    return LabeledDigraph(x, y)


@dataclass(frozen=True)
class Path:
    """Edge sequence recorded as vertices (len = edges + 1), labels, weight."""

    vertices: tuple[Vertex, ...]
    labels: str
    weight: TropValue

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.labels) + 1:
            raise ValueError("vertex count must be label count + 1")

    @property
    def src(self) -> Vertex:
        return self.vertices[0]

    @property
    def dst(self) -> Vertex:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        verts: list = [
            list(v.elements) if isinstance(v, SubsetOfN) else v
            for v in self.vertices
        ]
        return {
            "vertices": verts,
            "labels": self.labels,
            "weight": value_to_json(self.weight),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Path":
        verts = tuple(
            SubsetOfN.from_elements(v) if isinstance(v, list) else v
            for v in data["vertices"]
        )
        return cls(verts, data["labels"], value_from_json(data["weight"]))


def path_weight(g: LabeledDigraph, vertices: Sequence[Vertex], labels: str) -> TropValue:
    """Sum of edge weights along the vertex/label sequence (bottom if broken)."""
    labels = normalize_labels(labels)
    total: TropValue = 0
    for k, label in enumerate(labels):
        total += g.edge_weight(vertices[k], vertices[k + 1], label)
    return total


def make_path(g: LabeledDigraph, vertices: Sequence[Vertex], labels: str) -> Path:
    labels = normalize_labels(labels)
    w = path_weight(g, vertices, labels)
    if w == NEG_INF:
        raise ValueError("vertex sequence uses a missing edge")
    return Path(tuple(vertices), labels, w)


def _vertex_sort_key(v: Vertex):
    return canonical_key(v) if isinstance(v, SubsetOfN) else v


def max_weight_path(
    g: LabeledDigraph, word: str, src: Vertex, dst: Vertex
) -> tuple[TropValue, Path | None]:
    """Best weight of a (src -> dst) path labelled by the word, with a witness.

    Among maximal-weight paths the witness has the lexicographically smallest
    vertex sequence in canonical order, so outputs are reproducible. Returns
    (NEG_INF, None) when no labelled path exists.
    """
    labels = normalize_labels(word)
    if not labels:
        raise ValueError("label word must be non-empty")
    si, di = g.index_of(src), g.index_of(dst)
    m = len(labels)
    dim = g.dim
    # tail[t][v] = best weight from v to dst using labels[t:]
    tail = [[NEG_INF] * dim for _ in range(m + 1)]
    tail[m][di] = 0
    for t in range(m - 1, -1, -1):
        mat = g.matrix(labels[t]).rows
        nxt = tail[t + 1]
        row_t = tail[t]
        for v in range(dim):
            best = NEG_INF
            mv = mat[v]
            for u in range(dim):
                cand = mv[u] + nxt[u]
                if cand > best:
                    best = cand
            row_t[v] = best
    total = tail[0][si]
    if total == NEG_INF:
        return NEG_INF, None

    verts = g.vertices
    order = sorted(range(dim), key=lambda i: _vertex_sort_key(verts[i]))
    seq = [si]
    v = si
    for t in range(m):
        mat = g.matrix(labels[t]).rows
        need = tail[t][v]
        for u in order:
            if mat[v][u] + tail[t + 1][u] == need:
                seq.append(u)
                v = u
                break
        else:
            raise AssertionError("witness reconstruction lost the optimum")
    path = Path(tuple(verts[i] for i in seq), labels, total)
    return total, path


def _require_subset_graph(g: LabeledDigraph) -> None:
    if not g.subset_labeled:
        raise ValueError("operation needs a subset-labeled digraph")


def _map_path(g: LabeledDigraph, p: Path, f) -> Path:
    verts = tuple(f(v) for v in p.vertices)
    w = path_weight(g, verts, p.labels)
    if w == NEG_INF:
        raise ValueError("image of the path uses a missing edge")
    return Path(verts, p.labels, w)


def phi_path(g: LabeledDigraph, p: Path, n_set: SubsetOfN) -> Path:
    """Vertexwise meet with n_set, keeping every edge label."""
    _require_subset_graph(g)
    return _map_path(g, p, lambda v: meet(v, n_set))


def psi_path(g: LabeledDigraph, p: Path, n_set: SubsetOfN) -> Path:
    """Vertexwise join with n_set, keeping every edge label."""
    _require_subset_graph(g)
    return _map_path(g, p, lambda v: join(v, n_set))


def loops_path(g: LabeledDigraph, at: Vertex, labels: str) -> Path:
    """All-loops path at one vertex carrying the given label word."""
    verts = (at,) * (len(labels) + 1)
    return make_path(g, verts, labels)


def splitting_paths(
    g: LabeledDigraph, gamma: Path, n_set: SubsetOfN
) -> tuple[Path, Path, Path]:
    """Split a path S -> T at N in [S, T] into sigma, tau and a loop path.

    sigma runs S -> N (meet image), tau runs N -> T (join image), lambda loops
    at N with gamma's labels; all three carry gamma's labelling and satisfy
    weight(gamma) + weight(lambda) <= weight(sigma) + weight(tau).
    """
    _require_subset_graph(g)
    s, t = gamma.src, gamma.dst
    if not (subset_leq(s, n_set) and subset_leq(n_set, t)):
        raise ValueError(f"{n_set} is not inside [{s}, {t}]")
    sigma = phi_path(g, gamma, n_set)
    tau = psi_path(g, gamma, n_set)
    lam = loops_path(g, n_set, gamma.labels)
    return sigma, tau, lam
