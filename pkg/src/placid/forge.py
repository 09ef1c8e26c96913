"""Construction of q-words and the two-sided identities built from them.

A q-word for rank n is a word over {a, b} containing every length-(n-1)
binary word as a factor. The identity pair is u = q^h a q^h, v = q^h b q^h
with h = n^2 // 4, followed by the substitution a -> ab, b -> ba applied to
both sides. The constrained variant additionally begins with b, ends in
a^(n-1) and avoids a^n, which is what defeats (n+1)-dimensional upper
triangular tropical matrices.

Every constructed q passes through verify_q before being returned; the
correctness of the builders rests on that checker, not on construction
subtlety.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

ALPHABET = "ab"


def substitute(word: str, image_a: str, image_b: str) -> str:
    """Homomorphic image of a word over {a, b}."""
    if not word:
        raise ValueError("cannot substitute into the empty word")
    bad = set(word) - set(ALPHABET)
    if bad:
        raise ValueError(f"word letters must be a/b, got {sorted(bad)}")
    return "".join(image_a if c == "a" else image_b for c in word)


def de_bruijn_binary(k: int) -> str:
    """Lexicographically least binary de Bruijn cycle of order k (a < b).

    Standard Lyndon-word concatenation; length 2^k, every k-word appears
    exactly once as a cyclic factor.
    """
    if k < 1:
        raise ValueError("order must be >= 1")
    sequence: list[int] = []
    candidate = [0] * (k + 1)

    def extend(t: int, p: int) -> None:
        if t > k:
            if k % p == 0:
                sequence.extend(candidate[1 : p + 1])
            return
        candidate[t] = candidate[t - p]
        extend(t + 1, p)
        for digit in range(candidate[t - p] + 1, 2):
            candidate[t] = digit
            extend(t + 1, t)

    extend(1, 1)
    return "".join(ALPHABET[d] for d in sequence)


@dataclass(frozen=True)
class QReport:
    ok: bool
    violations: tuple[str, ...] = ()


def verify_q(q: str, n: int, constrained: bool) -> QReport:
    """Direct factor scans for all q-word invariants."""
    if n < 2:
        return QReport(False, ("rank must be >= 2",))
    k = n - 1
    problems: list[str] = []
    windows = {q[i : i + k] for i in range(len(q) - k + 1)}
    missing = ["".join(w) for w in product(ALPHABET, repeat=k) if "".join(w) not in windows]
    if missing:
        problems.append(f"missing length-{k} factors: {','.join(missing)}")
    if constrained:
        if not q.startswith("b"):
            problems.append("must begin with b")
        if not q.endswith("a" * k):
            problems.append(f"must end with a^{k}")
        if "a" * n in q:
            problems.append(f"contains forbidden factor a^{n}")
    return QReport(not problems, tuple(problems))


@dataclass(frozen=True)
class QWord:
    word: str
    rank: int
    constrained: bool


def build_q(n: int, constrained: bool = False, minimal: bool = True) -> QWord:
    """Build a q-word for rank n.

    Unconstrained minimal mode linearizes a de Bruijn cycle (length
    2^(n-1) + n - 2, the shortest possible superstring); non-minimal mode
    concatenates all (n-1)-words. The constrained builder rotates the cycle
    so its unique maximal a-run is terminal, prepends the cycle's last n-2
    letters to keep every factor, then prepends b if needed.
    """
    if n < 2:
        raise ValueError("rank must be >= 2")
    k = n - 1
    if constrained:
        cycle = de_bruijn_binary(k)
        run = "a" * k
        doubled = cycle + cycle
        pos = doubled.index(run)
        rotated = cycle[(pos + k) % len(cycle) :] + cycle[: (pos + k) % len(cycle)]
        word = rotated[len(rotated) - (k - 1) :] + rotated if k > 1 else rotated
        if not word.startswith("b"):
            word = "b" + word
    elif minimal:
        cycle = de_bruijn_binary(k)
        word = cycle + cycle[: k - 1]
    else:
        word = "".join("".join(w) for w in product(ALPHABET, repeat=k))
    report = verify_q(word, n, constrained)
    if not report.ok:
        raise RuntimeError(f"q construction bug for n={n}: {report.violations}")
    return QWord(word, n, constrained)


@dataclass(frozen=True)
class IdentityWords:
    """A candidate two-variable semigroup identity."""

    lhs: str
    rhs: str

    def __post_init__(self) -> None:
        for side in (self.lhs, self.rhs):
            if not side:
                raise ValueError("identity sides must be non-empty")
            if set(side) - set(ALPHABET):
                raise ValueError(f"identity letters must be a/b: {side!r}")

    @property
    def length(self) -> int:
        return len(self.lhs)

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs}

    @classmethod
    def from_json(cls, data: dict) -> "IdentityWords":
        return cls(data["lhs"], data["rhs"])


@dataclass(frozen=True)
class BuiltIdentity:
    """Identity plus full provenance, enough to reproduce it exactly."""

    identity: IdentityWords
    n: int
    constrained: bool
    mode: str  # "minimal" | "any" | "constructed"
    q: str
    h: int
    pre_lhs: str
    pre_rhs: str

    @property
    def length(self) -> int:
        return self.identity.length

    def to_json(self) -> dict:
        return {
            "kind": "identity",
            "n": self.n,
            "constrained": self.constrained,
            "mode": self.mode,
            "q": self.q,
            "h": self.h,
            "pre_lhs": self.pre_lhs,
            "pre_rhs": self.pre_rhs,
            "lhs": self.identity.lhs,
            "rhs": self.identity.rhs,
            "length": self.length,
        }

    @classmethod
    def from_json(cls, data: dict) -> "BuiltIdentity":
        built = cls(
            identity=IdentityWords(data["lhs"], data["rhs"]),
            n=data["n"],
            constrained=data["constrained"],
            mode=data["mode"],
            q=data["q"],
            h=data["h"],
            pre_lhs=data["pre_lhs"],
            pre_rhs=data["pre_rhs"],
        )
        if built.length != data["length"]:
            raise ValueError("length field disagrees with the identity sides")
        return built


def build_identity(n: int, constrained: bool = False, minimal: bool = True) -> BuiltIdentity:
    """Build u = q^h a q^h, v = q^h b q^h, then substitute a -> ab, b -> ba.

    Each substituted side has length 2 * (2 * h * |q| + 1); with the minimal
    unconstrained q this is the shortest identity this construction yields.
    """
    qword = build_q(n, constrained=constrained, minimal=minimal)
    h = n * n // 4
    block = qword.word * h
    pre_lhs = block + "a" + block
    pre_rhs = block + "b" + block
    identity = IdentityWords(
        substitute(pre_lhs, "ab", "ba"),
        substitute(pre_rhs, "ab", "ba"),
    )
    if constrained:
        mode = "constructed"
    else:
        mode = "minimal" if minimal else "any"
    return BuiltIdentity(
        identity=identity,
        n=n,
        constrained=constrained,
        mode=mode,
        q=qword.word,
        h=h,
        pre_lhs=pre_lhs,
        pre_rhs=pre_rhs,
    )


# Rank-3 cross-check fixture: both sides of the classical length-10 identity
# of the bicyclic monoid, composed as p q q p q p = p q p q q p.
ADIAN_LHS = "abbaababba"
ADIAN_RHS = "abbabaabba"
KUBAT_OKNINSKI_RANK3 = IdentityWords(
    lhs=ADIAN_LHS + ADIAN_RHS + ADIAN_RHS + ADIAN_LHS + ADIAN_RHS + ADIAN_LHS,
    rhs=ADIAN_LHS + ADIAN_RHS + ADIAN_LHS + ADIAN_RHS + ADIAN_RHS + ADIAN_LHS,
)
