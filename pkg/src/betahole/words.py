"""Finite binary words and eventually periodic 0/1 sequences.

Words are plain strings over {0,1}; a word of length p stands for the purely
periodic sequence obtained by repeating it forever.  PeriodicSeq adds a finite
preperiod so shifted and quasi-greedy expansions can be represented exactly.
All values are immutable and all operations are pure.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator

# lexicographic comparison outcomes
LT, EQ, GT = -1, 0, 1

_SEQ_RE = re.compile(r"^([01]*)\(([01]+)\)$")


def check_word(w: str) -> str:
    """Validate a binary word: nonempty, every digit 0 or 1."""
    if not w or any(c not in "01" for c in w):
        raise ValueError(f"not a nonempty binary word: {w!r}")
    return w


def smallest_period(w: str) -> int:
    """Least q dividing len(w) such that w is the (len/q)-fold repeat of w[:q]."""
    check_word(w)
    n = len(w)
    for q in range(1, n + 1):
        if n % q == 0 and w == w[:q] * (n // q):
            return q
    return n  # unreachable; q = n always matches


def is_primitive(w: str) -> bool:
    return smallest_period(w) == len(w)


def rotations(w: str) -> list[str]:
    """All cyclic rotations of w, in rotation-offset order (offset 0 first)."""
    check_word(w)
    return [w[k:] + w[:k] for k in range(len(w))]


def lex_min_rotation(w: str) -> str:
    """The rotation r of w minimizing the infinite power (r)^inf.

    For rotations of equal length plain string order decides, since the first
    differing position settles both the finite and the infinite comparison.
    """
    return min(rotations(w))


def cyclic_lt(a: str, b: str) -> bool:
    """Whether (a)^inf is strictly lexicographically below (b)^inf.

    Inspects at most lcm(len(a), len(b)) symbols; beyond that both streams
    repeat with the common period, so equality is forced.
    """
    la, lb = len(a), len(b)
    if a == b:
        return False
    for i in range(math.lcm(la, lb)):
        x, y = a[i % la], b[i % lb]
        if x != y:
            return x < y
    return False


@dataclass(frozen=True, eq=False)
class PeriodicSeq:
    """An eventually periodic binary sequence: pre + period repeated forever.

    Raw construction is allowed (shift outputs stay cheap); canonical() makes
    the period primitive and the preperiod shortest.  Equality compares
    canonical forms.
    """

    pre: str
    period: str

    def __post_init__(self) -> None:
        if any(c not in "01" for c in self.pre):
            raise ValueError(f"bad preperiod: {self.pre!r}")
        check_word(self.period)

    def symbol(self, i: int) -> str:
        """The i-th symbol (0-based) of the infinite sequence."""
        if i < len(self.pre):
            return self.pre[i]
        return self.period[(i - len(self.pre)) % len(self.period)]

    def canonical(self) -> "PeriodicSeq":
        per = self.period[: smallest_period(self.period)]
        pre = self.pre
        # absorbing the last preperiod symbol into a right-rotated period
        # leaves the sequence unchanged
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        return PeriodicSeq(pre, per)

    def shift(self) -> "PeriodicSeq":
        """Drop the first symbol (the left-shift on sequences)."""
        if self.pre:
            return PeriodicSeq(self.pre[1:], self.period)
        p = self.period
        if len(p) == 1:
            return self
        return PeriodicSeq("", p[1:] + p[0])

    def is_purely_periodic(self) -> bool:
        return not self.canonical().pre

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PeriodicSeq):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.pre == b.pre and a.period == b.period

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.pre, c.period))

    def __str__(self) -> str:
        return f"{self.pre}({self.period})"

    def __repr__(self) -> str:
        return f"PeriodicSeq({self.pre!r}, {self.period!r})"

    @classmethod
    def parse(cls, text: str) -> "PeriodicSeq":
        """Parse the pre(period) serialization, e.g. '1(0)' or '(01)'."""
        m = _SEQ_RE.match(text)
        if m is None:
            raise ValueError(f"not a pre(period) sequence: {text!r}")
        return cls(m.group(1), m.group(2))

    @classmethod
    def pure(cls, period: str) -> "PeriodicSeq":
        return cls("", period)


def as_seq(x: "PeriodicSeq | str") -> PeriodicSeq:
    """Coerce a word to its purely periodic sequence."""
    if isinstance(x, PeriodicSeq):
        return x
    return PeriodicSeq.pure(check_word(x))


def lex_compare(a: "PeriodicSeq | str", b: "PeriodicSeq | str") -> int:
    """Lexicographic comparison of infinite sequences: LT, EQ or GT.

    Comparing the first len(pre_a)+len(pre_b)+lcm(|per_a|,|per_b|) symbols
    decides: past both preperiods the streams share the lcm period.
    """
    a, b = as_seq(a), as_seq(b)
    bound = len(a.pre) + len(b.pre) + math.lcm(len(a.period), len(b.period))
    for i in range(bound):
        x, y = a.symbol(i), b.symbol(i)
        if x != y:
            return LT if x < y else GT
    return EQ


def shift(s: "PeriodicSeq | str") -> PeriodicSeq:
    return as_seq(s).shift()


def primitive_representatives(
    p: int, lo: int | None = None, hi: int | None = None
) -> Iterator[str]:
    """Lexicographically least rotations of the primitive binary words of length p.

    Yields exactly one representative per cyclic class (the Lyndon words of
    length p), in increasing value of the word read as a binary number.  The
    optional [lo, hi) value range restricts output to a disjoint sub-range, so
    the enumeration can be partitioned across workers.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    if lo is None:
        lo = 0
    if hi is None:
        hi = 1 << p
    # Duval / FKM: generates all binary Lyndon words of length <= p in
    # lexicographic order; those of length exactly p are the representatives.
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == p:
            v = 0
            for bit in w:
                v = (v << 1) | bit
            if v >= hi:
                return  # values at fixed length only grow from here
            if v >= lo:
                yield "".join("01"[bit] for bit in w)
        m = len(w)
        while len(w) < p:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
