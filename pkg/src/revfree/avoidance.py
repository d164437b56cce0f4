"""The central predicate: no subword of length >= k occurs together with its reversal.

A word is "valid" for a query (k, squarefree?) when no subword x with
|x| >= k has its reversal also present (and, optionally, the word is
squarefree).  Checking length exactly k suffices: any longer offending x
contains an offending length-k prefix whose reversal is a suffix of x^R.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .words import FactorSet, Word, factors, is_squarefree, reverse


@dataclass(frozen=True)
class AvoidanceQuery:
    k: int
    require_squarefree: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")


@dataclass(frozen=True)
class ConflictWitness:
    """A length-k subword occurring together with its reversal."""

    x: Word
    position_x: int
    position_xr: int


@dataclass(frozen=True)
class SquareWitness:
    """A square xx found at the recorded offset."""

    x: Word
    position: int


def has_reversal_conflict(a: FactorSet) -> bool:
    """True iff some member of the set has its reversal also in the set.

    Palindromic members conflict with themselves.
    """
    return any(reverse(x) in a.members for x in a.members)


def _occurrence(w: Word, x: Word) -> int:
    n = len(x)
    for i in range(len(w) - n + 1):
        if w.symbols[i : i + n] == x.symbols:
            return i
    raise ValueError(f"{x} does not occur in {w}")


def find_conflict(w: Word, q: AvoidanceQuery) -> ConflictWitness | SquareWitness | None:
    """The lexicographically first length-k reversal conflict in w, a square
    (when the query demands squarefreeness), or None when w is valid."""
    if len(w) >= q.k:
        fs = factors(w, q.k)
        conflicts = sorted(x for x in fs.members if reverse(x) in fs.members)
        if conflicts:
            x = conflicts[0]
            return ConflictWitness(x, _occurrence(w, x), _occurrence(w, reverse(x)))
    if q.require_squarefree and not is_squarefree(w):
        for i in range(len(w)):
            for half in range(1, (len(w) - i) // 2 + 1):
                if w.symbols[i : i + half] == w.symbols[i + half : i + 2 * half]:
                    return SquareWitness(w[i : i + half], i)
    return None


def is_valid(w: Word, q: AvoidanceQuery) -> bool:
    """True iff w avoids reversed subwords of length >= q.k (vacuously when
    |w| < k) and, if required, squares."""
    return find_conflict(w, q) is None


def reduction_equivalence(w: Word, k: int) -> bool:
    """Check that the length-exactly-k test agrees with quantifying over all
    subword lengths >= k.  The contract says this always holds; it is exposed
    as a brute-force oracle."""
    if len(w) < k:
        raise ValueError("word shorter than k")
    at_k = has_reversal_conflict(factors(w, k))
    at_any = any(
        has_reversal_conflict(factors(w, n)) for n in range(k, len(w) + 1)
    )
    return at_k == at_any


def find_avoiding_word(s: int, length: int, patterns: set[Word] | frozenset[Word]) -> Word | None:
    """A word of the given length over {0..s-1} containing no member of
    `patterns` as a contiguous subword, or None when every word contains one."""
    if length < 1:
        raise ValueError("length must be at least 1")
    pats = [p.symbols for p in patterns]
    for p in patterns:
        if any(c >= s for c in p.symbols):
            raise ValueError(f"pattern {p} is not over an alphabet of size {s}")
    for candidate in itertools.product(range(s), repeat=length):
        hit = False
        for p in pats:
            m = len(p)
            if any(candidate[i : i + m] == p for i in range(length - m + 1)):
                hit = True
                break
        if not hit:
            return Word(candidate, s)
    return None


def verify_unavoidable(s: int, length: int, patterns: set[Word] | frozenset[Word]) -> bool:
    """True iff every word of exactly the given length over {0..s-1} contains
    a member of `patterns`.  Length exactly L suffices for "at least L":
    containment is monotone under extension."""
    return find_avoiding_word(s, length, patterns) is None
