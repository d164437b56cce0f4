"""Core word values: finite words, factor sets, and descriptions of infinite words."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:
    from .morphisms import Morphism

BUILTIN_NAMES = ("nonperiodic-binary", "thue-squarefree-ternary")


@dataclass(frozen=True)
class Word:
    """An immutable finite word over the alphabet {0, ..., alphabet_size - 1}.

    The alphabet size is carried explicitly: the digit string "01" denotes
    different objects over a binary and a ternary alphabet (complementation
    and search semantics differ).
    """

    symbols: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError("alphabet size must be at least 1")
        for c in self.symbols:
            if not 0 <= c < self.alphabet_size:
                raise ValueError(
                    f"symbol {c} out of range for alphabet of size {self.alphabet_size}"
                )

    @classmethod
    def parse(cls, text: str, alphabet_size: int | None = None) -> Word:
        """Parse a digit string like "0012".

        When no alphabet size is given it is inferred as (largest digit + 1);
        the empty string parses to the empty word over a unary alphabet.
        """
        text = text.strip()
        if text and not text.isdigit():
            raise ValueError(f"not a digit string: {text!r}")
        syms = tuple(int(ch) for ch in text)
        if alphabet_size is None:
            alphabet_size = max(syms, default=0) + 1
        return cls(syms, alphabet_size)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.symbols[index], self.alphabet_size)
        return self.symbols[index]

    def __str__(self) -> str:
        return "".join(str(c) for c in self.symbols)

    def __lt__(self, other: Word) -> bool:
        return self.symbols < other.symbols

    def __add__(self, other: Word) -> Word:
        if other.alphabet_size != self.alphabet_size:
            raise ValueError("cannot concatenate words over different alphabets")
        return Word(self.symbols + other.symbols, self.alphabet_size)

    def startswith(self, prefix: Word) -> bool:
        return self.symbols[: len(prefix.symbols)] == prefix.symbols


@dataclass(frozen=True)
class FactorSet:
    """A set of distinct words sharing one common length."""

    length: int
    members: frozenset[Word]

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("factor length must be at least 1")
        for m in self.members:
            if len(m) != self.length:
                raise ValueError(f"member {m} does not have length {self.length}")

    @classmethod
    def of(cls, length: int, words: Iterator[Word] | list[Word] | set[Word]) -> FactorSet:
        return cls(length, frozenset(words))

    def __contains__(self, w: Word) -> bool:
        return w in self.members

    def __iter__(self) -> Iterator[Word]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


class StreamSpec:
    """Finite description of an infinite word."""


@dataclass(frozen=True)
class Periodic(StreamSpec):
    """The ultimately periodic word preamble . period . period . period ..."""

    preamble: Word
    period: Word

    def __post_init__(self) -> None:
        if len(self.period) == 0:
            raise ValueError("period must be nonempty")
        if self.preamble.alphabet_size != self.period.alphabet_size:
            raise ValueError("preamble and period must share an alphabet")


@dataclass(frozen=True)
class MorphicImage(StreamSpec):
    """The letterwise image of another infinite word under a morphism."""

    morphism: "Morphism"
    inner: StreamSpec


@dataclass(frozen=True)
class Builtin(StreamSpec):
    """A named generator: "nonperiodic-binary" (the concatenation 1 10 100
    1000 ..., nonperiodic since its runs of zeros strictly grow) or
    "thue-squarefree-ternary" (the squarefree fixed point of 0 -> 012,
    1 -> 02, 2 -> 1)."""

    name: str

    def __post_init__(self) -> None:
        if self.name not in BUILTIN_NAMES:
            raise ValueError(f"unknown builtin {self.name!r}; choose from {BUILTIN_NAMES}")


def _nonperiodic_binary() -> Iterator[int]:
    for run in itertools.count(0):
        yield 1
        yield from itertools.repeat(0, run)


def _thue_squarefree_ternary() -> Iterator[int]:
    # Lazy fixed point of 0 -> 012, 1 -> 02, 2 -> 1 starting from 0.
    images = ((0, 1, 2), (0, 2), (1,))
    buf = [0, 1, 2]
    yield from buf
    i = 1
    while True:
        img = images[buf[i]]
        buf.extend(img)
        yield from img
        i += 1


def stream_alphabet_size(spec: StreamSpec) -> int:
    if isinstance(spec, Periodic):
        return spec.period.alphabet_size
    if isinstance(spec, MorphicImage):
        return spec.morphism.codomain_size
    if isinstance(spec, Builtin):
        return 2 if spec.name == "nonperiodic-binary" else 3
    raise TypeError(f"not a stream spec: {spec!r}")


def stream_symbols(spec: StreamSpec) -> Iterator[int]:
    """Iterate the symbols of the described infinite word."""
    if isinstance(spec, Periodic):
        yield from spec.preamble.symbols
        while True:
            yield from spec.period.symbols
    elif isinstance(spec, MorphicImage):
        if stream_alphabet_size(spec.inner) != spec.morphism.domain_size:
            raise ValueError("inner stream alphabet does not match morphism domain")
        for c in stream_symbols(spec.inner):
            yield from spec.morphism.images[c].symbols
    elif isinstance(spec, Builtin):
        if spec.name == "nonperiodic-binary":
            yield from _nonperiodic_binary()
        else:
            yield from _thue_squarefree_ternary()
    else:
        raise TypeError(f"not a stream spec: {spec!r}")


def stream_prefix(spec: StreamSpec, n: int) -> Word:
    """The first n symbols of the described infinite word."""
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    syms = tuple(itertools.islice(stream_symbols(spec), n))
    return Word(syms, stream_alphabet_size(spec))


def reverse(w: Word) -> Word:
    return Word(w.symbols[::-1], w.alphabet_size)


def complement(w: Word) -> Word:
    """Flip every bit of a binary word."""
    if w.alphabet_size != 2:
        raise ValueError("complement is only defined for binary words")
    return Word(tuple(1 - c for c in w.symbols), 2)


def cyclic_shifts(w: Word) -> frozenset[Word]:
    """All rotations of a nonempty word."""
    if len(w) == 0:
        raise ValueError("the empty word has no cyclic shifts")
    return frozenset(
        Word(w.symbols[i:] + w.symbols[:i], w.alphabet_size) for i in range(len(w))
    )


def factors(w: Word, n: int) -> FactorSet:
    """All distinct length-n contiguous subwords of w."""
    if n < 1:
        raise ValueError("factor length must be at least 1")
    members = frozenset(
        Word(w.symbols[i : i + n], w.alphabet_size) for i in range(len(w) - n + 1)
    )
    return FactorSet(n, members)


def periodic_factors(spec: Periodic, n: int) -> FactorSet:
    """The exact length-n factor set of the infinite word preamble.period^omega.

    A window starting at or past the preamble depends only on its phase
    modulo the period length, so a prefix covering every phase once (plus
    the preamble) realizes every factor of the infinite word.
    """
    if not isinstance(spec, Periodic):
        raise TypeError("periodic_factors requires a Periodic stream spec")
    if n < 1:
        raise ValueError("factor length must be at least 1")
    cover = len(spec.preamble) + len(spec.period) + n - 1
    return factors(stream_prefix(spec, cover), n)


def is_squarefree(w: Word) -> bool:
    """True iff no nonempty x has xx as a contiguous subword of w."""
    text = "".join(chr(48 + c) for c in w.symbols)
    return re.search(r"(.+)\1", text) is None
