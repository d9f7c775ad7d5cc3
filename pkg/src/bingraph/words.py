"""Bit strings: the free monoid on the alphabet {0, 1}.

Words are immutable and hashable. They order length-lexicographically
(shorter words first, then ``0`` before ``1``), which is also the order
produced by :func:`enumerate_words`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TypeVar

from .errors import InputError

Letter = int
LETTERS: tuple[Letter, Letter] = (0, 1)

M = TypeVar("M")


def check_letter(a: object) -> Letter:
    if a not in (0, 1) or isinstance(a, bool):
        raise InputError(f"not a letter: {a!r}")
    return a  # type: ignore[return-value]


@functools.total_ordering
@dataclass(frozen=True)
class Word:
    """A finite bit string, stored as a ``str`` over ``'0'`` and ``'1'``."""

    bits: str = ""

    def __post_init__(self):
        if not isinstance(self.bits, str) or self.bits.strip("01"):
            raise InputError(f"not a bit string: {self.bits!r}")

    @classmethod
    def parse(cls, text: str) -> Word:
        """Accepts ``""`` or ``"e"`` for the empty word."""
        text = text.strip()
        if text == "e":
            text = ""
        return cls(text)

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> Word:
        return cls("".join(str(check_letter(a)) for a in letters))

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[Letter]:
        return (ord(c) - 48 for c in self.bits)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.bits[i])
        return ord(self.bits[i]) - 48

    def __add__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.bits + other.bits)

    def __lt__(self, other: Word) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return (len(self.bits), self.bits) < (len(other.bits), other.bits)

    def __str__(self) -> str:
        return self.bits or "e"

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def prefixes(self) -> Iterator[Word]:
        """All prefixes, shortest first, including the empty word and ``self``."""
        return (Word(self.bits[:i]) for i in range(len(self.bits) + 1))

    def suffixes(self) -> Iterator[Word]:
        """All suffixes, longest first."""
        return (Word(self.bits[i:]) for i in range(len(self.bits) + 1))


EMPTY = Word("")


def concat(v: Word, w: Word) -> Word:
    return v + w


def extend_to_monoid_hom(
    f: Callable[[Letter], M], w: Word, *, identity: M, op: Callable[[M, M], M]
) -> M:
    """Evaluate the unique monoid homomorphism extending ``f`` on ``w``.

    The target monoid is given by its ``identity`` and binary ``op``; the
    empty word goes to ``identity`` and ``a1...an`` to ``f(a1)·...·f(an)``.
    """
    acc = identity
    for a in w:
        acc = op(acc, f(a))
    return acc


def enumerate_words(max_len: int, min_len: int = 0) -> Iterator[Word]:
    """Words with ``min_len <= len <= max_len`` in length-lexicographic order."""
    for n in range(min_len, max_len + 1):
        for letters in itertools.product("01", repeat=n):
            yield Word("".join(letters))


def is_prefix(v: Word, w: Word) -> bool:
    return w.bits.startswith(v.bits)


def is_suffix(z: Word, w: Word) -> bool:
    return w.bits.endswith(z.bits)


def is_prefix_closed(words: Iterable[Word]) -> bool:
    lang = set(words)
    return all(p in lang for w in lang for p in w.prefixes())


def is_suffix_closed(words: Iterable[Word]) -> bool:
    lang = set(words)
    return all(s in lang for w in lang for s in w.suffixes())


def is_subword_closed(words: Iterable[Word]) -> bool:
    # Closure under arbitrary factorisations is the same as closure under
    # both prefixes and suffixes: a middle factor is a prefix of a suffix.
    lang = set(words)
    return is_prefix_closed(lang) and is_suffix_closed(lang)
