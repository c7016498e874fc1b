"""Freely reduced words over finite generator alphabets.

Words are the basic currency for everything downstream: images of the
Artin action live in the rank-n free group on x_1..x_n, pure braids are
written over the band alphabet A_{i,j}, and combed normal forms keep one
word per fiber.

Representation: a word is a tuple of syllables (symbol, exponent) with
every exponent nonzero and no two adjacent syllables sharing a symbol,
i.e. free reduction is maintained at all times.  Free reduction is
confluent, so any construction path yields the same tuple and word
equality is plain tuple equality.

Alphabets are identified by strings: "x<r>" is the free-group alphabet
x_1..x_r and "A<r>" is the band alphabet {A_{i,j} : 1 <= i < j <= r}.
Operations never mix alphabets silently; a mismatch raises
AlphabetMismatchError.

All values here are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

__all__ = [
    "AlphabetMismatchError",
    "GenSym",
    "GroupWord",
    "a_alphabet",
    "a_sym",
    "alphabet_rank",
    "commutator",
    "x_alphabet",
    "x_sym",
]


class AlphabetMismatchError(ValueError):
    """An operation mixed words or symbols from different alphabets."""


class GenSym(NamedTuple):
    """A generator symbol: an alphabet identifier plus an index tuple."""

    alphabet: str
    index: tuple[int, ...]

    def __str__(self) -> str:
        if self.alphabet.startswith("x"):
            return f"x{self.index[0]}"
        if self.alphabet.startswith("A"):
            return f"A{self.index[0]},{self.index[1]}"
        return f"{self.alphabet}{self.index}"


def x_alphabet(rank: int) -> str:
    return f"x{rank}"


def a_alphabet(rank: int) -> str:
    return f"A{rank}"


def alphabet_rank(alphabet: str) -> int:
    """Number of strands/generator slots encoded in an alphabet id."""
    return int(alphabet[1:])


def x_sym(i: int, rank: int) -> GenSym:
    """The free-group generator x_i in the rank-`rank` alphabet."""
    if not 1 <= i <= rank:
        raise ValueError(f"x_{i} is out of range for rank {rank}")
    return GenSym(x_alphabet(rank), (i,))


def a_sym(i: int, j: int, rank: int) -> GenSym:
    """The band symbol A_{i,j}, requiring 1 <= i < j <= rank."""
    if not 1 <= i < j <= rank:
        raise ValueError(f"A_{i},{j} is out of range for rank {rank}")
    return GenSym(a_alphabet(rank), (i, j))


Syllable = tuple[GenSym, int]


def _push(stack: list[list], sym: GenSym, exp: int) -> None:
    """Append one syllable to a reduced stack, merging and cancelling."""
    if exp == 0:
        return
    if stack and stack[-1][0] == sym:
        stack[-1][1] += exp
        if stack[-1][1] == 0:
            stack.pop()
    else:
        stack.append([sym, exp])


def _extend(stack: list[list], syllables: Iterable[Syllable]) -> None:
    for sym, exp in syllables:
        _push(stack, sym, exp)


def _invert(syllables: Iterable[Syllable]) -> list[Syllable]:
    return [(sym, -exp) for sym, exp in reversed(tuple(syllables))]


def _pow(syllables: list[Syllable], k: int) -> list[Syllable]:
    """Reduced syllables of a reduced word raised to the k-th power."""
    if k == 0 or not syllables:
        return []
    if k < 0:
        return _pow(_invert(syllables), -k)
    result: list[list] = []
    base = [list(s) for s in syllables]
    e = k
    while True:
        if e & 1:
            _extend(result, [(s, x) for s, x in base])
        e >>= 1
        if not e:
            break
        doubled: list[list] = [s[:] for s in base]
        _extend(doubled, [(s, x) for s, x in base])
        base = doubled
    return [(s, x) for s, x in result]


def _freeze(stack: list[list]) -> tuple[Syllable, ...]:
    return tuple((sym, exp) for sym, exp in stack)


@dataclass(frozen=True)
class GroupWord:
    """A freely reduced word over a single alphabet."""

    alphabet: str
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        prev: GenSym | None = None
        for sym, exp in self.syllables:
            if sym.alphabet != self.alphabet:
                raise AlphabetMismatchError(
                    f"symbol {sym} does not belong to alphabet {self.alphabet}"
                )
            if exp == 0:
                raise ValueError("zero exponent in a reduced word")
            if sym == prev:
                raise ValueError("adjacent syllables share a symbol; word is not reduced")
            prev = sym

    # -- construction ------------------------------------------------

    @classmethod
    def identity(cls, alphabet: str) -> GroupWord:
        return cls(alphabet, ())

    @classmethod
    def single(cls, sym: GenSym, exp: int = 1) -> GroupWord:
        if exp == 0:
            return cls(sym.alphabet, ())
        return cls(sym.alphabet, ((sym, exp),))

    @classmethod
    def from_letters(cls, alphabet: str, letters: Iterable[Syllable]) -> GroupWord:
        """Freely reduce a raw syllable sequence.  Idempotent."""
        stack: list[list] = []
        for sym, exp in letters:
            if sym.alphabet != alphabet:
                raise AlphabetMismatchError(
                    f"symbol {sym} does not belong to alphabet {alphabet}"
                )
            _push(stack, sym, exp)
        return cls(alphabet, _freeze(stack))

    # -- queries -----------------------------------------------------

    def is_identity(self) -> bool:
        return not self.syllables

    def syllable_count(self) -> int:
        return len(self.syllables)

    def letter_count(self) -> int:
        return sum(abs(exp) for _, exp in self.syllables)

    def abelianize(self) -> dict[GenSym, int]:
        """Exponent vector; symbols with total exponent zero are omitted."""
        totals: dict[GenSym, int] = {}
        for sym, exp in self.syllables:
            totals[sym] = totals.get(sym, 0) + exp
        return {sym: exp for sym, exp in totals.items() if exp != 0}

    # -- group operations ---------------------------------------------

    def __mul__(self, other: GroupWord) -> GroupWord:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(
                f"cannot multiply words over {self.alphabet} and {other.alphabet}"
            )
        stack = [list(s) for s in self.syllables]
        _extend(stack, other.syllables)
        return GroupWord(self.alphabet, _freeze(stack))

    def inverse(self) -> GroupWord:
        return GroupWord(self.alphabet, tuple(_invert(self.syllables)))

    def __pow__(self, k: int) -> GroupWord:
        return GroupWord(self.alphabet, tuple(_pow(list(self.syllables), k)))

    def conjugate(self, by: GroupWord) -> GroupWord:
        """g^{-1} * self * g for g = `by`."""
        return by.inverse() * self * by

    def substitute(
        self,
        mapping: Mapping[GenSym, GroupWord],
        alphabet: str | None = None,
    ) -> GroupWord:
        """Apply the induced endomorphism letterwise.

        Every symbol occurring in the word must be mapped; all image words
        must share one alphabet (the target may differ from the source).
        For an empty word the target alphabet falls back to the source
        unless given explicitly.
        """
        target = alphabet
        stack: list[list] = []
        for sym, exp in self.syllables:
            image = mapping.get(sym)
            if image is None:
                raise ValueError(f"substitute: no image for symbol {sym}")
            if target is None:
                target = image.alphabet
            elif image.alphabet != target:
                raise AlphabetMismatchError(
                    f"substitute images mix alphabets {target} and {image.alphabet}"
                )
            if exp == 1:
                _extend(stack, image.syllables)
            else:
                _extend(stack, _pow(list(image.syllables), exp))
        if target is None:
            target = self.alphabet
        return GroupWord(target, _freeze(stack))

    def __str__(self) -> str:
        if not self.syllables:
            return "e"
        parts = []
        for sym, exp in self.syllables:
            parts.append(str(sym) if exp == 1 else f"{sym}^{exp}")
        return " ".join(parts)


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    """[a, b] = a^{-1} b^{-1} a b."""
    return a.inverse() * b.inverse() * a * b
