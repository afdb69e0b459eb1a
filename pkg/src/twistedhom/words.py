"""Free-group words over a named generator alphabet.

Words are freely reduced sequences of signed letters. Every constructor
reduces eagerly, so word equality is equality in the free group, and all
values are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Malformed word text; ``position`` is the 0-based token index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"token {position}: {message}")
        self.position = position


@dataclass(frozen=True)
class Generator:
    """A named free-group generator."""

    name: str

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")

    def __repr__(self):
        return self.name


def _free_reduce(letters):
    out: list[tuple[int, int]] = []
    for index, sign in letters:
        if out and out[-1] == (index, -sign):
            out.pop()
        else:
            out.append((index, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; letters are (generator index, sign) pairs."""

    alphabet: tuple[Generator, ...]
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for index, sign in letters:
            if not 0 <= index < len(self.alphabet):
                raise ValueError(f"letter index {index} out of range")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        object.__setattr__(self, "letters", _free_reduce(letters))

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __repr__(self):
        return f"<{word_to_text(self) or '1'}>"


def identity_word(alphabet) -> Word:
    return Word(tuple(alphabet), ())


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced product u*v; both words must share one alphabet."""
    if u.alphabet != v.alphabet:
        raise ValueError("alphabet mismatch")
    return Word(u.alphabet, u.letters + v.letters)


def invert(w: Word) -> Word:
    """Inverse word: letters reversed with flipped signs."""
    return Word(w.alphabet, tuple((i, -s) for i, s in reversed(w.letters)))


def parse_word(text: str, alphabet) -> Word:
    """Parse whitespace-separated tokens ``name``, ``name^-1`` or ``name^k``.

    A token ``name^k`` with nonzero integer k expands to |k| copies of the
    signed letter; the result is freely reduced.
    """
    alphabet = tuple(alphabet)
    index_of = {gen.name: i for i, gen in enumerate(alphabet)}
    letters: list[tuple[int, int]] = []
    for position, token in enumerate(text.split()):
        name, caret, exponent_text = token.partition("^")
        if caret:
            try:
                exponent = int(exponent_text)
            except ValueError:
                raise ParseError(f"malformed exponent {exponent_text!r}", position) from None
            if exponent == 0:
                raise ParseError("zero exponent", position)
        else:
            exponent = 1
        if name not in index_of:
            raise ParseError(f"unknown generator {name!r}", position)
        sign = 1 if exponent > 0 else -1
        letters.extend([(index_of[name], sign)] * abs(exponent))
    return Word(alphabet, tuple(letters))


def word_to_text(w: Word) -> str:
    """Canonical text form: ``name`` / ``name^-1`` tokens joined by single spaces.

    ``parse_word`` is a left inverse of this printer; the empty word prints
    as the empty string.
    """
    return " ".join(
        w.alphabet[i].name if s > 0 else f"{w.alphabet[i].name}^-1"
        for i, s in w.letters
    )
