"""Finite words over a declared alphabet.

Letters are interned as small integers; a word is a plain ``tuple`` of
letter indices, so slicing, hashing and comparison come for free.  The
:class:`Alphabet` translates between symbols and indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain
from math import gcd
from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]; the empty tuple is the empty word

EMPTY: Word = ()


class WordError(ValueError):
    """Raised when a word operation is called outside its domain."""


class AlphabetError(WordError):
    pass


@dataclass(frozen=True)
class Alphabet:
    letters: tuple

    def __post_init__(self):
        letters = tuple(str(s) for s in self.letters)
        if not letters:
            raise AlphabetError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"repeated letters in {letters}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, spec: str | Iterable[str]) -> "Alphabet":
        """``Alphabet.of("ab")`` or ``Alphabet.of(["x0", "x1"])``."""
        if isinstance(spec, str):
            spec = spec.split() if any(c.isspace() for c in spec) else list(spec)
        return cls(tuple(spec))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(range(len(self.letters)))

    @property
    def single_char(self) -> bool:
        return all(len(s) == 1 for s in self.letters)

    def index(self, symbol: str) -> int:
        try:
            return self.letters.index(symbol)
        except ValueError:
            raise AlphabetError(f"letter {symbol!r} not in alphabet {self.letters}") from None

    def word(self, text: str | Sequence[str]) -> Word:
        """Parse a word.  Whitespace-separated tokens when the text has any
        whitespace, one character per letter otherwise."""
        if isinstance(text, str):
            if any(c.isspace() for c in text):
                text = text.split()
            elif text and not self.single_char:
                raise AlphabetError(
                    "multi-character alphabet: separate letters with spaces")
        return tuple(self.index(s) for s in text)

    def wordset(self, text: str | Iterable[str]) -> "WordSet":
        """``A.wordset("ab a")`` or ``A.wordset(["ab", "a"])``."""
        if isinstance(text, str):
            text = text.replace(",", " ").split()
        return WordSet(self.word(t) for t in text)

    def show(self, w: Word) -> str:
        if not w:
            return "ε"
        sep = "" if self.single_char else " "
        return sep.join(self.letters[i] for i in w)

    def check(self, w: Word) -> Word:
        n = len(self.letters)
        for c in w:
            if not (isinstance(c, int) and 0 <= c < n):
                raise AlphabetError(f"letter {c!r} outside alphabet of size {n}")
        return w


def word_key(w: Word):
    """Canonical order on words: shorter first, then lexicographic."""
    return (len(w), w)


class WordSet:
    """A finite set of nonempty words, stored in canonical order."""

    __slots__ = ("words", "_set", "_hash")

    def __init__(self, words: Iterable[Sequence[int]]):
        ws = {tuple(w) for w in words}
        if not ws:
            raise WordError("a word set must be nonempty")
        if () in ws:
            raise WordError("word sets may not contain the empty word")
        self.words = tuple(sorted(ws, key=word_key))
        self._set = frozenset(ws)
        self._hash = hash(self._set)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self._set

    def __eq__(self, other):
        return isinstance(other, WordSet) and self._set == other._set

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WordSet({list(self.words)!r})"

    @property
    def min_length(self) -> int:
        return len(self.words[0])

    @property
    def max_length(self) -> int:
        return max(len(w) for w in self.words)

    @property
    def letters(self) -> tuple:
        return tuple(sorted({c for w in self.words for c in w}))


# -- prefix / suffix relations -------------------------------------------

def is_prefix(u: Word, v: Word) -> bool:
    return len(u) <= len(v) and v[:len(u)] == u


def is_suffix(u: Word, v: Word) -> bool:
    return len(u) <= len(v) and (not u or v[len(v) - len(u):] == u)


def is_strict_prefix(u: Word, v: Word) -> bool:
    return len(u) < len(v) and v[:len(u)] == u


def is_strict_suffix(u: Word, v: Word) -> bool:
    return len(u) < len(v) and is_suffix(u, v)


def prefix_dependent(u: Word, v: Word) -> bool:
    return is_prefix(u, v) or is_prefix(v, u)


def suffix_dependent(u: Word, v: Word) -> bool:
    return is_suffix(u, v) or is_suffix(v, u)


def left_quotient(u: Word, w: Word) -> Word:
    """``u⁻¹w``: the word t with ``w = u t``."""
    if not is_prefix(u, w):
        raise WordError(f"{u} is not a prefix of {w}")
    return w[len(u):]


def right_quotient(w: Word, v: Word) -> Word:
    """``w v⁻¹``: the word t with ``w = t v``."""
    if not is_suffix(v, w):
        raise WordError(f"{v} is not a suffix of {w}")
    return w[:len(w) - len(v)]


# -- periods ---------------------------------------------------------------

def is_period(w: Word, k: int) -> bool:
    return 1 <= k <= len(w) and w[k:] == w[:len(w) - k]


def periods(w: Word) -> frozenset:
    if not w:
        raise WordError("periods are defined for nonempty words only")
    return frozenset(k for k in range(1, len(w) + 1) if is_period(w, k))


def least_period(w: Word) -> int:
    if not w:
        raise WordError("periods are defined for nonempty words only")
    return next(k for k in range(1, len(w) + 1) if is_period(w, k))


def fine_wilf(w: Word, p: int, q: int) -> int:
    """Return ``gcd(p, q)`` for two periods with ``p + q <= |w|``, checking
    that it is again a period of ``w``."""
    if not (is_period(w, p) and is_period(w, q)):
        raise WordError(f"{p} and {q} must both be periods of the word")
    if p + q > len(w):
        raise WordError(f"p + q = {p + q} exceeds |w| = {len(w)}")
    g = gcd(p, q)
    if not is_period(w, g):  # would contradict the Fine-Wilf theorem
        raise AssertionError(f"gcd {g} is not a period of {w}")
    return g


# -- word sets ---------------------------------------------------------------

def min_length(W: Iterable[Word]) -> int:
    lengths = [len(w) for w in W]
    if not lengths:
        raise WordError("empty word set")
    return min(lengths)


def max_length(W: Iterable[Word]) -> int:
    lengths = [len(w) for w in W]
    if not lengths:
        raise WordError("empty word set")
    return max(lengths)


def concat(blocks: Iterable[Word]) -> Word:
    return tuple(chain.from_iterable(blocks))


def star_factorizations(w: Word, W: WordSet) -> list:
    """All block lists ``(v_1, ..., v_m)`` with ``v_i ∈ W`` and product ``w``.

    Returned in canonical order; ``[()]`` for the empty word and ``[]`` when
    ``w`` is not in ``W*``.
    """
    return list(_star_factorizations(tuple(w), W))


@lru_cache(maxsize=200_000)
def _star_factorizations(w: Word, W: WordSet) -> tuple:
    n = len(w)
    # tails[i]: factorizations of w[i:], filled right to left
    tails: list = [None] * (n + 1)
    tails[n] = ((),)
    for i in range(n - 1, -1, -1):
        found = []
        for u in W.words:
            j = i + len(u)
            if j <= n and tails[j] and w[i:j] == u:
                found.extend((u,) + rest for rest in tails[j])
        tails[i] = tuple(found)
    return tuple(sorted(tails[0], key=lambda bl: tuple(word_key(b) for b in bl)))


def in_star(w: Word, W: WordSet) -> bool:
    return bool(_star_factorizations(tuple(w), W))
