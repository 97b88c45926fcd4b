"""W-interpretations and double interpretations of finite words.

An interpretation of ``d`` is a split ``d = d_L d_M d_R`` plus a letter
``a`` such that ``d_L`` is a nonempty suffix of a word of ``W``, ``d_M`` is a
product of words of ``W`` and ``d_R a`` is a prefix of a word of ``W``.  The
middle part is kept as its block list, since different block lists of the
same ``d_M`` behave differently in the reduction calculus.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .words import (
    Word, WordError, WordSet, concat, is_prefix, is_suffix, left_quotient,
    star_factorizations, word_key,
)


class InterpretationError(ValueError):
    pass


# -- witness lookup ------------------------------------------------------------

@lru_cache(maxsize=1024)
def _witness_tables(W: WordSet):
    """Canonical (shortest, then lexicographic) witnesses.

    ``left[s]``: first word of W with suffix ``s``.  ``right[p]``: letters
    ``a`` with ``p a`` a prefix of a word of W, mapped to the first such word.
    """
    left, right = {}, {}
    for u in W.words:  # canonical order, so setdefault keeps the first witness
        for i in range(len(u)):
            left.setdefault(u[i:], u)
            right.setdefault(u[:i], {}).setdefault(u[i], u)
    return left, right


def left_witness(d_L: Word, W: WordSet):
    return _witness_tables(W)[0].get(tuple(d_L))


def right_witness(d_R: Word, a: int, W: WordSet):
    return _witness_tables(W)[1].get(tuple(d_R), {}).get(a)


def next_letters(d_R: Word, W: WordSet) -> dict:
    """``{a: u_R}`` for every letter ``a`` with ``d_R a`` a prefix of a W-word."""
    return _witness_tables(W)[1].get(tuple(d_R), {})


# -- interpretations -----------------------------------------------------------

@dataclass(frozen=True)
class Interpretation:
    d_L: Word
    blocks: tuple
    d_R: Word
    a: int
    u_L: Word
    u_R: Word

    @property
    def d_M(self) -> Word:
        return concat(self.blocks)

    @property
    def word(self) -> Word:
        return self.d_L + self.d_M + self.d_R

    @property
    def key(self):
        return (word_key(self.d_L), tuple(word_key(b) for b in self.blocks),
                word_key(self.d_R), self.a)

    def show(self, alphabet) -> str:
        mid = "·".join(alphabet.show(b) for b in self.blocks) or "ε"
        return (f"({alphabet.show(self.d_L)}, [{mid}], {alphabet.show(self.d_R)}, "
                f"{alphabet.letters[self.a]})")


def interpretation(d_L: Word, blocks: Sequence[Word], d_R: Word, a: int,
                   W: WordSet) -> Interpretation:
    """Build an interpretation, attaching canonical witnesses.  Raises
    :class:`InterpretationError` when the parts do not form one."""
    d_L, d_R, blocks = tuple(d_L), tuple(d_R), tuple(tuple(b) for b in blocks)
    if not d_L:
        raise InterpretationError("d_L must be nonempty")
    u_L = left_witness(d_L, W)
    if u_L is None:
        raise InterpretationError(f"{d_L} is not a suffix of a word of W")
    bad = [b for b in blocks if b not in W]
    if bad:
        raise InterpretationError(f"blocks {bad} are not in W")
    u_R = right_witness(d_R, a, W)
    if u_R is None:
        raise InterpretationError(f"{d_R + (a,)} is not a prefix of a word of W")
    return Interpretation(d_L, blocks, d_R, a, u_L, u_R)


def enumerate_interpretations(d: Word, W: WordSet) -> tuple:
    """Every W-interpretation of ``d``, in canonical order."""
    d = tuple(d)
    if not d:
        raise WordError("interpretations are defined for nonempty words")
    return _enumerate(d, W)


@lru_cache(maxsize=100_000)
def _enumerate(d: Word, W: WordSet) -> tuple:
    left, right = _witness_tables(W)
    n = len(d)
    out = []
    for i in range(1, n + 1):
        u_L = left.get(d[:i])
        if u_L is None:
            continue
        for j in range(i, n + 1):
            letters = right.get(d[j:])
            if not letters:
                continue
            for blocks in star_factorizations(d[i:j], W):
                for a, u_R in letters.items():
                    out.append(Interpretation(d[:i], blocks, d[j:], a, u_L, u_R))
    out.sort(key=lambda I: I.key)
    return tuple(out)


def inherit(I: Interpretation, prefix: Word, W: WordSet) -> Interpretation:
    """Interpretation ``(d_L, d'_M, d'_R, a')`` of a prefix ``d'`` of ``d``
    with ``d' a' <=_p d a``."""
    d, prefix = I.word, tuple(prefix)
    if not is_prefix(prefix, d):
        raise InterpretationError("not a prefix of the interpreted word")
    if len(prefix) < len(I.d_L):
        raise InterpretationError("the prefix must contain d_L")
    p = len(prefix)
    if p == len(d):
        return I
    pos = len(I.d_L)
    for j, b in enumerate(I.blocks):
        if pos <= p < pos + len(b):
            return interpretation(I.d_L, I.blocks[:j], d[pos:p], d[p], W)
        pos += len(b)
    return interpretation(I.d_L, I.blocks, d[pos:p], d[p], W)


# -- double interpretations -----------------------------------------------------

@dataclass(frozen=True)
class DoubleInterpretation:
    first: Interpretation
    second: Interpretation

    def __post_init__(self):
        if self.first.word != self.second.word:
            raise InterpretationError("both interpretations must interpret the same word")
        if self.first.a == self.second.a:
            raise InterpretationError("a double interpretation needs two different letters")

    @property
    def word(self) -> Word:
        return self.first.word

    @property
    def key(self):
        return (word_key(self.word), self.first.key, self.second.key)

    def swapped(self) -> "DoubleInterpretation":
        return DoubleInterpretation(self.second, self.first)

    def show(self, alphabet) -> str:
        return f"{alphabet.show(self.word)}: {self.first.show(alphabet)} ; {self.second.show(alphabet)}"


def is_simple(D: DoubleInterpretation, W: WordSet) -> bool:
    I, J = D.first, D.second
    if not is_suffix(J.d_M + J.d_R, I.d_R):
        return False
    # I.u_R is a shortest word with prefix d_R a, so "some u" reduces to it
    if not (J.d_L in W or len(J.d_L) >= len(I.u_R)):
        return False
    assert len(J.d_L) >= W.min_length and len(D.word) >= W.min_length
    return True


def double_interpretations(d: Word, W: WordSet) -> tuple:
    """Every ordered pair of interpretations of ``d`` with different letters."""
    interps = enumerate_interpretations(d, W)
    return tuple(DoubleInterpretation(I, J) for I in interps for J in interps
                 if I.a != J.a)


def simple_double_interpretations(d: Word, W: WordSet) -> tuple:
    return _simple(tuple(d), W)


@lru_cache(maxsize=200_000)
def _simple(d: Word, W: WordSet) -> tuple:
    interps = enumerate_interpretations(d, W)
    out = []
    for I in interps:
        for J in interps:
            # condition (1) forces |J.d_L| >= |I.d_L I.d_M|
            if I.a != J.a and len(J.d_L) >= len(d) - len(I.d_R):
                D = DoubleInterpretation(I, J)
                if is_simple(D, W):
                    out.append(D)
    return tuple(out)


# -- extraction of a simple double interpretation ------------------------------------

class Step(NamedTuple):
    case: str
    length: int


class Extraction(NamedTuple):
    e: Word
    E: DoubleInterpretation
    trace: tuple


def _meets_hypotheses(D: DoubleInterpretation, W: WordSet) -> bool:
    I, J = D.first, D.second
    return J.d_L in W and len(I.d_L) <= len(J.d_L) + len(J.d_M)


def extract_simple(D: DoubleInterpretation, W: WordSet) -> Extraction:
    """Find a suffix ``e`` of ``d`` with a simple double interpretation.

    Requires ``second.d_L ∈ W`` and ``|first.d_L| <= |second.d_L second.d_M|``.
    Each step either stops on a simple pair or moves to a strictly shorter
    suffix that again satisfies the requirements:

    * ``left-shorter``: ``d'_L <_p d_L``; drop ``d'_L``.
    * ``right-shorter``: ``d_L <_p d'_L`` and not simple; drop ``d_L`` and swap.
    * ``equal-left``: ``d_L = d'_L``; drop it, ordering the pair by first block.
    """
    if not _meets_hypotheses(D, W):
        raise InterpretationError(
            "extract_simple needs second.d_L in W and |first.d_L| <= |second.d_L second.d_M|")
    trace = []
    while True:
        I, J = D.first, D.second
        if is_simple(D, W):
            trace.append(Step("simple", len(D.word)))
            return Extraction(D.word, D, tuple(trace))
        if len(J.d_L) < len(I.d_L):
            u, v = J.blocks[0], J.blocks[1:]  # nonempty: d'_L <_p d_L <=_p d'_L d'_M
            K = interpretation(left_quotient(J.d_L, I.d_L), I.blocks, I.d_R, I.a, W)
            K2 = interpretation(u, v, J.d_R, J.a, W)
            trace.append(Step("left-shorter", len(D.word)))
            D = DoubleInterpretation(K, K2)
        elif len(I.d_L) < len(J.d_L):
            if not I.blocks:
                raise AssertionError("non-simple pair with d_L <_p d'_L must have d_M nonempty")
            u, v = I.blocks[0], I.blocks[1:]
            K = interpretation(left_quotient(I.d_L, J.d_L), J.blocks, J.d_R, J.a, W)
            K2 = interpretation(u, v, I.d_R, I.a, W)
            trace.append(Step("right-shorter", len(D.word)))
            D = DoubleInterpretation(K, K2)
        else:
            if not J.blocks:
                trace.append(Step("equal-left", len(D.word)))
                E = D.swapped()
                assert is_simple(E, W)
                return Extraction(D.word, E, tuple(trace))
            # I.blocks is nonempty as well, otherwise D would be simple
            u, v = I.blocks[0], I.blocks[1:]
            u2, v2 = J.blocks[0], J.blocks[1:]
            K = interpretation(u, v, I.d_R, I.a, W)
            K2 = interpretation(u2, v2, J.d_R, J.a, W)
            trace.append(Step("equal-left", len(D.word)))
            D = DoubleInterpretation(K2, K) if len(u2) <= len(u) else DoubleInterpretation(K, K2)


# -- from a disagreement to a simple double interpretation ---------------------------------

class FactorizedWindow(NamedTuple):
    """``concat(blocks)[offset:]`` starts with the window; blocks are W-words."""
    blocks: tuple
    offset: int


class DisagreementExtraction(NamedTuple):
    length: int
    D: DoubleInterpretation
    e: Word
    E: DoubleInterpretation
    trace: tuple
    scanned: tuple


def _interpret_window(cover: FactorizedWindow, start: int, end: int, W: WordSet):
    """Interpretation of ``text[start:end]`` with next letter ``text[end]``,
    read off the factorization (positions relative to the window start)."""
    text = concat(cover.blocks)
    bounds = [0]
    for b in cover.blocks:
        bounds.append(bounds[-1] + len(b))
    s, e = cover.offset + start, cover.offset + end
    j = max(k for k in range(len(cover.blocks)) if bounds[k] <= s)
    if bounds[j + 1] > e:
        raise InterpretationError("window lies inside a single block")
    k = j + 1
    middle = []
    while k < len(cover.blocks) and bounds[k + 1] <= e:
        middle.append(cover.blocks[k])
        k += 1
    return interpretation(text[s:bounds[j + 1]], middle, text[bounds[k]:e], text[e], W)


def simple_di_from_disagreement(past: Word, a: int, a2: int, W: WordSet,
                                covers: Sequence[FactorizedWindow]) -> DisagreementExtraction:
    """Simple double interpretation of a suffix of ``past`` from two
    factorizations over ``W``, one of ``past a`` and one of ``past a2``.

    The suffix length ``l`` is scanned upwards from ``2 |W|`` until the
    second factorization has a block boundary where ``d`` starts.
    """
    past = tuple(past)
    if a == a2:
        raise InterpretationError("the two continuations must differ")
    if len(past) < 2 * W.max_length:
        raise InterpretationError(f"past of length {len(past)} is shorter than 2|W| = {2 * W.max_length}")
    cover, cover2 = covers
    for c, letter in ((cover, a), (cover2, a2)):
        text = concat(c.blocks)
        if text[c.offset:c.offset + len(past) + 1] != past + (letter,):
            raise InterpretationError("factorization does not reproduce the window")
        if any(b not in W for b in c.blocks):
            raise InterpretationError("factorization uses words outside W")
    starts2 = set()
    pos = 0
    for b in cover2.blocks:
        starts2.add(pos)
        pos += len(b)
    scanned = []
    for l in range(2 * W.max_length, len(past) + 1):
        scanned.append(l)
        if cover2.offset + len(past) - l not in starts2:
            continue
        I = _interpret_window(cover, len(past) - l, len(past), W)
        J = _interpret_window(cover2, len(past) - l, len(past), W)
        D = DoubleInterpretation(I, J)
        e, E, trace = extract_simple(D, W)
        return DisagreementExtraction(l, D, e, E, trace, tuple(scanned))
    raise InterpretationError(f"no admissible suffix length among {scanned}")
