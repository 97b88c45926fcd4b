"""Sliding block codes that behave like automorphisms on a finite language.

Candidates are only verified to a depth: a code is kept when it maps every
language word of length ``2r+1+depth`` into the language and has an inverse
among the candidates.  They are not certified automorphisms.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, NamedTuple

from .asymptotics import AsymptoticReport
from .sadic import LanguageError, LanguageTable
from .words import Word


@dataclass(frozen=True)
class SlidingBlockCode:
    """Local rule of radius ``r``: ``rule`` maps each language word of length
    ``2r+1`` (stored as sorted pairs) to a letter.  Other words map to 0."""

    radius: int
    rule: tuple

    @classmethod
    def from_map(cls, radius: int, mapping: dict) -> "SlidingBlockCode":
        return cls(radius, tuple(sorted(mapping.items())))

    @property
    def table(self) -> dict:
        return dict(self.rule)

    def letter(self, window: Word) -> int:
        return self.table.get(tuple(window), 0)

    def apply(self, w: Word) -> Word:
        """Image of ``w``: ``len(w) - 2r`` letters."""
        table, span = self.table, 2 * self.radius + 1
        return tuple(table.get(w[i:i + span], 0) for i in range(len(w) - span + 1))


def identity_code(lang: LanguageTable, r: int) -> SlidingBlockCode:
    return SlidingBlockCode.from_map(r, {w: w[r] for w in lang.words(2 * r + 1)})


def shift_code(lang: LanguageTable, r: int, k: int) -> SlidingBlockCode:
    """``x -> T^k x`` at radius ``r`` (needs ``|k| <= r``)."""
    if abs(k) > r:
        raise ValueError(f"shift {k} does not fit in radius {r}")
    return SlidingBlockCode.from_map(r, {w: w[r + k] for w in lang.words(2 * r + 1)})


def _search(lang: LanguageTable, r: int, depth: int) -> list:
    """All rules sending every long language word into the language."""
    span = 2 * r + 1
    domain = sorted(lang.words(span))
    index = {w: i for i, w in enumerate(domain)}
    letters = sorted({c for w in domain for c in w})
    long_words = [tuple(index[w[i:i + span]] for i in range(depth + 1))
                  for w in sorted(lang.words(span + depth))]
    # occurrences of each domain word: (long word, position)
    occurs = [[] for _ in domain]
    for j, pattern in enumerate(long_words):
        for pos, i in enumerate(pattern):
            occurs[i].append((j, pos))
    value = [None] * len(domain)
    found = []

    def consistent(i):
        for j, pos in occurs[i]:
            pattern = long_words[j]
            lo = pos
            while lo > 0 and value[pattern[lo - 1]] is not None:
                lo -= 1
            hi = pos + 1
            while hi < len(pattern) and value[pattern[hi]] is not None:
                hi += 1
            if tuple(value[p] for p in pattern[lo:hi]) not in lang:
                return False
        return True

    def assign(i):
        if i == len(domain):
            found.append(SlidingBlockCode.from_map(r, dict(zip(domain, value))))
            return
        for c in letters:
            value[i] = c
            if consistent(i):
                assign(i + 1)
        value[i] = None

    assign(0)
    return found


def compose_codes(g: SlidingBlockCode, f: SlidingBlockCode, w: Word) -> Word:
    """``(g ∘ f)`` applied to ``w``."""
    return g.apply(f.apply(w))


def enumerate_automorphism_candidates(lang: LanguageTable, r: int, depth: int) -> list:
    """Radius-``r`` codes that map language words of length ``2r+1+depth``
    into the language and have a left inverse among themselves on the words
    of length ``4r+1``."""
    if r < 0 or depth < 0:
        raise ValueError("radius and depth must be nonnegative")
    if lang.cap < 2 * r + 1 + depth:
        raise LanguageError(f"cap {lang.cap} is below 2r+1+depth = {2 * r + 1 + depth}")
    if lang.cap < 4 * r + 1:
        raise LanguageError(f"cap {lang.cap} is below 4r+1 = {4 * r + 1}")
    maps = _search(lang, r, depth)
    test = sorted(lang.words(4 * r + 1))
    images = [tuple(f.apply(w) for w in test) for f in maps]
    centres = tuple((w[2 * r],) for w in test)
    keep = []
    for i, f in enumerate(maps):
        if any(tuple(g.apply(x) for x in images[i]) == centres for g in maps):
            keep.append(f)
    return keep


class Census(NamedTuple):
    classes: int
    representatives: tuple


def quotient_census(candidates: Iterable[SlidingBlockCode], lang: LanguageTable) -> Census:
    """Classes of candidates modulo shift powers ``T^k``, ``|k| <= 2r``.
    Two codes are identified when ``f = T^k g`` on every language word of
    length ``6r+1``."""
    candidates = list(candidates)
    if not candidates:
        return Census(0, ())
    r = max(c.radius for c in candidates)
    span = 6 * r + 1
    if lang.cap < span:
        raise LanguageError(f"cap {lang.cap} is below 6r+1 = {span}")
    words = sorted(lang.words(span))
    images = [tuple(c.apply(w) for w in words) for c in candidates]
    parent = list(range(len(candidates)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    # f = T^k g means f(x)_0 = g(x)_k; compare the centre of f's image with
    # the letter k places away in g's image
    centre = 2 * r
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            for k in range(-2 * r, 2 * r + 1):
                if all(a[centre] == b[centre + k] for a, b in zip(images[i], images[j])):
                    parent[find(i)] = find(j)
                    break
    roots = sorted({find(i) for i in range(len(candidates))})
    return Census(len(roots), tuple(candidates[i] for i in roots))


class FactorialCheck(NamedTuple):
    holds: bool
    census: int
    estimate: int
    factorial: int


def check_factorial_bound(census: int, asym: AsymptoticReport) -> FactorialCheck:
    if not asym.stabilized:
        raise ValueError("the asymptotic estimate has not stabilized")
    f = factorial(asym.class_count_estimate)
    return FactorialCheck(census <= f, census, asym.class_count_estimate, f)
