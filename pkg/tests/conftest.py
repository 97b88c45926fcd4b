"""Shared helpers and brute-force oracles.

The oracles below are written from the definitions and share no code with
the library beyond the word representation.
"""
from itertools import combinations, product

import pytest

from sadicwords.words import Alphabet, WordSet

AB = Alphabet.of("ab")
POOL = ("a", "b", "aa", "ab", "ba")


def w(text):
    return AB.word(text)


def ws(text):
    return AB.wordset(text)


def binary_words(max_len, min_len=1):
    for n in range(min_len, max_len + 1):
        yield from product((0, 1), repeat=n)


def word_set_grid(pool=POOL, sizes=(1, 2, 3)):
    """Every W ⊆ pool with the given sizes."""
    for k in sizes:
        for combo in combinations(pool, k):
            yield ws(" ".join(combo))


def naive_splits(u, W):
    """All W-factorizations of u by plain recursion."""
    if not u:
        return [()]
    out = []
    for k in range(1, len(u) + 1):
        if u[:k] in W:
            out.extend((u[:k],) + rest for rest in naive_splits(u[k:], W))
    return out


def _first(words):
    return min(words, key=lambda x: (len(x), x)) if words else None


def naive_interpretations(d, W, letters=(0, 1)):
    """Set of (d_L, blocks, d_R, a, u_L, u_R) straight from the definition."""
    out = set()
    n = len(d)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            x, y, z = d[:i], d[i:j], d[j:]
            u_L = _first([u for u in W.words if len(u) >= len(x) and u[len(u) - len(x):] == x])
            if u_L is None:
                continue
            for blocks in naive_splits(y, W):
                for a in letters:
                    za = z + (a,)
                    u_R = _first([u for u in W.words if u[:len(za)] == za])
                    if u_R is not None:
                        out.add((x, blocks, z, a, u_L, u_R))
    return out


def as_tuple(I):
    return (I.d_L, I.blocks, I.d_R, I.a, I.u_L, I.u_R)


@pytest.fixture
def W_ab_a():
    return ws("ab a")
