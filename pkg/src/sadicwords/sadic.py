"""Directive sequences and the finite languages of their levels.

Infinite directive sequences are represented as eventually periodic
schedules ``prefix + period + period + ...``.  Every computation that needs
a truncation takes it from ``horizon`` and says so in its result.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd
from typing import NamedTuple, Sequence

from .morphism import Morphism, apply, compose
from .words import Alphabet, AlphabetError, Word


class LanguageError(ValueError):
    """A language could not be computed (window absent, horizon exhausted)."""


@dataclass(frozen=True)
class DirectiveSequence:
    """``tau_n : A_{n+1}⁺ → A_n⁺``; ``tau_n`` is ``prefix[n]`` and then the
    ``period`` repeats.  With an empty period the schedule is finite."""

    prefix: tuple = ()
    period: tuple = ()
    horizon: int = 32
    name: str = ""

    def __post_init__(self):
        prefix, period = tuple(self.prefix), tuple(self.period)
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "period", period)
        chain = prefix + period + period[:1]
        if not chain:
            raise ValueError("a directive sequence needs at least one morphism")
        for n in range(len(chain) - 1):
            if chain[n].domain != chain[n + 1].codomain:
                raise AlphabetError(
                    f"morphism {n + 1} does not chain into morphism {n}: "
                    f"domain of tau_{n} is not the codomain of tau_{n + 1}")
        if not self.period and self.horizon > len(prefix):
            object.__setattr__(self, "horizon", len(prefix))
        if self.horizon < 1:
            raise ValueError("horizon must be positive")

    @classmethod
    def stationary(cls, tau: Morphism, horizon: int = 32, name: str = "") -> "DirectiveSequence":
        return cls((), (tau,), horizon, name)

    @classmethod
    def finite(cls, morphisms: Sequence[Morphism], name: str = "") -> "DirectiveSequence":
        return cls(tuple(morphisms), (), len(morphisms), name)

    @property
    def is_periodic(self) -> bool:
        return bool(self.period)

    def morphism(self, n: int) -> Morphism:
        if n < 0:
            raise IndexError(n)
        if n < len(self.prefix):
            return self.prefix[n]
        if not self.period:
            raise IndexError(f"tau_{n} is beyond the finite schedule")
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def alphabet(self, n: int) -> Alphabet:
        if n < len(self.prefix) or self.period:
            return self.morphism(n).codomain
        if n == len(self.prefix):
            return self.prefix[-1].domain
        raise IndexError(f"level {n} is beyond the finite schedule")

    def image_lengths(self, n: int, N: int) -> tuple:
        """``|tau_[n,N)(a)|`` for each letter of ``A_N``, without building images."""
        lengths = [1] * len(self.alphabet(n))
        for k in range(n, N):
            images = self.morphism(k).images
            lengths = [sum(lengths[b] for b in im) for im in images]
        return tuple(lengths)

    def min_length(self, n: int, N: int) -> int:
        return min(self.image_lengths(n, N))


# -- composition -----------------------------------------------------------

@lru_cache(maxsize=512)
def _compose_span(seq: DirectiveSequence, n: int, N: int) -> Morphism:
    return reduce(compose, (seq.morphism(k) for k in range(n, N)))


def compose_range(seq: DirectiveSequence, n: int, N: int) -> Morphism:
    """``tau_[n,N) = tau_n ∘ ... ∘ tau_{N-1}``."""
    if not (0 <= n < N <= seq.horizon):
        raise IndexError(f"range [{n},{N}) outside the schedule horizon {seq.horizon}")
    return _compose_span(seq, n, N)


def level_words(seq: DirectiveSequence, n: int) -> tuple:
    """The images ``tau_[0,n)(A_n)`` in letter order (``n >= 1``)."""
    return compose_range(seq, 0, n).images


# -- languages --------------------------------------------------------------

@dataclass(frozen=True)
class LanguageTable:
    """Factors of length ``1..cap`` of one level.  ``horizon`` is the value of
    ``N`` at which the factor sets were confirmed stable (0 when the table
    was built directly)."""

    level: int
    cap: int
    by_length: tuple
    horizon: int = 0
    alphabet: Alphabet | None = field(default=None, compare=False)

    def words(self, k: int) -> frozenset:
        if k == 0:
            return frozenset({()})
        if not 1 <= k <= self.cap:
            raise LanguageError(f"length {k} outside 0..{self.cap}")
        return self.by_length[k - 1]

    def __contains__(self, w) -> bool:
        return len(w) == 0 or (len(w) <= self.cap and tuple(w) in self.by_length[len(w) - 1])

    def __len__(self):
        return sum(len(s) for s in self.by_length)

    def complexity(self) -> tuple:
        return tuple(len(s) for s in self.by_length)

    def restrict(self, cap: int) -> "LanguageTable":
        if cap > self.cap:
            raise LanguageError(f"cannot raise the cap from {self.cap} to {cap}")
        return LanguageTable(self.level, cap, self.by_length[:cap], self.horizon, self.alphabet)

    @classmethod
    def from_maximal(cls, maximal, cap: int, level: int = 0, horizon: int = 0,
                     alphabet: Alphabet | None = None) -> "LanguageTable":
        """All factors of length ``<= cap`` of the given words."""
        buckets = [set() for _ in range(cap + 1)]
        for w in maximal:
            w = tuple(w)
            if len(w) > cap:
                for i in range(len(w) - cap + 1):
                    buckets[cap].add(w[i:i + cap])
            elif w:
                buckets[len(w)].add(w)
        for k in range(cap, 1, -1):
            down = buckets[k - 1]
            for w in buckets[k]:
                down.add(w[1:])
                down.add(w[:-1])
        return cls(level, cap, tuple(frozenset(b) for b in buckets[1:]), horizon, alphabet)

    @classmethod
    def full_shift(cls, size: int, cap: int) -> "LanguageTable":
        from itertools import product
        return cls(0, cap, tuple(frozenset(product(range(size), repeat=k))
                                 for k in range(1, cap + 1)))


def _windows(seq: DirectiveSequence, n: int, N: int, L: int) -> set:
    """Length-``L`` factors of ``tau_[n,N)(a)``, ``a ∈ A_N``, together with
    the whole images that are shorter than ``L``."""
    if n == N:
        return {(a,) for a in seq.alphabet(N)}
    # step to the first level where images have length >= 2, so windows shrink
    M = n + 1
    while M < N and seq.min_length(n, M) < 2:
        M += 1
    tau = compose_range(seq, n, M)
    g = min(tau.lengths)
    deeper_len = -(-(L - 1) // g) + 1
    out = set()
    for y in _windows(seq, M, N, deeper_len):
        img = apply(tau, y)
        if len(img) < L:
            out.add(img)
        else:
            out.update(img[i:i + L] for i in range(len(img) - L + 1))
    return out


def factor_table(seq: DirectiveSequence, n: int, N: int, cap: int) -> LanguageTable:
    """Factors of length ``<= cap`` of the images ``tau_[n,N)(a)`` at one fixed ``N``."""
    return LanguageTable.from_maximal(_windows(seq, n, N, cap), cap, level=n,
                                      horizon=N, alphabet=seq.alphabet(n))


def level_language(seq: DirectiveSequence, n: int, cap: int) -> LanguageTable:
    """Words of length ``<= cap`` of level ``n``.

    ``N`` is raised from the first value with ``<tau_[n,N)> >= cap`` until two
    consecutive values give the same table.
    """
    return _level_language(seq, n, cap)


@lru_cache(maxsize=256)
def _level_language(seq: DirectiveSequence, n: int, cap: int) -> LanguageTable:
    if cap < 1:
        raise LanguageError("cap must be at least 1")
    N = n + 1
    while N <= seq.horizon and seq.min_length(n, N) < cap:
        N += 1
    previous = None
    while N <= seq.horizon:
        table = factor_table(seq, n, N, cap)
        if previous is not None and table.by_length == previous.by_length:
            return table
        previous = table
        N += 1
    raise LanguageError(
        f"level {n}, cap {cap}: no stabilization up to horizon {seq.horizon}")


def factors(seq: DirectiveSequence, n: int, L: int) -> frozenset:
    """Level-``n`` words of the single length ``L``; same stabilization rule
    as :func:`level_language` without materializing shorter lengths."""
    return _factors(seq, n, L)


@lru_cache(maxsize=256)
def _factors(seq: DirectiveSequence, n: int, L: int) -> frozenset:
    if L < 1:
        raise LanguageError("length must be at least 1")
    N = n + 1
    while N <= seq.horizon and seq.min_length(n, N) < L:
        N += 1
    previous = None
    while N <= seq.horizon:
        found = frozenset(w for w in _windows(seq, n, N, L) if len(w) == L)
        if found == previous:
            return found
        previous = found
        N += 1
    raise LanguageError(
        f"level {n}, length {L}: no stabilization up to horizon {seq.horizon}")


# -- rank, contraction, growth ---------------------------------------------------

def alphabet_rank(seq: DirectiveSequence) -> int:
    """Liminf of ``#A_n``.  Periodic schedules: minimum over the period.
    Finite schedules: minimum over levels ``1..end`` (horizon-bounded)."""
    if seq.period:
        p = len(seq.prefix)
        return min(len(seq.alphabet(k)) for k in range(p, p + len(seq.period)))
    last = len(seq.prefix)
    return min(len(seq.alphabet(k)) for k in range(min(1, last), last + 1))


def contract(seq: DirectiveSequence, cuts: Sequence[int]) -> DirectiveSequence:
    """Contraction along ``0 = c_0 < c_1 < ... < c_k``.

    For periodic schedules the gap pattern is repeated (``c_{mk+i} = c_i +
    m c_k``), which keeps the result eventually periodic.
    """
    cuts = list(cuts)
    if len(cuts) < 2 or cuts[0] != 0 or any(b <= a for a, b in zip(cuts, cuts[1:])):
        raise ValueError(f"cuts must start at 0 and increase strictly: {cuts}")
    if cuts[-1] > seq.horizon:
        raise ValueError(f"cut {cuts[-1]} beyond horizon {seq.horizon}")
    k, ck = len(cuts) - 1, cuts[-1]

    def cut(j):
        m, i = divmod(j, k)
        return cuts[i] + m * ck

    def block(j):
        return _compose_span(seq, cut(j), cut(j + 1))

    if not seq.period:
        return DirectiveSequence.finite([block(j) for j in range(k)], name=seq.name)
    p, P = len(seq.prefix), len(seq.period)
    reps = P // gcd(ck, P)
    j0 = 0
    while cut(j0) < p:
        j0 += 1
    horizon = 0
    while cut(horizon + 1) <= seq.horizon:
        horizon += 1
    return DirectiveSequence(
        tuple(block(j) for j in range(j0)),
        tuple(block(j) for j in range(j0, j0 + k * reps)),
        horizon=max(horizon, 1), name=seq.name)


class Growth(NamedTuple):
    growing: bool
    trace: tuple
    criterion: str


def is_everywhere_growing(seq: DirectiveSequence, horizon: int | None = None) -> Growth:
    """Whether ``<tau_[0,N)>`` tends to infinity, with the trace for ``N = 1..horizon``.

    For a periodic schedule let ``pi`` be the composition of one period.
    ``<pi^k>`` is bounded iff some letter keeps an image of length 1 forever,
    and that shows within ``#A`` iterations; so the schedule grows iff
    ``<pi^(#A)> >= 2``.
    """
    horizon = seq.horizon if horizon is None else horizon
    trace = tuple(seq.min_length(0, N) for N in range(1, horizon + 1))
    if seq.period:
        p, P = len(seq.prefix), len(seq.period)
        size = len(seq.alphabet(p))
        lengths = [1] * size
        for _ in range(size):
            for k in range(p, p + P):
                images = seq.morphism(k).images
                lengths = [sum(lengths[b] for b in im) for im in images]
        return Growth(min(lengths) >= 2, trace, f"period power {size}")
    return Growth(len(trace) > 1 and trace[-1] > trace[0], trace, "horizon-bounded")


# -- desubstitution ---------------------------------------------------------------

class Cover(NamedTuple):
    """``window`` occurs in ``tau_[n,N)(blocks)`` starting at ``offset``
    inside the image of the first block."""
    blocks: tuple
    offset: int


def desubstitute(seq: DirectiveSequence, n: int, N: int, window: Word) -> list:
    """All minimal covers of ``window`` by images of level-``N`` words."""
    window = tuple(window)
    if not window:
        raise LanguageError("cannot desubstitute the empty word")
    if window not in level_language(seq, n, len(window)):
        raise LanguageError(f"window {window} is not in the level-{n} language")
    sigma = compose_range(seq, n, N)
    g = min(sigma.lengths)
    blocks_max = -(-(len(window) - 1) // g) + 1
    upper = level_language(seq, N, blocks_max)
    covers = []

    def extend(y, pos, offset):
        rest = window[pos:]
        for c in range(len(sigma.images)):
            y2 = y + (c,)
            if y2 not in upper:
                continue
            img = sigma.images[c]
            if len(img) >= len(rest):
                if img[:len(rest)] == rest:
                    covers.append(Cover(y2, offset))
            elif rest[:len(img)] == img:
                extend(y2, pos + len(img), offset)

    for b, img in enumerate(sigma.images):
        if (b,) not in upper:
            continue
        for k in range(len(img)):
            seg = img[k:]
            if len(seg) >= len(window):
                if seg[:len(window)] == window:
                    covers.append(Cover((b,), k))
            elif window[:len(seg)] == seg:
                extend((b,), len(seg), k)
    covers.sort()
    return covers


def cover_images(sigma: Morphism, cover: Cover) -> tuple:
    """The cover as a list of image words (a factorization over ``sigma(A)``)."""
    return tuple(sigma.images[b] for b in cover.blocks)


__all__ = [
    "Cover", "DirectiveSequence", "Growth", "LanguageError", "LanguageTable",
    "alphabet_rank", "compose_range", "contract", "cover_images",
    "desubstitute", "factor_table", "factors", "is_everywhere_growing", "level_language",
    "level_words",
]
