"""Right-special words as finite stand-ins for asymptotic pairs, class
estimates, and the end-to-end covering check for the set ``B``."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .interp import FactorizedWindow, InterpretationError, simple_di_from_disagreement
from .reduction import build_B, reduction_chain
from .sadic import (
    DirectiveSequence, LanguageError, LanguageTable, alphabet_rank, compose_range,
    cover_images, desubstitute, factors, is_everywhere_growing, level_language,
)
from .words import Word, WordSet


class DisagreementPair(NamedTuple):
    past: Word
    branches: tuple


def disagreement_pairs(lang: LanguageTable, L: int) -> list:
    """Length-``L`` words of the language with at least two one-letter right
    extensions, in lexicographic order."""
    if L < 1 or L >= lang.cap:
        raise LanguageError(f"need 1 <= L < cap = {lang.cap}, got L = {L}")
    branches = {}
    for w in lang.words(L + 1):
        branches.setdefault(w[:-1], set()).add(w[-1])
    return [DisagreementPair(p, tuple(sorted(b)))
            for p, b in sorted(branches.items()) if len(b) >= 2]


def right_special(seq: DirectiveSequence, L: int) -> list:
    """Right-special words of length ``L`` at level 0, computed from the
    length-``L+1`` factors alone."""
    branches = {}
    for w in factors(seq, 0, L + 1):
        branches.setdefault(w[:-1], set()).add(w[-1])
    return sorted(p for p, b in branches.items() if len(b) >= 2)


@dataclass
class AsymptoticReport:
    depth: int
    right_special_count: int
    stabilized: bool
    class_count_estimate: int
    bound: int
    rank: int
    depths: tuple
    counts: tuple  # surviving tails at each requested depth
    lookahead: int

    @property
    def within_bound(self) -> bool:
        return self.class_count_estimate <= self.bound


def count_asymptotic_classes(seq: DirectiveSequence, depths: Sequence[int],
                             lookahead: int | None = None) -> AsymptoticReport:
    """Track right-special words across the requested depths.

    A right-special word of length ``L`` counts as a surviving tail when it is
    a suffix of a right-special word at the look-ahead depth (default eight
    times the deepest requested depth); branches that die out before then
    are transient.  Side branches that sprout at length ``l`` tend to live
    for a length proportional to ``l``, hence the generous factor.  The estimate is the number of tails at the deepest requested
    depth, and the count has stabilized when the last two depths agree.
    """
    depths = tuple(sorted(set(depths)))
    if not depths or depths[0] < 1:
        raise ValueError("depths must be positive")
    top = depths[-1]
    lookahead = 8 * top if lookahead is None else lookahead
    if lookahead < top:
        raise ValueError(f"look-ahead {lookahead} is below the deepest depth {top}")
    growth = is_everywhere_growing(seq)
    if not growth.growing:
        raise LanguageError(f"{seq.name or 'schedule'} is not everywhere growing")
    deepest = right_special(seq, lookahead)
    counts = tuple(len({w[len(w) - L:] for w in deepest}) for L in depths)
    stabilized = len(counts) >= 2 and counts[-1] == counts[-2]
    K = alphabet_rank(seq)
    report = AsymptoticReport(top, len(right_special(seq, top)), stabilized,
                              counts[-1], 122 * K ** 7, K, depths, counts, lookahead)
    if stabilized:
        assert report.within_bound, (
            f"{report.class_count_estimate} classes exceed 122 K^7 = {report.bound}")
    return report


# -- covering ----------------------------------------------------------------------------

@dataclass
class LevelCheck:
    level: int
    size: int  # #W_n
    min_length: int  # <W_n>
    max_length: int  # |W_n|
    len_cap: int
    B_size: int
    bound: int  # 122 #W_n^7
    pairs: int  # disagreements with covers on both branches
    covered: int
    extracted: int  # pairs where the simple d.i. extraction succeeded
    longest_free: int  # longest reduction-free word met at the end of a chain
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.B_size <= self.bound


@dataclass
class CoveringReport:
    depth: int
    levels: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.levels)


def level_wordset(seq: DirectiveSequence, n: int) -> WordSet:
    """``W_n = tau_[0,n)(A_n)``."""
    return WordSet(compose_range(seq, 0, n).images)


def verify_covering(seq: DirectiveSequence, levels: Sequence[int], L: int,
                    len_cap: int | None = None, exact: bool | None = None) -> CoveringReport:
    """For each level ``n`` build ``B`` for ``W_n`` and check that every
    right-special word of length ``L`` whose two continuations both admit
    ``W_n``-covers ends with a word of ``B``.

    ``len_cap`` defaults to ``min(L, 4 |W_n|)``.
    """
    lang = level_language(seq, 0, L + 1)
    pairs = disagreement_pairs(lang, L)
    checks = []
    for n in levels:
        if not 1 <= n <= seq.horizon:
            raise LanguageError(f"level {n} outside 1..{seq.horizon}")
        W = level_wordset(seq, n)
        k = W.min_length
        if k > L:
            raise ValueError(f"<W_{n}> = {k} exceeds the depth {L}")
        cap = len_cap if len_cap is not None else min(L, 4 * W.max_length)
        report = build_B(W, cap, exact)
        sigma = compose_range(seq, 0, n)
        check = LevelCheck(n, len(W), k, W.max_length, cap, len(report.B),
                           report.bound, 0, 0, 0, 0)
        for past, branches in pairs:
            covers = {}
            for b in branches:
                found = desubstitute(seq, 0, n, past + (b,))
                if found:
                    c = found[0]
                    covers[b] = FactorizedWindow(cover_images(sigma, c), c.offset)
            if len(covers) < 2:
                continue
            check.pairs += 1
            if past[-k:] in report.B:
                check.covered += 1
            else:
                check.failures.append(("not-in-B", past))
            a, a2 = sorted(covers)[:2]
            if len(past) < 2 * W.max_length:
                continue
            try:
                ex = simple_di_from_disagreement(past, a, a2, W, (covers[a], covers[a2]))
            except InterpretationError as err:
                check.failures.append(("no-simple-di", past, str(err)))
                continue
            check.extracted += 1
            end = reduction_chain(ex.E, W)[-1]
            check.longest_free = max(check.longest_free, len(end.word))
        checks.append(check)
    return CoveringReport(L, checks)
