"""Profiles, reductions and irreducible sets of simple double interpretations,
and the finite set ``B`` of length-``<W>`` words they produce."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .interp import (
    DoubleInterpretation, InterpretationError, is_simple, simple_double_interpretations,
)
from .words import (
    Word, WordSet, concat, is_prefix, is_suffix, left_quotient, prefix_dependent,
    right_quotient, word_key,
)


class UProfile(NamedTuple):
    u_M: Word
    u_R: Word
    u2_L: Word
    u2_M: Word
    u2_R: Word
    ell: int


def _require_simple(D: DoubleInterpretation, W: WordSet):
    if not is_simple(D, W):
        raise InterpretationError("a simple double interpretation is required")


def _shortest(words: Iterable[Word]) -> list:
    words = list(words)
    m = min(len(w) for w in words)
    return [w for w in words if len(w) == m]


def classify(D: DoubleInterpretation, W: WordSet) -> frozenset:
    """Every profile ``U`` with ``D`` in the bucket ``D_U``."""
    _require_simple(D, W)
    I, J = D.first, D.second
    if I.blocks:
        u_M = [I.blocks[-1]]
    else:
        u_M = [w for w in W if is_suffix(I.d_L, w)]
    u_R = _shortest(w for w in W if is_prefix(I.d_R + (I.a,), w))
    u2_L = _shortest(w for w in W if is_suffix(J.d_L, w))
    if J.blocks:
        u2_M, ell = [J.blocks[0]], max(len(b) for b in J.blocks)
    else:
        u2_M, ell = list(W), 0
    u2_R = [w for w in W if is_prefix(J.d_R + (J.a,), w)]
    return frozenset(UProfile(*c, ell) for c in _product(u_M, u_R, u2_L, u2_M, u2_R))


def _product(*lists):
    out = [()]
    for options in lists:
        out = [p + (o,) for p in out for o in options]
    return out


def tilde(D: DoubleInterpretation, W: WordSet) -> Word:
    """``d_R (d'_M d'_R)^{-1}``, checked against ``(d_L d_M)^{-1} d'_L``."""
    _require_simple(D, W)
    I, J = D.first, D.second
    t = right_quotient(I.d_R, J.d_M + J.d_R)
    assert t == left_quotient(I.d_L + I.d_M, J.d_L), "the two formulas disagree"
    return t


def equivalent(D: DoubleInterpretation, E: DoubleInterpretation, W: WordSet) -> bool:
    k = W.min_length
    d, e = D.word, E.word
    return len(d) >= k and len(e) >= k and d[-k:] == e[-k:]


def reduces(D: DoubleInterpretation, E: DoubleInterpretation) -> bool:
    d, e = D.word, E.word
    return len(e) < len(d) and is_suffix(e, d)


def has_reduction(D: DoubleInterpretation, W: WordSet):
    """A simple d.i. of a strict suffix of ``d`` (longest suffix first,
    canonical-first among its pairs), or ``None``."""
    _require_simple(D, W)
    return _reduction_of(D.word, W)


@lru_cache(maxsize=200_000)
def _reduction_of(d: Word, W: WordSet):
    # a simple d.i. needs a word of length >= <W>
    for k in range(len(d) - 1, W.min_length - 1, -1):
        found = simple_double_interpretations(d[-k:], W)
        if found:
            return found[0]
    return None


class Violation(NamedTuple):
    kind: str  # "equivalent" or "reduction"
    members: tuple


def is_irreducible(S: Sequence[DoubleInterpretation], W: WordSet):
    """``(True, None)`` or ``(False, Violation)``."""
    S = sorted(set(S), key=lambda D: D.key)
    for D in S:
        _require_simple(D, W)
        E = _reduction_of(D.word, W)
        if E is not None:
            return False, Violation("reduction", (D, E))
    seen = {}
    k = W.min_length
    for D in S:
        tail = D.word[-k:]
        if tail in seen:
            return False, Violation("equivalent", (seen[tail], D))
        seen[tail] = D
    return True, None


# -- maximum irreducible subsets -----------------------------------------------------

EXACT_LIMIT = 24


@dataclass
class IrreducibleResult:
    members: tuple
    mode: str  # "exact" or "greedy"
    bound: int  # 61 #W
    dropped: int  # members with a reduction
    diagnostics: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def within_bound(self) -> bool:
        return self.size <= self.bound


def _max_independent(n: int, adj: list, groups: list) -> list:
    """Branch and bound for a maximum independent set.  ``groups`` is a
    clique cover used for the upper bound."""
    group_of = [0] * n
    for g, members in enumerate(groups):
        for v in members:
            group_of[v] = g
    best: list = []

    def bound(cands):
        return len({group_of[v] for v in cands})

    def search(chosen, cands):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(chosen) + bound(cands) <= len(best):
            return
        v = cands[0]
        rest = cands[1:]
        search(chosen + [v], [u for u in rest if u not in adj[v]])
        search(chosen, rest)

    search([], list(range(n)))
    return best


def max_irreducible_subset(bucket: Iterable[DoubleInterpretation], W: WordSet,
                           exact: bool | None = None) -> IrreducibleResult:
    """An irreducible subset of ``bucket`` of maximum size (exact search) or
    a maximal one (greedy in canonical order).  ``exact=None`` picks exact
    search for buckets of at most ``EXACT_LIMIT`` members."""
    bucket = sorted(set(bucket), key=lambda D: D.key)
    if exact is None:
        exact = len(bucket) <= EXACT_LIMIT
    bound = 61 * len(W)
    free = [D for D in bucket if _reduction_of(D.word, W) is None]
    dropped = len(bucket) - len(free)
    k = W.min_length
    if exact:
        classes = defaultdict(list)
        for i, D in enumerate(free):
            classes[D.word[-k:]].append(i)
        adj = [set() for _ in free]
        for members in classes.values():
            for i in members:
                adj[i].update(j for j in members if j != i)
        chosen = [free[i] for i in sorted(_max_independent(len(free), adj, list(classes.values())))]
    else:
        chosen, tails = [], set()
        for D in free:
            if D.word[-k:] not in tails:
                tails.add(D.word[-k:])
                chosen.append(D)
    result = IrreducibleResult(tuple(chosen), "exact" if exact else "greedy", bound, dropped)
    result.diagnostics = order_diagnostics(result.members, W)
    return result


def order_diagnostics(members: Sequence[DoubleInterpretation], W: WordSet) -> dict:
    """Members sorted by ``d~`` (a prefix chain inside one bucket) and the
    sizes ``#{D : |d_R| < |d~(j)|}``."""
    if not members:
        return {"tilde_lengths": (), "chain": True, "level_sizes": ()}
    pairs = sorted(((tilde(D, W), D) for D in members), key=lambda p: word_key(p[0]))
    tildes = [t for t, _ in pairs]
    chain = all(prefix_dependent(s, t) for s in tildes for t in tildes)
    sizes = tuple(sum(1 for _, D in pairs if len(D.first.d_R) < len(t)) for t in tildes)
    return {"tilde_lengths": tuple(len(t) for t in tildes), "chain": chain,
            "level_sizes": sizes}


# -- reduction witnesses and chains ------------------------------------------------------

def redux_witness(D: DoubleInterpretation, E: DoubleInterpretation, W: WordSet):
    """Which sufficient condition for ``{D, E}`` to be reducible applies:
    ``"prefix-dep"``, ``"equal-dR"``, ``"tilde-sandwich"`` or ``None``."""
    if D == E:
        raise InterpretationError("redux_witness needs two different elements")
    if not (classify(D, W) & classify(E, W)):
        raise InterpretationError("D and E share no profile")
    I, J = D.first, D.second
    K, L = E.first, E.second
    if prefix_dependent(J.d_M + J.d_R + (I.a,), L.d_M + L.d_R + (K.a,)):
        return "prefix-dep"
    if len(I.d_R) == len(K.d_R):
        return "equal-dR"
    td, te = len(tilde(D, W)), len(tilde(E, W))
    if td <= te <= td + len(J.d_M) or te <= td <= te + len(L.d_M):
        return "tilde-sandwich"
    return None


def reduction_chain(D: DoubleInterpretation, W: WordSet) -> list:
    """``D = D(0) => D(1) => ... => D(n)`` with ``D(n)`` free of reductions.
    Each step moves to the longest strict suffix carrying a simple d.i."""
    _require_simple(D, W)
    chain = [D]
    while True:
        E = _reduction_of(chain[-1].word, W)
        if E is None:
            return chain
        chain.append(E)


# -- the set B ---------------------------------------------------------------------------

def candidate_words(W: WordSet, len_cap: int) -> list:
    """Every word of length at most ``len_cap`` of the form ``d_L w d_R``
    with ``d_L`` a nonempty suffix and ``d_R`` a proper prefix of words of
    ``W`` and ``w ∈ W*``, in canonical order."""
    lefts = {u[i:] for u in W for i in range(len(u))}
    rights = {u[:i] for u in W for i in range(len(u))}
    middles = {()}
    frontier = {()}
    budget = len_cap - 1
    while frontier:
        frontier = {m + u for m in frontier for u in W if len(m) + len(u) <= budget} - middles
        middles |= frontier
    out = {l + m + r for l in lefts for m in middles for r in rights
           if len(l) + len(m) + len(r) <= len_cap}
    return sorted(out, key=word_key)


@dataclass
class BReport:
    B: frozenset
    len_cap: int
    bucket_count: int
    simple_count: int
    max_bucket_size: int  # largest maximum irreducible subset
    per_bucket_bound: int  # 61 #W
    bound: int  # 122 #W^7
    modes: dict
    strata: dict  # word length -> number of reduction-free simple d.i.
    buckets: dict = field(repr=False, default_factory=dict)  # profile -> members
    results: dict = field(repr=False, default_factory=dict)  # profile -> IrreducibleResult

    @property
    def within_bounds(self) -> bool:
        return len(self.B) <= self.bound and self.max_bucket_size <= self.per_bucket_bound


def build_B(W: WordSet, len_cap: int, exact: bool | None = None) -> BReport:
    """Bucket every simple d.i. of words up to ``len_cap`` by profile, keep
    a maximum irreducible subset per bucket and collect the length-``<W>``
    suffixes of their words."""
    k = W.min_length
    if len_cap < k:
        raise ValueError(f"len_cap {len_cap} is below <W> = {k}")
    buckets = defaultdict(list)
    simple_count = 0
    for d in candidate_words(W, len_cap):
        for D in simple_double_interpretations(d, W):
            simple_count += 1
            for U in classify(D, W):
                buckets[U].append(D)
    B, modes, strata, best = set(), defaultdict(int), defaultdict(int), 0
    results = {}
    for U in sorted(buckets):
        res = max_irreducible_subset(buckets[U], W, exact)
        results[U] = res
        modes[res.mode] += 1
        best = max(best, res.size)
        for D in res.members:
            B.add(D.word[-k:])
    for d in {D.word for res in results.values() for D in res.members}:
        strata[len(d)] += 1
    bound = 122 * len(W) ** 7
    report = BReport(frozenset(B), len_cap, len(buckets), simple_count, best,
                     61 * len(W), bound, dict(modes), dict(sorted(strata.items())),
                     dict(buckets), results)
    assert len(report.B) <= bound, f"#B = {len(report.B)} exceeds 122 #W^7 = {bound}"
    return report


def reduction_free_words(W: WordSet, len_cap: int) -> list:
    """Words up to ``len_cap`` carrying a simple d.i. but no reduction."""
    return [d for d in candidate_words(W, len_cap)
            if simple_double_interpretations(d, W) and _reduction_of(d, W) is None]
