import pytest

from sadicwords.asymptotics import disagreement_pairs, level_wordset
from sadicwords.fixtures import fibonacci
from sadicwords.interp import (
    DoubleInterpretation, FactorizedWindow, InterpretationError, double_interpretations,
    enumerate_interpretations, extract_simple, inherit, interpretation, is_simple,
    simple_di_from_disagreement,
)
from sadicwords.sadic import compose_range, cover_images, desubstitute, level_language
from sadicwords.words import WordError, is_prefix, is_suffix

from conftest import as_tuple, binary_words, naive_interpretations, w, word_set_grid, ws


def I(W, d_L, blocks, d_R, a):
    return interpretation(w(d_L), [w(b) for b in blocks], w(d_R), w(a)[0], W)


def shapes(d, W):
    return {(I.d_L, I.blocks, I.d_R, I.a) for I in enumerate_interpretations(w(d), W)}


def test_enumeration_examples(W_ab_a):
    assert shapes("a", W_ab_a) == {(w("a"), (), (), 0)}
    assert shapes("aa", W_ab_a) == {(w("a"), (w("a"),), (), 0), (w("a"), (), w("a"), 1)}
    assert shapes("b", W_ab_a) == {(w("b"), (), (), 0)}
    with pytest.raises(WordError):
        enumerate_interpretations((), W_ab_a)


def test_witnesses_are_shortest(W_ab_a):
    (only,) = enumerate_interpretations(w("b"), W_ab_a)
    assert only.u_L == w("ab") and only.u_R == w("a")
    assert I(ws("aa ba a"), "a", [], "", "a").u_L == w("a")


def test_interpretation_rejects_bad_parts(W_ab_a):
    with pytest.raises(InterpretationError):
        I(W_ab_a, "", [], "", "a")
    with pytest.raises(InterpretationError):
        I(W_ab_a, "bb", [], "", "a")
    with pytest.raises(InterpretationError):
        I(W_ab_a, "a", ["b"], "", "a")
    with pytest.raises(InterpretationError):
        I(W_ab_a, "a", [], "b", "a")


def test_reconstruction_and_oracle_small_grid():
    for W in word_set_grid():
        for d in binary_words(6):
            got = enumerate_interpretations(d, W)
            assert all(J.word == d for J in got)
            assert {as_tuple(J) for J in got} == naive_interpretations(d, W)
            assert len(got) == len(set(got))


def test_distinct_block_lists_are_distinct_interpretations():
    W = ws("a aa")
    found = [J for J in enumerate_interpretations(w("aaaa"), W)
             if J.d_L == w("a") and J.d_R == () and J.a == 0]
    assert {J.blocks for J in found} == {(w("a"),) * 3, (w("aa"), w("a")), (w("a"), w("aa"))}


def test_inherit_examples(W_ab_a):
    J = I(W_ab_a, "a", ["a"], "", "a")
    assert inherit(J, w("a"), W_ab_a) == I(W_ab_a, "a", [], "", "a")
    assert inherit(J, w("aa"), W_ab_a) == J
    with pytest.raises(InterpretationError):
        inherit(I(W_ab_a, "ab", ["a"], "", "a"), w("a"), W_ab_a)
    with pytest.raises(InterpretationError):
        inherit(J, w("b"), W_ab_a)


def test_inherit_contract_exhaustive():
    for W in word_set_grid():
        for d in binary_words(6):
            for J in enumerate_interpretations(d, W):
                for p in range(len(J.d_L), len(d) + 1):
                    K = inherit(J, d[:p], W)
                    assert K.word == d[:p] and K.d_L == J.d_L
                    assert is_prefix(K.word + (K.a,), d + (J.a,))
                    assert K in enumerate_interpretations(d[:p], W)


def test_simplicity_examples(W_ab_a):
    D = DoubleInterpretation(I(W_ab_a, "a", [], "a", "b"), I(W_ab_a, "a", ["a"], "", "a"))
    assert is_simple(D, W_ab_a)
    assert not is_simple(D.swapped(), W_ab_a)
    with pytest.raises(InterpretationError):
        DoubleInterpretation(I(W_ab_a, "a", ["a"], "", "a"), I(W_ab_a, "a", ["a"], "", "a"))
    with pytest.raises(InterpretationError):
        DoubleInterpretation(I(W_ab_a, "a", [], "", "a"), I(W_ab_a, "a", [], "a", "b"))


def test_extract_simple_example(W_ab_a):
    D = DoubleInterpretation(I(W_ab_a, "a", ["a", "a"], "", "a"), I(W_ab_a, "a", ["a"], "a", "b"))
    e, E, trace = extract_simple(D, W_ab_a)
    assert e == w("aa")
    assert E == DoubleInterpretation(I(W_ab_a, "a", [], "a", "b"), I(W_ab_a, "a", ["a"], "", "a"))
    assert [s.case for s in trace] == ["equal-left", "simple"]


def test_extract_simple_on_simple_input(W_ab_a):
    D = DoubleInterpretation(I(W_ab_a, "a", [], "a", "b"), I(W_ab_a, "a", ["a"], "", "a"))
    e, E, trace = extract_simple(D, W_ab_a)
    assert (e, E, len(trace)) == (D.word, D, 1)


def test_extract_simple_rejects_bad_input(W_ab_a):
    D = DoubleInterpretation(I(W_ab_a, "b", ["a"], "", "a"), I(W_ab_a, "b", [], "a", "b"))
    with pytest.raises(InterpretationError):
        extract_simple(D, W_ab_a)  # second.d_L = b is not in W


def test_extract_simple_exercises_every_case():
    seen = set()
    for W in word_set_grid():
        for d in binary_words(7):
            for D in double_interpretations(d, W):
                J = D.second
                if J.d_L in W and len(D.first.d_L) <= len(J.d_L) + len(J.d_M):
                    e, E, trace = extract_simple(D, W)
                    assert is_suffix(e, d) and E.word == e and is_simple(E, W)
                    lengths = [s.length for s in trace]
                    assert lengths == sorted(lengths, reverse=True)
                    seen.update(s.case for s in trace)
    assert seen == {"simple", "left-shorter", "right-shorter", "equal-left"}


def test_simple_words_are_long_enough():
    for W in word_set_grid():
        for d in binary_words(7):
            for D in double_interpretations(d, W):
                if is_simple(D, W):
                    assert len(D.second.d_L) >= W.min_length and len(d) >= W.min_length


def _fibonacci_case(level, L):
    fib = fibonacci()
    W = level_wordset(fib, level)
    sigma = compose_range(fib, 0, level)
    (pair,) = disagreement_pairs(level_language(fib, 0, L + 1), L)
    covers = []
    for b in pair.branches:
        c = desubstitute(fib, 0, level, pair.past + (b,))[0]
        covers.append(FactorizedWindow(cover_images(sigma, c), c.offset))
    return W, pair, covers


def test_simple_di_from_disagreement_fibonacci():
    for level in (1, 2, 3):
        W, pair, covers = _fibonacci_case(level, 24)
        a, a2 = pair.branches
        out = simple_di_from_disagreement(pair.past, a, a2, W, covers)
        assert is_suffix(out.e, pair.past) and is_simple(out.E, W)
        assert out.D.second.d_L in W and out.length >= 2 * W.max_length
        assert out.D.word == pair.past[-out.length:]


def test_simple_di_from_disagreement_errors():
    W, pair, covers = _fibonacci_case(2, 24)
    a, a2 = pair.branches
    with pytest.raises(InterpretationError):
        simple_di_from_disagreement(pair.past, a, a, W, covers)
    with pytest.raises(InterpretationError):
        simple_di_from_disagreement(pair.past[-5:], a, a2, W, covers)
    with pytest.raises(InterpretationError):
        simple_di_from_disagreement(pair.past, a2, a, W, covers)  # covers swapped
