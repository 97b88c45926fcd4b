import pytest

from sadicwords.asymptotics import (
    count_asymptotic_classes, disagreement_pairs, level_wordset, right_special, verify_covering,
)
from sadicwords.fixtures import fibonacci, letter_to_letter, thue_morse
from sadicwords.sadic import LanguageError, LanguageTable, level_language

from conftest import w


def test_fibonacci_has_one_right_special_word_per_length():
    lang = level_language(fibonacci(), 0, 30)
    for L in range(1, 30):
        pairs = disagreement_pairs(lang, L)
        assert len(pairs) == 1 and pairs[0].branches == (0, 1)


def test_full_shift_pairs():
    pairs = disagreement_pairs(LanguageTable.full_shift(2, 4), 3)
    assert len(pairs) == 8 and all(p.branches == (0, 1) for p in pairs)


def test_cap_too_small():
    lang = level_language(fibonacci(), 0, 5)
    with pytest.raises(LanguageError):
        disagreement_pairs(lang, 5)


def test_monotone_consistency():
    for seq in (fibonacci(), thue_morse()):
        lang = level_language(seq, 0, 40)
        for L in range(1, 38):
            shorter = {p.past for p in disagreement_pairs(lang, L)}
            for p in disagreement_pairs(lang, L + 1):
                assert p.past[1:] in shorter
        assert [p.past for p in disagreement_pairs(lang, 20)] == right_special(seq, 20)


def test_fibonacci_estimate():
    report = count_asymptotic_classes(fibonacci(), [32, 64, 128])
    assert report.class_count_estimate == 1 and report.stabilized
    assert report.bound == 15616 and report.rank == 2 and report.depth == 128
    assert report.class_count_estimate <= report.right_special_count


def test_thue_morse_estimate():
    report = count_asymptotic_classes(thue_morse(), [16, 32, 64])
    assert report.stabilized and report.counts == (2, 2, 2)
    assert report.within_bound


def test_growth_precondition():
    with pytest.raises(LanguageError):
        count_asymptotic_classes(letter_to_letter(), [4, 8])


def test_verify_covering_small():
    report = verify_covering(fibonacci(), [1, 2, 3], 32)
    assert report.passed
    for c in report.levels:
        assert c.pairs == c.covered == c.extracted == 1
        assert c.B_size <= c.bound and c.longest_free <= c.len_cap


def test_verify_covering_errors():
    with pytest.raises(ValueError):
        verify_covering(fibonacci(), [9], 16)  # <W_9> = 55 > 16
    with pytest.raises(LanguageError):
        verify_covering(fibonacci(horizon=10), [11], 16)


def test_level_wordset():
    assert level_wordset(fibonacci(), 2).words == (w("ab"), w("aba"))
