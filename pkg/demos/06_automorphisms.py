"""
Sliding block codes
===================

Search radius-r local rules that keep the language of Thue-Morse inside
itself, then count them up to powers of the shift.
"""

from math import factorial

from sadicwords.asymptotics import count_asymptotic_classes
from sadicwords.automorphisms import check_factorial_bound, enumerate_automorphism_candidates, quotient_census
from sadicwords.fixtures import fibonacci, thue_morse
from sadicwords.sadic import level_language

r, depth = 2, 16
for seq in (thue_morse(), fibonacci()):
    lang = level_language(seq, 0, 2 * r + 1 + depth)
    found = enumerate_automorphism_candidates(lang, r, depth)
    census = quotient_census(found, lang)
    asym = count_asymptotic_classes(seq, (32, 64, 128))
    check = check_factorial_bound(census.classes, asym)
    print(f"{seq.name}: {len(found)} candidates, {census.classes} up to shift, "
          f"{asym.class_count_estimate}! = {factorial(asym.class_count_estimate)}, holds {check.holds}")

# the flip a <-> b shows up as the second Thue-Morse class
A = thue_morse().alphabet(0)
lang = level_language(thue_morse(), 0, 21)
census = quotient_census(enumerate_automorphism_candidates(lang, r, depth), lang)
x = A.word("abbabaabbaababbabaab")
for code in census.representatives:
    print(A.show(x[r:-r]), "->", A.show(code.apply(x)))
