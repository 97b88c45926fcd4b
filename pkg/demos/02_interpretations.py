"""
Interpretations and double interpretations
==========================================

Cut a word into a suffix of a block, whole blocks and a prefix of a block.
Two cuts that disagree on the next letter form a double interpretation.
"""

from sadicwords.interp import double_interpretations, enumerate_interpretations, extract_simple, is_simple
from sadicwords.words import Alphabet

A = Alphabet.of("ab")
W = A.wordset("ab a")
d = A.word("aaba")

for I in enumerate_interpretations(d, W):
    print(I.show(A))

pairs = double_interpretations(d, W)
print(len(pairs), "double interpretations,", sum(is_simple(D, W) for D in pairs), "simple")

# extract_simple walks to a suffix that carries a simple pair
for D in pairs:
    J = D.second
    if J.d_L in W and len(D.first.d_L) <= len(J.d_L) + len(J.d_M) and not is_simple(D, W):
        e, E, trace = extract_simple(D, W)
        print(D.show(A), "->", A.show(e), [s.case for s in trace])
        break
