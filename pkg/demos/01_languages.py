"""
Languages of S-adic sequences
=============================

Build a few directive sequences, look at their factor complexity and at
their right-special words.
"""

from sadicwords.asymptotics import right_special
from sadicwords.fixtures import chacon, fibonacci, thue_morse
from sadicwords.grammar import parse_fixture
from sadicwords.sadic import level_language

# the Fibonacci substitution a -> ab, b -> a repeated forever
fib = fibonacci()
lang = level_language(fib, 0, 12)
A = fib.alphabet(0)
print("fibonacci complexity:", lang.complexity())   # n + 1: Sturmian
print("factors of length 5:", sorted(A.show(w) for w in lang.words(5)))

# Thue-Morse and Chacon grow faster
for seq in (thue_morse(), chacon()):
    print(seq.name, level_language(seq, 0, 10).complexity())

# one right-special word per length for Fibonacci
for L in (4, 8, 16):
    print(L, [A.show(w) for w in right_special(fib, L)])

# the same sequence written as a fixture file
spec = parse_fixture("""
name fib-from-text
alphabet a b
morphism f { a -> a b ; b -> a }
schedule repeat(f)
horizon 16
""")
print(spec.name, spec.sha256[:12], level_language(spec.sequence(), 0, 12).complexity())
