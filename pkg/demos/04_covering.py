"""
Covering right-special words by B
=================================

For the level word sets of the Fibonacci sequence, every right-special
word whose two continuations both decompose into level blocks ends with
an element of B.
"""

from sadicwords.asymptotics import level_wordset, verify_covering
from sadicwords.fixtures import fibonacci

fib = fibonacci()
A = fib.alphabet(0)
for n in (2, 3, 4):
    print(n, [A.show(w) for w in level_wordset(fib, n)])

report = verify_covering(fib, range(2, 7), 64)
for c in report.levels:
    print(f"level {c.level}: <W>={c.min_length} |W|={c.max_length} cap={c.len_cap} "
          f"#B={c.B_size} pairs={c.pairs} covered={c.covered} longest free={c.longest_free}")
print("passed:", report.passed)
