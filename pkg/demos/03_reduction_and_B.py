"""
Buckets, irreducible sets and the set B
=======================================

Simple double interpretations are grouped by a profile of witness words.
Inside a bucket we keep a largest irreducible subset; the tails of what
survives make up B.
"""

from sadicwords.reduction import build_B, reduction_chain, reduction_free_words, simple_double_interpretations
from sadicwords.words import Alphabet

A = Alphabet.of("ab")

for text in ("ab a", "aba bbb baaa"):
    W = A.wordset(text)
    report = build_B(W, 12)
    print(f"W = {{{text}}}: {report.simple_count} simple d.i. in {report.bucket_count} buckets")
    print("  largest irreducible subset:", report.max_bucket_size, "(bound", report.per_bucket_bound, ")")
    print("  B =", sorted(A.show(w) for w in report.B), " #B bound:", report.bound)
    print("  reduction-free words:", [A.show(w) for w in reduction_free_words(W, 8)])

# a reduction chain: each step moves to the longest suffix with a simple d.i.
W = A.wordset("a baa aabb")
D = simple_double_interpretations(A.word("baaa"), W)[0]
print([A.show(E.word) for E in reduction_chain(D, W)])
