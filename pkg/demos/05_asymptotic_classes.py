"""
Counting asymptotic classes
===========================

Right-special words that keep extending to the left approximate the
asymptotic classes.  Count their tails at a few depths and see whether
the count settles.
"""

from sadicwords.asymptotics import count_asymptotic_classes
from sadicwords.fixtures import chacon, fibonacci, random_primitive, thue_morse

fixtures = [fibonacci(), thue_morse(), chacon()] + [random_primitive(s) for s in (11, 41, 59)]

for seq in fixtures:
    r = count_asymptotic_classes(seq, (32, 64, 128))
    print(f"{seq.name:12s} rank {r.rank}  counts {r.counts}  estimate {r.class_count_estimate}"
          f"  stabilized {r.stabilized}  bound {r.bound}")

# the first random substitution
print(random_primitive(59).morphism(0).show())
