"""Zero continued fractions and the blowup calculus.

The admissible tuples of positive integers with [n_1, ..., n_k] = 0 are
exactly the tuples produced from (0) by repeatedly inserting a 1 away
from the first position and incrementing its neighbors ("strict
blowups").  In each length k >= 2 there are Catalan(k-1) of them.
"""

from math import comb

from lensfill import blowdown, blowup, bounded_zero_cf, enumerate_zero_cf, strict_blowup_sequence

print("growing from (0):")
t = (0,)
for s in (2, 2, 4, 3):
    t = blowup(t, s)
    print("  blowup at", s, "->", t)
print("  blowdown at 3 ->", blowdown(t, 3))

for k in range(1, 9):
    count = len(enumerate_zero_cf(k))
    catalan = comb(2 * (k - 1), k - 1) // k if k > 1 else 1
    print(f"length {k}: {count:4d} zero tuples (Catalan: {catalan})")

print("the five of length 4:", sorted(enumerate_zero_cf(4)))

# Every zero tuple records its own construction; the package recovers a
# canonical insertion sequence by greedy blowdowns.
n = (2, 2, 1, 4, 2, 1)
print(n, "is built from (0) by insertions at", strict_blowup_sequence(n))

# Bounded enumeration scales to lengths where the full census cannot:
bounds = (2,) * 30
print("tuples of length 30 bounded by twos:", bounded_zero_cf(bounds))
