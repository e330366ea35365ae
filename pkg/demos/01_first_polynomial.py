"""Compute colored polynomial invariants of a 3-strand braid closure.

A 3-strand braid is written as alternating generator powers
``a1,b1|a2,b2|...``: sigma_1^a1 sigma_2^b1 sigma_1^a2 ...  The closure of
``-1,-1|-1,-1`` is the left-handed trefoil.  This demo computes its reduced
two-variable polynomial for the first few symmetric colors and shows the
standard specializations.
"""

from homfly3 import (
    Braid3Word,
    antisymmetric_dual,
    jones_polynomial,
    reduced_homfly,
    special_polynomial,
)
from homfly3.qpoly import substitute

word = Braid3Word.parse("-1,-1|-1,-1")
print("braid word :", word)
print("writhe     :", word.writhe)
print()

for r in (1, 2, 3):
    h = reduced_homfly(word, r)
    print("reduced polynomial, color [%d]:" % r)
    print("   ", h.render())

print()

h1 = reduced_homfly(word, 1)
print("special value (q = 1)   :", special_polynomial(h1).render())
print("A = q^2 specialization  :", jones_polynomial(h1).render())

# the transposed color [1,1,...,1] follows from [r] by q -> -1/q
h2 = reduced_homfly(word, 2)
print("color [1,1] from [2]    :", antisymmetric_dual(h2).render())

# the mirror image is the simultaneous inversion A -> 1/A, q -> 1/q
mirror = reduced_homfly(Braid3Word.parse("1,1|1,1"), 1)
print()
print("mirror braid 1,1|1,1    :", mirror.render())
print("inverted                :", substitute(mirror, "invert").render())
print("equals the original     :", substitute(mirror, "invert") == h1)
