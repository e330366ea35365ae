"""The character expansion behind the braid invariant.

The invariant of a 3-strand closure in color [r] is assembled block by
block: each diagram Q with 3r cells that appears in the triple tensor power
of [r] contributes a trace coefficient C_Q, and the extended polynomial is
the sum of C_Q times the Schur polynomial S_Q in power-sum variables.
Restricting the power sums to the topological locus
p_k = (A^k - A^-k)/(q^k - q^-k) and dividing by the quantum dimension of
[r] yields the reduced polynomial of the closure.
"""

from homfly3 import Braid3Word, character_coefficients, extended_homfly, reduced_homfly
from homfly3.symfun import schur_in_powersums, topological_locus
from homfly3.young import YoungDiagram, cube_blocks

r = 1
word = Braid3Word.parse("-1,-1|-1,-1")  # trefoil

print("blocks of the triple tensor power of [%d]:" % r)
for spec in cube_blocks(r):
    print(
        "  Q = %-8s  j range %d..%d  multiplicity %d"
        % (spec.Q.render(), spec.j_min, spec.j_max, spec.multiplicity)
    )
print()

expansion = character_coefficients(word, r)
print("trace coefficients C_Q for", word, ":")
for Q in expansion:
    print("  C_%-8s = %s" % (Q.render(), expansion.coefficients[Q].render()))
print()

ext = extended_homfly(word, r)
print("extended polynomial (power-sum variables):")
print("  ", ext.render())
print()

locus_value = topological_locus(ext)
print("value on the topological locus, as an unreduced fraction:")
print("  ", locus_value.render())
print()

dim = topological_locus(schur_in_powersums(YoungDiagram([r])))
print("quantum dimension of [%d] at the locus:" % r)
print("  ", dim.render())
print()

h = reduced_homfly(word, r)
print("after exact division by the quantum dimension of [%d]:" % r)
print("  ", h.render())
