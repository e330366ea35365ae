"""Schur polynomials in power sums, plethysm, and the cut-and-join operator.

Everything downstream of the braid traces runs through exact symmetric
function arithmetic: Schur polynomials expanded over power sums p_k with
rational coefficients, the degree-scaling (Adams) maps p_k -> p_mk, and the
second-order cut-and-join operator whose eigenfunctions are exactly the
Schur polynomials.
"""

from homfly3.symfun import (
    adams,
    cut_and_join,
    expand_in_schur,
    schur_in_powersums,
)
from homfly3.young import YoungDiagram, kappa

s1 = schur_in_powersums(YoungDiagram([1]))
s21 = schur_in_powersums(YoungDiagram([2, 1]))
print("S_[1]    =", s1.render())
print("S_[2,1]  =", s21.render())
print()

# the cube of S_[1] decomposes with multiplicities 1, 2, 1
cube = expand_in_schur(s1 * s1 * s1, 3)
print("S_[1]^3 in the Schur basis:")
for Q, c in sorted(cube.items(), key=lambda kv: kv[0].rows, reverse=True):
    print("  %s : %s" % (Q.render(), c))
print()

# the Adams map psi_3 sends p_k to p_3k; on S_[1] it gives p_3, whose Schur
# expansion alternates in sign
psi = adams(s1, 3)
print("psi_3(S_[1]) =", psi.render())
for Q, c in sorted(expand_in_schur(psi, 3).items(), key=lambda kv: kv[0].rows, reverse=True):
    print("  %s : %s" % (Q.render(), c))
print()

# Schur polynomials are eigenfunctions of the cut-and-join operator with
# eigenvalue kappa = sum of (column - row) over the cells
for rows in ([3], [2, 1], [4, 2]):
    d = YoungDiagram(rows)
    s = schur_in_powersums(d)
    w2 = cut_and_join(s)
    k = kappa(d)
    check = w2.is_zero() if k == 0 else w2 == s * k
    print("cut_and_join(S_%s) = %d * S_%s : %s" % (d.render(), k, d.render(), check))
