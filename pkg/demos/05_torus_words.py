"""Torus closures as an independent cross-check of the braid engine.

The closure of (sigma_1 sigma_2)^n is the (3, n) torus link -- a knot when
n is coprime to 3.  For these words the trace coefficients C_Q are known in
closed form: expand the degree-3 Adams image of S_[r] in the Schur basis,
and each C_Q is the resulting integer c_Q times q^(2 n kappa(Q) / 3), up to
one global monomial shared by every Q.  The engine reproduces this for
every block simultaneously -- a strong end-to-end consistency check, since
the two computations share no code path.
"""

from fractions import Fraction

from homfly3 import Braid3Word, character_coefficients, reduced_homfly
from homfly3.qpoly import LaurentQ
from homfly3.symfun import adams, expand_in_schur, schur_in_powersums
from homfly3.young import YoungDiagram, kappa

r = 1
c_adams = expand_in_schur(adams(schur_in_powersums(YoungDiagram([r])), 3), 3 * r)
print("Adams coefficients c_Q for color [%d]:" % r)
for Q, c in sorted(c_adams.items(), key=lambda kv: kv[0].rows, reverse=True):
    print("  %s : %s" % (Q.render(), c))
print()

top = YoungDiagram([3 * r])
for n in (2, 4, 5):
    word = Braid3Word.parse("|".join(["1,1"] * n))
    cs = character_coefficients(word, r).coefficients
    g = cs[top] * LaurentQ.monomial(1, Fraction(-2 * n * kappa(top), 3))
    print("n = %d: global monomial G = %s" % (n, g.render()))
    for Q, got in sorted(cs.items(), key=lambda kv: kv[0].rows, reverse=True):
        c = int(c_adams.get(Q, 0))
        want = g * LaurentQ.monomial(1, Fraction(2 * n * kappa(Q), 3)) * LaurentQ.const(c)
        print(
            "  C_%-8s = %-22s = G * q^(2*%d*%d/3) * %d : %s"
            % (Q.render(), got.render(), n, kappa(Q), c, got == want)
        )
    print()

# n = 2 is the trefoil again, computed on a different braid word
h_torus = reduced_homfly(Braid3Word.parse("1,1|1,1"), 1)
h_table = reduced_homfly(Braid3Word.parse("1,3"), 1)
print("(3,2) torus word and the 1,3 two-bridge word agree:", h_torus == h_table)
