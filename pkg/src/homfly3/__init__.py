"""homfly3: exact colored HOMFLY polynomials for 3-strand braids.

The package computes extended and reduced HOMFLY polynomials of knots
presented as 3-strand braid words, colored by symmetric representations
[r] with r <= 4 (and their antisymmetric duals), through the character
expansion of the braid-group image: per irreducible block an eigenvalue
matrix and a mixing matrix, assembled into exact Laurent polynomials in
A and q.  All arithmetic is exact; nothing here ever touches a float.

Submodules
----------
qpoly   exact Laurent/rational arithmetic in q and (A, q)
radext  square-root extension scalars with a radical-freeness certificate
young   Young diagrams, framing weights, block bookkeeping
symfun  Schur polynomials in power sums, Adams maps, cut-and-join
racah   mixing matrices: closed forms and the eigenvalue construction
braid   character expansion and the polynomial invariants themselves
knotdb  the bundled table of verified polynomials
cli     the ``homfly3`` command-line tool
"""

__version__ = "0.1.0"

from .qpoly import (  # noqa: F401
    LaurentQ,
    LaurentQA,
    RationalQ,
    quantum_int,
    curly_bracket,
    substitute,
)
from .braid import (  # noqa: F401
    Braid3Word,
    NonPolynomialResult,
    antisymmetric_dual,
    character_coefficients,
    extended_homfly,
    jones_polynomial,
    reduced_homfly,
    special_polynomial,
)
