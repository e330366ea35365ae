"""Evaluator for 3-strand braid closures in symmetric representations.

The pipeline: a braid word {a_1,b_1 | a_2,b_2 | ...} is traced block by
block through the mixing data of :mod:`homfly3.racah`,

    C_Q = Tr prod_i R_Q^{a_i} U_Q R_Q^{b_i} U_Q^T,

the coefficients C_Q are certified radical-free Laurent polynomials, and the
invariants are assembled from them: the extended polynomial as a symmetric
function, and the reduced two-variable polynomial on the topological locus
after framing and division by the quantum dimension.

The trace never touches radicals at runtime.  Writing U = S B S with
S = diag(sqrt(rho_j)) and B certified rational once per matrix turns every
factor into D_a B D_b B^T with D_x = diag(rho_j xi_j^x), which is plain
Laurent arithmetic; the rho-conjugation cancels cyclically, so the trace is
exactly the original one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .qpoly import (
    InexactDivision,
    LaurentQ,
    LaurentQA,
    RationalQ,
    curly_q,
    laurent_divexact,
    laurent_gcd,
    substitute,
)
from .radext import sqrt_of
from .young import YoungDiagram, cube_blocks, hook_content_dimension
from .racah import build_block
from .symfun import PowerSumPoly, schur_in_powersums

__all__ = [
    "Braid3Word",
    "CharacterExpansion",
    "NonPolynomialResult",
    "character_coefficients",
    "closure_components",
    "extended_homfly",
    "reduced_homfly",
    "antisymmetric_dual",
    "special_polynomial",
    "jones_polynomial",
]


class NonPolynomialResult(ArithmeticError):
    """Division by the quantum dimension left a nontrivial denominator."""


@dataclass(frozen=True)
class Braid3Word:
    """A 3-strand braid word as alternating generator exponents.

    ``blocks`` is a nonempty sequence of pairs (a_i, b_i): the braid is
    sigma_1^{a_1} sigma_2^{b_1} sigma_1^{a_2} sigma_2^{b_2} ...; zero
    exponents are allowed, so any 3-strand braid fits this shape.
    """

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(
            (int(a), int(b)) for (a, b) in self.blocks
        )
        if not blocks:
            raise ValueError("a braid word needs at least one (a, b) block")
        object.__setattr__(self, "blocks", blocks)

    @property
    def writhe(self):
        return sum(a + b for a, b in self.blocks)

    @classmethod
    def parse(cls, text):
        """Parse 'a1,b1|a2,b2|...' (spaces tolerated)."""
        blocks = []
        for chunk in text.split("|"):
            parts = [p.strip() for p in chunk.split(",")]
            if len(parts) != 2:
                raise ValueError(
                    "each |-separated block needs exactly two integers, "
                    "got %r" % (chunk,)
                )
            try:
                blocks.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ValueError("bad integer in braid word: %r" % (chunk,))
        return cls(tuple(blocks))

    def render(self):
        return "|".join("%d,%d" % ab for ab in self.blocks)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class CharacterExpansion:
    """Character-expansion coefficients C_Q of one braid word at color r."""

    r: int
    coefficients: dict

    def __iter__(self):
        return iter(sorted(self.coefficients, key=lambda Q: Q.rows))


# --------------------------------------------------------------------------
# radical-free trace engine

@lru_cache(maxsize=None)
def _twisted_basis(size, p, convention=None):
    """Certify U(size|p) = S B S and clear denominators.

    Returns (rho, V, c): rho_j are the Laurent values with S = diag(sqrt
    rho_j); V = c * B is an integer-coefficient Laurent matrix and c the
    common denominator cleared from the rational matrix B.
    """
    from .racah import racah_su2

    u = racah_su2(size, p, convention)
    one = LaurentQ.one()
    rho = [one]
    for j in range(1, size):
        parts = u[0][j].parts
        if len(parts) != 1:
            raise ArithmeticError(
                "mixing entry (0,%d) is not a single radical term" % j
            )
        ((radicand, _),) = parts.items()
        rho.append(one if radicand is None else radicand.value())
    roots = [sqrt_of(v) for v in rho]

    b = []
    for i in range(size):
        row = []
        for j in range(size):
            scaled = u[i][j] * roots[i] * roots[j]
            scaled = scaled * RationalQ(one, rho[i] * rho[j])
            row.append(scaled.assert_rational())
        b.append(row)

    c = one
    for row in b:
        for entry in row:
            g = laurent_gcd(c, entry.den)
            c = c * laurent_divexact(entry.den, g)
    v = tuple(
        tuple(
            entry.num * laurent_divexact(c, entry.den)
            for entry in row
        )
        for row in b
    )
    return tuple(rho), v, c


def _lq_matmul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = LaurentQ.zero()
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _block_trace(block, word, convention=None):
    """C_Q for one mixing block: Tr prod_i R^{a_i} U R^{b_i} U^T."""
    xi = block.eigenvalues
    size = len(xi)
    if size == 1:
        return xi[0] ** word.writhe
    rho, v, c = _twisted_basis(size, block.spec.p, convention)
    vt = tuple(tuple(v[j][i] for j in range(size)) for i in range(size))

    prod = None
    for a, b in word.blocks:
        da = [rho[j] * xi[j] ** a for j in range(size)]
        db = [rho[j] * xi[j] ** b for j in range(size)]
        w1 = tuple(tuple(da[i] * x for x in v[i]) for i in range(size))
        w2 = tuple(tuple(db[i] * x for x in vt[i]) for i in range(size))
        m = _lq_matmul(w1, w2)
        prod = m if prod is None else _lq_matmul(prod, m)

    trace = LaurentQ.zero()
    for i in range(size):
        trace = trace + prod[i][i]
    return laurent_divexact(trace, c ** (2 * len(word.blocks)))


def character_coefficients(word, r, convention=None):
    """Trace every cube block of color r along the braid word.

    Each coefficient is certified radical-free with unit denominator; the
    result is a plain Laurent polynomial per diagram Q.
    """
    coeffs = {}
    for spec in cube_blocks(r):
        block = build_block(spec, convention)
        coeffs[spec.Q] = _block_trace(block, word, convention)
    return CharacterExpansion(r=r, coefficients=coeffs)


# --------------------------------------------------------------------------
# assembly

def extended_homfly(word, r):
    """The character expansion sum_Q C_Q * S_Q as a power-sum polynomial."""
    expansion = character_coefficients(word, r)
    acc = PowerSumPoly.zero()
    for Q, c in expansion.coefficients.items():
        acc = acc + c * schur_in_powersums(Q)
    return acc


def _divide_pure_q(f, d):
    """Exact division of a two-variable polynomial by a pure-q polynomial."""
    slices = f.a_slices()
    out = {}
    for a, s in slices.items():
        try:
            out[a] = laurent_divexact(s, d)
        except InexactDivision:
            raise NonPolynomialResult(
                "quantum-dimension denominator does not divide the "
                "character sum (A-slice %d)" % a
            )
    return LaurentQA.from_slices(out)


def _divide_curly_atom(f, content):
    """Exact synthetic division by (A q^c - A^{-1} q^{-c})."""
    if f.is_zero():
        return f
    slices = {a: s for a, s in f.a_slices().items()}
    span = max(slices) - min(slices)
    out = {}
    steps = 0
    while slices:
        steps += 1
        if steps > span + 1:
            raise NonPolynomialResult(
                "quantum-dimension atom {A q^%d} does not divide the "
                "character sum" % content
            )
        k = max(slices)
        top = slices.pop(k)
        g = top.shift6(-6 * content)
        out[k - 1] = out.get(k - 1, LaurentQ.zero()) + g
        lower = g.shift6(-6 * content)
        prev = slices.get(k - 2, LaurentQ.zero()) + lower
        if prev.is_zero():
            slices.pop(k - 2, None)
        else:
            slices[k - 2] = prev
    return LaurentQA.from_slices(out)


def reduced_homfly(word, r):
    """Reduced polynomial: framing times sum C_Q S_Q* over S_[r]*.

    The topological-locus values S_Q* enter through their hook/content
    product form; the division by the quantum dimension of [r] must clear
    exactly, otherwise NonPolynomialResult is raised (multi-component
    closures genuinely do this; for knots it would signal a bug).
    """
    expansion = character_coefficients(word, r)
    dims = {Q: hook_content_dimension(Q) for Q in expansion.coefficients}
    dim_r = hook_content_dimension(YoungDiagram([r]))

    # common pure-q denominator: max multiset of hook atoms across blocks
    common = {}
    for d in dims.values():
        counts = {}
        for h in d.den_atoms:
            counts[h] = counts.get(h, 0) + 1
        for h, n in counts.items():
            common[h] = max(common.get(h, 0), n)

    total = LaurentQA.zero()
    for Q, c in expansion.coefficients.items():
        d = dims[Q]
        missing = dict(common)
        for h in d.den_atoms:
            missing[h] -= 1
        fill = LaurentQ.one()
        for h, n in missing.items():
            for _ in range(n):
                fill = fill * curly_q(h)
        total = total + d.num * LaurentQA.from_q(c * fill)

    # multiply by the hooks of [r] (numerator of 1/S_[r]*), then divide by
    # the common q-denominator and by the content atoms of [r]
    hooks_r = LaurentQ.one()
    for h in dim_r.den_atoms:
        hooks_r = hooks_r * curly_q(h)
    total = total * LaurentQA.from_q(hooks_r)

    denom = LaurentQ.one()
    for h, n in common.items():
        for _ in range(n):
            denom = denom * curly_q(h)
    total = _divide_pure_q(total, denom)
    for content in dim_r.num_atoms:
        total = _divide_curly_atom(total, content)

    w = word.writhe
    framing = LaurentQA.monomial(1, a=-r * w, qexp=-2 * r * (r - 1) * w)
    return total * framing


def closure_components(word):
    """Number of components of the braid closure (cycles of the permutation).

    Only crossing parity matters: each generator contributes its exponent's
    parity to the strand permutation.
    """
    perm = (0, 1, 2)
    for a, b in word.blocks:
        if a % 2:
            perm = (perm[1], perm[0], perm[2])
        if b % 2:
            perm = (perm[0], perm[2], perm[1])
    seen = [False, False, False]
    cycles = 0
    for start in range(3):
        if seen[start]:
            continue
        cycles += 1
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
    return cycles


def antisymmetric_dual(h):
    """Transpose the color: the [1^r] polynomial from the [r] one (q -> -1/q)."""
    return substitute(h, "q->-1/q")


def special_polynomial(h):
    """q = 1 specialization of a reduced polynomial (a polynomial in A)."""
    return substitute(h, "q->1")


def jones_polynomial(h):
    """A = q^2 specialization of a reduced polynomial."""
    return substitute(h, "A->q^2").pure_q()
