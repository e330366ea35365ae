"""Mixing matrices: closed forms, eigenvalue reconstruction, recoupling oracle."""

import pytest

from homfly3.braid import Braid3Word, character_coefficients
from homfly3.qpoly import LaurentQ, RationalQ
from homfly3.racah import (
    DegenerateP,
    MixingBlock,
    RepeatedEigenvalue,
    SignConvention,
    UnsupportedMultiplicity,
    _sixj_reference,
    build_block,
    certify_orthogonal,
    inert_size6_first_row,
    mat_mul,
    mat_transpose,
    normalized_eigenvalues,
    racah_from_eigenvalues,
    racah_su2,
)
from homfly3.radext import RadicalScalar
from homfly3.young import cube_blocks

# Frozen relation between the closed forms and the independent recoupling
# sum: racah_su2(N, p) == EPS(N, p) * D_N * _sixj_reference(N, p) * D_N.
SIGMA = {
    2: (1, 1),
    3: (1, -1, -1),
    4: (1, -1, 1, -1),
    5: (1, 1, 1, 1, 1),
}


def eps_sign(N, p):
    return (-1) ** (p + 1) if N == 4 else (-1) ** p

FAST_GRID = [(2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (5, 4)]


def as_radical(lq):
    return RadicalScalar.rational(RationalQ(lq, LaurentQ.one()))


# ---------------------------------------------------------------------------
# closed forms: certification and error modes

@pytest.mark.parametrize("N,p", FAST_GRID)
def test_closed_forms_certified(N, p):
    u = racah_su2(N, p)
    certify_orthogonal(u)
    # sigma U sigma = U^T with sigma = diag(+1, -1, +1, ...)
    for i in range(N):
        for j in range(N):
            want = u[i][j] if (i + j) % 2 == 0 else -u[i][j]
            assert u[j][i] == want


def test_degenerate_p_raises():
    with pytest.raises(DegenerateP):
        racah_su2(3, 1)
    with pytest.raises(DegenerateP):
        racah_su2(5, 3)


def test_bad_sizes_raise():
    with pytest.raises(UnsupportedMultiplicity):
        racah_su2(6, 6)
    with pytest.raises(UnsupportedMultiplicity):
        racah_su2(1, 1)
    with pytest.raises(ValueError):
        racah_su2(2, 0)


def test_convention_is_a_similarity():
    base = racah_su2(3, 2)
    flipped = racah_su2(3, 2, SignConvention((-1, 1)))
    certify_orthogonal(flipped)
    signs = (1, -1, 1)
    for i in range(3):
        for j in range(3):
            want = base[i][j] if signs[i] * signs[j] > 0 else -base[i][j]
            assert flipped[i][j] == want


def test_convention_validation():
    with pytest.raises(ValueError):
        SignConvention((1, 0))
    with pytest.raises(ValueError):
        racah_su2(3, 2, SignConvention((-1,)))


# ---------------------------------------------------------------------------
# independent oracle: the equal-argument recoupling sum

@pytest.mark.parametrize("N,p", FAST_GRID)
def test_closed_forms_match_recoupling_sum(N, p):
    u = racah_su2(N, p)
    ref = _sixj_reference(N, p)
    eps = eps_sign(N, p)
    sig = SIGMA[N]
    for i in range(N):
        for j in range(N):
            expected = ref[i][j]
            if eps * sig[i] * sig[j] < 0:
                expected = -expected
            assert u[i][j] == expected, (N, p, i, j)


def test_inert_size6_row_matches_recoupling_sum():
    # sizes >= 6 are outside the engine; the transcribed first-row entries
    # must still agree with the generic sum (overall sign (-1)^p at p = 5)
    row = inert_size6_first_row(5)
    ref = _sixj_reference(6, 5)
    for j in range(3):
        assert row[j] == -ref[0][j], j


# ---------------------------------------------------------------------------
# eigenvalue-based reconstruction vs closed forms

@pytest.mark.parametrize("N,p", [(2, 1), (2, 3), (3, 2), (3, 4)])
def test_eigenvalue_reconstruction_entrywise(N, p):
    u = racah_su2(N, p)
    v = racah_from_eigenvalues(normalized_eigenvalues(N, p), N)
    assert u == v


@pytest.mark.parametrize("N,p", [(4, 3), (5, 4)])
def test_eigenvalue_reconstruction_squared(N, p):
    u = racah_su2(N, p)
    v = racah_from_eigenvalues(normalized_eigenvalues(N, p), N)
    for i in range(N):
        assert u[i][i] == v[i][i], (i, i)
        for j in range(N):
            if i != j:
                assert u[i][j] * u[i][j] == v[i][j] * v[i][j], (i, j)


def test_normalized_eigenvalues_product_is_sign():
    one = LaurentQ.one()
    for N in (2, 3, 4, 5):
        for p in range(N - 1, 6):
            prod = LaurentQ.one()
            for x in normalized_eigenvalues(N, p):
                prod = prod * x
            assert prod == one or prod == -one, (N, p)


def test_repeated_eigenvalue_rejected():
    q = LaurentQ.monomial(1, 1)
    with pytest.raises(RepeatedEigenvalue):
        racah_from_eigenvalues([q, q], 2)


# ---------------------------------------------------------------------------
# block assembly

def test_build_block_r1():
    specs = {spec.Q: spec for spec in cube_blocks(1)}
    blocks = {Q: build_block(spec) for Q, spec in specs.items()}
    sizes = {Q.rows: b.size for Q, b in blocks.items()}
    assert sizes == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    b = blocks[[Q for Q in blocks if Q.rows == (2, 1)][0]]
    assert b.eigenvalues == (LaurentQ.monomial(1, 1), LaurentQ.monomial(-1, -1))
    assert isinstance(b, MixingBlock)
    assert b.R[0][1] == LaurentQ.zero()


def test_braid_relation_cube_root_block():
    # In the 2-dimensional r=1 block, M = R U R U^T satisfies M^2 + M + 1 = 0:
    # the two twist eigenvalues q and -1/q multiply to -1, so M has unit
    # determinant and trace -1.
    (spec,) = [s for s in cube_blocks(1) if s.multiplicity == 2]
    block = build_block(spec)
    r_mat = tuple(tuple(as_radical(e) for e in row) for row in block.R)
    m = mat_mul(mat_mul(mat_mul(r_mat, block.U), r_mat), mat_transpose(block.U))
    m2 = mat_mul(m, m)
    one = RadicalScalar.one()
    zero = RadicalScalar.zero()
    for i in range(2):
        for j in range(2):
            ident = one if i == j else zero
            assert m2[i][j] + m[i][j] + ident == zero


def test_character_coefficients_invariant_under_dressing():
    word = Braid3Word.parse("-1,-1|-1,-1")
    base = character_coefficients(word, 1)
    flipped = character_coefficients(word, 1, SignConvention((-1,)))
    assert base.coefficients == flipped.coefficients
