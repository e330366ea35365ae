"""Square-root extension scalars: canonicalization, ring laws, certificates."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homfly3.qpoly import LaurentQ, RationalQ, quantum_int
from homfly3.radext import (
    NonVanishingRadical,
    RadicalScalar,
    laurent_divexact,
    laurent_gcd,
    sqrt_of,
    squarefree_decompose,
)

# ---------------------------------------------------------------------------
# strategies: small radical scalars c0 + c1*sqrt(P1) + c2*sqrt(P2)

_RADICANDS = [
    RationalQ.of(quantum_int(3)),
    RationalQ.of(quantum_int(5)),
    RationalQ.of(quantum_int(2) * quantum_int(7)),
]


@st.composite
def radical_scalars(draw):
    c = draw(st.integers(-4, 4))
    e = draw(st.integers(-3, 3))
    acc = RadicalScalar.rational(RationalQ.of(LaurentQ.monomial(c, e)))
    for rad in _RADICANDS:
        k = draw(st.integers(-2, 2))
        if k:
            acc = acc + RadicalScalar.rational(
                RationalQ.of(LaurentQ.monomial(k, 0))
            ) * sqrt_of(rad)
    return acc


# ---------------------------------------------------------------------------
# canonicalization

def test_sqrt_of_perfect_square_is_rational():
    s = sqrt_of(RationalQ.of(quantum_int(3) * quantum_int(3)))
    assert s.is_rational()
    assert s.assert_rational() == RationalQ.of(quantum_int(3))


def test_sqrt_square_collapses():
    for rad in _RADICANDS:
        s = sqrt_of(rad)
        sq = s * s
        assert sq.is_rational()
        assert sq.assert_rational() == rad


def test_sqrt_extracts_square_factors():
    # sqrt([3]^2 * [5]) = [3] * sqrt([5])
    s = sqrt_of(RationalQ.of(quantum_int(3) * quantum_int(3) * quantum_int(5)))
    t = RadicalScalar.rational(RationalQ.of(quantum_int(3))) * sqrt_of(
        RationalQ.of(quantum_int(5))
    )
    assert s == t


def test_distinct_radicands_do_not_alias():
    s3 = sqrt_of(RationalQ.of(quantum_int(3)))
    s5 = sqrt_of(RationalQ.of(quantum_int(5)))
    assert s3 != s5
    prod = s3 * s5
    assert not prod.is_rational()
    # sqrt([3])*sqrt([5]) squared = [3][5]
    assert (prod * prod).assert_rational() == RationalQ.of(
        quantum_int(3) * quantum_int(5)
    )


def test_negative_radicand_kept_formal():
    neg = sqrt_of(RationalQ.of(-quantum_int(3)))
    assert not neg.is_rational()
    assert (neg * neg).assert_rational() == RationalQ.of(-quantum_int(3))


def test_canonicalization_idempotent():
    # equal values from different construction routes compare equal
    a = sqrt_of(RationalQ.of(quantum_int(2) * quantum_int(8)))
    b = sqrt_of(RationalQ.of(quantum_int(2))) * sqrt_of(
        RationalQ.of(quantum_int(8))
    )
    assert a == b
    assert hash(a) == hash(b)


# ---------------------------------------------------------------------------
# ring laws

@given(radical_scalars(), radical_scalars(), radical_scalars())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RadicalScalar.zero()
    assert a * RadicalScalar.one() == a


@given(radical_scalars())
def test_square_is_rational_for_pure_radical_parts(a):
    # (c*sqrt(P))^2 is always rational
    for radicand, coeff in [
        (rad, RadicalScalar.rational(RationalQ.of(quantum_int(2))))
        for rad in _RADICANDS
    ]:
        s = coeff * sqrt_of(radicand)
        assert (s * s).is_rational()


# ---------------------------------------------------------------------------
# certificates

def test_assert_rational_raises_on_radical():
    s = sqrt_of(RationalQ.of(quantum_int(3)))
    with pytest.raises(NonVanishingRadical):
        s.assert_rational()


def test_assert_rational_passes_on_rational():
    v = RadicalScalar.rational(RationalQ.of(quantum_int(4)))
    assert v.assert_rational() == RationalQ.of(quantum_int(4))


# ---------------------------------------------------------------------------
# polynomial helpers

def test_laurent_gcd_basic():
    a = quantum_int(2) * quantum_int(6)
    b = quantum_int(2) * quantum_int(4)
    g = laurent_gcd(a, b)
    # [2] divides both; the gcd must make both quotients exact
    laurent_divexact(a, g)
    laurent_divexact(b, g)
    # and [2] must divide the gcd
    laurent_divexact(g, quantum_int(2))


def test_squarefree_decompose_roundtrip():
    p = quantum_int(3) * quantum_int(3) * quantum_int(5)
    unit, square_part, body = squarefree_decompose(p)
    assert unit * square_part * square_part * body == p
