"""Schur polynomials in power sums, Adams maps, cut-and-join, locus values."""

from fractions import Fraction

import pytest

from homfly3.qpoly import LaurentQA
from homfly3.symfun import (
    PowerSumPoly,
    adams,
    cut_and_join,
    expand_in_schur,
    murnaghan_nakayama,
    partitions_of,
    schur_in_powersums,
    topological_locus,
    z_of,
)
from homfly3.young import YoungDiagram, cube_blocks, hook_content_dimension, kappa


def diagrams_up_to(max_size):
    for n in range(1, max_size + 1):
        for rows in partitions_of(n):
            yield YoungDiagram(rows)


# ---------------------------------------------------------------------------
# basics

def test_z_of():
    assert z_of((1, 1, 1)) == 6
    assert z_of((2, 1)) == 2
    assert z_of((3,)) == 3
    assert z_of((2, 2)) == 8


def test_murnaghan_nakayama_anchors():
    # characters of S_3: chi^[3] = (1,1,1), chi^[21] = (2,0,-1),
    # chi^[111] = (1,-1,1) on classes (1^3), (2,1), (3)
    for Q, vals in [
        ([3], (1, 1, 1)),
        ([2, 1], (2, 0, -1)),
        ([1, 1, 1], (1, -1, 1)),
    ]:
        got = tuple(
            murnaghan_nakayama(YoungDiagram(Q), mu)
            for mu in ((1, 1, 1), (2, 1), (3,))
        )
        assert got == vals


def test_schur_small():
    s1 = schur_in_powersums(YoungDiagram([1]))
    s2 = schur_in_powersums(YoungDiagram([2]))
    s11 = schur_in_powersums(YoungDiagram([1, 1]))
    # S2 + S11 = p1^2, S2 - S11 = p2
    assert s2 + s11 == s1 * s1
    two = LaurentQA.monomial(2)
    assert (s2 - s11) * two == adams(s1, 2) * two  # p2 = psi_2(p1)


def test_expand_in_schur_inverts_schur():
    for d in diagrams_up_to(6):
        exp = expand_in_schur(schur_in_powersums(d), d.size)
        assert exp == {d: Fraction(1)}


# ---------------------------------------------------------------------------
# Adams (plethysm by power sums)

def test_adams_degree1_anchor():
    # S_[1]{p_3k} = p3 = S_[3] - S_[21] + S_[111]
    got = expand_in_schur(adams(schur_in_powersums(YoungDiagram([1])), 3), 3)
    assert got == {
        YoungDiagram([3]): Fraction(1),
        YoungDiagram([2, 1]): Fraction(-1),
        YoungDiagram([1, 1, 1]): Fraction(1),
    }


def test_cube_of_s1_anchor():
    # S_[1]^3 = S_[3] + 2 S_[21] + S_[111]
    s1 = schur_in_powersums(YoungDiagram([1]))
    got = expand_in_schur(s1 * s1 * s1, 3)
    assert got == {
        YoungDiagram([3]): Fraction(1),
        YoungDiagram([2, 1]): Fraction(2),
        YoungDiagram([1, 1, 1]): Fraction(1),
    }


@pytest.mark.parametrize("R", [[1], [2], [1, 1]])
def test_adams3_coefficients_small(R):
    d = YoungDiagram(R)
    got = expand_in_schur(adams(schur_in_powersums(d), 3), 3 * d.size)
    assert got  # nonempty
    for Q, c in got.items():
        assert c in (Fraction(-1), Fraction(1), Fraction(2)) or c == 0


def test_adams_multiplicativity():
    # psi_m is a ring homomorphism: psi_3(S2 * S1) = psi_3(S2) * psi_3(S1)
    s1 = schur_in_powersums(YoungDiagram([1]))
    s2 = schur_in_powersums(YoungDiagram([2]))
    assert adams(s2 * s1, 3) == adams(s2, 3) * adams(s1, 3)


def test_adams_composition():
    # psi_2(psi_3(f)) = psi_6(f)
    s2 = schur_in_powersums(YoungDiagram([2]))
    assert adams(adams(s2, 3), 2) == adams(s2, 6)


# ---------------------------------------------------------------------------
# cut-and-join eigenvalue property

def test_cut_and_join_eigenvalue_up_to_8():
    for d in diagrams_up_to(8):
        s = schur_in_powersums(d)
        k = kappa(d)
        lhs = cut_and_join(s)
        if k == 0:
            assert lhs.is_zero(), d
        else:
            assert lhs == s * k, d


# ---------------------------------------------------------------------------
# topological locus vs hook/content product

def test_locus_matches_hook_content_small():
    # the acceptance suite runs the full |Q| <= 12 sweep; spot up to 7 here
    for d in diagrams_up_to(7):
        assert topological_locus(schur_in_powersums(d)).same_value(
            hook_content_dimension(d)
        ), d


# ---------------------------------------------------------------------------
# cube identity

@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_cube_identity(r):
    sr = schur_in_powersums(YoungDiagram([r]))
    cube = expand_in_schur(sr * sr * sr, 3 * r)
    blocks = {spec.Q: spec.multiplicity for spec in cube_blocks(r)}
    assert {Q: int(c) for Q, c in cube.items() if c} == blocks
