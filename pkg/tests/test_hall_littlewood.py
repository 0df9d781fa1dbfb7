from fractions import Fraction

import pytest

from mobius_bases.core import DomainError, partitions
from mobius_bases.hall_littlewood import (
    hl_expand,
    hl_kostka,
    hl_matches_oracle,
    hl_structure,
    hl_symmetrization_oracle,
    schur_p_expand,
    schur_p_structure,
    strip_weight,
)
from mobius_bases.oracle import extract_in_basis
from mobius_bases.symfn import expand_classic, kostka


@pytest.mark.parametrize("t", [0, Fraction(1, 2), Fraction(-1, 2), 2])
def test_tableau_formula_matches_symmetrization(t):
    for k in range(1, 5):
        for la in partitions(k):
            for n in range(len(la), 4):
                assert hl_matches_oracle(la, t, n), (la, t, n)


def test_t_zero_is_schur():
    for m in range(1, 7):
        for la in partitions(m):
            for mu in partitions(m):
                assert hl_kostka(la, mu, Fraction(0)) == kostka(la, mu)
    assert hl_expand((2, 1), 0, 3) == expand_classic("s", (2, 1), 3)


def test_t_one_rejected():
    with pytest.raises(DomainError):
        hl_expand((1,), 1, 2)


def test_vanishing_normalisation_rejected():
    with pytest.raises(DomainError):
        hl_symmetrization_oracle((1, 1), -1, 2)


def test_strip_weight():
    # a box in column 2 with column 1 empty contributes 1 - t^{m_1}; this is the x1 x2 term of P_2
    assert strip_weight((2,), (1,), Fraction(1, 2)) == Fraction(1, 2)
    assert strip_weight((1, 1), (1,), Fraction(1, 2)) == 1
    assert hl_expand((2,), Fraction(1, 2), 2).coeff((1, 1)) == Fraction(1, 2)


def test_product_half():
    assert hl_structure((1,), (1,), Fraction(1, 2)) == {(2,): 1, (1, 1): Fraction(3, 2)}


def test_products_match_oracle():
    t = Fraction(1, 2)
    for la in [(1,), (2,), (1, 1)]:
        for mu in [(1,), (2,), (1, 1)]:
            n = sum(la) + sum(mu)
            p = hl_expand(la, t, n) * hl_expand(mu, t, n)
            assert hl_structure(la, mu, t, n) == extract_in_basis(p, "hl", n, t)


def test_schur_p():
    assert schur_p_structure((2, 1), (1,)) == {(3, 1): 1}
    strict = [la for k in range(1, 5) for la in partitions(k) if len(set(la)) == len(la)]
    for la in strict:
        for mu in strict:
            for v in schur_p_structure(la, mu).values():
                assert Fraction(v).denominator == 1
    with pytest.raises(DomainError):
        schur_p_expand((1, 1), 3)
