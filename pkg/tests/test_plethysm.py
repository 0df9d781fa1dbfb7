import pytest

from mobius_bases.core import DomainError, is_symmetric, partitions
from mobius_bases.oracle import extract_in_basis
from mobius_bases.plethysm import (
    ResourceBoundError,
    degree_check,
    direct_substitution,
    monomial_multiset,
    plethysm_monomial_coeffs,
    plethysm_polynomial,
    plethysm_schur_coeffs,
)
from mobius_bases.symfn import CLASSIC_BASES, expand_classic


def test_forced_identities():
    assert plethysm_monomial_coeffs("p", (2,), "p", (2,), 3) == {(4,): 1}
    assert plethysm_monomial_coeffs("e", (2,), "p", (2,), 4) == {(2, 2): 1}
    assert plethysm_schur_coeffs("s", (1,), "s", (1,), 2) == {(1,): 1}
    assert plethysm_schur_coeffs("p", (2,), "s", (1,), 4) == {(2,): 1, (1, 1): -1}


@pytest.mark.parametrize("f", ["s", "e", "h"])
def test_identity_substitution(f):
    for n in range(1, 5):
        assert plethysm_polynomial(f, (2,), "p", (1,), n) == expand_classic(f, (2,), n)
        assert plethysm_polynomial("p", (1,), f, (2,), n) == expand_classic(f, (2,), n)


def test_h2_h2_against_oracle():
    p = plethysm_polynomial("h", (2,), "h", (2,), 4)
    assert plethysm_schur_coeffs("h", (2,), "h", (2,), 4) == extract_in_basis(p, "s", 4)
    assert plethysm_schur_coeffs("h", (2,), "h", (2,), 4) == {(4,): 1, (2, 2): 1}


@pytest.mark.parametrize("f", CLASSIC_BASES)
@pytest.mark.parametrize("g", CLASSIC_BASES)
def test_direct_substitution(f, g):
    for la in [(1,), (2,), (1, 1)]:
        for mu in [(1,), (2,), (1, 1)]:
            p = plethysm_polynomial(f, la, g, mu, 4)
            assert p == direct_substitution(f, la, g, mu, 4)
            assert is_symmetric(p)
            assert degree_check(plethysm_monomial_coeffs(f, la, g, mu, 4), la, mu)


def test_s_of_s_nonnegative():
    for la in partitions(2):
        for mu in partitions(3):
            assert all(v >= 0 for v in plethysm_schur_coeffs("s", la, "s", mu, 6).values())


def test_bound():
    with pytest.raises(ResourceBoundError):
        plethysm_polynomial("s", (2,), "h", (3,), 6, max_variables=10)


def test_multiset():
    g = expand_classic("h", (1, 1), 2)
    ys = monomial_multiset(g)
    assert sorted(ys) == [(0, 2), (1, 1), (1, 1), (2, 0)]
    with pytest.raises(DomainError):
        monomial_multiset(expand_classic("p", (2,), 2) - expand_classic("e", (2,), 2).scale(3))
