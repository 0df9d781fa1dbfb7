import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobius_bases.core import DomainError, is_symmetric, partitions
from mobius_bases.oracle import extract_in_basis
from mobius_bases.symfn import (
    classic_indices,
    classic_kostka_row,
    coeff_matrix_count,
    expand_classic,
    inverse_kostka,
    kostka,
    littlewood_richardson,
    monomial_product,
    monomial_to_schur,
    schur_product,
    structure_constants_classic,
)


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((1, 1, 1), (3,)) == 0


def test_kostka_unitriangular():
    from mobius_bases.core import dominance_leq

    for m in range(1, 7):
        for la in partitions(m):
            assert kostka(la, la) == 1
            for mu in partitions(m):
                if kostka(la, mu):
                    assert dominance_leq(la, mu)


def test_inverse_kostka_modes_agree():
    for m in range(1, 6):
        for la in partitions(m):
            for mu in partitions(m):
                assert inverse_kostka(la, mu, "chains") == inverse_kostka(la, mu, "backsub")


def test_monomial_to_schur():
    assert monomial_to_schur({(2,): 1}) == {(2,): 1, (1, 1): -1}


def test_lr_coefficients():
    assert littlewood_richardson((2, 1), (1,), (1, 1)) == 1
    assert littlewood_richardson((3, 2, 1), (2, 1), (2, 1)) == 2
    assert schur_product((1,), (1,)) == {(2,): 1, (1, 1): 1}


def test_monomial_product():
    assert monomial_product((1,), (1,)) == {(2,): 1, (1, 1): 2}


@pytest.mark.parametrize("basis", ["m", "p", "e", "h", "s"])
def test_classic_expansions_symmetric(basis):
    for la in partitions(3):
        p = expand_classic(basis, la, 3)
        assert is_symmetric(p)
        mono = {e: c for e, c in p.terms.items() if list(e) == sorted(e, reverse=True)}
        row = classic_kostka_row(basis, la)
        assert {tuple(v for v in e if v): c for e, c in mono.items()} == row


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([la for k in range(1, 4) for la in partitions(k)]),
       st.sampled_from([la for k in range(1, 4) for la in partitions(k)]),
       st.sampled_from(["m", "s", "e", "h", "p"]))
def test_structure_constants_against_oracle(a, b, basis):
    n = sum(a) + sum(b)
    got = structure_constants_classic(basis, a, b, n)
    p = expand_classic(basis, a, n) * expand_classic(basis, b, n)
    assert got == extract_in_basis(p, basis, n)


def test_truncation_to_n_variables():
    out = structure_constants_classic("s", (1,), (1, 1), 2)
    assert out == {(2, 1): 1}
    with pytest.raises(DomainError):
        structure_constants_classic("e", (3,), (1,), 2)


def test_classic_indices():
    assert classic_indices("e", 3, 2) == tuple(la for la in partitions(3) if la[0] <= 2)
    assert classic_indices("s", 3, 2) == tuple(la for la in partitions(3) if len(la) <= 2)


def test_matrix_counts_are_monomial_coefficients():
    # E((1,1),(2)) = 1: the single 0/1 row [1 1]
    assert coeff_matrix_count("E", (1, 1), (2,)) == 1
    kinds = {"P": "p", "E": "e", "H": "h", "K": "s"}
    for k in range(1, 5):
        for la in partitions(k):
            for kind, basis in kinds.items():
                poly = expand_classic(basis, la, k)
                for mu in partitions(k):
                    assert coeff_matrix_count(kind, la, mu) == poly.coeff(mu + (0,) * (k - len(mu))), (kind, la, mu)
