import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobius_bases.bridge import SymmetryError, qsym_expansion, schur_from_qsym
from mobius_bases.core import DomainError, partitions
from mobius_bases.oracle import extract_in_basis
from mobius_bases.symfn import CLASSIC_BASES, expand_classic


def test_examples():
    f_expansion = extract_in_basis(expand_classic("s", (2, 1), 3), "F", 3)
    assert schur_from_qsym(f_expansion, "F", 3) == {(2, 1): 1}
    assert schur_from_qsym({(1, 1): 1}, "M", 3) == {(1, 1): 1}
    assert schur_from_qsym({(2,): 1}, "M", 3) == {(2,): 1, (1, 1): -1}


@pytest.mark.parametrize("basis", CLASSIC_BASES)
def test_round_trip(basis):
    n = 4
    for k in range(1, 5):
        for la in partitions(k):
            p = expand_classic(basis, la, n)
            want = extract_in_basis(p, "s", n)
            for qb in ("F", "M"):
                assert schur_from_qsym(qsym_expansion(p, qb), qb, n) == want


def test_rejects_non_symmetric():
    with pytest.raises(SymmetryError) as info:
        schur_from_qsym({(2, 1): 1}, "M", 3)
    assert info.value.pair == ((2, 1, 0), (1, 2, 0))
    assert "x^(2, 1, 0)" in str(info.value)
    with pytest.raises(SymmetryError):
        schur_from_qsym({(1, 2): 1}, "F", 3)


def test_wrong_basis():
    with pytest.raises(DomainError):
        schur_from_qsym({(1,): 1}, "dimm", 2)


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.sampled_from(partitions(3) + partitions(2)), st.fractions(max_denominator=9), max_size=4),
       st.dictionaries(st.sampled_from(partitions(3)), st.fractions(max_denominator=9), max_size=3))
def test_linearity(c1, c2):
    n = 3

    def to_m(cs):
        poly = None
        for la, c in cs.items():
            term = expand_classic("s", la, n).scale(c)
            poly = term if poly is None else poly + term
        return {} if poly is None else qsym_expansion(poly, "M")

    a, b = to_m(c1), to_m(c2)
    combined = {k: a.get(k, 0) + 2 * b.get(k, 0) for k in set(a) | set(b)}
    left = schur_from_qsym(combined, "M", n)
    ra, rb = schur_from_qsym(a, "M", n), schur_from_qsym(b, "M", n)
    right = {k: ra.get(k, 0) + 2 * rb.get(k, 0) for k in set(ra) | set(rb)}
    assert left == {k: v for k, v in right.items() if v}
