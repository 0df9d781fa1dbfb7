import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobius_bases.core import DomainError, SparsePoly, partitions, strong_compositions, weak_compositions
from mobius_bases.oracle import (
    StallError,
    distinct_leading_terms,
    extract_in_basis,
    reassemble,
    verify_suite,
)
from mobius_bases.polybases import expand_poly, poly_structure
from mobius_bases.symfn import expand_classic


def test_examples():
    assert extract_in_basis(expand_classic("s", (2,), 3), "s") == {(2,): 1}
    assert extract_in_basis(expand_classic("m", (2,), 3), "s") == {(2,): 1, (1, 1): -1}
    p = expand_poly("schubert", (1, 0, 1, 0)) * expand_poly("schubert", (1, 0, 0, 0))
    assert extract_in_basis(p, "schubert") == poly_structure("schubert", (1, 0, 1, 0), (1, 0, 0, 0))


def test_collision_fallback():
    # p_2 and p_1,1 share their leading monomial; the slice is solved exactly
    assert not distinct_leading_terms("p", 2, 3)
    assert distinct_leading_terms("s", 4, 4)
    assert distinct_leading_terms("key", 3, 3)
    p = expand_classic("p", (2,), 3).scale(3) + expand_classic("p", (1, 1), 3)
    assert extract_in_basis(p, "p") == {(2,): 3, (1, 1): 1}


def test_stall_names_residual():
    x1 = SparsePoly.variable(0, 2)
    with pytest.raises(StallError) as info:
        extract_in_basis(x1, "s")
    assert info.value.residual is not None
    with pytest.raises(StallError):
        extract_in_basis(x1 * x1 + x1, "p")


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.sampled_from([la for k in range(1, 6) for la in partitions(k, None, 3)]), coeff, max_size=5),
       st.sampled_from(["s", "m", "e", "h", "p"]))
def test_round_trip_symmetric(cs, basis):
    from mobius_bases.symfn import classic_indices

    cs = {k: v for k, v in cs.items() if v and k in classic_indices(basis, sum(k), 3)}
    assert extract_in_basis(reassemble(cs, basis, 3), basis, 3) == cs


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.sampled_from([a for k in range(1, 5) for a in strong_compositions(k, 3)]), coeff, max_size=5),
       st.sampled_from(["M", "F", "dimm", "qschur", "pcomb", "psi", "phi"]))
def test_round_trip_qsym(cs, basis):
    from mobius_bases.qsym import basis_name

    cs = {k: v for k, v in cs.items() if v}
    assert extract_in_basis(reassemble(cs, basis, 3), basis_name(basis), 3) == cs


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.sampled_from([a for k in range(0, 4) for a in weak_compositions(k, 3)]), coeff, max_size=5),
       st.sampled_from(["mslide", "fslide", "atom", "key", "lascoux", "schubert", "grothendieck"]))
def test_round_trip_polynomial(cs, basis):
    cs = {k: v for k, v in cs.items() if v}
    p = reassemble(cs, basis, 3)
    first = extract_in_basis(p, basis, 3)
    assert first == cs
    assert extract_in_basis(p, basis, 3) == first  # deterministic


def test_hl_needs_t():
    with pytest.raises(DomainError):
        extract_in_basis(expand_classic("s", (1,), 2), "hl")


def test_unknown_or_empty_suite():
    with pytest.raises(DomainError):
        verify_suite("")
    with pytest.raises(DomainError):
        verify_suite("nope")


def test_report_json_shape():
    r = verify_suite("bridge", quick=True)
    data = json.loads(r.to_json())
    assert data["suite"] == "bridge"
    assert {"id", "status", "detail"} <= set(data["cases"][0])
    assert r.passed


def test_quick_mobius_suite():
    assert verify_suite("mobius", quick=True).passed
