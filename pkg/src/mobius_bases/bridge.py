"""Schur expansion of a symmetric polynomial given in the ``F`` or ``M`` basis.

The route is: ``F`` to ``M`` through the refinement transition, read off the
monomial symmetric coefficients (``c_la`` of ``M_la`` for partitions ``la``),
then inverse Kostka numbers take ``m`` to ``s``.  Symmetry is checked, not
assumed: every rearrangement of a composition must carry the same coefficient.
"""

from __future__ import annotations

from typing import Mapping

from .core import (
    DomainError,
    Index,
    Rational,
    SparsePoly,
    as_rational,
    check_strong,
    distinct_rearrangements,
    is_quasisymmetric,
    pad,
)
from .qsym import basis_name, from_monomial, to_monomial
from .symfn import monomial_to_schur


class SymmetryError(DomainError):
    """Input expansion is not symmetric; carries one violating exponent pair."""

    def __init__(self, first: Index, second: Index, a: Rational, b: Rational):
        self.pair = (first, second)
        super().__init__(
            f"not symmetric: coefficient of x^{first} is {a} but coefficient of x^{second} is {b}"
        )


def _monomial_coeffs(expansion: Mapping, basis: str, n: int) -> dict[Index, Rational]:
    basis = basis_name(basis)
    if basis not in ("M", "F"):
        raise DomainError(f"bridge input basis must be F or M, got {basis!r}")
    clean = {check_strong(a): as_rational(c) for a, c in expansion.items() if c}
    mono = clean if basis == "M" else to_monomial("F", clean)
    # compositions with more than n parts vanish in n variables
    return {a: c for a, c in mono.items() if c and len(a) <= n}


def check_symmetric(mono: Mapping[Index, Rational], n: int) -> None:
    """Raise ``SymmetryError`` unless every rearrangement of each support element has the same coefficient."""
    seen: set = set()
    for alpha in sorted(mono):
        if alpha in seen:
            continue
        c = mono[alpha]
        for beta in distinct_rearrangements(alpha):
            seen.add(beta)
            d = mono.get(beta, 0)
            if d != c:
                raise SymmetryError(pad(alpha, n), pad(beta, n), c, d)


def schur_from_qsym(expansion: Mapping, basis: str, n: int, mode: str = "backsub") -> dict[Index, Rational]:
    """``d_la`` with ``sum_la d_la s_la(x_1..x_n)`` equal to ``sum_a c_a basis_a(x_1..x_n)``."""
    if n < 0:
        raise DomainError("number of variables must be nonnegative")
    mono = _monomial_coeffs(expansion, basis, n)
    check_symmetric(mono, n)
    partition_coeffs = {a: c for a, c in mono.items() if list(a) == sorted(a, reverse=True)}
    return {k: as_rational(v) for k, v in monomial_to_schur(partition_coeffs, mode, n).items()}


def qsym_expansion(p: SparsePoly, basis: str = "F", mode: str = "backsub") -> dict[Index, Rational]:
    """Coefficients of a quasisymmetric polynomial in ``M`` or ``F`` (lengths up to ``p.nvars``)."""
    if not is_quasisymmetric(p):
        raise DomainError("polynomial is not quasisymmetric")
    mono = {}
    for exp, c in p.items():
        # the coefficient of M_a is that of x^a padded with zeros on the right
        a = tuple(v for v in exp if v)
        if exp == pad(a, p.nvars):
            mono[a] = c
    basis = basis_name(basis)
    if basis == "M":
        return {a: as_rational(c) for a, c in mono.items()}
    out = from_monomial(basis, mono, mode)
    return {a: c for a, c in out.items() if len(a) <= p.nvars}


__all__ = ["SymmetryError", "check_symmetric", "schur_from_qsym", "qsym_expansion"]
