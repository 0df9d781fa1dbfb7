"""Plethysm ``f_la[g_mu]`` of classic symmetric functions, truncated to ``n`` variables.

The inner function ``g_mu(x_1..x_n)`` has nonnegative integer coefficients, so
it is a sum of monomials ``y_1 + y_2 + ... + y_N`` listed with multiplicity.
The plethysm is ``f_la(y_1, ..., y_N)``: expand ``f_la`` into monomial
symmetric functions and evaluate each ``m_rho`` at the ``y``'s.  Specialising
``x_{n+1} = x_{n+2} = ... = 0`` commutes with this, so the coefficients of
``m_nu`` with ``len(nu) <= n`` are exact.
"""

from __future__ import annotations

from typing import Sequence

from .core import (
    DomainError,
    Index,
    Rational,
    SparsePoly,
    check_partition,
)
from .symfn import CLASSIC_BASES, classic_kostka_row, expand_classic, monomial_to_schur

# largest number of substituted monomials (counted with multiplicity)
DEFAULT_MAX_VARIABLES = 400


class ResourceBoundError(DomainError):
    """Raised when a computation would exceed a configured size bound."""


def monomial_multiset(g: SparsePoly) -> list[Index]:
    """Exponent vectors of ``g`` repeated by coefficient; coefficients must be positive integers."""
    out = []
    for exp, c in g.items():
        if c != int(c) or c < 0:
            raise DomainError(f"coefficient {c} of x^{exp} is not a nonnegative integer")
        out.extend([exp] * int(c))
    return out


def evaluate_monomial_symmetric(rho: Index, ys: Sequence[Index], nvars: int) -> SparsePoly:
    """``m_rho(y_1, ..., y_N)`` where each ``y_i`` is the monomial ``x^{ys[i]}``.

    Walks the ``y``'s once, keeping for each multiset of still-unused parts of
    ``rho`` the partial sum; a position takes either nothing or one part value.
    """
    states: dict[Index, dict[Index, int]] = {tuple(rho): {(0,) * nvars: 1}}
    for y in ys:
        nxt: dict[Index, dict[Index, int]] = {}

        def add(key, exp, c):
            bucket = nxt.setdefault(key, {})
            bucket[exp] = bucket.get(exp, 0) + c

        for left, poly in states.items():
            for exp, c in poly.items():
                add(left, exp, c)
            for v in set(left):
                i = left.index(v)
                rest = left[:i] + left[i + 1:]
                for exp, c in poly.items():
                    add(rest, tuple(e + v * d for e, d in zip(exp, y)), c)
        states = nxt
    return SparsePoly(nvars, states.get((), {}))


def _check_basis(name: str) -> str:
    if name not in CLASSIC_BASES:
        raise DomainError(f"unknown classic basis {name!r}")
    return name


def plethysm_polynomial(fbasis: str, la: Sequence[int], gbasis: str, mu: Sequence[int], n: int, max_variables: int = DEFAULT_MAX_VARIABLES) -> SparsePoly:
    """``f_la[g_mu]`` as a polynomial in ``x_1..x_n``."""
    _check_basis(fbasis)
    _check_basis(gbasis)
    la, mu = check_partition(la), check_partition(mu)
    g = expand_classic(gbasis, mu, n) if (gbasis not in ("m", "s") or len(mu) <= n) else SparsePoly(n, {})
    ys = monomial_multiset(g)
    if len(ys) > max_variables:
        raise ResourceBoundError(f"{gbasis}_{mu} has {len(ys)} monomials in {n} variables, above the bound {max_variables}")
    out = SparsePoly(n, {})
    for rho, c in classic_kostka_row(fbasis, la).items():
        if len(rho) > len(ys):
            continue
        out = out + evaluate_monomial_symmetric(rho, ys, n).scale(c)
    return out


def plethysm_monomial_coeffs(fbasis: str, la: Sequence[int], gbasis: str, mu: Sequence[int], n: int, max_variables: int = DEFAULT_MAX_VARIABLES) -> dict[Index, int]:
    """``d^nu`` with ``f_la[g_mu] = sum_nu d^nu m_nu`` for ``len(nu) <= n``."""
    p = plethysm_polynomial(fbasis, la, gbasis, mu, n, max_variables)
    out = {}
    for e, c in p.terms.items():
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            out[tuple(v for v in e if v)] = c
    return out


def plethysm_schur_coeffs(fbasis: str, la: Sequence[int], gbasis: str, mu: Sequence[int], n: int, mode: str = "backsub", max_variables: int = DEFAULT_MAX_VARIABLES) -> dict[Index, Rational]:
    """Schur coefficients ``a^nu`` of ``f_la[g_mu]`` for ``len(nu) <= n``, via inverse Kostka numbers."""
    d = plethysm_monomial_coeffs(fbasis, la, gbasis, mu, n, max_variables)
    return monomial_to_schur(d, mode, n)


def direct_substitution(fbasis: str, la: Sequence[int], gbasis: str, mu: Sequence[int], n: int, max_variables: int = DEFAULT_MAX_VARIABLES) -> SparsePoly:
    """Independent route: expand ``f_la`` in ``N`` variables and substitute ``y_i = x^{ys[i]}`` termwise."""
    la, mu = check_partition(la), check_partition(mu)
    g = expand_classic(gbasis, mu, n) if (gbasis not in ("m", "s") or len(mu) <= n) else SparsePoly(n, {})
    ys = monomial_multiset(g)
    if len(ys) > max_variables:
        raise ResourceBoundError(f"{len(ys)} substituted variables exceed the bound {max_variables}")
    N = len(ys)
    if fbasis in ("m", "s") and len(la) > N:
        return SparsePoly(n, {})
    f = expand_classic(fbasis, la, N)
    out: dict = {}
    for exp, c in f.terms.items():
        x = [0] * n
        for k, y in zip(exp, ys):
            if k:
                for i in range(n):
                    x[i] += k * y[i]
        key = tuple(x)
        out[key] = out.get(key, 0) + c
    return SparsePoly(n, out)


def degree_check(coeffs: dict, la: Sequence[int], mu: Sequence[int]) -> bool:
    return all(sum(nu) == sum(la) * sum(mu) for nu in coeffs)


__all__ = [
    "DEFAULT_MAX_VARIABLES",
    "ResourceBoundError",
    "monomial_multiset",
    "evaluate_monomial_symmetric",
    "plethysm_polynomial",
    "plethysm_monomial_coeffs",
    "plethysm_schur_coeffs",
    "direct_substitution",
    "degree_check",
]
