"""Classic symmetric polynomials: m, p, e, h, s.

Kostka numbers, inverse Kostka numbers (through :mod:`.posets`), the monomial
structure constants ``T``, and Littlewood-Richardson coefficients assembled as

    c^la_{mu,nu} = sum K[mu,tau] K[nu,kappa] T(tau, kappa, sigma) Kinv[sigma, la].
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .core import (
    DomainError,
    distinct_rearrangements,
    Index,
    Rational,
    SparsePoly,
    check_partition,
    dominance_leq,
    monomial_symmetric,
    pad,
    partitions,
    sort_partition,
    weak_compositions,
)
from .posets import (
    TransitionMatrix,
    dominance_partitions,
    invert,
)

CLASSIC_BASES = ("m", "p", "e", "h", "s")


# ---------------------------------------------------------------------------
# tableaux


def horizontal_strips_below(la: Index, size: int) -> Iterator[Index]:
    """Partitions ``mu`` inside ``la`` with ``la/mu`` a horizontal strip of ``size`` cells."""
    la = tuple(la)
    bounds = []
    for i, part in enumerate(la):
        nxt = la[i + 1] if i + 1 < len(la) else 0
        bounds.append(range(nxt, part + 1))
    for mu in itertools.product(*bounds):
        if sum(la) - sum(mu) == size:
            yield tuple(p for p in mu if p)


def semistandard_tableaux(shape: Sequence[int], max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Rows weakly increase, columns strictly increase, entries in ``1..max_entry``."""
    shape = check_partition(shape)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    filling: dict = {}

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(filling[i, j] for j in range(r)) for i, r in enumerate(shape))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i, j - 1])
        if i > 0:
            lo = max(lo, filling[i - 1, j] + 1)
        for v in range(lo, max_entry + 1):
            filling[i, j] = v
            yield from fill(k + 1)
        filling.pop((i, j), None)

    yield from fill(0)


def content(tableau) -> Index:
    values = [v for row in tableau for v in row]
    top = max(values, default=0)
    return tuple(values.count(k) for k in range(1, top + 1))


@lru_cache(maxsize=None)
def kostka(la: Index, mu: Index) -> int:
    """Number of SSYT of shape ``la`` and content ``mu`` (``mu`` any weak composition)."""
    la = check_partition(la)
    mu = tuple(mu)
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1 if not la else 0
    last = mu[-1]
    return sum(kostka(nu, mu[:-1]) for nu in horizontal_strips_below(la, last))


# ---------------------------------------------------------------------------
# coefficient matrices


def _count_matrices(col_sums: Sequence[int], row_sums: Sequence[int], cap: int | None, one_per_column: bool) -> int:
    col_sums = tuple(col_sums)
    row_sums = tuple(row_sums)

    @lru_cache(maxsize=None)
    def go(j: int, remaining: tuple) -> int:
        if j == len(col_sums):
            return 1 if not any(remaining) else 0
        total = 0
        for column in _columns(col_sums[j], remaining, cap, one_per_column):
            total += go(j + 1, tuple(r - c for r, c in zip(remaining, column)))
        return total

    return go(0, row_sums)


def _columns(s: int, limits: tuple, cap: int | None, one_per_column: bool) -> Iterator[tuple]:
    if one_per_column:
        for i, lim in enumerate(limits):
            if s <= lim:
                yield tuple(s if k == i else 0 for k in range(len(limits)))
        return

    def rec(i: int, left: int):
        if i == len(limits):
            if left == 0:
                yield ()
            return
        top = min(left, limits[i], cap if cap is not None else left)
        for v in range(top, -1, -1):
            for rest in rec(i + 1, left - v):
                yield (v,) + rest

    yield from rec(0, s)


def coeff_matrix_count(kind: str, la: Sequence[int], mu: Sequence[int]) -> int:
    """Matrices with column sums ``la`` and row sums ``mu``.

    ``"P"``: nonnegative entries, at most one nonzero per column;
    ``"E"``: 0/1 entries; ``"H"``: nonnegative entries; ``"K"``: Kostka number.
    """
    la, mu = check_partition(la), check_partition(mu)
    if sum(la) != sum(mu):
        return 0
    if kind == "K":
        return kostka(la, mu)
    if kind == "P":
        return _count_matrices(la, mu, None, True)
    if kind == "E":
        return _count_matrices(la, mu, 1, False)
    if kind == "H":
        return _count_matrices(la, mu, None, False)
    raise DomainError(f"unknown coefficient matrix kind {kind!r}")


# ---------------------------------------------------------------------------
# expansions


@lru_cache(maxsize=None)
def _power_sum(k: int, n: int) -> SparsePoly:
    return SparsePoly(n, {tuple(k if j == i else 0 for j in range(n)): 1 for i in range(n)})


@lru_cache(maxsize=None)
def _elementary(k: int, n: int) -> SparsePoly:
    if k > n:
        return SparsePoly(n)
    return SparsePoly(
        n,
        {tuple(1 if j in chosen else 0 for j in range(n)): 1 for chosen in itertools.combinations(range(n), k)},
    )


@lru_cache(maxsize=None)
def _complete(k: int, n: int) -> SparsePoly:
    return SparsePoly(n, {e: 1 for e in weak_compositions(k, n)})


@lru_cache(maxsize=None)
def schur_polynomial(la: Index, n: int) -> SparsePoly:
    terms: dict = {}
    for t in semistandard_tableaux(la, n):
        e = pad(content(t), n)
        terms[e] = terms.get(e, 0) + 1
    return SparsePoly(n, terms)


def expand_classic(basis: str, la: Sequence[int], n: int) -> SparsePoly:
    """``basis_la(x_1..x_n)`` for ``basis`` in ``m p e h s``."""
    return _expand_classic(basis, check_partition(la), n)


@lru_cache(maxsize=None)
def _expand_classic(basis: str, la: Index, n: int) -> SparsePoly:
    if basis in ("m", "s") and len(la) > n:
        raise DomainError(f"{basis}_{la} needs at least {len(la)} variables, got {n}")
    if basis == "m":
        return monomial_symmetric(la, n)
    if basis == "s":
        return schur_polynomial(la, n)
    factor = {"p": _power_sum, "e": _elementary, "h": _complete}.get(basis)
    if factor is None:
        raise DomainError(f"unknown classic basis {basis!r}")
    out = SparsePoly.constant(n)
    for part in la:
        out = out * factor(part, n)
    return out


def classic_kostka_row(basis: str, la: Index) -> dict[Index, int]:
    """Monomial-basis coefficients of ``basis_la`` in infinitely many variables."""
    la = check_partition(la)
    k = sum(la)
    kind = {"p": "P", "e": "E", "h": "H", "s": "K"}.get(basis)
    if basis == "m":
        return {la: 1}
    if kind is None:
        raise DomainError(f"unknown classic basis {basis!r}")
    out = {}
    for mu in partitions(k):
        c = coeff_matrix_count(kind, la, mu)
        if c:
            out[mu] = c
    return out


def classic_indices(basis: str, k: int, n: int) -> tuple[Index, ...]:
    """Indices of a basis of the degree-``k`` part of symmetric polynomials in ``n`` variables."""
    if basis in ("m", "s"):
        return partitions(k, None, n)
    if basis in ("p", "e", "h"):
        return partitions(k, n)
    raise DomainError(f"unknown classic basis {basis!r}")


# ---------------------------------------------------------------------------
# structure constants


@lru_cache(maxsize=None)
def monomial_structure(la: Index, mu: Index, nu: Index) -> int:
    """Pairs of rearrangements ``u`` of ``la`` and ``w`` of ``mu`` with ``u + w = nu``."""
    la, mu, nu = check_partition(la), check_partition(mu), check_partition(nu)
    if sum(la) + sum(mu) != sum(nu) or len(la) > len(nu) or len(mu) > len(nu):
        return 0
    L = len(nu)
    us = set(distinct_rearrangements(pad(la, L)))
    ws = set(distinct_rearrangements(pad(mu, L)))
    return sum(1 for u in us if tuple(a - b for a, b in zip(nu, u)) in ws)


def monomial_product(la: Index, mu: Index, n: int | None = None) -> dict[Index, int]:
    """``m_la * m_mu`` in the monomial basis, truncated to length ``<= n`` if given."""
    out = {}
    top = len(la) + len(mu) if n is None else min(n, len(la) + len(mu))
    for nu in partitions(sum(la) + sum(mu), None, top):
        c = monomial_structure(tuple(la), tuple(mu), nu)
        if c:
            out[nu] = c
    return out


@lru_cache(maxsize=None)
def kostka_matrix(m: int) -> TransitionMatrix:
    """``K[la, mu]`` on partitions of ``m``; nonzero only when ``la`` is below ``mu``."""
    Q = dominance_partitions(m)
    entries = {(la, mu): kostka(la, mu) for la in Q.elements for mu in Q.elements}
    return TransitionMatrix(Q, entries, "up")


@lru_cache(maxsize=None)
def inverse_kostka_matrix(m: int, mode: str = "backsub") -> TransitionMatrix:
    return invert(kostka_matrix(m), mode)


def inverse_kostka(la: Sequence[int], mu: Sequence[int], mode: str = "backsub") -> int:
    la, mu = check_partition(la), check_partition(mu)
    if sum(la) != sum(mu):
        return 0
    return inverse_kostka_matrix(sum(la), mode)[la, mu]


def monomial_to_schur(coeffs: dict[Index, Rational], mode: str = "backsub", n: int | None = None) -> dict[Index, Rational]:
    """Convert monomial-basis coefficients to Schur-basis coefficients."""
    out: dict = {}
    for sigma, c in coeffs.items():
        if not c:
            continue
        inv = inverse_kostka_matrix(sum(sigma), mode)
        for (row, la), v in inv.entries.items():
            if row == sigma and (n is None or len(la) <= n):
                out[la] = out.get(la, 0) + c * v
    return {k: v for k, v in out.items() if v}


def littlewood_richardson(la: Sequence[int], mu: Sequence[int], nu: Sequence[int], mode: str = "backsub") -> int:
    """``c^la_{mu,nu}``: coefficient of ``s_la`` in ``s_mu * s_nu``."""
    la, mu, nu = check_partition(la), check_partition(mu), check_partition(nu)
    if sum(mu) + sum(nu) != sum(la):
        return 0
    return schur_product(mu, nu, mode).get(la, 0)


@lru_cache(maxsize=None)
def schur_product(mu: Index, nu: Index, mode: str = "backsub") -> dict[Index, int]:
    """``s_mu * s_nu`` in the Schur basis (no truncation)."""
    mono: dict = {}
    for tau, a in classic_kostka_row("s", mu).items():
        for kappa, b in classic_kostka_row("s", nu).items():
            for sigma, t in monomial_product(tau, kappa).items():
                mono[sigma] = mono.get(sigma, 0) + a * b * t
    return monomial_to_schur(mono, mode)


def structure_constants_classic(basis: str, a: Sequence[int], b: Sequence[int], n: int | None = None, mode: str = "backsub") -> dict[Index, Rational]:
    """``basis_a * basis_b`` expanded in the same basis.

    With ``n`` given, the product is taken in ``n`` variables: indices outside
    the basis of symmetric polynomials in ``n`` variables are dropped (they
    vanish there) and inputs must be valid indices at ``n``.
    """
    a, b = check_partition(a), check_partition(b)
    if basis not in CLASSIC_BASES:
        raise DomainError(f"unknown classic basis {basis!r}")
    if n is not None:
        for idx in (a, b):
            if idx not in classic_indices(basis, sum(idx), n):
                raise DomainError(f"{basis}_{idx} is not a basis element in {n} variables")
    if basis in ("p", "e", "h"):
        return {sort_partition(a + b): 1}
    if basis == "m":
        return monomial_product(a, b, n)
    out = schur_product(a, b, mode)
    if n is not None:
        out = {k: v for k, v in out.items() if len(k) <= n}
    return out


def is_unitriangular_kostka(m: int) -> bool:
    for la in partitions(m):
        for mu in partitions(m):
            k = kostka(la, mu)
            if la == mu and k != 1:
                return False
            if k and not dominance_leq(la, mu):
                return False
    return True

