"""Quasisymmetric polynomials and their triangular bases.

Every basis here is stored as its expansion into monomial quasisymmetric
polynomials ``M_beta``.  Products are computed in the ``M`` basis by the
overlay (quasi-shuffle) count and pulled back through the inverted transition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from .core import (
    DomainError,
    distinct_rearrangements,
    Index,
    Rational,
    SparsePoly,
    as_rational,
    check_strong,
    monomial_quasisymmetric,
    refinement_blocks,
    refinements,
    coarsenings,
    sort_partition,
    strong_compositions,
    z_factor,
)
from .posets import Poset, TransitionMatrix, dominance_strong, invert, invert_triangular, sorted_dominance

QSYM_BASES = ("M", "F", "dual_immaculate", "qschur", "p_comb", "psi", "phi")

# names accepted on the command line
QSYM_ALIASES = {
    "M": "M",
    "F": "F",
    "dimm": "dual_immaculate",
    "dual_immaculate": "dual_immaculate",
    "qschur": "qschur",
    "pcomb": "p_comb",
    "p_comb": "p_comb",
    "psi": "psi",
    "phi": "phi",
}


def basis_name(name: str) -> str:
    try:
        return QSYM_ALIASES[name]
    except KeyError:
        raise DomainError(f"unknown quasisymmetric basis {name!r}") from None


# ---------------------------------------------------------------------------
# fillings of composition diagrams


def _count_fillings(alpha: Index, beta: Index, flavor: str) -> int:
    """Fillings of the composition diagram of ``alpha`` (row i has alpha_i cells) with content ``beta``."""
    cells = [(i, j) for i, a in enumerate(alpha) for j in range(a)]
    left = list(beta)
    rows = [[0] * a for a in alpha]
    count = 0

    def val(i, j):
        # zero-padded rectangle
        return rows[i][j] if j < alpha[i] else 0

    def ok(i, j, v) -> bool:
        if j > 0:
            w = rows[i][j - 1]
            if flavor == "I" and v < w:
                return False
            if flavor == "S" and v > w:
                return False
        if j == 0 and i > 0 and v <= rows[i - 1][0]:
            return False
        if flavor == "S" and j > 0:
            # triple rule against every earlier (complete) row
            for r in range(i):
                if val(r, j) <= v and not val(r, j - 1) < v:
                    return False
        return True

    def go(pos: int):
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        i, j = cells[pos]
        for v in range(1, len(beta) + 1):
            if left[v - 1] and ok(i, j, v):
                left[v - 1] -= 1
                rows[i][j] = v
                go(pos + 1)
                rows[i][j] = 0
                left[v - 1] += 1

    go(0)
    return count


def _count_p_matrices(alpha: Index, beta: Index) -> int:
    """Matrices counted by the combinatorial power-sum Kostka number.

    Row ``i`` carries the block of ``alpha`` summing to ``beta_i``, placed in
    increasing columns ``c`` whose single allowed value is ``sort(alpha)_c``.
    """
    blocks = refinement_blocks(alpha, beta)
    if blocks is None:
        return 0
    col_values = sort_partition(alpha)
    used = [False] * len(col_values)
    count = 0

    def place(b: int, t: int, last: int):
        nonlocal count
        if b == len(blocks):
            count += 1
            return
        block = blocks[b]
        if t == len(block):
            place(b + 1, 0, -1)
            return
        for c in range(last + 1, len(col_values)):
            if not used[c] and col_values[c] == block[t]:
                used[c] = True
                place(b, t + 1, c)
                used[c] = False

    place(0, 0, -1)
    return count


def p_weight(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """``prod_i prod_j (alpha^(i)_1 + ... + alpha^(i)_j)`` over the blocks of ``alpha`` inside ``beta``."""
    blocks = refinement_blocks(alpha, beta)
    if blocks is None:
        raise DomainError(f"{tuple(alpha)} does not refine {tuple(beta)}")
    out = 1
    for block in blocks:
        s = 0
        for part in block:
            s += part
            out *= s
    return out


def s_weight(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """``prod_i len(alpha^(i))! * prod_j alpha^(i)_j``."""
    blocks = refinement_blocks(alpha, beta)
    if blocks is None:
        raise DomainError(f"{tuple(alpha)} does not refine {tuple(beta)}")
    return prod(factorial(len(b)) * prod(b) for b in blocks)


@lru_cache(maxsize=None)
def _kostka(flavor: str, alpha: Index, beta: Index) -> Rational:
    if sum(alpha) != sum(beta):
        return 0
    if flavor in ("I", "S"):
        return _count_fillings(alpha, beta, flavor)
    if flavor == "p":
        return _count_p_matrices(alpha, beta)
    if flavor == "F":
        return 1 if refinement_blocks(beta, alpha) is not None else 0
    if flavor == "M":
        return 1 if alpha == beta else 0
    if flavor in ("psi", "phi"):
        if refinement_blocks(alpha, beta) is None:
            return 0
        w = p_weight(alpha, beta) if flavor == "psi" else s_weight(alpha, beta)
        return as_rational(Fraction(z_factor(alpha), w))
    raise DomainError(f"unknown Kostka flavor {flavor!r}")


def qsym_kostka(flavor: str, alpha: Sequence[int], beta: Sequence[int]) -> Rational:
    """Coefficient of ``M_beta`` in the basis element indexed by ``alpha``.

    ``flavor`` is ``"I"`` (dual immaculate), ``"S"`` (quasisymmetric Schur),
    ``"p"`` (combinatorial power sum), or one of ``"F"``, ``"M"``, ``"psi"``, ``"phi"``.
    Sizes that differ give 0.
    """
    return _kostka(flavor, check_strong(alpha), check_strong(beta))


_FLAVOR = {
    "M": "M",
    "F": "F",
    "dual_immaculate": "I",
    "qschur": "S",
    "p_comb": "p",
    "psi": "psi",
    "phi": "phi",
}


@lru_cache(maxsize=None)
def _coefficients(basis: str, alpha: Index) -> dict:
    flavor = _FLAVOR[basis]
    if flavor == "M":
        return {alpha: 1}
    if flavor == "F":
        return {b: 1 for b in refinements(alpha)}
    if flavor in ("psi", "phi", "p"):
        candidates = coarsenings(alpha)
    else:
        candidates = strong_compositions(sum(alpha))
    out = {}
    for beta in candidates:
        c = _kostka(flavor, alpha, beta)
        if c:
            out[beta] = c
    return out


def qsym_coefficients(basis: str, alpha: Sequence[int]) -> dict[Index, Rational]:
    """``{beta: c}`` with ``basis_alpha = sum_beta c M_beta``."""
    return dict(_coefficients(basis_name(basis), check_strong(alpha)))


def expand_qsym(basis: str, alpha: Sequence[int], n: int) -> SparsePoly:
    """The basis element as a polynomial in ``x_1..x_n``."""
    alpha = check_strong(alpha)
    if len(alpha) > n:
        raise DomainError(f"composition {alpha} has more than {n} parts")
    out: dict = {}
    for beta, c in _coefficients(basis_name(basis), alpha).items():
        if len(beta) > n:
            continue
        for exp, v in monomial_quasisymmetric(beta, n).terms.items():
            out[exp] = out.get(exp, 0) + c * v
    return SparsePoly(n, out)


# ---------------------------------------------------------------------------
# transitions and products


def qsym_poset(basis: str, k: int, n: int | None = None) -> Poset:
    """Dominance on compositions for most bases; the sorted order for quasisymmetric Schur."""
    basis = basis_name(basis)
    n = k if n is None else n
    return sorted_dominance(n, k) if basis == "qschur" else dominance_strong(n, k)


@lru_cache(maxsize=None)
def _transition(basis: str, k: int) -> TransitionMatrix:
    P = qsym_poset(basis, k)
    entries = {}
    for alpha in P.elements:
        for beta, c in _coefficients(basis, alpha).items():
            entries[(alpha, beta)] = c
    return TransitionMatrix(P, entries, transition_direction(basis))


def transition_direction(basis: str) -> str:
    """Power sums are supported on coarsenings, which lie below in dominance."""
    return "down" if basis_name(basis) in ("p_comb", "psi", "phi") else "up"


def qsym_transition(basis: str, k: int) -> TransitionMatrix:
    return _transition(basis_name(basis), k)


@lru_cache(maxsize=None)
def _inverse(basis: str, k: int, mode: str) -> TransitionMatrix:
    eta = _transition(basis, k)
    return invert(eta, mode) if eta.is_unitriangular() else invert_triangular(eta, mode)


@lru_cache(maxsize=None)
def _quasi_shuffle(a: Index, b: Index) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = {}
    for head, rest in (((a[0],), _quasi_shuffle(a[1:], b)), ((b[0],), _quasi_shuffle(a, b[1:])), ((a[0] + b[0],), _quasi_shuffle(a[1:], b[1:]))):
        for tau, c in rest.items():
            key = head + tau
            out[key] = out.get(key, 0) + c
    return out


def monomial_qsym_product(a: Sequence[int], b: Sequence[int], n: int | None = None) -> dict[Index, int]:
    """``M_a * M_b = sum_tau c(a, b, tau) M_tau`` by counting overlays of ``b`` onto ``a``."""
    out = dict(_quasi_shuffle(check_strong(a), check_strong(b)))
    if n is not None:
        out = {t: c for t, c in out.items() if len(t) <= n}
    return out


def to_monomial(basis: str, coeffs: dict) -> dict[Index, Rational]:
    basis = basis_name(basis)
    out: dict = {}
    for alpha, c in coeffs.items():
        for beta, v in _coefficients(basis, tuple(alpha)).items():
            out[beta] = out.get(beta, 0) + c * v
    return {k: as_rational(v) for k, v in out.items() if v}


def from_monomial(basis: str, coeffs: dict, mode: str = "backsub") -> dict[Index, Rational]:
    """Rewrite an ``M``-expansion in ``basis`` using the inverted transition."""
    basis = basis_name(basis)
    by_degree: dict = {}
    for beta, c in coeffs.items():
        by_degree.setdefault(sum(beta), {})[tuple(beta)] = c
    out: dict = {}
    for k, part in by_degree.items():
        inv = _inverse(basis, k, mode)
        for (beta, gamma), v in inv.entries.items():
            c = part.get(beta)
            if c:
                out[gamma] = out.get(gamma, 0) + c * v
    return {k: as_rational(v) for k, v in out.items() if v}


def qsym_structure(basis: str, a: Sequence[int], b: Sequence[int], n: int | None = None, mode: str = "backsub") -> dict[Index, Rational]:
    """Expansion of ``basis_a * basis_b`` in the same basis.

    With ``n`` given, indices with more than ``n`` parts are dropped; the
    truncation commutes with the triangular inversion because the dropped set
    is closed upward in every order used here.
    """
    basis = basis_name(basis)
    a, b = check_strong(a), check_strong(b)
    if n is not None and (len(a) > n or len(b) > n):
        raise DomainError(f"index longer than n = {n}")
    if basis == "M":
        return {k: as_rational(v) for k, v in monomial_qsym_product(a, b, n).items()}
    mono: dict = {}
    for rho, x in _coefficients(basis, a).items():
        for omega, y in _coefficients(basis, b).items():
            for tau, c in _quasi_shuffle(rho, omega).items():
                mono[tau] = mono.get(tau, 0) + x * y * c
    out = from_monomial(basis, mono, mode)
    if n is not None:
        out = {k: v for k, v in out.items() if len(k) <= n}
    return out


def psi_rearrangement_sum(la: Sequence[int]) -> dict[Index, Rational]:
    """``sum_{sort(alpha) = la} Psi_alpha`` as an ``M``-expansion; equals ``p_la``."""
    out: dict = {}
    for alpha in distinct_rearrangements(tuple(la)):
        for beta, c in _coefficients("psi", alpha).items():
            out[beta] = out.get(beta, 0) + c
    return {k: as_rational(v) for k, v in out.items() if v}


__all__ = [
    "QSYM_BASES",
    "basis_name",
    "qsym_kostka",
    "qsym_coefficients",
    "expand_qsym",
    "qsym_poset",
    "qsym_transition",
    "monomial_qsym_product",
    "to_monomial",
    "from_monomial",
    "qsym_structure",
    "p_weight",
    "s_weight",
    "psi_rearrangement_sum",
]
