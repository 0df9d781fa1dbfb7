"""Hall-Littlewood polynomials ``P_la(x; t)`` at a fixed rational ``t``.

The tableau route weights each SSYT, read as a chain of horizontal strips, by

    psi_{la/mu}(t) = prod_{j in J} (1 - t^{m_j(mu)}),
    J = {j : the strip has no cell in column j but has one in column j + 1},

(Macdonald, Symmetric Functions and Hall Polynomials, III (5.8'), (5.11')).
Schur P-polynomials are the specialisation ``t = -1`` on strict partitions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import (
    DomainError,
    Index,
    Rational,
    SparsePoly,
    as_rational,
    check_partition,
    conjugate,
    pad,
)
from .posets import TransitionMatrix, dominance_partitions, invert
from .symfn import horizontal_strips_below, monomial_product


def _check_t(t) -> Rational:
    t = as_rational(t)
    if t == 1:
        raise DomainError("t = 1 is not supported")
    return t


def strip_weight(la: Index, mu: Index, t: Rational) -> Rational:
    """``psi_{la/mu}(t)`` for a horizontal strip ``la/mu``."""
    lac, muc = conjugate(la), conjugate(mu)
    width = len(lac) + 1
    theta = [(lac[j] if j < len(lac) else 0) - (muc[j] if j < len(muc) else 0) for j in range(width)]
    w: Rational = 1
    for j in range(width - 1):
        if theta[j] == 0 and theta[j + 1] == 1:
            m_j = sum(1 for p in mu if p == j + 1)
            w *= 1 - t**m_j
    return as_rational(w)


@lru_cache(maxsize=None)
def _hl_poly(la: Index, t: Rational, n: int) -> SparsePoly:
    if n == 0:
        return SparsePoly.constant(0) if not la else SparsePoly(0, {})
    out: dict = {}
    for k in range(sum(la) + 1):
        for mu in horizontal_strips_below(la, k):
            if len(mu) > n - 1:
                continue
            w = strip_weight(la, mu, t)
            if not w:
                continue
            for exp, c in _hl_poly(mu, t, n - 1).terms.items():
                e = exp + (k,)
                out[e] = out.get(e, 0) + w * c
    return SparsePoly(n, out)


def hl_expand(la: Sequence[int], t, n: int) -> SparsePoly:
    """``P_la(x_1..x_n; t)`` by the tableau formula."""
    la = check_partition(la)
    t = _check_t(t)
    if len(la) > n:
        raise DomainError(f"partition {la} has more than {n} parts")
    return _hl_poly(la, t, n)


@lru_cache(maxsize=None)
def hl_kostka(la: Index, mu: Index, t: Rational) -> Rational:
    """Coefficient of ``m_mu`` in ``P_la(x; t)``."""
    if sum(la) != sum(mu):
        return 0
    if not mu:
        return 1 if not la else 0
    total: Rational = 0
    for nu in horizontal_strips_below(la, mu[-1]):
        w = strip_weight(la, nu, t)
        if w:
            total += w * hl_kostka(nu, mu[:-1], t)
    return as_rational(total)


@lru_cache(maxsize=None)
def hl_transition(m: int, t) -> TransitionMatrix:
    """``P_la = sum_mu K[la, mu](t) m_mu`` on partitions of ``m``."""
    t = _check_t(t)
    Q = dominance_partitions(m)
    entries = {(la, mu): hl_kostka(la, mu, t) for la in Q.elements for mu in Q.elements}
    return TransitionMatrix(Q, entries, "up")


def hl_structure(la: Sequence[int], mu: Sequence[int], t, n: int | None = None, mode: str = "backsub") -> dict[Index, Rational]:
    """``P_la * P_mu`` in the basis ``{P_nu(x; t)}``.

    Computed by expanding into monomial symmetric functions, multiplying there,
    and inverting the Hall-Littlewood transition.  With ``n`` given, terms with
    more than ``n`` parts (which vanish in ``n`` variables) are dropped.
    """
    la, mu = check_partition(la), check_partition(mu)
    t = _check_t(t)
    mono: dict = {}
    row_a = hl_transition(sum(la), t).row(la)
    row_b = hl_transition(sum(mu), t).row(mu)
    for tau, a in row_a.items():
        for kappa, b in row_b.items():
            for sigma, c in monomial_product(tau, kappa).items():
                mono[sigma] = mono.get(sigma, 0) + a * b * c
    inv = invert(hl_transition(sum(la) + sum(mu), t), mode)
    out: dict = {}
    for (sigma, nu), v in inv.entries.items():
        c = mono.get(sigma)
        if c:
            out[nu] = out.get(nu, 0) + c * v
    out = {k: as_rational(v) for k, v in out.items() if v}
    if n is not None:
        out = {k: v for k, v in out.items() if len(k) <= n}
    return out


def schur_p_expand(la: Sequence[int], n: int) -> SparsePoly:
    """Schur P-polynomial ``P_la(x_1..x_n) = P_la(x; -1)``; ``la`` must have distinct parts."""
    la = check_partition(la)
    if len(set(la)) != len(la):
        raise DomainError(f"Schur P-polynomials need distinct parts, got {la}")
    return hl_expand(la, -1, n)


def schur_p_structure(la: Sequence[int], mu: Sequence[int], n: int | None = None, mode: str = "backsub") -> dict[Index, Rational]:
    for p in (la, mu):
        if len(set(p)) != len(tuple(p)):
            raise DomainError(f"Schur P-polynomials need distinct parts, got {tuple(p)}")
    return hl_structure(la, mu, -1, n, mode)


# ---------------------------------------------------------------------------
# symmetrisation oracle


def _divide_by_difference(p: SparsePoly, i: int, j: int) -> SparsePoly:
    """Exact quotient ``p / (x_i - x_j)``; raises if the division is not exact."""
    n = p.nvars
    # group by the exponent of x_i, then run synthetic division in x_i over the other variables
    deg = max((e[i] for e in p.terms), default=0)
    layers = [dict() for _ in range(deg + 1)]
    for exp, c in p.terms.items():
        rest = exp[:i] + (0,) + exp[i + 1:]
        layers[exp[i]][rest] = c
    quotient = [dict() for _ in range(deg)]
    carry: dict = {}
    for k in range(deg, 0, -1):
        # b_{k-1} = a_k + x_j * b_k
        b = dict(layers[k])
        for rest, c in carry.items():
            shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
            b[shifted] = b.get(shifted, 0) + c
        b = {r: c for r, c in b.items() if c}
        quotient[k - 1] = b
        carry = b
    # remainder check: a_0 + x_j * b_0 must vanish
    rem = dict(layers[0])
    for rest, c in carry.items():
        shifted = rest[:j] + (rest[j] + 1,) + rest[j + 1:]
        rem[shifted] = rem.get(shifted, 0) + c
    if any(rem.values()):
        raise DomainError(f"not divisible by x{i + 1} - x{j + 1}")
    terms = {}
    for k, layer in enumerate(quotient):
        for rest, c in layer.items():
            terms[rest[:i] + (k,) + rest[i + 1:]] = c
    return SparsePoly(n, terms)


def _sign(perm: Sequence[int]) -> int:
    s = 1
    for a, b in itertools.combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            s = -s
    return s


def hl_normalisation(la: Index, t: Rational, n: int) -> Rational:
    """``v_la(t) = prod_i v_{m_i}(t)`` with ``v_m(t) = prod_{j<=m} (1 - t^j)/(1 - t)``, ``m_0 = n - len(la)``."""
    mults = [n - len(la)] + [sum(1 for p in la if p == v) for v in set(la)]
    out = Fraction(1)
    for m in mults:
        for j in range(1, m + 1):
            out *= Fraction(1 - Fraction(t) ** j) / (1 - Fraction(t))
    return as_rational(out)


def hl_symmetrization_oracle(la: Sequence[int], t, n: int) -> SparsePoly:
    """``P_la`` by symmetrising ``x^la prod_{i<j} (x_i - t x_j) / (x_i - x_j)`` over ``S_n``."""
    la = check_partition(la)
    t = _check_t(t)
    if len(la) > n:
        raise DomainError(f"partition {la} has more than {n} parts")
    v = hl_normalisation(la, t, n)
    if not v:
        raise DomainError(f"normalisation vanishes for {la} at t = {t} in {n} variables")
    x = [SparsePoly.variable(i, n) for i in range(n)]
    kernel = SparsePoly.monomial(pad(la, n))
    for i, j in itertools.combinations(range(n), 2):
        kernel = kernel * (x[i] - x[j].scale(t))
    numerator_terms: dict = {}
    for perm in itertools.permutations(range(n)):
        s = _sign(perm)
        for exp, c in kernel.terms.items():
            moved = [0] * n
            for src, dst in enumerate(perm):
                moved[dst] = exp[src]
            key = tuple(moved)
            numerator_terms[key] = numerator_terms.get(key, 0) + s * c
    q = SparsePoly(n, numerator_terms)
    for i, j in itertools.combinations(range(n), 2):
        q = _divide_by_difference(q, i, j)
    return q.scale(Fraction(1) / Fraction(v))


def hl_matches_oracle(la: Sequence[int], t, n: int) -> bool:
    return hl_expand(la, t, n) == hl_symmetrization_oracle(la, t, n)


def denominator_profile(coeffs: dict) -> int:
    """Least common multiple of the denominators of a coefficient map."""
    from math import lcm

    return lcm(*(Fraction(v).denominator for v in coeffs.values())) if coeffs else 1


__all__ = [
    "hl_expand",
    "hl_kostka",
    "hl_transition",
    "hl_structure",
    "hl_symmetrization_oracle",
    "schur_p_expand",
    "schur_p_structure",
    "strip_weight",
    "hl_matches_oracle",
    "hl_normalisation",
    "denominator_profile",
]
