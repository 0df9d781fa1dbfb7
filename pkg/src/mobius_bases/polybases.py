"""Bases of the full polynomial ring ``Q[x_1..x_n]``.

Slides come from a dominance-plus-flattening predicate, Demazure atoms from
augmented fillings, key and Lascoux polynomials from (K-)Kohnert closures of
labelled diagrams, and Schubert and Grothendieck polynomials from (K-)ladder
closures of the Lehmer-code diagram.

Every basis element ``B_a`` is supported on exponents ``w`` with ``w <= a`` in
dominance (``w`` has the larger prefix sums), with coefficient 1 at ``w = a``.
For the inhomogeneous Lascoux and Grothendieck bases the order is graded:
higher degree sits lower.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

from .core import (
    DomainError,
    Index,
    LabeledDiagram,
    Rational,
    SparsePoly,
    as_rational,
    check_weak,
    diagram,
    dominance_leq,
    flat,
    lehmer_code,
    pad,
    refines,
    stable_code_inverse,
    weak_compositions,
    weight,
)
from .posets import Poset, TransitionMatrix, dominance_grading, dominance_weak, invert

POLY_BASES = ("mslide", "fslide", "atom", "key", "lascoux", "schubert", "grothendieck")
K_THEORETIC = ("lascoux", "grothendieck")

# limit on the number of indices gathered when inverting an inhomogeneous basis
CLOSURE_CAP = 20000


def _check_basis(basis: str) -> str:
    if basis not in POLY_BASES:
        raise DomainError(f"unknown polynomial basis {basis!r}")
    return basis


# ---------------------------------------------------------------------------
# slides


@lru_cache(maxsize=None)
def _slide(kind: str, alpha: Index) -> SparsePoly:
    n = len(alpha)
    fa = flat(alpha)
    terms = {}
    for beta in weak_compositions(sum(alpha), n):
        if not dominance_leq(beta, alpha):
            continue
        fb = flat(beta)
        if (fb == fa) if kind == "monomial" else refines(fb, fa):
            terms[beta] = 1
    return SparsePoly(n, terms)


def expand_slide(kind: str, alpha: Sequence[int]) -> SparsePoly:
    """Monomial (``kind="monomial"``) or fundamental (``kind="fundamental"``) slide polynomial.

    Sums ``x^b`` over ``b`` of the same length with ``b <= alpha`` in dominance
    and ``flat(b)`` equal to, respectively refining, ``flat(alpha)``.
    """
    if kind not in ("monomial", "fundamental"):
        raise DomainError(f"unknown slide kind {kind!r}")
    return _slide(kind, check_weak(alpha))


# ---------------------------------------------------------------------------
# Demazure atoms


def _triple_ok(c: int, a: int, b: int) -> bool:
    return c < b < a or a <= c < b or b < a <= c


def _atom_valid(alpha: Index, rows: list[list[int]]) -> bool:
    """Triple conditions on a filling whose rows already decrease and columns are distinct.

    ``rows[i][0]`` is the basement entry ``i + 1``.  A triple is checked only
    when all three of its cells exist.
    """
    n = len(alpha)
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] >= alpha[j]:
                # c = T(i,k-1), a = T(i,k), b = T(j,k); needs (j,k), which forces the others
                for k in range(1, alpha[j] + 1):
                    if not _triple_ok(rows[i][k - 1], rows[i][k], rows[j][k]):
                        return False
            else:
                # b = T(i,k-1), c = T(j,k-1), a = T(j,k); needs (i,k-1) and (j,k)
                for k in range(1, min(alpha[i] + 1, alpha[j]) + 1):
                    if not _triple_ok(rows[j][k - 1], rows[j][k], rows[i][k - 1]):
                        return False
    return True


def atom_tableaux(alpha: Sequence[int]) -> Iterable[tuple[tuple[int, ...], ...]]:
    """Augmented fillings counted by the atom Kostka numbers, basement included."""
    alpha = check_weak(alpha)
    n = len(alpha)
    rows = [[i + 1] + [0] * a for i, a in enumerate(alpha)]
    cells = [(i, k) for k in range(1, max(alpha, default=0) + 1) for i in range(n) if alpha[i] >= k]

    def go(pos: int):
        if pos == len(cells):
            if _atom_valid(alpha, rows):
                yield tuple(tuple(r) for r in rows)
            return
        i, k = cells[pos]
        column = {rows[r][k] for r in range(n) if alpha[r] >= k and rows[r][k]}
        for v in range(1, rows[i][k - 1] + 1):
            if v in column:
                continue
            rows[i][k] = v
            yield from go(pos + 1)
            rows[i][k] = 0

    yield from go(0)


def _tableau_weight(t, n: int) -> Index:
    w = [0] * n
    for row in t:
        for v in row[1:]:
            w[v - 1] += 1
    return tuple(w)


@lru_cache(maxsize=None)
def _atom(alpha: Index) -> SparsePoly:
    n = len(alpha)
    terms: dict = {}
    for t in atom_tableaux(alpha):
        w = _tableau_weight(t, n)
        terms[w] = terms.get(w, 0) + 1
    return SparsePoly(n, terms)


def expand_atom(alpha: Sequence[int]) -> SparsePoly:
    return _atom(check_weak(alpha))


# ---------------------------------------------------------------------------
# Kohnert closures


def kohnert_moves(D: LabeledDiagram, with_k_moves: bool = False) -> list[LabeledDiagram]:
    """All diagrams one (K-)Kohnert move away from ``D``.

    Only the rightmost cell of a row may move, and only if it is filled.  It
    goes to the nearest empty cell above it in its column, provided every cell
    it passes over is filled.  A K-move leaves a ghost behind.
    """
    cells = D.cells
    out = []
    for i in sorted({r for r, _ in cells}):
        j = max(c for r, c in cells if r == i)
        if (i, j) in D.ghost:
            continue
        target = None
        for r in range(i - 1, 0, -1):
            if (r, j) not in cells:
                target = r
                break
        if target is None:
            continue
        if any((r, j) in D.ghost for r in range(target + 1, i + 1)):
            continue
        moved = D.filled - {(i, j)} | {(target, j)}
        out.append(LabeledDiagram(frozenset(moved), D.ghost))
        if with_k_moves:
            out.append(LabeledDiagram(frozenset(moved), D.ghost | {(i, j)}))
    return out


def _closure(start, step) -> frozenset:
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for e in step(d):
            if e not in seen:
                seen.add(e)
                queue.append(e)
    return frozenset(seen)


def kohnert_closure(D: LabeledDiagram | Iterable, with_k_moves: bool = False) -> frozenset:
    """Every labelled diagram reachable from ``D``, ``D`` included."""
    if not isinstance(D, LabeledDiagram):
        D = LabeledDiagram(frozenset(D))
    return _closure(D, lambda d: kohnert_moves(d, with_k_moves))


@lru_cache(maxsize=None)
def _key_like(alpha: Index, with_k: bool) -> SparsePoly:
    n = len(alpha)
    size = sum(alpha)
    terms: dict = {}
    for S in kohnert_closure(LabeledDiagram(diagram(alpha)), with_k):
        w = weight(S.cells, n)
        sign = -1 if (len(S) - size) % 2 else 1
        terms[w] = terms.get(w, 0) + sign
    return SparsePoly(n, terms)


def expand_key(alpha: Sequence[int]) -> SparsePoly:
    return _key_like(check_weak(alpha), False)


def expand_lascoux(alpha: Sequence[int]) -> SparsePoly:
    return _key_like(check_weak(alpha), True)


# ---------------------------------------------------------------------------
# ladder closures


def ladder_moves(D: frozenset, with_k_moves: bool = False) -> list[frozenset]:
    out = []
    for i, j in D:
        if (i, j + 1) in D:
            continue
        k = 1
        while k < i and (i - k, j) in D and (i - k, j + 1) in D:
            k += 1
        if k >= i or (i - k, j) in D or (i - k, j + 1) in D:
            continue
        out.append(D - {(i, j)} | {(i - k, j + 1)})
        if with_k_moves:
            out.append(D | {(i - k, j + 1)})
    return out


def ladder_closure(w: Sequence[int], with_k_moves: bool = False) -> frozenset:
    """Diagrams reachable from the Lehmer-code diagram of ``w`` by (K-)ladder moves."""
    return _closure(diagram(lehmer_code(w)), lambda d: ladder_moves(d, with_k_moves))


@lru_cache(maxsize=None)
def _schubert_like(alpha: Index, with_k: bool) -> SparsePoly:
    n = len(alpha)
    w = stable_code_inverse(alpha)
    size = sum(alpha)
    terms: dict = {}
    for P in ladder_closure(w, with_k):
        if any(r > n for r, _ in P):
            raise DomainError(f"diagram of {alpha} leaves the first {n} rows")
        wt = weight(P, n)
        sign = -1 if (len(P) - size) % 2 else 1
        terms[wt] = terms.get(wt, 0) + sign
    return SparsePoly(n, terms)


def expand_schubert(alpha: Sequence[int]) -> SparsePoly:
    """Schubert polynomial indexed by a Lehmer code (any weak composition, read in S_infinity)."""
    return _schubert_like(check_weak(alpha), False)


def expand_grothendieck(alpha: Sequence[int]) -> SparsePoly:
    return _schubert_like(check_weak(alpha), True)


# ---------------------------------------------------------------------------
# uniform access


_EXPANDERS = {
    "mslide": lambda a: _slide("monomial", a),
    "fslide": lambda a: _slide("fundamental", a),
    "atom": _atom,
    "key": lambda a: _key_like(a, False),
    "lascoux": lambda a: _key_like(a, True),
    "schubert": lambda a: _schubert_like(a, False),
    "grothendieck": lambda a: _schubert_like(a, True),
}


def expand_poly(basis: str, alpha: Sequence[int], n: int | None = None) -> SparsePoly:
    """``basis_alpha`` in ``x_1..x_n``; ``alpha`` is padded with zeros to length ``n``."""
    alpha = check_weak(alpha)
    n = len(alpha) if n is None else n
    if n < len(alpha):
        raise DomainError(f"index {alpha} is longer than n = {n}")
    return _EXPANDERS[_check_basis(basis)](pad(alpha, n))


def poly_coefficients(basis: str, alpha: Sequence[int], n: int | None = None) -> dict[Index, Rational]:
    return dict(expand_poly(basis, alpha, n).terms)


def graded_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Higher degree first, then dominance within a degree."""
    sa, sb = sum(a), sum(b)
    if sa != sb:
        return sa > sb
    return dominance_leq(a, b)


def graded_key(a: Sequence[int]) -> tuple:
    """Strictly increasing along :func:`graded_leq`."""
    return (-sum(a), dominance_grading(a))


@lru_cache(maxsize=None)
def poly_transition(basis: str, n: int, k: int) -> TransitionMatrix:
    """Monomial expansions of a homogeneous basis on ``I_{n,k}``; lower triangular."""
    basis = _check_basis(basis)
    if basis in K_THEORETIC:
        raise DomainError(f"{basis} is not homogeneous; use graded_transition")
    P = dominance_weak(n, k)
    entries = {}
    for alpha in P.elements:
        for omega, c in _EXPANDERS[basis](alpha).terms.items():
            entries[(alpha, omega)] = c
    return TransitionMatrix(P, entries, "down")


def graded_transition(basis: str, seeds: Iterable[Index], cap: int = CLOSURE_CAP) -> TransitionMatrix:
    """Transition for an inhomogeneous basis on the closure of ``seeds`` under taking supports."""
    basis = _check_basis(basis)
    expand = _EXPANDERS[basis]
    elements = []
    seen = set()
    queue = deque(tuple(s) for s in seeds)
    entries = {}
    while queue:
        alpha = queue.popleft()
        if alpha in seen:
            continue
        seen.add(alpha)
        elements.append(alpha)
        if len(seen) > cap:
            raise DomainError(f"support closure for {basis} exceeded {cap} indices")
        for omega, c in expand(alpha).terms.items():
            entries[(alpha, omega)] = c
            if omega not in seen:
                queue.append(omega)
    P = Poset(f"graded_{basis}", tuple(elements), graded_leq, graded_key)
    return TransitionMatrix(P, entries, "down")


def _to_basis(basis: str, mono: dict, n: int, mode: str) -> dict[Index, Rational]:
    """Rewrite ``{exponent: coeff}`` in ``basis``."""
    if not mono:
        return {}
    if basis in K_THEORETIC:
        inv = invert(graded_transition(basis, mono.keys()), mode)
    else:
        degrees = {sum(e) for e in mono}
        out: dict = {}
        for k in degrees:
            part = {e: c for e, c in mono.items() if sum(e) == k}
            for key, v in _to_basis_homogeneous(basis, part, n, k, mode).items():
                out[key] = out.get(key, 0) + v
        return {k: as_rational(v) for k, v in out.items() if v}
    out = {}
    for (e, gamma), v in inv.entries.items():
        c = mono.get(e)
        if c:
            out[gamma] = out.get(gamma, 0) + c * v
    return {k: as_rational(v) for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _inverse_transition(basis: str, n: int, k: int, mode: str) -> TransitionMatrix:
    return invert(poly_transition(basis, n, k), mode)


def _to_basis_homogeneous(basis: str, part: dict, n: int, k: int, mode: str) -> dict:
    inv = _inverse_transition(basis, n, k, mode)
    out: dict = {}
    for (e, gamma), v in inv.entries.items():
        c = part.get(e)
        if c:
            out[gamma] = out.get(gamma, 0) + c * v
    return out


def monomial_to_poly_basis(basis: str, poly: SparsePoly, mode: str = "backsub") -> dict[Index, Rational]:
    return _to_basis(_check_basis(basis), dict(poly.terms), poly.nvars, mode)


def poly_structure(basis: str, a: Sequence[int], b: Sequence[int], n: int | None = None, mode: str = "backsub") -> dict[Index, Rational]:
    """Expansion of ``basis_a * basis_b`` in ``basis``.

    Both indices are padded to a common length ``n`` (default: the longer one).
    The product is formed on monomials by adding exponents, then pulled back
    through the inverted transition.
    """
    basis = _check_basis(basis)
    a, b = check_weak(a), check_weak(b)
    n = max(len(a), len(b)) if n is None else n
    if n < max(len(a), len(b)):
        raise DomainError(f"indices longer than n = {n}")
    product = expand_poly(basis, a, n) * expand_poly(basis, b, n)
    return _to_basis(basis, dict(product.terms), n, mode)


def schubert_kostka(alpha: Sequence[int], omega: Sequence[int]) -> int:
    """Coefficient of ``x^omega`` in the Schubert polynomial with code ``alpha``."""
    alpha, omega = check_weak(alpha), check_weak(omega)
    n = max(len(alpha), len(omega))
    if sum(alpha) != sum(omega):
        return 0
    return expand_schubert(pad(alpha, n)).coeff(pad(omega, n))


def schubert_kostka_inverse(alpha: Sequence[int], omega: Sequence[int], mode: str = "backsub") -> int:
    """Coefficient of the Schubert polynomial ``omega`` in ``x^alpha``."""
    alpha, omega = check_weak(alpha), check_weak(omega)
    n = max(len(alpha), len(omega))
    if sum(alpha) != sum(omega):
        return 0
    inv = _inverse_transition("schubert", n, sum(alpha), mode)
    return inv[pad(alpha, n), pad(omega, n)]


__all__ = [
    "POLY_BASES",
    "expand_slide",
    "atom_tableaux",
    "expand_atom",
    "kohnert_moves",
    "kohnert_closure",
    "expand_key",
    "expand_lascoux",
    "ladder_moves",
    "ladder_closure",
    "expand_schubert",
    "expand_grothendieck",
    "expand_poly",
    "poly_coefficients",
    "graded_leq",
    "poly_transition",
    "graded_transition",
    "monomial_to_poly_basis",
    "poly_structure",
    "schubert_kostka",
    "schubert_kostka_inverse",
]
