"""Brute-force ground truth, independent of the transition-matrix pipeline.

Coefficients in a basis are recovered from an explicit polynomial by leading
term elimination: take the largest monomial, subtract the right multiple of
the basis element owning it, repeat.  Monomials are compared by
``leading_key``: lower total degree first, then the reversed exponent tuple,
largest wins.  Where several basis elements share a leading term (power sums
and complete homogeneous functions do) the degree slice is solved as a small
exact linear system instead.

The second half computes basis polynomials by divided-difference operators
and runs the named verification suites.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import (
    DomainError,
    Index,
    Rational,
    SparsePoly,
    as_rational,
    check_weak,
    diagram,
    format_index,
    lehmer_code,
    pad,
    partitions,
    stable_code_inverse,
    strong_compositions,
    weak_compositions,
)
from .hall_littlewood import _divide_by_difference, hl_expand
from .polybases import POLY_BASES, expand_poly
from .qsym import QSYM_BASES, QSYM_ALIASES, basis_name, expand_qsym
from .symfn import CLASSIC_BASES, classic_indices, expand_classic

# ---------------------------------------------------------------------------
# basis families


def leading_key(exp: Sequence[int]) -> tuple:
    return (-sum(exp), tuple(reversed(exp)))


def leading_term(p: SparsePoly) -> Index:
    if not p.terms:
        raise DomainError("zero polynomial has no leading term")
    return max(p.terms, key=leading_key)


@dataclass(frozen=True)
class Family:
    name: str
    kind: str  # "symmetric", "quasisymmetric" or "polynomial"
    expand: Callable[[Index, int], SparsePoly]
    indices: Callable[[int, int], tuple] | None  # degree-k indices in n variables


def family(basis: str, t=None) -> Family:
    """Resolve a basis name (``m p e h s``, ``hl``, ``schur_p``, quasisymmetric or polynomial)."""
    if basis in CLASSIC_BASES:
        return Family(basis, "symmetric", lambda a, n: expand_classic(basis, a, n), lambda k, n: classic_indices(basis, k, n))
    if basis == "hl":
        if t is None:
            raise DomainError("the hl basis needs a value of t")
        return Family("hl", "symmetric", lambda a, n: hl_expand(a, t, n), lambda k, n: partitions(k, None, n))
    if basis == "schur_p":
        return Family(
            "schur_p", "symmetric", lambda a, n: hl_expand(a, -1, n),
            lambda k, n: tuple(la for la in partitions(k, None, n) if len(set(la)) == len(la)),
        )
    if basis in QSYM_BASES or basis in QSYM_ALIASES:
        name = basis_name(basis)
        return Family(name, "quasisymmetric", lambda a, n: expand_qsym(name, a, n), lambda k, n: strong_compositions(k, n))
    if basis in POLY_BASES:
        return Family(basis, "polynomial", lambda a, n: expand_poly(basis, a, n), None)
    raise DomainError(f"unknown basis {basis!r}")


def reassemble(coeffs: dict, basis: str, n: int, t=None) -> SparsePoly:
    fam = family(basis, t)
    out = SparsePoly(n, {})
    for idx, c in coeffs.items():
        out = out + fam.expand(tuple(idx), n).scale(c)
    return out


# ---------------------------------------------------------------------------
# extraction


class StallError(DomainError):
    """Elimination could not continue; ``residual`` is the leading monomial left over."""

    def __init__(self, message: str, residual: Index | None = None):
        self.residual = residual
        super().__init__(message)


def _leading_map(fam: Family, k: int, n: int) -> dict | None:
    """Leading term to index at degree ``k``, or ``None`` if two indices share one."""
    seen: dict = {}
    for idx in fam.indices(k, n):
        lt = leading_term(fam.expand(idx, n))
        if lt in seen:
            return None
        seen[lt] = idx
    return seen


def distinct_leading_terms(basis: str, k: int, n: int, t=None) -> bool:
    fam = family(basis, t)
    if fam.indices is None:
        return all(leading_term(fam.expand(a, n)) == a for a in weak_compositions(k, n))
    return _leading_map(fam, k, n) is not None


def _solve_slice(part: SparsePoly, fam: Family, k: int, n: int) -> dict:
    """Exact solve of ``part = sum_i c_i B_i`` over the degree-``k`` indices."""
    idxs = list(fam.indices(k, n))
    polys = [fam.expand(a, n) for a in idxs]
    monos = set(part.terms)
    for q in polys:
        monos.update(q.terms)
    pivots: dict[int, tuple[list, Fraction]] = {}  # column -> (row, rhs)
    for m in sorted(monos, key=leading_key, reverse=True):
        row = [Fraction(q.coeff(m)) for q in polys]
        rhs = Fraction(part.coeff(m))
        for col, (prow, prhs) in pivots.items():
            if row[col]:
                f = row[col]
                row = [a - f * b for a, b in zip(row, prow)]
                rhs -= f * prhs
        lead = next((i for i, v in enumerate(row) if v), None)
        if lead is None:
            if rhs:
                raise StallError(f"x^{m} is not in the span of the degree-{k} {fam.name} elements", m)
            continue
        f = row[lead]
        row = [v / f for v in row]
        rhs /= f
        for col, (prow, prhs) in list(pivots.items()):
            if prow[lead]:
                g = prow[lead]
                pivots[col] = ([a - g * b for a, b in zip(prow, row)], prhs - g * rhs)
        pivots[lead] = (row, rhs)
        if len(pivots) == len(idxs):
            break
    if len(pivots) < len(idxs):
        raise StallError(f"degree-{k} {fam.name} elements in {n} variables are linearly dependent")
    return {idxs[col]: as_rational(rhs) for col, (_, rhs) in pivots.items() if rhs}


def extract_in_basis(p: SparsePoly, basis: str, n: int | None = None, t=None, max_steps: int = 100000) -> dict[Index, Rational]:
    """Coefficients of ``p`` in ``basis`` by leading-term elimination."""
    n = p.nvars if n is None else n
    if n != p.nvars:
        raise DomainError(f"polynomial has {p.nvars} variables, expected {n}")
    fam = family(basis, t)
    out: dict = {}
    residual = p
    lead_maps: dict = {}
    steps = 0
    while residual.terms:
        steps += 1
        if steps > max_steps:
            raise StallError(f"elimination did not finish in {max_steps} steps", leading_term(residual))
        lt = leading_term(residual)
        c = residual.coeff(lt)
        if fam.kind == "polynomial":
            idx = lt
            elem = fam.expand(idx, n)
            if leading_term(elem) != lt:
                raise StallError(f"{basis}_{format_index(idx)} does not lead with x^{lt}", lt)
        else:
            k = sum(lt)
            if k not in lead_maps:
                lead_maps[k] = _leading_map(fam, k, n)
            lmap = lead_maps[k]
            if lmap is None:
                part = SparsePoly(n, {e: v for e, v in residual.terms.items() if sum(e) == k})
                sol = _solve_slice(part, fam, k, n)
                for idx, v in sol.items():
                    out[idx] = out.get(idx, 0) + v
                    residual = residual - fam.expand(idx, n).scale(v)
                if any(sum(e) == k for e in residual.terms):
                    raise StallError(f"degree-{k} part left a residual", leading_term(residual))
                continue
            idx = lmap.get(lt)
            if idx is None:
                raise StallError(f"no {basis} element leads with x^{lt}; residual is not in the span", lt)
            elem = fam.expand(idx, n)
        lead_c = elem.coeff(lt)
        v = Fraction(c) / lead_c
        out[idx] = out.get(idx, 0) + v
        residual = residual - elem.scale(v)
    return {k: as_rational(v) for k, v in out.items() if v}


def oracle_structure(basis: str, a: Sequence[int], b: Sequence[int], n: int, t=None) -> dict[Index, Rational]:
    """Product of two basis elements by explicit multiplication and extraction."""
    fam = family(basis, t)
    if fam.kind == "polynomial":
        a, b = pad(check_weak(a), n), pad(check_weak(b), n)
    p = fam.expand(tuple(a), n) * fam.expand(tuple(b), n)
    return extract_in_basis(p, basis, n, t)


# ---------------------------------------------------------------------------
# divided-difference operators


def swap_variables(p: SparsePoly, i: int) -> SparsePoly:
    """``s_i p``: exchange ``x_i`` and ``x_{i+1}`` (0-based ``i``)."""
    out = {}
    for e, c in p.terms.items():
        e = list(e)
        e[i], e[i + 1] = e[i + 1], e[i]
        out[tuple(e)] = c
    return SparsePoly(p.nvars, out)


def divided_difference(p: SparsePoly, i: int) -> SparsePoly:
    """``(p - s_i p) / (x_i - x_{i+1})``."""
    return _divide_by_difference(p - swap_variables(p, i), i, i + 1)


def demazure(p: SparsePoly, i: int, k_theoretic: bool = False) -> SparsePoly:
    """``pi_i p = d_i(x_i p)``; the K-version is ``d_i(x_i (1 - x_{i+1}) p)``."""
    n = p.nvars
    f = SparsePoly.variable(i, n) * p
    if k_theoretic:
        f = (SparsePoly.constant(n) - SparsePoly.variable(i + 1, n)) * f
    return divided_difference(f, i)


def _first_ascent(a: Sequence[int]) -> int | None:
    return next((i for i in range(len(a) - 1) if a[i] < a[i + 1]), None)


def key_by_operators(alpha: Sequence[int], k_theoretic: bool = False) -> SparsePoly:
    """``kappa_alpha`` (or Lascoux): ``x^alpha`` if weakly decreasing, else ``pi_i`` of the sorted-at-``i`` index."""
    alpha = list(check_weak(alpha))
    i = _first_ascent(alpha)
    if i is None:
        return SparsePoly.monomial(tuple(alpha))
    alpha[i], alpha[i + 1] = alpha[i + 1], alpha[i]
    return demazure(key_by_operators(alpha, k_theoretic), i, k_theoretic)


def atom_by_operators(alpha: Sequence[int]) -> SparsePoly:
    """``atom_{s_i a} = (pi_i - 1) atom_a`` at an ascent of ``s_i a``."""
    alpha = list(check_weak(alpha))
    i = _first_ascent(alpha)
    if i is None:
        return SparsePoly.monomial(tuple(alpha))
    alpha[i], alpha[i + 1] = alpha[i + 1], alpha[i]
    f = atom_by_operators(alpha)
    return demazure(f, i) - f


def schubert_by_operators(code: Sequence[int], k_theoretic: bool = False) -> SparsePoly:
    """Schubert (or Grothendieck) polynomial from ``x^delta`` by divided differences."""
    code = check_weak(code)
    n = len(code)
    w = list(stable_code_inverse(code))
    m = max(len(w), n, 1)
    w += list(range(len(w) + 1, m + 1))

    def rec(v: list) -> SparsePoly:
        i = _first_ascent(v)
        if i is None:
            return SparsePoly.monomial(tuple(m - 1 - j for j in range(m)))
        u = v[:]
        u[i], u[i + 1] = u[i + 1], u[i]
        f = rec(u)
        if k_theoretic:
            f = (SparsePoly.constant(m) - SparsePoly.variable(i + 1, m)) * f
        return divided_difference(f, i)

    p = rec(w)
    out = {}
    for e, c in p.terms.items():
        if any(e[n:]):
            raise DomainError(f"Schubert polynomial of {code} uses more than {n} variables")
        out[e[:n]] = c
    return SparsePoly(n, out)


OPERATOR_ORACLES: dict[str, Callable[[Index], SparsePoly]] = {
    "key": key_by_operators,
    "lascoux": lambda a: key_by_operators(a, True),
    "atom": atom_by_operators,
    "schubert": schubert_by_operators,
    "grothendieck": lambda a: schubert_by_operators(a, True),
}


# ---------------------------------------------------------------------------
# reports


@dataclass
class Case:
    id: str
    status: str
    detail: str = ""


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)

    def add(self, id: str, ok: bool, detail: str = "") -> None:
        self.cases.append(Case(id, "pass" if ok else "fail", "" if ok else detail))

    def to_json(self) -> str:
        return json.dumps({"suite": self.suite, "cases": [asdict(c) for c in self.cases]}, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.cases:
            lines.append(f"  {c.status.upper():4} {c.id}" + (f"  ({c.detail})" if c.detail else ""))
        n_fail = sum(c.status != "pass" for c in self.cases)
        lines.append(f"{len(self.cases) - n_fail}/{len(self.cases)} passed in {self.seconds:.1f}s")
        return "\n".join(lines)


def _first_mismatch(got: dict, want: dict) -> str:
    for k in sorted(set(got) | set(want)):
        if got.get(k, 0) != want.get(k, 0):
            return f"at {format_index(k)}: got {got.get(k, 0)}, expected {want.get(k, 0)}"
    return ""


def _check_equal(report: Report, id: str, got: dict, want: dict) -> None:
    got = {k: v for k, v in got.items() if v}
    want = {k: v for k, v in want.items() if v}
    report.add(id, got == want, _first_mismatch(got, want))


def _poly(n: int, terms: dict) -> dict:
    return dict(SparsePoly(n, terms).terms)


# ---------------------------------------------------------------------------
# suite: worked examples


def _suite_worked_examples(report: Report) -> None:
    from .core import LabeledDiagram
    from .polybases import expand_slide, kohnert_closure, ladder_closure
    from .qsym import qsym_coefficients, qsym_kostka

    F = Fraction
    _check_equal(report, "F_(2,2)", qsym_coefficients("F", (2, 2)),
                 {(1, 1, 1, 1): 1, (1, 1, 2): 1, (2, 1, 1): 1, (2, 2): 1})
    _check_equal(report, "dual_immaculate_(2,2)", qsym_coefficients("dual_immaculate", (2, 2)),
                 {(1, 1, 1, 1): 3, (1, 1, 2): 2, (1, 2, 1): 2, (1, 3): 1, (2, 1, 1): 1, (2, 2): 1})
    _check_equal(report, "qschur_(2,2)", qsym_coefficients("qschur", (2, 2)),
                 {(1, 1, 1, 1): 2, (1, 1, 2): 1, (1, 2, 1): 1, (2, 1, 1): 1, (2, 2): 1})
    report.add("K^I((2,2),(1,2,1)) = 2", qsym_kostka("I", (2, 2), (1, 2, 1)) == 2, f"got {qsym_kostka('I', (2, 2), (1, 2, 1))}")
    report.add("K^S((2,2),(1,2,1)) = 1", qsym_kostka("S", (2, 2), (1, 2, 1)) == 1, f"got {qsym_kostka('S', (2, 2), (1, 2, 1))}")
    _check_equal(report, "p_comb_(1,1,2)", qsym_coefficients("p_comb", (1, 1, 2)), {(1, 1, 2): 2, (2, 2): 1})
    _check_equal(report, "psi_(1,1,2)", qsym_coefficients("psi", (1, 1, 2)),
                 {(1, 1, 2): 2, (2, 2): 1, (1, 3): F(4, 5), (4,): F(1, 3)})
    _check_equal(report, "phi_(1,1,2)", qsym_coefficients("phi", (1, 1, 2)),
                 {(1, 1, 2): 2, (2, 2): 1, (1, 3): F(4, 3), (4,): F(1, 2)})
    report.add("K^p((1,1,2),(1,1,2)) = 2", qsym_kostka("p", (1, 1, 2), (1, 1, 2)) == 2, f"got {qsym_kostka('p', (1, 1, 2), (1, 1, 2))}")

    _check_equal(report, "atom_(0,2,1)", dict(expand_poly("atom", (0, 2, 1)).terms), {(1, 1, 1): 1, (0, 2, 1): 1})
    key = {(2, 1, 0): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 1, 1): 1, (0, 2, 1): 1}
    _check_equal(report, "key_(0,2,1)", dict(expand_poly("key", (0, 2, 1)).terms), key)
    lascoux = dict(key)
    lascoux.update({(2, 2, 0): -1, (2, 1, 1): -2, (1, 2, 1): -2, (2, 2, 1): 1})
    _check_equal(report, "lascoux_(0,2,1)", dict(expand_poly("lascoux", (0, 2, 1)).terms), lascoux)
    LD = LabeledDiagram
    drawn = {
        LD(frozenset({(1, 1), (1, 2), (2, 1)}), frozenset({(2, 2)})),
        LD(frozenset({(1, 1), (1, 2), (2, 1)}), frozenset({(3, 1)})),
        LD(frozenset({(1, 1), (1, 2), (3, 1)}), frozenset({(2, 1)})),
        LD(frozenset({(1, 1), (2, 1), (2, 2)}), frozenset({(3, 1)})),
        LD(frozenset({(1, 2), (2, 1), (3, 1)}), frozenset({(2, 2)})),
    }
    size4 = {d for d in kohnert_closure(LD(diagram((0, 2, 1))), True) if len(d) == 4}
    report.add("lascoux_(0,2,1) degree-4 diagrams", size4 == drawn, f"got {len(size4)} diagrams")
    plain = kohnert_closure(LD(diagram((0, 2, 1))))
    report.add("key_(0,2,1) Kohnert closure has 5 diagrams", len(plain) == 5, f"got {len(plain)}")

    report.add("code(2143) = (1,0,1,0)", lehmer_code((2, 1, 4, 3)) == (1, 0, 1, 0), f"got {lehmer_code((2, 1, 4, 3))}")
    schub = {(2, 0, 0, 0): 1, (1, 1, 0, 0): 1, (1, 0, 1, 0): 1}
    _check_equal(report, "schubert_(1,0,1,0)", dict(expand_poly("schubert", (1, 0, 1, 0)).terms), schub)
    groth = dict(schub)
    groth.update({(2, 1, 0, 0): -1, (2, 0, 1, 0): -1, (1, 1, 1, 0): -1, (2, 1, 1, 0): 1})
    _check_equal(report, "grothendieck_(1,0,1,0)", dict(expand_poly("grothendieck", (1, 0, 1, 0)).terms), groth)
    pipes = {
        frozenset({(1, 1), (1, 3), (3, 1)}),
        frozenset({(1, 1), (2, 2), (3, 1)}),
        frozenset({(1, 1), (1, 3), (2, 2)}),
    }
    size3 = {d for d in ladder_closure((2, 1, 4, 3), True) if len(d) == 3}
    report.add("grothendieck_(1,0,1,0) degree-3 diagrams", size3 == pipes, f"got {sorted(map(sorted, size3))}")
    _check_equal(report, "mslide_(0,1)", dict(expand_slide("monomial", (0, 1)).terms), {(1, 0): 1, (0, 1): 1})


# ---------------------------------------------------------------------------
# suite: mobius


def _transitions_up_to(max_degree: int) -> Iterable[tuple[str, object]]:
    from .hall_littlewood import hl_transition
    from .polybases import K_THEORETIC, poly_transition
    from .qsym import qsym_transition
    from .symfn import kostka_matrix

    for m in range(1, max_degree + 1):
        yield f"kostka Q_{m}", kostka_matrix(m)
        for t in (0, Fraction(1, 2)):
            yield f"hall_littlewood t={t} Q_{m}", hl_transition(m, t)
        for basis in QSYM_BASES:
            yield f"{basis} k={m}", qsym_transition(basis, m)
    for basis in POLY_BASES:
        if basis in K_THEORETIC:
            continue
        for n, top in ((3, max_degree), (4, min(4, max_degree))):
            for k in range(1, top + 1):
                yield f"{basis} I_{n},{k}", poly_transition(basis, n, k)


def _suite_mobius(report: Report, quick: bool = False) -> None:
    from .posets import (
        dominance_partitions,
        dominance_strong,
        dominance_weak,
        incidence_matrix,
        invert_triangular,
        is_identity,
        mobius,
    )

    posets = [dominance_partitions(m) for m in range(1, 8)]
    posets += [dominance_strong(n, k) for k in range(1, 7) for n in range(1, 7)]
    posets += [dominance_weak(3, k) for k in range(0, 5)]
    for P in posets:
        xi = incidence_matrix(P)
        mu = {(x, y): mobius(P, x, y) for x in P.elements for y in P.elements if P.leq(x, y)}
        prod: dict = {}
        for (x, z), v in xi.entries.items():
            for y in xi.poset.elements:
                w = mu.get((z, y), 0)
                if w:
                    prod[(x, y)] = prod.get((x, y), 0) + v * w
        report.add(f"xi * mu = delta on {P.name}", is_identity(prod, P.elements), "product is not the identity")
    for m in range(1, 9):
        P = dominance_partitions(m)
        bad = next(((x, y) for x in P.elements for y in P.elements if P.leq(x, y) and mobius(P, x, y) not in (-1, 0, 1)), None)
        report.add(f"mu in {{0,1,-1}} on {P.name}", bad is None, f"mu{bad} = {mobius(P, *bad)}" if bad else "")
    for name, eta in _transitions_up_to(4 if quick else 6):
        if eta.is_unitriangular():
            from .posets import invert

            a, b = invert(eta, "chains"), invert(eta, "backsub")
        else:
            a, b = invert_triangular(eta, "chains"), invert_triangular(eta, "backsub")
        _check_equal(report, f"chains = backsub for {name}", a.entries, b.entries)


# ---------------------------------------------------------------------------
# suite: unitriangular


def _suite_unitriangular(report: Report, quick: bool = False) -> None:
    from .core import dominance_leq, dominance_prime_leq, z_factor
    from .hall_littlewood import hl_kostka
    from .polybases import K_THEORETIC, graded_leq
    from .qsym import qsym_kostka
    from .symfn import kostka

    top = 5 if quick else 7
    for m in range(1, top + 1):
        P = partitions(m)
        bad = next(((la, mu) for la in P for mu in P
                    if (la == mu and kostka(la, mu) != 1) or (kostka(la, mu) and not dominance_leq(la, mu))), None)
        report.add(f"Kostka unitriangular on Q_{m}", bad is None, f"K{bad} = {kostka(*bad)}" if bad else "")
        for t in (0, Fraction(1, 2), -1, 2):
            bad = next(((la, mu) for la in P for mu in P
                        if (la == mu and hl_kostka(la, mu, as_rational(t)) != 1)
                        or (la != mu and hl_kostka(la, mu, as_rational(t)) and not dominance_leq(la, mu))), None)
            report.add(f"Hall-Littlewood t={t} unitriangular on Q_{m}", bad is None, f"at {bad}" if bad else "")
    kmax = 5 if quick else 6
    for k in range(1, kmax + 1):
        comps = strong_compositions(k)
        for flavor, leq in (("I", dominance_leq), ("S", dominance_prime_leq)):
            bad = None
            for a in comps:
                for b in comps:
                    v = qsym_kostka(flavor, a, b)
                    if (a == b and v != 1) or (a != b and v and not leq(a, b)):
                        bad = (a, b, v)
                        break
                if bad:
                    break
            report.add(f"K^{flavor} unitriangular, k={k}", bad is None, f"K^{flavor}{bad[:2]} = {bad[2]}" if bad else "")
        bad = None
        for a in comps:
            mult = 1
            for v in set(a):
                for j in range(1, a.count(v) + 1):
                    mult *= j
            prod_parts = 1
            for v in a:
                prod_parts *= v
            want = {"p": mult, "psi": Fraction(z_factor(a), prod_parts), "phi": Fraction(z_factor(a), prod_parts)}
            for flavor, w in want.items():
                got = qsym_kostka(flavor, a, a)
                if got != w:
                    bad = (flavor, a, got, w)
                    break
            if bad:
                break
        report.add(f"power-sum diagonals, k={k}", bad is None, f"K^{bad[0]}({bad[1]},{bad[1]}) = {bad[2]}, expected {bad[3]}" if bad else "")
    for n in (3, 4):
        for k in range(0, 5):
            for basis in POLY_BASES:
                leq = graded_leq if basis in K_THEORETIC else dominance_leq
                bad = None
                for a in weak_compositions(k, n):
                    p = expand_poly(basis, a)
                    if p.coeff(a) != 1:
                        bad = f"coefficient of x^{a} in {basis}_{a} is {p.coeff(a)}"
                        break
                    off = next((w for w in p.terms if w != a and not leq(w, a)), None)
                    if off is not None:
                        bad = f"{basis}_{a} has x^{off} outside its down-set"
                        break
                report.add(f"{basis} unitriangular on V_{n},{k}", bad is None, bad or "")


# ---------------------------------------------------------------------------
# suite: pipeline-vs-oracle


def _nonnegative_integers(coeffs: dict) -> bool:
    return all(v >= 0 and Fraction(v).denominator == 1 for v in coeffs.values())


def _suite_pipeline(report: Report, quick: bool = False) -> None:
    from .hall_littlewood import hl_structure
    from .polybases import poly_structure
    from .qsym import qsym_structure
    from .symfn import structure_constants_classic

    smax = 3 if quick else 4
    sym_idx = [la for k in range(1, smax + 1) for la in partitions(k)]
    for mu in sym_idx:
        for nu in sym_idx:
            if nu < mu:
                continue
            n = sum(mu) + sum(nu)
            got = structure_constants_classic("s", mu, nu, n)
            want = oracle_structure("s", mu, nu, n)
            _check_equal(report, f"s {format_index(mu)} * {format_index(nu)}", got, want)
            report.add(f"LR nonnegative {format_index(mu)} * {format_index(nu)}", _nonnegative_integers(got), str(got))

    qmax = 4 if quick else 6
    pairs = [(a, b) for tot in range(2, qmax + 1) for ka in range(1, tot) for a in strong_compositions(ka) for b in strong_compositions(tot - ka)]
    for basis in QSYM_BASES:
        bad = None
        neg = None
        for a, b in pairs:
            n = sum(a) + sum(b)
            got = qsym_structure(basis, a, b, n)
            want = oracle_structure(basis, a, b, n)
            if got != want:
                bad = f"{format_index(a)} * {format_index(b)}: {_first_mismatch(got, want)}"
                break
            if basis == "F" and not _nonnegative_integers(got):
                neg = f"{format_index(a)} * {format_index(b)} = {got}"
        report.add(f"{basis} products |a|+|b| <= {qmax}", bad is None, bad or "")
        if basis == "F":
            report.add("F constants nonnegative integers", neg is None, neg or "")

    n = 4
    for basis in POLY_BASES:
        bad = None
        neg = None
        for tot in range(0, 5):
            for ka in range(0, tot + 1):
                for a in weak_compositions(ka, n):
                    for b in weak_compositions(tot - ka, n):
                        got = poly_structure(basis, a, b, n)
                        want = oracle_structure(basis, a, b, n)
                        if got != want:
                            bad = bad or f"{format_index(a)} * {format_index(b)}: {_first_mismatch(got, want)}"
                        if basis in ("schubert", "mslide", "fslide") and not _nonnegative_integers(got):
                            neg = neg or f"{format_index(a)} * {format_index(b)} = {got}"
            if quick and tot >= 3:
                break
        report.add(f"{basis} products |a|+|b| <= 4, n = 4", bad is None, bad or "")
        if basis in ("schubert", "mslide", "fslide"):
            report.add(f"{basis} constants nonnegative integers", neg is None, neg or "")

    for basis, op in OPERATOR_ORACLES.items():
        bad = None
        for n, top in ((2, 4), (3, 4), (4, 3)):
            for k in range(0, top + 1):
                for a in weak_compositions(k, n):
                    if expand_poly(basis, a) != op(a):
                        bad = bad or f"{basis}_{format_index(a)}"
        report.add(f"{basis} expansion = divided-difference operators", bad is None, bad or "")

    hl_idx = [la for k in range(1, 4) for la in partitions(k)]
    for t in (0, Fraction(1, 2)):
        bad = None
        for la in hl_idx:
            for mu in hl_idx:
                n = sum(la) + sum(mu)
                got = hl_structure(la, mu, t, n)
                want = oracle_structure("hl", la, mu, n, t)
                if got != want:
                    bad = bad or f"{format_index(la)} * {format_index(mu)}: {_first_mismatch(got, want)}"
        report.add(f"Hall-Littlewood t={t} products sizes <= 3", bad is None, bad or "")


# ---------------------------------------------------------------------------
# suite: plethysm


def _suite_plethysm(report: Report, quick: bool = False) -> None:
    from .core import is_symmetric
    from .plethysm import degree_check, direct_substitution, plethysm_monomial_coeffs, plethysm_polynomial

    for f in ("s", "e", "h"):
        for n in range(1, 5):
            want = dict(expand_classic(f, (2,), n).terms) if n >= 1 else {}
            _check_equal(report, f"{f}2[p1] = {f}2, n={n}", dict(plethysm_polynomial(f, (2,), "p", (1,), n).terms), want)
            _check_equal(report, f"p1[{f}2] = {f}2, n={n}", dict(plethysm_polynomial("p", (1,), f, (2,), n).terms), want)
    want = {la: c for la, c in _m_coeffs(expand_classic("p", (4,), 3)).items()}
    _check_equal(report, "p2[p2] = p4, n=3", plethysm_monomial_coeffs("p", (2,), "p", (2,), 3), want)
    _check_equal(report, "e2[p2] = m22, n=4", plethysm_monomial_coeffs("e", (2,), "p", (2,), 4), {(2, 2): 1})

    def compare(f, la, g, mu, n=4):
        a = plethysm_polynomial(f, la, g, mu, n)
        b = direct_substitution(f, la, g, mu, n)
        if a != b:
            return "differs from direct substitution"
        if not is_symmetric(a):
            return "not symmetric"
        if not degree_check(plethysm_monomial_coeffs(f, la, g, mu, n), la, mu):
            return "wrong degree"
        return ""

    small = [(1,), (2,), (1, 1)]
    for f in CLASSIC_BASES:
        for g in CLASSIC_BASES:
            bad = next((f"{f}{la}[{g}{mu}]: {e}" for la in small for mu in small if (e := compare(f, la, g, mu))), None)
            report.add(f"{f}[{g}] sizes <= 2", bad is None, bad or "")
    mid = [la for k in (1, 2, 3) for la in partitions(k)]
    if quick:
        mid = mid[:4]
    for f in ("s", "h"):
        for g in ("s", "h"):
            bad = next((f"{f}{la}[{g}{mu}]: {e}" for la in mid for mu in mid if (e := compare(f, la, g, mu))), None)
            report.add(f"{f}[{g}] sizes <= 3", bad is None, bad or "")


def _m_coeffs(p: SparsePoly) -> dict:
    return {tuple(v for v in e if v): c for e, c in p.terms.items() if all(e[i] >= e[i + 1] for i in range(len(e) - 1))}


# ---------------------------------------------------------------------------
# suite: bridge


def _suite_bridge(report: Report, quick: bool = False) -> None:
    from .bridge import SymmetryError, schur_from_qsym

    n = 5
    top = 4 if quick else 5
    for basis in CLASSIC_BASES:
        bad = None
        for k in range(1, top + 1):
            for la in partitions(k):
                p = expand_classic(basis, la, n)
                want = extract_in_basis(p, "s", n)
                for qbasis in ("F", "M"):
                    got = schur_from_qsym(extract_in_basis(p, qbasis, n), qbasis, n)
                    if got != want:
                        bad = bad or f"{basis}_{format_index(la)} via {qbasis}: {_first_mismatch(got, want)}"
        report.add(f"round trip for {basis}, degree <= {top}", bad is None, bad or "")
    try:
        schur_from_qsym({(2, 1): 1}, "M", 3)
        report.add("non-symmetric input rejected", False, "M_(2,1) was accepted")
    except SymmetryError as exc:
        report.add("non-symmetric input rejected", exc.pair == ((2, 1, 0), (1, 2, 0)), str(exc))


# ---------------------------------------------------------------------------


SUITES: dict[str, Callable] = {
    "paper-examples": lambda r, quick=False: _suite_worked_examples(r),
    "mobius": _suite_mobius,
    "unitriangular": _suite_unitriangular,
    "pipeline-vs-oracle": _suite_pipeline,
    "plethysm": _suite_plethysm,
    "bridge": _suite_bridge,
}


def verify_suite(name: str, quick: bool = False) -> Report:
    """Run a named suite; every case records pass/fail and its first counterexample."""
    if not name:
        raise DomainError("empty suite name")
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = Report(name)
    start = time.perf_counter()
    SUITES[name](report, quick=quick)
    report.seconds = time.perf_counter() - start
    return report


__all__ = [
    "Family",
    "family",
    "leading_key",
    "leading_term",
    "reassemble",
    "StallError",
    "distinct_leading_terms",
    "extract_in_basis",
    "oracle_structure",
    "swap_variables",
    "divided_difference",
    "demazure",
    "key_by_operators",
    "atom_by_operators",
    "schubert_by_operators",
    "OPERATOR_ORACLES",
    "Case",
    "Report",
    "SUITES",
    "verify_suite",
]
