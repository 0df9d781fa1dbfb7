"""Finite posets, chain enumeration, and inversion of unitriangular matrices.

Two independent inverters are provided.  :func:`invert_unitriangular_chains`
evaluates the alternating sum over chains

    rho(x, y) = sum_l (-1)^l sum_{x < z_1 < ... < z_{l-1} < y} eta(x, z_1) ... eta(z_{l-1}, y)

by accumulating the weighted chain sums one length at a time, so the positive
(even length) and negative (odd length) parts stay separate.
:func:`invert_unitriangular_backsub` solves ``eta * rho = 1`` row by row along a
linear extension.  The second is the production route; the first is kept
because it is the signed-count formula itself, and the two are cross-checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .core import (
    DomainError,
    Rational,
    as_rational,
    canonical_key,
    dominance_leq,
    dominance_prime_leq,
    partitions,
    rational_to_json,
    strong_compositions,
    weak_compositions,
)


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite poset given by its elements and a ``leq`` predicate.

    ``grading``, if given, must be strictly increasing along the order
    (``x < y`` implies ``grading(x) < grading(y)``); it lets the linear
    extension be found by sorting instead of from the full relation.
    """

    name: str
    elements: tuple
    leq: Callable[[Hashable, Hashable], bool] = field(repr=False)
    grading: Callable | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise DomainError(f"{self.name}: repeated elements")

    def __contains__(self, x) -> bool:
        return x in self._position

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _position(self) -> dict:
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def _above(self) -> dict:
        """Strict up-sets, memoised once per poset."""
        return {
            x: tuple(y for y in self.elements if y != x and self.leq(x, y))
            for x in self.elements
        }

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def strictly_above(self, x) -> tuple:
        return self._above[x]

    def interval(self, x, y) -> tuple:
        if not self.leq(x, y):
            return ()
        return tuple(z for z in self.elements if self.leq(x, z) and self.leq(z, y))

    @cached_property
    def linear_extension(self) -> tuple:
        """Topological order, ties broken by :func:`canonical_key`."""
        if self.grading is not None:
            return tuple(sorted(self.elements, key=lambda x: (self.grading(x), _sort_key(x))))
        below_count = {x: 0 for x in self.elements}
        for x in self.elements:
            for y in self._above[x]:
                below_count[y] += 1
        ready = sorted((x for x, c in below_count.items() if c == 0), key=_sort_key)
        order = []
        while ready:
            x = ready.pop(0)
            order.append(x)
            for y in self._above[x]:
                below_count[y] -= 1
                if below_count[y] == 0:
                    ready.append(y)
            ready.sort(key=_sort_key)
        if len(order) != len(self.elements):
            raise DomainError(f"{self.name}: relation has a cycle")
        return tuple(order)

    def covers(self) -> list[tuple]:
        out = []
        for x in self.elements:
            ups = self._above[x]
            for y in ups:
                if not any(self.lt(z, y) for z in ups if z != y):
                    out.append((x, y))
        return out


def dominance_grading(x) -> tuple:
    """Strictly increasing along dominance: smaller prefix sums come later."""
    total, out = 0, []
    for v in x:
        total += v
        out.append(-total)
    return tuple(out)


def _sort_key(x):
    if isinstance(x, tuple) and all(isinstance(v, int) for v in x):
        return (0, canonical_key(x))
    return (1, repr(x))


# ---------------------------------------------------------------------------
# the named families


def dominance_partitions(m: int) -> Poset:
    """Q_m: partitions of ``m`` under dominance."""
    return Poset(f"Q_{m}", partitions(m), dominance_leq, lambda a: dominance_grading(a + (0,) * (m - len(a))))


def dominance_strong(n: int, k: int) -> Poset:
    """Z_{n,k}: strong compositions of ``k`` with at most ``n`` parts."""
    return Poset(f"Z_{n},{k}", strong_compositions(k, n), dominance_leq, lambda a: dominance_grading(a + (0,) * (k - len(a))))


def sorted_dominance(n: int, k: int) -> Poset:
    """D_{n,k}: strong compositions under the sorted-then-dominance order."""
    return Poset(f"D_{n},{k}", strong_compositions(k, n), dominance_prime_leq, _sorted_grading(k))


def _sorted_grading(k: int) -> Callable:
    def key(a):
        s = tuple(sorted(a, reverse=True))
        return (dominance_grading(s + (0,) * (k - len(s))), dominance_grading(a + (0,) * (k - len(a))))
    return key


def dominance_weak(n: int, k: int) -> Poset:
    """I_{n,k}: weak compositions of ``k`` of length ``n``."""
    return Poset(f"I_{n},{k}", weak_compositions(k, n), dominance_leq, dominance_grading)


def lehmer_poset(n: int, k: int) -> Poset:
    """L_{n,k}: Lehmer codes of permutations in S_n with ``k`` inversions."""
    elems = tuple(a for a in weak_compositions(k, n) if all(a[i] <= n - 1 - i for i in range(n)))
    return Poset(f"L_{n},{k}", elems, dominance_leq, dominance_grading)


def from_relation(elements: Iterable, pairs: Iterable[tuple], name: str = "explicit") -> Poset:
    """Poset generated by ``pairs`` (reflexive-transitive closure)."""
    elements = tuple(elements)
    up = {x: {x} for x in elements}
    for x, y in pairs:
        if x not in up or y not in up:
            raise DomainError(f"pair {(x, y)} mentions an unknown element")
        up[x].add(y)
    changed = True
    while changed:
        changed = False
        for x in elements:
            new = set().union(*(up[y] for y in up[x]))
            if new != up[x]:
                up[x] = new
                changed = True
    for x in elements:
        for y in up[x]:
            if x != y and x in up[y]:
                raise DomainError(f"relation is not antisymmetric at {(x, y)}")
    frozen = {x: frozenset(v) for x, v in up.items()}
    return Poset(name, elements, lambda a, b: b in frozen[a])


POSET_FAMILIES = {
    "dominance-partitions": "Q_m",
    "dominance-strong": "Z_{n,k}",
    "sorted-dominance": "D_{n,k}",
    "dominance-weak": "I_{n,k}",
    "lehmer": "L_{n,k}",
}


# ---------------------------------------------------------------------------
# chains and Moebius


def enumerate_chains(P: Poset, x, y, length: int) -> list[tuple]:
    """All chains ``x < z_1 < ... < z_{length-1} < y`` in the interval [x, y]."""
    if x not in P or y not in P:
        raise DomainError("element not in poset")
    if not P.leq(x, y):
        raise DomainError(f"{x} and {y} are not comparable as x <= y")
    if length < 0:
        raise DomainError("negative chain length")
    if length == 0:
        return [(x,)] if x == y else []
    inside = set(P.interval(x, y))

    out = []

    def extend(chain: tuple, remaining: int):
        last = chain[-1]
        if remaining == 1:
            if P.lt(last, y):
                out.append(chain + (y,))
            return
        for z in P.strictly_above(last):
            if z in inside and z != y:
                extend(chain + (z,), remaining - 1)

    extend((x,), length)
    return out


def chain_counts(P: Poset, x, y) -> list[int]:
    """``[|C_0(x,y)|, |C_1(x,y)|, ...]`` computed by counting chains length by length."""
    if not P.leq(x, y):
        return []
    inside = frozenset(P.interval(x, y))
    counts = [1 if x == y else 0]
    layer = {x: 1}
    while layer:
        nxt: dict = {}
        for z, c in layer.items():
            for w in P.strictly_above(z):
                if w in inside:
                    nxt[w] = nxt.get(w, 0) + c
        layer = nxt
        if layer:
            counts.append(layer.get(y, 0))
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def mobius_split(P: Poset, x, y) -> tuple[int, int]:
    """``(mu_plus, mu_minus)``: chains of even and of odd length from ``x`` to ``y``."""
    counts = chain_counts(P, x, y)
    return sum(counts[0::2]), sum(counts[1::2])


def mobius(P: Poset, x, y) -> int:
    """Alternating chain count; 0 when ``x`` is not below ``y``."""
    plus, minus = mobius_split(P, x, y)
    return plus - minus


def height(P: Poset) -> int:
    """Number of elements in a longest chain."""
    longest = {}
    for x in reversed(P.linear_extension):
        longest[x] = 1 + max((longest[y] for y in P.strictly_above(x)), default=0)
    return max(longest.values(), default=0)


def meet_join(P: Poset, x, y) -> tuple:
    """Unique greatest lower and least upper bounds, or ``None`` where they fail to exist."""
    lower = [z for z in P.elements if P.leq(z, x) and P.leq(z, y)]
    upper = [z for z in P.elements if P.leq(x, z) and P.leq(y, z)]
    meets = [z for z in lower if all(P.leq(w, z) for w in lower)]
    joins = [z for z in upper if all(P.leq(z, w) for w in upper)]
    return (meets[0] if len(meets) == 1 else None, joins[0] if len(joins) == 1 else None)


def is_lattice(P: Poset) -> bool:
    return all(None not in meet_join(P, x, y) for x, y in itertools.combinations(P.elements, 2))


# ---------------------------------------------------------------------------
# transition matrices


@dataclass(eq=False)
class TransitionMatrix:
    """Sparse square matrix on the elements of ``poset``.

    With ``direction="up"`` an entry ``(a, b)`` may be nonzero only if ``a <= b``;
    with ``direction="down"`` only if ``b <= a``.
    """

    poset: Poset
    entries: dict
    direction: str = "up"

    def __post_init__(self):
        if self.direction not in ("up", "down"):
            raise DomainError(f"unknown direction {self.direction!r}")
        clean = {}
        for (a, b), v in self.entries.items():
            v = as_rational(v)
            if not v:
                continue
            if a not in self.poset or b not in self.poset:
                raise DomainError(f"entry {(a, b)} outside {self.poset.name}")
            if not self._allowed(a, b):
                raise DomainError(f"entry {(a, b)} violates {self.direction}-triangularity")
            clean[(a, b)] = v
        self.entries = clean

    def _allowed(self, a, b) -> bool:
        return self.poset.leq(a, b) if self.direction == "up" else self.poset.leq(b, a)

    def __getitem__(self, key) -> Rational:
        return self.entries.get(key, 0)

    def diagonal(self) -> dict:
        return {x: self[x, x] for x in self.poset.elements}

    def is_unitriangular(self) -> bool:
        return all(v == 1 for v in self.diagonal().values())

    def row(self, a) -> dict:
        return {b: v for (r, b), v in self.entries.items() if r == a}

    def rows(self) -> dict:
        out: dict = {x: {} for x in self.poset.elements}
        for (a, b), v in self.entries.items():
            out[a][b] = v
        return out

    def __matmul__(self, other: "TransitionMatrix") -> dict:
        right = other.rows()
        out: dict = {}
        for (a, z), v in self.entries.items():
            for b, w in right.get(z, {}).items():
                out[(a, b)] = out.get((a, b), 0) + v * w
        return {k: as_rational(v) for k, v in out.items() if v}

    def to_json(self) -> dict:
        rows = sorted(self.entries.items(), key=lambda kv: (_sort_key(kv[0][0]), _sort_key(kv[0][1])))
        return {
            "poset": self.poset.name,
            "entries": [
                {"row": list(a), "col": list(b), **rational_to_json(v)} for (a, b), v in rows
            ],
        }


def _require_unitriangular(eta: TransitionMatrix) -> None:
    bad = [x for x, v in eta.diagonal().items() if v != 1]
    if bad:
        raise DomainError(f"not unitriangular: diagonal entry at {bad[0]} is {eta[bad[0], bad[0]]}")


def _up_rows(eta: TransitionMatrix) -> tuple[Callable, Callable]:
    """Accessors presenting ``eta`` as an upper-triangular matrix in its poset.

    For a "down" matrix the poset is read upside down: the transpose of the
    inverse is the inverse of the transpose.
    """
    rows = eta.rows()
    if eta.direction == "up":
        return (lambda a: rows[a]), (lambda a, b: (a, b))
    cols: dict = {x: {} for x in eta.poset.elements}
    for (a, b), v in eta.entries.items():
        cols[b][a] = v
    return (lambda a: cols[a]), (lambda a, b: (b, a))


def weighted_chain_sums(eta: TransitionMatrix, x) -> list[dict]:
    """``W[l][y]``: sum over chains x < z_1 < ... < y of length ``l`` of the edge weights."""
    succ, _ = _up_rows(eta)
    layers = [{x: 1}]
    while True:
        nxt: dict = {}
        for z, w in layers[-1].items():
            for y, v in succ(z).items():
                if y == z:
                    continue
                nxt[y] = nxt.get(y, 0) + w * v
        nxt = {y: v for y, v in nxt.items() if v}
        if not nxt:
            return layers
        layers.append(nxt)


def invert_unitriangular_chains(eta: TransitionMatrix) -> TransitionMatrix:
    """Inverse of ``eta`` by the signed sum over chains, length by length."""
    _require_unitriangular(eta)
    _, orient = _up_rows(eta)
    entries = {}
    for x in eta.poset.elements:
        total: dict = {}
        for length, layer in enumerate(weighted_chain_sums(eta, x)):
            sign = -1 if length % 2 else 1
            for y, w in layer.items():
                total[y] = total.get(y, 0) + sign * w
        for y, v in total.items():
            if v:
                entries[orient(x, y)] = v
    return TransitionMatrix(eta.poset, entries, eta.direction)


def invert_unitriangular_backsub(eta: TransitionMatrix) -> TransitionMatrix:
    """Inverse of ``eta`` by substitution along a linear extension."""
    _require_unitriangular(eta)
    succ, orient = _up_rows(eta)
    order = eta.poset.linear_extension
    pos = {x: i for i, x in enumerate(order)}
    # rho(x, y) = delta(x, y) - sum_{x < z <= y} eta(x, z) rho(z, y), solved from the top down
    solved: dict = {}
    for x in reversed(order):
        row: dict = {x: 1}
        for z, v in succ(x).items():
            if z == x:
                continue
            if pos[z] <= pos[x]:
                raise DomainError(f"{eta.poset.name}: linear extension is inconsistent at {z}")
            for y, r in solved[z].items():
                row[y] = row.get(y, 0) - v * r
        solved[x] = {y: as_rational(v) for y, v in row.items() if v}
    entries = {orient(x, y): v for x, row in solved.items() for y, v in row.items()}
    return TransitionMatrix(eta.poset, entries, eta.direction)


def invert_triangular(eta: TransitionMatrix, mode: str = "backsub") -> TransitionMatrix:
    """Inverse of a triangular matrix with nonzero (not necessarily unit) diagonal.

    Rows are rescaled to make the diagonal 1, the unitriangular inverse is taken
    by ``mode`` ("chains" or "backsub"), and the scaling is undone on the columns.
    """
    diag = eta.diagonal()
    zero = [x for x, v in diag.items() if not v]
    if zero:
        raise DomainError(f"singular: zero diagonal at {zero[0]}")
    scaled = {(a, b): Fraction(v) / diag[a] for (a, b), v in eta.entries.items()}
    unit = TransitionMatrix(eta.poset, scaled, eta.direction)
    inv = invert(unit, mode)
    entries = {(a, b): Fraction(v) / diag[b] for (a, b), v in inv.entries.items()}
    return TransitionMatrix(eta.poset, entries, eta.direction)


def invert(eta: TransitionMatrix, mode: str = "backsub") -> TransitionMatrix:
    if mode == "chains":
        return invert_unitriangular_chains(eta)
    if mode == "backsub":
        return invert_unitriangular_backsub(eta)
    raise DomainError(f"unknown inversion mode {mode!r}")


def incidence_matrix(P: Poset) -> TransitionMatrix:
    """The zeta function ``xi(x, y) = [x <= y]``."""
    return TransitionMatrix(
        P, {(x, y): 1 for x in P.elements for y in P.elements if P.leq(x, y)}, "up"
    )


def is_identity(entries: Mapping, elements: Sequence) -> bool:
    want = {(x, x): 1 for x in elements}
    return {k: v for k, v in entries.items() if v} == want


def max_abs_mobius(P: Poset) -> int:
    """Largest |mu(x, y)| over comparable pairs; reported, never asserted."""
    return max(
        (abs(mobius(P, x, y)) for x in P.elements for y in P.elements if P.leq(x, y)),
        default=0,
    )


def iter_pairs(P: Poset) -> Iterator[tuple]:
    return itertools.product(P.elements, repeat=2)
