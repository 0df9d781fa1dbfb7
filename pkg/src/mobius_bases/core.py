"""Ground combinatorial types and exact sparse polynomial arithmetic.

Index objects are plain tuples of ints:

* a partition is a weakly decreasing tuple of positive ints, e.g. ``(2, 1)``;
* a strong composition is a tuple of positive ints, e.g. ``(1, 2, 1)``;
* a weak composition is a fixed-length tuple of nonnegative ints, e.g. ``(0, 2, 1)``.

Coefficients are ``int`` or :class:`fractions.Fraction` and never floats.

Dominance follows the convention used throughout this package:
``a`` is below ``b`` (``dominance_leq(a, b)``) when every prefix sum of ``a`` is
*at least* the corresponding prefix sum of ``b``.  So ``(2, 1)`` is below
``(1, 1, 1)`` and the one-row partition ``(k,)`` is the bottom element.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Union[int, Fraction]
Index = tuple[int, ...]


class DomainError(ValueError):
    """An argument is outside the domain of an operation."""


def as_rational(value) -> Rational:
    """Normalise ints, Fractions and ``"p/q"`` strings to int or Fraction."""
    if isinstance(value, bool):
        raise DomainError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        try:
            value = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"malformed rational {value!r}") from exc
        return as_rational(value)
    raise DomainError(f"not a rational: {value!r}")


# ---------------------------------------------------------------------------
# partitions and compositions


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strong_composition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts)


def is_weak_composition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts)


def check_partition(parts: Sequence[int]) -> Index:
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if not is_partition(parts):
        raise DomainError(f"not a partition: {parts}")
    return parts


def check_strong(parts: Sequence[int]) -> Index:
    parts = tuple(parts)
    if not is_strong_composition(parts):
        raise DomainError(f"not a strong composition: {parts}")
    return parts


def check_weak(parts: Sequence[int]) -> Index:
    parts = tuple(parts)
    if not is_weak_composition(parts):
        raise DomainError(f"not a weak composition: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions(k: int, max_part: int | None = None, max_len: int | None = None) -> tuple[Index, ...]:
    """All partitions of ``k`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = k
    if k == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(k - first, first, rest_len):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def strong_compositions(k: int, max_len: int | None = None) -> tuple[Index, ...]:
    """Strong compositions of ``k`` with at most ``max_len`` parts."""
    if k == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for first in range(1, k + 1):
        rest_len = None if max_len is None else max_len - 1
        for rest in strong_compositions(k - first, rest_len):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def weak_compositions(k: int, n: int) -> tuple[Index, ...]:
    """The set V_{n,k}: length-``n`` vectors of nonnegative ints summing to ``k``."""
    if n == 0:
        return ((),) if k == 0 else ()
    out = []
    for first in range(k, -1, -1):
        for rest in weak_compositions(k - first, n - 1):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(la: Sequence[int]) -> Index:
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def pad(parts: Sequence[int], n: int) -> Index:
    parts = tuple(parts)
    if len(parts) > n:
        if any(parts[n:]):
            raise DomainError(f"{parts} does not fit in {n} entries")
        return parts[:n]
    return parts + (0,) * (n - len(parts))


def prefix_sums(parts: Sequence[int]) -> list[int]:
    return list(itertools.accumulate(parts))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` is weakly below ``b``: same size and prefix sums of ``a`` are >= those of ``b``."""
    if sum(a) != sum(b):
        return False
    n = max(len(a), len(b))
    sa = prefix_sums(pad(a, n))
    sb = prefix_sums(pad(b, n))
    return all(x >= y for x, y in zip(sa, sb))


def dominance_lt(a: Sequence[int], b: Sequence[int]) -> bool:
    return tuple(a) != tuple(b) and dominance_leq(a, b)


def refinement_blocks(b: Sequence[int], a: Sequence[int]) -> tuple[Index, ...] | None:
    """Split ``b`` into consecutive blocks summing to the parts of ``a``; ``None`` if impossible."""
    blocks = []
    pos = 0
    for part in a:
        total = 0
        start = pos
        while total < part and pos < len(b):
            total += b[pos]
            pos += 1
        if total != part:
            return None
        blocks.append(tuple(b[start:pos]))
    if pos != len(b):
        return None
    return tuple(blocks)


def refines(b: Sequence[int], a: Sequence[int]) -> bool:
    """True iff ``a`` is obtained from ``b`` by adding consecutive parts."""
    return refinement_blocks(b, a) is not None


def coarsenings(a: Sequence[int]) -> Iterator[Index]:
    """Every strong composition that ``a`` refines, including ``a`` itself."""
    a = tuple(a)
    if not a:
        yield ()
        return
    for cuts in itertools.product((False, True), repeat=len(a) - 1):
        out = [a[0]]
        for part, merge in zip(a[1:], cuts):
            if merge:
                out[-1] += part
            else:
                out.append(part)
        yield tuple(out)


def refinements(a: Sequence[int]) -> Iterator[Index]:
    """Every strong composition refining ``a``, including ``a`` itself."""
    pieces = [strong_compositions(p) for p in a]
    for choice in itertools.product(*pieces):
        yield tuple(itertools.chain.from_iterable(choice))


def sort_partition(parts: Sequence[int]) -> Index:
    return tuple(sorted((p for p in parts if p), reverse=True))


def flat(parts: Sequence[int]) -> Index:
    return tuple(p for p in parts if p)


def z_factor(parts: Sequence[int]) -> int:
    """``z = prod_i i^{m_i} m_i!`` over the nonzero multiplicities ``m_i``."""
    mult = Counter(p for p in parts if p)
    return prod(i**m * factorial(m) for i, m in mult.items())


def sort_flat_z(parts: Sequence[int]) -> tuple[Index, Index, int]:
    return sort_partition(parts), flat(parts), z_factor(parts)


def dominance_prime_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """The order used to triangularise quasisymmetric Schur polynomials.

    Compositions whose sorted partitions differ are compared by strict dominance
    of the sorted partitions (``sort(a)`` strictly below ``sort(b)``); compositions
    with the same sorted partition are compared by ``a`` below ``b``.
    """
    a, b = tuple(a), tuple(b)
    if sum(a) != sum(b):
        raise DomainError(f"size mismatch: {a} vs {b}")
    sa, sb = sort_partition(a), sort_partition(b)
    if sa != sb:
        return dominance_lt(sa, sb)
    return dominance_leq(a, b)


def canonical_key(index: Sequence[int]) -> tuple:
    """Deterministic total order on index objects: by size, then reverse-lexicographic."""
    return (sum(index), tuple(reversed(tuple(index))), len(index))


# ---------------------------------------------------------------------------
# permutations and Lehmer codes


def canonical_permutation(w: Sequence[int]) -> Index:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"not a permutation: {w}")
    while w and w[-1] == len(w):
        w = w[:-1]
    return w


def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def lehmer_code(w: Sequence[int]) -> Index:
    """``c_i = #{j > i : w_j < w_i}``; the output has the same length as ``w``."""
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"not a permutation: {w}")
    return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i]) for i in range(len(w)))


def code_inverse(code: Sequence[int]) -> Index:
    """The permutation of ``len(code)`` letters with the given Lehmer code."""
    code = check_weak(code)
    m = len(code)
    for i, c in enumerate(code):
        if c > m - 1 - i:
            raise DomainError(f"{code} violates the Lehmer bound at position {i + 1}")
    remaining = list(range(1, m + 1))
    return tuple(remaining.pop(c) for c in code)


def stable_code_inverse(code: Sequence[int]) -> Index:
    """Like :func:`code_inverse` after padding ``code`` with enough zeros."""
    code = check_weak(code)
    m = max((i + c + 1 for i, c in enumerate(code)), default=0)
    return canonical_permutation(code_inverse(pad(code, max(m, len(code)))))


# ---------------------------------------------------------------------------
# diagrams


Cell = tuple[int, int]


def diagram(alpha: Sequence[int]) -> frozenset[Cell]:
    """Row ``i`` holds ``alpha_i`` left-justified cells; rows and columns are 1-based."""
    return frozenset((i + 1, j) for i, a in enumerate(alpha) for j in range(1, a + 1))


def weight(cells: Iterable[Cell], n: int) -> Index:
    w = [0] * n
    for i, _ in cells:
        if i > n:
            raise DomainError(f"cell in row {i} outside {n} rows")
        w[i - 1] += 1
    return tuple(w)


# ---------------------------------------------------------------------------
# sparse polynomials


class SparsePoly:
    """A polynomial in ``nvars`` variables with exact rational coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Rational] | None = None):
        self.nvars = nvars
        clean: dict[Index, Rational] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise DomainError(f"exponent {exp} has length != {nvars}")
            if any(e < 0 for e in exp):
                raise DomainError(f"negative exponent {exp}")
            c = as_rational(c)
            if c:
                c = clean.get(exp, 0) + c
                if c:
                    clean[exp] = c
                else:
                    clean.pop(exp, None)
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Index, Rational]) -> "SparsePoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Rational = 1) -> "SparsePoly":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def constant(cls, nvars: int, c: Rational = 1) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "SparsePoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    def _check(self, other: "SparsePoly") -> None:
        if not isinstance(other, SparsePoly):
            raise TypeError(f"cannot combine SparsePoly with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DomainError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return SparsePoly._raw(self.nvars, out)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def scale(self, c: Rational) -> "SparsePoly":
        c = as_rational(c)
        if not c:
            return SparsePoly(self.nvars)
        return SparsePoly._raw(self.nvars, {e: as_rational(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict[Index, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly._raw(self.nvars, {e: as_rational(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        result = SparsePoly.constant(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, exp: Sequence[int]) -> Rational:
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise DomainError(f"exponent {exp} has length != {self.nvars}")
        return self.terms.get(exp, 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {dict(self.items())})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, c in reversed(self.items()):
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def poly_add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def poly_coeff(p: SparsePoly, exp: Sequence[int]) -> Rational:
    return p.coeff(exp)


def linear_combination(pairs: Iterable[tuple[Rational, SparsePoly]], nvars: int) -> SparsePoly:
    out: dict[Index, Rational] = {}
    for c, p in pairs:
        if not c:
            continue
        if p.nvars != nvars:
            raise DomainError(f"nvars mismatch: {p.nvars} vs {nvars}")
        for e, v in p.terms.items():
            out[e] = out.get(e, 0) + c * v
    return SparsePoly._raw(nvars, {e: as_rational(v) for e, v in out.items() if v})


def is_symmetric(p: SparsePoly) -> bool:
    return symmetry_violation(p) is None


def symmetry_violation(p: SparsePoly) -> tuple[Index, Index] | None:
    """A pair of exponents related by a transposition whose coefficients differ."""
    for exp, c in p.items():
        for i in range(p.nvars - 1):
            swapped = exp[:i] + (exp[i + 1], exp[i]) + exp[i + 2:]
            if p.terms.get(swapped, 0) != c:
                return exp, swapped
    return None


def is_quasisymmetric(p: SparsePoly) -> bool:
    by_flat: dict[Index, set] = {}
    for exp, c in p.terms.items():
        by_flat.setdefault(flat(exp), set()).add(c)
    for comp, coeffs in by_flat.items():
        if len(coeffs) != 1:
            return False
        c = next(iter(coeffs))
        for positions in itertools.combinations(range(p.nvars), len(comp)):
            exp = [0] * p.nvars
            for pos, part in zip(positions, comp):
                exp[pos] = part
            if p.terms.get(tuple(exp), 0) != c:
                return False
    return True


def monomial_symmetric(la: Sequence[int], n: int) -> SparsePoly:
    """``m_la`` in ``n`` variables: one term per distinct rearrangement."""
    la = check_partition(la)
    if len(la) > n:
        raise DomainError(f"partition {la} has more than {n} parts")
    return SparsePoly._raw(n, {e: 1 for e in distinct_rearrangements(pad(la, n))})


def distinct_rearrangements(values: Sequence[int]) -> Iterator[Index]:
    """Each distinct permutation of ``values`` exactly once."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts)
    n = len(values)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                word.append(v)
                yield from rec()
                word.pop()
                counts[v] += 1

    yield from rec()


def monomial_quasisymmetric(alpha: Sequence[int], n: int) -> SparsePoly:
    alpha = check_strong(alpha)
    if len(alpha) > n:
        raise DomainError(f"composition {alpha} has more than {n} parts")
    terms = {}
    for positions in itertools.combinations(range(n), len(alpha)):
        exp = [0] * n
        for pos, part in zip(positions, alpha):
            exp[pos] = part
        terms[tuple(exp)] = 1
    return SparsePoly._raw(n, terms)


# ---------------------------------------------------------------------------
# text and JSON forms


def format_index(index: Sequence[int]) -> str:
    return ",".join(str(p) for p in index)


def parse_index(text: str) -> Index:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise DomainError(f"malformed index string {text!r}") from exc
    if any(p < 0 for p in parts):
        raise DomainError(f"negative entry in index string {text!r}")
    return parts


def rational_to_json(c: Rational) -> dict[str, str]:
    c = Fraction(c)
    return {"num": str(c.numerator), "den": str(c.denominator)}


def rational_from_json(obj: Mapping[str, str]) -> Rational:
    try:
        return as_rational(Fraction(int(obj["num"]), int(obj["den"])))
    except (KeyError, ValueError, ZeroDivisionError, TypeError) as exc:
        raise DomainError(f"malformed rational {obj!r}") from exc


def coeff_map_to_json(coeffs: Mapping[Index, Rational]) -> list[dict]:
    """Canonically ordered ``[{"index": [...], "num": .., "den": ..}]``."""
    return [
        {"index": list(k), **rational_to_json(v)}
        for k, v in sorted(coeffs.items(), key=lambda kv: canonical_key(kv[0]))
        if v
    ]


def coeff_map_from_json(data: Iterable[Mapping]) -> dict[Index, Rational]:
    out: dict[Index, Rational] = {}
    for entry in data:
        try:
            key = tuple(int(x) for x in entry["index"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed coefficient entry {entry!r}") from exc
        out[key] = out.get(key, 0) + rational_from_json(entry)
    return {k: v for k, v in out.items() if v}


def poly_to_json(p: SparsePoly) -> dict:
    return {"nvars": p.nvars, "terms": coeff_map_to_json(p.terms)}


def poly_from_json(data: Mapping) -> SparsePoly:
    return SparsePoly(int(data["nvars"]), coeff_map_from_json(data["terms"]))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class LabeledDiagram:
    """Cells with a filled/ghost labelling; ``ghost`` is disjoint from ``filled``."""

    filled: frozenset
    ghost: frozenset = frozenset()

    @property
    def cells(self) -> frozenset:
        return self.filled | self.ghost

    def __len__(self) -> int:
        return len(self.filled) + len(self.ghost)
