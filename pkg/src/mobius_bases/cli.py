"""Command-line entry point.

Exit status: 0 on success, 1 on a domain error (or a failing verify suite),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from . import __version__
from .core import (
    DomainError,
    Index,
    SparsePoly,
    coeff_map_from_json,
    coeff_map_to_json,
    dumps,
    format_index,
    lehmer_code,
    parse_index,
    poly_to_json,
)
from .polybases import POLY_BASES
from .qsym import QSYM_ALIASES, QSYM_BASES
from .symfn import CLASSIC_BASES

SYM_EXTRA = ("hl", "schur_p")
ALL_BASES = tuple(dict.fromkeys(CLASSIC_BASES + SYM_EXTRA + QSYM_BASES + tuple(QSYM_ALIASES) + POLY_BASES))
POSETS = ("dominance-partitions", "dominance-strong", "sorted-dominance", "dominance-weak", "lehmer")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument types


def index_arg(text: str) -> Index:
    try:
        return parse_index(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def perm_arg(text: str) -> Index:
    text = text.strip()
    if "," in text:
        w = index_arg(text)
    elif text.isdigit():
        w = tuple(int(ch) for ch in text)
    else:
        raise argparse.ArgumentTypeError(f"malformed permutation {text!r}")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise argparse.ArgumentTypeError(f"not a permutation: {text!r}")
    return w


def _index_from(args, name: str = "index") -> Index:
    perm = getattr(args, "perm", None)
    code = getattr(args, "code", None)
    given = [x for x in (getattr(args, name, None), perm, code) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --index, --perm, --code")
    if perm is not None:
        return lehmer_code(perm)
    return given[0]


# ---------------------------------------------------------------------------
# output


def _text_coeffs(coeffs: dict) -> str:
    if not coeffs:
        return "0"
    rows = sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(reversed(kv[0]))))
    return "\n".join(f"{format_index(k) or '()'}\t{v}" for k, v in rows)


def _csv(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _frac(v) -> str:
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def emit_coeffs(coeffs: dict, fmt: str, key: str = "index") -> str:
    if fmt == "json":
        return dumps(coeff_map_to_json(coeffs))
    if fmt == "csv":
        data = [[r["index"], r["num"], r["den"]] for r in coeff_map_to_json(coeffs)]
        return _csv([[key, "coefficient"]] + [[format_index(i), f"{n}/{d}"] for i, n, d in data])
    return _text_coeffs(coeffs)


def emit_poly(p: SparsePoly, fmt: str) -> str:
    if fmt == "json":
        return dumps(poly_to_json(p))
    if fmt == "csv":
        return emit_coeffs(dict(p.terms), "csv", key="exponent")
    return str(p) if p.terms else "0"


# ---------------------------------------------------------------------------
# dispatch helpers


def _kind(basis: str) -> str:
    if basis in CLASSIC_BASES:
        return "classic"
    if basis in SYM_EXTRA:
        return basis
    if basis in QSYM_BASES or basis in QSYM_ALIASES:
        return "qsym"
    if basis in POLY_BASES:
        return "poly"
    raise DomainError(f"unknown basis {basis!r}")


def _need_t(args) -> Fraction:
    if args.t is None:
        raise UsageError("--t is required for the hl basis")
    return args.t


def _expand(args) -> SparsePoly:
    from .hall_littlewood import hl_expand, schur_p_expand
    from .polybases import expand_poly
    from .qsym import expand_qsym
    from .symfn import expand_classic

    basis = args.basis
    alpha = _index_from(args)
    kind = _kind(basis)
    if kind == "poly":
        return expand_poly(basis, alpha, args.nvars)
    if args.nvars is None:
        raise UsageError(f"--nvars is required for {basis}")
    if kind == "classic":
        return expand_classic(basis, alpha, args.nvars)
    if kind == "hl":
        return hl_expand(alpha, _need_t(args), args.nvars)
    if kind == "schur_p":
        return schur_p_expand(alpha, args.nvars)
    return expand_qsym(basis, alpha, args.nvars)


def _structure(args) -> dict:
    from .hall_littlewood import hl_structure, schur_p_structure
    from .polybases import poly_structure
    from .qsym import qsym_structure
    from .symfn import structure_constants_classic

    kind = _kind(args.basis)
    a, b, n, mode = args.a, args.b, args.nvars, args.mode
    if kind == "classic":
        return structure_constants_classic(args.basis, a, b, n, mode)
    if kind == "hl":
        return hl_structure(a, b, _need_t(args), n, mode)
    if kind == "schur_p":
        return schur_p_structure(a, b, n, mode)
    if kind == "qsym":
        return qsym_structure(args.basis, a, b, n, mode)
    return poly_structure(args.basis, a, b, n, mode)


def _transition(args):
    from .hall_littlewood import hl_transition
    from .polybases import poly_transition
    from .posets import invert, invert_triangular
    from .qsym import qsym_transition
    from .symfn import kostka_matrix

    kind = _kind(args.basis)
    k = args.degree
    if kind == "classic":
        if args.basis != "s":
            raise DomainError("transition for classic bases is available for s (Kostka numbers)")
        eta = kostka_matrix(k)
    elif kind == "hl":
        eta = hl_transition(k, _need_t(args))
    elif kind == "schur_p":
        raise DomainError("use --basis hl --t -1 for the Schur P transition")
    elif kind == "qsym":
        eta = qsym_transition(args.basis, k)
    else:
        if args.nvars is None:
            raise UsageError(f"--nvars is required for {args.basis}")
        eta = poly_transition(args.basis, args.nvars, k)
    if args.inverse:
        eta = invert(eta, args.mode) if eta.is_unitriangular() else invert_triangular(eta, args.mode)
    return eta


def _poset(args, x: Index, y: Index):
    from .posets import dominance_partitions, dominance_strong, dominance_weak, lehmer_poset, sorted_dominance

    if sum(x) != sum(y):
        raise DomainError(f"x and y have different sizes {sum(x)} and {sum(y)}")
    k = sum(x)
    if args.poset == "dominance-partitions":
        return dominance_partitions(k)
    if args.poset in ("dominance-strong", "sorted-dominance"):
        n = args.nvars if args.nvars is not None else k
        return dominance_strong(n, k) if args.poset == "dominance-strong" else sorted_dominance(n, k)
    if len(x) != len(y):
        raise DomainError(f"x and y have different lengths {len(x)} and {len(y)}")
    n = args.nvars if args.nvars is not None else len(x)
    if n != len(x):
        raise DomainError(f"index length {len(x)} does not match --nvars {n}")
    return dominance_weak(n, k) if args.poset == "dominance-weak" else lehmer_poset(n, k)


def _load_json(text: str):
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith(("[", "{")):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"input is not valid JSON: {exc.msg}") from None


def _coeffs_from_input(data) -> dict:
    """Accept the emitted list form or a plain object ``{"2,1": "1/2"}``."""
    if isinstance(data, list):
        return coeff_map_from_json(data)
    if isinstance(data, dict):
        out = {}
        for k, v in data.items():
            try:
                out[parse_index(k)] = Fraction(str(v))
            except (ValueError, ZeroDivisionError):
                raise DomainError(f"malformed coefficient {v!r} for {k!r}") from None
        return out
    raise DomainError("coefficient map must be a JSON list or object")


def _run_suite(name: str, quick: bool):
    from .oracle import verify_suite

    return verify_suite(name, quick)


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand(args) -> tuple[str, int]:
    return emit_poly(_expand(args), args.format), 0


def cmd_transition(args) -> tuple[str, int]:
    eta = _transition(args)
    if args.format == "json":
        return dumps(eta.to_json()), 0
    rows = sorted(eta.entries.items(), key=lambda kv: (tuple(reversed(kv[0][0])), tuple(reversed(kv[0][1]))))
    if args.format == "csv":
        return _csv([["row", "col", "coefficient"]] + [[format_index(a), format_index(b), _frac(v)] for (a, b), v in rows]), 0
    return "\n".join(f"{format_index(a)}\t{format_index(b)}\t{v}" for (a, b), v in rows), 0


def cmd_mobius(args) -> tuple[str, int]:
    from .posets import mobius_split

    x, y = args.x, args.y
    P = _poset(args, x, y)
    for z in (x, y):
        if z not in P:
            raise DomainError(f"{format_index(z)} is not an element of {P.name}")
    plus, minus = mobius_split(P, x, y) if P.leq(x, y) else (0, 0)
    value = plus - minus
    if args.format == "json":
        return dumps({"poset": P.name, "x": list(x), "y": list(y), "mobius": value, "even_chains": plus, "odd_chains": minus}), 0
    if args.format == "csv":
        return _csv([["x", "y", "mobius", "even_chains", "odd_chains"], [format_index(x), format_index(y), value, plus, minus]]), 0
    return str(value), 0


def cmd_mult(args) -> tuple[str, int]:
    return emit_coeffs(_structure(args), args.format), 0


def cmd_plethysm(args) -> tuple[str, int]:
    from .plethysm import plethysm_monomial_coeffs, plethysm_schur_coeffs

    if args.out == "schur":
        coeffs = plethysm_schur_coeffs(args.f, args.flambda, args.g, args.gmu, args.nvars, args.mode, args.max_variables)
    else:
        coeffs = plethysm_monomial_coeffs(args.f, args.flambda, args.g, args.gmu, args.nvars, args.max_variables)
    return emit_coeffs(coeffs, args.format), 0


def cmd_bridge(args) -> tuple[str, int]:
    from .bridge import schur_from_qsym

    coeffs = _coeffs_from_input(_load_json(args.input))
    return emit_coeffs(schur_from_qsym(coeffs, args.basis, args.nvars, args.mode), args.format), 0


def cmd_verify(args) -> tuple[str, int]:
    from .oracle import SUITES

    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_suite, names, [args.quick] * len(names)))
    else:
        reports = [_run_suite(n, args.quick) for n in names]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        body = "\n".join(r.to_json() for r in reports)
    elif args.format == "csv":
        body = _csv([["suite", "id", "status", "detail"]] + [[r.suite, c.id, c.status, c.detail] for r in reports for c in r.cases])
    else:
        body = "\n".join(r.to_text() for r in reports)
    return body, 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--mode", choices=("chains", "backsub"), default="backsub", help="unitriangular inversion method")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (used by verify --suite all)")

    p = _Parser(prog="mobius-bases", description="Exact structure constants via unitriangular transitions and Moebius inversion.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def index_flags(sp, required_basis=True):
        sp.add_argument("--basis", choices=ALL_BASES, required=required_basis)
        sp.add_argument("--index", type=index_arg)
        sp.add_argument("--perm", type=perm_arg, help="one-line permutation, e.g. 2143")
        sp.add_argument("--code", type=index_arg, help="Lehmer code, e.g. 1,0,1,0")
        sp.add_argument("--nvars", type=int)
        sp.add_argument("--t", type=rational_arg, help="Hall-Littlewood parameter p/q")

    sp = sub.add_parser("expand", parents=[common], help="basis element as a polynomial")
    index_flags(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("transition", parents=[common], help="transition matrix to monomials")
    sp.add_argument("--basis", choices=ALL_BASES, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--nvars", type=int)
    sp.add_argument("--t", type=rational_arg)
    sp.add_argument("--inverse", action="store_true")
    sp.set_defaults(func=cmd_transition)

    sp = sub.add_parser("mobius", parents=[common], help="Moebius function of a named poset")
    sp.add_argument("--poset", choices=POSETS, required=True)
    sp.add_argument("--x", type=index_arg, required=True)
    sp.add_argument("--y", type=index_arg, required=True)
    sp.add_argument("--nvars", type=int, help="bound on the number of parts (strong) or the length (weak)")
    sp.set_defaults(func=cmd_mobius)

    sp = sub.add_parser("mult", parents=[common], help="structure constants of a product")
    sp.add_argument("--basis", choices=ALL_BASES, required=True)
    sp.add_argument("--a", type=index_arg, required=True)
    sp.add_argument("--b", type=index_arg, required=True)
    sp.add_argument("--nvars", type=int)
    sp.add_argument("--t", type=rational_arg)
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("plethysm", parents=[common], help="plethysm coefficients f_la[g_mu]")
    sp.add_argument("--f", choices=CLASSIC_BASES, required=True)
    sp.add_argument("--flambda", type=index_arg, required=True)
    sp.add_argument("--g", choices=CLASSIC_BASES, required=True)
    sp.add_argument("--gmu", type=index_arg, required=True)
    sp.add_argument("--nvars", type=int, required=True)
    sp.add_argument("--out", choices=("schur", "monomial"), default="schur")
    sp.add_argument("--max-variables", type=int, default=400)
    sp.set_defaults(func=cmd_plethysm)

    sp = sub.add_parser("bridge", parents=[common], help="Schur expansion from an F or M expansion")
    sp.add_argument("--basis", choices=("F", "M"), required=True)
    sp.add_argument("--input", required=True, help="JSON coefficient map, a file name, or - for stdin")
    sp.add_argument("--nvars", type=int, required=True)
    sp.set_defaults(func=cmd_bridge)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", required=True, help="paper-examples, mobius, unitriangular, pipeline-vs-oracle, plethysm, bridge or all")
    sp.add_argument("--quick", action="store_true", help="smaller ranges")
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        if getattr(args, "nvars", None) is not None and args.nvars < 0:
            raise UsageError("--nvars must be nonnegative")
        text, code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=err)
        return 1
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())


__all__ = ["run", "main", "build_parser", "emit_coeffs", "emit_poly"]
