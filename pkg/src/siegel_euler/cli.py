"""Command-line surface: point counts, Euler characteristics, parameters,
Siegel dimensions, GL multiplicities, and an embedded self-test."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import golden
from .errors import (
    DomainError,
    IncompleteDataError,
    IngestionError,
    SiegelEulerError,
    SizeLimitError,
    UnknownDimensionError,
    UnknownHeckeError,
)
from .euler import a_series, e_c, e_ih, point_count, point_count_polynomial
from .forms import builtin_table, load_forms_table
from .gl_euler import GLEulerQuery, f_periodic, trivial_multiplicity
from .motives import motive_to_json
from .parameters import (
    dim_siegel_cusp,
    enumerate_parameters,
    epsilon_pair,
    global_sign,
    multiplicity,
    siegel_contributes,
    u_vector,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_DOMAIN = 2
EXIT_INCOMPLETE = 3
EXIT_INGESTION = 4
EXIT_UNKNOWN_DATA = 5

ENV_TABLE = "SIEGEL_EULER_FORMS_TABLE"


def _parse_weight_arg(text, genus):
    parts = [p for p in text.split(",") if p != ""]
    lam = tuple(int(p) for p in parts)
    if len(lam) != genus:
        raise DomainError(f"expected {genus} weight entries, got {len(lam)}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or (lam and lam[-1] < 0):
        raise DomainError(f"weight must be weakly decreasing and non-negative: {lam}")
    return lam


def _prime_power(q):
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            if q != 1:
                raise DomainError("q must be a prime power")
            return p, m
    raise DomainError("q must be a prime power")


def _load_table(args):
    path = args.forms_table or os.environ.get(ENV_TABLE)
    if path:
        return load_forms_table(path)
    return builtin_table()


def _result_document(result):
    residues = []
    for rec in result.residues:
        if rec[0] == "general":
            residues.append(
                {
                    "kind": "general-type",
                    "genus": rec[1],
                    "weights": list(rec[2]),
                    "tate_shift": rec[3],
                    "coefficient": rec[4],
                }
            )
        else:
            residues.append(
                {
                    "kind": "incomplete",
                    "shape": list(rec[1]),
                    "tate_shift": rec[2],
                    "coefficient": rec[3],
                }
            )
    return {
        "motive": motive_to_json(result.motive),
        "residue": residues if residues else {"kind": "none"},
    }


def _emit(doc, args):
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        if isinstance(doc, dict):
            print(json.dumps(doc, sort_keys=True, indent=2))
        else:
            print(doc)


def cmd_points(args):
    table = _load_table(args)
    if args.q is not None:
        p, m = _prime_power(args.q)
    else:
        if args.p is None or args.m is None:
            raise DomainError("points needs --q or both --p and --m")
        p, m = args.p, args.m
    value = point_count(args.genus, p, m, table)
    _emit({"genus": args.genus, "p": p, "m": m, "count": value} if args.format == "json" else value, args)
    return EXIT_OK


def cmd_euler(args, which):
    table = _load_table(args)
    lam = _parse_weight_arg(args.weight, args.genus)
    result = e_c(args.genus, lam, table) if which == "c" else e_ih(args.genus, lam, table)
    doc = _result_document(result)
    _emit(doc, args)
    return EXIT_OK


def cmd_dim_siegel(args):
    table = _load_table(args)
    kw = _parse_weight_arg(args.weight, args.genus)
    dim = dim_siegel_cusp(args.genus, kw, table)
    if dim.resolved:
        _emit({"dim": dim.value} if args.format == "json" else dim.value, args)
        return EXIT_OK
    doc = {"partial": dim.known_part, "missing": [str(k) for k in dim.missing]}
    _emit(doc, args)
    return EXIT_INCOMPLETE


def cmd_params(args):
    table = _load_table(args)
    lam = _parse_weight_arg(args.weight, args.genus)
    enum = enumerate_parameters(args.genus, lam, table)
    rows = []
    for psi in enum.parameters:
        us = u_vector(psi)
        rows.append(
            {
                "factors": [
                    {"family": f.family, "weights": [str(w) for w in f.weights], "d": f.d}
                    for f in psi.factors
                ],
                "display": str(psi),
                "multiplicity": multiplicity(psi, table),
                "u": list(us),
                "global_sign": global_sign(psi),
                "siegel": siegel_contributes(psi),
            }
        )
    doc = {
        "parameters": rows,
        "general_type": {
            "family": list(map(str, enum.general_key)),
            "count": enum.general_count,
        }
        if enum.general_key
        else None,
        "missing": [list(s) for s in enum.missing],
    }
    _emit(doc, args)
    return EXIT_OK


def cmd_gl_euler(args):
    value = trivial_multiplicity(GLEulerQuery(args.n, args.twist))
    _emit({"n": args.n, "twist": args.twist, "multiplicity": value} if args.format == "json" else value, args)
    return EXIT_OK


def cmd_selftest(args):
    table = builtin_table()
    failures = 0

    def check(label, ok):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        if not ok:
            failures += 1

    for n, coeffs in golden.POINT_COUNT_POLYNOMIALS.items():
        poly = point_count_polynomial(n, table)
        check(f"P_{n} coefficients", poly.is_tate and poly.coefficients == coeffs)
    for p, m in ((2, 1), (2, 2), (3, 1), (5, 1)):
        want = golden.evaluate_poly(golden.GENUS7_POLY_PART, p**m) + golden.evaluate_poly(
            golden.GENUS7_COFACTOR, p**m
        ) * a_series(p, m)[m]
        check(f"|A_7(F_{p}^{m})|", point_count(7, p, m, table) == want)
    from .parameters import ArthurParameter, Factor, u_sign

    for d in range(3, 12, 2):
        g = 2 + (d - 1) // 2
        psi = ArthurParameter(
            n=g,
            lam=(6 - g,) * 2 + (0,) * (g - 2),
            factors=(Factor("1", (), d), Factor("S", (golden.DELTA11,), 2)),
        )
        check(f"u_1(Delta11[2]+[{d}]) = -1", u_sign(psi, 1) == -1)
    check("eps([1], weight 12) = +1", epsilon_pair(("1", ()), ("S", (Fraction(11, 2),))) == 1)
    check("eps([1], weight 18) = -1", epsilon_pair(("1", ()), ("S", (Fraction(17, 2),))) == -1)
    check("f mod-6 table (m <= 60)", all(f_periodic(i) == golden.F_MOD6_TABLE[i % 6] for i in range(61)))
    print("selftest:", "ok" if failures == 0 else f"{failures} failure(s)")
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="siegel-euler",
        description="Euler characteristics of local systems on A_n, as virtual motives",
    )
    parser.add_argument("--forms-table", default=None, help=f"JSON table path (or ${ENV_TABLE})")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("points", help="|A_n(F_q)|")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)

    for name in ("euler-c", "euler-ih"):
        sp = sub.add_parser(name, help=f"{name} motive as JSON")
        sp.add_argument("--genus", type=int, required=True)
        sp.add_argument("--weight", type=str, required=True)

    sp = sub.add_parser("dim-siegel", help="dim S_k(Sp_2n(Z)) from the parameter count")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--weight", type=str, required=True)

    sp = sub.add_parser("params", help="list Arthur parameters for a weight")
    sp.add_argument("--genus", type=int, required=True)
    sp.add_argument("--weight", type=str, required=True)

    sp = sub.add_parser("gl-euler", help="trivial-character multiplicity for GL_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--twist", choices=("plain", "det-sign"), default="plain")

    sub.add_parser("selftest", help="run the embedded golden suite")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "points":
            return cmd_points(args)
        if args.command == "euler-c":
            return cmd_euler(args, "c")
        if args.command == "euler-ih":
            return cmd_euler(args, "ih")
        if args.command == "dim-siegel":
            return cmd_dim_siegel(args)
        if args.command == "params":
            return cmd_params(args)
        if args.command == "gl-euler":
            return cmd_gl_euler(args)
        if args.command == "selftest":
            return cmd_selftest(args)
        raise DomainError(f"unknown command {args.command}")
    except (DomainError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except IncompleteDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except IngestionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INGESTION
    except (UnknownHeckeError, UnknownDimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_DATA
    except SiegelEulerError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
