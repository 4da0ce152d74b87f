"""Command-line front end.

Subcommands: field-info | hull | sweep | discriminant | rdcode | verify-paper.
Exit codes: 0 ok, 1 mathematical mismatch (verify-paper), 2 usage/input error.
Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from .errors import QPolyHullError
from .field import DEFAULT_SIZE_CAP, build_tower, factorize
from .frob import FrobParams, frob_kernel_dim, hull_frob
from .gram import gram_of_operator, hull_dim as gram_hull_dim
from .linops import QPoly, qpoly_adjoint
from .oracle import intersect, operator_image, operator_kernel
from .pencil import build_pencil
from .rdhull import RdCode, rd_hull
from .sweep import DEFAULT_SWEEP_CAP, ebit_report, sweep_p1


def _add_tower_args(sp):
    sp.add_argument("--p", type=int, required=True, help="prime characteristic")
    sp.add_argument("--r", type=int, required=True, help="q = p^r")
    sp.add_argument("--m", type=int, required=True, help="extension degree over GF(q)")
    sp.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP,
                    help="field size cap (elements)")


def _add_family_args(sp):
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="Frobenius twist exponent")
    group.add_argument("--L", type=str,
                       help="general twist: comma-separated q-polynomial "
                            "coefficients a0,...,a_{m-1} in element syntax")


def _family_operator(tower, args):
    if args.k is not None:
        return None, args.k
    coeffs = [tower.parse_element(c) for c in args.L.split(",")]
    return QPoly.from_coeffs(tower, coeffs), None


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_field_info(args) -> int:
    t = build_tower(args.p, args.r, args.m, size_cap=args.cap)
    n1 = t.order - 1
    fact = factorize(n1)
    fact_str = " * ".join(f"{p}^{e}" if e > 1 else str(p)
                          for p, e in sorted(fact.items()))
    beta = t.normal_basis.normal_element
    if args.format == "json":
        doc = {
            "schema": 1, "kind": "field_info",
            "p": t.p, "r": t.r, "q": t.q, "m": t.m, "order": t.order,
            "group_order": n1, "group_order_factorization": fact_str,
            "gcd_m_char": math.gcd(t.m, t.p),
            "modulus": list(t.modulus),
            "generator": t.format_element(t.generator),
            "normal_element": t.format_element(beta),
        }
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [
            f"p = {t.p}  r = {t.r}  q = {t.q}  m = {t.m}",
            f"GF(q^m) = GF({t.order})",
            f"|F*| = {n1} = {fact_str}",
            f"gcd(m, char) = gcd({t.m}, {t.p}) = {math.gcd(t.m, t.p)}",
            f"modulus coefficients (ascending, over GF({t.p})): {list(t.modulus)}",
            f"generator: a = {t.format_element(t.generator)}",
            f"normal element: {t.format_element(beta)}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_hull(args) -> int:
    t = build_tower(args.p, args.r, args.m, size_cap=args.cap)
    lam = t.parse_element(args.lam)
    mu = t.parse_element(args.mu)
    L, k = _family_operator(t, args)
    if k is not None:
        rep = hull_frob(FrobParams(t, k, lam, mu))
        rank_gram = gram_of_operator(
            QPoly.frobenius_family(t, k, lam, mu), t.power_basis).rank()
        doc = {
            "schema": 1, "kind": "hull_report",
            "p": t.p, "r": t.r, "m": t.m, "q": t.q,
            "family": ["frobenius", k],
            "lam": t.format_element(lam), "mu": t.format_element(mu),
            "eps": [rep.eps1, rep.eps2], "case": rep.case, "d": rep.d,
            "rank_operator": rep.rank_operator, "rank_gram": rank_gram,
            "hull_dim": rep.hull_dim, "ebits": rep.ebit_count,
            "classification": rep.classification,
            "isotropic": rep.isotropic,
            "adjoint_kernel_generator":
                None if rep.adjoint_kernel_generator is None
                else t.format_element(rep.adjoint_kernel_generator),
        }
    else:
        phi = QPoly.x(t).scale(lam) + L.scale(mu)
        if phi.is_zero():
            raise QPolyHullError("operator vanishes at this parameter point")
        rep = gram_hull_dim(phi, t.power_basis)
        adj_hull = intersect(operator_image(t, phi),
                             operator_kernel(t, qpoly_adjoint(phi))).dim
        doc = {
            "schema": 1, "kind": "hull_report",
            "p": t.p, "r": t.r, "m": t.m, "q": t.q,
            "family": ["pencil", [t.format_element(c) for c in L.coeffs]],
            "lam": t.format_element(lam), "mu": t.format_element(mu),
            "rank_operator": rep.rank_operator, "rank_gram": rep.rank_gram,
            "hull_dim": rep.hull_dim, "hull_dim_adjoint_route": adj_hull,
            "ebits": rep.ebit_count, "classification": rep.classification,
        }
    if args.format == "json":
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [f"{key}: {doc[key]}" for key in doc if key not in ("schema", "kind")]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_sweep(args) -> int:
    t = build_tower(args.p, args.r, args.m, size_cap=args.cap)
    L, k = _family_operator(t, args)
    table = sweep_p1(t, k=k, L=L, parameter_field=args.param_field,
                     cap=args.sweep_cap, keep_points=args.points)
    if args.format == "json":
        _emit(table.to_json() + "\n", args.out)
    elif args.format == "csv":
        _emit(table.to_csv(), args.out)
    else:
        rep = ebit_report(table)
        lines = [
            f"P^1({'GF(%d)' % t.q if args.param_field == 'base' else 'GF(%d)' % t.order}): "
            f"{table.total} points",
            "hull_dim  count  ebits",
        ]
        for h, c in table.counts:
            lines.append(f"{h:8d}  {c:5d}  {h:5d}")
        lines.append(f"LCD density: {table.lcd_density} "
                     f"({float(table.lcd_density):.6f})")
        if rep.d is not None:
            lines.append(f"d = gcd(k, m) = {rep.d}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_discriminant(args) -> int:
    t = build_tower(args.p, args.r, args.m, size_cap=args.cap)
    L, k = _family_operator(t, args)
    if L is None:
        L = QPoly.monomial(t, k)
    basis = t.normal_basis if args.basis == "normal" else t.power_basis
    pen = build_pencil(L, basis)
    doc = {
        "schema": 1, "kind": "discriminant",
        "p": t.p, "r": t.r, "m": t.m, "q": t.q,
        "basis": args.basis,
        "degree": pen.delta_degree,
        "det_g0": t.format_element(pen.det_g0),
        "coefficients_ascending": [t.format_element(c) for c in pen.delta_coeffs],
        "roots_in_base_field": [t.format_element(x) for x in pen.delta_roots],
    }
    if args.format == "json":
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [f"{key}: {doc[key]}" for key in doc if key not in ("schema", "kind")]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_rdcode(args) -> int:
    t = build_tower(args.p, args.r, args.m, size_cap=args.cap)
    gens = []
    with open(args.gens) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            coeffs = [t.parse_element(c) for c in line.split(",")]
            gens.append(QPoly.from_coeffs(t, coeffs))
    code = RdCode(t, tuple(gens))
    rep = rd_hull(code)
    doc = {
        "schema": 1, "kind": "rd_hull_report",
        "p": t.p, "r": t.r, "m": t.m, "q": t.q, "k": code.k,
        "M": [[t.format_element(x) for x in row] for row in rep.M.rows],
        "rank_M": rep.rank_M,
        "hull_dim": rep.hull_dim, "ebits": rep.ebit_count,
        "is_lcd": rep.is_lcd,
        "generators_self_orthogonal": rep.generators_self_orthogonal,
        "self_dual_unverified": rep.self_dual_unverified,
        "hull_basis": [[t.format_element(c) for c in h.coeffs]
                       for h in rep.hull_basis],
    }
    if args.format == "json":
        _emit(json.dumps(doc, sort_keys=True, indent=2) + "\n", args.out)
    else:
        lines = [f"{key}: {doc[key]}" for key in doc if key not in ("schema", "kind")]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# verify-paper: the two golden worked examples
# ---------------------------------------------------------------------------


def _checks_f4():
    t = build_tower(2, 1, 2)
    pb = t.power_basis
    pen = build_pencil(QPoly.monomial(t, 1), pb)
    yield "G0 = [[0,1],[1,1]]", pen.g0.rows == [[0, 1], [1, 1]], pen.g0.rows
    yield "G1 = 0", pen.g1.is_zero(), pen.g1.rows
    yield "G2 = G0", pen.g2 == pen.g0, pen.g2.rows
    yield ("Delta = (rho+1)^4", pen.delta_coeffs == (1, 0, 0, 0, 1),
           pen.delta_coeffs)
    yield "unique root rho = 1", pen.delta_roots == (1,), pen.delta_roots
    lcd_ok = all(
        gram_hull_dim(QPoly.frobenius_family(t, 1, lam, mu), pb).hull_dim == 0
        for lam, mu in [(1, 0), (0, 1)])
    yield "hull = 0 for lam != mu (LCD)", lcd_ok, None
    rep = gram_hull_dim(QPoly.frobenius_family(t, 1, 1, 1), pb)
    yield ("hull(1,1) = 1 self-orthogonal",
           rep.hull_dim == 1 and rep.classification == "self-orthogonal",
           (rep.hull_dim, rep.classification))


def _checks_f64():
    t = build_tower(2, 2, 3)
    start = time.perf_counter()
    table = sweep_p1(t, k=1, parameter_field="top")
    elapsed = time.perf_counter() - start
    yield "total = 65", table.total == 65, table.total
    yield "|S_0| = 60", table.count(0) == 60, table.count(0)
    yield "|S_1| = 5", table.count(1) == 5, table.count(1)
    non_lcd = [pt for pt in table.points if pt.hull > 0]
    flags_ok = all(pt.case == "11" and pt.dim_code == 2 and pt.isotropic
                   for pt in non_lcd)
    yield "non-LCD points: eps = (1,1), rank(phi) = 2, isotropic", flags_ok, None
    ranks_ok = all(
        gram_of_operator(
            QPoly.frobenius_family(t, 1, t.parse_element(pt.label), 1),
            t.power_basis).rank() == 1
        for pt in non_lcd)
    yield "non-LCD points: rank(G) = 1", ranks_ok, None
    rep1 = hull_frob(FrobParams(t, 1, 1, 1))
    yield ("rho = 1: case (1,1) with hull 0",
           rep1.case == "11" and rep1.hull_dim == 0, (rep1.case, rep1.hull_dim))
    nb = [x for x in t.elements()
          if frob_kernel_dim(FrobParams(t, 1, x, 1))[0] > 0]
    yield "21 non-bijective points", len(nb) == 21, len(nb)
    in_f4 = sum(1 for x in nb if x in t.subfield(1))
    yield "3 non-bijective points in F_4", in_f4 == 3, in_f4
    yield "runtime < 5 s", elapsed < 5.0, f"{elapsed:.3f}s"


def cmd_verify_paper(args) -> int:
    failures = 0
    for suite, gen in (("F4", _checks_f4), ("F64", _checks_f64)):
        for name, ok, got in gen():
            status = "PASS" if ok else "FAIL"
            line = f"[{suite}] {status}: {name}"
            if not ok:
                line += f"   (got: {got!r})"
                failures += 1
            print(line)
    print(f"verify-paper: {'all checks passed' if not failures else f'{failures} mismatches'}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qpolyhull",
        description="Exact hull/LCD analysis for q-polynomial codes over "
                    "finite field towers")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field-info", help="tower summary")
    _add_tower_args(sp)
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_field_info)

    sp = sub.add_parser("hull", help="hull at a single parameter point")
    _add_tower_args(sp)
    _add_family_args(sp)
    sp.add_argument("--lam", required=True, help="element, e.g. 'a^5+a' or '0'")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_hull)

    sp = sub.add_parser("sweep", help="strata over a projective line")
    _add_tower_args(sp)
    _add_family_args(sp)
    sp.add_argument("--param-field", choices=["base", "top"], default="base")
    sp.add_argument("--format", choices=["table", "json", "csv"], default="table")
    sp.add_argument("--points", action="store_true",
                    help="retain per-point records in json/csv output")
    sp.add_argument("--sweep-cap", type=int, default=DEFAULT_SWEEP_CAP)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("discriminant", help="pencil discriminant and roots")
    _add_tower_args(sp)
    _add_family_args(sp)
    sp.add_argument("--basis", choices=["normal", "power"], default="normal")
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_discriminant)

    sp = sub.add_parser("rdcode", help="rank-distance hull from a generator file")
    _add_tower_args(sp)
    sp.add_argument("--gens", required=True,
                    help="file: one generator per line, comma-separated "
                         "coefficients a0,...,a_{m-1}; '#' comments")
    sp.add_argument("--format", choices=["table", "json"], default="table")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_rdcode)

    sp = sub.add_parser("verify-paper", help="golden F4 and F64 example suites")
    sp.set_defaults(func=cmd_verify_paper)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except QPolyHullError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
