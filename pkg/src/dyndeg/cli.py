"""Command-line entry point: ``dyndeg <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cyclo, mindeg, rootcert, salemfam, tables, unitsearch, verify
from .errors import DyndegError
from .exactpoly import format_poly, parse_poly


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from e


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def cmd_cyclo(a) -> int:
    if a.psi:
        print(format_poly(cyclo.psi(a.n).psi))
    else:
        print(format_poly(cyclo.cyclotomic(a.n)))
    return 0


def cmd_root(a) -> int:
    p = parse_poly(a.poly, a.var, a.D)
    if a.house:
        lo, hi = rootcert.house_enclosure(p, a.width)
        print(f"house in [{float(lo):.15g}, {float(hi):.15g}]")
        print(f"house (4 decimals, truncated): {unitsearch.truncate4(p, lo, hi)}")
    if a.in_disc is not None:
        print(f"roots with |z| < {a.in_disc}: {rootcert.count_roots_in_disc(p, a.in_disc)} of {p.degree}")
    if a.totally_real:
        print(f"totally real: {rootcert.is_totally_real(p)}")
    return 0


def cmd_salem(a) -> int:
    dec = salemfam.decompose(a.family, a.index)
    lo, hi = dec.salem_number
    factors = " * ".join(f"Phi_{N}" + (f"^{m}" if m > 1 else "") for N, m in dec.cyclo_factors)
    print(f"{dec.member.name} = {factors or '1'} * S")
    print(f"S = {format_poly(dec.salem_factor)}")
    print(f"Salem degree: {dec.salem_degree}")
    print(f"Salem number in [{float(lo):.12f}, {float(hi):.12f}]")
    print(f"trace polynomial: {format_poly(dec.trace_poly)}")
    print(f"trace constant is a unit: {dec.trace_constant_unit}")
    return 0


def cmd_table(a) -> int:
    t = tables.compute_table(a.id)
    print(t.render(a.format))
    if a.compare:
        n, disc = tables.compare_table(t)
        for d in disc:
            tag = "suspected typo" if d.suspected_typo else "DISCREPANCY"
            print(f"{tag} {d.id}: printed {d.expected_ref}; computed {d.computed}", file=sys.stderr)
        return 1 if any(not d.suspected_typo for d in disc) else 0
    return 0


def _run_search(a) -> unitsearch.SearchResult:
    k = a.kind
    if k == "totally-real":
        return unitsearch.enumerate_totally_real(a.degree, a.bound, a.above, brute=a.brute)
    if k == "totally-positive":
        above = a.above if a.above is not None else Fraction(4)
        return unitsearch.enumerate_totally_positive_units(a.degree, a.bound, above, brute=a.brute)
    if k == "quartic-E":
        return unitsearch.enumerate_quartic_in_E(a.bound or unitsearch.N_QUARTIC, a.variant, brute=a.brute)
    if k == "ring":
        return unitsearch.enumerate_quadratic_ring_cases(a.case, a.bound or unitsearch.N_QUARTIC, brute=a.brute)
    if k == "cubic":
        D_set = None if a.unit == "zeta6" else a.fields
        return unitsearch.enumerate_cubic_ring_cases(a.unit, D_set, a.bound or unitsearch.N_CUBIC, brute=a.brute)
    return unitsearch.enumerate_table_A5(a.bound or unitsearch.A5_BOUND, brute=a.brute)


def cmd_search(a) -> int:
    if a.kind in ("totally-real", "totally-positive") and (a.degree is None or a.bound is None):
        raise SystemExit(f"--kind {a.kind} needs --degree and --bound")
    res = _run_search(a)
    rows = []
    for h in res.hits:
        row = {"poly": format_poly(h.poly), "house": h.house_str()}
        if h.value is not None:
            row["value"] = h.value_str()
        rows.append(row)
    if a.format == "json":
        print(json.dumps({"spec": res.spec.kind, "hits": rows}, indent=2))
    else:
        print(f"{len(rows)} hits")
        for r in rows:
            print("\t".join(r.values()))
    return 0


def cmd_mindeg(a) -> int:
    if a.g is not None:
        r = mindeg.theoremB(a.g)
    else:
        r = mindeg.theoremA(a.prime, a.exact_cutoff)
    d = r.as_dict()
    if a.format == "json":
        d["branches"] = [{"branch": b.label, "kind": b.kind,
                          "value": None if b.value is None else float(b.value[0])} for b in r.branches]
    else:
        d["value"] = f"[{float(r.value[0]):.15f}, {float(r.value[1]):.15f}]"
    _emit(d, a.format)
    return 0


def cmd_verify(a) -> int:
    rep = verify.verify_all(a.suite, a.workers, tuple(a.skip))
    print(rep.to_json() if a.format == "json" else rep.summary())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dyndeg", description="Minimum dynamical degrees and supporting tools.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("cyclo", help="cyclotomic or trace-form polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--psi", action="store_true", help="print Psi_n instead of Phi_n")
    p.set_defaults(fn=cmd_cyclo)

    p = sub.add_parser("root", help="certified root location")
    p.add_argument("--poly", required=True)
    p.add_argument("--var", default="x")
    p.add_argument("--D", type=int, default=None, help="coefficients in Q(sqrt(-D))")
    p.add_argument("--house", action="store_true")
    p.add_argument("--width", type=_frac, default=Fraction(1, 10**12))
    p.add_argument("--in-disc", type=_frac, default=None, metavar="R")
    p.add_argument("--totally-real", action="store_true")
    p.set_defaults(fn=cmd_root)

    p = sub.add_parser("salem", help="Salem decomposition of P_n or Q_m")
    p.add_argument("--family", choices=salemfam.FAMILIES, required=True)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(fn=cmd_salem)

    p = sub.add_parser("table", help="regenerate an appendix table")
    p.add_argument("--id", choices=tables.TABLE_IDS, required=True)
    p.add_argument("--format", choices=("tsv", "md", "json"), default="tsv")
    p.add_argument("--compare", action="store_true", help="diff against the printed rows")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("search", help="ad-hoc bounded-house search")
    p.add_argument("--kind", required=True, choices=(
        "totally-real", "totally-positive", "quartic-E", "ring", "cubic", "conjugate-products"))
    p.add_argument("--degree", type=int)
    p.add_argument("--bound", type=_frac, help="house bound, upper root bound or N")
    p.add_argument("--above", type=_frac, help="require a root above this value")
    p.add_argument("--variant", choices=("plus", "minus"), default="plus")
    p.add_argument("--case", choices=sorted(unitsearch.RING_CASES), default="i")
    p.add_argument("--unit", choices=("1", "zeta6"), default="1")
    p.add_argument("--fields", choices=("Z", "all"), default="Z")
    p.add_argument("--brute", action="store_true", help="plain coefficient-box enumeration")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("mindeg", help="minimum first dynamical degree")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--g", type=int)
    g.add_argument("--prime", type=int)
    p.add_argument("--exact-cutoff", type=int, default=mindeg.EXACT_CUTOFF)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_mindeg)

    p = sub.add_parser("verify", help="run reproduction suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--skip", nargs="*", default=[], metavar="A.k", help="tables to leave out")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    a = build_parser().parse_args(argv)
    try:
        return a.fn(a)
    except DyndegError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
