"""Computed appendix tables, their text renderings, and golden comparison."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import reference as ref
from . import salemfam, unitsearch
from .exactpoly import IntPoly, QuadRingPoly, format_poly, parse_poly

TABLE_IDS = tuple(f"A.{k}" for k in range(1, 18))


@dataclass
class Table:
    id: str
    headers: tuple[str, ...]
    rows: list[tuple]  # display strings
    data: list = field(default_factory=list)  # structured rows for comparison

    def render(self, fmt: str = "tsv") -> str:
        if fmt == "json":
            return json.dumps({"id": self.id, "headers": list(self.headers),
                               "rows": [list(r) for r in self.rows]}, indent=2)
        if fmt == "md":
            lines = ["| " + " | ".join(self.headers) + " |", "|" + "---|" * len(self.headers)]
            lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in self.rows]
            return "\n".join(lines)
        if fmt != "tsv":
            raise ValueError(f"unknown format {fmt!r}")
        return "\n".join(["\t".join(self.headers)] + ["\t".join(str(c) for c in r) for r in self.rows])


@dataclass(frozen=True)
class Discrepancy:
    id: str
    expected_ref: str
    computed: str
    suspected_typo: bool = False

    def as_dict(self) -> dict:
        return {"id": self.id, "expected_ref": self.expected_ref, "computed": self.computed,
                "suspected_typo": self.suspected_typo}


def _fmt(p, var="x") -> str:
    return format_poly(p, var)


def _degree_table(tid: str, rows: list[salemfam.DegreeRow], with_factors: bool) -> Table:
    if with_factors:
        disp = [(r.index, ", ".join(f"Phi_{N}" for N in r.factors), r.salem_degree) for r in rows]
        data = [(r.index, r.factors, r.salem_degree) for r in rows]
        return Table(tid, ("index", "cyclotomic factors", "Salem degree"), disp, data)
    data = [(r.index, r.salem_degree) for r in rows]
    return Table(tid, ("index", "Salem degree"), data, data)


def _interval_table(tid: str, res: unitsearch.SearchResult) -> Table:
    data = [(h.value_str(), h.poly) for h in res.hits]
    return Table(tid, ("value", "polynomial"), [(v, _fmt(p)) for v, p in data], data)


def _quartic_E_table(tid: str, variant: str) -> Table:
    res = unitsearch.enumerate_quartic_in_E(variant=variant)
    data = [("Y" if h.get("form61") else "N", h.poly, h.get("octic"), h.house_str()) for h in res.hits]
    disp = [(f, _fmt(R, "X"), _fmt(o), hs) for f, R, o, hs in data]
    return Table(tid, ("form61", "R(X)", "octic", "house"), disp, data)


def _ring_table(tid: str, case: str) -> Table:
    res = unitsearch.enumerate_quadratic_ring_cases(case)
    data = [(h.get("R"), h.poly, h.house_str()) for h in res.hits]
    disp = [(_fmt(R, "z"), _fmt(q), hs) for R, q, hs in data]
    return Table(tid, ("R(z)", "quartic", "house"), disp, data)


def _cubic_table(tid: str, u: str, D_set) -> Table:
    res = unitsearch.enumerate_cubic_ring_cases(u, D_set)
    data = [(h.poly, h.house_str()) for h in res.hits]
    return Table(tid, ("p(x)", "house"), [(_fmt(p), hs) for p, hs in data], data)


def _a5_table() -> Table:
    rows = unitsearch.table_A5_rows()
    data = [(r.D, r.pq, r.t_exp, r.poly, r.house_str()) for r in rows]
    disp = [(D, f"({p}, {q})", f"zeta^{k}", _fmt(P), hs) for D, (p, q), k, P, hs in data]
    return Table("A.5", ("D", "(p, q)", "t", "conjugate product", "house"), disp, data)


def compute_table(tid: str) -> Table:
    if tid not in TABLE_IDS:
        raise ValueError(f"unknown table {tid!r}; expected one of {', '.join(TABLE_IDS)}")
    k = int(tid.split(".")[1])
    if k == 1:
        return _degree_table(tid, salemfam.table_A1(), True)
    if k == 2:
        return _degree_table(tid, salemfam.table_A2(), True)
    if k == 3:
        return _degree_table(tid, salemfam.table_A3(), False)
    if k == 4:
        return _degree_table(tid, salemfam.table_A4(), False)
    if k == 5:
        return _a5_table()
    if k == 6:
        return _interval_table(tid, unitsearch.enumerate_totally_real(3, Fraction(9, 4), 2))
    if k == 7:
        return _interval_table(tid, unitsearch.enumerate_totally_positive_units(7, Fraction(101, 25)))
    if k == 8:
        return _interval_table(tid, unitsearch.enumerate_totally_real(4, Fraction(21, 10), 2))
    if k == 9:
        return _quartic_E_table(tid, "plus")
    if k == 10:
        return _quartic_E_table(tid, "minus")
    if k == 11:
        return _ring_table(tid, "i")
    if k == 12:
        return _ring_table(tid, "zeta8")
    if k == 13:
        return _ring_table(tid, "zeta12")
    if k == 14:
        return _cubic_table(tid, "1", "Z")
    if k == 15:
        return _cubic_table(tid, "1", "all")
    if k == 16:
        return _cubic_table(tid, "zeta6", None)
    return _interval_table(tid, unitsearch.enumerate_totally_real(5, Fraction(21, 10), 2))


# ---------------------------------------------------------------------------
# Golden comparison
# ---------------------------------------------------------------------------


def _parse(text: str, var: str = "x", D: int | None = None):
    return parse_poly(text, var, D)


def expected_rows(tid: str) -> list[tuple]:
    """The printed rows in the same structured shape as ``Table.data``."""
    k = int(tid.split(".")[1])
    if k in (1, 2):
        return list(ref.A1 if k == 1 else ref.A2)
    if k in (3, 4):
        return list(ref.A3 if k == 3 else ref.A4)
    if k == 5:
        return [(D, pq, e, _parse(P), h) for D, pq, e, P, h in ref.A5]
    if k in (6, 7, 8, 17):
        rows = {6: ref.A6, 7: ref.A7, 8: ref.A8, 17: ref.A17}[k]
        return [(v, _parse(P)) for v, P in rows]
    if k in (9, 10):
        rows = ref.A9 if k == 9 else ref.A10
        return [(f, _parse(R, "X"), _parse(o), h) for f, R, o, h in rows]
    if k in (11, 12, 13):
        rows = {11: ref.A11, 12: ref.A12, 13: ref.A13}[k]
        return [(_parse(R, "z", D), _parse(q, "x", D), h) for D, R, q, h in rows]
    rows = {14: ref.A14, 15: ref.A15, 16: ref.A16}[k]
    return [(_parse(P, "x", D), h) for D, P, h in rows]


def _show(row) -> str:
    out = []
    for c in row:
        if isinstance(c, (IntPoly, QuadRingPoly)):
            out.append(format_poly(c))
        else:
            out.append(str(c))
    return " | ".join(out)


def compare_table(table: Table) -> tuple[int, list[Discrepancy]]:
    """Row-by-row comparison against the printed table; returns (rows, discrepancies)."""
    tid = table.id
    expected = expected_rows(tid)
    suspects = ref.SUSPECT_ROWS.get(tid, frozenset())
    out = []
    n = max(len(expected), len(table.data))
    for i in range(n):
        e = expected[i] if i < len(expected) else None
        c = table.data[i] if i < len(table.data) else None
        if e != c:
            out.append(Discrepancy(f"{tid} row {i + 1}", "missing" if e is None else _show(e),
                                   "missing" if c is None else _show(c), i in suspects))
    return n, out
