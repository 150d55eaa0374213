"""The eleven reproduction criteria at their stated tolerances and time limits."""
import time

from dyndeg import mindeg, salemfam, tables, verify as v


def _run(jobs):
    t0 = time.perf_counter()
    cases = [c for job in jobs for c in job[0](*job[1:])]
    return cases, time.perf_counter() - t0


def _bad(cases):
    return [c for c in cases if not c.ok and not c.flagged]


def _show(cases):
    return "; ".join(f"{c.id}: expected {c.expected_ref}, computed {c.computed}" for c in cases[:5])


def test_criterion_01_theoremB(record):
    mindeg.theoremB.cache_clear()
    mindeg.type1_min.cache_clear()
    mindeg._positive_units.cache_clear()
    cases, dt = _run(v._jobs("theoremB"))
    bad = _bad(cases)
    ok = not bad and dt < 30 * 60
    values = " ".join(c.computed.split()[0] for c in cases)
    record(1, ok, f"m(2..10) = {values}; {dt:.0f} s (limit 1800 s) {_show(bad)}")
    assert ok


def test_criterion_02_tables(record):
    small, dt_small = _run([(v.job_table, t) for t in ("A.1", "A.2", "A.3", "A.4")])
    rest_ids = [t for t in tables.TABLE_IDS[4:] if t != "A.7"]
    rest, dt_rest = _run([(v.job_table, t) for t in rest_ids])
    a7, dt_a7 = _run([(v.job_table, "A.7")])
    cases = small + rest + a7
    bad = _bad(cases)
    flagged = [c.id for c in cases if c.flagged and not c.ok]
    ok = not bad and dt_small < 60 and dt_rest < 20 * 60
    record(2, ok, f"{len(cases)} rows in 17 tables, {len(bad)} mismatches, flagged {flagged}; "
                  f"A.1-A.4 {dt_small:.1f} s (limit 60), A.5-A.17 w/o A.7 {dt_rest:.0f} s (limit 1200), "
                  f"A.7 {dt_a7:.0f} s {_show(bad)}")
    assert ok


def test_criterion_03_constant_law(record):
    cases, dt = _run(v._jobs("prop23"))
    bad = _bad(cases)
    ok = not bad and dt < 120
    record(3, ok, f"3 <= n <= 10000, {len(bad)} failing blocks; {dt:.1f} s (limit 120) {_show(bad)}")
    assert ok


def test_criterion_04_congruences(record):
    cases, dt = _run(v._jobs("congruences"))
    bad = _bad(cases)
    record(4, not bad, f"{len(cases)} laws checked to index 1000 both ways; {dt:.0f} s {_show(bad)}")
    assert not bad


def test_criterion_05_roots_outside(record):
    cases, dt = _run(v._jobs("outside"))
    bad = _bad(cases)
    record(5, not bad, f"P_n, Q_m up to 400 have <= 1 root outside the circle; {dt:.0f} s {_show(bad)}")
    assert not bad


def test_criterion_06_monotone(record):
    cases, dt = _run(v._jobs("monotone"))
    bad = _bad(cases)
    vals = ", ".join(f"{c.id.split(': ')[1]} = {c.computed}" for c in cases if "Salem number at" in c.id)
    record(6, not bad, f"monotone to 200; {vals}; {dt:.0f} s {_show(bad)}")
    assert not bad


def test_criterion_07_witnesses(record):
    cases, dt = _run(v._jobs("witnesses"))
    bad = _bad(cases)
    ok = not bad and dt < 600
    record(7, ok, f"{len(cases)} primes 5..97 witnessed; {dt:.0f} s (limit 600) {_show(bad)}")
    assert ok


def test_criterion_08_residues(record):
    cases, dt = _run(v._jobs("residues"))
    bad = _bad(cases)
    record(8, not bad, f"case tables, |Phi_N(i)|, mod-24 sets match; direct check to 500; {dt:.0f} s "
                       f"{_show(bad)}")
    assert not bad


def test_criterion_09_oracle(record):
    cases, dt = _run(v._jobs("oracle"))
    bad = _bad(cases)
    record(9, not bad, f"{len(cases)} searches: pruned == brute force at reduced scale; {dt:.0f} s "
                       f"{_show(bad)}")
    assert not bad


def test_criterion_10_no_integer_square(record):
    cases, dt = _run(v._jobs("lemma55"))
    bad = _bad(cases)
    record(10, not bad, f"{len(cases)} reports and hit sets avoid n^2; {dt:.0f} s {_show(bad)}")
    assert not bad


def test_criterion_11_appendixB(record):
    cases, dt = _run(v._jobs("appendixB"))
    bad = _bad(cases)
    ok = not bad and dt < 60 and len(cases) == 19
    counts = ",".join(c.computed for c in cases)
    record(11, ok, f"sign changes for t = 0.1..1.9: {counts}; {dt:.2f} s (limit 60) {_show(bad)}")
    assert ok
