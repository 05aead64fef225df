"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import time

import pytest

from twistpoly.gf2 import is_binary
from twistpoly.harness import nonbinary_delta_matroid, run_check, six_element_system
from twistpoly.ribbon import make_ribbon_graph, partial_dual_polynomial
from twistpoly.setsys import delete, is_delta_matroid, is_even, primal_type
from twistpoly.widthpoly import MIXED, WidthPolynomial, classify, twist_polynomial

pytestmark = pytest.mark.slow

TWISTS = 10_000


def _sweep(check_id):
    small = run_check(check_id, n=4, twists=TWISTS, seed=0)
    start = time.perf_counter()
    big = run_check(check_id, n=5, twists=TWISTS, seed=0)
    elapsed = time.perf_counter() - start
    return small, big, elapsed


def _describe(reports):
    return ", ".join(f"{r.check_id}[{r.params.get('n', '-')}]={r.instances_checked}/{r.violation_count}"
                     for r in reports)


def test_criterion_1_trichotomy_sweep(criterion):
    small, big, elapsed = _sweep("theorem5")
    ok = (small.passed and big.passed and small.instances_checked == 1024 + TWISTS
          and big.instances_checked == 32768 + TWISTS and elapsed < 60)
    assert criterion(1, ok, f"{_describe([small, big])} instances/violations, n=5 in {elapsed:.1f}s"), \
        (small.violations[:3], big.violations[:3])


def test_criterion_2_consecutive_widths_sweep(criterion):
    small, big, elapsed = _sweep("theorem3")
    ok = (small.passed and big.passed and small.instances_checked == 1024 + TWISTS
          and big.instances_checked == 32768 + TWISTS and elapsed < 60)
    assert criterion(2, ok, f"{_describe([small, big])} instances/violations, n=5 in {elapsed:.1f}s"), \
        (small.violations[:3], big.violations[:3])


def test_criterion_3_type_table(criterion):
    r = run_check("table1", n=3, matrix_n=4)
    assert criterion(3, r.passed and r.instances_checked > 0, f"{r.instances_checked} (D, e) pairs, "
                     f"{r.violation_count} violations"), r.violations[:3]


def test_criterion_4_deletion_keeps_primal_type(criterion):
    r = run_check("prim_delete", n=4)
    six = run_check("remark_types")
    D = six_element_system()
    Dm = delete(D, ["1"])
    flips = {e: (primal_type(D, e), primal_type(Dm, e)) for e in ("2", "3", "6")}
    ok = r.passed and six.passed and flips == {"2": ("p", "u"), "3": ("t", "p"), "6": ("u", "t")}
    assert criterion(4, ok, f"{r.instances_checked} ordered pairs, {r.violation_count} violations; "
                     f"six-element flips {' '.join(f'{e}:{a}->{b}' for e, (a, b) in flips.items())}"), r.violations[:3]


def test_criterion_5_nonbinary_instance(criterion):
    D = nonbinary_delta_matroid()
    poly = twist_polynomial(D)
    report = classify(poly)
    ok = (is_delta_matroid(D) and not is_binary(D) and not is_even(D)
          and poly == WidthPolynomial({2: 6, 3: 2}) and report.category == MIXED
          and report.even_part_interpolating and report.odd_part_interpolating
          and run_check("remark_nonbinary").passed)
    assert criterion(5, ok, f"polynomial {poly}, {report.category}")


def test_criterion_6_round_trip(criterion):
    reports = [run_check("roundtrip", n=n) for n in (1, 2, 3, 4)]
    total = sum(r.instances_checked for r in reports)
    bad = sum(r.violation_count for r in reports)
    assert criterion(6, bad == 0 and reports[-1].instances_checked == 1024,
                     f"{total} matrices for n <= 4, {bad} failures")


def test_criterion_7_ribbon_consistency(criterion):
    start = time.perf_counter()
    r = run_check("ribbon_routes", samples=1000, seed=0, max_v=3, max_e=8)
    elapsed = time.perf_counter() - start
    ok = r.passed and r.instances_checked == 1000 and elapsed < 30
    assert criterion(7, ok, f"{r.instances_checked} graphs, {r.violation_count} violations, "
                     f"{r.summary.get('untwisted', 0)} untwisted, {elapsed:.1f}s"), r.violations[:3]


def test_criterion_8_anchored_ribbon_graphs(criterion):
    anchors = [
        (make_ribbon_graph([["h1", "h2"]], [("h1", "h2", True)]), {1: 2}),
        (make_ribbon_graph([["h1", "h2", "h3", "h4"]], [("h1", "h3"), ("h2", "h4")]), {0: 2, 2: 2}),
        (make_ribbon_graph([[]], []), {0: 1}),
    ]
    got = [partial_dual_polynomial(G) for G, _ in anchors]
    ok = all(p.coefficients == want and p(1) == 2 ** G.num_edges for p, (G, want) in zip(got, anchors))
    ok = ok and run_check("ribbon_anchors").passed
    assert criterion(8, ok, "; ".join(str(p) for p in got))


STRUCTURAL = ("twist_algebra", "closure", "sandwich", "commute", "minstratum", "poly_parity")


def test_criterion_9_structural_invariants(criterion):
    reports = [run_check(cid, n=4) for cid in STRUCTURAL]
    ok = all(r.passed and r.instances_checked > 0 for r in reports)
    assert criterion(9, ok, _describe(reports) + " instances/violations"), \
        [(r.check_id, r.violations[:2]) for r in reports if not r.passed]
