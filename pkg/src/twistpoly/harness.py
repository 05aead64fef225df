"""Exhaustive and seeded-random verification sweeps.

Every check splits its domain into small picklable work units.  A unit is
evaluated into a :class:`Partial` (instance count, violations, summary
counters); partials merge associatively in unit order, so a sharded run
returns the same report as a serial one.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from .documents import render_matrix, render_ribbon_graph, render_set_system
from .errors import TwistPolyError
from .gf2 import (
    SymMatGF2,
    delta_matroid_of_matrix,
    gf2_rank,
    is_binary,
    matrix_from_index,
    reconstruct_matrix,
)
from .ribbon import (
    components,
    delta_matroid_of_graph,
    boundary_count,
    graph_counts,
    make_ribbon_graph,
    partial_dual_genus_from_counts,
    partial_dual_polynomial,
    random_ribbon_graph,
)
from .setsys import (
    TYPE_SHIFTS,
    SetSystem,
    delete,
    delete_element,
    element_type,
    is_delta_matroid,
    is_even,
    iter_bits,
    make_set_system,
    primal_type,
    strata,
    twist,
    twist_width_data,
    twist_width_table,
    width_profile,
)
from .widthpoly import EVEN, check_theorem3, check_theorem5, classify, twist_polynomial

MAX_VIOLATIONS = 100
UNIT_SIZE = 512


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    instances_checked: int
    violations: list
    violation_count: int = 0
    summary: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "check_id": self.check_id,
            "passed": self.passed,
            "instances_checked": self.instances_checked,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "summary": self.summary,
            "params": self.params,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@dataclass
class Partial:
    instances: int = 0
    violations: list = field(default_factory=list)
    violation_count: int = 0
    summary: Counter = field(default_factory=Counter)

    def fail(self, **data) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_VIOLATIONS:
            self.violations.append(data)

    def merge(self, other: "Partial") -> "Partial":
        room = MAX_VIOLATIONS - len(self.violations)
        return Partial(
            self.instances + other.instances,
            self.violations + other.violations[:max(room, 0)],
            self.violation_count + other.violation_count,
            self.summary + other.summary,
        )


class UnknownCheckError(TwistPolyError):
    pass


# ---------------------------------------------------------------- domains

def labels_for(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def matrix_count(n: int) -> int:
    return 1 << (n * (n + 1) // 2)


def enumerate_symmetric_matrices(n: int) -> Iterator[SymMatGF2]:
    """All symmetric ``n x n`` GF(2) matrices, ordered by their upper-triangle bit pattern."""
    if not 1 <= n <= 6:
        raise ValueError(f"matrix dimension must be in 1..6, got {n}")
    for index in range(matrix_count(n)):
        yield matrix_from_index(n, index)


@lru_cache(maxsize=None)
def _delta_matroids(n: int) -> tuple[SetSystem, ...]:
    labels = labels_for(n)
    N = 1 << n
    out = []
    for collection in range(1, 1 << N):
        D = SetSystem(labels, tuple(x for x in range(N) if collection >> x & 1))
        if is_delta_matroid(D):
            out.append(D)
    return tuple(out)


def enumerate_delta_matroids(n: int) -> Iterator[SetSystem]:
    """Every delta-matroid on the labelled ground set ``1..n``."""
    if not 1 <= n <= 4:
        raise ValueError(f"delta-matroid enumeration supports 1 <= n <= 4, got {n}")
    yield from _delta_matroids(n)


def _chunks(total: int, size: int = UNIT_SIZE):
    for start in range(0, total, size):
        yield start, min(total, start + size)


def _dm_units(n_max: int, n_min: int = 1):
    return [("dm", k, a, b) for k in range(n_min, n_max + 1) for a, b in _chunks(len(_delta_matroids(k)))]


def _dm_instances(unit):
    _, k, a, b = unit
    return _delta_matroids(k)[a:b]


def _matrix_units(dims, tag: str = "mat"):
    return [(tag, d, a, b) for d in dims for a, b in _chunks(matrix_count(d))]


def _twist_sample(n: int, seed: int, k: int) -> tuple[int, int]:
    rng = random.Random(f"twist:{seed}:{n}:{k}")
    return rng.randrange(matrix_count(n)), rng.randrange(1 << n)


def _binary_instances(unit, seed: int):
    """Yield ``(D, repro)`` for matrix units and random-twist units."""
    tag, d, a, b = unit
    if tag == "mat":
        for index in range(a, b):
            C = matrix_from_index(d, index)
            yield delta_matroid_of_matrix(C), {"matrix": render_matrix(C), "matrix_index": index}
    else:
        for k in range(a, b):
            index, A = _twist_sample(d, seed, k)
            C = matrix_from_index(d, index)
            D = twist(delta_matroid_of_matrix(C), A)
            yield D, {"matrix": render_matrix(C), "matrix_index": index, "twist": D.names(A)}


def _with_set_system(D: SetSystem, **extra) -> dict:
    return {"set_system": render_set_system(D), **extra}


# ---------------------------------------------------------------- checks

def _theorem_units(p):
    units = _matrix_units([p["n"]])
    total = int(p.get("twists", 0))
    units += [("twist", p["n"], a, b) for a, b in _chunks(total)]
    return units


def _hypotheses_ok(D: SetSystem, out: Partial, repro: dict) -> bool:
    if not is_delta_matroid(D):
        out.fail(reason="generated instance is not a delta-matroid", **repro)
        return False
    if not is_binary(D, assume_delta_matroid=True):
        out.fail(reason="generated instance is not binary", **repro)
        return False
    return True


def _eval_theorem5(unit, p) -> Partial:
    out = Partial()
    for D, repro in _binary_instances(unit, p["seed"]):
        out.instances += 1
        if not _hypotheses_ok(D, out, repro):
            continue
        report = check_theorem5(D, verify_hypotheses=False)
        out.summary[report.category] += 1
        if not report.theorem5_conclusion:
            poly = twist_polynomial(D)
            out.fail(reason="twist polynomial is mixed but not both-interpolating",
                     polynomial={str(k): v for k, v in poly.coefficients.items()}, **repro)
    return out


def _eval_theorem3(unit, p) -> Partial:
    out = Partial()
    for D, repro in _binary_instances(unit, p["seed"]):
        out.instances += 1
        if not _hypotheses_ok(D, out, repro):
            continue
        if not check_theorem3(D, verify_hypotheses=False):
            data = twist_width_data(D)
            out.fail(reason="consecutive twist widths not followed by every larger width",
                     width_set=sorted(data.width_set), w_M=data.w_M, **repro)
        else:
            data = twist_width_data(D)
            ws = data.width_set
            out.summary["with_consecutive_pair" if any(k + 1 in ws for k in ws) else "no_consecutive_pair"] += 1
    return out


def _table1_pairs(unit):
    if unit[0] == "dm":
        for D in _dm_instances(unit):
            yield D, {}
    else:
        _, d, a, b = unit
        for index in range(a, b):
            C = matrix_from_index(d, index)
            yield delta_matroid_of_matrix(C), {"matrix_index": index}


def _eval_table1(unit, p) -> Partial:
    out = Partial()
    for D, extra in _table1_pairs(unit):
        before = width_profile(D)
        for e in D.labels:
            out.instances += 1
            t = element_type(D, e, cross_check=True)
            after = width_profile(twist(D, [e]))
            dmin, dmax = TYPE_SHIFTS[str(t)]
            expected = (before.r_min + dmin, before.r_max + dmax)
            out.summary[str(t)] += 1
            if (after.r_min, after.r_max) != expected or abs(after.width - before.width) > 2:
                out.fail(reason="single-element twist disagrees with the type table", element=e, type=str(t),
                         before=list(before), after=list(after), **_with_set_system(D, **extra))
    return out


def _eval_prim_delete(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        for e1, e2 in itertools.permutations(D.labels, 2):
            out.instances += 1
            before = primal_type(D, e2)
            after = primal_type(delete_element(D, e1), e2)
            if before != after:
                out.fail(reason="deletion changed a primal type", deleted=e1, element=e2,
                         before=before, after=after, **_with_set_system(D))
    return out


def _eval_all_u_even(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        if not is_binary(D, assume_delta_matroid=True):
            out.summary["non_binary_skipped"] += 1
            continue
        out.instances += 1
        if all(primal_type(D, e) == "u" for e in D.labels):
            out.summary["all_type_u"] += 1
            if not is_even(D):
                out.fail(reason="binary delta-matroid with all elements of type u is odd", **_with_set_system(D))
    return out


def _eval_sandwich(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        low, high = strata(D, "min", 0), strata(D, "max", 0)
        for x in D.feasible:
            out.instances += 1
            if not any(a & ~x == 0 for a in low) or not any(x & ~b == 0 for b in high):
                out.fail(reason="feasible set not sandwiched between a minimum and a maximum set",
                         feasible=D.names(x), **_with_set_system(D))
    return out


def _eval_commute(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        n = D.n
        # every disjoint (A, B): each element goes to A, B or neither
        for assignment in itertools.product(range(3), repeat=n):
            A = sum(1 << i for i, s in enumerate(assignment) if s == 1)
            B = sum(1 << i for i, s in enumerate(assignment) if s == 2)
            out.instances += 1
            lhs = delete(twist(D, A), B)
            rest = delete(D, B)
            rhs = twist(rest, D.names(A))
            if lhs != rhs:
                out.fail(reason="(D*A)-B differs from (D-B)*A", A=D.names(A), B=D.names(B), **_with_set_system(D))
    return out


def _eval_minstratum(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        low = strata(D, "min", 0)
        for e in D.labels:
            if primal_type(D, e) != "t":
                continue
            out.instances += 1
            if strata(twist(D, [e]), "min", 0) != low:
                out.fail(reason="minimum stratum moved under a type-t twist", element=e, **_with_set_system(D))
    return out


def _ribbon_sample(k: int, p):
    rng = random.Random(f"ribbon:{p['seed']}:{k}")
    v = rng.randint(1, p["max_v"])
    e = rng.randint(0, p["max_e"])
    tp = 0.0 if k % 4 == 0 else rng.choice([0.25, 0.5, 0.75, 1.0])
    return v, e, tp, rng.randrange(1 << 32)


def _eval_ribbon_routes(unit, p) -> Partial:
    out = Partial()
    _, _, a, b = unit
    for k in range(a, b):
        v, e, tp, gseed = _ribbon_sample(k, p)
        G = random_ribbon_graph(v, e, tp, gseed)
        out.instances += 1
        repro = {"sample": k, "ribbon_graph": render_ribbon_graph(G),
                 "generator": {"v": v, "e": e, "twist_probability": tp, "seed": gseed}}
        D = delta_matroid_of_graph(G)
        if not is_delta_matroid(D):
            out.fail(reason="(a) D(G) is not a delta-matroid", **repro)
            continue
        if not is_binary(D, assume_delta_matroid=True):
            out.fail(reason="(a) D(G) is not binary", **repro)
        counts = graph_counts(G)
        widths = twist_width_table(D)
        if counts.euler_genus != int(widths[0]):
            out.fail(reason="(b) Euler genus differs from width of D(G)",
                     euler_genus=counts.euler_genus, width=int(widths[0]), **repro)
        full = (1 << e) - 1
        if int(widths[full]) != counts.euler_genus:
            out.fail(reason="(c) full twist width differs from Euler genus", **repro)
        for A in range(1 << e):
            oracle = partial_dual_genus_from_counts(G, A)
            if oracle != int(widths[A]):
                out.fail(reason="(c) width route and boundary-count route disagree", A=[G.edge_names[i] for i in iter_bits(A)], width=int(widths[A]), oracle=oracle, **repro)
                break
            if boundary_count(G, A) < components(G, A):
                out.fail(reason="boundary count below component count", A=[G.edge_names[i] for i in iter_bits(A)],
                         **repro)
                break
        poly = partial_dual_polynomial(G)
        report = classify(poly)
        out.summary[report.category] += 1
        if not report.theorem5_conclusion:
            out.fail(reason="(d) partial-dual polynomial violates the classification", **repro)
        if sum(poly.coefficients.values()) != 1 << e:
            out.fail(reason="coefficient sum differs from 2^e", **repro)
        if tp == 0.0:
            out.summary["untwisted"] += 1
            if not counts.orientable or report.category != EVEN:
                out.fail(reason="(e) untwisted graph without an even polynomial", **repro)
    return out


def _ribbon_units(p):
    return [("ribbon", 0, a, b) for a, b in _chunks(int(p["samples"]), 64)]


SIX_LABELS = ("1", "2", "3", "4", "5", "6")
SIX_FEASIBLE = (("1", "2"), ("3", "4", "5"), ("3", "4", "5", "6"))
SIX_TYPE_CHANGES = {"2": ("p", "u"), "3": ("t", "p"), "6": ("u", "t")}
# 4 and 5 sit in exactly the same feasible sets as 3, so they change the same way
SIX_SYMMETRIC = {"4": "3", "5": "3"}
NONBINARY_FEASIBLE = ((), ("1", "2"), ("1", "3"), ("2", "3"), ("1", "2", "3"))


def six_element_system() -> SetSystem:
    return make_set_system(SIX_LABELS, SIX_FEASIBLE)


def nonbinary_delta_matroid() -> SetSystem:
    return make_set_system(("1", "2", "3"), NONBINARY_FEASIBLE)


def _eval_six_types(unit, p) -> Partial:
    out = Partial()
    D = six_element_system()
    Dm = delete(D, ["1"])
    expected_after = make_set_system(("2", "3", "4", "5", "6"), [("3", "4", "5"), ("3", "4", "5", "6")])
    out.instances += 1
    if Dm != expected_after:
        out.fail(reason="D - {1} differs from the listed set system", got=render_set_system(Dm))
    if is_delta_matroid(D):
        out.fail(reason="six-element set system unexpectedly satisfies the exchange axiom")
    changed = {}
    for e in D.labels[1:]:
        out.instances += 1
        before, after = primal_type(D, e), primal_type(Dm, e)
        if before != after:
            changed[e] = (before, after)
    expected = dict(SIX_TYPE_CHANGES)
    expected.update({e: SIX_TYPE_CHANGES[twin] for e, twin in SIX_SYMMETRIC.items()})
    if changed != expected:
        out.fail(reason="type changes differ from the expected three",
                 got={k: list(v) for k, v in changed.items()},
                 expected={k: list(v) for k, v in sorted(expected.items())})
    out.summary.update({f"{e}:{b}->{a}": 1 for e, (b, a) in changed.items()})
    return out


def _eval_nonbinary_instance(unit, p) -> Partial:
    out = Partial()
    D = nonbinary_delta_matroid()
    out.instances += 1
    facts = {
        "is_delta_matroid": is_delta_matroid(D),
        "is_binary": is_binary(D),
        "is_even": is_even(D),
        "all_type_u": all(primal_type(D, e) == "u" for e in D.labels),
    }
    poly = twist_polynomial(D)
    report = classify(poly)
    expected = {"is_delta_matroid": True, "is_binary": False, "is_even": False, "all_type_u": True}
    if facts != expected:
        out.fail(reason="structural facts differ", got=facts, expected=expected)
    if poly.coefficients != {2: 6, 3: 2}:
        out.fail(reason="twist polynomial differs from 6z^2 + 2z^3", got={str(k): v for k, v in poly.coefficients.items()})
    if not (report.category == "mixed" and report.even_part_interpolating and report.odd_part_interpolating):
        out.fail(reason="classification differs from mixed / both interpolating", got=report.category)
    return out


def _eval_roundtrip(unit, p) -> Partial:
    out = Partial()
    _, d, a, b = unit
    for index in range(a, b):
        C = matrix_from_index(d, index)
        out.instances += 1
        R = reconstruct_matrix(delta_matroid_of_matrix(C))
        if R != C:
            out.fail(reason="reconstruct_matrix(D(C)) != C", matrix=render_matrix(C), got=render_matrix(R))
    return out


def _eval_matrix_facts(unit, p) -> Partial:
    out = Partial()
    _, d, a, b = unit
    for index in range(a, b):
        C = matrix_from_index(d, index)
        out.instances += 1
        D = delta_matroid_of_matrix(C)
        if not D.is_normal or not is_delta_matroid(D):
            out.fail(reason="D(C) is not a normal delta-matroid", matrix=render_matrix(C))
            continue
        if all(not C.entry(i, i) for i in range(d)) and gf2_rank(C.rows) % 2:
            out.fail(reason="zero-diagonal symmetric matrix of odd rank", matrix=render_matrix(C))
        for A in range(1 << d):
            if not is_binary(twist(D, A), assume_delta_matroid=True):
                out.fail(reason="twist of D(C) judged non-binary", matrix=render_matrix(C), A=D.names(A))
                break
    return out


def _eval_twist_algebra(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        full = D.full
        twists = [twist(D, A) for A in range(full + 1)]
        for A in range(full + 1):
            out.instances += 1
            if twist(twists[A], A) != D:
                out.fail(reason="twist is not an involution", A=D.names(A), **_with_set_system(D))
            for B in range(full + 1):
                if twist(twists[A], B) != twists[A ^ B]:
                    out.fail(reason="twist composition fails", A=D.names(A), B=D.names(B), **_with_set_system(D))
    return out


def _eval_closure(unit, p) -> Partial:
    out = Partial()
    for D in _dm_instances(unit):
        for A in range(D.full + 1):
            out.instances += 1
            if not is_delta_matroid(twist(D, A)):
                out.fail(reason="twist left the delta-matroid class", A=D.names(A), **_with_set_system(D))
            if not is_delta_matroid(delete(D, A)):
                out.fail(reason="deletion left the delta-matroid class", A=D.names(A), **_with_set_system(D))
            if A:
                # order independence of deletion
                results = {delete_sequence(D, order) for order in itertools.permutations(D.names(A))}
                if len(results) != 1:
                    out.fail(reason="deletion depends on order", A=D.names(A), **_with_set_system(D))
    return out


def delete_sequence(D: SetSystem, order) -> SetSystem:
    for e in order:
        D = delete_element(D, e)
    return D


def _poly_instances(unit):
    if unit[0] == "dm":
        for D in _dm_instances(unit):
            yield D, {}
    else:
        _, d, a, b = unit
        for index in range(a, b):
            yield delta_matroid_of_matrix(matrix_from_index(d, index)), {"matrix_index": index}


def _eval_poly_parity(unit, p) -> Partial:
    out = Partial()
    for D, extra in _poly_instances(unit):
        out.instances += 1
        poly = twist_polynomial(D)
        sup = poly.support
        if sum(poly.coefficients.values()) != 1 << D.n:
            out.fail(reason="coefficient sum differs from 2^n", **_with_set_system(D, **extra))
        if any(c % 2 for c in poly.coefficients.values()):
            out.fail(reason="odd coefficient", **_with_set_system(D, **extra))
        if any(b - a > 2 for a, b in zip(sup, sup[1:])):
            out.fail(reason="support gap larger than 2", **_with_set_system(D, **extra))
        if set(sup) != twist_width_data(D).width_set:
            out.fail(reason="support differs from the twist width set", **_with_set_system(D, **extra))
        for e in D.labels:
            if abs(width_profile(twist(D, [e])).width - width_profile(D).width) > 2:
                out.fail(reason="single twist changed the width by more than 2", element=e,
                         **_with_set_system(D, **extra))
    return out


def _eval_nonbinary(unit, p) -> Partial:
    # exploration only: outcomes land in the summary, never in violations
    out = Partial()
    for D in _dm_instances(unit):
        if is_binary(D, assume_delta_matroid=True):
            continue
        out.instances += 1
        report = classify(twist_polynomial(D))
        out.summary[report.category] += 1
        out.summary["conclusion_holds" if report.theorem5_conclusion else "conclusion_fails"] += 1
    return out


def _eval_ribbon_anchors(unit, p) -> Partial:
    out = Partial()
    anchors = {
        "twisted_loop": (make_ribbon_graph([("h1", "h2")], [("h1", "h2", True)]), {1: 2}),
        "interleaved_bouquet": (
            make_ribbon_graph([("h1", "h2", "h3", "h4")], [("h1", "h3", False), ("h2", "h4", False)]),
            {0: 2, 2: 2},
        ),
        "edgeless_vertex": (make_ribbon_graph([()], []), {0: 1}),
        "single_bridge": (make_ribbon_graph([("h1",), ("h2",)], [("h1", "h2", False)]), {0: 2}),
    }
    for name, (G, expected) in anchors.items():
        out.instances += 1
        poly = partial_dual_polynomial(G)
        if poly.coefficients != expected or sum(expected.values()) != 1 << G.num_edges:
            out.fail(reason="anchored polynomial differs", graph=name,
                     got={str(k): v for k, v in poly.coefficients.items()})
    return out


@dataclass(frozen=True)
class Check:
    description: str
    units: Callable[[dict], list]
    evaluate: Callable[[tuple, dict], Partial]
    defaults: dict


def _single(p):
    return [("fixed", 0, 0, 1)]


CHECKS: dict[str, Check] = {
    "theorem5": Check("twist polynomial of every binary delta-matroid obeys the even/odd/interpolating trichotomy",
                      _theorem_units, _eval_theorem5, {"n": 4, "twists": 0, "seed": 0}),
    "theorem3": Check("two consecutive twist widths force every larger width up to the maximum",
                      _theorem_units, _eval_theorem3, {"n": 4, "twists": 0, "seed": 0}),
    "table1": Check("single-element twists shift r_min / r_max exactly as the type table says",
                    lambda p: _dm_units(p["n"], p["n"]) + _matrix_units(range(1, p["matrix_n"] + 1)),
                    _eval_table1, {"n": 3, "matrix_n": 4}),
    "prim_delete": Check("deleting one element keeps the primal type of every other element",
                         lambda p: _dm_units(p["n"], 2), _eval_prim_delete, {"n": 4}),
    "lemma4": Check("binary delta-matroids whose elements all have primal type u are even",
                    lambda p: _dm_units(p["n"]), _eval_all_u_even, {"n": 4}),
    "sandwich": Check("every feasible set lies between a minimum and a maximum feasible set",
                      lambda p: _dm_units(p["n"]), _eval_sandwich, {"n": 4}),
    "commute": Check("(D*A)-B equals (D-B)*A for disjoint A and B",
                     lambda p: _dm_units(p["n"]), _eval_commute, {"n": 4}),
    "minstratum": Check("twisting a type-t element keeps the minimum stratum",
                        lambda p: _dm_units(p["n"]), _eval_minstratum, {"n": 4}),
    "ribbon_routes": Check("random ribbon graphs: D(G) binary, genus = width, routes agree, classification holds",
                           _ribbon_units, _eval_ribbon_routes,
                           {"samples": 1000, "seed": 0, "max_v": 3, "max_e": 8}),
    "remark_types": Check("six-element set system: deleting 1 flips types of 2, 3, 6",
                          _single, _eval_six_types, {}),
    "remark_nonbinary": Check("the odd non-binary delta-matroid on three elements",
                              _single, _eval_nonbinary_instance, {}),
    "roundtrip": Check("reconstruct_matrix(D(C)) == C",
                       lambda p: _matrix_units([p["n"]]), _eval_roundtrip, {"n": 4}),
    "matrix_facts": Check("D(C) normal delta-matroid, zero-diagonal ranks even, binaryness twist-closed",
                          lambda p: _matrix_units(range(1, p["n"] + 1)), _eval_matrix_facts, {"n": 4}),
    "twist_algebra": Check("twist is an involution and composes by symmetric difference",
                           lambda p: _dm_units(p["n"]), _eval_twist_algebra, {"n": 4}),
    "closure": Check("delta-matroids are closed under twist and deletion; deletion order is immaterial",
                     lambda p: _dm_units(p["n"]), _eval_closure, {"n": 4}),
    "poly_parity": Check("twist polynomials: even coefficients, sum 2^n, support gaps <= 2",
                         lambda p: _dm_units(p["n"]) + _matrix_units(range(1, p["n"] + 1)),
                         _eval_poly_parity, {"n": 4}),
    "ribbon_anchors": Check("hand-computed partial-dual polynomials of small ribbon graphs",
                            _single, _eval_ribbon_anchors, {}),
    "nonbinary": Check("exploration: classification of non-binary delta-matroids (reported, never asserted)",
                       lambda p: _dm_units(p["n"]), _eval_nonbinary, {"n": 3}),
}


def _validate(check_id: str, p: dict) -> None:
    if "n" in p:
        n = p["n"]
        if check_id in ("theorem5", "theorem3", "roundtrip", "matrix_facts"):
            if not 1 <= n <= 6:
                raise ValueError(f"{check_id}: matrix dimension n must be in 1..6, got {n}")
        elif not 1 <= n <= 4:
            raise ValueError(f"{check_id}: delta-matroid size n must be in 1..4, got {n}")
    if "matrix_n" in p and not 1 <= p["matrix_n"] <= 6:
        raise ValueError(f"{check_id}: matrix_n must be in 1..6, got {p['matrix_n']}")
    for key in ("samples", "twists"):
        if key in p and p[key] < 0:
            raise ValueError(f"{check_id}: {key} must be non-negative")
    if "max_v" in p and p["max_v"] < 1:
        raise ValueError(f"{check_id}: max_v must be at least 1")
    if "max_e" in p and not 0 <= p["max_e"] <= 20:
        raise ValueError(f"{check_id}: max_e must be in 0..20")


def _run_unit(args):
    check_id, unit, params = args
    return CHECKS[check_id].evaluate(unit, params)


def run_check(check_id: str, jobs: int = 1, **params) -> CheckReport:
    """Run one named check over its domain; ``params`` override the check's defaults."""
    if check_id not in CHECKS:
        raise UnknownCheckError(f"unknown check {check_id!r}; known: {', '.join(sorted(CHECKS))}")
    check = CHECKS[check_id]
    unknown = set(params) - set(check.defaults)
    if unknown:
        raise ValueError(f"{check_id}: unsupported parameter(s) {', '.join(sorted(unknown))}")
    p = {**check.defaults, **params}
    _validate(check_id, p)
    start = time.perf_counter()
    units = check.units(p)
    total = Partial()
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_unit, [(check_id, u, p) for u in units]):
                total = total.merge(part)
    else:
        for u in units:
            total = total.merge(check.evaluate(u, p))
    return CheckReport(
        check_id=check_id,
        instances_checked=total.instances,
        violations=total.violations,
        violation_count=total.violation_count,
        summary=dict(sorted(total.summary.items())),
        params=p,
        elapsed=time.perf_counter() - start,
    )
