"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.  All comparisons are exact.
"""
import io
import sys
from pathlib import Path

import pytest
from oracles import graded_dims_by_relations

from qschur_hh.algebra import build_A_e, center, heredity_chain_search, idempotent_ideal, is_heredity_ideal, loop
from qschur_hh.blockcomb import abacus_from_partition, core_weight_oracle, e_core_and_weight
from qschur_hh.cli import RunConfig, run
from qschur_hh.hochschild import (cochain_dims, even_part_hilbert, hh_dims, hom_kernel_dims,
                                  verify_ring_presentation)
from qschur_hh.linalg import GF, QQ
from qschur_hh.resolution import (generator_multiset, generic_minimal_resolution, paper_resolution,
                                  paper_resolution_term, verify_complex)
from qschur_hh.symwreath import (brute_force_invariant_dims, partitions, quotient_by_kernel_dims,
                                 truncated_invariant_dims, wreath_hh_dims)

REPORTS = Path(__file__).resolve().parent.parent / "reports"


def emit(num, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {detail}"
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()
    return ok


def criterion_1():
    bad = []
    for e in range(2, 9):
        A = build_A_e(e)
        # oracle: graded dims of kQ/I from the span of u*r*v, independent of the rewriting system
        oracle = graded_dims_by_relations(e)
        if A.dim != 4 * e - 3 or sum(oracle) != A.dim or oracle[3:] != [0, 0] or len(center(A)) != e:
            bad.append(e)
    return emit(1, not bad, "dim A_e = 4e-3 and dim Z(A_e) = e for e = 2..8" + (f"; failures {bad}" if bad else ""))


def criterion_2():
    bad = []
    for e in range(2, 6):
        gen = generic_minimal_resolution(build_A_e(e), 2 * e)
        if not gen.info["complete"] or gen.length != 2 * (e - 1):
            bad.append((e, "length"))
        for n in range(2 * e + 2):
            got = generator_multiset(gen.generators(n)) if n <= gen.length else {}
            want = generator_multiset(paper_resolution_term(e, n))
            if got != want or (n > 2 * (e - 1)) != (not want):
                bad.append((e, n))
    return emit(2, not bad, "generic minimal resolution terms equal the printed terms, e = 2..5, length 2(e-1)"
                + (f"; failures {bad}" if bad else ""))


def criterion_3():
    bad = []
    for e in range(2, 6):
        rpt = verify_complex(paper_resolution(e))
        if not rpt.ok:
            bad.append((e, rpt.first_failure()))
    return emit(3, not bad, "repaired differentials: d o d = 0, exact with H_0 = A_e, minimal, e = 2..5"
                + (f"; failures {bad}" if bad else ""))


def kernel_table(e, n):
    s, r = divmod(n - 1, 4)
    return e - 2 * s - 1 if r in (0, 1) else e - 2 * s - 2


def criterion_4():
    bad = []
    for e in range(2, 7):
        c = cochain_dims(e)
        if [c[n] for n in range(1, 2 * e - 1)] != [2 * e - n - 1 for n in range(1, 2 * e - 1)]:
            bad.append((e, "Hom(R_n, A)"))
        k = hom_kernel_dims(e)
        # the case table applies where Ker d_n != 0, i.e. 1 <= n <= 2e-3; at n = 2(e-1), Ker d_n = 0
        if any(k[n] != kernel_table(e, n) for n in range(1, 2 * e - 2)) or k[2 * e - 2] != 0:
            bad.append((e, "Hom(Ker d_n, A)"))
    return emit(4, not bad, "dim Hom(R_n, A_e) = 2e-n-1 (e = 2..6); dim Hom(Ker d_n, A_e) matches the case table "
                "for 1 <= n <= 2e-3 and is 0 at n = 2(e-1)" + (f"; failures {bad}" if bad else ""))


def criterion_5():
    bad = []
    for e in range(2, 7):
        for F in (QQ, GF(2), GF(3), GF(5)):
            if hh_dims(e, F) != [e] + [1] * (2 * (e - 1)):
                bad.append((e, F))
    return emit(5, not bad, "HH dims [e, 1, ..., 1] through 2(e-1), e = 2..6, over Q, GF(2), GF(3), GF(5)"
                + (f"; failures {bad}" if bad else ""))


def criterion_6():
    bad = []
    for e in range(2, 5):
        rpt = verify_ring_presentation(e)
        kinds = {c["kind"] for c in rpt.checks}
        if not rpt.passed or not {"relation", "nonvanishing", "commutativity", "well-defined"} <= kinds:
            bad.append((e, [c["check"] for c in rpt.failures()]))
    return emit(6, not bad, "every relation of J vanishes, y^s and x*y^s survive, graded commutativity holds, "
                "e = 2..4" + (f"; failures {bad}" if bad else ""))


def criterion_7():
    bad = [e for e in range(2, 7) if even_part_hilbert(e) != hh_dims(e).even_part()]
    return emit(7, not bad, "even part of the presented ring equals the even entries of hh_dims, e = 2..6"
                + (f"; failures {bad}" if bad else ""))


def criterion_8():
    bad = []
    for e in range(1, 5):
        for w in range(1, 5):
            if quotient_by_kernel_dims(e, w, 10) != truncated_invariant_dims(e, w).truncate(10):
                bad.append((e, w))
    # the kernel-pi report is a frozen artifact; regenerate and compare byte for byte
    out = io.StringIO()
    run(RunConfig(command="kernel-pi", e=2, w=2, max_degree=7, format="json"), out, io.StringIO())
    frozen = (REPORTS / "kernel_pi_e2_w2.json").read_text()
    if out.getvalue() != frozen or '"power_sum_witness": "p_2"' not in frozen:
        bad.append("kernel-pi report")
    return emit(8, not bad, "Lambda_w / Ker pi equals the truncated invariants for e, w <= 4 up to degree 10; "
                "kernel-pi report reproduced with witness p_2" + (f"; failures {bad}" if bad else ""))


# frozen values from the generating function, cross-checked below by brute force for w = 2
WREATH_FROZEN = {
    (2, 2, "unsigned"): [5, 3, 4, 1, 1], (2, 2, "signed"): [5, 3, 3, 1, 1],
    (2, 3, "unsigned"): [10, 8, 11, 5, 4, 1, 1], (2, 3, "signed"): [10, 8, 9, 4, 3, 1, 1],
    (3, 2, "unsigned"): [9, 4, 5, 5, 6, 2, 2, 1, 1], (3, 2, "signed"): [9, 4, 4, 5, 6, 2, 1, 1, 1],
}


def criterion_9():
    bad = []
    for e in (2, 3):
        v = hh_dims(e)
        for conv in ("unsigned", "signed"):
            if wreath_hh_dims(v, 1, conv) != v:
                bad.append((e, 1, conv))
            for w in (2, 3):
                got = wreath_hh_dims(v, w, conv)
                if (e, w, conv) in WREATH_FROZEN and got != WREATH_FROZEN[(e, w, conv)]:
                    bad.append((e, w, conv))
        if wreath_hh_dims(v, 2, "unsigned") != brute_force_invariant_dims(v, 2, "unsigned") + v:
            bad.append((e, 2, "brute force"))
    return emit(9, not bad, "wreath formula: w = 1 identity, both conventions for w = 2, 3, unsigned w = 2 "
                "matches swap enumeration" + (f"; failures {bad}" if bad else ""))


def criterion_10():
    bad = []
    for n in range(13):
        for p in partitions(n):
            for e in range(2, 6):
                core, w = e_core_and_weight(p, e)
                if core_weight_oracle(p, e) != {(core, w)} or n != core.size + e * w:
                    bad.append((p, e))
                for beads in range(len(p), len(p) + 2 * e):
                    if abacus_from_partition(p, e, beads).push_up().partition() != core:
                        bad.append((p, e, beads))
    return emit(10, not bad, "abacus cores and weights agree with rim-hook removal, |p| = |core| + e*weight, "
                "bead-count independent (|p| <= 12, e <= 5)" + (f"; failures {bad[:3]}" if bad else ""))


def criterion_11():
    bad = []
    for e in range(2, 6):
        A = build_A_e(e)
        if not is_heredity_ideal(A, idempotent_ideal(A, [e])).ok:
            bad.append((e, "A e_e A"))
    A2 = build_A_e(2)
    res = is_heredity_ideal(A2, idempotent_ideal(A2, [1]))
    if res.ok or res.witness != loop(A2, 1):
        bad.append("A_2 e_1 A_2")
    for e in range(2, 5):
        chain = heredity_chain_search(build_A_e(e))
        if chain is None or chain[-1].dim != 0 or chain[0].dim != 4 * e - 3 or len(chain) != e + 1:
            bad.append((e, "chain"))
    return emit(11, not bad, "A e_e A is a heredity ideal, A_2 e_1 A_2 is not (witness c_1), full heredity "
                "chains for e <= 4" + (f"; failures {bad}" if bad else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 12)])
def test_criterion(check):
    assert check()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
