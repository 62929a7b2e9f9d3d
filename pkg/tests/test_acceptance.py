"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  All comparisons are exact (integer / polynomial equality);
each criterion also asserts its wall-clock budget.
"""

import time

from vcinv.gf import field_make
from vcinv.groups import enumerate_group, group_id
from vcinv.hilbert import (
    from_free_module,
    gorenstein_exponent,
    sl2_numerator_first,
    sl2_numerator_second_total,
    sl2_numerator_third,
    sl2_series_closed_form,
)
from vcinv.invariants import (
    IDENTITY_TAGS,
    basis_degrees,
    catalog,
    h_invariant,
    run_identity_suite,
    verify_h_star_symmetry,
)
from vcinv.ringcalc import (
    dimension_table,
    hsop_degrees,
    relative_trace,
    subalgebra_nonmembership_h1,
    verify_free_basis,
    verify_generators,
)

SPECS = {q: field_make(*pr) for q, pr in {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1)}.items()}


class _Criterion:
    def __init__(self, number, description, budget):
        self.number = number
        self.description = description
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(
            f"ACCEPTANCE {self.number}: {status} - {self.description} "
            f"({elapsed:.1f}s, budget {self.budget}s)"
        )
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.number} exceeded its {self.budget}s budget: {elapsed:.1f}s"
            )
        return False


def test_criterion_1_identity_suite():
    with _Criterion(1, "all 16 identities and h-star symmetry, q in {2,3,4,5}", 30):
        for q, spec in SPECS.items():
            results = run_identity_suite(spec)
            assert len(results) == len(IDENTITY_TAGS) == 16
            for r in results:
                assert r.passed, (q, r.tag, r.witness_text())
            for r in verify_h_star_symmetry(spec):
                assert r.passed, (q, r.tag)


def test_criterion_2_h_family_divisibility_and_invariance():
    with _Criterion(2, "h_s exact division and special-linear invariance", 30):
        from vcinv.groups import is_invariant

        for q, spec in SPECS.items():
            for s in range(q):
                h = h_invariant(spec, s)  # raises NotDivisibleError on failure
                assert is_invariant(h, group_id("sl2", spec)), (q, s)
        for q in (2, 3):
            spec = SPECS[q]
            elems = enumerate_group(group_id("sl2", spec))
            for s in range(q):
                h = catalog(spec).h(s)
                assert all(g.act(h) == h for g in elems), (q, s)


def test_criterion_3_worked_example_reproduction():
    with _Criterion(3, "q=3 closed-form numerator blocks and exponent 4", 1):
        def sparse(c):
            return {i: v for i, v in enumerate(c) if v}

        assert sparse(sl2_numerator_first(3)) == {0: 1, 4: 2, 8: 3, 12: 2, 16: 1}
        assert sparse(sl2_numerator_second_total(3)) == {
            2: 1, 4: 1, 6: 3, 8: 2, 10: 3, 12: 1, 14: 1,
        }
        assert sparse(sl2_numerator_third(3)) == {6: 1, 8: 1, 10: 1}
        assert gorenstein_exponent(sl2_series_closed_form(3)) == 4


def test_criterion_4_series_equals_brute_force_dimensions():
    with _Criterion(4, "free-module series equal brute-force dimension tables", 600):
        jobs = [
            ("sl2", "S", 2, 24),
            ("sl2", "S", 3, 18),
            ("gl2", "D", 3, 18),
            ("p2", "P", 2, 16),
            ("p2", "P", 3, 16),
        ]
        for group, basis_id, q, dmax in jobs:
            spec = SPECS[q]
            series = from_free_module(basis_degrees(q, basis_id), hsop_degrees(group, q))
            dims = dimension_table(group_id(group, spec), dmax).dims
            assert list(dims) == series.expand(dmax), (group, q)


def test_criterion_5_free_basis_certificates():
    with _Criterion(5, "count = rank = dim for S, P (q=2,3) and D (q=3) to degree 12", 600):
        for which, q in [("S", 2), ("S", 3), ("P", 2), ("P", 3), ("D", 3)]:
            report = verify_free_basis(SPECS[q], which, 12)
            assert report.verdict, (which, q, report.rows)


def test_criterion_6_gorenstein_exponents():
    with _Criterion(6, "functional-equation exponent 4 for both rings, all q", 1):
        for q in (2, 3, 4, 5):
            sl2 = from_free_module(basis_degrees(q, "S"), hsop_degrees("sl2", q))
            gl2 = from_free_module(basis_degrees(q, "D"), hsop_degrees("gl2", q))
            assert gorenstein_exponent(sl2) == 4, q
            assert gorenstein_exponent(gl2) == 4, q


def test_criterion_7_trace_case_formulas():
    with _Criterion(7, "relative trace reproduces the three projection formulas", 120):
        spec = SPECS[3]
        q = 3
        cat = catalog(spec)
        u1, u1s, u0 = cat.get("u1"), cat.get("u1s"), cat.get("u0")
        d22, d22s = cat.get("d22"), cat.get("d22s")

        def expect(f, weight):
            got = relative_trace(f, spec)
            if weight % (q - 1) == 0:
                assert got == f
            else:
                assert got.is_zero()

        for i in range(3):
            for j in range(3):
                base = u1s**i * u1**j
                for a in range(2):
                    for b in range(2):
                        expect(base * d22s**a * d22**b, a - b)
                        for k in range(1, q + 1):
                            expect(base * u0**k * d22s**a * d22**b, a - b)
        for s in range(1, q - 1):
            h = cat.h(s)
            for k in range(q):
                for a in range(2):
                    for b in range(2):
                        expect(h * u0**k * d22s**a * d22**b, a - b - s)


def test_criterion_8_generating_sets_and_nonmembership():
    with _Criterion(8, "seven generators span; h_1 outside their subalgebra at q=3", 300):
        for q in (2, 3):
            report = verify_generators(SPECS[q], "gl2", 12)
            assert report.verdict, (q, report.rows)
        nm = subalgebra_nonmembership_h1(SPECS[3])
        assert nm.h1_outside_span
        assert nm.h0_in_span and nm.c21_in_span
        assert nm.verdict


def test_criterion_9_power_sum_identity():
    with _Criterion(9, "multiplicative power sums match the two-case formula", 1):
        for p, r in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
            spec = field_make(p, r)
            q = spec.q
            for a in range(1, 3 * (q - 1) + 1):
                expected = -spec.one() if a % (q - 1) == 0 else spec.zero()
                assert spec.power_sum(a) == expected, (q, a)
