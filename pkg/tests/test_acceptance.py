"""Acceptance gate: the ten headline criteria, one test (and one printed
pass/fail line) per criterion, each with its stated runtime budget.

Budgets are asserted with a wall clock; sample counts meet or exceed the
stated minimums.  Any violation inside a suite report fails the criterion.
"""
import random
import time

import pytest

from gabrielq.poly import parse_poly
from gabrielq.groebner import (
    Ideal,
    eliminate,
    ideal_intersect,
    ideal_quotient,
    ideal_sum,
    saturate,
)
from gabrielq.dimension import NEG_INF, hilbert_dim_oracle, krull_dim
from gabrielq.dim_filtration import sat_g
from gabrielq.quotient_ring import (
    RmContext,
    check_lemma_2_3,
    check_thm_2_4,
    check_thm_2_5,
    in_Rm,
)
from gabrielq.filters import check_filter_axioms, check_lemma_1_2
from gabrielq.ext_contr import (
    check_lemma_3_2,
    check_thm_3_4_premise,
    contract_subq,
    extend_ideal,
    rm_generators,
)
from gabrielq.corpus import distinguished_fractions, load_ring_file
from gabrielq import sampling


class _Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds
        self.start = time.monotonic()

    def done(self, ok):
        elapsed = time.monotonic() - self.start
        verdict = "PASS" if ok and elapsed < self.seconds else "FAIL"
        print(f"acceptance[{self.name}]: {verdict} "
              f"({elapsed:.1f}s of {self.seconds}s budget)")
        assert ok, f"{self.name}: violations found"
        assert elapsed < self.seconds, (
            f"{self.name}: {elapsed:.1f}s exceeds the {self.seconds}s budget"
        )


@pytest.fixture(scope="module")
def rings():
    return {name: load_ring_file(name) for name in ("R1", "R2", "R3")}


@pytest.fixture(scope="module")
def contexts(rings):
    return {name: RmContext(dom, 1) for name, dom in rings.items()}


@pytest.fixture(scope="module")
def modules(contexts):
    return {name: rm_generators(ctx) for name, ctx in contexts.items()}


def test_criterion_01_kernel_oracle_agreement(rings):
    budget = _Budget("1 kernel-oracle-agreement", 30)
    rng = random.Random(20260824)
    seen_dims = set()
    count = 0
    ok = True
    for dom in rings.values():
        for I in sampling.sample_ideals(rng, dom, 12):
            count += 1
            d = krull_dim(I)
            seen_dims.add(d)
            if d != hilbert_dim_oracle(I):
                ok = False
    ok = ok and count >= 30 and {NEG_INF, 0, 1, 2} <= seen_dims
    budget.done(ok)


def test_criterion_02_groebner_spot_set():
    budget = _Budget("2 groebner-spot-set", 5)
    xy = ("x", "y")

    def P(t, vars=xy):
        return parse_poly(t, vars)

    def I(*ts, vars=xy):
        return Ideal(vars, tuple(P(t, vars) for t in ts))

    ok = ideal_intersect(I("x"), I("y")).equals(I("x*y"))
    ok = ok and ideal_quotient(I("x*y"), P("x")).equals(I("y"))
    S, _ = saturate(I("x^2*y"), P("y"))
    ok = ok and S.equals(I("x^2"))
    txy = ("t", "x", "y")
    J = Ideal(txy, (parse_poly("x - t^2", txy), parse_poly("y - t^3", txy)))
    ok = ok and eliminate(J, ("t",)).equals(
        Ideal(txy, (parse_poly("y^2 - x^3", txy),))
    )
    budget.done(ok)


def test_criterion_03_lemma_2_3(contexts):
    ok = True
    for name, ctx in contexts.items():
        budget = _Budget(f"3 lemma-2.3 {name}", 120)
        report = check_lemma_2_3(
            ctx, 100, 42, distinguished=distinguished_fractions(ctx.R)
        )
        budget.done(report.ok)
        ok = ok and report.ok
    assert ok


def test_criterion_04_thm_2_4_closure(contexts):
    budget = _Budget("4 thm-2.4-closure", 120)
    ok = True
    for ctx in contexts.values():
        report = check_thm_2_4(
            ctx, 100, 42, distinguished=distinguished_fractions(ctx.R)
        )
        ok = ok and report.ok
    budget.done(ok)


def test_criterion_05_thm_2_5_units(contexts):
    budget = _Budget("5 thm-2.5-units", 60)
    ok = True
    for ctx in contexts.values():
        report = check_thm_2_5(ctx, 100, 42)
        ok = ok and report.ok
    budget.done(ok)


def test_criterion_06_lemma_1_2_and_axioms(contexts):
    budget = _Budget("6 lemma-1.2-and-axioms", 60)
    ok = True
    for name, ctx in contexts.items():
        lattice = check_lemma_1_2(ctx, 50, 42)
        axioms = check_filter_axioms(ctx, 50, 42)
        ok = ok and lattice.ok and axioms.ok
        if name == "R1":
            notes = dict(lattice.notes)
            ok = ok and notes.get("intersection-condition") == "fails on sample"
            ok = ok and "intersection-condition-witness" in notes
    budget.done(ok)


def test_criterion_07_sat_g_exactness(contexts):
    budget = _Budget("7 sat-g-exactness", 120)
    ctx = contexts["R1"]
    R1 = ctx.R
    I = R1.ideal([R1.parse("x^2*y"), R1.parse("x*y^2")])
    ok = sat_g(I, ctx).equals(R1.ideal([R1.parse("x*y")]))
    # V1/V2 fire on every sat_g call (they raise on violation); exercise
    # idempotence and monotonicity across the corpus
    rng = random.Random(7)
    count = 0
    for name, c in contexts.items():
        for J in sampling.sample_proper_ideals(rng, c.R, 10):
            count += 1
            S = sat_g(J, c)
            if not S.is_unit and not sat_g(S, c).equals(S):
                ok = False
            bigger = ideal_sum(J, c.R.ideal([J.gens[0]]) if J.gens else c.R.P)
            if not sat_g(bigger, c).contains_ideal(S):
                ok = False
    ok = ok and count >= 30
    budget.done(ok)


def test_criterion_08_strict_quotient_witness(contexts, modules):
    budget = _Budget("8 strict-quotient-witness", 60)
    ctx = contexts["R2"]
    R2 = ctx.R
    q = R2.fraction("b^2", "a")
    cert = in_Rm(q, ctx)
    ok = cert.verdict and not q.in_R()
    M = modules["R2"]
    ok = ok and M.strictly_contains_R() and M.witness_beyond_R() is not None
    I = R2.ideal([R2.parse("a")])
    b2 = R2.parse("b^2")
    ok = ok and not I.contains(b2)
    ok = ok and contract_subq(extend_ideal(I, M, ctx).subq).contains(b2)
    # the unit group stays tame: b^2/a is not a unit of R(1)
    from gabrielq.quotient_ring import is_unit_Rm
    ok = ok and not is_unit_Rm(q, ctx) and is_unit_Rm(R2.fraction("2"), ctx)
    budget.done(ok)


def test_criterion_09_lemma_3_2(contexts, modules):
    budget = _Budget("9 lemma-3.2", 300)
    ok = True
    for name, ctx in contexts.items():
        report = check_lemma_3_2(ctx, modules[name], 50, 42)
        ok = ok and report.ok
    budget.done(ok)


def test_criterion_10_determinism(contexts, modules):
    budget = _Budget("10 determinism", 300)
    ctx = contexts["R2"]
    M = modules["R2"]
    dist = distinguished_fractions(ctx.R)
    runs = [
        lambda: check_filter_axioms(ctx, 20, 11),
        lambda: check_lemma_1_2(ctx, 15, 11),
        lambda: check_lemma_2_3(ctx, 20, 11, distinguished=dist),
        lambda: check_thm_2_4(ctx, 15, 11, distinguished=dist),
        lambda: check_thm_2_5(ctx, 20, 11),
        lambda: check_lemma_3_2(ctx, M, 10, 11),
        lambda: check_thm_3_4_premise(ctx, M, 8, 11),
    ]
    ok = all(fn().render() == fn().render() for fn in runs)
    budget.done(ok)
