"""Seeded sampling: determinism and the documented size policy."""
import random

from gabrielq import sampling


def test_policy_bounds(R1):
    rng = random.Random(0)
    for _ in range(50):
        f = sampling.random_poly(rng, R1.vars)
        assert f.total_degree() <= sampling.MAX_DEGREE
        assert len(f.terms) <= sampling.MAX_TERMS
        for c in f.terms.values():
            assert abs(c) <= sampling.COEFF_HEIGHT
    for _ in range(20):
        I = sampling.random_ideal(rng, R1)
        assert len(I.gens) <= sampling.MAX_GENS + len(R1.P.gens)


def test_determinism(R2):
    a = sampling.sample_ideals(random.Random(9), R2, 20)
    b = sampling.sample_ideals(random.Random(9), R2, 20)
    assert len(a) == len(b) == 20
    for x, y in zip(a, b):
        assert x.equals(y)


def test_structured_cover_strata(R1):
    from gabrielq.dimension import krull_dim, NEG_INF
    dims = {krull_dim(I) for I in sampling.structured_ideals(R1)}
    assert {NEG_INF, 0, 1, 2} <= dims


def test_proper_ideals_are_proper(R3):
    rng = random.Random(4)
    for I in sampling.sample_proper_ideals(rng, R3, 15):
        assert not I.is_unit
        for g in R3.P.gens:
            assert I.contains(g)


def test_random_fraction_wellformed(R3):
    rng = random.Random(4)
    for _ in range(10):
        q = sampling.random_fraction(rng, R3)
        assert not q.den.is_zero
