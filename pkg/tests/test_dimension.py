"""Krull dimension: independent-set route vs Hilbert-series oracle."""
import random

from gabrielq.poly import parse_poly
from gabrielq.groebner import Ideal
from gabrielq.dimension import (
    NEG_INF,
    hilbert_dim_oracle,
    krull_dim,
    krull_dim_with_set,
    module_dim,
)
from gabrielq.corpus import load_ring_file
from gabrielq import sampling

import pytest

XY = ("x", "y")
XYZ = ("x", "y", "z")


def I(*texts, vars=XY):
    return Ideal(vars, tuple(parse_poly(t, vars) for t in texts))


def test_sentinel_orders_below_everything():
    assert NEG_INF < 0 and NEG_INF < -10


def test_known_dimensions():
    assert krull_dim(Ideal(XY, ())) == 2
    assert krull_dim(I("x")) == 1
    assert krull_dim(I("x", "y")) == 0
    assert krull_dim(I("1")) == NEG_INF
    assert krull_dim(I("x*y")) == 1
    assert krull_dim(I("y^2 - x^3")) == 1
    assert krull_dim(I("x", vars=XYZ)) == 2
    assert krull_dim(I("x", "y", vars=XYZ)) == 1


def test_independent_set_is_lex_first():
    d, combo = krull_dim_with_set(I("x"))
    assert d == 1 and combo == (1,)  # {y}
    d, combo = krull_dim_with_set(I("x*y", vars=XYZ))
    assert d == 2 and combo == (0, 2)  # {x, z} beats {y, z}


def test_hilbert_oracle_known_values():
    assert hilbert_dim_oracle(Ideal(XY, ())) == 2
    assert hilbert_dim_oracle(I("x")) == 1
    assert hilbert_dim_oracle(I("x", "y")) == 0
    assert hilbert_dim_oracle(I("1")) == NEG_INF
    assert hilbert_dim_oracle(I("x^2", "x*y", "y^2")) == 0


def test_oracle_agreement_on_random_ideals():
    rng = random.Random(11)
    for name in ("R1", "R2", "R3"):
        dom = load_ring_file(name)
        for ideal in sampling.sample_ideals(rng, dom, 12):
            assert krull_dim(ideal) == hilbert_dim_oracle(ideal)


def test_module_dim():
    # <x>/<x^2, xy> has annihilator route (I : x) = <x, y>: dim 0
    assert module_dim(I("x"), I("x^2", "x*y")) == 0
    # S = I: the zero module
    assert module_dim(I("x"), I("x")) == NEG_INF
    # S/I with a full-dimensional quotient
    assert module_dim(I("1"), I("x")) == 1
    with pytest.raises(ValueError):
        module_dim(I("x"), I("y"))
