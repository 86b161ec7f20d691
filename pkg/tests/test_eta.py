"""Cusp classification, Ligozat orders, Newman conditions, Radu bounds."""

import math
import random
from fractions import Fraction

import pytest

from ufive.eta import (
    A_EXPONENTS,
    Cusp,
    EtaQuotient,
    X_EXPONENTS,
    Z_EXPONENTS,
    a_quotient,
    cusp_equivalent,
    cusp_set,
    divisors,
    expand,
    is_modular_function,
    ligozat_order,
    radu_order_bound,
    scale_argument,
    x_quotient,
    z_quotient,
)
from ufive.hecke import progression_extract
from ufive.series import euler_product

# The level-50 rescales used throughout: f(tau) -> f(5*tau).
X5 = scale_argument(x_quotient(), 5)
Z5 = scale_argument(z_quotient(), 5)
X50 = EtaQuotient(50, X_EXPONENTS)
Z50 = EtaQuotient(50, Z_EXPONENTS)

# Frozen golden orders at the twelve cusps of X_0(50), one row per cusp,
# columns (a_quotient, x, x-at-5tau, z-at-5tau).  The x column is the
# level-50 embedding of the level-10 quotient.
GOLDEN_50 = {
    "oo": (6, 1, 5, 0),
    "1/25": (27, 0, 0, 0),
    "1/10": (0, 1, 0, 1),
    "1/5": (0, 0, -1, -1),
    "3/10": (0, 1, 0, 1),
    "2/5": (0, 0, -1, -1),
    "1/2": (-6, 0, 0, 1),
    "3/5": (0, 0, -1, -1),
    "7/10": (0, 1, 0, 1),
    "4/5": (0, 0, -1, -1),
    "9/10": (0, 1, 0, 1),
    "0": (-27, -5, -1, -1),
}

# Radu configuration for the seed function of the operator chain: the
# coefficient source is (q^2;q^2)^5 / (q;q)^16, the progression is 5n+4,
# and the eta prefactor lives on level 10.
L1_CONFIG = dict(M=2, r={1: -16, 2: 5}, m=5, t=4, N=10, s={5: 16, 10: -5})


def phi(n):
    """Euler totient, trial division; plenty for the levels tested here."""
    out = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


def cusp_count(N):
    return sum(phi(math.gcd(c, N // c)) for c in divisors(N))


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(50) == [1, 2, 5, 10, 25, 50]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


def test_cusp_validation():
    with pytest.raises(ValueError):
        Cusp(2, 4, 10)
    with pytest.raises(ValueError):
        Cusp(1, -2, 10)
    assert Cusp(-1, 0, 10).a == 1  # infinity normalises to 1/0
    assert str(Cusp.infinity(10)) == "oo"
    assert str(Cusp.zero(10)) == "0"
    assert str(Cusp(3, 10, 50)) == "3/10"


def test_cusp_widths():
    assert Cusp.infinity(10).width() == 1
    assert Cusp.zero(10).width() == 10
    assert Cusp(1, 2, 10).width() == 5
    assert Cusp(1, 5, 10).width() == 2
    assert Cusp(1, 25, 50).width() == 2
    assert Cusp(1, 10, 50).width() == 1


def test_newman_conditions():
    ok, failed = is_modular_function(z_quotient())
    assert ok and failed == []
    assert is_modular_function(EtaQuotient(10, {}))[0]
    ok, failed = is_modular_function(EtaQuotient(1, {1: 1}))
    assert not ok
    assert any("not 0" in msg for msg in failed)
    # A weightless quotient can still fail the other three conditions.
    ok, failed = is_modular_function(EtaQuotient(2, {1: 1, 2: -1}))
    assert not ok
    assert len(failed) == 3
    for f in (x_quotient(), a_quotient(), X5, Z5, X50, Z50):
        assert is_modular_function(f)[0]


def test_cusp_equivalence_examples():
    ten = Cusp(1, 3, 10)
    assert cusp_equivalent(ten, ten)
    # Denominator 3 is coprime to 10, so 1/3 collapses to the cusp 0.
    assert cusp_equivalent(ten, Cusp.zero(10))
    assert not cusp_equivalent(ten, Cusp(1, 5, 10))
    assert not cusp_equivalent(ten, Cusp(1, 2, 10))
    assert not cusp_equivalent(ten, Cusp.infinity(10))
    assert not cusp_equivalent(Cusp(1, 25, 50), Cusp.infinity(50))
    assert cusp_equivalent(Cusp(17, 10, 50), Cusp(7, 10, 50))
    with pytest.raises(ValueError):
        cusp_equivalent(Cusp.zero(10), Cusp.zero(50))


def test_cusp_set_small_levels():
    assert [str(u) for u in cusp_set(1)] == ["oo"]
    assert [str(u) for u in cusp_set(10)] == ["oo", "1/5", "1/2", "0"]
    fifty = cusp_set(50)
    assert [str(u) for u in fifty] == list(GOLDEN_50)
    for level in range(1, 61):
        assert len(cusp_set(level)) == cusp_count(level)


def test_cusp_set_classifies():
    reps = cusp_set(50)
    for i, u in enumerate(reps):
        for v in reps[i + 1 :]:
            assert not cusp_equivalent(u, v)
    rng = random.Random(50_2026)
    for _ in range(500):
        c = rng.randrange(0, 120)
        if c == 0:
            cand = Cusp.infinity(50)
        else:
            a = rng.randrange(-120, 120)
            g = math.gcd(a, c)
            cand = Cusp(a // g, c // g, 50)
        hits = [u for u in reps if cusp_equivalent(cand, u)]
        assert len(hits) == 1


def test_equivalence_relation_properties():
    """Reflexive/symmetric/transitive on 500 random level-50 fractions."""
    rng = random.Random(88_550)
    sample = []
    for _ in range(500):
        c = rng.randrange(0, 200)
        a = 1 if c == 0 else rng.randrange(-200, 200)
        g = math.gcd(a, c)
        g = g if g else 1
        sample.append(Cusp(a // g, c // g, 50))
    reps = cusp_set(50)
    label = {}
    for u in sample:
        assert cusp_equivalent(u, u)
        label[u] = next(i for i, v in enumerate(reps) if cusp_equivalent(u, v))
    for _ in range(400):
        u, v = rng.choice(sample), rng.choice(sample)
        forward = cusp_equivalent(u, v)
        assert forward == cusp_equivalent(v, u)
        assert forward == (label[u] == label[v])


def test_ligozat_spot_values():
    z = z_quotient()
    assert ligozat_order(z, Cusp.infinity(10)) == 0
    assert ligozat_order(z, Cusp(1, 5, 10)) == 0
    assert ligozat_order(z, Cusp(1, 2, 10)) == 1
    assert ligozat_order(z, Cusp.zero(10)) == -1
    assert ligozat_order(X50, Cusp.zero(50)) == -5
    assert ligozat_order(a_quotient(), Cusp(1, 25, 50)) == 27
    with pytest.raises(ValueError):
        ligozat_order(z, Cusp.zero(50))
    with pytest.warns(UserWarning):
        ligozat_order(EtaQuotient(2, {1: 1, 2: -1}), Cusp.zero(2))


def test_golden_orders_level_50():
    quotients = (a_quotient(), X50, X5, Z5)
    for cusp in cusp_set(50):
        got = tuple(ligozat_order(f, cusp) for f in quotients)
        assert got == GOLDEN_50[str(cusp)], str(cusp)


def test_valence_degree_zero():
    """Total Ligozat order over a full cusp set vanishes for modular quotients.

    The order already carries the width factor N/gcd(c^2, N); summing the
    plain orders is the degree of the divisor.
    """
    ten = cusp_set(10)
    fifty = cusp_set(50)
    for f in (x_quotient(), z_quotient()):
        assert sum(ligozat_order(f, u) for u in ten) == 0
    for f in (a_quotient(), X50, Z50, X5, Z5):
        assert sum(ligozat_order(f, u) for u in fifty) == 0
    rng = random.Random(424_242)
    for _ in range(20):
        e1, e2 = rng.randrange(-3, 4), rng.randrange(-3, 4)
        f = (x_quotient() ** e1) * (z_quotient() ** e2)
        assert is_modular_function(f)[0]
        assert sum(ligozat_order(f, u) for u in ten) == 0
        g = (a_quotient() ** rng.randrange(-2, 3)) * (X5 ** e1) * (Z5 ** e2)
        assert is_modular_function(g)[0]
        assert sum(ligozat_order(g, u) for u in fifty) == 0


def test_expand_basics():
    z = expand(z_quotient(), 40)
    x = expand(x_quotient(), 40)
    assert z.valuation() == 0 and z[0] == 1
    assert z[1] == 5
    assert x.valuation() == 1 and x[1] == 1
    assert z.agrees_with(Series_one_plus_5(x))
    a = expand(a_quotient(), 40)
    assert a.valuation() == 6 and a[6] == 1
    with pytest.raises(ValueError):
        expand(EtaQuotient(1, {1: 1}), 10)
    single = expand(EtaQuotient(1, {1: 24}), 10)
    assert single.valuation() == 1
    assert single.agrees_with(euler_product(1, 24, 9).shift(1))


def Series_one_plus_5(x):
    from ufive.series import Series

    return Series.one(x.ring, x.trunc) + x.scale(5)


def test_expand_matches_order_at_infinity():
    cases = [
        (x_quotient(), 10),
        (z_quotient(), 10),
        (a_quotient(), 50),
        (X50, 50),
        (Z50, 50),
        (X5, 50),
        (Z5, 50),
    ]
    for f, level in cases:
        ord_inf = ligozat_order(f, Cusp.infinity(level))
        assert ord_inf.denominator == 1
        assert expand(f, 30).valuation() == ord_inf


def test_radu_bound_golden_values():
    bounds = {
        str(cusp): radu_order_bound(cusp=cusp, **L1_CONFIG) for cusp in cusp_set(10)
    }
    assert bounds["oo"] == Fraction(6, 5)
    assert bounds["1/5"] == Fraction(27, 5)
    assert bounds["1/2"] == -6
    assert bounds["0"] == -27
    floors = {k: math.floor(v) for k, v in bounds.items()}
    assert floors == {"oo": 1, "1/5": 5, "1/2": -6, "0": -27}
    # The label 1/3 collapses to the cusp 0 and inherits its bound.
    assert radu_order_bound(cusp=Cusp(1, 3, 10), **L1_CONFIG) == -27


def test_radu_bound_validation():
    bad = dict(L1_CONFIG)
    bad["t"] = 5
    with pytest.raises(ValueError):
        radu_order_bound(cusp=Cusp.infinity(10), **bad)
    bad = dict(L1_CONFIG)
    bad["r"] = {3: 1}
    with pytest.raises(ValueError):
        radu_order_bound(cusp=Cusp.infinity(10), **bad)


def test_radu_bound_below_observed_valuation():
    """The bound at infinity under-estimates the true q-valuation (2)."""
    T = 30
    counts = euler_product(2, 5, 5 * T) * euler_product(1, -16, 5 * T)
    sliced = progression_extract(counts, 5, 4).shift(2)
    seed = sliced * euler_product(5, 16, T) * euler_product(10, -5, T)
    bound = radu_order_bound(cusp=Cusp.infinity(10), **L1_CONFIG)
    assert seed.valuation() == 2
    assert bound <= seed.valuation()
