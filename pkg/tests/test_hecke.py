"""U_ell operator laws and progression slicing."""

import random

from ufive.hecke import progression_extract, u_operator
from ufive.series import Series, ZZ, euler_product


def test_all_ones_fixed_point():
    T = 30
    ones = Series.from_coeffs(ZZ, 0, [1] * T, T)
    out = u_operator(5, ones)
    assert all(out[i] == 1 for i in range(out.trunc))


def test_no_multiple_present():
    f = Series.monomial(ZZ, 7, 1, 20)
    assert u_operator(5, f).is_zero()


def test_laurent_tail():
    f = Series.from_coeffs(ZZ, -10, [3] + [0] * 4, 20)  # 3*q^-10
    out = u_operator(5, f)
    assert out.valuation() == -2 and out[-2] == 3
    assert out.trunc == 4


def test_trunc_ceil():
    f = Series.one(ZZ, 12)
    assert u_operator(5, f).trunc == 3  # ceil(12/5)


def test_linearity_random():
    rng = random.Random(99)
    T = 40
    for _ in range(20):
        a = Series.from_coeffs(ZZ, rng.randint(-5, 2),
                               [rng.randint(-9, 9) for _ in range(rng.randint(1, 15))], T)
        b = Series.from_coeffs(ZZ, rng.randint(-5, 2),
                               [rng.randint(-9, 9) for _ in range(rng.randint(1, 15))], T)
        k = rng.randint(-4, 4)
        lhs = u_operator(5, a.scale(k) + b)
        rhs = u_operator(5, a).scale(k) + u_operator(5, b)
        assert lhs.agrees_with(rhs, below=min(lhs.trunc, rhs.trunc))


def test_interchange_law():
    # U_ell(f(q^ell) g(q)) = f(q) U_ell(g(q))
    rng = random.Random(5)
    T = 50
    for _ in range(10):
        f = Series.from_coeffs(ZZ, 0,
                               [rng.randint(-5, 5) for _ in range(10)], T)
        g = Series.from_coeffs(ZZ, 0,
                               [rng.randint(-5, 5) for _ in range(T)], T)
        lhs = u_operator(5, f.substitute_q_power(5) * g)
        rhs = f * u_operator(5, g)
        assert lhs.agrees_with(rhs, below=min(lhs.trunc, rhs.trunc))


def test_idempotent_composition():
    # U_5(U_5(f(q^25) g)) = f(q) * U_5(U_5(g))
    rng = random.Random(6)
    T = 160
    f = Series.from_coeffs(ZZ, 0, [rng.randint(-5, 5) for _ in range(6)], T)
    g = Series.from_coeffs(ZZ, 0, [rng.randint(-5, 5) for _ in range(T)], T)
    lhs = u_operator(5, u_operator(5, f.substitute_q_power(25) * g))
    rhs = f * u_operator(5, u_operator(5, g))
    assert lhs.agrees_with(rhs, below=min(lhs.trunc, rhs.trunc))


def test_progression_extract_basics():
    f = Series.from_coeffs(ZZ, 0, [1, 2, 3], 10)
    out = progression_extract(f, 2, 1)
    assert out[0] == 2 and all(out[i] == 0 for i in range(1, out.trunc))


def test_partition_5n4_progression():
    # the q^{5n+4} slice of 1/(q;q) is 5 * (q^5)^5/(q)^6 after renumbering
    T = 300
    inv = euler_product(1, -1, T)
    sliced = progression_extract(inv, 5, 4)
    rhs = euler_product(5, 5, sliced.trunc) * euler_product(1, -6, sliced.trunc)
    rhs = rhs.scale(5)
    assert sliced.agrees_with(rhs, below=min(sliced.trunc, rhs.trunc))


def test_pentagonal_5n3_slice_vanishes():
    T = 400
    f = euler_product(1, 1, T)
    assert progression_extract(f, 5, 3).is_zero()
    assert progression_extract(f, 5, 4).is_zero()
