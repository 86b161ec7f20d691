"""Series substrate tests.

The partition-count oracles here are computed by algorithms independent of
the pentagonal-product code under test: a coin-style DP and the classical
pentagonal recurrence.  Frozen literals are included so a regression cannot
slip past by breaking both routes the same way.
"""

import random
from fractions import Fraction
from math import inf

import pytest

from ufive.series import QQ, Ring, Series, ZZ, euler_product, mod5

PARTITIONS_FROZEN = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135,
                     176, 231, 297, 385, 490, 627, 792, 1002, 1255, 1575]


def partition_dp(limit):
    """p(n) for n < limit by the textbook coin DP (no series code involved)."""
    p = [0] * limit
    p[0] = 1
    for part in range(1, limit):
        for i in range(part, limit):
            p[i] += p[i - part]
    return p


def partition_pentagonal(limit):
    """p(n) by the pentagonal recurrence — a second independent oracle."""
    p = [1]
    for n in range(1, limit):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p.append(total)
    return p


def test_partition_oracles_agree():
    assert partition_dp(25) == PARTITIONS_FROZEN
    assert partition_pentagonal(25) == PARTITIONS_FROZEN


def test_invert_euler_product_is_partition_function():
    T = 60
    inv = euler_product(1, -1, T)
    expect = partition_dp(T)
    assert [inv[n] for n in range(T)] == expect


def test_euler_product_first_factors():
    f = euler_product(2, 1, 3)
    assert [f[0], f[1], f[2]] == [1, 0, -1]  # 1 - q^2


def test_jacobi_cube():
    # (q;q)^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}
    T = 80
    cube = euler_product(1, 3, T)
    expect = [0] * T
    n = 0
    while n * (n + 1) // 2 < T:
        expect[n * (n + 1) // 2] = (2 * n + 1) * (1 if n % 2 == 0 else -1)
        n += 1
    assert [cube[i] for i in range(T)] == expect


def test_add_trivials():
    T = 10
    a = Series.from_coeffs(ZZ, 0, [1, 1], T)
    b = Series.from_coeffs(ZZ, 0, [1, -1], T)
    s = a + b
    assert [s[i] for i in range(T)] == [2] + [0] * (T - 1)
    f = euler_product(1, 1, T)
    assert (f + Series.zero(ZZ, T)).agrees_with(f)
    assert (f + f.scale(-1)).is_zero()


def test_mul_monomials_and_geometric():
    T = 12
    q3 = Series.monomial(ZZ, 3, 1, T)
    qm1 = Series.monomial(ZZ, -1, 1, T)
    prod = q3 * qm1
    assert prod.valuation() == 2 and prod[2] == 1
    one_minus_q = Series.from_coeffs(ZZ, 0, [1, -1], T)
    geom = Series.from_coeffs(ZZ, 0, [1] * T, T)
    p = one_minus_q * geom
    assert p[0] == 1 and all(p[i] == 0 for i in range(1, p.trunc))


def test_mul_trunc_bookkeeping():
    # trunc of a product is min(Ta + val(b), Tb + val(a))
    a = Series.from_coeffs(ZZ, 2, [1, 1], 7)    # val 2, T 7
    b = Series.from_coeffs(ZZ, 3, [1, 2, 1], 9)  # val 3, T 9
    assert (a * b).trunc == min(7 + 3, 9 + 2)
    assert (a * b).valuation() == 5


def test_ring_mismatch_raises():
    a = Series.one(ZZ, 5)
    b = Series.one(QQ, 5)
    with pytest.raises(ValueError):
        _ = a + b
    with pytest.raises(ValueError):
        _ = a * b


def test_invert_basics():
    T = 20
    f = Series.from_coeffs(ZZ, 0, [1, -1], T)
    g = f.invert()
    assert all(g[i] == 1 for i in range(T - 1))
    laurent = Series.from_coeffs(ZZ, 1, [1, -1], T)  # q(1-q)
    h = laurent.invert()
    assert h.valuation() == -1
    assert (laurent * h)[0] == 1
    prod = laurent * h
    assert all(prod[i] == 0 for i in range(1, prod.trunc))


def test_invert_requires_unit():
    f = Series.from_coeffs(ZZ, 0, [2, 1], 8)
    with pytest.raises(ZeroDivisionError):
        f.invert()
    # ...but 2 is invertible over the rationals and mod 5^e
    assert f.to_ring(QQ).invert()[0] == Fraction(1, 2)
    assert f.to_ring(mod5(3)).invert()[0] == pow(2, -1, 125)


def test_pow():
    T = 10
    f = Series.from_coeffs(ZZ, 0, [1, 1], T)
    sq = f ** 2
    assert [sq[0], sq[1], sq[2]] == [1, 2, 1]
    assert (f ** 0)[0] == 1
    ep = euler_product(1, 1, T)
    assert (ep ** 3).agrees_with(euler_product(1, 3, T))
    inv2 = ep ** -2
    assert (inv2 * ep * ep)[0] == 1


def test_substitute_q_power():
    T = 8
    f = Series.from_coeffs(ZZ, 0, [1, 1], T)
    g = f.substitute_q_power(5)
    assert g[0] == 1 and g[5] == 1 and g.trunc == 5 * T
    qm = Series.monomial(ZZ, -1, 1, T).substitute_q_power(2)
    assert qm.valuation() == -2
    a = euler_product(1, 1, 40).substitute_q_power(25)
    b = euler_product(25, 1, 1000)
    assert a.agrees_with(b)


def test_euler_product_inverse_pairs():
    T = 40
    for delta in (1, 2, 5, 10):
        for e in range(-3, 4):
            prod = euler_product(delta, e, T) * euler_product(delta, -e, T)
            assert prod[0] == 1
            assert all(prod[i] == 0 for i in range(1, prod.trunc)), (delta, e)


def test_valuation_profile():
    f = Series.from_coeffs(ZZ, 0, [5, 25], 10)
    assert f.padic_valuation_profile() == {0: 1, 1: 2}
    assert Series.zero(ZZ, 10).padic_valuation_profile() == {}
    g = Series.from_coeffs(ZZ, 0, [5, 0, 75], 10)
    assert g.padic_valuation_profile() == {0: 1, 1: inf, 2: 2}
    with pytest.raises(ValueError):
        Series.one(QQ, 5).padic_valuation_profile()


def _random_series(rng, ring, T):
    base = rng.randint(-3, 3)
    n = rng.randint(0, 6)
    return Series.from_coeffs(
        ring, base, [rng.randint(-9, 9) for _ in range(n)], base + n + rng.randint(0, 3))


def test_ring_axioms_random():
    rng = random.Random(20260822)
    for _ in range(60):
        a = _random_series(rng, ZZ, 0)
        b = _random_series(rng, ZZ, 0)
        c = _random_series(rng, ZZ, 0)
        t = min((a + b).trunc, (b + a).trunc)
        assert (a + b).agrees_with(b + a, below=t)
        t = min(((a + b) + c).trunc, (a + (b + c)).trunc)
        assert ((a + b) + c).agrees_with(a + (b + c), below=t)
        t = min((a * b).trunc, (b * a).trunc)
        assert (a * b).agrees_with(b * a, below=t)
        lhs = a * (b + c)
        rhs = a * b + a * c
        t = min(lhs.trunc, rhs.trunc)
        assert lhs.agrees_with(rhs, below=t)
        lhs = (a * b) * c
        rhs = a * (b * c)
        t = min(lhs.trunc, rhs.trunc)
        assert lhs.agrees_with(rhs, below=t)


def test_ring_homomorphism_compatibility():
    # computing over Z then reducing mod 5^e matches computing in Z/5^e
    rng = random.Random(7)
    R = mod5(4)
    for _ in range(25):
        a = _random_series(rng, ZZ, 0)
        b = _random_series(rng, ZZ, 0)
        for op in (lambda u, v: u + v, lambda u, v: u * v):
            exact = op(a, b).to_ring(R)
            reduced = op(a.to_ring(R), b.to_ring(R))
            assert exact == reduced
    f = euler_product(1, -1, 200)
    assert f.to_ring(R) == euler_product(1, -1, 200, R)
    g = euler_product(2, 5, 150)
    assert g.to_ring(R) == euler_product(2, 5, 150, R)


def test_frontier_guard():
    f = Series.one(ZZ, 5)
    with pytest.raises(IndexError):
        _ = f[5]
    with pytest.raises(ValueError):
        f.truncate(9)
