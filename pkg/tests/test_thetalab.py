"""Theta kernel: golden expansions frozen by hand, structural invariants,
and the two big identity suites."""

import random

import pytest

from ufive.series import Series, ZZ, euler_product
from ufive.thetalab import (
    ThetaMonomial,
    _pochhammer,
    psi,
    phi,
    qpow,
    rogers_ratio,
    theta_dissect,
    theta_series,
    verify_lemma_suite,
    verify_section3_steps,
    verify_triple_product,
)


def test_monomial_algebra():
    a = qpow(3, -1)
    b = qpow(2)
    assert (a * b).sign == -1 and (a * b).exponent == 5
    assert (a**2).sign == 1 and (a**2).exponent == 6
    assert (a**3).sign == -1
    with pytest.raises(ValueError):
        ThetaMonomial(2, 1)


def test_theta_series_golden():
    # Hand-evaluated from the bilateral definition.
    sq = theta_series(qpow(1), qpow(1), 26)
    assert [sq[n] for n in range(26)] == [
        1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0,
        0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2,
    ]
    tri = theta_series(qpow(1), qpow(3), 22)
    assert [n for n in range(22) if tri[n]] == [0, 1, 3, 6, 10, 15, 21]
    assert all(tri[n] in (0, 1) for n in range(22))
    # Exponents (3n^2 - n)/2 for n in ZZ, all coefficients +1.
    g = theta_series(qpow(1), qpow(2), 27)
    assert [n for n in range(27) if g[n]] == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    # Signed variant collapses to the alternating Euler product.
    assert theta_series(qpow(1, -1), qpow(2, -1), 40) == euler_product(1, 1, 40)


def test_theta_series_validation():
    with pytest.raises(ValueError):
        theta_series(qpow(1), qpow(-1), 10)
    with pytest.raises(ValueError):
        theta_series(ThetaMonomial(1, "1/2"), qpow(1), 10)


def test_theta_symmetry():
    rng = random.Random(401_173)
    for _ in range(12):
        a = qpow(rng.randrange(1, 7), rng.choice((1, -1)))
        b = qpow(rng.randrange(1, 7), rng.choice((1, -1)))
        assert theta_series(a, b, 55) == theta_series(b, a, 55)


def test_pochhammer_golden():
    assert _pochhammer(qpow(1), qpow(1), 40) == euler_product(1, 1, 40)
    # prod (1 + q^(2k+1)): partitions into distinct odd parts.
    odd = _pochhammer(qpow(1, -1), qpow(2), 13)
    assert [odd[n] for n in range(13)] == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3]


def test_psi_product_form():
    prod = euler_product(2, 2, 60) * euler_product(1, 1, 60).invert()
    assert psi(1, 60) == prod


def test_triple_product_random():
    rng = random.Random(90_210)
    for _ in range(20):
        a = qpow(rng.randrange(1, 7), rng.choice((1, -1)))
        b = qpow(rng.randrange(1, 7), rng.choice((1, -1)))
        assert verify_triple_product(a, b, 40).is_zero()


def test_dissect_components():
    a, b = qpow(1), qpow(3)
    comps = theta_dissect(a, b, 5, 80)
    assert len(comps) == 5
    total = comps[0]
    for c in comps[1:]:
        total = total + c
    assert total.agrees_with(theta_series(a, b, 80), below=total.trunc)
    # Component r lives on exponents congruent to r(r+1)/2 + 3 r(r-1)/2 mod 5.
    for r, comp in enumerate(comps):
        residue = (2 * r * r - r) % 5
        assert all(e % 5 == residue for e, _ in comp.items())
    assert theta_dissect(a, b, 1, 30)[0] == theta_series(a, b, 30)
    with pytest.raises(ValueError):
        theta_dissect(a, b, 0, 30)


def test_rogers_ratio_unit():
    t, tinv = rogers_ratio(1, 101)
    assert t[0] == 1 and tinv[0] == 1
    assert (t * tinv).agrees_with(Series.one(ZZ, 101), below=101)
    assert t[1] == 1 and tinv[1] == -1


def test_phi_square_identity_direct():
    lhs = phi(5, 40) * phi(5, 40)
    rhs = phi(1, 40) * phi(1, 40) - (
        theta_series(qpow(1), qpow(9), 39) * theta_series(qpow(3), qpow(7), 39)
    ).shift(1).scale(4)
    assert lhs == rhs


def test_lemma_suite_passes():
    rows = verify_lemma_suite(60)
    assert len(rows) == 9
    failures = [r for r in rows if r["status"] != "pass"]
    assert failures == []
    with pytest.raises(ValueError):
        verify_lemma_suite(10)


def test_section3_steps_pass():
    rows = verify_section3_steps(50)
    names = [r["item"] for r in rows]
    assert len(names) == len(set(names))
    variant = [n for n in names if n.endswith("printed-variant-differs")]
    assert len(variant) == 4
    failures = [(r["item"], r["detail"]) for r in rows if r["status"] != "pass"]
    assert failures == []
    with pytest.raises(ValueError):
        verify_section3_steps(20)
