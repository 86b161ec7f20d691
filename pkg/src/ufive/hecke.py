"""The U_ell coefficient-slicing operator and progression extraction."""

from __future__ import annotations

from .series import Series


def u_operator(ell: int, f: Series) -> Series:
    """Sum a(ell*m) q^m over all ell*m in the support of f.

    The output frontier is ceil(T/ell): exponent m is reliable iff
    ell*m < T.  Laurent tails pass through (valuation ceil(M/ell)).
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    trunc = -(-f.trunc // ell)
    coeffs = {}
    for e, c in f.items():
        if e % ell == 0:
            coeffs[e // ell] = c
    return _from_map(f, coeffs, trunc)


def progression_extract(f: Series, m: int, t: int) -> Series:
    """Sum a(m*n + t) q^n — the [q^{mn+t}] slice with exponents renumbered."""
    if not 0 <= t < m:
        raise ValueError(f"residue {t} out of range for modulus {m}")
    trunc = -(-(f.trunc - t) // m)
    coeffs = {}
    for e, c in f.items():
        if (e - t) % m == 0:
            coeffs[(e - t) // m] = c
    return _from_map(f, coeffs, trunc)


def _from_map(f: Series, coeffs: dict, trunc: int) -> Series:
    if not coeffs:
        return Series.zero(f.ring, trunc)
    lo = min(coeffs)
    hi = max(coeffs) + 1
    block = [f.ring.coerce(0)] * (hi - lo)
    for e, c in coeffs.items():
        block[e - lo] = c
    return Series(f.ring, lo, block, trunc)
