"""Exact truncated Laurent series in q.

A :class:`Series` stores a dense coefficient block starting at its lowest
known exponent together with a truncation frontier ``trunc``: coefficients
are guaranteed correct exactly for exponents strictly below ``trunc``.
Every operation propagates the frontier conservatively, so a downstream
check can never silently read an unreliable coefficient.

Three coefficient rings are supported: exact integers, exact rationals,
and integers modulo 5**e.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _poly

_INF = math.inf


@dataclass(frozen=True)
class Ring:
    """Coefficient ring marker: ``int``, ``frac``, or ``mod`` (= Z/5^e)."""

    kind: str
    exponent: int = 0

    @property
    def modulus(self) -> int:
        if self.kind != "mod":
            raise ValueError("modulus only defined for mod rings")
        return 5 ** self.exponent

    def coerce(self, c):
        if self.kind == "int":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer {c} in integer ring")
                return c.numerator
            return int(c)
        if self.kind == "frac":
            return Fraction(c)
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.modulus) % self.modulus
        return int(c) % self.modulus

    def is_unit(self, c) -> bool:
        if self.kind == "int":
            return c in (1, -1)
        if self.kind == "frac":
            return c != 0
        return c % 5 != 0

    def inv(self, c):
        if not self.is_unit(c):
            raise ZeroDivisionError(f"{c} is not a unit in {self.kind} ring")
        if self.kind == "int":
            return c
        if self.kind == "frac":
            return Fraction(1) / c
        return pow(int(c), -1, self.modulus)


ZZ = Ring("int")
QQ = Ring("frac")


def mod5(e: int) -> Ring:
    if e < 1:
        raise ValueError("exponent must be positive")
    return Ring("mod", e)


def _mul_block(ring: Ring, p: list, q: list) -> list:
    if ring.kind == "frac":
        out = [Fraction(0)] * (len(p) + len(q) - 1) if p and q else []
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    if b:
                        out[i + j] += a * b
        return out
    return _poly.mul(p, q, None if ring.kind == "int" else ring.modulus)


class Series:
    """Truncated Laurent series; immutable by convention."""

    __slots__ = ("ring", "base", "coeffs", "trunc")

    def __init__(self, ring: Ring, base: int, coeffs: list, trunc: int):
        # normalize: strip zero margins, clamp to the frontier
        lo = 0
        hi = len(coeffs)
        while hi > lo and base + hi > trunc:
            hi -= 1
        while hi > lo and not coeffs[hi - 1]:
            hi -= 1
        while lo < hi and not coeffs[lo]:
            lo += 1
        self.ring = ring
        self.base = base + lo
        self.coeffs = coeffs[lo:hi]
        self.trunc = trunc
        if not self.coeffs:
            self.base = trunc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring, trunc: int) -> "Series":
        return cls(ring, trunc, [], trunc)

    @classmethod
    def one(cls, ring: Ring, trunc: int) -> "Series":
        return cls.monomial(ring, 0, 1, trunc)

    @classmethod
    def monomial(cls, ring: Ring, exponent: int, coeff, trunc: int) -> "Series":
        c = ring.coerce(coeff)
        if exponent >= trunc or not c:
            return cls.zero(ring, trunc)
        return cls(ring, exponent, [c], trunc)

    @classmethod
    def from_coeffs(cls, ring: Ring, base: int, coeffs, trunc: int) -> "Series":
        return cls(ring, base, [ring.coerce(c) for c in coeffs], trunc)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient (zero series: frontier)."""
        return self.base

    def __getitem__(self, exponent: int):
        if exponent >= self.trunc:
            raise IndexError(f"exponent {exponent} beyond frontier {self.trunc}")
        i = exponent - self.base
        zero = self.ring.coerce(0)
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return zero

    def items(self):
        """Yield (exponent, coefficient) for stored nonzero coefficients."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.base + i, c

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.ring == other.ring and self.trunc == other.trunc
                and self.base == other.base and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.base, self.trunc, tuple(self.coeffs)))

    def __repr__(self):
        parts = [f"{c}*q^{e}" for e, c in list(self.items())[:6]]
        body = " + ".join(parts) if parts else "0"
        if len(self.coeffs) > 6:
            body += " + ..."
        return f"<Series {body} (below q^{self.trunc})>"

    def agrees_with(self, other: "Series", below: int | None = None) -> bool:
        """Coefficientwise equality below ``below`` (default: shared frontier)."""
        t = min(self.trunc, other.trunc)
        if below is not None:
            if below > t:
                raise ValueError("comparison beyond known coefficients")
            t = below
        lo = min(self.base, other.base)
        return all(self[e] == other[e] for e in range(lo, t))

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Series"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "Series") -> "Series":
        self._check_ring(other)
        trunc = min(self.trunc, other.trunc)
        if self.is_zero():
            return other.truncate(trunc)
        if other.is_zero():
            return self.truncate(trunc)
        base = min(self.base, other.base)
        hi = min(trunc, max(self.base + len(self.coeffs),
                            other.base + len(other.coeffs)))
        out = [self.ring.coerce(0)] * max(hi - base, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                j = s.base + i - base
                if 0 <= j < len(out):
                    out[j] = self.ring.coerce(out[j] + c)
        return Series(self.ring, base, out, trunc)

    def __neg__(self) -> "Series":
        return Series(self.ring, self.base,
                      [self.ring.coerce(-c) for c in self.coeffs], self.trunc)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, c) -> "Series":
        c = self.ring.coerce(c)
        return Series(self.ring, self.base,
                      [self.ring.coerce(c * a) for a in self.coeffs], self.trunc)

    def __mul__(self, other: "Series") -> "Series":
        self._check_ring(other)
        # all products a_i*b_j with i >= Ta or j >= Tb are unknown, so the
        # first unreliable output exponent is min(Ta + val(b), Tb + val(a))
        trunc = min(self.trunc + other.base, other.trunc + self.base)
        if self.is_zero() or other.is_zero():
            return Series.zero(self.ring, trunc)
        base = self.base + other.base
        keep = trunc - base
        if keep <= 0:
            return Series.zero(self.ring, trunc)
        block = _mul_block(self.ring, self.coeffs[:keep], other.coeffs[:keep])
        del block[keep:]
        return Series(self.ring, base, block, trunc)

    def shift(self, k: int) -> "Series":
        """Multiply by q**k."""
        return Series(self.ring, self.base + k, self.coeffs[:], self.trunc + k)

    def truncate(self, trunc: int) -> "Series":
        if trunc > self.trunc:
            raise ValueError(f"cannot extend frontier {self.trunc} to {trunc}")
        return Series(self.ring, self.base, self.coeffs[:], trunc)

    def invert(self) -> "Series":
        """Multiplicative inverse; the lowest coefficient must be a unit."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert the zero series")
        lead = self.coeffs[0]
        if not self.ring.is_unit(lead):
            raise ZeroDivisionError(
                f"leading coefficient {lead} is not a unit in {self.ring.kind} ring")
        n = self.trunc - self.base  # frontier width of the normalized part
        lead_inv = self.ring.inv(lead)
        h = [self.ring.coerce(c * lead_inv) for c in self.coeffs]  # 1 + O(q)
        # Newton doubling for 1/h
        x = [self.ring.coerce(1)]
        width = 1
        while width < n:
            width = min(2 * width, n)
            hx = _mul_block(self.ring, h[:width], x)
            del hx[width:]
            # x <- x * (2 - h x)
            corr = [self.ring.coerce(-c) for c in hx]
            corr[0] = self.ring.coerce(corr[0] + 2)
            x = _mul_block(self.ring, x, corr)
            del x[width:]
        out = [self.ring.coerce(c * lead_inv) for c in x]
        return Series(self.ring, -self.base, out, n - self.base)

    def __pow__(self, k: int) -> "Series":
        if k == 0:
            return Series.one(self.ring, self.trunc)
        if k < 0:
            return self.invert() ** (-k)
        result = None
        sq = self
        n = k
        while n:
            if n & 1:
                result = sq if result is None else result * sq
            n >>= 1
            if n:
                sq = sq * sq
        return result

    def substitute_q_power(self, m: int) -> "Series":
        """q -> q**m; the frontier scales along."""
        if m < 1:
            raise ValueError("power must be positive")
        out = [self.ring.coerce(0)] * (max(len(self.coeffs) - 1, 0) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        if self.is_zero():
            out = []
        return Series(self.ring, self.base * m, out, self.trunc * m)

    # -- ring changes and diagnostics --------------------------------------

    def to_ring(self, ring: Ring) -> "Series":
        return Series(ring, self.base, [ring.coerce(c) for c in self.coeffs],
                      self.trunc)

    def padic_valuation_profile(self, p: int = 5) -> dict:
        """Exponent -> p-adic valuation over the stored support (inf for
        interior zero coefficients)."""
        if self.ring.kind != "int":
            raise ValueError("valuation profile requires the exact integer ring")
        out = {}
        for i, c in enumerate(self.coeffs):
            if c == 0:
                out[self.base + i] = _INF
            elif p == 5:
                out[self.base + i] = _poly.val5(c)
            else:
                v, n = 0, abs(c)
                while n % p == 0:
                    n //= p
                    v += 1
                out[self.base + i] = v
        return out


def euler_product(delta: int, e: int, trunc: int, ring: Ring = ZZ) -> Series:
    """(q^delta; q^delta)_inf ** e, truncated.

    The e = +-1 cases come straight from the pentagonal-number expansion of
    (q;q)_inf; general exponents go through binary powering.
    """
    if trunc < 1:
        raise ValueError("truncation must be at least 1")
    if delta < 1:
        raise ValueError("delta must be positive")
    if e == 0:
        return Series.one(ring, trunc)
    base = _pentagonal(delta, trunc, ring)
    if e == 1:
        return base
    if e == -1:
        return base.invert()
    out = base ** abs(e)
    return out.invert() if e < 0 else out


def _pentagonal(delta: int, trunc: int, ring: Ring) -> Series:
    coeffs = [ring.coerce(0)] * trunc
    coeffs[0] = ring.coerce(1)
    j = 1
    while True:
        done = True
        for n in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            exp = delta * n
            if exp < trunc:
                done = False
                coeffs[exp] = ring.coerce(-1 if j % 2 else 1)
        if done:
            break
        j += 1
    return Series(ring, 0, coeffs, trunc)
