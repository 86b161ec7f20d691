"""Eta quotients on Gamma_0(N): modularity tests, cusps, orders, expansions.

Everything here is exact.  Orders at cusps are `Fraction`s, q-expansions are
integer `Series`, and cusp classification is decided by the finite search
coming from the two congruence conditions that characterise equivalence,
rather than by closed-form shortcuts.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .series import Ring, Series, ZZ, euler_product


def divisors(n: int) -> list[int]:
    """Positive divisors of n, increasing."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


@dataclass(frozen=True)
class Cusp:
    """A cusp a/c of X_0(level), stored as a reduced fraction with c >= 0.

    Infinity is encoded as 1/0.  Two distinct Cusp values may describe the
    same point of the curve; use cusp_equivalent, not ==, to compare them.
    """

    a: int
    c: int
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be a positive integer")
        if self.c < 0:
            raise ValueError("denominator must be nonnegative")
        if math.gcd(self.a, self.c) != 1:
            raise ValueError(f"{self.a}/{self.c} is not reduced")
        if self.c == 0 and self.a != 1:
            # gcd(a, 0) = 1 forces a = +-1; keep the +1 encoding.
            object.__setattr__(self, "a", 1)

    @classmethod
    def infinity(cls, level: int) -> "Cusp":
        return cls(1, 0, level)

    @classmethod
    def zero(cls, level: int) -> "Cusp":
        return cls(0, 1, level)

    @property
    def is_infinity(self) -> bool:
        return self.c == 0

    def width(self) -> int:
        """Local q-expansions at this cusp step by q^(1/width)."""
        return self.level // math.gcd(self.c * self.c, self.level)

    def __str__(self) -> str:
        if self.c == 0:
            return "oo"
        if self.c == 1 and self.a == 0:
            return "0"
        return f"{self.a}/{self.c}"


class EtaQuotient:
    """A finite product of eta(delta*tau)^{r_delta} over divisors delta of N.

    `exponents` maps each divisor to its integer exponent; zero entries are
    dropped on construction.
    """

    __slots__ = ("level", "exponents")

    def __init__(self, level: int, exponents: dict[int, int]):
        if level < 1:
            raise ValueError("level must be a positive integer")
        kept: dict[int, int] = {}
        for delta, r in sorted(exponents.items()):
            delta = int(delta)
            if delta < 1 or level % delta:
                raise ValueError(f"{delta} is not a divisor of {level}")
            if r:
                kept[delta] = int(r)
        self.level = level
        self.exponents = kept

    def prefix_exponent(self) -> Fraction:
        """Exponent of the leading q-power: (1/24) * sum delta*r_delta."""
        return Fraction(sum(d * r for d, r in self.exponents.items()), 24)

    def __mul__(self, other: "EtaQuotient") -> "EtaQuotient":
        if self.level != other.level:
            raise ValueError("levels differ")
        merged = dict(self.exponents)
        for d, r in other.exponents.items():
            merged[d] = merged.get(d, 0) + r
        return EtaQuotient(self.level, merged)

    def __pow__(self, k: int) -> "EtaQuotient":
        return EtaQuotient(self.level, {d: k * r for d, r in self.exponents.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EtaQuotient)
            and self.level == other.level
            and self.exponents == other.exponents
        )

    def __repr__(self) -> str:
        return f"EtaQuotient({self.level}, {self.exponents})"


def scale_argument(f: EtaQuotient, k: int, level: int | None = None) -> EtaQuotient:
    """The quotient tau -> f(k*tau), as an eta quotient on the given level.

    Defaults to level k*N, the smallest group on which every rescaled factor
    eta(k*delta*tau) lives.
    """
    if level is None:
        level = k * f.level
    return EtaQuotient(level, {k * d: r for d, r in f.exponents.items()})


# Exponent vectors for the three quotients the localization machinery is
# built from.  X and Z live on Gamma_0(10); A_SCALER lives on Gamma_0(50)
# and is the q^6-normalised ratio of the two generating-function products
# that the U-operator alternation consumes.
X_EXPONENTS = {1: -3, 2: 1, 5: -1, 10: 3}
Z_EXPONENTS = {1: -5, 2: 5, 5: 1, 10: -1}
A_EXPONENTS = {1: -16, 2: 5, 25: 16, 50: -5}


def x_quotient() -> EtaQuotient:
    return EtaQuotient(10, X_EXPONENTS)


def z_quotient() -> EtaQuotient:
    return EtaQuotient(10, Z_EXPONENTS)


def a_quotient() -> EtaQuotient:
    return EtaQuotient(50, A_EXPONENTS)


def is_modular_function(f: EtaQuotient) -> tuple[bool, list[str]]:
    """Check the four integrality conditions for f to be a modular function
    on Gamma_0(level); returns (ok, descriptions of failed conditions)."""
    N = f.level
    failed = []
    weight = sum(f.exponents.values())
    if weight != 0:
        failed.append(f"sum of exponents is {weight}, not 0")
    lead = sum(d * r for d, r in f.exponents.items())
    if lead % 24:
        failed.append(f"sum of delta*r_delta = {lead} is not divisible by 24")
    tail = sum((N // d) * r for d, r in f.exponents.items())
    if tail % 24:
        failed.append(f"sum of (N/delta)*r_delta = {tail} is not divisible by 24")
    square = 1
    for d, r in f.exponents.items():
        square *= d ** abs(r)
    if math.isqrt(square) ** 2 != square:
        failed.append("product of delta^|r_delta| is not a perfect square")
    return (not failed, failed)


def cusp_equivalent(c1: Cusp, c2: Cusp) -> bool:
    """Whether two cusps name the same point of X_0(N).

    Decided by the finite search for a unit y and an integer j with
    y*a2 = a1 + j*c1 and c2 = y*c1, both mod N.  The j-condition collapses
    to a divisibility by gcd(c1, N).
    """
    if c1.level != c2.level:
        raise ValueError("cusps live on different levels")
    N = c1.level
    g = math.gcd(c1.c, N)
    for y in range(N):
        if (y * c1.c - c2.c) % N:
            continue
        if math.gcd(y, N) != 1:
            continue
        if (y * c2.a - c1.a) % g == 0:
            return True
    return False


def _coprime_lift(a0: int, g: int, c: int) -> int | None:
    """Smallest a >= a0 with a = a0 (mod g) and gcd(a, c) = 1, if one exists
    within a full period of c; otherwise None (the residue names no cusp)."""
    if g == 0:
        g = 1
    for k in range(4 * c + 4):
        a = a0 + k * g
        if math.gcd(a, c) == 1:
            return a
    return None


def cusp_set(N: int) -> list[Cusp]:
    """One representative per cusp of X_0(N).

    Candidates a/c run over divisors c of N with a mod gcd(c, N/c); they are
    then classified by cusp_equivalent, so duplicates or infeasible residues
    cost nothing.  Within a class the representative is the candidate with
    minimal c, then minimal a, except that the class of infinity keeps its
    1/0 encoding.  Ordering of the result: infinity first, then finite
    positive cusps by value, then 0 last.
    """
    if not 1 <= N <= 10**4:
        raise ValueError("level out of the supported range")
    classes: list[list[Cusp]] = []
    for c in divisors(N):
        g = math.gcd(c, N // c)
        bucket = [cl for cl in classes if math.gcd(cl[0].c, N) == math.gcd(c, N)]
        for a0 in range(g):
            a = _coprime_lift(a0, g, c)
            if a is None:
                continue
            cand = Cusp(a, c, N)
            for cl in bucket:
                if cusp_equivalent(cl[0], cand):
                    cl.append(cand)
                    break
            else:
                classes.append([cand])
                bucket.append(classes[-1])
    reps: list[Cusp] = []
    infinity = Cusp.infinity(N)
    for cl in classes:
        best = min(cl, key=lambda u: (u.c, u.a))
        if cusp_equivalent(best, infinity):
            best = infinity
        reps.append(best)

    def order_key(u: Cusp):
        if u.is_infinity:
            return (0, Fraction(0))
        if u.a == 0:
            return (2, Fraction(0))
        return (1, Fraction(u.a, u.c))

    reps.sort(key=order_key)
    return reps


def ligozat_order(f: EtaQuotient, cusp: Cusp) -> Fraction:
    """Exact order of f at the cusp, in the local parameter q^(1/width).

    The total over a full cusp set is 0 for any true modular function: eta
    never vanishes on the upper half plane, so all zeros and poles sit at
    cusps and the divisor has degree zero.
    """
    if cusp.level != f.level:
        raise ValueError("cusp level differs from quotient level")
    ok, failed = is_modular_function(f)
    if not ok:
        warnings.warn(
            f"order requested for a non-modular quotient ({'; '.join(failed)})",
            stacklevel=2,
        )
    N = f.level
    c = cusp.c
    total = Fraction(0)
    for d, r in f.exponents.items():
        u = math.gcd(c, d) if c else d
        total += Fraction(r * u * u, d)
    return Fraction(N, 24 * math.gcd(c * c, N)) * total


def expand(f: EtaQuotient, trunc: int, ring: Ring = ZZ) -> Series:
    """q-expansion of f as a Series with frontier `trunc`.

    The eta prefactor contributes q^(sum delta*r_delta / 24); that exponent
    must be an integer (it may be negative).
    """
    shift = f.prefix_exponent()
    if shift.denominator != 1:
        raise ValueError(f"fractional leading exponent {shift}")
    shift = int(shift)
    body = Series.one(ring, trunc - shift)
    for d, r in f.exponents.items():
        body = body * euler_product(d, r, trunc - shift, ring)
    return body.shift(shift)


def radu_order_bound(
    M: int,
    r: dict[int, int],
    m: int,
    t: int,
    N: int,
    s: dict[int, int],
    cusp: Cusp,
) -> Fraction:
    """Exact rational lower bound for the order at `cusp` of

        prod eta(lam*tau)^{s_lam} * sum a(m*n + t) q^n,

    where sum a(n) q^n = prod_{delta | M} (q^delta; q^delta)^{r_delta}.

    This is the printed min-over-l form; the progression offset t enters the
    hypotheses but not the bound itself, so after validation it is unused.
    """
    if m < 1 or not 0 <= t < m:
        raise ValueError("need 0 <= t < m")
    for d in r:
        if d < 1 or M % d:
            raise ValueError(f"{d} is not a divisor of {M}")
    for lam in s:
        if lam < 1 or N % lam:
            raise ValueError(f"{lam} is not a divisor of {N}")
    if cusp.level != N:
        raise ValueError("cusp level differs from N")
    a, c = cusp.a, cusp.c
    stretch = math.gcd(m * m - 1, 24)
    best = None
    for l in range(m):
        tot = Fraction(0)
        for d, rd in r.items():
            u = math.gcd(d * (a + l * c * stretch), m * c) if m * c else d * abs(a + l * c * stretch)
            tot += Fraction(rd * u * u, d * m)
        if best is None or tot < best:
            best = tot
    etapart = Fraction(0)
    for lam, sl in s.items():
        u = math.gcd(lam, c) if c else lam
        etapart += Fraction(sl * u * u, lam)
    return Fraction(N, math.gcd(c * c, N)) * (best + etapart) / 24
