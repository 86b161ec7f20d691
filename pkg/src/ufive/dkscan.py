"""Bulk verification and discovery of progression congruences for d_k(n).

The counting series for k-elongated diamonds is the eta-quotient-shaped
product prod (1-q^{2m})^k / (1-q^m)^{3k+1}; this module generates its
coefficients in a chosen ring, checks stated divisibility families over
arithmetic progressions, and hunts for new ones empirically.
"""

from dataclasses import dataclass, field
from multiprocessing import Pool

from .localize import progression_offset
from .series import Ring, Series, ZZ, euler_product, mod5

EXACT_TRUNC_LIMIT = 2000
MOD_TRUNC_LIMIT = 200_000

# Extra 5-adic headroom so that "zero residue" and "zero value" stay
# distinguishable while scanning: the counts themselves are positive.
_GUARD = 3


@dataclass(frozen=True)
class FamilySpec:
    """One progression-divisibility claim: 5^power | d_k(modulus*n + residue).

    The index k itself moves along an affine ramp k_base + k_step*j, so a
    single spec can cover infinitely many indices; j is capped per scan.
    """

    k_base: int
    k_step: int
    modulus: int
    residue: int
    power: int
    source: str = "catalog"

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must lie in [0, modulus)")
        if self.power < 1:
            raise ValueError("power must be at least 1")
        if self.k_base < 0 or self.k_step < 0:
            raise ValueError("index ramp must stay nonnegative")

    def k_for(self, j: int) -> int:
        return self.k_base + self.k_step * j


@dataclass
class ScanReport:
    spec: object  # FamilySpec or a short label for the composite scans
    bound: int
    checked: int = 0
    nonzero: int = 0
    counterexample: dict | None = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counterexample is None


_DK_CACHE: dict[tuple[int, Ring], Series] = {}


def dk_coefficients(k: int, trunc: int, ring: Ring = ZZ) -> Series:
    """Counting series for k-elongated diamonds, truncated below q^trunc."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    limit = EXACT_TRUNC_LIMIT if ring.kind != "mod" else MOD_TRUNC_LIMIT
    if trunc > limit:
        raise ValueError(f"truncation {trunc} beyond the {ring.kind}-ring limit")
    cached = _DK_CACHE.get((k, ring))
    if cached is None or cached.trunc < trunc:
        cached = (euler_product(2, k, trunc, ring)
                  * euler_product(1, -(3 * k + 1), trunc, ring))
        _DK_CACHE[(k, ring)] = cached
    return cached.truncate(trunc)


def _recheck(k: int, n: int, power: int) -> bool:
    """Recompute a single coefficient's divisibility from scratch."""
    if n < EXACT_TRUNC_LIMIT:
        series = (euler_product(2, k, n + 1, ZZ)
                  * euler_product(1, -(3 * k + 1), n + 1, ZZ))
    else:
        ring = mod5(power + 2 * _GUARD)
        series = (euler_product(2, k, n + 1, ring)
                  * euler_product(1, -(3 * k + 1), n + 1, ring))
    return series[n] % 5 ** power == 0


def verify_family(spec: FamilySpec, j_max: int, bound: int) -> ScanReport:
    """Check one family for every ramp step j <= j_max below the bound.

    Stops at the first counterexample, which is recomputed independently
    before being reported.
    """
    report = ScanReport(spec=spec, bound=bound)
    ring = mod5(spec.power + _GUARD)
    for j in range(j_max + 1):
        k = spec.k_for(j)
        series = dk_coefficients(k, bound, ring)
        for n in range(spec.residue, bound, spec.modulus):
            value = series[n]
            report.checked += 1
            if value:
                report.nonzero += 1
            if value % 5 ** spec.power:
                assert not _recheck(k, n, spec.power), (
                    "counterexample did not reproduce under recomputation")
                report.counterexample = {"j": j, "k": k, "n": n,
                                         "residue": int(value % 5 ** spec.power)}
                return report
    return report


def verify_main_family(alpha_max: int = 4, bound: int = 10 ** 5,
                       exponent: int = 8) -> ScanReport:
    """Check the central family: progressions 4n == 1 mod 5^alpha for k = 5."""
    if not 1 <= alpha_max <= 6:
        raise ValueError("alpha_max must be in 1..6")
    needed = alpha_max // 2 + 1
    exponent = max(exponent, needed + _GUARD)
    series = dk_coefficients(5, bound, mod5(exponent))
    report = ScanReport(spec="main-family", bound=bound)
    for alpha in range(1, alpha_max + 1):
        power = alpha // 2 + 1
        step = 5 ** alpha
        start = progression_offset(alpha)
        count = 0
        for n in range(start, bound, step):
            value = series[n]
            report.checked += 1
            count += 1
            if value:
                report.nonzero += 1
            if value % 5 ** power:
                assert not _recheck(5, n, power), (
                    "counterexample did not reproduce under recomputation")
                report.counterexample = {"alpha": alpha, "n": n,
                                         "residue": int(value % 5 ** power)}
                return report
        report.detail[f"alpha-{alpha}"] = count
    return report


# The built-in catalog.  Labels are stable identifiers used by reports and
# by the command-line front end; j_max bounds the index ramp per scan.

_PAIR_INDICES = (1, 3, 5, 8, 10, 13, 15, 16, 18, 20, 23)
_PAIR_SQUARE_INDICES = (5, 8, 10)


def stated_families() -> list[tuple[str, FamilySpec, int]]:
    """The stated progression families, with default ramp depths."""
    catalog: list[tuple[str, FamilySpec, int]] = [
        ("ramp25-k1-r23", FamilySpec(1, 25, 25, 23, 1), 2),
        ("ramp75-k16-r8", FamilySpec(16, 75, 25, 8, 1), 2),
    ]
    for k in _PAIR_INDICES:
        catalog.append((f"pair-k{k}", FamilySpec(k, 0, 25, 24 - k, 1), 0))
    for k in _PAIR_SQUARE_INDICES:
        catalog.append((f"pair25-k{k}", FamilySpec(k, 0, 25, 24 - k, 2), 0))
    for alpha in (1, 2):
        base = 5 ** (2 * alpha)
        for j in (1, 2):
            catalog.append((
                f"odd-a{alpha}-j{j}",
                FamilySpec(2, 125, 5 * base, base * j + (23 * base + 1) // 8, 1),
                1,
            ))
    return catalog


def _scan_one(args: tuple[str, FamilySpec, int, int]) -> tuple[str, ScanReport]:
    label, spec, j_max, bound = args
    return label, verify_family(spec, j_max, bound)


def scan_catalog(bound: int = 5000, jobs: int = 1
                 ) -> list[tuple[str, ScanReport]]:
    """Run the whole catalog, optionally fanned out over processes.

    Results come back in catalog order no matter how the work was split.
    """
    work = [(label, spec, j_max, bound)
            for label, spec, j_max in stated_families()]
    if jobs <= 1:
        return [_scan_one(item) for item in work]
    with Pool(processes=jobs) as pool:
        done = dict(pool.map(_scan_one, work))
    return [(label, done[label]) for label, _, _ in stated_families()]


def discover(k_range, modulus: int, e_max: int, bound: int,
             min_witnesses: int = 20) -> list[FamilySpec]:
    """Exhaustive empirical search for divisibility over residue classes.

    Emits every (k, residue, power) whose progression shows no
    counterexample below the bound and at least min_witnesses members
    with a nonzero scanning residue; short or degenerate progressions
    are suppressed by that floor.
    """
    if modulus not in (5, 25, 125):
        raise ValueError("modulus must be one of 5, 25, 125")
    if e_max < 1:
        raise ValueError("e_max must be at least 1")
    ring = mod5(e_max + _GUARD)
    found = []
    for k in sorted(set(k_range)):
        series = dk_coefficients(k, bound, ring)
        for residue in range(modulus):
            min_val = e_max
            witnesses = 0
            for n in range(residue, bound, modulus):
                value = series[n]
                if value == 0:
                    continue  # indistinguishable from deeply divisible
                witnesses += 1
                val = 0
                while val < min_val and value % 5 == 0:
                    value //= 5
                    val += 1
                min_val = min(min_val, val)
                if min_val == 0:
                    break
            if min_val >= 1 and witnesses >= min_witnesses:
                for power in range(1, min_val + 1):
                    found.append(FamilySpec(k, 0, modulus, residue, power,
                                            source="empirical"))
    return found
