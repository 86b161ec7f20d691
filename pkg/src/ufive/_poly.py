"""Dense integer polynomial arithmetic with Kronecker-substitution products.

Coefficient sequences are plain Python lists of ``int`` (index = degree),
normalized so the last entry is nonzero.  Large products are performed by
packing both operands into single big integers at a fixed byte stride and
multiplying through gmpy2 (GMP), which is asymptotically far faster than
any pure-Python convolution.  Signed coefficients are handled by biasing
each field by half the field range before packing and subtracting the
accumulated bias afterwards.

Every function takes an optional ``mod``; when given, inputs are assumed
reduced and outputs are reduced into ``[0, mod)``.
"""

from __future__ import annotations

import gmpy2

_SCHOOLBOOK_LEN = 8
_SCHOOLBOOK_BITS = 64


def trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def max_bits(p: list[int]) -> int:
    return max((abs(c).bit_length() for c in p if c), default=0)


def add(p: list[int], q: list[int], mod: int | None = None) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = p[:]
    if mod is None:
        for i, c in enumerate(q):
            out[i] += c
    else:
        for i, c in enumerate(q):
            out[i] = (out[i] + c) % mod
    return trim(out)


def neg(p: list[int], mod: int | None = None) -> list[int]:
    if mod is None:
        return [-c for c in p]
    return trim([(-c) % mod for c in p])


def scal(a: int, p: list[int], mod: int | None = None) -> list[int]:
    if a == 0:
        return []
    if mod is None:
        return [a * c for c in p]
    return trim([(a * c) % mod for c in p])


def _pack(p: list[int], stride: int) -> int:
    half = 1 << (8 * stride - 1)
    buf = bytearray(stride * len(p))
    for i, c in enumerate(p):
        buf[i * stride:(i + 1) * stride] = (c + half).to_bytes(stride, "little")
    bias = int.from_bytes((b"\x00" * (stride - 1) + b"\x80") * len(p), "little")
    return int.from_bytes(bytes(buf), "little") - bias


def _unpack(r: int, stride: int, n: int) -> list[int]:
    half = 1 << (8 * stride - 1)
    bias = int.from_bytes((b"\x00" * (stride - 1) + b"\x80") * n, "little")
    raw = (r + bias).to_bytes(stride * n, "little")
    mv = memoryview(raw)
    return [int.from_bytes(mv[i * stride:(i + 1) * stride], "little") - half
            for i in range(n)]


def mul(p: list[int], q: list[int], mod: int | None = None) -> list[int]:
    """Product of two coefficient lists; Kronecker-packed for large inputs."""
    if not p or not q:
        return []
    small = min(len(p), len(q))
    if small <= _SCHOOLBOOK_LEN and min(max_bits(p), max_bits(q)) <= _SCHOOLBOOK_BITS:
        if len(p) > len(q):
            p, q = q, p
        out = [0] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    if b:
                        out[i + j] += a * b
        return trim(out) if mod is None else trim([c % mod for c in out])
    # field width: product coefficient is a sum of at most `small` products
    bits = max_bits(p) + max_bits(q) + small.bit_length() + 2
    stride = (bits + 7) // 8
    n = len(p) + len(q) - 1
    r = int(gmpy2.mpz(_pack(p, stride)) * gmpy2.mpz(_pack(q, stride)))
    out = _unpack(r, stride, n)
    return trim(out) if mod is None else trim([c % mod for c in out])


def mul_trunc(p: list[int], q: list[int], n: int, mod: int | None = None) -> list[int]:
    """Product with degrees >= n discarded (operands pre-sliced for speed)."""
    out = mul(p[:n], q[:n], mod)
    del out[n:]
    return trim(out)


def val5(c: int) -> int:
    """5-adic valuation of a nonzero integer."""
    return int(gmpy2.remove(gmpy2.mpz(c), 5)[1])


def min_val5(p: list[int]) -> int | None:
    vals = [val5(c) for c in p if c]
    return min(vals) if vals else None


def divexact_pow5(p: list[int], e: int) -> list[int]:
    """Divide every coefficient by 5**e; raises if any division is inexact."""
    if e == 0:
        return p[:]
    d = 5 ** e
    out = []
    for c in p:
        quot, rem = divmod(c, d)
        if rem:
            raise ValueError(f"coefficient {c} not divisible by 5^{e}")
        out.append(quot)
    return out


def eval_at(p: list[int], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc
