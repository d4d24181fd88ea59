"""Exact integer primitives: roots, squares, modular powers and quadratic symbols.

Everything here works on Python ``int`` and never touches floating point.
"""

from __future__ import annotations

import math

from .primes import is_prime

__all__ = [
    "isqrt",
    "iroot",
    "is_perfect_square",
    "mod_pow",
    "jacobi_symbol",
    "legendre_symbol",
]

# squares modulo 64; rules out ~80% of non-squares before the root is taken
_SQUARES_MOD_64 = frozenset((r * r) % 64 for r in range(64))


def isqrt(n: int) -> int:
    """Floor of the square root of ``n``: r*r <= n < (r+1)*(r+1)."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def iroot(n: int, q: int) -> int:
    """Floor of the ``q``-th root of a non-negative ``n``, by bisection."""
    if q < 1:
        raise ValueError("root degree must be >= 1")
    if n < 0:
        raise ValueError(f"iroot of negative number {n}")
    if q == 1 or n < 2:
        return n
    if q == 2:
        return math.isqrt(n)
    lo, hi = 1, 1 << (n.bit_length() // q + 1)
    # invariant: lo**q <= n < hi**q
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**q <= n:
            lo = mid
        else:
            hi = mid
    return lo


def is_perfect_square(n: int) -> int | None:
    """Return ``r >= 0`` with ``r*r == n``, or ``None`` if ``n`` is not a square."""
    if n < 0:
        return None
    if (n & 63) not in _SQUARES_MOD_64:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp mod modulus`` in [0, modulus), by square-and-multiply."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, modulus)


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive ``n``.

    Binary algorithm: strip factors of two with the (2/n) supplement and
    flip with reciprocity, so ``n`` never needs to be factored.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime ``p``; rejects anything else."""
    if p % 2 == 0:
        raise ValueError(f"Legendre symbol needs an odd prime, got even {p}")
    if not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, {p} is composite")
    return jacobi_symbol(a, p)
