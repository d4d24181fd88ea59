"""Bounded checkers and closed-form solvers for the classical ingredient equations.

* Catalan:            a^x - b^y = 1
* p^x + 1 = y^2       for prime p
* Nagell-Ljunggren:   (x^n - 1)/(x - 1) = y^q
* 1 + (2^k (2p+1))^y = z^2   for Sophie Germain p and k >= 1
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import iroot
from .primes import is_prime, is_sophie_germain

__all__ = [
    "CatalanSolution",
    "NLSolution",
    "catalan_search",
    "solve_px_plus_one_square",
    "nagell_ljunggren_search",
    "solve_safe_power_square",
]


@dataclass(frozen=True, order=True)
class CatalanSolution:
    a: int
    b: int
    x: int
    y: int

    def holds(self) -> bool:
        return self.a**self.x - self.b**self.y == 1


@dataclass(frozen=True, order=True)
class NLSolution:
    x: int
    y: int
    n: int
    q: int

    def holds(self) -> bool:
        return sum(self.x**i for i in range(self.n)) == self.y**self.q


def catalan_search(a_max: int, b_max: int, x_max: int, y_max: int) -> list[CatalanSolution]:
    """All a^x - b^y = 1 with 2 <= a <= a_max, 2 <= b <= b_max, 2 <= x <= x_max, 2 <= y <= y_max."""
    powers: dict[int, list[tuple[int, int]]] = {}
    for b in range(2, b_max + 1):
        v = b
        for y in range(2, y_max + 1):
            v *= b
            powers.setdefault(v, []).append((b, y))
    out = []
    for a in range(2, a_max + 1):
        v = a
        for x in range(2, x_max + 1):
            v *= a
            for b, y in powers.get(v - 1, ()):
                out.append(CatalanSolution(a, b, x, y))
    return sorted(out)


def solve_px_plus_one_square(p: int) -> list[tuple[int, int]]:
    """All non-negative (x, y) with p^x + 1 = y^2 for prime ``p``."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2:
        return [(3, 3)]
    if p == 3:
        return [(1, 2)]
    return []


def nagell_ljunggren_search(x_max: int, n_max: int, q_max: int) -> list[NLSolution]:
    """All (x^n - 1)/(x - 1) = y^q with 1 < x <= x_max, 2 < n <= n_max, 2 <= q <= q_max, y > 1."""
    out = []
    for x in range(2, x_max + 1):
        # repunit 1 + x + ... + x^(n-1), built up without division
        rep = 1 + x
        xn = x
        for n in range(3, n_max + 1):
            xn *= x
            rep += xn
            for q in range(2, q_max + 1):
                y = iroot(rep, q)
                if y > 1 and y**q == rep:
                    out.append(NLSolution(x, y, n, q))
    return sorted(out)


def solve_safe_power_square(p: int, k: int) -> list[tuple[int, int]]:
    """All non-negative (y, z) with 1 + (2^k (2p+1))^y = z^2.

    Only y = 1 can occur; then (z-1)(z+1) = 2^k q pins (p, k) to
    (2, 4) or (3, 5).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not is_sophie_germain(p):
        raise ValueError(f"p={p} is not a Sophie Germain prime")
    if (p, k) == (2, 4):
        return [(1, 9)]
    if (p, k) == (3, 5):
        return [(1, 15)]
    return []


def _mersenne_exponent_ok(k: int) -> bool:
    # 2^k - 1 prime => k prime
    return not is_prime(2**k - 1) or is_prime(k)


def _fermat_exponent_ok(k: int) -> bool:
    # 2^k + 1 prime => k = 0 or k a power of two
    return not is_prime(2**k + 1) or k == 0 or k & (k - 1) == 0
