"""Primality, Sophie Germain primes and their residue classes modulo 2^m."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "PrimePair",
    "ResidueClassStats",
    "is_prime",
    "is_sophie_germain",
    "enumerate_sg",
    "sg_residue_class",
    "sg_density_stats",
    "primes_upto",
]

# Strong-pseudoprime witnesses that are exact for every n < 3.3e24 (> 2^64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
# Extra random rounds above the bound: 4^-64 = 2^-128 error ceiling.
_EXTRA_ROUNDS = 64

_SIEVE_LIMIT = 10**9
_SEGMENT = 1 << 18


@dataclass(frozen=True, order=True)
class PrimePair:
    """A Sophie Germain prime ``p`` with its safe prime ``q = 2p + 1``."""

    p: int
    q: int

    def __post_init__(self):
        if self.q != 2 * self.p + 1:
            raise ValueError(f"q must equal 2p+1, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class ResidueClassStats:
    modulus: int
    counts: dict[int, int]
    limit: int
    # p = 2 is counted here, never inside ``counts``
    includes_two: bool = field(default=False)

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin primality.

    Exact for n < 3.3e24 via a fixed witness set. Above that it is a
    probable-prime test with 64 extra rounds on bases drawn from a
    generator seeded by ``n`` (so answers are reproducible); the chance
    of a composite passing is below 2^-128.
    """
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES):
        return False
    if n < _DETERMINISTIC_BOUND:
        return True
    rng = random.Random(n)
    return all(
        _strong_probable_prime(n, rng.randrange(2, n - 1), d, s)
        for _ in range(_EXTRA_ROUNDS)
    )


def is_sophie_germain(p: int) -> bool:
    return is_prime(p) and is_prime(2 * p + 1)


def primes_upto(n: int) -> np.ndarray:
    """All primes <= n as an int64 array (plain Eratosthenes)."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for i in range(3, math.isqrt(n) + 1, 2):
        if sieve[i]:
            sieve[i * i :: 2 * i] = False
    return np.flatnonzero(sieve).astype(np.int64)


def _segment_mask(lo: int, hi: int, base: np.ndarray) -> np.ndarray:
    """Boolean primality mask for the integers in [lo, hi)."""
    mask = np.ones(hi - lo, dtype=bool)
    for b in base:
        b = int(b)
        if b * b >= hi:
            break
        start = max(b * b, -(-lo // b) * b)
        mask[start - lo :: b] = False
    if lo < 2:
        mask[: 2 - lo] = False
    return mask


def _sg_segmented(limit: int) -> list[int]:
    base = primes_upto(math.isqrt(2 * limit + 1) + 1)
    found = []
    for lo in range(0, limit + 1, _SEGMENT):
        hi = min(lo + _SEGMENT, limit + 1)
        p_mask = _segment_mask(lo, hi, base)
        q_mask = _segment_mask(2 * lo + 1, 2 * hi + 1, base)
        # q = 2p + 1 sits at offset 2(p - lo) in the q segment
        both = p_mask & q_mask[::2]
        found.extend((np.flatnonzero(both) + lo).tolist())
    return found


def enumerate_sg(limit: int) -> list[PrimePair]:
    """All Sophie Germain primes ``p <= limit`` in increasing order."""
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit <= _SIEVE_LIMIT:
        ps = _sg_segmented(limit)
    else:
        ps = _sg_segmented(_SIEVE_LIMIT)
        start = _SIEVE_LIMIT + 1
        # beyond the sieve only p = 5 mod 6 can qualify (p > 3)
        start += (5 - start) % 6
        ps.extend(p for p in range(start, limit + 1, 6) if is_sophie_germain(p))
    return [PrimePair(p, 2 * p + 1) for p in ps]


def sg_residue_class(limit: int, m: int, k: int) -> list[int]:
    """Sophie Germain primes ``p <= limit`` with ``p = k (mod 2^m)``, ``k`` odd."""
    modulus = _check_modulus(m)
    if k % 2 == 0:
        raise ValueError(f"residue class must be odd, got {k}")
    if not 1 <= k < modulus:
        raise ValueError(f"residue {k} out of range [1, {modulus})")
    if limit < 2:
        return []
    return [pp.p for pp in enumerate_sg(limit) if pp.p % modulus == k]


def sg_density_stats(limit: int, m: int) -> ResidueClassStats:
    modulus = _check_modulus(m)
    counts = dict.fromkeys(range(1, modulus, 2), 0)
    includes_two = False
    if limit >= 2:
        for pp in enumerate_sg(limit):
            if pp.p == 2:
                includes_two = True
            else:
                counts[pp.p % modulus] += 1
    return ResidueClassStats(modulus, counts, limit, includes_two)


def _check_modulus(m: int) -> int:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return 1 << m
