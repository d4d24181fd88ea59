"""Brute-force oracle for (-1)^a p^x + (-1)^b (2^k (2p+1))^y = z^2.

``z`` is never iterated: a candidate (x, y) is a solution exactly when the
left-hand side is a perfect square, so the scan is two-dimensional.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import is_perfect_square
from .primes import is_prime

__all__ = [
    "EquationSpec",
    "SearchBounds",
    "Solution",
    "Verdict",
    "evaluate",
    "brute_force",
    "modular_obstruction",
]


@dataclass(frozen=True)
class EquationSpec:
    """One member of the equation family, fixed by signs, prime and power of two."""

    alpha: int
    beta: int
    p: int
    k: int

    def __post_init__(self):
        if self.alpha not in (0, 1) or self.beta not in (0, 1):
            raise ValueError("alpha and beta must each be 0 or 1")
        if self.alpha * self.beta != 0:
            raise ValueError("alpha*beta must be 0")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if not is_prime(self.q):
            raise ValueError(
                f"p={self.p} is not a Sophie Germain prime: 2p+1={self.q} is not prime"
            )

    @property
    def q(self) -> int:
        return 2 * self.p + 1

    @property
    def base(self) -> int:
        """The second base, 2^k * q."""
        return (1 << self.k) * self.q

    def __str__(self) -> str:
        s1 = "-" if self.alpha else ""
        s2 = "-" if self.beta else "+"
        return f"{s1}{self.p}^x {s2} (2^{self.k}*{self.q})^y = z^2"


@dataclass(frozen=True)
class SearchBounds:
    x_max: int
    y_max: int

    def __post_init__(self):
        if self.x_max < 0 or self.y_max < 0:
            raise ValueError("search bounds must be non-negative")


@dataclass(frozen=True, order=True)
class Solution:
    x: int
    y: int
    z: int
    k: int | None = None
    provenance: str = "search"

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


class Verdict(str, enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


def evaluate(spec: EquationSpec, x: int, y: int) -> int:
    """Exact left-hand side at (x, y)."""
    a = spec.p**x
    b = spec.base**y
    return (-a if spec.alpha else a) + (-b if spec.beta else b)


def brute_force(spec: EquationSpec, bounds: SearchBounds) -> list[Solution]:
    """Every solution with x <= x_max, y <= y_max, ordered by (x, y)."""
    out = []
    sa = -1 if spec.alpha else 1
    sb = -1 if spec.beta else 1
    base = spec.base
    px = 1
    for x in range(bounds.x_max + 1):
        a = sa * px
        by = 1
        for y in range(bounds.y_max + 1):
            z = is_perfect_square(a + sb * by)
            if z is not None:
                out.append(Solution(x, y, z, spec.k, "search"))
            by *= base
        px *= spec.p
    return out


def _power_residues(base: int, modulus: int, start: int, parity: str | None) -> set[int]:
    # (base^e mod m, e mod 2) has at most 2m states, so 2m steps past
    # ``start`` visit every residue the exponent can still produce.
    res = set()
    v = pow(base, start, modulus)
    for e in range(start, start + 2 * modulus + 1):
        if parity is None or (e % 2 == 0) == (parity == "even"):
            res.add(v)
        v = v * base % modulus
    return res


def modular_obstruction(
    spec: EquationSpec,
    modulus: int,
    x_parity: str | None = None,
    y_parity: str | None = None,
    *,
    x_min: int = 0,
    y_min: int = 0,
) -> Verdict:
    """Decide whether the left-hand side can ever be a square mod ``modulus``.

    ``x_parity``/``y_parity`` take "even", "odd" or None; ``x_min``/``y_min``
    restrict to a branch such as y >= 1. INFEASIBLE is a proof that no
    solution exists with those constraints.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    for par in (x_parity, y_parity):
        if par not in (None, "even", "odd"):
            raise ValueError(f"parity must be 'even', 'odd' or None, got {par!r}")
    m = modulus
    squares = {r * r % m for r in range(m)}
    sa = -1 if spec.alpha else 1
    sb = -1 if spec.beta else 1
    xs = {sa * r % m for r in _power_residues(spec.p, m, x_min, x_parity)}
    ys = {sb * r % m for r in _power_residues(spec.base, m, y_min, y_parity)}
    for a in xs:
        for b in ys:
            if (a + b) % m in squares:
                return Verdict.FEASIBLE
    return Verdict.INFEASIBLE
