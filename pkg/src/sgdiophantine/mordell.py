"""Integral points on Mordell curves y^2 = x^3 + n and the two 5-power
equations that reduce to the curves n = -4, -100, -2500.

Completeness beyond a scanned range is not proved here. The shipped table
is trusted (it agrees with published elliptic curve tables) and every
scan result is checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .arith import iroot, is_perfect_square

__all__ = [
    "MordellPoint",
    "MordellCurve",
    "integral_points",
    "load_table",
    "dump_table",
    "known_curve",
    "solve_5x_eq_4_plus_square",
    "solve_2_5x_eq_1_plus_square",
    "DEFAULT_X_BOUND",
]

DEFAULT_X_BOUND = 10**5
_TABLE = "mordell_curves.txt"


@dataclass(frozen=True, order=True)
class MordellPoint:
    x: int
    y: int


@dataclass(frozen=True)
class MordellCurve:
    n: int
    known_complete_points: tuple[MordellPoint, ...] | None = None

    def __post_init__(self):
        if self.n == 0:
            raise ValueError("y^2 = x^3 is singular; n must be nonzero")

    @property
    def discriminant(self) -> int:
        return -16 * 27 * self.n**2

    @property
    def table_trusted(self) -> bool:
        return self.known_complete_points is not None

    def contains(self, pt: MordellPoint) -> bool:
        return pt.y * pt.y == pt.x**3 + self.n


def parse_table(text: str) -> dict[int, list[MordellPoint]]:
    table: dict[int, list[MordellPoint]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, x, y = (int(t) for t in line.split())
        table.setdefault(n, []).append(MordellPoint(x, y))
    return table


def load_table(path=None) -> dict[int, list[MordellPoint]]:
    """Read an ``n x y`` table; defaults to the one shipped with the package."""
    if path is None:
        text = resources.files(__package__).joinpath("data").joinpath(_TABLE).read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_table(text)


def dump_table(table: dict[int, Iterable[MordellPoint]], header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    for n, pts in table.items():
        lines.extend(f"{n} {pt.x} {pt.y}" for pt in pts)
    return "\n".join(lines) + "\n"


def known_curve(n: int) -> MordellCurve:
    """Curve ``n`` carrying its trusted point list when the table has it."""
    pts = load_table().get(n)
    return MordellCurve(n, tuple(pts) if pts is not None else None)


def integral_points(curve: MordellCurve, x_bound: int = DEFAULT_X_BOUND) -> list[MordellPoint]:
    """All points with |x| <= x_bound and y >= 0, ascending in x."""
    if x_bound < 1:
        raise ValueError(f"x_bound must be >= 1, got {x_bound}")
    n = curve.n
    # x^3 + n >= 0 forces x >= cbrt(-n)
    if n >= 0:
        x_lo = -iroot(n, 3)
    else:
        c = iroot(-n, 3)
        x_lo = c if c**3 == -n else c + 1
    out = []
    for x in range(max(x_lo, -x_bound), x_bound + 1):
        y = is_perfect_square(x * x * x + n)
        if y is not None:
            out.append(MordellPoint(x, y))
    return out


def _five_adic(v: int) -> tuple[int, int]:
    j = 0
    while v % 5 == 0:
        v //= 5
        j += 1
    return j, v


def _solve_c_5x_minus_d(c: int, d: int, confirm_bound: int) -> list[tuple[int, int]]:
    # c*5^x = d + y^2 with x = 3t + r. Put X = c*5^(t+r), Y = c*5^r*y:
    #   Y^2 = c^3*5^(3t+3r) - c^2*d*25^r = X^3 + n_r,  n_r = -c^2*d*25^r.
    # Each integral point on curve n_r with X = c*5^j, j >= r, gives t = j - r.
    table = load_table()
    found = set()
    for r in range(3):
        n_r = -c * c * d * 25**r
        if n_r not in table:
            raise LookupError(f"no trusted point list for y^2 = x^3 + ({n_r})")
        for pt in table[n_r]:
            if pt.x % c:
                continue
            j, rest = _five_adic(pt.x // c)
            if rest != 1 or j < r:
                continue
            scale = c * 5**r
            if pt.y % scale:
                raise ArithmeticError(f"curve point {pt} on n={n_r} does not descend to an integer y")
            x, y = 3 * (j - r) + r, pt.y // scale
            if c * 5**x != d + y * y:
                raise ArithmeticError(f"curve point {pt} on n={n_r} maps to non-solution {(x, y)}")
            found.add((x, y))
    for x in range(confirm_bound + 1):
        y = is_perfect_square(c * 5**x - d)
        if y is not None and (x, y) not in found:
            raise ArithmeticError(
                f"direct scan found {(x, y)} that the curve table misses; table incomplete"
            )
    return sorted(found)


def solve_5x_eq_4_plus_square(confirm_bound: int = 30) -> list[tuple[int, int]]:
    """Non-negative (x, y) with 5^x = 4 + y^2, through the curves n = -4, -100, -2500.

    The answer is re-confirmed by a direct scan over x <= ``confirm_bound``.
    """
    return _solve_c_5x_minus_d(1, 4, confirm_bound)


def solve_2_5x_eq_1_plus_square(confirm_bound: int = 30) -> list[tuple[int, int]]:
    """Non-negative (x, y) with 2*5^x = 1 + y^2, through the same three curves."""
    return _solve_c_5x_minus_d(2, 1, confirm_bound)
