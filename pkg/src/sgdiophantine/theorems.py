"""Complete solution sets of (-1)^a p^x + (-1)^b (2^k (2p+1))^y = z^2.

Each covered equation family has a finite list of sporadic solutions and,
for p = 2, a few one-parameter families in n >= 1 of the shape

    k = a*n + b,  x = a*n + b,  y = a*n + b,  z = sum of c * 2^(a*n + b).

For a fixed ``k`` a family contributes at most one solution, found by
solving its ``k`` formula for an integer ``n``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .search import EquationSpec, SearchBounds, Solution, brute_force, evaluate

__all__ = [
    "FamilyTag",
    "ParametricFamily",
    "SolutionSet",
    "CrossCheckReport",
    "UnsupportedSpecError",
    "FamilyVerificationError",
    "classify",
    "closed_form",
    "expand_family",
    "cross_check",
    "families_for",
    "unsupported_reason",
    "to_json",
    "from_json",
]

Affine = tuple[int, int]
ZTerm = tuple[int, int, int]


class FamilyTag(str, enum.Enum):
    A1 = "A1"
    A1_k0 = "A1_k0"
    A2 = "A2"
    A3 = "A3"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B4_remark = "B4_remark"
    unsupported = "unsupported"


class UnsupportedSpecError(ValueError):
    """No proved solution set covers this equation."""


class FamilyVerificationError(ArithmeticError):
    """An expanded family member failed to satisfy its equation."""


@dataclass(frozen=True)
class ParametricFamily:
    alpha: int
    beta: int
    p: int
    k: Affine
    x: Affine
    y: Affine
    z: tuple[ZTerm, ...]
    n_min: int = 1
    name: str = ""

    def at(self, n: int) -> tuple[int, int, int, int]:
        """(k, x, y, z) for parameter ``n``."""
        if n < self.n_min:
            raise ValueError(f"n={n} below family minimum {self.n_min}")

        def aff(f):
            return f[0] * n + f[1]

        z = 0
        for c, a, b in self.z:
            e = a * n + b
            if e < 0:
                raise ValueError(f"negative power of two at n={n}")
            z += c << e
        return aff(self.k), aff(self.x), aff(self.y), z

    def solve_k(self, k: int) -> int | None:
        """The ``n >= n_min`` with k formula equal to ``k``, if any."""
        a, b = self.k
        if a == 0:
            raise ValueError("constant k formula has no unique n")
        n, rem = divmod(k - b, a)
        if rem or n < self.n_min:
            return None
        return n

    def describe(self) -> str:
        def aff(f):
            a, b = f
            if a == 0:
                return str(b)
            s = "n" if a == 1 else f"{a}n"
            return s if b == 0 else f"{s}{b:+d}"

        def term(t):
            c, a, b = t
            pw = f"2^({aff((a, b))})"
            return pw if c == 1 else f"{c}*{pw}"

        z = " + ".join(term(t) for t in self.z)
        return f"(k,x,y,z) = ({aff(self.k)}, {aff(self.x)}, {aff(self.y)}, {z}), n >= {self.n_min}"


@dataclass(frozen=True)
class SolutionSet:
    spec: EquationSpec
    tag: FamilyTag
    sporadic: tuple[Solution, ...]
    families: tuple[ParametricFamily, ...]
    applicability: str
    complete: bool = True

    def family_members(self) -> list[Solution]:
        out = []
        for fam in self.families:
            n = fam.solve_k(self.spec.k)
            if n is not None:
                out.extend(expand_family(fam, n, n))
        return out

    def solutions(self) -> list[Solution]:
        """Sporadic solutions plus family members at this k, deduplicated, by (x, y)."""
        seen = {}
        for s in [*self.sporadic, *self.family_members()]:
            seen.setdefault((s.k, s.x, s.y, s.z), s)
        return sorted(seen.values(), key=lambda s: (s.x, s.y))

    def triples(self) -> list[tuple[int, int, int]]:
        return [s.triple for s in self.solutions()]


@dataclass(frozen=True)
class CrossCheckReport:
    spec: EquationSpec
    bounds: SearchBounds
    closed: tuple[tuple[int, int, int], ...]
    brute: tuple[tuple[int, int, int], ...]
    only_closed: tuple[tuple[int, int, int], ...] = field(default=())
    only_brute: tuple[tuple[int, int, int], ...] = field(default=())

    @property
    def equal(self) -> bool:
        return not self.only_closed and not self.only_brute

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "mismatch"


# --- theorem catalog --------------------------------------------------------

def _fam(sig, name, k, x, y, z):
    alpha, beta = sig
    return ParametricFamily(alpha, beta, 2, k, x, y, tuple(z), 1, name)


_FAMILIES = {
    FamilyTag.A1: (
        _fam((0, 0), "A1.1", (2, 0), (2, 2), (0, 1), [(1, 1, 0), (1, 1, 1)]),
        _fam((0, 0), "A1.2", (2, 2), (2, -2), (0, 1), [(1, 1, -1), (1, 1, 2)]),
    ),
    FamilyTag.A3: (
        _fam((1, 0), "A3.1", (1, -1), (2, 2), (0, 2), [(3, 1, -1)]),
        _fam((1, 0), "A3.2", (2, -1), (2, -2), (0, 1), [(3, 1, -1)]),
        _fam((1, 0), "A3.3", (2, -2), (2, -2), (0, 1), [(1, 1, 0)]),
        _fam((1, 0), "A3.4", (2, -2), (2, 0), (0, 1), [(1, 1, -1)]),
        _fam((1, 0), "A3.5", (2, -2), (6, -4), (0, 3), [(11, 3, -3)]),
    ),
}

# (p, k, (x, y, z)); None matches any value
_SPORADIC = {
    FamilyTag.A1: [(2, None, (3, 0, 3))],
    FamilyTag.A1_k0: [(2, 0, (2, 1, 3)), (2, 0, (3, 0, 3))],
    FamilyTag.A2: [(2, None, (0, 0, 0)), (2, None, (1, 0, 1))],
    FamilyTag.A3: [(2, None, (0, 0, 0))],
    FamilyTag.B1: [(3, None, (1, 0, 2)), (3, 5, (0, 1, 15))],
    FamilyTag.B2: [
        (3, None, (1, 0, 2)),
        (3, 4, (6, 1, 29)),
        (3, 4, (2, 1, 11)),
        (3, 6, (4, 1, 23)),
    ],
    FamilyTag.B3: [(None, None, (0, 0, 0)), (3, 3, (4, 1, 5))],
    FamilyTag.B4: [
        (None, None, (0, 0, 0)),
        (3, 1, (3, 2, 13)),
        (3, 2, (3, 1, 1)),
        (3, 2, (1, 1, 5)),
        (11, 2, (1, 1, 9)),
    ],
    FamilyTag.B4_remark: [(None, None, (0, 0, 0))],
}

_APPLICABILITY = {
    FamilyTag.A1: "p = 2, alpha = beta = 0, k >= 1",
    FamilyTag.A1_k0: "p = 2, alpha = beta = 0, k = 0",
    FamilyTag.A2: "p = 2, alpha = 0, beta = 1, k >= 0",
    FamilyTag.A3: "p = 2, alpha = 1, beta = 0, k >= 0",
    FamilyTag.B1: "odd p = 3, 5 (mod 8), alpha = beta = 0, k odd",
    FamilyTag.B2: "p = 3 (mod 8), alpha = beta = 0, k even and >= 2",
    FamilyTag.B3: "p = 3 (mod 4), alpha = 0, beta = 1, k >= 0",
    FamilyTag.B4: "p = 3 (mod 8), alpha = 1, beta = 0, k >= 1",
    FamilyTag.B4_remark: "p = 1, 5 (mod 8), alpha = 1, beta = 0, k >= 0",
}


def families_for(tag: FamilyTag) -> tuple[ParametricFamily, ...]:
    return _FAMILIES.get(FamilyTag(tag), ())


def classify(spec: EquationSpec) -> FamilyTag:
    """Which proved result, if any, covers ``spec``. Never raises."""
    sig = (spec.alpha, spec.beta)
    p, k = spec.p, spec.k
    if p == 2:
        if sig == (0, 0):
            return FamilyTag.A1 if k >= 1 else FamilyTag.A1_k0
        return FamilyTag.A2 if sig == (0, 1) else FamilyTag.A3
    r = p % 8
    if sig == (0, 0):
        if k % 2 == 1 and r in (3, 5):
            return FamilyTag.B1
        if k % 2 == 0 and k >= 2 and r == 3:
            return FamilyTag.B2
    elif sig == (0, 1):
        if p % 4 == 3:
            return FamilyTag.B3
    else:
        if r == 3 and k >= 1:
            return FamilyTag.B4
        if r in (1, 5):
            return FamilyTag.B4_remark
    return FamilyTag.unsupported


def unsupported_reason(spec: EquationSpec) -> str:
    """Why ``classify`` rejects ``spec``; empty string when it does not."""
    if classify(spec) is not FamilyTag.unsupported:
        return ""
    p, k, r = spec.p, spec.k, spec.p % 8
    sig = (spec.alpha, spec.beta)
    if sig == (0, 0):
        if k % 2:
            return f"odd k needs p = 3, 5 (mod 8), but p = {r} (mod 8)"
        if k == 0:
            return "k = 0 with odd p is not covered"
        return f"even k needs p = 3 (mod 8), but p = {r} (mod 8)"
    if sig == (0, 1):
        return f"needs p = 3 (mod 4), but p = {p % 4} (mod 4)"
    if r == 3:
        return "p = 3 (mod 8) needs k >= 1"
    return "p = 7 (mod 8) is not covered"


def closed_form(spec: EquationSpec) -> SolutionSet:
    """The proved complete solution set of ``spec``.

    Raises UnsupportedSpecError when no result applies; an empty set is a
    different thing and comes back as a SolutionSet with no solutions.
    """
    tag = classify(spec)
    if tag is FamilyTag.unsupported:
        raise UnsupportedSpecError(f"no theorem applies to {spec}: {unsupported_reason(spec)}")
    sporadic = []
    for p, k, (x, y, z) in _SPORADIC[tag]:
        if p not in (None, spec.p) or k not in (None, spec.k):
            continue
        sol = Solution(x, y, z, spec.k, "closed-form")
        if evaluate(spec, x, y) != z * z:
            raise FamilyVerificationError(f"sporadic {sol.triple} fails {spec}")
        sporadic.append(sol)
    families = tuple(f for f in families_for(tag) if f.solve_k(spec.k) is not None)
    return SolutionSet(spec, tag, tuple(sporadic), families, _APPLICABILITY[tag], True)


def expand_family(family: ParametricFamily, n_lo: int, n_hi: int) -> list[Solution]:
    """Concrete members for n in [n_lo, n_hi], each checked exactly."""
    if n_lo < family.n_min:
        raise ValueError(f"n_lo={n_lo} below family minimum {family.n_min}")
    out = []
    for n in range(n_lo, n_hi + 1):
        k, x, y, z = family.at(n)
        spec = EquationSpec(family.alpha, family.beta, family.p, k)
        if min(k, x, y) < 0 or evaluate(spec, x, y) != z * z:
            raise FamilyVerificationError(
                f"family {family.name or family.describe()} at n={n} gives "
                f"(k,x,y,z)=({k},{x},{y},{z}), which does not solve {spec}"
            )
        out.append(Solution(x, y, z, k, "family-expansion"))
    return out


def cross_check(spec: EquationSpec, bounds: SearchBounds) -> CrossCheckReport:
    """Compare the closed form (clipped to ``bounds``) with a brute-force scan."""
    sset = closed_form(spec)
    closed = sorted(
        {t for t in sset.triples() if t[0] <= bounds.x_max and t[1] <= bounds.y_max}
    )
    brute = sorted({s.triple for s in brute_force(spec, bounds)})
    cs, bs = set(closed), set(brute)
    return CrossCheckReport(
        spec,
        bounds,
        tuple(closed),
        tuple(brute),
        tuple(sorted(cs - bs)),
        tuple(sorted(bs - cs)),
    )


# --- serialization ----------------------------------------------------------

def _s(v: int) -> str:
    return str(v)


def solution_set_to_dict(sset: SolutionSet) -> dict:
    sp = sset.spec
    return {
        "spec": {"alpha": _s(sp.alpha), "beta": _s(sp.beta), "p": _s(sp.p), "k": _s(sp.k)},
        "sporadic": [{"x": _s(s.x), "y": _s(s.y), "z": _s(s.z)} for s in sset.sporadic],
        "families": [
            {
                "n_min": _s(f.n_min),
                "k": [_s(v) for v in f.k],
                "x": [_s(v) for v in f.x],
                "y": [_s(v) for v in f.y],
                "z": [[_s(v) for v in t] for t in f.z],
            }
            for f in sset.families
        ],
        "complete": sset.complete,
        "tag": sset.tag.value,
    }


def to_json(sset: SolutionSet) -> str:
    """One-line JSON; integers are decimal strings."""
    return json.dumps(solution_set_to_dict(sset), separators=(",", ":"))


def from_json(text: str) -> SolutionSet:
    d = json.loads(text)
    sd = d["spec"]
    spec = EquationSpec(int(sd["alpha"]), int(sd["beta"]), int(sd["p"]), int(sd["k"]))
    tag = FamilyTag(d["tag"])
    sporadic = tuple(
        Solution(int(s["x"]), int(s["y"]), int(s["z"]), spec.k, "closed-form")
        for s in d["sporadic"]
    )
    names = {(f.k, f.x, f.y, f.z): f.name for f in families_for(tag)}
    fams = []
    for f in d["families"]:
        k, x, y = (tuple(int(v) for v in f[key]) for key in ("k", "x", "y"))
        z = tuple(tuple(int(v) for v in t) for t in f["z"])
        fams.append(
            ParametricFamily(
                spec.alpha, spec.beta, spec.p, k, x, y, z,
                int(f["n_min"]), names.get((k, x, y, z), ""),
            )
        )
    return SolutionSet(
        spec, tag, sporadic, tuple(fams), _APPLICABILITY.get(tag, ""), bool(d["complete"])
    )
