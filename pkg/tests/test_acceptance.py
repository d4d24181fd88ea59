"""Exit criteria: every proved solution set reproduced exactly at desk scale."""

import random

from sgdiophantine.arith import is_perfect_square, isqrt, legendre_symbol, mod_pow
from sgdiophantine.classical import (
    CatalanSolution,
    NLSolution,
    catalan_search,
    nagell_ljunggren_search,
    solve_px_plus_one_square,
    solve_safe_power_square,
)
from sgdiophantine.mordell import (
    MordellCurve,
    MordellPoint,
    integral_points,
    solve_2_5x_eq_1_plus_square,
    solve_5x_eq_4_plus_square,
)
from sgdiophantine.primes import enumerate_sg, primes_upto, sg_residue_class
from sgdiophantine.search import (
    EquationSpec,
    SearchBounds,
    Verdict,
    brute_force,
    evaluate,
    modular_obstruction,
)
from sgdiophantine.theorems import FamilyTag, closed_form, cross_check, expand_family, families_for


def found(a, b, p, k, x_max=30, y_max=8):
    return {s.triple for s in brute_force(EquationSpec(a, b, p, k), SearchBounds(x_max, y_max))}


def check_families(tag, n_max=20):
    for fam in families_for(tag):
        for s in expand_family(fam, 1, n_max):
            assert evaluate(EquationSpec(fam.alpha, fam.beta, 2, s.k), s.x, s.y) == s.z * s.z


def test_criterion_01_eq2(criterion):
    with criterion(1, "2^x + (2^k*5)^y = z^2, k=1..8", 5):
        for k in range(1, 9):
            rep = cross_check(EquationSpec(0, 0, 2, k), SearchBounds(40, 12))
            assert rep.equal, (k, rep.only_closed, rep.only_brute)
        check_families(FamilyTag.A1)
        s = expand_family(families_for(FamilyTag.A1)[0], 1, 1)[0]
        assert (s.k, s.x, s.y, s.z) == (2, 4, 1, 6) and 2**4 + 20 == 36


def test_criterion_02_eq3(criterion):
    with criterion(2, "2^x - (2^k*5)^y = z^2, k=0..8", 2):
        for k in range(0, 9):
            assert found(0, 1, 2, k, 40, 12) == {(0, 0, 0), (1, 0, 1)}


def test_criterion_03_eq4(criterion):
    with criterion(3, "-2^x + (2^k*5)^y = z^2, k=0..8, five families", 5):
        for k in range(0, 9):
            rep = cross_check(EquationSpec(1, 0, 2, k), SearchBounds(40, 12))
            assert rep.equal, (k, rep.only_closed, rep.only_brute)
        assert len(families_for(FamilyTag.A3)) == 5
        check_families(FamilyTag.A3)
        s = expand_family(families_for(FamilyTag.A3)[4], 1, 1)[0]
        assert (s.k, s.x, s.y, s.z) == (0, 2, 3, 11) and -(2**2) + 5**3 == 121


def test_criterion_04_eq5(criterion):
    with criterion(4, "p^x + (2^(2k'+1) q)^y = z^2, p = 3,5 mod 8", 10):
        for p in (3, 5, 11, 29, 53, 83):
            for kk in range(0, 4):
                k = 2 * kk + 1
                want = set()
                if p == 3:
                    want.add((1, 0, 2))
                    if k == 5:
                        want.add((0, 1, 15))
                assert found(0, 0, p, k) == want, (p, k)
                assert set(closed_form(EquationSpec(0, 0, p, k)).triples()) == want


def test_criterion_05_eq6(criterion):
    with criterion(5, "p^x + (2^(2k') q)^y = z^2, p = 3 mod 8", 10):
        expected = {
            (3, 2): {(1, 0, 2)},
            (3, 4): {(1, 0, 2), (6, 1, 29), (2, 1, 11)},
            (3, 6): {(1, 0, 2), (4, 1, 23)},
        }
        for p in (3, 11, 83):
            for k in (2, 4, 6):
                want = expected.get((p, k), set())
                assert found(0, 0, p, k) == want, (p, k)
                assert set(closed_form(EquationSpec(0, 0, p, k)).triples()) == want


def test_criterion_06_eq7(criterion):
    with criterion(6, "p^x - (2^k q)^y = z^2, p = 3 mod 4", 10):
        for p in (3, 11, 23, 83):
            for k in range(0, 7):
                want = {(0, 0, 0)} | ({(4, 1, 5)} if (p, k) == (3, 3) else set())
                assert found(0, 1, p, k) == want, (p, k)
                assert set(closed_form(EquationSpec(0, 1, p, k)).triples()) == want


def test_criterion_07_eq8(criterion):
    with criterion(7, "-p^x + (2^k q)^y = z^2 and the k=0 remark", 10):
        extra = {
            (3, 1): {(3, 2, 13)},
            (3, 2): {(3, 1, 1), (1, 1, 5)},
            (11, 2): {(1, 1, 9)},
        }
        seen = set()
        for p in (3, 11, 41, 29, 5):
            ks = range(0 if p % 8 in (1, 5) else 1, 7)
            for k in ks:
                want = {(0, 0, 0)} | extra.get((p, k), set())
                assert found(1, 0, p, k) == want, (p, k)
                assert set(closed_form(EquationSpec(1, 0, p, k)).triples()) == want
                seen |= {(p, k, *t) for t in want - {(0, 0, 0)}}
        assert seen == {(3, 1, 3, 2, 13), (3, 2, 3, 1, 1), (3, 2, 1, 1, 5), (11, 2, 1, 1, 9)}


def test_criterion_08_classical(criterion):
    with criterion(8, "Catalan, p^x+1=y^2, Nagell-Ljunggren, 1+(2^k q)^y=z^2", 30):
        assert catalan_search(100, 100, 12, 12) == [CatalanSolution(3, 2, 2, 3)]
        for p in primes_upto(99):
            p = int(p)
            scan = [(x, is_perfect_square(p**x + 1)) for x in range(61)]
            assert solve_px_plus_one_square(p) == [(x, y) for x, y in scan if y is not None]
        assert nagell_ljunggren_search(50, 8, 4) == [
            NLSolution(3, 11, 5, 2), NLSolution(7, 20, 4, 2), NLSolution(18, 7, 3, 3)
        ]
        for pp in enumerate_sg(499):
            for k in range(1, 13):
                brute = [(s.y, s.z) for s in brute_force(EquationSpec(0, 0, pp.p, k), SearchBounds(0, 30))]
                assert solve_safe_power_square(pp.p, k) == brute, (pp.p, k)


def test_criterion_09_mordell(criterion):
    with criterion(9, "integral points on y^2 = x^3 - 4, -100, -2500", 5):
        table = {
            -4: [(2, 2), (5, 11)],
            -100: [(5, 5), (10, 30), (34, 198)],
            -2500: [(50, 350)],
        }
        for n, want in table.items():
            assert integral_points(MordellCurve(n), 10**5) == [MordellPoint(*xy) for xy in want]


def test_criterion_10_five_power_equations(criterion):
    with criterion(10, "5^x = 4 + y^2 and 2*5^x = 1 + y^2", 1):
        a = solve_5x_eq_4_plus_square(30)
        b = solve_2_5x_eq_1_plus_square(30)
        assert a == [(1, 1), (3, 11)]
        assert b == [(0, 1), (1, 3), (2, 7)]
        scan_a = [(x, is_perfect_square(5**x - 4)) for x in range(31)]
        scan_b = [(x, is_perfect_square(2 * 5**x - 1)) for x in range(31)]
        assert a == [(x, y) for x, y in scan_a if y is not None]
        assert b == [(x, y) for x, y in scan_b if y is not None]


PRINTED_SG = {
    1: "41, 89, 113, 233, 281, 593, 641, 761, 809, 953",
    3: "3, 11, 83, 131, 179, 251, 419, 443, 491, 659, 683",
    5: "5, 29, 53, 173, 293, 509, 653",
    7: "23, 191, 239, 359, 431, 719, 743, 911",
}


def test_criterion_11_sg_lists(criterion):
    with criterion(11, "Sophie Germain primes below 1000 by class mod 8", 1):
        for k, text in PRINTED_SG.items():
            assert ", ".join(map(str, sg_residue_class(1000, 3, k))) == text


def test_criterion_12_properties(criterion):
    with criterion(12, "Euler/reciprocity, obstruction soundness, isqrt invariants", 60):
        rng = random.Random(12)
        pool = [int(p) for p in primes_upto(10**6)[1:]]
        for _ in range(10**4):
            p, q = rng.choice(pool), rng.choice(pool)
            a = rng.randrange(-(10**18), 10**18)
            assert legendre_symbol(a, p) % p == mod_pow(a, (p - 1) // 2, p)
            if p != q:
                sign = -1 if ((p - 1) // 2) * ((q - 1) // 2) % 2 else 1
                assert legendre_symbol(p, q) * legendre_symbol(q, p) == sign

        sg = [pp.p for pp in enumerate_sg(100)]
        for _ in range(200):
            a, b = rng.choice([(0, 0), (0, 1), (1, 0)])
            spec = EquationSpec(a, b, rng.choice(sg), rng.randrange(0, 6))
            m = rng.choice([3, 4, 5, 7, 8, 16, spec.p, spec.q])
            xp, yp = rng.choice([None, "even", "odd"]), rng.choice([None, "even", "odd"])
            if modular_obstruction(spec, m, xp, yp) is Verdict.INFEASIBLE:
                for s in brute_force(spec, SearchBounds(50, 50)):
                    assert not ((xp is None or (s.x % 2 == 0) == (xp == "even"))
                                and (yp is None or (s.y % 2 == 0) == (yp == "even")))

        for _ in range(10**5):
            n = rng.randrange(0, 10**30)
            r = isqrt(n)
            assert r * r <= n < (r + 1) * (r + 1)
            assert is_perfect_square(r * r) == r
            assert (is_perfect_square(n) is not None) == (r * r == n)
