"""End-to-end acceptance checks.

Run under pytest, or directly with ``python3 tests/test_acceptance.py`` to get
the same PASS/FAIL lines without pytest.
"""

import random
import sys
from functools import lru_cache

import pytest

from monogenic12.arith import is_squarefree
from monogenic12.characterize import F_LISTS, G4_4T1_LIST, G6_6T1_LIST
from monogenic12.galois import _g4_label, _g6_label, classify_f
from monogenic12.jks import is_monogenic, jks_context, jks_prime_ok
from monogenic12.scan import COMPOSITIONS, NEVER_MONOGENIC, analyze_box, box_cells, oracle_check
from monogenic12.trinomial import QuadraticLikeTrinomial as T
from monogenic12.trinomial import discriminant
from monogenic12.zpoly import ModPolynomial, discriminant as resultant_discriminant, mod_factor, mod_gcd

BOX = 40
WIDE_BOX = 50
RESULTS: dict[int, tuple[str, bool, str]] = {}


def record(n: int, name: str, failures: list, ok_detail: str) -> bool:
    passed = not failures
    detail = ok_detail if passed else f"{len(failures)} failure(s), first: {failures[:3]}"
    RESULTS[n] = (name, passed, detail)
    print(format_result(n))
    return passed


def format_result(n: int) -> str:
    name, passed, detail = RESULTS[n]
    return f"[{'PASS' if passed else 'FAIL'}] criterion {n}: {name} -- {detail}"


@lru_cache(maxsize=None)
def box_cells_40():
    r = range(-BOX, BOX + 1)
    return analyze_box(box_cells(r, r), with_kkr=True)


def criterion_1():
    r = range(-BOX, BOX + 1)
    total, bad = oracle_check(box_cells(r, r))
    return record(1, "index test agrees with Dedekind oracle, |a|,|b| <= 40", bad, f"{total} prime checks, 0 mismatches")


def criterion_2():
    fails, n = [], 0
    for c in box_cells_40():
        if not c.f.irreducible:
            continue
        n += 1
        p = c.prediction
        if p.predicted_monogenic != c.f.monogenic:
            fails.append((c.a, c.b, "verdict"))
        elif c.f.monogenic and p.predicted_label != classify_f(c.a, c.b):
            fails.append((c.a, c.b, "label"))
    return record(2, "closed-form prediction equals index test, |a|,|b| <= 40", fails, f"{n} irreducible f agree")


def criterion_3():
    expected = {}
    for name, pairs in F_LISTS.items():
        for ab in pairs:
            expected[ab] = name
    fails = []
    for (a, b), name in sorted(expected.items()):
        rep = is_monogenic(T(6, a, b))
        if not (rep.irreducible and rep.monogenic and str(classify_f(a, b)) == name):
            fails.append((a, b, name))
    return record(3, "golden positives monogenic with stated group", fails, f"{len(expected)} pairs")


def criterion_4():
    fails = []
    # least obstructing prime reported: 3 for a = 11; for a = -11 the prime 2 divides the index as well
    least = {11: (3, 3), -11: (2, 4)}
    for a in (11, -11):
        rep = is_monogenic(T(6, a, 33))
        at3 = {v.prime: v for v in rep.verdicts}.get(3)
        if not rep.irreducible or rep.monogenic or at3 is None:
            fails.append((a, 33))
        elif not (at3.divides_index and at3.condition_used == 3):
            fails.append((a, 33, "q=3"))
        elif (rep.obstruction_prime, rep.obstruction_condition) != least[a]:
            fails.append((a, 33, "least"))
    v = jks_prime_ok(T(6, 9, 1), 3)
    ctx = jks_context(T(6, 9, 1), 3)
    if not (v.divides_index and v.condition_used == 2 and ctx.b1 == 0):
        fails.append((9, 1))
    return record(4, "golden negatives (+-11,33) and (9,1)", fails, "obstructions at q=3 as expected")


def criterion_5():
    fails = [
        (c.a, c.b, str(c.Gal_f)) for c in box_cells_40()
        if c.f.irreducible and c.f.monogenic and str(c.Gal_f) in NEVER_MONOGENIC
    ]
    return record(5, "no monogenic f in the nine excluded groups, |a|,|b| <= 40", fails, "none found")


def criterion_6():
    quartics, sextics = set(), set()
    for a in range(-WIDE_BOX, WIDE_BOX + 1):
        for b in range(-WIDE_BOX, WIDE_BOX + 1):
            if a * b == 0:
                continue
            g4, g6 = T(2, a, b), T(3, a, b)
            if g4.is_irreducible() and _g4_label(a, b).index == 1 and is_monogenic(g4).monogenic:
                quartics.add((a, b))
            if g6.is_irreducible() and _g6_label(a, b).index == 1 and is_monogenic(g6).monogenic:
                sextics.add((a, b))
    fails = []
    if quartics != set(G4_4T1_LIST):
        fails.append(("4T1", sorted(quartics)))
    if sextics != set(G6_6T1_LIST):
        fails.append(("6T1", sorted(sextics)))
    return record(6, "finite lists exact, |a|,|b| <= 50", fails, f"4T1 {sorted(quartics)}, 6T1 {sorted(sextics)}")


def criterion_7():
    rng = random.Random(12)
    fails = []
    for m in (1, 2, 3, 6):
        for _ in range(100):
            a = rng.choice([x for x in range(-10**4, 10**4) if x])
            b = rng.choice([x for x in range(-10**4, 10**4) if x])
            t = T(m, a, b)
            if discriminant(t) != resultant_discriminant(t.polynomial()):
                fails.append((m, a, b))
    for _ in range(100):
        a, b = rng.randrange(1, 10**6) * rng.choice((-1, 1)), rng.randrange(1, 10**6) * rng.choice((-1, 1))
        if discriminant(T(6, a, b)) != 2**12 * 3**12 * (a * a - 4 * b) ** 6 * b**5:
            fails.append((6, a, b, "closed form"))
    import sympy

    A, B, x = sympy.symbols("a b x")
    sym = sympy.discriminant(x**12 + A * x**6 + B, x)
    if sympy.expand(sym - 2**12 * 3**12 * (A**2 - 4 * B) ** 6 * B**5) != 0:
        fails.append("symbolic")
    return record(7, "discriminant identities", fails, "400 resultant checks, 100 closed-form checks, symbolic identity")


def criterion_8():
    fails, n = [], 0
    for c in box_cells_40():
        for mk, (kkr, direct) in c.kkr.items():
            n += 1
            if kkr != direct:
                fails.append((c.a, c.b, mk))
        if c.f.irreducible and c.f.monogenic:
            w = (c.a * c.a - 4 * c.b) // (4 if c.a % 2 == 0 else 1)
            if not all(c.reports[d].monogenic for d in (2, 4, 6)) or not is_squarefree(c.b) or not is_squarefree(w):
                fails.append((c.a, c.b, "descent"))
    assert {mk for c in box_cells_40() for mk in c.kkr} == set(COMPOSITIONS)
    return record(8, "composition criterion and descent, |a|,|b| <= 40", fails, f"{n} compositions agree")


# rows: a mod 9 -> (H1 factors, (H2 leading coefficient, H2 factors)); polynomials descending mod 3
TABLE_H = {
    1: ([((1, 0, 1, 0, 2), 1)], (1, [((1, 0), 2), ((1, 1), 1), ((1, 2), 1)])),
    2: ([((1, 0, 2, 0, 2), 1)], (1, [((1, 0), 2), ((1, 1), 2), ((1, 2), 2)])),
    7: ([((1, 0, 1, 0, 2), 1)], (2, [((1, 0), 2), ((1, 0, 1), 2)])),
    8: ([((1, 0, 2, 0, 2), 1)], (1, [((1, 0), 2), ((1, 0, 1), 1)])),
}


def _desc_factors(fac):
    return sorted((tuple(reversed(g.coeffs)), e) for g, e in fac)


def criterion_9():
    fails, n = [], 0
    for a in range(-BOX, BOX + 1):
        if a % 9 not in TABLE_H:
            continue
        t = T(6, a, -1)
        ctx = jks_context(t, 3)
        h1, h2 = ctx.H1.reduce(3), ctx.H2.reduce(3)
        want_h1, (want_lc, want_h2) = TABLE_H[a % 9]
        got = (ctx.branch, ctx.s, ctx.k, _desc_factors(mod_factor(h1)), h2.coeffs[-1], _desc_factors(mod_factor(h2)))
        if got != (4, 2, 1, sorted(want_h1), want_lc, sorted(want_h2)):
            fails.append((a, got))
        if mod_gcd(h1, h2) != ModPolynomial(3, (1,)):
            fails.append((a, "not coprime"))
        if t.is_irreducible() and jks_prime_ok(t, 3).divides_index:
            fails.append((a, "3 divides index"))
        n += 1
    return record(9, "H1/H2 factorization table mod 3 for b = -1", fails, f"{n} values of a reproduce all four rows")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(criterion):
    assert criterion()


if __name__ == "__main__":
    ok = [c() for c in CRITERIA]
    print(f"{sum(ok)}/{len(ok)} criteria passed")
    sys.exit(0 if all(ok) else 1)
