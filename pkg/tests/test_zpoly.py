import random

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given
from hypothesis import strategies as st

from monogenic12.zpoly import (
    IntPolynomial,
    ModPolynomial,
    dedekind_divides_index,
    discriminant,
    factor_degrees,
    find_factor,
    hensel_lift,
    mod_factor,
    mod_gcd,
    mod_xgcd,
    resultant,
    zmul,
    zz_irreducible,
)

X = sympy.symbols("x")


def to_sympy(u: IntPolynomial):
    return sympy.Poly(list(reversed(u.coeffs)), X)


def P(*desc):
    return IntPolynomial.from_descending(*desc)


def M(p, *desc):
    return ModPolynomial(p, tuple(reversed(desc)))


def test_mod_gcd_basic():
    # (x+1)(x+2) and (x+1)(x+3) over GF(5)
    u = M(5, 1, 3, 2)
    v = M(5, 1, 4, 3)
    assert mod_gcd(u, v).coeffs == (1, 1)
    assert mod_gcd(M(7, 1, 0, 1), M(7, 1, 1)).degree == 0
    with pytest.raises(ValueError):
        mod_gcd(M(5, 0), M(5, 0))
    with pytest.raises(ValueError):
        mod_gcd(M(5, 1, 1), M(7, 1, 1))


@given(st.sampled_from([2, 3, 5, 7, 31]), st.lists(st.integers(0, 30), min_size=1, max_size=9),
       st.lists(st.integers(0, 30), min_size=1, max_size=9))
def test_xgcd_bezout(p, a, b):
    u, v = ModPolynomial(p, tuple(a)), ModPolynomial(p, tuple(b))
    if not u.coeffs and not v.coeffs:
        return
    g, s, t = mod_xgcd(u, v)
    assert (s * u).coeffs == tuple(
        ModPolynomial(p, tuple(x - y for x, y in zip(
            g.coeffs + (0,) * 40, (t * v).coeffs + (0,) * 40))).coeffs
    )
    assert g == mod_gcd(u, v)


def test_mod_factor_examples():
    assert mod_factor(M(2, 1, 0, 0, 1, 0, 0, 1)) == [(M(2, 1, 0, 0, 1, 0, 0, 1), 1)]
    assert mod_factor(M(3, 1, 0, 2, 0, 2)) == [(M(3, 1, 0, 2, 0, 2), 1)]
    assert mod_factor(M(5, 1, 0, 0)) == [(M(5, 1, 0), 2)]
    with pytest.raises(ValueError):
        mod_factor(M(5, 0))


def _product(factors, p):
    acc = ModPolynomial(p, (1,))
    for g, e in factors:
        for _ in range(e):
            acc = acc * g
    return acc


@given(st.sampled_from([2, 3, 5, 7, 11, 101]), st.lists(st.integers(-50, 50), min_size=2, max_size=13))
def test_mod_factor_matches_sympy(p, coeffs):
    u = ModPolynomial(p, tuple(coeffs))
    if u.degree < 1:
        return
    fac = mod_factor(u)
    lead = u.coeffs[-1]
    assert ModPolynomial(p, tuple(lead * c for c in _product(fac, p).coeffs)) == u
    ours = sorted((g.degree, e) for g, e in fac)
    _, theirs = sympy.Poly(list(reversed(u.coeffs)), X, modulus=p).factor_list()
    assert ours == sorted((g.degree(), e) for g, e in theirs)


def test_factor_degrees_squarefree():
    # x^6 + x^3 + 1 is irreducible mod 2; x^4 - 1 splits mod 5
    assert factor_degrees(M(2, 1, 0, 0, 1, 0, 0, 1)) == (6,)
    assert factor_degrees(M(5, 1, 0, 0, 0, 4)) == (1, 1, 1, 1)


@given(st.integers(1, 6), st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_discriminant_matches_sympy(n, lower):
    u = IntPolynomial(tuple(lower[:n]) + (0,) * (n - len(lower[:n])) + (1,))
    assert discriminant(u) == int(sympy.discriminant(to_sympy(u).as_expr(), X))


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5), st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_resultant_matches_sympy(a, b):
    u, v = IntPolynomial(tuple(a)), IntPolynomial(tuple(b))
    if u.degree < 1 or v.degree < 0:
        return
    # sympy.resultant uses a different sign convention; compare with the Sylvester determinant itself
    syl = sylvester(to_sympy(u).as_expr(), to_sympy(v).as_expr(), X)
    assert resultant(u, v) == int(syl.det())


def test_irreducibility_examples():
    assert zz_irreducible(P(1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1))
    f = P(1, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, -1)
    assert not zz_irreducible(f)
    g = find_factor(f)
    assert g is not None and 0 < len(g) - 1 < 12
    assert zz_irreducible(P(1, 0, -2))
    assert not zz_irreducible(P(1, 0, 0, 0, 4))  # x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
    with pytest.raises(ValueError):
        zz_irreducible(P(2, 0, 1))


def test_irreducibility_repeated_factor():
    sq = IntPolynomial(zmul((1, 1, 1), (1, 1, 1)))
    assert not zz_irreducible(sq)


@st.composite
def monic_int_poly(draw):
    n = draw(st.integers(1, 9))
    low = draw(st.lists(st.integers(-12, 12), min_size=n, max_size=n))
    return IntPolynomial(tuple(low) + (1,))


@given(monic_int_poly())
def test_irreducibility_matches_sympy(u):
    assert zz_irreducible(u) == to_sympy(u).is_irreducible


@given(monic_int_poly(), monic_int_poly())
def test_products_are_reducible(u, v):
    assert not zz_irreducible(IntPolynomial(zmul(u.coeffs, v.coeffs)))


def test_trinomial_irreducibility_matches_sympy():
    rng = random.Random(7)
    for _ in range(150):
        m = rng.choice([1, 2, 3, 6])
        a, b = rng.choice([x for x in range(-30, 31) if x]), rng.choice([x for x in range(-30, 31) if x])
        c = [0] * (2 * m + 1)
        c[0], c[m], c[2 * m] = b, a, 1
        u = IntPolynomial(tuple(c))
        assert zz_irreducible(u) == to_sympy(u).is_irreducible


def test_hensel_lift_reproduces_factorization():
    f = P(1, 0, 0, 0, 4)  # x^4 + 4 splits into linear factors mod 5
    facs = [g for g, _ in mod_factor(f.reduce(5))]
    lifted = hensel_lift(f, facs, 6)
    prod = (1,)
    for g in lifted:
        prod = zmul(prod, g.coeffs)
    assert all((x - y) % 5**6 == 0 for x, y in zip(prod, f.coeffs))


def test_dedekind_examples():
    phi36 = P(1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1)
    assert not dedekind_divides_index(phi36, 2)
    assert dedekind_divides_index(P(1, 0, 0, 0, 0, 0, 9, 0, 0, 0, 0, 0, 1), 3)
    assert not dedekind_divides_index(P(1, 0, -2), 2)
    assert dedekind_divides_index(P(1, 0, -5), 2)
    with pytest.raises(ValueError):
        dedekind_divides_index(P(1, 0, -5), 4)
    with pytest.raises(ValueError):
        dedekind_divides_index(P(1, 0, -4), 2)


@pytest.mark.parametrize("coeffs", [
    (1, 0, 0, 1, 0, 0, 11), (1, 0, 0, 0, 6, 0, 0, 0, 2), (1, 0, 0, 3, 0, 0, 3), (1, 0, 7, 0, -5),
    (1, 0, 0, -9, 0, 0, 17), (1, 0, 0, 0, 0, 0, 10, 0, 0, 0, 0, 0, -7),
])
def test_dedekind_matches_integral_basis(coeffs, index_oracle):
    u = P(*coeffs)
    idx = index_oracle(coeffs)
    for p in sympy.primefactors(discriminant(u)):
        assert dedekind_divides_index(u, p) == (idx % p == 0)
