"""Univariate polynomials over Z and GF(p).

Coefficient sequences are stored constant term first.  The GF(p) heavy
lifting happens in :mod:`monogenic12.kernels`; this module adds the
algorithms built on top: squarefree decomposition, Cantor-Zassenhaus
factorization, Hensel lifting with subset recombination, and the Dedekind
index criterion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt, prod

from . import kernels as K
from .arith import is_prime, primes_up_to


def _trim(c) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_descending(cls, *coeffs: int) -> IntPolynomial:
        return cls(tuple(reversed(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_power(self, k: int) -> IntPolynomial:
        """Return u(x**k)."""
        out = [0] * (k * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return IntPolynomial(tuple(out))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def reduce(self, p: int) -> ModPolynomial:
        return ModPolynomial(p, tuple(c % p for c in self.coeffs))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(zmul(self.coeffs, other.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(zsub(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return format_poly(self.coeffs)


@dataclass(frozen=True)
class ModPolynomial:
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        p = self.modulus
        object.__setattr__(self, "coeffs", _trim(c % p for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def monic(self) -> ModPolynomial:
        return ModPolynomial(self.modulus, tuple(K.pmonic(list(self.coeffs), self.modulus)))

    def lift(self) -> IntPolynomial:
        """Integer polynomial with coefficients in [0, p)."""
        return IntPolynomial(self.coeffs)

    def __mul__(self, other: ModPolynomial) -> ModPolynomial:
        _same_field(self, other)
        return ModPolynomial(self.modulus, tuple(K.pmul(list(self.coeffs), list(other.coeffs), self.modulus)))

    def __divmod__(self, other: ModPolynomial):
        _same_field(self, other)
        q, r = K.pdivmod(list(self.coeffs), list(other.coeffs), self.modulus)
        return ModPolynomial(self.modulus, tuple(q)), ModPolynomial(self.modulus, tuple(r))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __str__(self) -> str:
        return f"{format_poly(self.coeffs)} (mod {self.modulus})"


def _same_field(u: ModPolynomial, v: ModPolynomial) -> None:
    if u.modulus != v.modulus:
        raise ValueError(f"modulus mismatch: {u.modulus} vs {v.modulus}")


def format_poly(coeffs) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mag = abs(c)
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        body = str(mag) if i == 0 or mag != 1 else ""
        if body and mono:
            body += "*"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body + mono))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        out += f" {sign} {t}"
    return out


# --- integer coefficient helpers ---------------------------------------------


def zmul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def zsub(a, b) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def zdiv_monic(a, b):
    """Exact division of a by the monic b over Z; None if b does not divide a."""
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return None if any(r) else ()
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] -= c * b[j]
    if any(r[:db]):
        return None
    return _trim(q)


def _symmetric(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


# --- GF(p) algorithms -------------------------------------------------------------


def mod_gcd(u: ModPolynomial, v: ModPolynomial) -> ModPolynomial:
    """Monic gcd of two polynomials over the same prime field."""
    _same_field(u, v)
    if not u.coeffs and not v.coeffs:
        raise ValueError("gcd(0, 0) is undefined")
    return ModPolynomial(u.modulus, tuple(K.pgcd(list(u.coeffs), list(v.coeffs), u.modulus)))


def mod_xgcd(u: ModPolynomial, v: ModPolynomial):
    """Return (g, s, t) with s*u + t*v = g monic."""
    _same_field(u, v)
    p = u.modulus
    r0, r1 = list(u.coeffs), list(v.coeffs)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = K.pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, K.psub(s0, K.pmul(q, s1, p), p)
        t0, t1 = t1, K.psub(t0, K.pmul(q, t1, p), p)
    if not r0:
        raise ValueError("gcd(0, 0) is undefined")
    inv = pow(r0[-1], -1, p)
    scale = [inv]
    return tuple(
        ModPolynomial(p, tuple(K.pmul(x, scale, p))) for x in (r0, s0, t0)
    )


def _derivative_mod(f, p):
    return K.trim([i * c % p for i, c in enumerate(f)][1:])


def _pth_root(f, p):
    return [f[i] for i in range(0, len(f), p)]


def _squarefree_parts(f, p):
    """Squarefree decomposition of a monic f over GF(p): [(part, multiplicity)]."""
    if len(f) <= 1:
        return []
    out = []
    df = _derivative_mod(f, p)
    if not df:
        return [(g, e * p) for g, e in _squarefree_parts(_pth_root(f, p), p)]
    c = K.pgcd(f, df, p)
    w = K.pdivmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = K.pgcd(w, c, p)
        z = K.pdivmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = K.pdivmod(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, e * p) for g, e in _squarefree_parts(_pth_root(c, p), p))
    return out


def _equal_degree_split(g, d, p, rng):
    """Split the monic squarefree g, all of whose factors have degree d."""
    n = len(g) - 1
    if n == d:
        return [g]
    while True:
        a = K.trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, acc = a, a
            for _ in range(d - 1):
                t = K.pmulmod(t, t, g, p)
                acc = K.psub(acc, t, p)  # char 2: subtraction is addition
            b = acc
        else:
            b = K.psub(K.ppowmod(a, (p**d - 1) // 2, g, p), [1], p)
        h = K.pgcd(g, b, p) if b else g
        if 1 < len(h) < len(g):
            return _equal_degree_split(h, d, p, rng) + _equal_degree_split(
                K.pdivmod(g, h, p)[0], d, p, rng
            )


def mod_factor(u: ModPolynomial) -> list[tuple[ModPolynomial, int]]:
    """Factor into monic irreducibles with multiplicities.

    The leading coefficient is dropped; the product of the returned factors
    times ``u``'s leading coefficient reproduces ``u``.  Output is sorted by
    (degree, coefficients).  Random splitting is seeded from the input.
    """
    if not u.coeffs:
        raise ValueError("cannot factor the zero polynomial")
    return [(ModPolynomial(u.modulus, g), e) for g, e in _factor_cached(u.modulus, u.coeffs)]


@lru_cache(maxsize=100_000)
def _factor_cached(p: int, coeffs: tuple[int, ...]):
    f = K.pmonic(list(coeffs), p)
    rng = random.Random(f"{p}:{coeffs}")
    out = []
    for part, mult in _squarefree_parts(f, p):
        for d, g in K.ddf(part, p):
            out.extend((tuple(h), mult) for h in _equal_degree_split(g, d, p, rng))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return tuple(out)


def factor_degrees(u: ModPolynomial) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a squarefree u, descending."""
    f = K.pmonic(list(u.coeffs), u.modulus)
    degs = []
    for d, g in K.ddf(f, u.modulus):
        degs.extend([d] * ((len(g) - 1) // d))
    return tuple(sorted(degs, reverse=True))


def is_squarefree_mod(u: ModPolynomial) -> bool:
    f = list(u.coeffs)
    df = _derivative_mod(f, u.modulus)
    return bool(df) and len(K.pgcd(f, df, u.modulus)) == 1


# --- discriminants ----------------------------------------------------------------


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(u: IntPolynomial, v: IntPolynomial) -> int:
    """Resultant via the Sylvester determinant (fraction-free elimination)."""
    m, n = u.degree, v.degree
    if m < 0 or n < 0:
        return 0
    size = m + n
    if size == 0:
        return 1
    rows = []
    ud, vd = u.coeffs[::-1], v.coeffs[::-1]
    for i in range(n):
        rows.append([0] * i + list(ud) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(vd) + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant(u: IntPolynomial) -> int:
    """disc(u) = (-1)^(n(n-1)/2) Res(u, u') / lc(u)."""
    n = u.degree
    res = resultant(u, u.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, r = divmod(sign * res, u.leading)
    assert r == 0
    return q


# --- irreducibility over Z ----------------------------------------------------------


def _require_monic(u: IntPolynomial) -> None:
    if u.degree < 1 or not u.is_monic():
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {u}")


def _rational_gcd(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and any(b):
        while b and b[-1] == 0:
            b.pop()
        r = a[:]
        while len(r) >= len(b) and any(r):
            c = r[-1] / b[-1]
            shift = len(r) - len(b)
            for j, y in enumerate(b):
                r[shift + j] -= c * y
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    return a


def _hensel_pair(f, g, h, s, t, p, k):
    """Lift f = g*h mod p to mod p**k (f, g monic; s*g + t*h = 1 mod p)."""
    m = p
    for _ in range(k - 1):
        e = K.trim([c // m % p for c in zsub(f, zmul(g, h))])
        gbar = [c % p for c in g]
        hbar = K.trim([c % p for c in h])
        q, sig = K.pdivmod(K.pmul(e, t, p), gbar, p)
        tau = K.psub(K.pmul(e, s, p), K.pmul(q, [(-c) % p for c in hbar], p), p)
        g = zsub(g, [-m * c for c in sig])
        h = zsub(h, [-m * c for c in tau])
        m *= p
        g = tuple(_symmetric(c, m) for c in g)
        h = tuple(_symmetric(c, m) for c in h)
    return g, h


def hensel_lift(f: IntPolynomial, factors: list[ModPolynomial], k: int) -> list[IntPolynomial]:
    """Lift a factorization of the monic f into pairwise coprime monic factors mod p to mod p**k."""
    p = factors[0].modulus
    out: list[IntPolynomial] = []

    def rec(target, facs):
        if len(facs) == 1:
            out.append(IntPolynomial(target))
            return
        half = len(facs) // 2
        left, right = facs[:half], facs[half:]
        g0 = prod(left[1:], start=left[0])
        h0 = prod(right[1:], start=right[0])
        _, s, t = mod_xgcd(g0, h0)
        g, h = _hensel_pair(target, g0.coeffs, h0.coeffs, list(s.coeffs), list(t.coeffs), p, k)
        rec(g, left)
        rec(h, right)

    rec(f.coeffs, factors)
    return out


def _subset_sums(degs) -> set[int]:
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def _coefficient_bound(u: IntPolynomial) -> int:
    """Bound on |coefficient| of any monic factor of u (Mignotte)."""
    n = u.degree
    norm2 = isqrt(sum(c * c for c in u.coeffs)) + 1
    return comb(n, n // 2) * norm2


@lru_cache(maxsize=100_000)
def _find_factor_cached(coeffs: tuple[int, ...]):
    u = IntPolynomial(coeffs)
    n = u.degree
    if n == 1:
        return None
    if coeffs[0] == 0:
        return (0, 1)
    # pick good primes: u squarefree mod p
    good = []
    for p in primes_up_to(400):
        ubar = u.reduce(p)
        if is_squarefree_mod(ubar):
            good.append((p, factor_degrees(ubar)))
            if len(good) == 8:
                break
    if not good:
        g = _rational_gcd(coeffs, u.derivative().coeffs)
        if len(g) > 1:
            # repeated factor: u has a proper factor over Q
            # monic factors of monic integer polynomials are integral
            return tuple(int(c / g[-1]) for c in g)
        raise RuntimeError(f"no squarefree reduction found for {u}")
    possible = set(range(1, n))
    for _, degs in good:
        possible &= _subset_sums(degs)
        if not possible:
            return None
    # recombine from the prime with fewest modular factors
    p, degs = min(good, key=lambda t: (len(t[1]), -t[0]))
    if len(degs) == 1:
        return None
    factors = [g for g, _ in mod_factor(u.reduce(p))]
    bound = 2 * _coefficient_bound(u) + 1
    k, pk = 1, p
    while pk <= bound:
        k += 1
        pk *= p
    lifted = [g.coeffs for g in hensel_lift(u, factors, k)]
    r = len(lifted)
    for size in range(1, r // 2 + 1):
        for subset in combinations(range(r), size):
            d = sum(len(lifted[i]) - 1 for i in subset)
            if d not in possible:
                continue
            cand = (1,)
            for i in subset:
                cand = tuple(_symmetric(c, pk) for c in zmul(cand, lifted[i]))
            if cand[0] == 0 or coeffs[0] % cand[0]:
                # constant terms must divide; coeffs[0] != 0 here
                continue
            if zdiv_monic(coeffs, cand) is not None:
                return cand
    return None


def find_factor(u: IntPolynomial):
    """A proper monic factor of the monic u over Q, or None if u is irreducible.

    For squarefree u the factor has integer coefficients; a repeated factor
    is reported as the monic rational gcd(u, u').
    """
    _require_monic(u)
    return _find_factor_cached(u.coeffs)


def zz_irreducible(u: IntPolynomial) -> bool:
    """Decide irreducibility over Q of a monic integer polynomial.

    Factor-degree patterns modulo up to eight good primes usually certify
    irreducibility outright; otherwise the factorization modulo the prime
    with the fewest factors is Hensel-lifted past the Mignotte bound and
    every admissible subset product is trial-divided.
    """
    return find_factor(u) is None


# --- Dedekind criterion -----------------------------------------------------------------


def dedekind_divides_index(u: IntPolynomial, p: int) -> bool:
    """True iff p divides [Z_K : Z[theta]] for a root theta of u."""
    _require_monic(u)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not zz_irreducible(u):
        raise ValueError(f"{u} is reducible over Q")
    return _dedekind(u.coeffs, p)


@lru_cache(maxsize=100_000)
def _dedekind(coeffs: tuple[int, ...], p: int) -> bool:
    fac = _factor_cached(p, tuple(c % p for c in coeffs))
    g = [1]
    h = [1]
    for gi, e in fac:
        g = K.pmul(g, list(gi), p)
        for _ in range(e - 1):
            h = K.pmul(h, list(gi), p)
    t = zsub(zmul(g, h), coeffs)
    assert all(c % p == 0 for c in t)
    tbar = K.trim([(c // p) % p for c in t])
    d = K.pgcd(K.pgcd(tbar, g, p), h, p)
    return len(d) > 1
