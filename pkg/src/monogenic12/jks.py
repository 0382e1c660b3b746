"""Per-prime index divisibility for x^(2m) + A x^m + B and the monogenicity decision.

For a prime q dividing the discriminant, exactly one of five conditions is
selected by the divisibility of A, B and m by q; q divides the index iff the
selected condition fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import is_prime, is_squarefree, prime_factors, valuation
from .trinomial import QuadraticLikeTrinomial
from .zpoly import IntPolynomial, mod_gcd, zmul


@dataclass(frozen=True)
class JksContext:
    q: int
    branch: int
    a1: int | None = None
    a2: int | None = None
    b1: int | None = None
    b2: int | None = None
    j: int = 0
    l: int = 0
    s: int = 0
    k: int = 0
    H1: IntPolynomial | None = None
    H2: IntPolynomial | None = None


@dataclass(frozen=True)
class IndexVerdict:
    prime: int
    divides_index: bool
    condition_used: int


@dataclass(frozen=True)
class MonogenicityReport:
    trinomial: QuadraticLikeTrinomial
    irreducible: bool
    monogenic: bool
    obstruction_prime: int | None = None
    obstruction_condition: int | None = None
    verdicts: tuple[IndexVerdict, ...] = field(default=(), repr=False)


def discriminant_primes(T: QuadraticLikeTrinomial) -> tuple[int, ...]:
    """Prime divisors of B^(m-1) m^(2m) (A^2 - 4B)^m, ascending."""
    ps = set(prime_factors(T.A * T.A - 4 * T.B))
    if T.m > 1:
        ps.update(prime_factors(T.B))
        ps.update(prime_factors(T.m))
    return tuple(sorted(ps))


def _select_branch(T: QuadraticLikeTrinomial, q: int) -> int:
    qa, qb, qm = T.A % q == 0, T.B % q == 0, T.m % q == 0
    if qa and qb:
        return 1
    if qa:
        return 2
    if qb:
        return 3
    if qm:
        return 4
    return 5


def jks_context(T: QuadraticLikeTrinomial, q: int) -> JksContext:
    """Assemble the quantities the selected condition needs."""
    m, A, B = T.m, T.A, T.B
    branch = _select_branch(T, q)
    if branch == 2:
        j = valuation(2 * m, q)
        b1, r = divmod(B + (-B) ** (q**j), q)
        assert r == 0 and j >= 1
        return JksContext(q, 2, a2=A // q, b1=b1, j=j)
    if branch == 3:
        l = valuation(m, q)
        a1, r = divmod(A + (-A) ** (q**l), q)
        assert r == 0
        return JksContext(q, 3, a1=a1, b2=B // q, l=l)
    if branch == 4:
        k = valuation(m, q)
        s = m // q**k
        H1 = QuadraticLikeTrinomial(s, A, B).polynomial()
        # H2 = (A x^(s q^k) + B + (-A x^s - B)^(q^k)) / q
        inner = [0] * (s + 1)
        inner[0], inner[s] = -B, -A
        power: tuple[int, ...] = (1,)
        for _ in range(q**k):
            power = zmul(power, inner)
        num = list(power) + [0] * max(0, m + 1 - len(power))
        num[0] += B
        num[m] += A
        assert all(c % q == 0 for c in num)
        H2 = IntPolynomial(tuple(c // q for c in num))
        return JksContext(q, 4, s=s, k=k, H1=H1, H2=H2)
    return JksContext(q, branch)


def _condition_holds(T: QuadraticLikeTrinomial, ctx: JksContext) -> bool:
    q, B, A, m = ctx.q, T.B, T.A, T.m
    if ctx.branch == 1:
        return B % (q * q) != 0
    if ctx.branch == 2:
        a2, b1 = ctx.a2, ctx.b1
        return (a2 % q == 0 and b1 % q != 0) or (a2 * (a2 * a2 * B + b1 * b1)) % q != 0
    if ctx.branch == 3:
        a1, b2 = ctx.a1, ctx.b2
        return (a1 % q == 0 and b2 % q != 0) or (a1 * b2 ** (m - 1) * (A * a1 - b2)) % q != 0
    if ctx.branch == 4:
        h2 = ctx.H2.reduce(q)
        if not h2.coeffs:
            # H2 = 0 mod q: gcd(H1, 0) = H1, never coprime
            return False
        return mod_gcd(ctx.H1.reduce(q), h2).degree == 0
    return (A * A - 4 * B) % (q * q) != 0


def jks_prime_ok(T: QuadraticLikeTrinomial, q: int) -> IndexVerdict:
    """Decide whether the prime q divides the index of the irreducible T."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q not in discriminant_primes(T):
        raise ValueError(f"{q} does not divide the discriminant of {T}")
    if not T.is_irreducible():
        raise ValueError(f"{T} is reducible over Q")
    ctx = jks_context(T, q)
    return IndexVerdict(q, not _condition_holds(T, ctx), ctx.branch)


def _verdicts(T: QuadraticLikeTrinomial, primes) -> tuple[IndexVerdict, ...]:
    out = []
    for q in primes:
        ctx = jks_context(T, q)
        out.append(IndexVerdict(q, not _condition_holds(T, ctx), ctx.branch))
    return tuple(out)


def is_monogenic(T: QuadraticLikeTrinomial) -> MonogenicityReport:
    if not T.is_irreducible():
        return MonogenicityReport(T, irreducible=False, monogenic=False)
    verdicts = _verdicts(T, discriminant_primes(T))
    bad = [v for v in verdicts if v.divides_index]
    if bad:
        return MonogenicityReport(T, True, False, bad[0].prime, bad[0].condition_used, verdicts)
    return MonogenicityReport(T, True, True, verdicts=verdicts)


def kkr_monogenic(g: QuadraticLikeTrinomial, k: int) -> bool:
    """Monogenicity of g(x^k) via the power-composition criterion.

    g(x^k) is monogenic iff g(0) is squarefree, no prime dividing k divides
    the index of g(x^k), and g itself is monogenic.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    F = g.compose(k)
    if not F.is_irreducible():
        raise ValueError(f"{F} is reducible over Q")
    if not is_squarefree(g.B):
        return False
    if any(v.divides_index for v in _verdicts(F, prime_factors(k))):
        return False
    return is_monogenic(g).monogenic
