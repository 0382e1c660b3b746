"""The trinomials x^(2m) + A x^m + B and the quantities derived from (a, b)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .arith import divisors, is_square
from .zpoly import IntPolynomial, zz_irreducible


@dataclass(frozen=True)
class QuadraticLikeTrinomial:
    """x^(2m) + A x^m + B with A*B != 0."""

    m: int
    A: int
    B: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"half-degree must be positive, got m={self.m}")
        if self.A == 0 or self.B == 0:
            raise ValueError(f"trinomial needs A*B != 0, got A={self.A}, B={self.B}")

    @classmethod
    def of_degree(cls, n: int, a: int, b: int) -> QuadraticLikeTrinomial:
        """g_n(x) = x^n + a x^(n/2) + b for even n."""
        if n % 2:
            raise ValueError(f"degree must be even, got {n}")
        return cls(n // 2, a, b)

    @property
    def degree(self) -> int:
        return 2 * self.m

    def polynomial(self) -> IntPolynomial:
        c = [0] * (2 * self.m + 1)
        c[0], c[self.m], c[2 * self.m] = self.B, self.A, 1
        return IntPolynomial(tuple(c))

    def is_irreducible(self) -> bool:
        return zz_irreducible(self.polynomial())

    def compose(self, k: int) -> QuadraticLikeTrinomial:
        """The trinomial obtained by substituting x^k for x."""
        return QuadraticLikeTrinomial(self.m * k, self.A, self.B)

    def __str__(self) -> str:
        return str(self.polynomial())


def tower(a: int, b: int) -> dict[int, QuadraticLikeTrinomial]:
    """g_2, g_4, g_6 and f = g_12 keyed by degree."""
    return {n: QuadraticLikeTrinomial.of_degree(n, a, b) for n in (2, 4, 6, 12)}


def discriminant(T: QuadraticLikeTrinomial) -> int:
    """Swan's closed form B^(m-1) m^(2m) (A^2 - 4B)^m."""
    m, A, B = T.m, T.A, T.B
    return B ** (m - 1) * m ** (2 * m) * (A * A - 4 * B) ** m


@dataclass(frozen=True)
class DerivedQuantities:
    delta: int
    W: int
    alpha: int | None
    beta: int | None
    resolvent: IntPolynomial


def derive(a: int, b: int) -> DerivedQuantities:
    if a * b == 0:
        raise ValueError("need a*b != 0")
    delta = a * a - 4 * b
    W = delta // gcd(2, a) ** 2
    if is_square(b):
        r = isqrt(b)
        alpha, beta = a + 2 * r, a - 2 * r
    else:
        alpha = beta = None
    resolvent = IntPolynomial((a * b, -3 * b, 0, 1))
    return DerivedQuantities(delta, W, alpha, beta, resolvent)


def resolvent_root(a: int, b: int) -> int | None:
    """An integer root of x^3 - 3b x + ab, or None.

    A monic integer cubic is reducible over Q exactly when it has an integer
    root, and any such root divides the (nonzero) constant term ab.
    """
    c = a * b
    for d in divisors(c):
        for x in (d, -d):
            if x * x * x - 3 * b * x + c == 0:
                return x
    return None


def resolvent_reducible(a: int, b: int) -> bool:
    if a * b == 0:
        raise ValueError("need a*b != 0")
    return resolvent_root(a, b) is not None
