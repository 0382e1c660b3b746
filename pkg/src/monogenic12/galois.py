"""Galois groups of g4, g6 and f = x^12 + a x^6 + b.

G4 comes from the square classes of b and b*delta. G6 is decided exactly from
the quadratic subfield Q(sqrt(-3 delta)) and the degree of the cubic Kummer
layer; a Frobenius cycle-type sample over small primes is kept alongside as an
independent check. Gal(f) is then read off from the pair (G4, G6).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, total_ordering

from . import groups
from .arith import is_cube, is_square, primes_up_to
from .trinomial import QuadraticLikeTrinomial, derive, resolvent_reducible
from .zpoly import IntPolynomial, discriminant, factor_degrees

ALLOWED = {
    2: (1,),
    4: (1, 2, 3),
    6: (1, 2, 3, 5, 9),
    12: (2, 3, 10, 11, 12, 13, 14, 15, 16, 18, 28, 37, 38, 39, 42, 81),
}


@total_ordering
@dataclass(frozen=True)
class GaloisLabel:
    degree: int
    index: int

    def __post_init__(self):
        if self.index not in ALLOWED.get(self.degree, ()):
            raise ValueError(f"{self.degree}T{self.index} is not a group that occurs here")

    @classmethod
    def parse(cls, text: str) -> GaloisLabel:
        d, sep, i = text.strip().upper().partition("T")
        if not sep:
            raise ValueError(f"cannot parse group label {text!r}")
        return cls(int(d), int(i))

    @property
    def order(self) -> int:
        if self.degree == 2:
            return 2
        return groups.order(self.degree, self.index)

    def cycle_types(self) -> frozenset[tuple[int, ...]]:
        return groups.cycle_types(self.degree, self.index)

    def __lt__(self, other: GaloisLabel) -> bool:
        return (self.degree, self.index) < (other.degree, other.index)

    def __str__(self) -> str:
        return f"{self.degree}T{self.index}"


def L(text: str) -> GaloisLabel:
    return GaloisLabel.parse(text)


@dataclass(frozen=True)
class PqrsStatements:
    P: bool  # -3 b delta is a square
    Q: bool  # -3 b is a square
    R: bool  # x^3 - 3b x + ab is reducible
    S: bool  # b is a cube


@dataclass(frozen=True)
class CycleTypeEvidence:
    """Factorization patterns of a polynomial modulo unramified primes."""

    degree: int
    sampled_primes: int
    observed: Counter = field(compare=False)
    certificate: tuple[int, tuple[int, ...]] | None = None

    def compatible(self) -> list[GaloisLabel]:
        """Candidate labels whose cycle types cover every observed pattern."""
        seen = set(self.observed)
        return [
            GaloisLabel(d, i)
            for d, i in groups.candidates(self.degree)
            if seen <= groups.cycle_types(d, i)
        ]

    def consistent_with(self, label: GaloisLabel) -> bool:
        return label.degree == self.degree and set(self.observed) <= label.cycle_types()

    def distance(self, label: GaloisLabel) -> float:
        """Total variation between observed pattern frequencies and the group's cycle-type frequencies."""
        counts = groups.cycle_type_counts(label.degree, label.index)
        n, order = max(self.sampled_primes, 1), label.order
        keys = set(counts) | set(self.observed)
        return sum(abs(self.observed[k] / n - counts[k] / order) for k in keys) / 2

    def best_match(self) -> GaloisLabel | None:
        """The compatible candidate whose frequencies are closest (Chebotarev density)."""
        cands = self.compatible()
        if not cands or not self.sampled_primes:
            return None
        return min(cands, key=lambda g: (self.distance(g), g.order))


def _certificate(degree: int, first_seen: dict) -> tuple[int, tuple[int, ...]] | None:
    # the earliest-witnessed pattern that rules out the most candidates
    cands = groups.candidates(degree)
    best = None
    for part, p in sorted(first_seen.items(), key=lambda t: t[1]):
        excluded = sum(part not in groups.cycle_types(*c) for c in cands)
        if excluded and (best is None or excluded > best[0]):
            best = (excluded, p, part)
    return None if best is None else (best[1], best[2])


def frobenius_sample(u: IntPolynomial, prime_bound: int) -> CycleTypeEvidence:
    """Factor-degree patterns of u modulo every prime p <= prime_bound with p not dividing disc(u)."""
    return _frobenius_cached(u.coeffs, prime_bound)


@lru_cache(maxsize=4096)
def _frobenius_cached(coeffs: tuple[int, ...], prime_bound: int) -> CycleTypeEvidence:
    u = IntPolynomial(coeffs)
    if not u.is_monic():
        raise ValueError("frobenius_sample needs a monic polynomial")
    disc = discriminant(u)
    counts: Counter = Counter()
    first_seen: dict = {}
    n = 0
    for p in primes_up_to(prime_bound):
        if disc % p == 0:
            continue
        part = tuple(sorted(factor_degrees(u.reduce(p))))
        counts[part] += 1
        first_seen.setdefault(part, p)
        n += 1
    cert = _certificate(u.degree, first_seen) if u.degree in (4, 6, 12) else None
    return CycleTypeEvidence(u.degree, n, counts, cert)


def _require_irreducible(T: QuadraticLikeTrinomial) -> None:
    if not T.is_irreducible():
        raise ValueError(f"{T} is reducible over Q")


def _g4_label(a: int, b: int) -> GaloisLabel:
    if is_square(b * (a * a - 4 * b)):
        return GaloisLabel(4, 1)
    if is_square(b):
        return GaloisLabel(4, 2)
    return GaloisLabel(4, 3)


def classify_g4(a: int, b: int) -> GaloisLabel:
    _require_irreducible(QuadraticLikeTrinomial(2, a, b))
    return _g4_label(a, b)


def statements(a: int, b: int) -> PqrsStatements:
    if a * b == 0:
        raise ValueError("need a*b != 0")
    delta = a * a - 4 * b
    return PqrsStatements(
        P=is_square(-3 * b * delta),
        Q=is_square(-3 * b),
        R=resolvent_reducible(a, b),
        S=is_cube(b),
    )


def _g6_label(a: int, b: int) -> GaloisLabel:
    # The roots of g6 are cube roots of the two roots y1, y2 of y^2 + a y + b.
    # Over Q(sqrt(delta), sqrt(-3)) the cube roots generate a Kummer layer of
    # degree 3 exactly when y1*y2 = b or y1/y2 is a cube, i.e. S or R holds
    # (the two are exclusive for irreducible g6); otherwise the layer has
    # degree 9. The base field has degree 2 iff -3*delta is a square.
    st = statements(a, b)
    small_kummer = st.S or st.R
    if is_square(-3 * (a * a - 4 * b)):
        if small_kummer:
            return GaloisLabel(6, 1) if st.S else GaloisLabel(6, 2)
        return GaloisLabel(6, 5)
    return GaloisLabel(6, 3) if small_kummer else GaloisLabel(6, 9)


def classify_g6(a: int, b: int, prime_bound: int = 10_000) -> tuple[GaloisLabel, CycleTypeEvidence]:
    """G6 together with the Frobenius evidence gathered up to prime_bound.

    prime_bound = 0 skips sampling and returns empty evidence. A sample that
    contradicts the exact label raises, since that means a broken invariant.
    """
    g6 = QuadraticLikeTrinomial(3, a, b)
    _require_irreducible(g6)
    label = _g6_label(a, b)
    evidence = frobenius_sample(g6.polynomial(), prime_bound)
    if not evidence.consistent_with(label):
        raise RuntimeError(f"Frobenius sample for {g6} contradicts {label}")
    return label, evidence


# (G4, G6) -> Gal(f); None marks rows resolved by an extra test
PAIR_TABLE: dict[tuple[str, str], str | None] = {
    ("4T1", "6T3"): "12T11",
    ("4T1", "6T9"): "12T39",
    ("4T2", "6T1"): "12T2",
    ("4T2", "6T2"): "12T3",
    ("4T2", "6T5"): "12T18",
    ("4T2", "6T3"): None,
    ("4T2", "6T9"): None,
    ("4T3", "6T1"): "12T14",
    ("4T3", "6T2"): "12T15",
    ("4T3", "6T5"): "12T42",
    ("4T3", "6T3"): None,
    ("4T3", "6T9"): None,
}
IMPOSSIBLE_PAIRS = {("4T1", "6T1"), ("4T1", "6T2"), ("4T1", "6T5")}
# (if 3*alpha or 3*beta is a square, otherwise)
ALPHA_BETA_ROWS = {("4T2", "6T3"): ("12T3", "12T10"), ("4T2", "6T9"): ("12T16", "12T37")}
# (if -3b or -3b*delta is a square, otherwise)
Q_OR_P_ROW = ("12T38", "12T81")


def _label_4t3_6t3(st: PqrsStatements) -> str:
    if (st.P and st.R) or (st.Q and st.S):
        return "12T12"
    if (st.Q and st.R) or (st.P and st.S):
        return "12T13"
    return "12T28"


def label_from_pair(a: int, b: int, g4: GaloisLabel, g6: GaloisLabel) -> GaloisLabel:
    key = (str(g4), str(g6))
    if key in IMPOSSIBLE_PAIRS:
        raise RuntimeError(f"impossible pair {key} for (a, b) = ({a}, {b})")
    name = PAIR_TABLE[key]
    if name is None:
        if key in ALPHA_BETA_ROWS:
            d = derive(a, b)
            hit = is_square(3 * d.alpha) or is_square(3 * d.beta)
            name = ALPHA_BETA_ROWS[key][0 if hit else 1]
        elif key == ("4T3", "6T3"):
            name = _label_4t3_6t3(statements(a, b))
        else:
            st = statements(a, b)
            name = Q_OR_P_ROW[0 if (st.Q or st.P) else 1]
    return L(name)


def classify_f(a: int, b: int) -> GaloisLabel:
    _require_irreducible(QuadraticLikeTrinomial(6, a, b))
    return label_from_pair(a, b, _g4_label(a, b), _g6_label(a, b))
