"""Closed-form monogenicity criteria for g2, g4, g6 and f in terms of (a, b).

Everything here is residue arithmetic and squarefree tests; nothing consults
the per-prime index test. The scan harness compares these predictions with
the direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .arith import is_square, is_squarefree
from .galois import GaloisLabel, L, _g4_label, _g6_label, classify_f, statements
from .trinomial import QuadraticLikeTrinomial


@dataclass(frozen=True)
class ResidueConditionTable:
    name: str
    modulus: int
    pairs: frozenset[tuple[int, int]]

    def __contains__(self, ab: tuple[int, int]) -> bool:
        a, b = ab
        return (a % self.modulus, b % self.modulus) in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)


def _table(name, modulus, pairs) -> ResidueConditionTable:
    return ResidueConditionTable(name, modulus, frozenset(pairs))


R = _table("R", 4, [(0, 1), (0, 2), (2, 2), (2, 3), (1, 3), (3, 2), (3, 1), (3, 3)])
S1 = _table("S1", 9, [(0, 3), (0, 6), (3, 3), (3, 6), (6, 3), (6, 6)])
S2 = _table("S2", 9, [
    (0, 2), (0, 4), (0, 5), (0, 7), (3, 1), (3, 4),
    (3, 7), (3, 8), (6, 1), (6, 4), (6, 7), (6, 8),
])
S3 = _table("S3", 9, [(1, 3), (1, 6), (2, 3), (4, 6), (5, 6), (7, 3), (8, 3), (8, 6)])
S4 = _table("S4", 9, [
    (1, 1), (1, 2), (1, 4), (1, 5), (1, 8), (2, 2), (2, 4), (2, 5), (2, 7), (2, 8),
    (4, 1), (4, 2), (4, 5), (4, 7), (5, 1), (5, 2), (5, 5), (5, 7), (7, 2), (7, 4),
    (7, 5), (7, 7), (7, 8), (8, 1), (8, 2), (8, 4), (8, 5), (8, 8),
])
S = _table("S", 9, S1.pairs | S2.pairs | S3.pairs | S4.pairs)
G2_EVEN_PAIRS = _table("g2-even", 4, [(0, 1), (0, 2), (2, 2), (2, 3)])

G4_4T1_LIST = frozenset({(4, 2), (-4, 2), (-5, 5)})
G6_6T1_LIST = frozenset({(1, 1), (-1, 1)})
F2_LIST = frozenset({(2, 2), (-2, 2)})

F_LISTS: dict[str, frozenset[tuple[int, int]]] = {
    "12T2": frozenset({(-1, 1)}),
    "12T28": frozenset({(2, 2), (-2, 2)}),
    "12T38": frozenset({(4, -2), (-4, -2), (4, 6), (-4, 6)}),
    "12T39": frozenset({(4, 2), (-4, 2), (-5, 5)}),
}


def _W(a: int, b: int) -> int:
    return (a * a - 4 * b) // gcd(2, a) ** 2


def _sqf(n: int) -> bool:
    return n != 0 and is_squarefree(n)


def _require_irreducible(T: QuadraticLikeTrinomial) -> None:
    if not T.is_irreducible():
        raise ValueError(f"{T} is reducible over Q")


def g2_monogenic_char(a: int, b: int) -> bool:
    _require_irreducible(QuadraticLikeTrinomial(1, a, b))
    if not _sqf(_W(a, b)):
        return False
    return a % 2 == 1 or (a, b) in G2_EVEN_PAIRS


def g4_monogenic_char(a: int, b: int) -> tuple[GaloisLabel, bool]:
    _require_irreducible(QuadraticLikeTrinomial(2, a, b))
    label = _g4_label(a, b)
    if label.index == 1:
        return label, (a, b) in G4_4T1_LIST
    if label.index == 2:
        return label, b == 1 and a % 4 in (0, 3) and _sqf(_W(a, b))
    ok = (
        b != 1
        and _sqf(b)
        and _sqf(_W(a, b))
        and not is_square(b * (a * a - 4 * b))
        and (a, b) in R
    )
    return label, ok


def _in_F3(a: int, b: int) -> bool:
    return b == 1 and a % 9 != 0 and a not in (1, -1) and _sqf(a - 2) and _sqf(a + 2)


def _in_F4(a: int, b: int) -> bool:
    if b != -1 or a % 4 == 0 or a % 9 in (0, 4, 5):
        return False
    d = a * a + 4
    return _sqf(d // gcd(d, 4))


def _in_F5(a: int, b: int) -> bool:
    return a % 2 == 1 and a not in (1, -1) and 4 * b == a * a + 3 and _sqf(b)


def g6_monogenic_char(a: int, b: int) -> bool | None:
    """Closed-form verdict for g6, or None when G6 is 6T9 (no closed form here)."""
    _require_irreducible(QuadraticLikeTrinomial(3, a, b))
    label = _g6_label(a, b)
    if label.index == 1:
        return (a, b) in G6_6T1_LIST
    if label.index == 2:
        return False
    if label.index == 3:
        return (a, b) in F2_LIST or _in_F3(a, b) or _in_F4(a, b)
    if label.index == 5:
        return _in_F5(a, b)
    return None


def in_C10(a: int) -> bool:
    return a != -1 and a % 4 in (0, 3) and a % 9 != 0 and _sqf(_W(a, 1))


def in_C28(a: int) -> bool:
    return a % 4 != 0 and a % 9 not in (0, 4, 5) and _sqf(_W(a, -1))


def in_C38(a: int) -> bool:
    return a % 4 in (0, 3) and a % 9 not in (2, 7) and _sqf(_W(a, -3))


def in_C42(a: int) -> bool:
    if a % 2 == 0:
        raise ValueError(f"(a^2 + 3)/4 is not an integer for even a={a}")
    return a % 8 in (3, 5, 7) and a != -1 and _sqf((a * a + 3) // 4)


def in_C81(a: int, b: int) -> bool:
    delta = a * a - 4 * b
    return (
        b != 1
        and _sqf(b)
        and _sqf(_W(a, b))
        and not is_square(-3 * b)
        and not is_square(-3 * b * delta)
        and not is_square(b * delta)
        and (a, b) in R
        and (a, b) in S
    )


def _sextic_is_generic(a: int, b: int) -> bool:
    # G6 = 6T9: -3*delta not a square, resolvent irreducible, b not a cube
    st = statements(a, b)
    return not (st.R or st.S or is_square(-3 * (a * a - 4 * b)))


@dataclass(frozen=True)
class Prediction:
    applicable: bool
    predicted_monogenic: bool
    predicted_label: GaloisLabel | None
    matched_rule: str | None
    galois_label: GaloisLabel | None = None

    def __post_init__(self):
        if self.predicted_label is not None and not self.predicted_monogenic:
            raise ValueError("a predicted label requires a monogenic prediction")


def matching_rules(a: int, b: int) -> list[tuple[str, str]]:
    """Every (rule, label) whose hypotheses hold for (a, b)."""
    hits = [(f"list:{name}", name) for name, pairs in F_LISTS.items() if (a, b) in pairs]
    if b == 1 and in_C10(a):
        hits.append(("C10", "12T10"))
    if b == -1 and in_C28(a):
        hits.append(("C28", "12T28"))
    if b == -3 and in_C38(a):
        hits.append(("C38", "12T38"))
    if a % 2 == 1 and 4 * b == a * a + 3 and in_C42(a):
        hits.append(("C42", "12T42"))
    if in_C81(a, b) and _sextic_is_generic(a, b):
        hits.append(("C81", "12T81"))
    return hits


def predict_f(a: int, b: int) -> Prediction:
    if a * b == 0:
        raise ValueError("need a*b != 0")
    _require_irreducible(QuadraticLikeTrinomial(6, a, b))
    gal = classify_f(a, b)
    hits = matching_rules(a, b)
    if len(hits) > 1:
        raise RuntimeError(f"overlapping rules {hits} for (a, b) = ({a}, {b})")
    if not hits:
        return Prediction(False, False, None, None, gal)
    rule, name = hits[0]
    return Prediction(True, True, L(name), rule, gal)
