"""Permutation data for the transitive groups that can occur in the tower.

Each entry maps (degree, T-number) to the group order and a generating set of
permutations, written as 1-based image lists. Elements and cycle-type
statistics are recovered by closure on first use.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

Partition = tuple[int, ...]

# fmt: off
GENERATORS: dict[tuple[int, int], tuple[int, tuple[tuple[int, ...], ...]]] = {
    (12, 2): (12, ((10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3), (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6), (5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4),)),
    (12, 3): (12, ((5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (11, 8, 9, 6, 7, 4, 5, 2, 3, 12, 1, 10), (12, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 1),)),
    (12, 10): (24, ((5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12), (10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3), (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6),)),
    (12, 11): (24, ((5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12), (4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3),)),
    (12, 12): (24, ((5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3), (11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12),)),
    (12, 13): (24, ((5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3), (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6), (11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12),)),
    (12, 14): (24, ((4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3), (7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12), (5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4),)),
    (12, 15): (24, ((5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (1, 8, 3, 10, 5, 12, 7, 2, 9, 4, 11, 6), (7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12), (2, 1, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3),)),
    (12, 16): (36, ((1, 10, 3, 8, 5, 2, 7, 12, 9, 6, 11, 4), (10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3), (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6),)),
    (12, 18): (36, ((1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4), (10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3), (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6),)),
    (12, 28): (48, ((4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3), (7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12), (5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4), (5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12),)),
    (12, 37): (72, ((1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4), (5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12), (10, 5, 12, 7, 2, 9, 4, 11, 6, 1, 8, 3), (7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5, 6),)),
    (12, 38): (72, ((1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4), (4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3), (11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 12),)),
    (12, 39): (72, ((1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4), (5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12), (4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3),)),
    (12, 42): (72, ((1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4), (4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3), (7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12),)),
    (12, 81): (144, ((1, 6, 3, 8, 5, 10, 7, 12, 9, 2, 11, 4), (5, 10, 3, 8, 1, 6, 11, 4, 9, 2, 7, 12), (4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3), (7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5, 12),)),
    (6, 1): (6, ((2, 3, 4, 5, 6, 1),)),
    (6, 2): (6, ((3, 4, 5, 6, 1, 2), (4, 3, 2, 1, 6, 5),)),
    (6, 3): (12, ((2, 3, 4, 5, 6, 1), (4, 3, 2, 1, 6, 5),)),
    (6, 5): (18, ((1, 4, 3, 6, 5, 2), (4, 5, 6, 1, 2, 3),)),
    (6, 9): (36, ((1, 4, 3, 6, 5, 2), (5, 4, 3, 2, 1, 6), (4, 5, 6, 1, 2, 3),)),
    (4, 1): (4, ((2, 3, 4, 1),)),
    (4, 2): (4, ((4, 3, 2, 1), (2, 1, 4, 3),)),
    (4, 3): (8, ((2, 3, 4, 1), (3, 2, 1, 4),)),
    (2, 1): (2, ((2, 1),)),}
# fmt: on


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[i] for i in p)


@lru_cache(maxsize=None)
def elements(degree: int, index: int) -> frozenset[tuple[int, ...]]:
    """All elements as 0-based image tuples."""
    _, gens = GENERATORS[(degree, index)]
    gens0 = [tuple(x - 1 for x in g) for g in gens]
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens0:
                h = _compose(e, g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths))


@lru_cache(maxsize=None)
def cycle_type_counts(degree: int, index: int) -> Counter:
    return Counter(cycle_type(g) for g in elements(degree, index))


def cycle_types(degree: int, index: int) -> frozenset[Partition]:
    return frozenset(cycle_type_counts(degree, index))


def order(degree: int, index: int) -> int:
    return GENERATORS[(degree, index)][0]


def candidates(degree: int) -> list[tuple[int, int]]:
    return sorted(k for k in GENERATORS if k[0] == degree)
