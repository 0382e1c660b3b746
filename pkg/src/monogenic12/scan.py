"""Box scans, verification of the closed-form criteria, and the index-oracle cross-check.

Each (a, b) cell is analysed independently, so cells can be farmed out to a
process pool; results are always reassembled in (a, b) order.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import is_squarefree
from .characterize import (
    F_LISTS,
    G4_4T1_LIST,
    G6_6T1_LIST,
    Prediction,
    predict_f,
)
from .galois import GaloisLabel, _g4_label, _g6_label, classify_g6, label_from_pair
from .jks import MonogenicityReport, discriminant_primes, is_monogenic, jks_prime_ok, kkr_monogenic
from .trinomial import QuadraticLikeTrinomial
from .zpoly import dedekind_divides_index

CSV_COLUMNS = (
    "a", "b", "irreducible", "G4", "G6", "Gal_f", "monogenic",
    "obstruction_prime", "obstruction_condition", "prediction_agrees",
)
NEVER_MONOGENIC = frozenset(f"12T{n}" for n in (3, 11, 12, 13, 14, 15, 16, 18, 37))
# (base half-degree, k): the compositions g2(x^2)=g4, g2(x^3)=g6, g2(x^6)=f, g4(x^3)=f, g6(x^2)=f
COMPOSITIONS = ((1, 2), (1, 3), (1, 6), (2, 3), (3, 2))


@dataclass(frozen=True)
class Cell:
    a: int
    b: int
    reports: dict[int, MonogenicityReport]  # keyed by degree 2, 4, 6, 12
    G4: GaloisLabel | None
    G6: GaloisLabel | None
    Gal_f: GaloisLabel | None
    prediction: Prediction | None
    kkr: dict[tuple[int, int], tuple[bool, bool]] = field(default_factory=dict)

    @property
    def f(self) -> MonogenicityReport:
        return self.reports[12]


@dataclass(frozen=True)
class ScanRow:
    a: int
    b: int
    irreducible: bool
    G4: GaloisLabel | None
    G6: GaloisLabel | None
    Gal_f: GaloisLabel | None
    monogenic: bool | None
    obstruction_prime: int | None
    obstruction_condition: int | None
    prediction_agrees: bool

    def as_dict(self) -> dict:
        out = {}
        for k in CSV_COLUMNS:
            v = getattr(self, k)
            out[k] = str(v) if isinstance(v, GaloisLabel) else v
        return out


def analyze(a: int, b: int, prime_bound: int = 0, with_kkr: bool = False) -> Cell:
    """Everything the harness needs to know about one (a, b) with ab != 0."""
    reports = {2 * m: is_monogenic(QuadraticLikeTrinomial(m, a, b)) for m in (1, 2, 3, 6)}
    G4 = _g4_label(a, b) if reports[4].irreducible else None
    G6 = None
    if reports[6].irreducible:
        G6 = classify_g6(a, b, prime_bound)[0] if prime_bound else _g6_label(a, b)
    Gal_f = pred = None
    if reports[12].irreducible:
        Gal_f = label_from_pair(a, b, G4, G6)
        pred = predict_f(a, b)
    kkr = {}
    if with_kkr:
        for m, k in COMPOSITIONS:
            if reports[2 * m * k].irreducible:
                g = QuadraticLikeTrinomial(m, a, b)
                kkr[(m, k)] = (kkr_monogenic(g, k), reports[2 * m * k].monogenic)
    return Cell(a, b, reports, G4, G6, Gal_f, pred, kkr)


def row_of(cell: Cell) -> ScanRow:
    f = cell.f
    if not f.irreducible:
        return ScanRow(cell.a, cell.b, False, cell.G4, cell.G6, None, None, None, None, True)
    return ScanRow(
        cell.a, cell.b, True, cell.G4, cell.G6, cell.Gal_f, f.monogenic,
        f.obstruction_prime, f.obstruction_condition,
        cell.prediction.predicted_monogenic == f.monogenic,
    )


def box_cells(a_range: range, b_range: range) -> list[tuple[int, int]]:
    return [(a, b) for a in a_range for b in b_range if a * b != 0]


def _analyze_star(args) -> Cell:
    return analyze(*args)


def analyze_box(pairs, prime_bound: int = 0, with_kkr: bool = False, threads: int = 1) -> list[Cell]:
    jobs = [(a, b, prime_bound, with_kkr) for a, b in pairs]
    if threads <= 1 or len(jobs) < 2:
        return [_analyze_star(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_analyze_star, jobs, chunksize=max(1, len(jobs) // (8 * threads))))


def scan(a_range: range, b_range: range, prime_bound: int = 0, threads: int = 1) -> list[ScanRow]:
    return [row_of(c) for c in analyze_box(box_cells(a_range, b_range), prime_bound, threads=threads)]


def render_rows(rows: list[ScanRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        d = r.as_dict()
        w.writerow(["" if d[k] is None else d[k] for k in CSV_COLUMNS])
    return buf.getvalue()


def summarize(rows: list[ScanRow]) -> Counter:
    """Monogenic f per Galois label."""
    return Counter(str(r.Gal_f) for r in rows if r.monogenic)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, failures: list) -> CheckResult:
    if failures:
        shown = ", ".join(map(str, failures[:5]))
        more = f" (+{len(failures) - 5} more)" if len(failures) > 5 else ""
        return CheckResult(name, False, f"{len(failures)} failure(s): {shown}{more}")
    return CheckResult(name, True, "ok")


def verify_cells(cells: list[Cell], box: int) -> list[CheckResult]:
    irr = [c for c in cells if c.f.irreducible]

    agree = [
        (c.a, c.b) for c in irr
        if c.prediction.predicted_monogenic != c.f.monogenic
        or (c.f.monogenic and c.prediction.predicted_label != c.Gal_f)
    ]
    excluded = [(c.a, c.b, str(c.Gal_f)) for c in irr if c.f.monogenic and str(c.Gal_f) in NEVER_MONOGENIC]

    closure = []
    for c in irr:
        if c.f.monogenic:
            tower_ok = all(c.reports[n].monogenic for n in (2, 4, 6))
            w = (c.a * c.a - 4 * c.b) // (4 if c.a % 2 == 0 else 1)
            if not (tower_ok and is_squarefree(c.b) and w != 0 and is_squarefree(w)):
                closure.append((c.a, c.b))
    kkr = [(c.a, c.b, mk) for c in cells for mk, (x, y) in c.kkr.items() if x != y]

    def in_box(pairs):
        return {p for p in pairs if abs(p[0]) <= box and abs(p[1]) <= box}

    found_4t1 = {(c.a, c.b) for c in cells if c.G4 is not None and c.G4.index == 1 and c.reports[4].monogenic}
    found_6t1 = {(c.a, c.b) for c in cells if c.G6 is not None and c.G6.index == 1 and c.reports[6].monogenic}
    lists = []
    if found_4t1 != in_box(G4_4T1_LIST):
        lists.append(("4T1", sorted(found_4t1 ^ in_box(G4_4T1_LIST))))
    if found_6t1 != in_box(G6_6T1_LIST):
        lists.append(("6T1", sorted(found_6t1 ^ in_box(G6_6T1_LIST))))
    for name in ("12T2", "12T39"):
        found = {(c.a, c.b) for c in irr if c.f.monogenic and str(c.Gal_f) == name}
        if found != in_box(F_LISTS[name]):
            lists.append((name, sorted(found ^ in_box(F_LISTS[name]))))

    return [
        _check("prediction agrees with index test", agree),
        _check("no monogenic f in excluded groups", excluded),
        _check("monogenicity descends to g2, g4, g6", closure + kkr),
        _check("finite lists complete", lists),
    ]


def verify(box: int, threads: int = 1) -> list[CheckResult]:
    r = range(-box, box + 1)
    return verify_cells(analyze_box(box_cells(r, r), with_kkr=True, threads=threads), box)


@dataclass(frozen=True)
class OracleMismatch:
    trinomial: QuadraticLikeTrinomial
    prime: int
    jks: bool
    dedekind: bool


def _oracle_cell(args) -> tuple[int, list[OracleMismatch]]:
    a, b = args
    n, bad = 0, []
    for m in (1, 2, 3, 6):
        T = QuadraticLikeTrinomial(m, a, b)
        if not T.is_irreducible():
            continue
        u = T.polynomial()
        for q in discriminant_primes(T):
            j = jks_prime_ok(T, q).divides_index
            d = dedekind_divides_index(u, q)
            n += 1
            if j != d:
                bad.append(OracleMismatch(T, q, j, d))
    return n, bad


def oracle_check(pairs, threads: int = 1) -> tuple[int, list[OracleMismatch]]:
    """Compare the trinomial index test with the Dedekind criterion at every discriminant prime."""
    pairs = list(pairs)
    if threads > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_oracle_cell, pairs, chunksize=max(1, len(pairs) // (8 * threads))))
    else:
        results = [_oracle_cell(p) for p in pairs]
    total = sum(n for n, _ in results)
    return total, [m for _, bad in results for m in bad]
