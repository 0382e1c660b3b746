"""Command-line entry point: classify, scan, verify, oracle-check.

Exit codes: 0 success, 1 a verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import factorize
from .characterize import predict_f
from .galois import classify_f, classify_g4, classify_g6, statements
from .jks import discriminant_primes, is_monogenic, jks_prime_ok
from .scan import box_cells, oracle_check, render_rows, scan, summarize, verify
from .trinomial import QuadraticLikeTrinomial, derive, discriminant
from .zpoly import dedekind_divides_index, find_factor, format_poly

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def classify_report(a: int, b: int, prime_bound: int = 10_000) -> dict:
    if a * b == 0:
        raise UsageError("a and b must both be nonzero")
    f = QuadraticLikeTrinomial(6, a, b)
    d = derive(a, b)
    rep = is_monogenic(f)
    disc = discriminant(f)
    out = {
        "a": a,
        "b": b,
        "f": str(f),
        "irreducible": rep.irreducible,
        "discriminant": disc,
        "discriminant_factored": str(factorize(disc)),
        "delta": d.delta,
        "W": d.W,
        "statements": vars(statements(a, b)),
    }
    if not rep.irreducible:
        factor = find_factor(f.polynomial())
        out["factor"] = format_poly(factor) if factor else None
        return out
    g6_label, ev = classify_g6(a, b, prime_bound)
    pred = predict_f(a, b)
    out.update({
        "G4": str(classify_g4(a, b)),
        "G6": str(g6_label),
        "G6_evidence": {
            "sampled_primes": ev.sampled_primes,
            "best_match": str(ev.best_match()) if ev.best_match() else None,
            "compatible": [str(g) for g in ev.compatible()] if ev.sampled_primes else [],
            "certificate": list(ev.certificate) if ev.certificate else None,
        },
        "Gal_f": str(classify_f(a, b)),
        "monogenic": rep.monogenic,
        "obstruction_prime": rep.obstruction_prime,
        "obstruction_condition": rep.obstruction_condition,
        "prediction": {
            "monogenic": pred.predicted_monogenic,
            "label": str(pred.predicted_label) if pred.predicted_label else None,
            "rule": pred.matched_rule,
            "agrees": pred.predicted_monogenic == rep.monogenic,
        },
    })
    return out


def _yes(x: bool) -> str:
    return "yes" if x else "no"


def render_text(r: dict) -> str:
    lines = [
        f"f(x) = {r['f']}",
        f"irreducible: {_yes(r['irreducible'])}",
        f"disc(f) = {r['discriminant']} = {r['discriminant_factored']}",
        f"delta = {r['delta']}, W = {r['W']}",
        "P={P} Q={Q} R={R} S={S}".format(**{k: int(v) for k, v in r["statements"].items()}),
    ]
    if not r["irreducible"]:
        if r.get("factor"):
            lines.append(f"factor: {r['factor']}")
        return "\n".join(lines) + "\n"
    ev = r["G6_evidence"]
    lines.append(f"G4 = {r['G4']}")
    if ev["sampled_primes"]:
        lines.append(
            f"G6 = {r['G6']} (Frobenius sample over {ev['sampled_primes']} primes: "
            f"best match {ev['best_match']}, compatible {', '.join(ev['compatible'])})"
        )
    else:
        lines.append(f"G6 = {r['G6']}")
    lines.append(f"Gal(f) = {r['Gal_f']}")
    if r["monogenic"]:
        lines.append("monogenic: yes")
    else:
        lines.append(
            f"monogenic: no (q={r['obstruction_prime']} divides the index, condition {r['obstruction_condition']})"
        )
    p = r["prediction"]
    rule = f" via {p['rule']}" if p["rule"] else ""
    label = f" {p['label']}" if p["label"] else ""
    lines.append(
        f"closed-form prediction: {'monogenic' if p['monogenic'] else 'not monogenic'}{label}{rule}"
        f" [{'agrees' if p['agrees'] else 'DISAGREES'}]"
    )
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> int:
    r = classify_report(args.a, args.b, args.prime_bound)
    sys.stdout.write(json.dumps(r, indent=2) + "\n" if args.json else render_text(r))
    if r["irreducible"] and not r["prediction"]["agrees"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.amin > args.amax or args.bmin > args.bmax:
        raise UsageError("empty range")
    rows = scan(range(args.amin, args.amax + 1), range(args.bmin, args.bmax + 1), args.prime_bound, args.threads)
    text = render_rows(rows, args.format)
    try:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {args.out}: {e.strerror}") from None
    counts = summarize(rows)
    print(f"{len(rows)} rows, {sum(r.irreducible for r in rows)} irreducible, {sum(counts.values())} monogenic")
    for label in sorted(counts, key=lambda s: int(s.split("T")[1])):
        print(f"  {label:6} {counts[label]}")
    disagree = [r for r in rows if not r.prediction_agrees]
    if disagree:
        print(f"{len(disagree)} rows where the closed-form prediction disagrees")
        return EXIT_MISMATCH
    return EXIT_OK


def _check_box(n: int) -> None:
    if n < 1:
        raise UsageError("--box must be at least 1")


def cmd_verify(args) -> int:
    _check_box(args.box)
    results = verify(args.box, args.threads)
    for c in results:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
    return EXIT_OK if all(c.passed for c in results) else EXIT_MISMATCH


def cmd_oracle_check(args) -> int:
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b go together")
    if args.a is not None:
        if args.a * args.b == 0:
            raise UsageError("a and b must both be nonzero")
        bad = 0
        for m in (1, 2, 3, 6):
            T = QuadraticLikeTrinomial(m, args.a, args.b)
            if not T.is_irreducible():
                print(f"{T}: reducible, skipped")
                continue
            for q in discriminant_primes(T):
                v = jks_prime_ok(T, q)
                d = dedekind_divides_index(T.polynomial(), q)
                bad += v.divides_index != d
                print(
                    f"{T}  q={q}  condition {v.condition_used}: "
                    f"{'divides' if v.divides_index else 'coprime'}  "
                    f"Dedekind: {'divides' if d else 'coprime'}"
                )
        return EXIT_MISMATCH if bad else EXIT_OK
    _check_box(args.box)
    r = range(-args.box, args.box + 1)
    total, mismatches = oracle_check(box_cells(r, r), args.threads)
    for mm in mismatches:
        print(f"MISMATCH {mm.trinomial} q={mm.prime}: index test {mm.jks}, Dedekind {mm.dedekind}")
    print(f"{total} prime checks, {len(mismatches)} mismatches")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monogenic12", description="Monogenicity and Galois groups of x^12 + a x^6 + b.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="report on a single (a, b)")
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("--prime-bound", type=int, default=10_000, help="Frobenius sampling bound, 0 disables")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("scan", help="tabulate a box of (a, b)")
    for name in ("amin", "amax", "bmin", "bmax"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--prime-bound", type=int, default=0, help="Frobenius sampling bound for G6 checks, 0 disables")
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", help="check the closed-form criteria on |a|, |b| <= N")
    v.add_argument("--box", type=int, required=True)
    v.add_argument("--threads", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle-check", help="compare the index test with the Dedekind criterion")
    o.add_argument("--box", type=int, default=10)
    o.add_argument("--a", type=int)
    o.add_argument("--b", type=int)
    o.add_argument("--threads", type=int, default=1)
    o.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"monogenic12: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
