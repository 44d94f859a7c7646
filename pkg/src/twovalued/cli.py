"""Command-line front end: ``twovalued {verify,powers,construct,enumerate,census}``.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import axioms, construct, enumeration, io, powers, theoremlab

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class InputError(Exception):
    pass


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_table(path: str):
    try:
        return io.parse_table(_read(path))
    except io.ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_group(path: str):
    try:
        return io.parse_group(_read(path))
    except (io.ParseError, io.NotAGroupError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _report_lines(t, report: axioms.AxiomReport) -> list:
    lines = [f"order {t.n}"]
    for name in ("associative", "strong_identity", "involutive", "commutative"):
        v = getattr(report, name)
        line = f"{name:16} {'yes' if v else 'NO'}"
        w = v.witness
        if isinstance(w, axioms.AssociativityWitness):
            x, y, z = (t.label(i) for i in (w.x, w.y, w.z))
            lhs = " ".join(t.label(i) for i in w.lhs)
            rhs = " ".join(t.label(i) for i in w.rhs)
            line += f"  witness ({x}, {y}, {z}): ({x}*{y})*{z} = [{lhs}] but {x}*({y}*{z}) = [{rhs}]"
        elif w is not None:
            line += "  witness (" + ", ".join(t.label(i) for i in w) + ")"
        lines.append(line)
    lines.append(f"involutive two-valued group: {'yes' if report.is_involutive_2vg else 'NO'}")
    return lines


def _theorem_checks(t) -> dict:
    census = theoremlab.case_census(t)
    return {
        "lemma1": theoremlab.lemma1_holds(t).holds,
        "lemma2": theoremlab.lemma2_holds(t).holds,
        "main_identity": theoremlab.main_identity_check(t).holds,
        "case_census": census.as_dict(),
    }


def cmd_verify(args) -> int:
    t = _load_table(args.file)
    report = axioms.verify_all(t)
    payload = report.as_dict()
    lines = _report_lines(t, report)
    code = EXIT_OK if report.is_involutive_2vg else EXIT_FAILED
    if report.is_involutive_2vg:
        extra = _theorem_checks(t)
        payload.update(extra)
        counts = extra["case_census"]
        lines += [
            f"lemma 1          {'yes' if extra['lemma1'] else 'NO'}",
            f"lemma 2          {'yes' if extra['lemma2'] else 'NO'}",
            f"main identity    {'yes' if extra['main_identity'] else 'NO'}",
            "case census      " + " ".join(f"{k}={counts[k]}" for k in theoremlab.CASES),
        ]
        consistent = (
            report.commutative.holds
            and extra["lemma1"]
            and extra["lemma2"]
            and extra["main_identity"]
            and counts["case1"] == t.n * t.n
        )
        if not consistent:
            lines.append("internal invariant breach: a valid structure failed a derived property")
            code = EXIT_INTERNAL
    _emit(args, payload, lines)
    return code


def _element(t, token: str) -> int:
    if t.names is not None and token in t.names:
        return t.names.index(token)
    if token == "e":
        return 0
    if token.isdigit() and int(token) < t.n:
        return int(token)
    raise InputError(f"unknown element {token!r} for a table of order {t.n}")


def cmd_powers(args) -> int:
    t = _load_table(args.file)
    x = _element(t, args.element)
    horizon = t.n * t.n if args.horizon is None else args.horizon
    if horizon < 0:
        raise InputError("--horizon must be non-negative")
    try:
        seq = powers.power_sequence(t, x, horizon)
        k = powers.order(t, x)
    except powers.IllFormedError as exc:
        _emit(args, {"element": x, "error": str(exc)}, [f"ill-formed: {exc}"])
        return EXIT_FAILED
    ord_text = str(k) if k is not None else f"unbounded (no x^k = e for 1 <= k <= {t.n * t.n})"
    lines = [
        f"element {t.label(x)}",
        "powers " + " ".join(t.label(v) for v in seq.terms),
        f"ord = {ord_text}",
    ]
    _emit(args, {"element": x, "powers": list(seq.terms), "order": k}, lines)
    return EXIT_OK


def _factors(text: str) -> construct.AbelianSpec:
    try:
        return construct.AbelianSpec(tuple(int(f) for f in text.split(",")))
    except ValueError:
        raise InputError(f"bad --factors {text!r}: expected comma-separated integers >= 1") from None


def cmd_construct(args) -> int:
    if args.factors is not None:
        t = construct.abelian_coset(_factors(args.factors))
    else:
        t = construct.group_coset_attempt(_load_group(args.group))
    text = io.serialize_table(t)
    report = axioms.verify_all(t)
    if args.output:
        Path(args.output).write_bytes(text.encode("ascii"))
        _emit(args, report.as_dict(), _report_lines(t, report))
    else:
        print(text)
        print("\n".join(_report_lines(t, report)), file=sys.stderr)
    return EXIT_OK if report.is_involutive_2vg else EXIT_FAILED


def cmd_enumerate(args) -> int:
    n = args.n
    if not 1 <= n <= enumeration.MAX_ORDER:
        raise InputError(f"-n must be in 1..{enumeration.MAX_ORDER}")
    jobs = args.jobs or os.cpu_count() or 1
    if args.count_only:
        tables = enumeration.search_tables(n, raw=args.raw, jobs=jobs)
        noncommutative = sum(not axioms.check_commutativity(t) for t in tables)
        print(len(tables))
        return EXIT_FAILED if noncommutative else EXIT_OK
    entries = enumeration.enumerate_structures(n, raw=args.raw, jobs=jobs, out_dir=args.out_dir)
    if args.json:
        for entry in entries:
            print(entry.to_json())
    else:
        for entry in entries:
            spectrum = " ".join("inf" if k is None else str(k) for k in entry.order_spectrum)
            print(f"{entry.file_name}  orders [{spectrum}]  commutative={'yes' if entry.commutative else 'NO'}")
        print(f"order {n}: {len(entries)} structures{' (labeled)' if args.raw else ''}")
    noncommutative = [e for e in entries if not e.commutative]
    if noncommutative:
        print(f"theorem FAILS: {len(noncommutative)} non-commutative structures of order {n}", file=sys.stderr)
        return EXIT_FAILED
    derived = all(
        e.lemma1 and e.lemma2 and e.main_identity and e.power_relation and e.case_counts[0] == n * n
        for e in entries
    )
    if not args.json:
        print(f"theorem holds for all {len(entries)} structures of order {n}")
    return EXIT_OK if derived else EXIT_INTERNAL


def cmd_census(args) -> int:
    t = _load_table(args.file)
    report = axioms.verify_all(t)
    try:
        census = theoremlab.case_census(t)
    except powers.IllFormedError as exc:
        census = None
        problem = str(exc)
    payload = {"valid": report.is_involutive_2vg, "census": None if census is None else census.as_dict()}
    lines = []
    if census is not None:
        lines.append("case1={} case2={} case3={} other={}".format(*census.counts))
        for case, (x, y) in sorted(census.examples.items()):
            if case != "case1":
                lines.append(f"  {case} example: ({t.label(x)}, {t.label(y)})")
    else:
        lines.append(f"census unavailable: {problem}")
    if not report.is_involutive_2vg:
        failed = [k for k in ("associative", "strong_identity", "involutive") if not getattr(report, k)]
        lines.append("not an involutive two-valued group (fails: " + ", ".join(failed) + ")")
    _emit(args, payload, lines)
    ok = report.is_involutive_2vg and census is not None and census.all_case1
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twovalued", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the axioms of a 2vg table")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("powers", help="power sequence and order of an element")
    p.add_argument("file")
    p.add_argument("element", help="index, name, or 'e'")
    p.add_argument("--horizon", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_powers)

    p = sub.add_parser("construct", help="build a table from a group")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--factors", help="cyclic factors of an abelian group, e.g. 2,4")
    src.add_argument("--group", help="grp 1 Cayley table file")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", help="all structures of one order up to isomorphism")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--raw", action="store_true", help="keep every labeling (no isomorphism rejection)")
    p.add_argument("--out-dir")
    p.add_argument("--jobs", type=int, default=0, help="worker processes (default: all cores)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("census", help="classify pairs by the case split of the commutativity proof")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
