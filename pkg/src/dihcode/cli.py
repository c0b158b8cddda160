"""Command-line surface.

Subcommands: classify | enumerate | search | verify | survey | export.
Exit codes are a stable contract: 0 = positive answer / success, 1 = negative
answer (no perfect code, failed verification, empty search), 2 = invalid
input, 3 = oracle budget overflow.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .abelian import AbelianSpec
from .cayley import build_graph, export as export_graph
from .classifier import classify
from .enumerator import (
    all_perfect_codes,
    codes_containing_t,
    is_perfect_code,
    reference_reflection,
)
from .gendihedral import (
    ConnectionSetError,
    parse_connection_set,
    parse_gelem,
    split_toplevel,
    vertex_index,
)
from . import oracle
from .survey import CSV_COLUMNS, run_survey

EXIT_ADMITS = 0
EXIT_NO_CODE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="group literal, e.g. Z5 or Z10xZ2")
    p.add_argument("--set", dest="set_", help="connection set, e.g. \"t,(1)t,(3)t,(4)t\"")
    p.add_argument("--job", help="JSON job file with 'group' and 'set' fields")
    p.add_argument("--format", default="json", choices=["json", "text", "csv", "dot"])
    p.add_argument("--output", help="write to this path instead of stdout")


def _load_instance(args) -> tuple[str, str]:
    group, set_ = args.group, args.set_
    if args.job:
        with open(args.job, encoding="utf-8") as f:
            job = json.load(f)
        group = job.get("group", group)
        raw_set = job.get("set", set_)
        set_ = ",".join(raw_set) if isinstance(raw_set, list) else raw_set
    if not group or not set_:
        raise ValueError("both a group and a connection set are required")
    return group, set_


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _build(args):
    group, set_ = _load_instance(args)
    spec = AbelianSpec.from_text(group)
    conn = parse_connection_set(spec, set_)
    return spec, conn


def _fail_invalid(args, exc: Exception) -> int:
    reason = getattr(exc, "reason", type(exc).__name__)
    if getattr(args, "format", "json") == "text":
        sys.stderr.write(f"invalid input: {reason}: {exc}\n")
    else:
        sys.stderr.write(json.dumps({"error": reason, "detail": str(exc)}) + "\n")
    return EXIT_INVALID


def cmd_classify(args) -> int:
    try:
        _, conn = _build(args)
    except (ValueError, OSError) as exc:
        return _fail_invalid(args, exc)
    result = classify(conn)
    if args.format == "text":
        lines = [
            f"group        {conn.spec}",
            f"set          {','.join(conn.literals)}",
            f"reflections  {result.reflections}",
            f"admits       {result.admits}",
            f"case         {result.case}",
        ]
        if result.rejection:
            lines.append(f"rejection    {result.rejection}")
        for w in result.witnesses:
            lines.append(f"witness      {json.dumps(w.to_json(), sort_keys=True)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(result.to_json(), indent=2, sort_keys=True) + "\n")
    return EXIT_ADMITS if result.admits else EXIT_NO_CODE


def _codes_payload(g, codes) -> list[list[str]]:
    return [[g.vertex_label(v) for v in code] for code in codes]


def cmd_enumerate(args) -> int:
    try:
        _, conn = _build(args)
    except (ValueError, OSError) as exc:
        return _fail_invalid(args, exc)
    result = classify(conn)
    if not result.admits:
        sys.stderr.write(
            json.dumps({"admits": False, "rejection": result.rejection}) + "\n"
        )
        return EXIT_NO_CODE
    g = build_graph(conn)
    codes = codes_containing_t(g, result)
    if args.all_translates:
        codes = all_perfect_codes(g, codes)
    checked = []
    if args.check:
        masks = oracle.masks_from_graph(g)
        try:
            found = set(oracle.find_all_codes(masks, budget=args.budget))
        except oracle.BudgetExceededError:
            found = None
        for code in codes:
            ok = is_perfect_code(g, code).ok and (found is None or code in found)
            checked.append(ok)
    payload = {
        "reference_t": g.vertex_label(vertex_index(reference_reflection(g))),
        "codes": _codes_payload(g, codes),
    }
    if args.check:
        payload["verified"] = checked
    if args.format == "text":
        lines = [f"codes containing {payload['reference_t']}:"]
        for i, code in enumerate(payload["codes"]):
            suffix = "  verified" if args.check and checked[i] else ""
            lines.append("  {" + ",".join(code) + "}" + suffix)
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_ADMITS


def cmd_search(args) -> int:
    try:
        _, conn = _build(args)
    except (ValueError, OSError) as exc:
        return _fail_invalid(args, exc)
    g = build_graph(conn)
    try:
        codes = oracle.find_all_codes(oracle.masks_from_graph(g), budget=args.budget)
    except oracle.BudgetExceededError as exc:
        sys.stderr.write(f"budget overflow: {exc}\n")
        return EXIT_BUDGET
    payload = {"codes": _codes_payload(g, codes)}
    if args.format == "text":
        lines = [("  {" + ",".join(code) + "}") for code in payload["codes"]]
        _emit(args, f"{len(codes)} perfect codes\n" + "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_ADMITS if codes else EXIT_NO_CODE


def cmd_verify(args) -> int:
    try:
        spec, conn = _build(args)
        members = [parse_gelem(spec, tok) for tok in split_toplevel(args.code)]
    except (ValueError, OSError) as exc:
        return _fail_invalid(args, exc)
    g = build_graph(conn)
    check = is_perfect_code(g, [vertex_index(x) for x in members])
    payload: dict = {"perfect_code": check.ok}
    if not check.ok:
        payload["failure"] = check.failure
        payload["witness_vertex"] = g.vertex_label(check.witness)
    if args.format == "text":
        if check.ok:
            _emit(args, "perfect code: true\n")
        else:
            _emit(
                args,
                f"perfect code: false ({check.failure} at {payload['witness_vertex']})\n",
            )
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_ADMITS if check.ok else EXIT_NO_CODE


def cmd_survey(args) -> int:
    try:
        groups = [tok.strip() for tok in args.groups.split(",") if tok.strip()]
        if not groups:
            raise ValueError("no groups given")
        rows = run_survey(
            groups,
            oracle_check=args.oracle_check,
            raw=args.raw,
            jobs=args.jobs,
            budget=args.budget,
            max_order=args.max_order,
        )
    except (ValueError, OSError) as exc:
        return _fail_invalid(args, exc)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(args, buf.getvalue())
    return EXIT_ADMITS


def cmd_export(args) -> int:
    try:
        _, conn = _build(args)
    except (ValueError, OSError) as exc:
        return _fail_invalid(args, exc)
    fmt = args.format if args.format in ("dot", "json") else "json"
    _emit(args, export_graph(build_graph(conn), fmt))
    return EXIT_ADMITS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihcode",
        description="Perfect codes in quartic Cayley graphs on generalized dihedral groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide whether the graph admits a perfect code")
    _add_instance_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", help="list perfect codes from the closed forms")
    _add_instance_args(p)
    p.add_argument("--all-translates", action="store_true",
                   help="list every perfect code, not only those containing t")
    p.add_argument("--check", action="store_true",
                   help="re-verify each code and compare with the oracle")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="brute-force all perfect codes via exact cover")
    _add_instance_args(p)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a candidate code")
    _add_instance_args(p)
    p.add_argument("--code", required=True, help="comma-separated element literals")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("survey", help="sweep all connection sets of given groups")
    p.add_argument("--groups", required=True, help="comma-separated group literals")
    p.add_argument("--max-order", type=int, default=None,
                   help="skip groups whose Dih(A) order exceeds this")
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--raw", action="store_true",
                   help="no deduplication under the normalization canonical form")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--output", help="write CSV to this path instead of stdout")
    p.add_argument("--format", default="csv", choices=["csv"])
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("export", help="export the graph as DOT or JSON")
    _add_instance_args(p)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConnectionSetError as exc:
        return _fail_invalid(args, exc)


if __name__ == "__main__":
    sys.exit(main())
