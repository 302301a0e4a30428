"""Command-line front end.

    toricseq builtin p2 > p2.json
    toricseq morphic p2.json --qmax 2 --format csv
    toricseq betti builtin:p1xp1 --format json

Exit codes: 0 success, 1 bad input or invalid fan, 2 internal invariant
violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from . import __version__
from .builtins import builtin, fan_from_document, load_document
from .cech import build_cech_complex, require_complete
from .cells import flag_complex, oracle_report, simplicial_homology
from .errors import InputError, InvariantViolation, ValidationError
from .polyhedral import Fan, validate_fan
from .spectral import betti_table, build_d1, build_E1, compute_E2, morphic_table

COMMANDS = ("validate", "cech", "flags", "e1", "e2", "morphic", "betti", "oracle", "builtin")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _load(arg: str, *, validate: bool = True) -> Fan:
    if arg.startswith("builtin:"):
        doc = builtin(arg.split(":", 1)[1])
    else:
        doc = load_document(arg)
    return fan_from_document(doc, validate=validate)


# -- renderers ---------------------------------------------------------------
# Each returns the output string for the requested format.

def _render_validate(fan: Fan, fmt: str) -> tuple[str, int]:
    report = validate_fan(fan)
    code = 0 if report.ok else 1
    if fmt == "json":
        return _dumps(report.to_json()), code
    if fmt == "csv":
        return _csv([["kind", "detail"]] + [[v.kind, v.detail] for v in report.violations]), code
    if report.ok:
        return "valid complete fan", code
    head = "valid fan, not complete" if report.is_fan else "invalid fan"
    return "\n".join([head] + [f"  {v}" for v in report.violations]), code


def _render_cech(fan: Fan, fmt: str) -> str:
    cpx = build_cech_complex(fan)
    hom = cpx.homology()
    if fmt == "json":
        out = cpx.to_json()
        out["homology"] = [h.to_json() for h in hom]
        return _dumps(out)
    if fmt == "csv":
        rows = [["degree", "rank", "homology_rank", "homology_torsion"]]
        for k, (r, h) in enumerate(zip(cpx.ranks, hom)):
            rows.append([k, r, h.rank, " ".join(map(str, h.torsion))])
        return _csv(rows)
    lines = [f"Cech complex of {fan}", f"ranks: {list(cpx.ranks)}"]
    for k, h in enumerate(hom):
        lines.append(f"H_{k} = {h}")
    for k in range(1, cpx.top + 1):
        lines.append(f"d_{k}:")
        lines.extend("  " + " ".join(f"{x:2d}" for x in row) for row in cpx.d(k).to_rows())
    return "\n".join(lines)


def _render_flags(fan: Fan, fmt: str) -> str:
    require_complete(fan)
    K = flag_complex(fan)
    red = simplicial_homology(K)
    if fmt == "json":
        return _dumps(
            {
                "f_vector": list(K.f_vector),
                "euler": K.euler_characteristic(),
                "reduced_homology": [h.to_json() for h in red],
            }
        )
    if fmt == "csv":
        rows = [["k", "simplices", "reduced_rank", "reduced_torsion"]]
        for k, (f, h) in enumerate(zip(K.f_vector, red)):
            rows.append([k, f, h.rank, " ".join(map(str, h.torsion))])
        return _csv(rows)
    lines = [f"flag complex of {fan}", f"f-vector: {list(K.f_vector)}", f"euler: {K.euler_characteristic()}"]
    lines += [f"reduced H_{k} = {h}" for k, h in enumerate(red)]
    return "\n".join(lines)


def _render_e1(fan: Fan, fmt: str, mode: str) -> str:
    page = build_E1(fan, mode)
    build_d1(fan, page)  # d1 d1 = 0 is part of the contract of this command
    if fmt == "json":
        return _dumps(page.to_json())
    if fmt == "csv":
        return _csv([["r", "s", "rank"]] + [[r, s, page.rank(r, s)] for (r, s) in sorted(page.labels)])
    n = fan.rank
    lines = [f"E1 page ({mode}) of {fan}; rows r, columns s"]
    lines.append("r\\s " + " ".join(f"{s:>4}" for s in range(n + 1)))
    for r in range(n + 1):
        lines.append(f"{r:>3} " + " ".join(f"{page.rank(r, s):>4}" for s in range(n + 1)))
    return "\n".join(lines)


def _render_e2(fan: Fan, fmt: str, mode: str) -> str:
    page = build_E1(fan, mode)
    e2 = compute_E2(page, build_d1(fan, page))
    if fmt == "json":
        out = e2.to_json()
        out["mode"] = mode
        return _dumps(out)
    if fmt == "csv":
        rows = [["r", "s", "rank", "torsion"]]
        for (r, s), g in sorted(e2.groups.items()):
            rows.append([r, s, g.rank, " ".join(map(str, g.torsion))])
        return _csv(rows)
    n = fan.rank
    width = max(len(str(g)) for g in e2.groups.values()) + 2
    lines = [f"E2 page ({mode}) of {fan}; rows r, columns s"]
    lines.append("r\\s " + "".join(f"{s:>{width}}" for s in range(n + 1)))
    for r in range(n + 1):
        lines.append(f"{r:>3} " + "".join(f"{str(e2.group(r, s)):>{width}}" for s in range(n + 1)))
    if any(g.torsion for g in e2.groups.values()):
        lines.append("integral torsion present; only the rational abutment is determined")
    return "\n".join(lines)


def _render_morphic(fan: Fan, fmt: str, qmax: int | None) -> str:
    table = morphic_table(fan, qmax)
    ndeg = 2 * fan.rank + 1
    if fmt == "json":
        return _dumps(table.to_json())
    if fmt == "csv":
        return _csv([["q"] + list(range(ndeg))] + [[q] + list(row) for q, row in enumerate(table.ranks)])
    lines = [f"rational morphic ranks of {fan}; rows q, columns n"]
    lines.append("q\\n " + " ".join(f"{n:>3}" for n in range(ndeg)))
    for q, row in enumerate(table.ranks):
        lines.append(f"{q:>3} " + " ".join(f"{x:>3}" for x in row))
    return "\n".join(lines)


def _render_betti(fan: Fan, fmt: str) -> str:
    table = betti_table(fan)
    if fmt == "json":
        return _dumps(table.to_json())
    if fmt == "csv":
        return _csv([["n", "betti"]] + [[n, b] for n, b in enumerate(table.betti)])
    return f"betti: {' '.join(map(str, table.betti))}\neuler: {table.euler}"


def _render_oracle(fan: Fan, fmt: str) -> tuple[str, int]:
    report = oracle_report(fan)
    code = 0 if report.ok else 2
    if fmt == "json":
        return _dumps(report.to_json()), code
    if fmt == "csv":
        return _csv([["check", "passed", "detail"]] + [[c.name, c.passed, c.detail] for c in report.checks]), code
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f"  ({c.detail})" if c.detail else "") for c in report.checks]
    lines.append("all checks passed" if report.ok else f"{len(report.failures())} check(s) failed")
    return "\n".join(lines), code


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="toricseq",
        description="Cech resolutions, spectral sequence pages and cohomology tables of complete fans.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument(
        "target",
        help="fan document path, '-' for stdin, or builtin:NAME; for 'builtin', the builtin name",
    )
    p.add_argument("--mode", choices=("morphic", "singular"), default="morphic")
    p.add_argument("--qmax", type=int, default=None, help="largest weight for 'morphic' (default: fan rank)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")
    p.add_argument("--scramble-orientations", type=int, default=None, metavar="SEED", help=argparse.SUPPRESS)
    return p


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = 0
        if args.command == "builtin":
            text = _dumps(builtin(args.target))
        else:
            fan = _load(args.target, validate=args.command != "validate")
            if args.scramble_orientations is not None:
                fan = fan.scrambled(random.Random(args.scramble_orientations))
            fmt = args.format
            if args.command == "validate":
                text, code = _render_validate(fan, fmt)
            elif args.command == "cech":
                text = _render_cech(fan, fmt)
            elif args.command == "flags":
                text = _render_flags(fan, fmt)
            elif args.command == "e1":
                text = _render_e1(fan, fmt, args.mode)
            elif args.command == "e2":
                text = _render_e2(fan, fmt, args.mode)
            elif args.command == "morphic":
                if args.qmax is not None and args.qmax < 0:
                    raise InputError("--qmax must be nonnegative")
                text = _render_morphic(fan, fmt, args.qmax)
            elif args.command == "betti":
                text = _render_betti(fan, fmt)
            else:
                text, code = _render_oracle(fan, fmt)
    except ValidationError as exc:
        print("error: invalid fan", file=sys.stderr)
        for v in exc.report.violations:
            print(f"  {v}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal invariant violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
