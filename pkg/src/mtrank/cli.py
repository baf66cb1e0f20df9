"""Command-line interface.

    mtrank landau (g|g1) N
    mtrank alpha --from A --to B [--envelope]
    mtrank bound (--commutative G | --general G | --product G1,G2,... | --triple RANK U DIM)
    mtrank exponent G N
    mtrank rootsys (cartan|fundamental-group|minuscule|orbit) TYPE [--weight K]
    mtrank snf < matrix.json
    mtrank verify (landau-oracle|sandwich|massias|u-vs-g1|char-count|examples) [--max N]
    mtrank examples (cm|spin|sl2|largemult|all) [--max N]

Global flags --json and --quiet may appear before or after the subcommand.
Exit status: 0 ok, 1 a checked inequality failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, TextIO

from . import bounds, landau, lattice, rootsys, sharpness

OK, VIOLATION, ERROR = "ok", "violation", "error"
EXIT_CODES = {OK: 0, VIOLATION: 1, ERROR: 2}


class InputError(ValueError):
    pass


@dataclass
class Outcome:
    command: str
    inputs: dict
    results: dict
    status: str = OK
    lines: list[str] = field(default_factory=list)


def to_jsonable(x):
    """Ints become decimal strings so that big values never lose precision."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, Enum):
        return to_jsonable(x.value)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "__dataclass_fields__"):
        return {k: to_jsonable(getattr(x, k)) for k in x.__dataclass_fields__}
    return str(x)


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    if isinstance(x, Enum):
        return str(x.value)
    return str(x)


def _table(header: list[str], rows: list[list]) -> list[str]:
    cells = [header] + [[_fmt(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]


def _kv(d: dict) -> list[str]:
    width = max((len(k) for k in d), default=0)
    return [f"{k.ljust(width)}  {_fmt(v)}" for k, v in d.items()]


def _report_dict(rep: bounds.BoundReport) -> dict:
    return {
        "input_dimension": rep.input_dimension,
        "bound_kind": rep.bound_kind,
        "min_rank": rep.min_rank,
        "witness_lhs": rep.witness_lhs,
        "witness_rhs": rep.witness_rhs,
        "equality": rep.equality,
    }


# ---------------------------------------------------------------------------
# subcommands

def cmd_landau(args) -> Outcome:
    fn = landau.landau_g if args.kind == "g" else landau.landau_g1
    value = fn(args.n)
    return Outcome("landau", {"kind": args.kind, "n": args.n}, {"value": value}, lines=[str(value)])


def cmd_alpha(args) -> Outcome:
    if args.start < 2 or args.stop < args.start:
        raise InputError("need 2 <= --from <= --to")
    rows, out = [], []
    status = OK
    for n in range(args.start, args.stop + 1):
        a = landau.alpha(n)
        row = {"n": n, "g1": landau.landau_g1(n), "alpha": a.alpha, "below_2": a.alpha < 2}
        if not row["below_2"]:
            status = VIOLATION
        if args.envelope:
            row["envelope"] = a.envelope
            if n >= 9:
                row["below_envelope"] = a.alpha < a.envelope < 2
                if not row["below_envelope"]:
                    status = VIOLATION
        rows.append(row)
        out.append([row[k] for k in row])
    header = list(rows[0]) if rows else []
    return Outcome(
        "alpha",
        {"from": args.start, "to": args.stop, "envelope": args.envelope},
        {"rows": rows},
        status,
        _table(header, out),
    )


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"malformed integer list {text!r}") from None


def cmd_bound(args) -> Outcome:
    if args.commutative is not None:
        rep = bounds.commutative_rank_bound(args.commutative)
        inputs = {"kind": "commutative", "g": args.commutative}
    elif args.general is not None:
        rep = bounds.general_rank_bound(args.general)
        inputs = {"kind": "general", "g": args.general}
    elif args.product is not None:
        dims = _parse_int_list(args.product)
        rep = bounds.product_rank_bound(dims)
        inputs = {"kind": "product", "dims": dims}
    else:
        rank, u, dim = args.triple
        holds = bounds.triple_noncommutative_check(rank, u, dim)
        rep = bounds.triple_rank_bound(dim, u)
        results = {"holds": holds, **_report_dict(rep)}
        return Outcome(
            "bound",
            {"kind": "triple", "rank": rank, "u": u, "dim": dim},
            results,
            OK if holds else VIOLATION,
            _kv(results),
        )
    results = _report_dict(rep)
    return Outcome("bound", inputs, results, lines=_kv(results))


def cmd_exponent(args) -> Outcome:
    e = bounds.division_field_exponent(args.g, args.n)
    results = {"exponent": e.value, "exact": e.exact}
    return Outcome("exponent", {"g": args.g, "n": args.n}, results, lines=_kv(results))


def _weight_str(w) -> str:
    return "(" + ", ".join(str(x) for x in w) + ")"


def cmd_rootsys(args) -> Outcome:
    t = rootsys.SimpleType.parse(args.type)
    inputs = {"action": args.action, "type": str(t)}
    if args.action == "cartan":
        rows = rootsys.cartan_matrix(t).to_rows()
        return Outcome("rootsys", inputs, {"cartan_matrix": rows},
                       lines=[" ".join(f"{x:>2}" for x in r) for r in rows])
    if args.action == "fundamental-group":
        inv = rootsys.fundamental_group_invariants(t)
        results = {"elementary_divisors": list(inv.elementary_divisors),
                   "exponent": inv.exponent, "order": inv.order}
        return Outcome("rootsys", inputs, results, lines=_kv(results))
    if args.action == "minuscule":
        reps = rootsys.minuscule_catalog(t)
        results = {"representations": [
            {"fundamental_weight_index": r.fundamental_weight_index,
             "dimension": r.dimension,
             "highest_weight": [str(x) for x in r.highest_weight]} for r in reps]}
        lines = _table(["k", "dim", "highest weight"],
                       [[r.fundamental_weight_index, r.dimension, _weight_str(r.highest_weight)]
                        for r in reps]) if reps else ["(no minuscule weights)"]
        return Outcome("rootsys", inputs, results, lines=lines)
    # orbit
    if args.weight is not None:
        indices = [args.weight]
    else:
        indices = [r.fundamental_weight_index for r in rootsys.minuscule_catalog(t)]
    inputs["weights"] = indices
    orbits, lines = [], []
    for k in indices:
        orbit = rootsys.weyl_orbit(t, rootsys.fundamental_weight(t, k))
        orbits.append({"fundamental_weight_index": k, "size": len(orbit),
                       "weights": [[str(x) for x in w] for w in orbit]})
        lines.append(f"w{k}: orbit size {len(orbit)}")
        lines.extend("  " + _weight_str(w) for w in orbit)
    return Outcome("rootsys", inputs, {"orbits": orbits}, lines=lines or ["(no minuscule weights)"])


def cmd_snf(args, stdin: TextIO) -> Outcome:
    try:
        data = json.loads(stdin.read())
    except json.JSONDecodeError as exc:
        raise InputError(f"matrix is not valid JSON: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InputError("matrix must be a JSON array of arrays of integers")
    try:
        m = lattice.IntMatrix.from_rows(data)
    except TypeError as exc:
        raise InputError(str(exc)) from None
    inv = lattice.smith_normal_form(m)
    results = {"elementary_divisors": list(inv.elementary_divisors), "free_rank": inv.free_rank,
               "exponent": inv.exponent if inv.is_finite else None}
    return Outcome("snf", {"matrix": data}, results, lines=_kv(results))


# verify ---------------------------------------------------------------------

VERIFY_DEFAULT_MAX = {
    "landau-oracle": 25,
    "sandwich": 500,
    "massias": 500,
    "u-vs-g1": 12,
    "char-count": 10,
    "examples": 20,
}


def _verify_landau_oracle(top: int) -> tuple[dict, list[str]]:
    failures = []
    for n in range(top + 1):
        if landau.landau_g(n) != landau.brute_force_g(n):
            failures.append(f"g({n})")
        if landau.landau_g1(n) != landau.brute_force_g1(n):
            failures.append(f"g1({n})")
    return {"checked": 2 * (top + 1), "failures": failures}, failures


def _verify_sweep(check: Callable[[int], bool], lo: int, top: int) -> tuple[dict, list[str]]:
    failures = [str(n) for n in range(lo, top + 1) if not check(n)]
    return {"checked": max(0, top - lo + 1), "failures": failures}, failures


def _verify_u_vs_g1(top: int) -> tuple[dict, list[str]]:
    rep = rootsys.verify_u_vs_g1(top)
    failures = [f"{shape}: {why}" for shape, why in rep.violations]
    best = {rank: {"lcm": u, "shape": str(shape)} for rank, (u, shape) in rep.best_per_rank.items()}
    return {"shapes_checked": rep.shapes_checked, "failures": failures, "best_per_rank": best}, failures


def _verify_char_count(top: int) -> tuple[dict, list[str]]:
    rows, failures = [], []
    for t in rootsys.admissible_types(top):
        for rep in rootsys.minuscule_catalog(t):
            orbit = rootsys.weyl_orbit(t, rep.highest_weight)
            count = bounds.count_distinct_characters(orbit)
            cap = bounds.char_count_bound(t.rank + 1)
            ok = count == rep.dimension == len(orbit) and count <= cap
            rows.append({"type": str(t), "k": rep.fundamental_weight_index,
                         "orbit_size": count, "dimension": rep.dimension, "bound": cap, "ok": ok})
            if not ok:
                failures.append(f"{t} w{rep.fundamental_weight_index}")
    return {"rows": rows, "failures": failures}, failures


def _example_reports(kind: str, top: int) -> list[sharpness.ExampleReport]:
    out = []
    if kind in ("cm", "all"):
        out += [sharpness.cm_example(n) for n in range(2, top + 1)]
    if kind in ("spin", "all"):
        out += [sharpness.spin_example(n) for n in range(1, top + 1) if n % 4 in (1, 2)]
    if kind in ("sl2", "all"):
        out += [sharpness.sl2_product_example(n) for n in range(1, top + 1, 2)]
    if kind in ("largemult", "all"):
        out += [sharpness.large_multiplicity_example(n) for n in range(3, top + 1, 2)]
    return out


def _example_failures(rep: sharpness.ExampleReport) -> list[str]:
    label = f"{rep.example_id.value}({rep.n})"
    bad = []
    if rep.example_id is sharpness.ExampleId.LARGE_MULTIPLICITY:
        for key in ("general_bound_satisfied", "multiplicity_divides_u"):
            if not rep.notes[key]:
                bad.append(f"{label}: {key}")
        if rep.notes["u_gl_model"] != rep.n:
            bad.append(f"{label}: u_gl_model")
    else:
        if not rep.bound_value_equalled:
            bad.append(f"{label}: bound not attained")
        if rep.notes.get("char_count_attained") is False:
            bad.append(f"{label}: character count")
    return bad


def _example_row(rep: sharpness.ExampleReport) -> dict:
    return {"example": rep.example_id, "n": rep.n, "abelian_dim": rep.abelian_dim,
            "mt_rank": rep.mt_rank, "bound_value_equalled": rep.bound_value_equalled,
            "notes": rep.notes}


def _verify_examples(top: int) -> tuple[dict, list[str]]:
    reports = _example_reports("all", top)
    failures = [f for rep in reports for f in _example_failures(rep)]
    return {"checked": len(reports), "failures": failures,
            "examples": [_example_row(r) for r in reports]}, failures


def cmd_verify(args) -> Outcome:
    top = VERIFY_DEFAULT_MAX[args.kind] if args.max is None else args.max
    if top < 1:
        raise InputError("--max must be positive")
    runner = {
        "landau-oracle": _verify_landau_oracle,
        "sandwich": lambda m: _verify_sweep(landau.sandwich_check, 1, m),
        "massias": lambda m: _verify_sweep(landau.massias_check, 2, m),
        "u-vs-g1": _verify_u_vs_g1,
        "char-count": _verify_char_count,
        "examples": _verify_examples,
    }[args.kind]
    results, failures = runner(top)
    lines = [f"verify {args.kind} up to {top}: "
             + ("all checks passed" if not failures else f"{len(failures)} failure(s)")]
    lines += [f"  FAIL {f}" for f in failures]
    return Outcome("verify", {"kind": args.kind, "max": top}, results,
                   VIOLATION if failures else OK, lines)


def cmd_examples(args) -> Outcome:
    top = 10 if args.max is None else args.max
    if top < 1:
        raise InputError("--max must be positive")
    reports = _example_reports(args.kind, top)
    failures = [f for rep in reports for f in _example_failures(rep)]
    rows = [[r.example_id, r.n, r.abelian_dim, r.mt_rank, r.bound_value_equalled] for r in reports]
    lines = _table(["example", "n", "dim A", "rank", "bound met"], rows)
    return Outcome("examples", {"kind": args.kind, "max": top},
                   {"examples": [_example_row(r) for r in reports]},
                   VIOLATION if failures else OK, lines)


# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress the human-readable output")

    parser = _Parser(prog="mtrank", parents=[common],
                     description="Rank bounds for Mumford-Tate groups of abelian varieties.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("landau", parents=[common], help="Landau's function g or g1")
    p.add_argument("kind", choices=["g", "g1"])
    p.add_argument("n", type=int)

    p = sub.add_parser("alpha", parents=[common], help="alpha(n) over a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--envelope", action="store_true")

    p = sub.add_parser("bound", parents=[common], help="minimal rank for a dimension")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--commutative", type=int, metavar="G")
    grp.add_argument("--general", type=int, metavar="G")
    grp.add_argument("--product", metavar="G1,G2,...")
    grp.add_argument("--triple", type=int, nargs=3, metavar=("RANK", "U", "DIM"))

    p = sub.add_parser("exponent", parents=[common], help="division-field growth exponent")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)

    p = sub.add_parser("rootsys", parents=[common], help="root system data")
    p.add_argument("action", choices=["cartan", "fundamental-group", "minuscule", "orbit"])
    p.add_argument("type")
    p.add_argument("--weight", type=int, metavar="K",
                   help="orbit of the K-th fundamental weight (default: all minuscule ones)")

    sub.add_parser("snf", parents=[common], help="Smith invariants of a JSON matrix on stdin")

    p = sub.add_parser("verify", parents=[common], help="verification sweeps")
    p.add_argument("kind", choices=list(VERIFY_DEFAULT_MAX))
    p.add_argument("--max", type=int)

    p = sub.add_parser("examples", parents=[common], help="sharpness examples")
    p.add_argument("kind", choices=["cm", "spin", "sl2", "largemult", "all"])
    p.add_argument("--max", type=int)
    return parser


def run(argv: list[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None, stdin: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    want_json = "--json" in argv
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InputError as exc:
        print(exc, file=stderr)
        if want_json:
            _emit_json(Outcome("", {"argv": argv}, {"message": str(exc)}, ERROR), stdout)
        return EXIT_CODES[ERROR]

    handlers = {"landau": cmd_landau, "alpha": cmd_alpha, "bound": cmd_bound,
                "exponent": cmd_exponent, "rootsys": cmd_rootsys,
                "snf": lambda a: cmd_snf(a, stdin), "verify": cmd_verify,
                "examples": cmd_examples}
    try:
        outcome = handlers[args.command](args)
    except (ValueError, TypeError, OverflowError) as exc:
        print(f"mtrank {args.command}: {exc}", file=stderr)
        outcome = Outcome(args.command, {"argv": argv}, {"message": str(exc)}, ERROR)
        if getattr(args, "json", False):
            _emit_json(outcome, stdout)
        return EXIT_CODES[ERROR]

    if getattr(args, "json", False):
        _emit_json(outcome, stdout)
    elif not getattr(args, "quiet", False):
        for line in outcome.lines:
            print(line, file=stdout)
    return EXIT_CODES[outcome.status]


def _emit_json(outcome: Outcome, stream: TextIO) -> None:
    record = {"command": outcome.command, "inputs": to_jsonable(outcome.inputs),
              "results": to_jsonable(outcome.results), "status": outcome.status}
    stream.write(json.dumps(record, sort_keys=True, indent=2) + "\n")


def main() -> None:
    sys.exit(run())
