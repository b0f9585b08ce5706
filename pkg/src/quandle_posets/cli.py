"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .audit import DIHEDRAL_AUDIT_CAP, QUANDLE_AUDIT_CAP, run_audit
from .continuity import enumerate_left_orders, enumerate_right_orders, normalize_dedup
from .dihedral import dihedral_report
from .errors import InputError, OrderTooLarge, ParseError, QuandleAxiomError, QuandlePosetError
from .poset import transitive_reduction
from .quandle import (
    Quandle,
    alexander,
    dihedral,
    enumerate_quandles,
    is_connected,
    is_latin,
    orbits,
    parse_quandle_json,
    parse_quandle_text,
    trivial,
)
from .reproduce import reproduce_tables
from .tables import printed_quandle

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2

DEFAULT_MAX_ORDER = 16


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    builtin: str | None = None
    side: str = "right"
    dedup: str = "none"
    max_order: int | None = None
    format: str = "text"
    out: str | None = None


def parse_builtin(spec: str) -> Quandle:
    """``dihedral:m``, ``trivial:n``, ``alexander:n:t``, ``table:T:I`` or ``enum:n:k``."""
    name, *args = spec.split(":")
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise InputError(f"builtin {spec!r}: arguments must be integers") from None
    arity = {"dihedral": 1, "trivial": 1, "alexander": 2, "table": 2, "enum": 2}
    if name not in arity:
        raise InputError(f"unknown builtin {name!r}; expected one of {', '.join(arity)}")
    if len(nums) != arity[name]:
        raise InputError(f"builtin {name} takes {arity[name]} argument(s), got {len(nums)}")
    if name in ("dihedral", "trivial", "alexander") and nums[0] < 1:
        raise InputError(f"builtin {spec!r}: order must be positive")
    if name == "dihedral":
        return dihedral(nums[0])
    if name == "trivial":
        return trivial(nums[0])
    if name == "alexander":
        return alexander(*nums)
    if name == "table":
        try:
            return printed_quandle(*nums).quandle()
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    n, k = nums
    if n < 1:
        raise InputError(f"builtin {spec!r}: order must be positive")
    qs = enumerate_quandles(n)
    if not 1 <= k <= len(qs):
        raise InputError(f"there are {len(qs)} quandles of order {n}; index {k} is out of range")
    return qs[k - 1]


def load_quandle(cfg: RunConfig) -> Quandle:
    if cfg.input and cfg.builtin:
        raise InputError("give either --input or --builtin, not both")
    if cfg.builtin:
        return parse_builtin(cfg.builtin)
    if not cfg.input:
        raise InputError("a quandle is required: use --input PATH or --builtin SPEC")
    path = Path(cfg.input)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return parse_quandle_json(text, name=path.stem)
    return parse_quandle_text(text, name=path.stem)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _orbit_text(q: Quandle) -> str:
    return ",".join("{" + ",".join(map(str, b)) + "}" for b in orbits(q).orbits)


def cmd_validate(cfg: RunConfig) -> int:
    try:
        q = load_quandle(cfg)
    except QuandleAxiomError as exc:
        if cfg.format == "json":
            _emit(cfg, _dump({"valid": False, "axiom": exc.axiom, "witness": list(exc.witness),
                              "error": str(exc)}))
        else:
            _emit(cfg, f"invalid: {exc}\n")
        return EXIT_INPUT
    connected, latin = is_connected(q), is_latin(q)
    if cfg.format == "json":
        _emit(cfg, _dump({"valid": True, "n": q.n, "name": q.name,
                          "orbits": [list(b) for b in orbits(q).orbits],
                          "connected": connected, "latin": latin}))
    else:
        _emit(cfg, f"valid, orbits {_orbit_text(q)}, connected={str(connected).lower()}, "
                   f"latin={str(latin).lower()}\n")
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    q = load_quandle(cfg)
    cap = DEFAULT_MAX_ORDER if cfg.max_order is None else cfg.max_order
    if q.n > cap:
        raise OrderTooLarge(q.n, cap, "enumeration")
    sides = ("right", "left") if cfg.side == "both" else (cfg.side,)
    reports = []
    for side in sides:
        if side == "right":
            reports.append(enumerate_right_orders(q, cfg.dedup))
        else:
            reports.append(enumerate_left_orders(q, cfg.dedup, cap=min(cap, 6)))
    if cfg.format == "json":
        body = reports[0].to_json() if len(reports) == 1 else {r.side: r.to_json() for r in reports}
        _emit(cfg, _dump(body))
    elif cfg.format == "dot":
        graphs = []
        for r in reports:
            for k, o in enumerate(r.orders, 1):
                graphs.append(transitive_reduction(o).to_dot(f"{r.side}_{k}"))
        _emit(cfg, "".join(graphs))
    else:
        _emit(cfg, "".join(r.to_text() for r in reports))
    return EXIT_OK


def cmd_reproduce_tables(cfg: RunConfig) -> int:
    report = reproduce_tables()
    _emit(cfg, _dump(report.to_json()) if cfg.format == "json" else report.to_text())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_verify(cfg: RunConfig) -> int:
    extra = []
    if cfg.input or cfg.builtin:
        extra.append(load_quandle(cfg))
    cap = QUANDLE_AUDIT_CAP if cfg.max_order is None else cfg.max_order
    dihedral_n = DIHEDRAL_AUDIT_CAP if cap >= QUANDLE_AUDIT_CAP else max(cap, 2)
    report = run_audit(max_order=cap, extra=extra, dihedral_n=dihedral_n)
    _emit(cfg, _dump(report.to_json()) if cfg.format == "json" else report.to_text())
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_dihedral(cfg: RunConfig) -> int:
    cap = DIHEDRAL_AUDIT_CAP if cfg.max_order is None else cfg.max_order
    reports = [dihedral_report(n, cap=max(cap, 2)) for n in range(2, cap + 1)]
    if cfg.format == "json":
        _emit(cfg, _dump([r.to_json() for r in reports]))
    elif cfg.format == "dot":
        _emit(cfg, "".join(transitive_reduction(c.order).to_dot(f"R{2 * r.n}_chi{c.x}")
                           for r in reports for c in r.chi))
    else:
        _emit(cfg, "".join(r.to_text() for r in reports))
    return EXIT_OK if all(r.formula_matches for r in reports) else EXIT_MISMATCH


COMMANDS = {
    "validate": cmd_validate,
    "enumerate": cmd_enumerate,
    "reproduce-tables": cmd_reproduce_tables,
    "verify": cmd_verify,
    "dihedral": cmd_dihedral,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quandle-posets",
                                     description="Continuous orders on finite quandles.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, quandle=True, formats=("text", "json")):
        if quandle:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--input", metavar="PATH", help="quandle file (text or JSON)")
            src.add_argument("--builtin", metavar="SPEC",
                             help="dihedral:m, trivial:n, alexander:n:t, table:T:I or enum:n:k")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        return p

    common(sub.add_parser("validate", help="check the quandle axioms and report orbits"))
    p = common(sub.add_parser("enumerate", help="list continuous orders"), formats=("text", "json", "dot"))
    p.add_argument("--side", choices=("right", "left", "both"), default="right")
    p.add_argument("--dedup", choices=("none", "iso", "iso-dual", "quandle-aut"), default="none")
    p.add_argument("--max-order", type=int, metavar="N", help=f"refuse quandles larger than N "
                                                              f"(default {DEFAULT_MAX_ORDER})")
    common(sub.add_parser("reproduce-tables", help="diff recomputed tables against the printed ones"),
           quandle=False)
    p = common(sub.add_parser("verify", help="run the property suite"))
    p.add_argument("--max-order", type=int, metavar="N",
                   help=f"largest enumerated quandle order (default {QUANDLE_AUDIT_CAP})")
    p = common(sub.add_parser("dihedral", help="classify the chi orders on R_2n"), quandle=False,
               formats=("text", "json", "dot"))
    p.add_argument("--max-order", type=int, metavar="N",
                   help=f"largest n (default {DIHEDRAL_AUDIT_CAP})")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        input=getattr(args, "input", None),
        builtin=getattr(args, "builtin", None),
        side=getattr(args, "side", "right"),
        dedup=normalize_dedup(getattr(args, "dedup", "none")),
        max_order=getattr(args, "max_order", None),
        format=args.format,
        out=args.out,
    )
    try:
        return COMMANDS[cfg.command](cfg)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except QuandleAxiomError as exc:
        print(f"invalid quandle: {exc}", file=sys.stderr)
    except QuandlePosetError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
