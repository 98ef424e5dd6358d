"""Command-line interface for basis computation and irreducibility tests.

Six subcommands share one executable:

* ``dcb``        -- print the corrected basis of one weight class
* ``decompose``  -- expand a product of two basis vectors over the basis
* ``irred``      -- decide irreducibility of one induction product
* ``scan``       -- tabulate irreducibility over a range of shifts
* ``verify``     -- run one of the property-verification suites
* ``minor``      -- straighten a quantum minor and confirm its basis label

Every command accepts ``--json``.  Exit codes: 0 on success, 1 when a
property or cross-check fails, 2 on usage errors (including size-guard
refusals).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .algebra import minor_multisegment, quantum_minor, render_combination
from .canonical import (
    BasisCache,
    DcbTable,
    dcb_table,
    expand_in_dcb,
    load_table,
    membership_up_to_power,
)
from .checks import SUITES
from .criteria import irreducible_pair, main1_witness, parse_partition
from .criteria import evaluation_multisegment
from .laurent import LaurentPoly
from .multisegment import (
    Multisegment,
    enumerate_by_weight,
    parse_multisegment,
    parse_weight,
)

OK, PROPERTY_FAILURE, USAGE_ERROR = 0, 1, 2


class _UsageError(Exception):
    """Bad input detected after argparse (grammar or size guard)."""


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise _UsageError(f"range {text!r} must look like lo:hi")
    try:
        bounds = int(lo), int(hi)
    except ValueError as exc:
        raise _UsageError(f"range {text!r} must be integer:integer") from exc
    if bounds[0] > bounds[1]:
        raise _UsageError(f"empty range {text!r}")
    return bounds


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _UsageError(f"expected comma-separated integers, got {text!r}"
                          ) from exc


def _coef_json(c: LaurentPoly) -> list[list[int]]:
    return [list(pair) for pair in c.items()]


def _make_cache(args: argparse.Namespace) -> BasisCache:
    return BasisCache(max_labels=args.max_class_size)


def _ordered_support(expansion: dict[Multisegment, LaurentPoly],
                     cap: int) -> list[Multisegment]:
    """Support labels in class enumeration order (key order on overflow)."""
    if not expansion:
        return []
    weight = next(iter(expansion)).weight()
    labels = enumerate_by_weight(weight)
    if len(labels) <= cap:
        return [m for m in labels if m in expansion]
    return sorted(expansion, key=Multisegment.extension_key)


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------


def cmd_dcb(args: argparse.Namespace) -> int:
    weight = parse_weight(args.weight)
    labels = enumerate_by_weight(weight)
    if len(labels) > args.max_class_size:
        raise _UsageError(
            f"weight class {weight} has {len(labels)} labels, above the "
            f"cap of {args.max_class_size}; raise --max-class-size")
    table: DcbTable | None = None
    cache_path: Path | None = None
    if args.cache_dir is not None:
        directory = Path(args.cache_dir)
        directory.mkdir(parents=True, exist_ok=True)
        stem = str(weight).replace(":", "-").replace(",", "_")
        cache_path = directory / f"weight_{stem}.json"
        if cache_path.exists():
            table = load_table(cache_path)
            if table.weight != weight or tuple(table.labels) != labels:
                raise _UsageError(
                    f"cache file {cache_path} does not match weight {weight}")
    if table is None:
        table = dcb_table(weight, _make_cache(args))
        if cache_path is not None:
            cache_path.write_text(json.dumps(table.to_json_obj()))
    lines = [
        f"G*({m}) = {render_combination(table.expansion(m).items(), 'E*')}"
        for m in table.labels
    ]
    _emit(args, table.to_json_obj(), "\n".join(lines))
    return OK


def cmd_decompose(args: argparse.Namespace) -> int:
    m = parse_multisegment(args.m)
    n = parse_multisegment(args.n)
    cache = _make_cache(args)
    product = cache.dual_canonical(m) * cache.dual_canonical(n)
    expansion = expand_in_dcb(product, cache)
    order = _ordered_support(expansion, args.max_class_size)
    simple = membership_up_to_power(product, cache) is not None
    rows = [(p, expansion[p]) for p in order]
    verdict = "SIMPLE" if simple else "NOT SIMPLE"
    lines = [f"G*({m}) * G*({n}) ="]
    lines += [f"  {c}  G*({p})   [multiplicity {c.at_one()}]" for p, c in rows]
    lines.append(verdict)
    payload = {
        "m": str(m),
        "n": str(n),
        "factors": [
            {"label": str(p), "coef": _coef_json(c),
             "multiplicity": c.at_one()}
            for p, c in rows
        ],
        "simple": simple,
    }
    _emit(args, payload, "\n".join(lines))
    return OK


def _pattern_text(witness: tuple[int, ...] | None) -> str:
    if witness is None:
        return ""
    return "pattern " + " < ".join(str(x) for x in witness)


def _algebraic_irreducible(alpha, a: int, beta, b: int,
                           cache: BasisCache) -> bool:
    product = (cache.dual_canonical(evaluation_multisegment(alpha, a))
               * cache.dual_canonical(evaluation_multisegment(beta, b)))
    return membership_up_to_power(product, cache) is not None


def cmd_irred(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    verdict = irreducible_pair(alpha, args.a, beta, args.b)
    witness = main1_witness(alpha, args.a, beta, args.b)
    payload = {
        "alpha": list(alpha.parts),
        "a": args.a,
        "beta": list(beta.parts),
        "b": args.b,
        "irreducible": verdict,
        "pattern": list(witness) if witness is not None else None,
    }
    text = "IRREDUCIBLE" if verdict else f"REDUCIBLE {_pattern_text(witness)}"
    if args.verify:
        algebraic = _algebraic_irreducible(
            alpha, args.a, beta, args.b, _make_cache(args))
        payload["verified"] = algebraic == verdict
        if algebraic != verdict:
            _emit(args, payload, text)
            print(
                f"verification failed: separation says {verdict}, "
                f"membership says {algebraic}", file=sys.stderr)
            return PROPERTY_FAILURE
    _emit(args, payload, text)
    return OK


def cmd_scan(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    lo, hi = _parse_range(args.range)
    cache = _make_cache(args) if args.verify else None
    rows = []
    disagreements = []
    for shift in range(lo, hi + 1):
        verdict = irreducible_pair(alpha, 0, beta, shift)
        witness = main1_witness(alpha, 0, beta, shift)
        row = {
            "shift": shift,
            "irreducible": verdict,
            "pattern": list(witness) if witness is not None else None,
        }
        if cache is not None:
            algebraic = _algebraic_irreducible(alpha, 0, beta, shift, cache)
            row["verified"] = algebraic == verdict
            if algebraic != verdict:
                disagreements.append(shift)
        rows.append(row)
    reducible = [row["shift"] for row in rows if not row["irreducible"]]
    lines = []
    for row in rows:
        mark = "IRREDUCIBLE" if row["irreducible"] else "REDUCIBLE"
        lines.append(f"b-a = {row['shift']:+d}: {mark}")
    lines.append("reducible shifts: "
                 + (", ".join(str(s) for s in reducible) if reducible
                    else "none"))
    payload = {
        "alpha": list(alpha.parts),
        "beta": list(beta.parts),
        "range": [lo, hi],
        "verdicts": rows,
        "reducible_shifts": reducible,
    }
    _emit(args, payload, "\n".join(lines))
    if disagreements:
        print(
            f"verification failed at shifts {disagreements}", file=sys.stderr)
        return PROPERTY_FAILURE
    return OK


_SUITE_DEFAULTS = {
    "eqrei": {"max_degree": 4},
    "positivity": {"max_degree": 4},
    "triangular": {"max_degree": 5},
    "oracle": {"max_part_sum": 2, "shift_range": (-4, 4)},
    "minors": {"index_range": (1, 4), "max_cols": None},
    "frank": {"samples": 40, "max_factors": 3, "max_entry": 6, "seed": 0},
    "hooks": {"max_size": 6, "max_shift": 12},
}


def _suite_kwargs(args: argparse.Namespace) -> dict:
    kwargs = dict(_SUITE_DEFAULTS[args.suite])
    flags = {
        "max_degree": args.max_degree,
        "max_part_sum": args.max_part_sum,
        "shift_range": (_parse_range(args.shift_range)
                        if args.shift_range else None),
        "index_range": (_parse_range(args.index_range)
                        if args.index_range else None),
        "max_cols": args.max_cols,
        "samples": args.samples,
        "max_factors": args.max_factors,
        "max_entry": args.max_entry,
        "seed": args.seed,
        "max_size": args.max_part_sum,
        "max_shift": (abs(_parse_range(args.shift_range)[1])
                      if args.shift_range else None),
    }
    if args.suite == "minors" and args.max_n is not None:
        kwargs["index_range"] = (1, args.max_n)
        kwargs["max_cols"] = None
    for name in kwargs:
        if flags.get(name) is not None:
            kwargs[name] = flags[name]
    return kwargs


def cmd_verify(args: argparse.Namespace) -> int:
    suite = SUITES[args.suite]
    report = suite(**_suite_kwargs(args))
    payload = {
        "suite": report.name,
        "cases": report.cases,
        "ok": report.ok,
        "failures": report.failures,
    }
    lines = [report.summary()] + [f"  {f}" for f in report.failures]
    _emit(args, payload, "\n".join(lines))
    return OK if report.ok else PROPERTY_FAILURE


def cmd_minor(args: argparse.Namespace) -> int:
    rows = _parse_int_list(args.rows)
    cols = _parse_int_list(args.cols)
    if len(rows) != len(cols):
        raise _UsageError("row and column index lists must have equal length")
    if sorted(rows) != list(rows) or len(set(rows)) != len(rows):
        raise _UsageError("row indices must be strictly increasing")
    if sorted(cols) != list(cols) or len(set(cols)) != len(cols):
        raise _UsageError("column indices must be strictly increasing")
    minor = quantum_minor(rows, cols)
    if not minor:
        payload = {"rows": list(rows), "cols": list(cols), "zero": True}
        _emit(args, payload, "0")
        return OK
    label = minor_multisegment(rows, cols)
    confirmed = minor == _make_cache(args).dual_canonical(label)
    payload = {
        "rows": list(rows),
        "cols": list(cols),
        "zero": False,
        "expansion": [
            {"label": str(p), "coef": _coef_json(c)}
            for p, c in minor.items()
        ],
        "label": str(label),
        "confirmed": confirmed,
    }
    text = "\n".join([
        f"minor = {render_combination(minor.items(), 'E*')}",
        f"label: {label}",
        f"confirmed equal to G*({label}): {'yes' if confirmed else 'NO'}",
    ])
    _emit(args, payload, text)
    return OK if confirmed else PROPERTY_FAILURE


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcbasis",
        description="Exact dual canonical basis vectors and irreducibility "
                    "criteria for induction products.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true",
                       help="emit JSON instead of text")
        p.add_argument("--max-class-size", type=int, default=5000,
                       metavar="N",
                       help="refuse weight classes larger than N "
                            "(default 5000)")

    p = sub.add_parser("dcb", help="print the basis of one weight class")
    p.add_argument("--weight", required=True, metavar="POS:CNT,...",
                   help="weight as position:count pairs, e.g. 0:1,1:2,2:1")
    p.add_argument("--cache-dir", metavar="DIR",
                   help="directory of per-weight JSON tables to reuse")
    add_common(p)
    p.set_defaults(func=cmd_dcb)

    p = sub.add_parser("decompose",
                       help="expand a product of two basis vectors")
    p.add_argument("--m", required=True, help='first label, e.g. "[1]+[2,3]"')
    p.add_argument("--n", required=True, help="second label")
    add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("irred", help="decide one induction product")
    p.add_argument("--alpha", required=True, help="partition, e.g. 4,2")
    p.add_argument("--a", type=int, default=0, help="first shift (default 0)")
    p.add_argument("--beta", required=True, help="partition, e.g. 2,2,1")
    p.add_argument("--b", type=int, default=0,
                   help="second shift (default 0)")
    p.add_argument("--verify", action="store_true",
                   help="re-derive the verdict through the algebraic oracle")
    add_common(p)
    p.set_defaults(func=cmd_irred)

    p = sub.add_parser("scan", help="tabulate verdicts over a shift range")
    p.add_argument("--alpha", required=True, help="partition, e.g. 4,2")
    p.add_argument("--beta", required=True, help="partition, e.g. 2,2,1")
    p.add_argument("--range", required=True, metavar="LO:HI",
                   help="closed range of b-a values")
    p.add_argument("--verify", action="store_true",
                   help="re-derive every verdict through the algebraic "
                        "oracle")
    add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run a property-verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES),
                   help="which suite to run")
    p.add_argument("--max-degree", type=int, metavar="N",
                   help="degree bound (eqrei, positivity, triangular)")
    p.add_argument("--max-part-sum", type=int, metavar="N",
                   help="partition size bound (oracle, hooks)")
    p.add_argument("--shift-range", metavar="LO:HI",
                   help="shift range (oracle, hooks)")
    p.add_argument("--max-n", type=int, metavar="N",
                   help="index window [1, N] (minors)")
    p.add_argument("--index-range", metavar="LO:HI",
                   help="explicit index window (minors)")
    p.add_argument("--max-cols", type=int, metavar="K",
                   help="column count bound (minors)")
    p.add_argument("--samples", type=int, metavar="K",
                   help="number of random families (frank)")
    p.add_argument("--max-factors", type=int, metavar="R",
                   help="factors per family (frank)")
    p.add_argument("--max-entry", type=int, metavar="N",
                   help="largest column index (frank)")
    p.add_argument("--seed", type=int, metavar="S",
                   help="random seed (frank)")
    p.add_argument("--json", action="store_true",
                   help="emit JSON instead of text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minor", help="straighten one quantum minor")
    p.add_argument("--rows", required=True, metavar="I1,I2,...",
                   help="increasing row indices")
    p.add_argument("--cols", required=True, metavar="J1,J2,...",
                   help="increasing column indices")
    add_common(p)
    p.set_defaults(func=cmd_minor)

    return parser


_DASH_VALUE_FLAGS = {
    "--range": re.compile(r"-?\d+:-?\d+$"),
    "--shift-range": re.compile(r"-?\d+:-?\d+$"),
    "--index-range": re.compile(r"-?\d+:-?\d+$"),
    "--rows": re.compile(r"-?\d+(,-?\d+)*$"),
    "--cols": re.compile(r"-?\d+(,-?\d+)*$"),
}


def _glue_dash_values(argv: list[str]) -> list[str]:
    """Join flags with values that start with '-' so argparse accepts them."""
    out: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        pattern = _DASH_VALUE_FLAGS.get(token)
        if (pattern is not None and i + 1 < len(argv)
                and argv[i + 1].startswith("-")
                and pattern.fullmatch(argv[i + 1])):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_glue_dash_values(list(argv)))
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
