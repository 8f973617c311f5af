"""Command-line surface.

Every subcommand emits a single JSON report (sorted keys, scalar matrix
entries as strings) carrying the schema version, field, cutoff and seed, so
identical invocations produce byte-identical output.

Inputs are algebra files (JSON, bound-quiver or structure-constants form),
``-`` for stdin, ``example:<id>`` for a catalogue example, or
``family:<name>`` combined with the construction flags ``--n/--parts/--m/--id``.

Exit codes: 0 success (including ``hypothesis-not-met``), 1 a verified
property failed, 2 usage or input error, 3 an inconclusive verdict was
encountered.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import config
from .errors import StratikitError
from .families import JordanType, centraliser_record, catalogue_example, catalogue
from .fields import field_from_token, default_field
from .homology import (
    DEFAULT_CUTOFF,
    dominant_dimension,
    global_dimension,
    gorenstein_dimensions,
)
from .io import canonical_json, dump_algebra, dump_record, load_algebra
from .modules import is_isomorphic
from .strat import (
    characteristic_tilting,
    classify,
    ringel_dual,
    standard_family,
)
from .verify import (
    PROPERTIES,
    _radical_layer_dims,
    invariant_isomorphic,
    verify_property,
)

USAGE_ERROR = 2


# -- plumbing -----------------------------------------------------------------


def _add_run_flags(parser):
    parser.add_argument("--field", default=None, metavar="F",
                        help='working field: "Q", "F101" or a prime (default F32003)')
    parser.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF,
                        help="homological search depth (default %(default)s)")
    parser.add_argument("--seed", type=int, default=None,
                        help="base seed for randomized searches "
                             "(default STRATIKIT_SEED or 0)")
    parser.add_argument("--witnesses", action="store_true",
                        help="keep witness details in the report")
    parser.add_argument("--output", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")


def _add_construction_flags(parser):
    parser.add_argument("--n", type=int, default=None,
                        help="nilpotency degree (cent) or block size (brauer)")
    parser.add_argument("--parts", default=None,
                        help="comma-separated chain lengths for cent, e.g. 1,3")
    parser.add_argument("--m", type=int, default=None, help="block size for schur")
    parser.add_argument("--id", default=None, help="catalogue example id")


def _field_of(args):
    return field_from_token(args.field) if args.field else default_field()


def _build_family(name, args, field):
    if name == "cent":
        if args.n is None or args.parts is None:
            raise StratikitError("family cent needs --n and --parts")
        parts = [int(p) for p in str(args.parts).split(",") if p != ""]
        return centraliser_record(JordanType(args.n, parts), field)
    if name == "schur":
        if args.m is None:
            raise StratikitError("family schur needs --m")
        return catalogue_example(f"schur-A{args.m}", field)
    if name == "brauer":
        if args.n is None:
            raise StratikitError("family brauer needs --n")
        return catalogue_example(f"brauer-B{args.n}", field)
    if name == "example":
        if args.id is None:
            raise StratikitError("family example needs --id")
        return catalogue_example(args.id, field)
    raise StratikitError(
        f"unknown family {name!r}; known: cent, schur, brauer, example"
    )


def _resolve_input(token, args, field):
    if token.startswith("example:"):
        return catalogue_example(token[len("example:"):], field)
    if token.startswith("family:"):
        return _build_family(token[len("family:"):], args, field)
    if token == "-":
        return load_algebra(sys.stdin.read())
    with open(token, "r", encoding="utf-8") as handle:
        return load_algebra(handle.read())


def _strip_witnesses(value):
    if isinstance(value, dict):
        return {
            k: _strip_witnesses(v)
            for k, v in value.items()
            if k not in ("detail", "witness", "profile", "witnesses")
        }
    if isinstance(value, list):
        return [_strip_witnesses(v) for v in value]
    return value


def _emit(report, args):
    if not args.witnesses:
        report = _strip_witnesses(report)
    text = canonical_json(report) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _base_report(command, record, args):
    return {
        "schema": 1,
        "command": command,
        "input": record.get("id", "ad-hoc"),
        "field": record["algebra"].field.to_json(),
        "cutoff": args.cutoff,
        "seed": config.get_seed(),
    }


def _order_of(record, args):
    if getattr(args, "order", None):
        return tuple(int(v) for v in str(args.order).split(","))
    return record.get("order")


_VERDICT_EXIT = {"pass": 0, "hypothesis-not-met": 0, "fail": 1, "inconclusive": 3}


def _aggregate_exit(verdicts):
    if any(v == "fail" for v in verdicts):
        return 1
    if any(v == "inconclusive" for v in verdicts):
        return 3
    return 0


# -- subcommands ----------------------------------------------------------------


def _cmd_info(args):
    field = _field_of(args)
    record = _resolve_input(args.input, args, field)
    algebra = record["algebra"]
    rep = classify(algebra, args.cutoff)
    right, left = gorenstein_dimensions(algebra, args.cutoff)
    report = _base_report("info", record, args)
    report.update(
        {
            "dimension": algebra.dim,
            "vertices": algebra.n_vertices,
            "cartan": [list(row) for row in algebra.cartan_matrix()],
            "radical_layers": list(_radical_layer_dims(algebra)),
            "flags": {k: v for k, v in rep.flags().items()},
            "gorenstein": [str(right), str(left)],
            "dominant": str(dominant_dimension(algebra, args.cutoff)),
            "global_dimension": str(global_dimension(algebra, args.cutoff)),
            "witnesses": {k: str(v) for k, v in rep.witnesses.items()},
        }
    )
    _emit(report, args)
    return 0


def _cmd_stratify(args):
    field = _field_of(args)
    record = _resolve_input(args.input, args, field)
    s = standard_family(record["algebra"], _order_of(record, args))
    chk = s.check()
    report = _base_report("stratify", record, args)
    report.update(
        {
            "order": list(s.order),
            "standardly_stratified": chk["standardly_stratified"],
            "properly_stratified": chk["properly_stratified"],
            "standard_dims": [d.dim for d in s.delta],
            "proper_standard_dims": [d.dim for d in s.delta_bar],
            "costandard_dims": [d.dim for d in s.nabla],
            "proper_costandard_dims": [d.dim for d in s.nabla_bar],
            "certificate": {"right": chk["right"], "left": chk["left"]},
        }
    )
    _emit(report, args)
    return 0


def _cmd_tilting(args):
    field = _field_of(args)
    record = _resolve_input(args.input, args, field)
    s = standard_family(record["algebra"], _order_of(record, args))
    t = characteristic_tilting(s, args.cutoff)
    same, _ = is_isomorphic(t.basic_tilting, t.basic_cotilting)
    right, left = gorenstein_dimensions(record["algebra"], args.cutoff)
    gorenstein = right.is_exact and left.is_exact
    report = _base_report("tilting", record, args)
    report.update(
        {
            "order": list(s.order),
            "tilting_dims": [x.dim for x in t.tilt],
            "cotilting_dims": [x.dim for x in t.cotilt],
            "pd_tilting": str(t.pd_tilting),
            "tilting_equals_cotilting": same,
            "gorenstein": [str(right), str(left)],
            "gorenstein_cross_check": None if same is None else same == gorenstein,
        }
    )
    _emit(report, args)
    return 0


def _cmd_ringel_dual(args):
    field = _field_of(args)
    record = _resolve_input(args.input, args, field)
    s = standard_family(record["algebra"], _order_of(record, args))
    dual = ringel_dual(s)
    same, detail = invariant_isomorphic(record["algebra"], dual, args.cutoff)
    report = _base_report("ringel-dual", record, args)
    report.update(
        {
            "order": list(s.order),
            "dimension": dual.dim,
            "dual": dump_algebra(dual, ident=f"{record.get('id', 'ad-hoc')}-ringel-dual"),
            "invariant_isomorphic_to_input": same,
            "detail": detail,
        }
    )
    _emit(report, args)
    return 0


def _cmd_verify(args):
    field = _field_of(args)
    record = _resolve_input(args.input, args, field)
    transcript = verify_property(args.property, record, cutoff=args.cutoff)
    _emit(transcript, args)
    return _VERDICT_EXIT[transcript["verdict"]]


def _cmd_family(args):
    field = _field_of(args)
    record = _build_family(args.which, args, field)
    _emit(dump_record(record), args)
    return 0


def _cmd_suite(args):
    field = _field_of(args)
    wanted_ids = set(args.examples.split(",")) if args.examples else None
    wanted_props = (
        tuple(p.strip().upper().replace("-", "_") for p in args.properties.split(","))
        if args.properties
        else PROPERTIES
    )
    results = []
    transcripts = []
    for record in catalogue(field):
        if wanted_ids and record["id"] not in wanted_ids:
            continue
        for prop in wanted_props:
            transcript = verify_property(prop, record, cutoff=args.cutoff)
            transcripts.append(transcript)
            results.append(
                {
                    "input": record["id"],
                    "property": prop,
                    "verdict": transcript["verdict"],
                }
            )
    summary = {"pass": 0, "fail": 0, "hypothesis-not-met": 0, "inconclusive": 0}
    for row in results:
        summary[row["verdict"]] += 1
    report = {
        "schema": 1,
        "command": "suite",
        "field": field.to_json(),
        "cutoff": args.cutoff,
        "seed": config.get_seed(),
        "results": results,
        "summary": summary,
    }
    if args.witnesses:
        report["transcripts"] = transcripts
    _emit(report, args)
    return _aggregate_exit([row["verdict"] for row in results])


# -- entry point -----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stratikit",
        description="Stratification and homological invariants of "
                    "finite-dimensional algebras, with machine-checked "
                    "verification transcripts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, with_input=True, with_order=False):
        p = sub.add_parser(name, help=help_text)
        _add_run_flags(p)
        _add_construction_flags(p)
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="algebra file, '-', example:<id> or family:<name>")
        if with_order:
            p.add_argument("--order", default=None,
                           help="stratification order, e.g. 1,0")
        p.set_defaults(func=func)
        return p

    command("info", _cmd_info,
            "dimension, Cartan matrix, radical layers, classification flags")
    command("stratify", _cmd_stratify,
            "standard-module family and stratification certificate",
            with_order=True)
    command("tilting", _cmd_tilting,
            "characteristic tilting data and the Gorenstein cross-check",
            with_order=True)
    command("ringel-dual", _cmd_ringel_dual,
            "serialized Ringel dual plus invariant comparison",
            with_order=True)

    p = sub.add_parser("verify", help="run one verified property")
    _add_run_flags(p)
    _add_construction_flags(p)
    p.add_argument("property", help=f"one of {', '.join(PROPERTIES)}")
    p.add_argument("input", nargs="?", default="-",
                   help="algebra file, '-', example:<id> or family:<name>")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("family", help="construct a family member and emit its JSON")
    _add_run_flags(p)
    _add_construction_flags(p)
    p.add_argument("which", choices=("cent", "schur", "brauer", "example"))
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("suite", help="run the full verification battery")
    _add_run_flags(p)
    _add_construction_flags(p)
    p.add_argument("--examples", default=None,
                   help="comma-separated example ids (default: whole catalogue)")
    p.add_argument("--properties", default=None,
                   help="comma-separated property ids (default: all)")
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("STRATIKIT_SEED", "0"))
    config.set_seed(seed)
    try:
        return args.func(args)
    except StratikitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    finally:
        config.set_seed(0)


if __name__ == "__main__":
    sys.exit(main())
