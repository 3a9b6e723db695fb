"""Command-line front end.

Verbs: validate, sublocales, classify, rmt, suite, search, convert,
construct.  Exit codes: 0 on success or all-pass, 1 on check failures,
2 on input errors.  Machine output is line-oriented and byte-stable for
identical inputs and seeds; timing never reaches stdout.
"""

from __future__ import annotations

import argparse
import sys

from . import bilocales as bl
from . import bispaces as bsp
from . import constructions as con
from . import formats
from . import kernel
from . import sublocales as sl
from .bilocales import Bilocale
from .bispaces import Bispace
from .errors import BilocError, ParseError, UnknownCheckId, UnknownVerb
from .lattice import FiniteLattice
from .suite import (Bounds, get_check, run_property_suite, run_sweep,
                    search_counterexample)


def render_sublocale(lat, mask):
    """Members plus a principal name (c(x), o(x), B(L), O, L) when one exists."""
    members = "{%s}" % ", ".join(lat.names[i] for i in kernel.bit_indices(mask))
    if mask == 1 << lat.top:
        return f"{members} = O"
    if mask == lat.full_mask:
        return f"{members} = L"
    for a in range(lat.n):
        if lat.up[a] == mask:
            return f"{members} = c({lat.names[a]})"
    if mask == lat.bool_mask:
        return f"{members} = B(L)"
    for a in range(lat.n):
        if lat.open_masks[a] == mask:
            return f"{members} = o({lat.names[a]})"
    return members


def _load(path, cap):
    try:
        return formats.parse_file(path, max_elements=cap)
    except FileNotFoundError:
        raise ParseError(0, f"no such file: {path}")


def _pick(doc, kinds, name, path):
    if name is not None:
        if name not in doc.items:
            raise ParseError(0, f"no structure named {name!r} in {path}")
        return doc[name]
    value = doc.last(kinds)
    if value is None:
        raise ParseError(0, f"no {'/'.join(kinds)} block in {path}")
    return value


def _as_lattice(structure):
    return structure.total if isinstance(structure, Bilocale) else structure


def cmd_validate(args):
    doc = _load(args.file, args.cap)
    for kind, name, value in doc.structures():
        if isinstance(value, FiniteLattice):
            detail = f"frame={value.is_frame} elements={value.n}"
        elif isinstance(value, Bilocale):
            flags = bl.classify_bilocale(value)
            detail = (f"elements={value.total.n} "
                      f"balanced={flags.balanced} symmetric={flags.symmetric} "
                      f"boolean={flags.boolean}")
        elif isinstance(value, Bispace):
            detail = (f"points={value.n} opens={len(value.tau)} "
                      f"sup_td={bsp.is_sup_td(value)}")
        else:
            detail = "valid"
        print(f"{kind} {name}: {detail}")
    return 0


def cmd_sublocales(args):
    doc = _load(args.file, args.cap)
    structure = _pick(doc, ("lattice", "bilocale"), args.name, args.file)
    lat = _as_lattice(structure)
    subs = sl.enumerate_sublocales(lat, "generated")
    if args.oracle:
        brute = sl.enumerate_sublocales(lat, "brute")
        agree = [s.mask for s in subs] == [s.mask for s in brute]
        print(f"oracle: generated={len(subs)} brute={len(brute)} "
              f"{'agree' if agree else 'DISAGREE'}")
        if not agree:
            return 1
    print(f"{lat.name}: {len(subs)} sublocales")
    for s in subs:
        print("  " + render_sublocale(lat, s.mask))
    return 0


def _require_bilocale(doc, args):
    structure = _pick(doc, ("bilocale",), args.name, args.file)
    return structure


def cmd_classify(args):
    doc = _load(args.file, args.cap)
    b = _require_bilocale(doc, args)
    lat = b.total
    pair = (args.i, args.j)
    bl.check_pair(pair)
    flags = bl.classify_bilocale(b)
    print(f"{b.name}: balanced={flags.balanced} symmetric={flags.symmetric} "
          f"boolean={flags.boolean}")
    groups = [
        ("(i,j)-nowhere dense", bl.nd_masks(b, pair)),
        ("clopen (i,j)-nowhere dense", bl.nd_masks(b, pair, clopen=True)),
        ("(i,j)-remote", bl.remote_masks(b, pair, weak=False)),
        ("weakly (i,j)-remote", bl.remote_masks(b, pair, weak=True)),
    ]
    for label, masks in groups:
        print(f"{label} (i={args.i}, j={args.j}): {len(masks)}")
        for m in masks:
            print("  " + render_sublocale(lat, m))
    return 0


def cmd_rmt(args):
    doc = _load(args.file, args.cap)
    b = _require_bilocale(doc, args)
    pair = (args.i, args.j)
    bl.check_pair(pair)
    mask = bl.rmt_mask(b, pair, args.variant)
    print(render_sublocale(b.total, mask))
    return 0


def _emit_report(report, fmt):
    if fmt == "machine":
        for line in report.machine_lines():
            print(line)
        return
    for o in report.outcomes:
        if o.verdict == "SKIP":
            status = f"skip ({o.reason})"
        elif o.verdict == "FAIL" and o.expected_fail:
            status = f"FAIL (expected) witness: {o.witness}"
        elif o.verdict == "FAIL":
            status = f"FAIL witness: {o.witness}"
        else:
            status = "pass"
        print(f"{o.check_id:40s} {status}")


def cmd_suite(args):
    if args.sweep:
        bounds = Bounds(max_poset_points=args.max_points,
                        max_bispace_points=min(args.max_points, 4))
        sweep = run_sweep(bounds)
        if args.format == "machine":
            for line in sweep.machine_lines():
                print(line)
        tally = sweep.tally()
        print(f"SWEEP structures={len(sweep.reports)} pass={tally['PASS']} "
              f"fail={tally['FAIL']} skip={tally['SKIP']}")
        bad = sweep.unexpected_failures()
        for o in bad[:20]:
            print(f"UNEXPECTED {o.check_id} {o.structure_id} {o.witness}")
        for cid in sweep.missing_expected_failures():
            print(f"MISSING-EXPECTED-FAILURE {cid}")
        return 0 if sweep.ok else 1
    if not args.file:
        raise UnknownVerb("suite needs a file or --sweep")
    doc = _load(args.file, args.cap)
    checks = "all" if not args.checks else args.checks.split(",")
    if checks != "all":
        for cid in checks:
            get_check(cid)
    exit_code = 0
    for kind, name, value in doc.structures():
        report = run_property_suite(value, checks)
        _emit_report(report, args.format)
        if report.unexpected_failures:
            exit_code = 1
    return exit_code


def cmd_search(args):
    get_check(args.prop)
    bounds = Bounds(max_poset_points=args.max_points,
                    max_bispace_points=min(args.max_points, 4),
                    max_lattice_elements=args.max_elems)
    cex = search_counterexample(args.prop, bounds, seed=args.seed,
                                exhaustive=args.exhaustive)
    if cex is None:
        print(f"no counterexample to {args.prop} within bounds")
        return 0
    print(f"counterexample to {args.prop} at {cex.structure_id}: {cex.witness}")
    sys.stdout.write(cex.structure_text)
    return 0


def cmd_convert(args):
    doc = _load(args.file, args.cap)
    space = _pick(doc, ("bispace",), args.name, args.file)
    b = bsp.to_bilocale(space)
    sys.stdout.write(formats.bilocale_to_text(b))
    return 0


def cmd_construct(args):
    doc = _load(args.file, args.cap)
    if args.what == "congruence":
        structure = _pick(doc, ("lattice", "bilocale"), args.name, args.file)
        built = con.congruence_bilocale(_as_lattice(structure))
    else:
        built = con.ideal_bilocale(_require_bilocale(doc, args))
    sys.stdout.write(formats.bilocale_to_text(built))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="biloc",
        description="finite bilocale workbench: classify sublocales and "
                    "check structural laws on desk-scale models")
    parser.add_argument("--format", choices=("human", "machine"),
                        default="human", help="report rendering")
    parser.add_argument("--cap", type=int, default=None,
                        help="override the lattice size cap")
    sub = parser.add_subparsers(dest="verb")

    p = sub.add_parser("validate", help="parse and validate every block")
    p.add_argument("file")

    p = sub.add_parser("sublocales", help="enumerate the sublocales")
    p.add_argument("file")
    p.add_argument("--name")
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force enumeration and compare")

    p = sub.add_parser("classify", help="list indexed nowhere dense and "
                                        "remote sublocales")
    p.add_argument("file")
    p.add_argument("--name")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)

    p = sub.add_parser("rmt", help="compute the Rmt sublocale")
    p.add_argument("file")
    p.add_argument("--name")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--variant", choices=("weak", "strong"), default="weak")

    p = sub.add_parser("suite", help="run the property checks")
    p.add_argument("file", nargs="?")
    p.add_argument("--checks", help="comma-separated check ids")
    p.add_argument("--sweep", action="store_true",
                   help="run over the generated structure universe")
    p.add_argument("--max-points", type=int, default=4)

    p = sub.add_parser("search", help="look for a counterexample")
    p.add_argument("--prop", required=True)
    p.add_argument("--max-elems", type=int, default=16)
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", default=True)
    p.add_argument("--random", dest="exhaustive", action="store_false")

    p = sub.add_parser("convert", help="turn a bispace into its bilocale")
    p.add_argument("file")
    p.add_argument("--name")

    p = sub.add_parser("construct", help="build the congruence or ideal "
                                         "bilocale")
    p.add_argument("what", choices=("congruence", "ideal"))
    p.add_argument("file")
    p.add_argument("--name")

    return parser


COMMANDS = {
    "validate": cmd_validate,
    "sublocales": cmd_sublocales,
    "classify": cmd_classify,
    "rmt": cmd_rmt,
    "suite": cmd_suite,
    "search": cmd_search,
    "convert": cmd_convert,
    "construct": cmd_construct,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb is None:
        parser.print_help()
        return 2
    try:
        return COMMANDS[args.verb](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except UnknownCheckId as exc:
        print(f"unknown check id: {exc}", file=sys.stderr)
        return 2
    except UnknownVerb as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except BilocError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
