"""
Command-line entry point.

    modquanta cadences [--width 4]
    modquanta quantum --width 4 --target-distance 2 --modulator T6.11 --cadence V
    modquanta catalog --tetradic --format csv
    modquanta nerve --tetradic --format dot

Exit codes: 0 success (a non-quantized modulation is a valid answer), 1 golden
mismatch, 2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from modquanta.cadence import minimal_cadential_sets, parse_numerals
from modquanta.errors import CapacityError, InvalidInput
from modquanta.modulation import Modulation, compute_quantum, modulation_catalog
from modquanta.nerve import complex_stats, compute_nerve, is_skeleton_cycle, skeleton_dot
from modquanta.pitch import AffineSymmetry, affine_group, special_affine_group
from modquanta.render import render_cadences, render_catalog, render_quantum, render_stats, row_from_dict
from modquanta.scales import MAJOR, build_interpretation, make_scale, tonality_orbit

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3

GOLDEN = "tetradic_major_catalog.json"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _residues(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(";", ",").split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--modulus", type=int, default=12)
    common.add_argument("--scale", type=_residues, default=list(MAJOR), help="comma-separated residues")
    common.add_argument("--width", type=int, default=None, help="chord width (default 3)")
    common.add_argument("--tetradic", action="store_true", help="shorthand for --width 4")
    common.add_argument("--format", choices=("text", "json", "csv", "dot"), default="text")

    p = _Parser(prog="modquanta", description="Cadences, modulation quanta and nerves of scale tonalities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("cadences", parents=[common], help="minimal cadential sets")

    q = sub.add_parser("quantum", parents=[common], help="quantum of a single modulation")
    q.add_argument("--source-distance", type=int, default=0, help="transposition of the source tonality")
    q.add_argument("--target-distance", type=int, required=True)
    q.add_argument("--modulator", required=True, help="e.g. T6, T6.11 or T6.-1")
    q.add_argument("--cadence", required=True, help="target degrees, e.g. V or II,V")
    q.add_argument("--widen-rigidity", action="store_true", help="test rigidity against all affine units")

    c = sub.add_parser("catalog", parents=[common], help="all quantized modulations from the base tonality")
    c.add_argument("--distances", type=_residues, default=None)
    c.add_argument("--require-cover", action="store_true")
    c.add_argument("--widen-rigidity", action="store_true")
    c.add_argument("--check-golden", nargs="?", const="", default=None, metavar="PATH",
                   help="compare against a reference catalog (default: the bundled tetradic major table)")

    nv = sub.add_parser("nerve", parents=[common], help="nerve statistics of the interpretation")
    nv.add_argument("--cycle", default=None, help="check a vertex sequence, e.g. I,V,IV,VI,III,VII,II,I")
    return p


def _load_golden(path: str) -> dict:
    if path:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(resources.files("modquanta.data").joinpath(GOLDEN).read_text(encoding="utf-8"))


def _table_key(row) -> tuple:
    return (row.distance, row.cadence, row.quantum.members, str(row.modulator), row.pivots, row.covered)


def compare_to_golden(rows, golden: dict) -> tuple[list, list]:
    """Rows present only in ``rows`` and only in ``golden`` (annotations are ignored)."""
    k = len(golden["scale"])
    expected = [row_from_dict(r, golden["modulus"], k) for r in golden["rows"]]
    live_keys = {_table_key(r) for r in rows}
    gold_keys = {_table_key(r) for r in expected}
    surplus = [r for r in rows if _table_key(r) not in gold_keys]
    missing = [r for r in expected if _table_key(r) not in live_keys]
    return surplus, missing


def _run(args, out) -> int:
    width = args.width if args.width is not None else (4 if args.tetradic else 3)
    scale = make_scale(args.scale, args.modulus)
    interp = build_interpretation(scale, width)
    if args.format == "dot" and args.command != "nerve":
        raise InvalidInput("dot output is only available for the nerve command")

    if args.command == "cadences":
        out.write(render_cadences(minimal_cadential_sets(tonality_orbit(interp)), width, args.format))
        return EXIT_OK

    if args.command == "quantum":
        orbit = tonality_orbit(interp)
        src = orbit.at(args.source_distance)
        tgt = orbit.at(args.source_distance + args.target_distance)
        mod = Modulation(src, tgt, AffineSymmetry.parse(args.modulator, args.modulus),
                         parse_numerals(args.cadence, len(interp.degrees)))
        group = affine_group(args.modulus) if args.widen_rigidity else special_affine_group(args.modulus)
        out.write(render_quantum(compute_quantum(mod, group), width, args.format))
        return EXIT_OK

    if args.command == "catalog":
        orbit = tonality_orbit(interp)
        rows = modulation_catalog(orbit, distances=args.distances, require_cover=args.require_cover,
                                  widen_rigidity=args.widen_rigidity)
        if args.check_golden is None:
            out.write(render_catalog(rows, width, args.format))
            return EXIT_OK
        surplus, missing = compare_to_golden(rows, _load_golden(args.check_golden))
        for label, group in (("surplus", surplus), ("missing", missing)):
            for line in render_catalog(group, width, "text").splitlines()[1:]:
                out.write(f"{label}: {line}\n")
        if surplus or missing:
            out.write(f"golden mismatch: {len(surplus)} surplus, {len(missing)} missing\n")
            return EXIT_MISMATCH
        out.write(f"golden match: {len(rows)} rows\n")
        return EXIT_OK

    nerve = compute_nerve(interp)
    if args.format == "dot":
        if args.cycle:
            raise InvalidInput("--cycle cannot be combined with dot output")
        out.write(skeleton_dot(nerve, width))
        return EXIT_OK
    cycle = None
    if args.cycle:
        tokens = [t for t in args.cycle.replace(";", ",").split(",") if t.strip()]
        vs = [parse_numerals(t, len(interp.degrees))[0] for t in tokens]
        cycle = (vs, is_skeleton_cycle(nerve, vs))
    out.write(render_stats(complex_stats(nerve), width, args.format, cycle))
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, out)
    except InvalidInput as exc:
        print(f"modquanta: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapacityError as exc:
        print(f"modquanta: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
