"""Deterministic text / CSV / JSON renderings of catalog rows and friends."""

from __future__ import annotations

import csv
import io
import json

from modquanta.cadence import numerals, parse_numerals
from modquanta.errors import InvalidInput
from modquanta.modulation import CatalogRow, NotQuantized, QuantumResult
from modquanta.nerve import ComplexStats
from modquanta.pitch import AffineSymmetry, PitchClassSet

CATALOG_COLUMNS = ("Tr", "Cadence", "Quantum", "Modulator", "Pivots", "Covered", "Annotations")
JSON_KEYS = ("distance", "cadence", "quantum", "modulator", "pivots", "covered", "annotations")


def row_to_dict(row: CatalogRow, width: int) -> dict:
    return {
        "distance": row.distance,
        "cadence": numerals(row.cadence, width),
        "quantum": list(row.quantum.members),
        "modulator": str(row.modulator),
        "pivots": numerals(row.pivots, width),
        "covered": row.covered,
        "annotations": list(row.annotations),
    }


def row_from_dict(obj: dict, modulus: int, degree_count: int) -> CatalogRow:
    try:
        return CatalogRow(
            distance=int(obj["distance"]),
            cadence=parse_numerals(obj["cadence"], degree_count),
            quantum=PitchClassSet.of(obj["quantum"], modulus),
            modulator=AffineSymmetry.parse(obj["modulator"], modulus),
            pivots=parse_numerals(obj["pivots"], degree_count) if obj["pivots"] else (),
            covered=bool(obj["covered"]),
            annotations=tuple(obj.get("annotations", ())),
        )
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed catalog row {obj!r}: {exc}") from None


def catalog_json(rows: list[CatalogRow], width: int) -> str:
    return json.dumps([row_to_dict(r, width) for r in rows], indent=2) + "\n"


def catalog_csv(rows: list[CatalogRow], width: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CATALOG_COLUMNS)
    for r in rows:
        w.writerow(
            [
                r.distance,
                ";".join(numerals(r.cadence, width)),
                ";".join(map(str, r.quantum.members)),
                str(r.modulator),
                ";".join(numerals(r.pivots, width)),
                "true" if r.covered else "false",
                ";".join(r.annotations),
            ]
        )
    return buf.getvalue()


def catalog_text(rows: list[CatalogRow], width: int) -> str:
    table = [CATALOG_COLUMNS]
    for r in rows:
        table.append(
            (
                str(r.distance),
                "{" + ",".join(numerals(r.cadence, width)) + "}",
                "{" + str(r.quantum) + "}",
                str(r.modulator),
                "{" + ",".join(numerals(r.pivots, width)) + "}" + ("" if r.covered else "*"),
                "true" if r.covered else "false",
                ",".join(r.annotations) or "-",
            )
        )
    widths = [max(len(line[i]) for line in table) for i in range(len(CATALOG_COLUMNS))]
    out = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in table]
    return "\n".join(out) + "\n"


def render_catalog(rows: list[CatalogRow], width: int, fmt: str) -> str:
    if fmt == "json":
        return catalog_json(rows, width)
    if fmt == "csv":
        return catalog_csv(rows, width)
    return catalog_text(rows, width)


def render_cadences(sets: list[tuple[int, ...]], width: int, fmt: str) -> str:
    groups = [numerals(J, width) for J in sets]
    if fmt == "json":
        return json.dumps(groups) + "\n"
    if fmt == "csv":
        lines = ["size,degrees"] + [f"{len(g)},{';'.join(g)}" for g in groups]
        return "\n".join(lines) + "\n"
    return "".join("{" + ",".join(g) + "}\n" for g in groups)


def quantum_to_dict(res: QuantumResult | NotQuantized, width: int) -> dict:
    if isinstance(res, NotQuantized):
        return {
            "quantized": False,
            "quantum": list(res.quantum.members),
            "trace": list(res.trace.members),
            "witness": str(res.witness),
        }
    return {
        "quantized": True,
        "quantum": list(res.quantum.members),
        "trace": list(res.trace.members),
        "pivots": numerals(res.pivots, width),
        "covered": res.covered,
    }


def render_quantum(res: QuantumResult | NotQuantized, width: int, fmt: str) -> str:
    d = quantum_to_dict(res, width)
    if fmt == "json":
        return json.dumps(d) + "\n"
    if fmt == "csv":
        keys = list(d)
        vals = [";".join(map(str, v)) if isinstance(v, list) else str(v).lower() if isinstance(v, bool) else str(v) for v in d.values()]
        return ",".join(keys) + "\n" + ",".join(vals) + "\n"
    if not d["quantized"]:
        return (
            f"not quantized: trace {{{res.trace}}} of quantum {{{res.quantum}}} "
            f"is fixed by {res.witness}\n"
        )
    return (
        f"quantum: {res.quantum}\n"
        f"trace: {res.trace}\n"
        f"pivots: {','.join(d['pivots'])}\n"
        f"covered: {'true' if res.covered else 'false'}\n"
    )


def stats_to_dict(stats: ComplexStats, width: int) -> dict:
    return {
        "f_vector": list(stats.f_vector),
        "euler": stats.euler,
        "skeleton_complete": stats.skeleton_complete,
        "maximal_faces": [numerals(f, width) for f in stats.maximal_faces],
    }


def render_stats(stats: ComplexStats, width: int, fmt: str, cycle: tuple[list[int], bool] | None = None) -> str:
    d = stats_to_dict(stats, width)
    if cycle is not None:
        d["cycle"] = {"vertices": numerals(cycle[0], width), "is_cycle": cycle[1]}
    if fmt == "json":
        return json.dumps(d) + "\n"
    if fmt == "csv":
        lines = ["dimension,count"] + [f"{i},{c}" for i, c in enumerate(stats.f_vector)]
        return "\n".join(lines) + "\n"
    lines = [
        f"f-vector: {','.join(map(str, stats.f_vector))}",
        f"euler: {stats.euler}",
        f"skeleton complete: {'true' if stats.skeleton_complete else 'false'}",
        "maximal faces:",
    ]
    lines += ["  {" + ",".join(f) + "}" for f in d["maximal_faces"]]
    if cycle is not None:
        lines.append(f"cycle {','.join(d['cycle']['vertices'])}: {'true' if cycle[1] else 'false'}")
    return "\n".join(lines) + "\n"
