"""Command-line front end: JSON polytopes in, exact reports out.

Input is a JSON object with a ``vertices`` array (simplex mode) or both
``vertices`` and ``facets`` (H-polytope mode, rationals as strings). Every
subcommand runs the same pipeline and prints the slice it is named after;
``verify`` cross-checks every closed form against the enumeration oracle and
``bench`` times the two paths against each other. Exit codes: 0 ok,
1 validation failure, 2 enumeration overflow, 3 internal inconsistency or a
failed verification.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .ehrhart import delta_to_ehrhart, weighted_ehrhart
from .errors import (
    EnumerationTooLarge,
    InternalInconsistency,
    InvalidInput,
    PolyspecError,
)
from .exact import FracPoly
from .geometry import HPolytope, Simplex
from .oracle import (
    DEFAULT_CAP,
    count_dilate,
    delta_by_series,
    dilate_counts,
    ehrhart_by_interpolation,
    nu_histogram,
    spectrum_by_enumeration,
    weighted_count,
)
from .sampling import random_reduced_simplices
from .spectrum import (
    spectrum_is_integral,
    spectrum_reduced_simplex,
    spectrum_stats,
    spectrum_to_delta,
    toric_spectrum_box,
    toric_spectrum_reeve,
    weighted_delta_decomposition,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_OVERFLOW = 2
EXIT_INCONSISTENT = 3

PIPELINE_COMMANDS = ("weight", "spectrum", "delta", "ehrhart", "weighted", "reflexive")

# Keys each pipeline subcommand reports; None means the full report.
_COMMAND_KEYS: dict[str, tuple[str, ...] | None] = {
    "weight": ("mode", "dim", "weight", "milnor", "reduced"),
    "spectrum": None,
    "delta": ("mode", "dim", "spectrum_path", "delta"),
    "ehrhart": ("mode", "dim", "spectrum_path", "delta", "ehrhart"),
    "weighted": ("mode", "dim", "spectrum_path", "weighted_delta", "weighted_ehrhart"),
    "reflexive": ("mode", "dim", "reflexive_geometric", "spectrum_integral", "reflexive"),
}


@dataclass
class JobSpec:
    """One resolved unit of work for the CLI."""

    command: str
    payload: dict | None = None
    family: tuple[str, tuple[int, ...]] | None = None
    fmt: str = "text"
    cap: int = DEFAULT_CAP
    jobs: int = 1
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.family is not None:
            kind, params = self.family
            if kind == "box":
                if not params or any(a < 1 for a in params):
                    raise InvalidInput(
                        "toric box needs a list of positive integer exponents"
                    )
            elif kind == "reeve":
                if len(params) != 1 or params[0] < 2:
                    raise InvalidInput("toric reeve needs a single height >= 2")
            else:
                raise InvalidInput(f"unknown toric family: {kind}")


def _load_payload(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read input: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"input is not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise InvalidInput("input must be a JSON object")
    return payload


def _parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInput(
            f"rationals must be integers or strings like \"p/q\", got {value!r}"
        )
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidInput(f"cannot parse rational {value!r}") from exc


def build_geometry(payload: dict) -> tuple[Simplex | None, HPolytope]:
    """Turn a JSON payload into geometry; simplex mode when only vertices
    are given, H-polytope mode when facets are supplied too."""
    if "vertices" not in payload:
        raise InvalidInput('input needs a "vertices" array')
    vertices = payload["vertices"]
    if not isinstance(vertices, list) or not all(
        isinstance(v, list) for v in vertices
    ):
        raise InvalidInput('"vertices" must be an array of integer arrays')
    if "facets" in payload:
        facets = payload["facets"]
        if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
            raise InvalidInput('"facets" must be an array of rational arrays')
        normals = [[_parse_rational(x) for x in row] for row in facets]
        return None, HPolytope(normals, vertices)
    if vertices and len(vertices) != len(vertices[0]) + 1:
        raise InvalidInput(
            f"{len(vertices)} vertices in dimension {len(vertices[0])}: "
            'not a simplex; supply "facets" for general H-polytopes'
        )
    simplex = Simplex(vertices)
    return simplex, simplex.hrep


def run_pipeline(job: JobSpec) -> dict:
    """Full pipeline: weight, reducedness, spectrum, weighted classes,
    delta-vector, counting polynomials, reflexivity, statistics.

    Non-reduced simplices fall back to the enumeration oracle with a warning;
    the report records which path produced the spectrum.
    """
    simplex, hp = build_geometry(job.payload or {})
    n = hp.dim
    report: dict[str, Any] = {"mode": "simplex" if simplex else "hpolytope", "dim": n}
    if simplex is not None:
        weight = simplex.weight
        report["weight"] = list(weight.q)
        report["milnor"] = weight.milnor
        report["reduced"] = weight.is_reduced
        if weight.is_reduced:
            spec = spectrum_reduced_simplex(weight)
            path = "closed_form"
        else:
            job.warnings.append(
                f"simplex is not reduced (weight gcd = {math.gcd(*weight.q)}); "
                "the closed-form spectrum formula is invalid for non-reduced "
                "weights, falling back to enumeration"
            )
            spec = spectrum_by_enumeration(hp, cap=job.cap, jobs=job.jobs)
            path = "enumeration"
        if spec.total() != weight.milnor:
            raise InternalInconsistency(
                f"spectrum total {spec.total()} != weight total {weight.milnor}"
            )
    else:
        spec = spectrum_by_enumeration(hp, cap=job.cap, jobs=job.jobs)
        path = "enumeration"
        report["milnor"] = spec.total()
    report["spectrum_path"] = path
    report["spectrum"] = spec.to_text()
    if job.fmt == "json":
        report["spectrum_terms"] = [[str(e), c] for e, c in spec.terms()]
    delta = spectrum_to_delta(spec, n)
    report["delta"] = list(delta)
    classes = weighted_delta_decomposition(spec, n)
    report["weighted_delta"] = {str(a): p.to_text() for a, p in classes.items()}
    report["ehrhart"] = delta_to_ehrhart(delta, n).to_text()
    report["weighted_ehrhart"] = {
        str(a): weighted_ehrhart(p, n).to_text() for a, p in classes.items()
    }
    geometric = hp.is_reflexive
    integral = spectrum_is_integral(spec)
    if geometric != integral:
        raise InternalInconsistency(
            f"reflexivity disagreement: integral normals {geometric}, "
            f"integral spectrum {integral}"
        )
    report["reflexive_geometric"] = geometric
    report["spectrum_integral"] = integral
    report["reflexive"] = geometric
    stats = spectrum_stats(spec, n)
    report["stats"] = {
        "mean": str(stats.mean),
        "variance": str(stats.variance),
        "variance_at_least_n_over_12": stats.variance_at_least_n_over_12,
        "unimodal_integer_part": stats.unimodal_integer_part,
        "is_integral": stats.is_integral,
    }
    return report


def toric_report(job: JobSpec) -> dict:
    """Spectrum, delta-vector and counting polynomial of a closed-form
    family member."""
    assert job.family is not None
    kind, params = job.family
    if kind == "box":
        spec = toric_spectrum_box(params)
        n = len(params)
    else:
        spec = toric_spectrum_reeve(params[0])
        n = 3
    delta = spectrum_to_delta(spec, n)
    report: dict[str, Any] = {
        "family": kind,
        "params": list(params),
        "dim": n,
        "milnor": spec.total(),
        "spectrum": spec.to_text(),
    }
    if job.fmt == "json":
        report["spectrum_terms"] = [[str(e), c] for e, c in spec.terms()]
    report["delta"] = list(delta)
    report["ehrhart"] = delta_to_ehrhart(delta, n).to_text()
    return report


def run_verify(job: JobSpec) -> dict:
    """Cross-check every closed form against the enumeration oracle.

    Runs on one polytope: spectrum equality (reduced simplices), symmetry,
    totals, interior band, boundary multiplicity, delta-vector agreement,
    counting-polynomial agreement at m = 0..n+1, weighted partition and the
    reflexivity equivalence. An optional "delta" claim in the input is
    validated against the counts; failures carry exact witnesses.
    """
    payload = job.payload or {}
    simplex, hp = build_geometry(payload)
    n = hp.dim
    cap, jobs = job.cap, job.jobs
    checks: list[dict[str, Any]] = []

    def add(name: str, ok: bool, witness: Any = None) -> None:
        entry: dict[str, Any] = {"name": name, "ok": bool(ok)}
        if not ok and witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    spec_oracle = spectrum_by_enumeration(hp, cap=cap, jobs=jobs)
    if simplex is not None and simplex.weight.is_reduced:
        spec = spectrum_reduced_simplex(simplex.weight)
        add(
            "closed_form_vs_enumeration",
            spec == spec_oracle,
            {"closed_form": spec.to_text(), "enumeration": spec_oracle.to_text()},
        )
    else:
        spec = spec_oracle

    add(
        "spectrum_symmetry",
        spec.reflect(n) == spec,
        {"spectrum": spec.to_text()},
    )

    if simplex is not None:
        add(
            "spectrum_total_equals_milnor",
            spec.total() == simplex.weight.milnor,
            {"total": spec.total(), "milnor": simplex.weight.milnor},
        )

    interior = nu_histogram(hp, 1, cap=cap, jobs=jobs).restrict(
        0, 1, include_lo=True, include_hi=False
    )
    low_band = spec.restrict(0, 1, include_lo=True, include_hi=False)
    add(
        "interior_band",
        low_band == interior,
        {"spectrum_band": low_band.to_text(), "interior_points": interior.to_text()},
    )

    counts = dilate_counts(hp, n + 1, cap=cap, jobs=jobs)
    add(
        "boundary_multiplicity",
        spec.coefficient(1) == counts[1].boundary_count - n,
        {
            "multiplicity_of_one": spec.coefficient(1),
            "boundary_count": counts[1].boundary_count,
        },
    )

    delta = spectrum_to_delta(spec, n)
    series_delta = tuple(delta_by_series(hp, cap=cap, jobs=jobs))
    add(
        "delta_vs_series",
        delta == series_delta,
        {"from_spectrum": list(delta), "from_series": list(series_delta)},
    )

    claimed = payload.get("delta")
    if claimed is not None:
        if not isinstance(claimed, list) or len(claimed) != n + 1:
            raise InvalidInput(f'"delta" claim must be a list of {n + 1} integers')
        add(
            "claimed_delta_matches",
            tuple(claimed) == delta,
            {"claimed": claimed, "computed": list(delta)},
        )
    delta_used = tuple(claimed) if claimed is not None else delta

    ehrhart = delta_to_ehrhart(delta_used, n)
    ok = True
    witness: Any = None
    for entry in counts:
        value = ehrhart(entry.m)
        if value != entry.count:
            ok = False
            witness = {
                "m": entry.m,
                "from_delta": str(value),
                "count": entry.count,
            }
            break
    add("ehrhart_vs_counts", ok, witness)

    add(
        "ehrhart_vs_interpolation",
        delta_to_ehrhart(delta, n) == ehrhart_by_interpolation(hp, cap=cap, jobs=jobs),
        None,
    )

    classes = weighted_delta_decomposition(spec, n)
    summed = FracPoly()
    for part in classes.values():
        summed = summed + part
    add(
        "weighted_classes_sum_to_delta",
        summed == FracPoly({Fraction(k): d for k, d in enumerate(delta)}),
        {"sum": summed.to_text(), "delta": list(delta)},
    )
    ok = True
    witness = None
    for alpha, part in classes.items():
        poly = weighted_ehrhart(part, n)
        for m in range(n + 2):
            expected = poly(m)
            actual = weighted_count(hp, m, alpha, cap=cap, jobs=jobs)
            if expected != actual:
                ok = False
                witness = {
                    "alpha": str(alpha),
                    "m": m,
                    "from_polynomial": str(expected),
                    "count": actual,
                }
                break
        if not ok:
            break
    add("weighted_counts_match", ok, witness)

    integral = spectrum_is_integral(spec)
    as_delta = spec == FracPoly({Fraction(k): d for k, d in enumerate(delta)})
    add(
        "reflexivity_equivalence",
        hp.is_reflexive == integral == as_delta,
        {
            "integral_normals": hp.is_reflexive,
            "integral_spectrum": integral,
            "spectrum_equals_delta": as_delta,
        },
    )

    passed = all(c["ok"] for c in checks)
    return {
        "mode": "simplex" if simplex else "hpolytope",
        "dim": n,
        "checks": checks,
        "passed": passed,
        "counts": [
            [c.m, c.count, c.boundary_count, c.interior_count] for c in counts
        ],
    }


def write_counts_csv(path: str, counts: Sequence[Sequence[int]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["m", "count", "boundary", "interior"])
        writer.writerows(counts)


def run_bench(args: argparse.Namespace, cap: int, jobs: int) -> int:
    """Time closed-form vs enumeration spectra over random reduced
    simplices; CSV on stdout, no assertions."""
    simplices = random_reduced_simplices(
        seed=args.seed, count=args.count, dims=(args.dim,), max_coord=args.max_coord
    )
    writer = csv.writer(sys.stdout)
    writer.writerow(["index", "dim", "mu", "closed_form_seconds", "oracle_seconds"])
    for i, simplex in enumerate(simplices):
        start = time.perf_counter()
        closed = spectrum_reduced_simplex(simplex.weight)
        mid = time.perf_counter()
        enumerated = spectrum_by_enumeration(simplex.hrep, cap=cap, jobs=jobs)
        end = time.perf_counter()
        if closed != enumerated:
            print(
                f"warning: paths disagree on simplex {i}: {simplex.vertices}",
                file=sys.stderr,
            )
        writer.writerow(
            [i, simplex.dim, simplex.weight.milnor, f"{mid - start:.6f}", f"{end - mid:.6f}"]
        )
    return EXIT_OK


def _scalar_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "n/a"
    if isinstance(value, list):
        return " ".join(str(x) for x in value)
    return str(value)


def render_text(report: dict) -> str:
    lines: list[str] = []
    for key, value in report.items():
        if key == "checks":
            for check in value:
                status = "PASS" if check["ok"] else "FAIL"
                line = f"check[{check['name']}]: {status}"
                if "witness" in check:
                    line += f" {json.dumps(check['witness'])}"
                lines.append(line)
        elif key == "counts":
            for m, count, boundary, interior in value:
                lines.append(f"counts[{m}]: {count} (boundary {boundary}, interior {interior})")
        elif isinstance(value, dict):
            for sub, inner in value.items():
                lines.append(f"{key}[{sub}]: {_scalar_text(inner)}")
        else:
            lines.append(f"{key}: {_scalar_text(value)}")
    return "\n".join(lines) + "\n"


def render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyspec",
        description=(
            "Exact spectra, delta-vectors and counting polynomials of lattice "
            "simplices and H-polytopes with the origin interior."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument(
                "--input", required=True, help="input JSON file, or - for stdin"
            )
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default=None,
            help="output format (env POLYSPEC_FORMAT)",
        )
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="enumeration budget in box points (env POLYSPEC_CAP)",
        )
        p.add_argument(
            "--jobs",
            type=int,
            default=None,
            help="parallel slabs for enumeration (env POLYSPEC_JOBS)",
        )

    helps = {
        "weight": "weight vector, normalized volume and reducedness of a simplex",
        "spectrum": "full pipeline report for a simplex or H-polytope",
        "delta": "delta-vector of the input polytope",
        "ehrhart": "counting polynomial of the input polytope",
        "weighted": "weighted delta-vector classes and their polynomials",
        "reflexive": "reflexivity via facet normals and via spectrum integrality",
    }
    for name in PIPELINE_COMMANDS:
        add_common(sub.add_parser(name, help=helps[name]))

    toric = sub.add_parser("toric", help="closed-form family spectra")
    toric.add_argument("family", choices=("box", "reeve"))
    toric.add_argument("params", nargs="+", type=int)
    add_common(toric, with_input=False)

    verify = sub.add_parser(
        "verify", help="cross-check closed forms against the enumeration oracle"
    )
    add_common(verify)
    verify.add_argument(
        "--counts-csv",
        default=None,
        help="also write dilate counts as CSV (m,count,boundary,interior)",
    )

    bench = sub.add_parser(
        "bench", help="time closed-form vs enumeration over random simplices"
    )
    bench.add_argument("--count", type=int, default=10)
    bench.add_argument("--dim", type=int, default=2)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--max-coord", type=int, default=6)
    add_common(bench, with_input=False)

    return parser


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidInput(f"{name} must be an integer, got {raw!r}") from exc


def _resolve_options(args: argparse.Namespace) -> tuple[str, int, int]:
    fmt = args.format or os.environ.get("POLYSPEC_FORMAT", "text")
    if fmt not in ("text", "json"):
        raise InvalidInput(f"unknown output format {fmt!r}")
    cap = args.cap if args.cap is not None else _env_int("POLYSPEC_CAP", DEFAULT_CAP)
    jobs = args.jobs if args.jobs is not None else _env_int("POLYSPEC_JOBS", 1)
    if cap < 1:
        raise InvalidInput(f"cap must be positive, got {cap}")
    if jobs < 1:
        raise InvalidInput(f"jobs must be positive, got {jobs}")
    return fmt, cap, jobs


def _dispatch(args: argparse.Namespace) -> int:
    fmt, cap, jobs = _resolve_options(args)

    if args.command == "bench":
        return run_bench(args, cap, jobs)

    if args.command == "toric":
        job = JobSpec(
            command="toric",
            family=(args.family, tuple(args.params)),
            fmt=fmt,
            cap=cap,
            jobs=jobs,
        )
        sys.stdout.write(render_report(toric_report(job), fmt))
        return EXIT_OK

    payload = _load_payload(args.input)
    job = JobSpec(command=args.command, payload=payload, fmt=fmt, cap=cap, jobs=jobs)

    if args.command == "verify":
        report = run_verify(job)
        if args.counts_csv:
            write_counts_csv(args.counts_csv, report["counts"])
        sys.stdout.write(render_report(report, fmt))
        return EXIT_OK if report["passed"] else EXIT_INCONSISTENT

    report = run_pipeline(job)
    if args.command == "weight" and report["mode"] != "simplex":
        raise InvalidInput("weight requires a simplex input (vertices only)")
    keys = _COMMAND_KEYS[args.command]
    if keys is not None:
        report = {k: report[k] for k in keys if k in report}
    for warning in job.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    sys.stdout.write(render_report(report, fmt))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except InternalInconsistency as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except PolyspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
