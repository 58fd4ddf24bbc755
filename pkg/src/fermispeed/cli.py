"""Command-line front end.

Subcommands: qsl, ortho, concurrence, survival, map, scatter, sweep.
Scalar commands default to JSON output; tabular commands default to CSV.
Exit codes: 0 success, 2 bad input, 3 internal solver failure. Where --out
is given, --plot additionally renders a quick-look PNG next to the data
file.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import re
import sys
from fractions import Fraction
from pathlib import Path

from .core import PhasePair, ProbabilityDistribution
from .dynamics import survival_series, write_series_csv
from .entanglement import concurrence_squared
from .mapper import (
    default_grid_spec,
    grid_as_json,
    map_qsl_plane,
    map_xu_region,
    map_yv_region,
    write_grid_csv,
    write_grid_manifest,
)
from .orthogonality import DEFAULT_TOLERANCE, solve_orthogonality
from .sampler import (
    CLASS_PRESETS,
    SamplingStalledError,
    class_spec,
    phase_sweep_study,
    run_scatter_study,
    write_records_csv,
    write_records_jsonl,
)
from .speedlimit import speed_limit

_PI_FORM = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d+\.?\d*))?$")


def parse_angle(text: str) -> float:
    """Angles in radians: decimals, fractions, or multiples of pi.

    Accepted forms include '1.5708', '2/3', 'pi', '-pi/4', '2pi/3', '0.5pi'.
    """
    token = text.strip().lower().replace(" ", "")
    match = _PI_FORM.match(token)
    if match:
        coef_text = match.group(1)
        if coef_text in ("", "+"):
            coef = 1.0
        elif coef_text == "-":
            coef = -1.0
        else:
            coef = float(coef_text)
        denom = float(match.group(2)) if match.group(2) else 1.0
        return coef * math.pi / denom
    try:
        return float(token)
    except ValueError:
        pass
    try:
        return float(Fraction(token))
    except ValueError:
        raise ValueError(f"cannot parse angle {text!r}") from None


def parse_angle_list(text: str) -> list[tuple[float, float]]:
    """Semicolon-separated (alpha, beta) pairs: 'pi,0;pi/2,pi/2'."""
    pairs = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'alpha,beta' in {chunk!r}")
        pairs.append((parse_angle(parts[0]), parse_angle(parts[1])))
    if not pairs:
        raise ValueError("empty angle list")
    return pairs


def _load_distribution(args) -> ProbabilityDistribution:
    if args.dist is not None:
        return ProbabilityDistribution.from_text(args.dist)
    text = Path(args.dist_file).read_text(encoding="utf-8").strip()
    return ProbabilityDistribution.from_text(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _plot_path(out: str) -> Path:
    return Path(out).with_suffix(".png")


def _require_out_for_plot(args) -> None:
    if getattr(args, "plot", False) and not args.out:
        raise ValueError("--plot requires --out")


def _csv_scalar_row(fields: dict) -> str:
    header = ",".join(fields)
    row = ",".join(
        "" if v is None else (v if isinstance(v, str) else repr(v))
        for v in fields.values()
    )
    return f"{header}\n{row}\n"


def cmd_qsl(args) -> int:
    report = speed_limit(_load_distribution(args))
    payload = report.as_dict(pi_units=args.pi_units)
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(_csv_scalar_row(payload), args.out)
    return 0


def cmd_ortho(args) -> int:
    result = solve_orthogonality(_load_distribution(args), tol=args.tol)
    if args.format == "json":
        _emit(json.dumps(result.as_dict(), indent=2) + "\n", args.out)
    else:
        lines = ["phi,phi_in_pi,family"]
        for root, family in zip(result.roots, result.families):
            lines.append(f"{root!r},{root / math.pi!r},{family}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_concurrence(args) -> int:
    dist = _load_distribution(args)
    phases = PhasePair(args.alpha, args.beta)
    value = concurrence_squared(dist, phases)
    payload = {
        "alpha": phases.alpha,
        "beta": phases.beta,
        "cf2": value.c_squared,
        "concurrence": value.concurrence,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(_csv_scalar_row(payload), args.out)
    return 0


def cmd_survival(args) -> int:
    _require_out_for_plot(args)
    series = survival_series(_load_distribution(args), args.phi_max, args.steps)
    if args.format == "json":
        _emit(json.dumps(series.as_dict()) + "\n", args.out)
    else:
        buffer = io.StringIO()
        write_series_csv(series, buffer)
        _emit(buffer.getvalue(), args.out)
    if args.plot:
        from . import plotting

        plotting.render_series(series, _plot_path(args.out))
    return 0


def cmd_map(args) -> int:
    _require_out_for_plot(args)
    spec = default_grid_spec(args.which, args.res)
    if args.which == "qsl":
        gmap = map_qsl_plane(spec, args.m_index)
    elif args.which == "xu":
        gmap = map_xu_region(spec, args.branch)
    else:
        gmap = map_yv_region(spec)
    if args.format == "json":
        _emit(json.dumps(grid_as_json(gmap)) + "\n", args.out)
    else:
        buffer = io.StringIO()
        write_grid_csv(gmap, buffer)
        _emit(buffer.getvalue(), args.out)
        if args.out:
            write_grid_manifest(gmap, args.out + ".manifest.json")
    if args.plot:
        from . import plotting

        plotting.render_grid(gmap, _plot_path(args.out))
    return 0


def cmd_scatter(args) -> int:
    _require_out_for_plot(args)
    spec = class_spec(args.klass, args.count, args.seed)
    records = run_scatter_study(spec)
    buffer = io.StringIO()
    if args.format == "json":
        write_records_jsonl(records, buffer)
    else:
        write_records_csv(records, buffer)
    _emit(buffer.getvalue(), args.out)
    if args.plot:
        from . import plotting

        plotting.render_records(records, _plot_path(args.out), f"class {args.klass}")
    return 0


def cmd_sweep(args) -> int:
    _require_out_for_plot(args)
    angles = parse_angle_list(args.angles)
    blocks = phase_sweep_study(args.family, angles, args.count, args.seed)
    buffer = io.StringIO()
    if args.format == "json":
        for _, records in blocks:
            write_records_jsonl(records, buffer)
    else:
        write_records_csv([r for _, records in blocks for r in records], buffer)
    _emit(buffer.getvalue(), args.out)
    if args.plot:
        from . import plotting

        plotting.render_sweep(blocks, _plot_path(args.out))
    return 0


def _add_dist_arguments(parser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--dist", help="inline distribution 'p1,p2,p3,p4,p5,p6'")
    group.add_argument("--dist-file", help="file containing the distribution text")


def _add_output_arguments(parser, default_format: str, plot: bool = False) -> None:
    parser.add_argument(
        "--format", choices=("csv", "json"), default=default_format, help="output format"
    )
    parser.add_argument("--out", help="output file (default: stdout)")
    if plot:
        parser.add_argument(
            "--plot",
            action="store_true",
            help="also render a quick-look PNG next to --out",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermispeed",
        description=(
            "Quantum speed limits, orthogonality times and fermionic "
            "entanglement for a six-level two-fermion system."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qsl", help="speed-limit report for a distribution")
    _add_dist_arguments(p)
    p.add_argument(
        "--pi-units", action="store_true", help="report times in units of pi*hbar/epsilon"
    )
    _add_output_arguments(p, "json")
    p.set_defaults(func=cmd_qsl)

    p = sub.add_parser("ortho", help="orthogonality phases for a distribution")
    _add_dist_arguments(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE, help="root tolerance")
    _add_output_arguments(p, "json")
    p.set_defaults(func=cmd_ortho)

    p = sub.add_parser("concurrence", help="squared fermionic concurrence")
    _add_dist_arguments(p)
    p.add_argument("--alpha", type=parse_angle, default=0.0, help="phase alpha (radians or pi forms)")
    p.add_argument("--beta", type=parse_angle, default=0.0, help="phase beta (radians or pi forms)")
    _add_output_arguments(p, "json")
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("survival", help="survival probability time series")
    _add_dist_arguments(p)
    p.add_argument("--phi-max", type=parse_angle, default=2.0 * math.pi, help="last phase")
    p.add_argument("--steps", type=int, default=4096, help="number of grid points")
    _add_output_arguments(p, "csv", plot=True)
    p.set_defaults(func=cmd_survival)

    p = sub.add_parser("map", help="grid maps of the plane and solution regions")
    p.add_argument("--which", choices=("qsl", "xu", "yv"), required=True)
    p.add_argument("--res", type=int, default=512, help="grid resolution per axis")
    p.add_argument("--m-index", type=int, default=3, choices=range(3, 8), help="lowest occupied level for the qsl map")
    p.add_argument("--branch", choices=("plus", "minus"), default="plus", help="cosine branch for the xu map")
    _add_output_arguments(p, "csv", plot=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("scatter", help="entanglement vs relative-speed study")
    p.add_argument("--class", dest="klass", choices=sorted(CLASS_PRESETS), required=True)
    p.add_argument("--count", type=int, default=300_000, help="number of samples")
    p.add_argument("--seed", type=int, required=True, help="random seed")
    _add_output_arguments(p, "csv", plot=True)
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("sweep", help="scatter study over a sequence of phase pairs")
    p.add_argument("--family", choices=("I", "II", "II_y0", "MIX"), default="I")
    p.add_argument(
        "--angles",
        default="0,0;pi/4,pi/4;pi/2,pi/2;3pi/4,3pi/4;pi,pi",
        help="semicolon-separated alpha,beta pairs",
    )
    p.add_argument("--count", type=int, default=10_000, help="samples per block")
    p.add_argument("--seed", type=int, required=True, help="random seed")
    _add_output_arguments(p, "csv", plot=True)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SamplingStalledError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
