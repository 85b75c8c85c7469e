"""Command-line front end: ``digiplane <command> ...``.

Exit codes: 0 success or a passing suite, 1 a suite found a counterexample,
2 usage, input or I/O error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Sequence

from . import __version__, kernels
from . import khalimsky as kh
from .grid import COMPLEMENT_MARGIN, Adjacency, classify_path, complement_components, components
from .harness.suites import REGISTRY, SuiteParams, UnknownSuiteError, run_suite, suite_names
from .harness.window import Window, WindowCapError
from .jordan import DecompositionError, HypothesisError, Regime, bracket, decompose
from .pts import DuplicatePointWarning, Plane, PointFileError, format_points, load
from .regions import ComponentPartition, canonical
from .render import ascii_art, svg
from .slant import gamma_inv_set, gamma_set, gamma_star

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(points) -> str:
    return " ".join(f"({x},{y})" for x, y in canonical(points))


def _count(n: int, noun: str) -> str:
    return f"{n} {noun}{'' if n == 1 else 's'}"


def _load(path: str) -> tuple[Plane, frozenset]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DuplicatePointWarning)
        plane, pts = load(path)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return plane, pts


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as err:
        raise PointFileError(f"cannot write: {err}", None, out) from err


# -- classify ----------------------------------------------------------------

def cmd_classify(args: argparse.Namespace) -> int:
    plane, pts = _load(args.input)
    print(f"plane: {plane.value}")
    print(f"size: {len(pts)}")
    if not pts:
        print("empty set")
        return EXIT_OK
    if plane is Plane.Z2:
        for k in (Adjacency.FOUR, Adjacency.EIGHT):
            c = classify_path(pts, k)
            label = {"path": f"{int(k)}-path", "closed-curve": f"closed {int(k)}-curve"}.get(c.kind.value, "neither")
            if c.endpoints:
                label += f", endpoints {_fmt(c.endpoints)}"
            print(f"{int(k)}-adjacency: {label}")
        return EXIT_OK
    c = kh.classify_k(pts)
    label = f"{c.kind.value}, {_count(len(pts), 'point')}"
    if c.endpoints:
        label += f", endpoints {_fmt(c.endpoints)}"
    print(f"classification: {label}")
    pure = sum(kh.is_pure(p) for p in pts)
    print(f"pure: {pure}, mixed: {len(pts) - pure}")
    return EXIT_OK


# -- transform ---------------------------------------------------------------

_DOMAIN = {"gamma": Plane.Z2, "gamma-star": Plane.Z2, "bracket": Plane.Z2, "gamma-inv": Plane.K2, "closure": Plane.K2}


def cmd_transform(args: argparse.Namespace) -> int:
    plane, pts = _load(args.input)
    want = _DOMAIN[args.which]
    if plane is not want:
        raise UsageError(f"plane mismatch: {args.which} takes a {want.value} set, got {plane.value}")
    if args.which == "gamma":
        out_plane, result = Plane.K2, gamma_set(pts)
    elif args.which == "gamma-star":
        out_plane, result = Plane.K2, gamma_star(pts)
    elif args.which == "gamma-inv":
        dropped = sum(kh.is_mixed(p) for p in pts)
        if dropped:
            print(f"note: {_count(dropped, 'mixed point')} dropped (outside the image of gamma)", file=sys.stderr)
        out_plane, result = Plane.Z2, gamma_inv_set(pts)
    elif args.which == "closure":
        out_plane, result = Plane.K2, gamma_star(gamma_inv_set(pts))
        print(f"note: fixed point: {'yes' if result == pts else 'no'}", file=sys.stderr)
    else:
        if not args.curve:
            raise UsageError("bracket needs --curve <K2 file>")
        cplane, curve = _load(args.curve)
        if cplane is not Plane.K2:
            raise UsageError(f"plane mismatch: --curve must be a K2 set, got {cplane.value}")
        out_plane, result = Plane.K2, bracket(pts, curve)
    _write(format_points(out_plane, result, f"{args.which} of {Path(args.input).name}"), args.output)
    return EXIT_OK


# -- components --------------------------------------------------------------

def _partition_lines(parts: ComponentPartition, windowed: bool) -> list[str]:
    head = _count(len(parts), "component")
    if windowed and parts.outer_index is not None:
        inner = "; ".join(f"{_count(len(c), 'point')} {_fmt(c)}" for c in parts.inner) or "none"
        head += f"; inner: {inner}; outer: window-relative"
    lines = [head]
    for i, comp in enumerate(parts):
        tag = " (outer, window-relative)" if windowed and i == parts.outer_index else ""
        lines.append(f"  component {i}{tag}: {_count(len(comp), 'point')}: {_fmt(comp)}")
    return lines


def cmd_components(args: argparse.Namespace) -> int:
    plane, pts = _load(args.input)
    if plane is Plane.K2 and args.adjacency is not None:
        raise UsageError("--adjacency applies to Z2 sets only")
    if args.complement and not pts:
        raise UsageError("the complement of an empty set is unbounded everywhere; nothing to window")
    if plane is Plane.Z2:
        k = Adjacency.parse(args.adjacency or "8")
        parts = complement_components(pts, k) if args.complement else components(pts, k)
        label = f"{int(k)}-components"
    else:
        parts = kh.complement_components_k(pts) if args.complement else kh.k_components(pts)
        label = "components"
    for line in _partition_lines(parts, args.complement):
        print(line)
    if args.complement:
        print(f"note: {label} of the complement inside the bounding box grown by {COMPLEMENT_MARGIN}")
        if plane is Plane.K2 and len(pts) > 4:
            try:
                regime = decompose(pts).regime
            except HypothesisError:
                regime = None
            except DecompositionError as err:
                print(f"regime: decomposition failed: {err}")
                return EXIT_COUNTEREXAMPLE
            if regime is Regime.UNSUPPORTED:
                print("regime: unsupported; no decomposition, components come from flood fill only")
            elif regime is not None:
                print(f"regime: {regime.value} (decomposition agrees with flood fill)")
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def _origin(text: str) -> tuple[int, int]:
    try:
        x, y = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad origin {text!r}; use x,y") from None
    return x, y


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list or not args.suite:
        for name in suite_names():
            tag = " [informational]" if REGISTRY[name].informational else ""
            print(f"{name}{tag}: {REGISTRY[name].statement}")
        return EXIT_OK if args.list else EXIT_USAGE
    try:
        window = Window.parse(args.window, args.origin)
    except ValueError as err:
        raise UsageError(str(err)) from None
    params = SuiteParams(window=window, max_size=args.max_size, arc_max_size=args.arc_max_size, seed=args.seed,
                         samples=args.samples, hypothesis_filter=not args.no_hypothesis_filter, cap=args.cap,
                         jobs=args.jobs)
    try:
        report = run_suite(args.suite, params)
    except UnknownSuiteError as err:
        raise UsageError(str(err)) from None
    if args.json:
        doc = report.to_json()
        doc["backend"] = kernels.BACKEND_NAME
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(report.summary())
    return EXIT_OK if report.passed else EXIT_COUNTEREXAMPLE


# -- render ------------------------------------------------------------------

def cmd_render(args: argparse.Namespace) -> int:
    plane, pts = _load(args.input)
    overlays = []
    for path in args.overlay:
        oplane, opts = _load(path)
        if oplane is not plane:
            raise UsageError(f"overlay plane mismatch: {path} is {oplane.value}, base is {plane.value}")
        overlays.append(opts)
    if args.format == "svg":
        text = svg(plane, pts, overlays, edges=args.edges, adjacency=Adjacency.parse(args.adjacency))
    else:
        try:
            text = ascii_art(plane, pts, overlays)
        except ValueError as err:
            raise UsageError(str(err)) from None
    _write(text, args.output)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

_RENDER_EPILOG = """ascii legend:
  .    empty position
  #    Z2 point, or mixed K2 point
  o    pure K2 point
  1-9  point of overlay n only
  *    point shared by the base set and an overlay
svg: pure points are circles, mixed points squares; --edges draws adjacent pairs."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="digiplane", description="Digital planes: Z2 with 4/8-adjacency, "
                                     "the Khalimsky plane K2, and the slant map between them.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({kernels.BACKEND_NAME})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a point set as path/arc/curve")
    p.add_argument("input")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transform", help="apply gamma, its inverse, gamma-star, the closure or the bracket")
    p.add_argument("which", choices=sorted(_DOMAIN))
    p.add_argument("input")
    p.add_argument("--curve", help="K2 curve file (bracket only)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("components", help="components of a set or of its complement")
    p.add_argument("input")
    p.add_argument("--adjacency", choices=("4", "8"), help="Z2 component adjacency (default 8)")
    p.add_argument("--complement", action="store_true", help="components of the complement instead")
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("suite", nargs="?")
    p.add_argument("--list", action="store_true", help="list registered suites")
    p.add_argument("--window", default="7x7", help="WxH or x0:x1,y0:y1 (default 7x7)")
    p.add_argument("--origin", type=_origin, default=(0, 0), help="x,y corner for WxH windows")
    p.add_argument("--max-size", type=int, default=12)
    p.add_argument("--arc-max-size", type=int, help="size bound for K2 arcs/curves in derived windows")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100, help="random sets per density")
    p.add_argument("--cap", type=int, help="window area cap (default from DIGIPLANE_WINDOW_CAP or 100)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-hypothesis-filter", action="store_true", help="keep cases outside the hypothesis")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a set as ASCII or SVG", epilog=_RENDER_EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input")
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--overlay", action="append", default=[], help="extra set drawn on top (repeatable)")
    p.add_argument("--edges", action="store_true", help="svg: draw adjacency segments")
    p.add_argument("--adjacency", choices=("4", "8"), default="8", help="Z2 edge adjacency for --edges")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PointFileError, WindowCapError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
