"""Command line front end.

    syzygy resolve --input ideal.json --mode ek --out res.json
    syzygy betti --family fano
    syzygy verify --family uniform:2,4
    syzygy homotopy-check --input ideal.json --degree-bound 6
    syzygy dga-table --family fano --restrict 1,2,3,4
    syzygy component --input ideal.json --degree 4

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .chain import Chain, format_chain, format_label
from .dga import DGA, format_table, product_table, verify_dga
from .errors import SyzygyError
from .families import fano, matroidal_presentation, uniform_matroid
from .homotopy import Homotopy, verify_homotopy
from .io import InputError, basis_to_json, chain_to_json, dumps, ideal_to_json, parse_any, resolution_to_json
from .oracle import koszul_betti, lcm_box, resolution_multigraded_betti, strand_exactness_oracle, unit_cube_and_bumps
from .presentation import Presentation, component_presentation, is_crit_monotone, restrict
from .resolution import betti, build_resolution, d_squared_witness, max_generator_degree, minimality_witness, pdim, reg_spread

COMMANDS = ("resolve", "betti", "verify", "homotopy-check", "dga-table", "component")


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    family: str | None = None
    restrict: tuple | None = None
    mode: str = "ek"
    degree_bound: int | None = None
    degree: int | None = None
    out: str | None = None
    format: str = "text"
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.degree_bound is not None and self.degree_bound < 1:
            raise InputError("--degree-bound must be positive")
        if self.degree is not None and self.degree < 1:
            raise InputError("--degree must be positive")


def load_presentation(cfg: RunConfig) -> Presentation:
    family = cfg.family
    if family is None or family in ("ideal-file", "stable-file"):
        if not cfg.input:
            raise InputError("give --input PATH or --family")
        p = parse_any(cfg.input, stable=family == "stable-file")
    elif family == "fano":
        p = matroidal_presentation(fano())
    elif family.startswith("uniform:"):
        try:
            r, n = (int(x) for x in family.split(":", 1)[1].split(","))
            p = matroidal_presentation(uniform_matroid(r, n))
        except ValueError as exc:
            raise InputError(f"bad family {family!r}; expected uniform:r,n") from exc
    else:
        raise InputError(f"unknown family {family!r}")
    if cfg.restrict:
        # restriction keeps the relative generator order, so linear quotients survive for matroids
        p = restrict(p, cfg.restrict, order="declex" if family == "fano" or (family or "").startswith("uniform") else "given")
    return p


def _emit(cfg: RunConfig, text: str, payload) -> None:
    body = dumps(payload) if cfg.format == "json" else text
    if cfg.out:
        Path(cfg.out).write_text(body + "\n")
    else:
        print(body)


def _mode_for(p: Presentation, requested: str) -> str:
    return requested if requested == "generic" or is_crit_monotone(p) else "generic"


def cmd_resolve(cfg: RunConfig) -> int:
    p = load_presentation(cfg)
    r = build_resolution(p, cfg.mode)
    lines = [p.describe(), f"betti {' '.join(map(str, betti(r)))}"]
    for b in r.elements():
        if b.degree:
            lines.append(f"d({format_label(p, b)}) = {format_chain(p, r.differential[b])}")
    payload = resolution_to_json(r)
    if cfg.out and cfg.format == "text":
        Path(cfg.out).write_text(dumps(payload) + "\n")
        print("\n".join(lines))
        return 0
    _emit(cfg, "\n".join(lines), payload)
    return 0


def cmd_betti(cfg: RunConfig) -> int:
    p = load_presentation(cfg)
    r = build_resolution(p, _mode_for(p, cfg.mode))
    numbers = betti(r)
    payload = {
        "betti": numbers,
        "pdim": pdim(p),
        "reg_spread": reg_spread(p),
        "max_generator_degree": max_generator_degree(p),
    }
    _emit(cfg, " ".join(map(str, numbers)), payload)
    return 0


def cmd_component(cfg: RunConfig) -> int:
    p = load_presentation(cfg)
    d = cfg.degree if cfg.degree is not None else max(p.degrees)
    c = component_presentation(p, d)
    r = build_resolution(c, "generic")
    linear = all(m.degree == 1 for image in r.differential.values() for m, _ in image)
    text = f"{c.describe()}\nbetti {' '.join(map(str, betti(r)))}\nlinear {linear}"
    _emit(cfg, text, {"ideal": ideal_to_json(c), "betti": betti(r), "linear": linear})
    return 0 if linear else 1


def cmd_homotopy(cfg: RunConfig) -> int:
    p = load_presentation(cfg)
    bound = cfg.degree_bound or max(p.degrees) + 2
    report = verify_homotopy(p, bound, strict=False)
    payload = {
        "degree_bound": bound,
        "checked": report.checked,
        "counts": report.counts,
        "failures": [{"identity": name, "witness": [str(w[0]), basis_to_json(w[1])]} for name, w in report.failures],
    }
    text = report.summary()
    if report.failures:
        name, (mono, b) = report.failures[0]
        text += f"\nfirst failure: {name} at {format_chain(p, Chain({(mono, b): 1}))}"
    _emit(cfg, text, payload)
    return 0 if report.ok else 1


def cmd_dga_table(cfg: RunConfig) -> int:
    p = load_presentation(cfg)
    rows = product_table(p, DGA(p))
    text = format_table(p, rows)
    payload = {
        "ideal": ideal_to_json(p),
        "products": [
            {"left": basis_to_json(e.left), "right": basis_to_json(e.right), "note": e.note, "value": chain_to_json(e.value)}
            for e in rows
        ],
    }
    _emit(cfg, text, payload)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    """d^2, minimality, EK vs generic, strand oracle, Koszul Betti, homotopy, DGA."""
    p = load_presentation(cfg)
    results = []

    def timed(name, fn):
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except SyzygyError as exc:
            ok, detail = False, str(exc)
        results.append({"check": name, "ok": ok, "detail": detail, "seconds": round(time.perf_counter() - start, 3)})
        return ok

    monotone = is_crit_monotone(p)
    r = build_resolution(p, "ek" if monotone else "generic", check=False)
    def witness_check(find):
        w = find(r)
        return w is None, "" if w is None else f"witness {format_label(p, w)}"

    timed("d_squared", lambda: witness_check(d_squared_witness))
    timed("minimality", lambda: witness_check(minimality_witness))
    if monotone:
        g = build_resolution(p, "generic", check=False)
        timed("ek_equals_generic", lambda: (g.differential == r.differential, ""))

    def strands():
        rep = strand_exactness_oracle(r, alphas=unit_cube_and_bumps(p.n) if p.n > 5 else None,
                                      bound=None if p.n > 5 else lcm_box(p), strict=False)
        first = f"; first failure {rep.failures[0]}" if rep.failures else ""
        return rep.ok, rep.summary() + first

    timed("strand_exactness", strands)
    timed("koszul_betti", lambda: (koszul_betti(p) == resolution_multigraded_betti(r), f"betti {betti(r)}"))
    if monotone:
        bound = cfg.degree_bound or max(p.degrees) + 2
        h = Homotopy(p, r)

        def homotopy():
            rep = verify_homotopy(p, bound, h, strict=False)
            first = f"; first failure {rep.failures[0]}" if rep.failures else ""
            return rep.ok, rep.summary() + first

        timed("homotopy", homotopy)

        def dga():
            rep = verify_dga(p, algebra=DGA(p, h))
            bad = {k: v[0] for k, v in rep.failures.items() if v}
            return rep.ok, rep.summary() + (f"; first failures {bad}" if bad else "")

        timed("dga", dga)
    ok = all(item["ok"] for item in results)
    text = "\n".join(
        f"{'PASS' if item['ok'] else 'FAIL'}  {item['check']:<18} {item['seconds']:>8.3f}s  {item['detail']}"
        for item in results
    )
    _emit(cfg, text, {"ok": ok, "checks": results})
    return 0 if ok else 1


HANDLERS = {
    "resolve": cmd_resolve,
    "betti": cmd_betti,
    "verify": cmd_verify,
    "homotopy-check": cmd_homotopy,
    "dga-table": cmd_dga_table,
    "component": cmd_component,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syzygy", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--input", help="ideal or matroid JSON file")
        cmd.add_argument("--family", help="fano | uniform:r,n | ideal-file | stable-file")
        cmd.add_argument("--restrict", help="comma separated variable indices")
        cmd.add_argument("--mode", choices=("ek", "generic"), default="ek")
        cmd.add_argument("--degree-bound", type=int)
        cmd.add_argument("--degree", type=int, help="component degree (component command)")
        cmd.add_argument("--out")
        cmd.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    restrict_to = None
    if args.restrict:
        try:
            restrict_to = tuple(int(x) for x in args.restrict.split(","))
        except ValueError as exc:
            raise InputError(f"bad --restrict {args.restrict!r}") from exc
    return RunConfig(
        command=args.command,
        input=args.input,
        family=args.family,
        restrict=restrict_to,
        mode=args.mode,
        degree_bound=args.degree_bound,
        degree=args.degree,
        out=args.out,
        format=args.format,
    )


def run(cfg: RunConfig) -> int:
    try:
        return HANDLERS[cfg.command](cfg)
    except (InputError, ValueError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except SyzygyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if cfg.command != "verify" else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
