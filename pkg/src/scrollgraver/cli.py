"""``scrollgraver`` command line.

Scrolls are given in S-notation (``--scroll 3,2``) or as raw block sizes
(``--blocks 4,3``).  Relative ``--output`` paths are resolved against
``$SCROLLGRAVER_OUTPUT_DIR`` when that variable is set, else against the
current directory.

Exit status: 0 on success, 2 for usage errors (including malformed scroll
specs), 3 when a cross-check fails (oracle mismatch or table mismatch).
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cpi as cpi_mod
from . import gb, graver as gr, linalg, matrixio, scroll, table

OUTPUT_DIR_ENV = "SCROLLGRAVER_OUTPUT_DIR"
EXIT_USAGE = 2
EXIT_INTEGRITY = 3


class UsageError(ValueError):
    pass


class IntegrityError(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    scroll: tuple[int, ...] | None = None  # S-notation
    blocks: tuple[int, ...] | None = None  # raw block sizes, overrides scroll
    matrix_file: str | None = None
    output: str | None = None
    format: str = "text"
    seed: int = 0
    trials: int = 1
    budget: float | None = None
    options: dict | None = None

    def spec(self) -> scroll.ScrollSpec:
        if self.blocks is not None:
            if any(b < 1 for b in self.blocks):
                raise UsageError("--blocks entries must be >= 1")
            return scroll.ScrollSpec(self.blocks)
        if self.scroll is None:
            raise UsageError("a scroll is required (--scroll or --blocks)")
        if any(a < 1 for a in self.scroll):
            raise UsageError("--scroll entries must be >= 1 (use --blocks for blocks of size 1)")
        return scroll.ScrollSpec.from_s_notation(self.scroll)

    @property
    def opt(self) -> dict:
        return self.options or {}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _resolve(path: str) -> Path:
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit_matrix(cfg: RunConfig, rows, ncols: int, sidecar: dict[str, list] | None = None,
                 suffix: str = ".labels"):
    text = matrixio.format_matrix(rows, ncols)
    if cfg.output is None:
        return text
    path = _resolve(cfg.output)
    path.write_text(text)
    if sidecar:
        side = "".join(f"{k}: {' '.join(map(str, v))}\n" for k, v in sidecar.items())
        path.with_name(path.name + suffix).write_text(side)
    return None


def _config(cfg: RunConfig) -> scroll.PointConfig:
    if cfg.matrix_file:
        return scroll.PointConfig.from_matrix(matrixio.read_matrix(cfg.matrix_file))
    return scroll.build_config(cfg.spec())


def _hist(h: dict[int, int]) -> str:
    return "{" + ", ".join(f"{d}:{c}" for d, c in sorted(h.items())) + "}"


def _oracle_bound(spec: scroll.ScrollSpec) -> int:
    try:
        return scroll.sharp_degree_bound(spec).sharp_bound
    except ValueError:
        return max(scroll.scroll_degree(spec), 1)


def _oracle_check(spec: scroll.ScrollSpec, basis: gr.GraverBasis) -> list[str]:
    found = set(gr.canonical(cpi_mod.enumerate_pcpi_vectors(spec, _oracle_bound(spec))))
    engine = set(basis.elements)
    out = []
    out += [f"engine only: {list(v.vector)}" for v in sorted(engine - found)]
    out += [f"oracle only: {list(v.vector)}" for v in sorted(found - engine)]
    return out


def cmd_matrix(cfg: RunConfig) -> str | None:
    config = scroll.build_config(cfg.spec())
    sidecar = {"colors": [p for p, _ in config.labels], "exponents": [e for _, e in config.labels]}
    return _emit_matrix(cfg, config.matrix, config.n, sidecar)


def cmd_graver(cfg: RunConfig) -> str | None:
    config = _config(cfg)
    try:
        basis = gr.graver(config, budget=cfg.budget)
    except gr.BudgetExceeded as exc:
        return f"SKIPPED: {exc}"
    if cfg.opt.get("check") and config.origin is not None:
        diff = _oracle_check(config.origin, basis)
        if diff:
            raise IntegrityError("graver and oracle disagree:\n" + "\n".join(diff))
    rows = [e.vector for e in basis.elements]
    summary = f"elements={len(basis)} degrees={_hist(basis.degree_histogram)}"
    if cfg.format == "json":
        return json.dumps({"elements": [list(r) for r in rows],
                           "degrees": basis.degree_histogram})
    body = _emit_matrix(cfg, rows, config.n)
    return summary if body is None else body + summary


def cmd_circuits(cfg: RunConfig) -> str | None:
    config = _config(cfg)
    circ = gr.circuits(config)
    if cfg.format == "json":
        return json.dumps([list(c.vector) for c in circ])
    degrees = sorted({c.degree for c in circ})
    body = _emit_matrix(cfg, [c.vector for c in circ], config.n)
    summary = f"circuits={len(circ)} degrees={degrees}"
    return summary if body is None else body + summary


def cmd_cpi(cfg: RunConfig) -> str:
    spec = cfg.spec()
    text = cfg.opt.get("check")
    if text:
        c = cpi_mod.parse_cpi(text, spec)
        return json.dumps({
            "cpi": cpi_mod.format_cpi(c),
            "homogeneous": cpi_mod.is_homogeneous(c),
            "color_homogeneous": cpi_mod.is_color_homogeneous(c),
            "primitive": cpi_mod.is_primitive_cpi(c),
        })
    bound = cfg.opt.get("max_degree") or _oracle_bound(spec)
    found = cpi_mod.enumerate_pcpi(spec, bound)
    if cfg.format == "json":
        lines = [cpi_mod.cpi_to_json(c) for c in found]
    else:
        lines = [cpi_mod.format_cpi(c) for c in found]
    out = "\n".join(lines)
    if cfg.output:
        _resolve(cfg.output).write_text(out + "\n")
        return f"identities={len(found)} max_side_degree={bound}"
    return out


def cmd_bound(cfg: RunConfig) -> str:
    spec = cfg.spec()
    deg = scroll.scroll_degree(spec)
    try:
        rep = scroll.sharp_degree_bound(spec)
    except ValueError:
        return f"sharp=n/a naive={deg} (empirical for curves: scroll degree {deg})"
    lines = [f"sharp={rep.sharp_bound} naive={rep.naive_bound} witness=({rep.u},{rep.v})"]
    if cfg.opt.get("general"):
        general = scroll.general_toric_bound(scroll.build_config(spec), exact=True)
        lines.append(f"scroll_degree={deg} general={general}")
    return "\n".join(lines)


def cmd_table(cfg: RunConfig) -> str:
    if cfg.scroll is not None or cfg.blocks is not None:
        config = scroll.build_config(cfg.spec())
        basis = gr.graver(config, budget=cfg.budget)
        return _hist(gr.degree_table(basis))
    rows = cfg.opt.get("rows") or "all"
    selected = {"core": table.CORE_ROWS, "stretch": table.STRETCH_ROWS,
                "all": list(table.PUBLISHED)}[rows]
    report = table.reproduce_table(selected, cfg.budget)
    text = "\n".join(report.lines())
    if cfg.output:
        _resolve(cfg.output).write_text(json.dumps([
            {"scroll": list(r.scroll), "status": r.status, "seconds": r.seconds,
             "expected": r.expected, "computed": r.computed} for r in report.rows]))
    if not report.ok:
        raise IntegrityError(text)
    return text


def _weights(cfg: RunConfig, n: int) -> gb.TermOrder:
    w = cfg.opt.get("weights")
    if w is None:
        raise UsageError("gb needs --weights, or --trials > 1 for a coverage sample")
    if len(w) != n:
        raise UsageError(f"--weights needs {n} entries")
    return gb.TermOrder(w)


def cmd_gb(cfg: RunConfig) -> str | None:
    config = scroll.build_config(cfg.spec())
    if cfg.opt.get("weights") is None:
        report = gb.universal_sample(config, cfg.trials, cfg.seed)
        text = gb.coverage_json(report)
        if cfg.output:
            _resolve(cfg.output).write_text(text + "\n")
        return text
    red = gb.reduced_gb_of_config(config, _weights(cfg, config.n))
    if cfg.format == "json":
        return json.dumps({"elements": [list(v) for v in red.vectors()],
                           "leading": red.leading_signs()})
    rows = [linalg.sign_normalize(v) for v in red.vectors()]
    body = _emit_matrix(cfg, rows, config.n, {"leading": red.leading_signs()}, ".leading")
    summary = f"elements={len(red.elements)} max_degree={red.max_degree()}"
    if body is None:
        return summary
    return body + "leading: " + " ".join(map(str, red.leading_signs())) + "\n" + summary


def _parse_keep(text: str, colors: int) -> dict[int, list[int]]:
    groups = text.split(";")
    if len(groups) != colors:
        raise UsageError(f"--keep needs {colors} ';'-separated groups")
    try:
        return {p: list(_int_list(g)) for p, g in enumerate(groups, start=1)}
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc))


def cmd_project(cfg: RunConfig) -> str | None:
    spec = cfg.spec()
    parent = scroll.build_config(spec)
    keep = cfg.opt.get("keep")
    if keep is None:
        rng = random.Random(cfg.seed)
        keep = {p: [1, nb] + [e for e in range(2, nb) if rng.random() < 0.5]
                for p, nb in enumerate(spec.blocks, start=1)}
    else:
        keep = _parse_keep(keep, spec.colors)
    try:
        proj = scroll.project_config(parent, keep)
    except ValueError as exc:
        raise UsageError(str(exc))
    sidecar = {"colors": [p for p, _ in proj.labels], "exponents": [e for _, e in proj.labels]}
    body = _emit_matrix(cfg, proj.matrix, proj.n, sidecar)
    worst = 0
    for order in gb.random_orders(proj, max(cfg.trials, 1), cfg.seed):
        worst = max(worst, gb.reduced_gb_of_config(proj, order).max_degree())
    summary = (f"columns={proj.n} kept={ {p: sorted(ks) for p, ks in keep.items()} } "
               f"max_gb_degree={worst} parent_bound={scroll.scroll_degree(spec)}")
    return summary if body is None else body + summary


def cmd_statedim(cfg: RunConfig) -> str:
    return str(scroll.state_polytope_dim(_config(cfg)))


def cmd_oracle_check(cfg: RunConfig) -> str:
    spec = cfg.spec()
    basis = gr.graver(scroll.build_config(spec), budget=cfg.budget)
    diff = _oracle_check(spec, basis)
    if diff:
        raise IntegrityError(f"{spec}: graver and oracle disagree\n" + "\n".join(diff))
    return f"{spec}: graver and oracle agree on {len(basis)} elements"


COMMANDS = {
    "matrix": cmd_matrix,
    "graver": cmd_graver,
    "circuits": cmd_circuits,
    "cpi": cmd_cpi,
    "bound": cmd_bound,
    "table": cmd_table,
    "gb": cmd_gb,
    "project": cmd_project,
    "statedim": cmd_statedim,
    "oracle-check": cmd_oracle_check,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns ``(exit status, text for stdout or stderr)``."""
    try:
        out = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        return EXIT_USAGE, f"error: {exc}"
    except IntegrityError as exc:
        return EXIT_INTEGRITY, f"integrity error: {exc}"
    except ValueError as exc:
        return 1, f"error: {exc}"
    return 0, out or ""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scrollgraver", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, matrix_file=False):
        p = sub.add_parser(name, help=help_)
        src = p.add_mutually_exclusive_group()
        src.add_argument("--scroll", type=_int_list, help="S-notation, e.g. 3,2")
        src.add_argument("--blocks", type=_int_list, help="raw block sizes n_1,...,n_c")
        if matrix_file:
            src.add_argument("--matrix-file", help="configuration in matrix text format")
        p.add_argument("--output", help="write results to this file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=1)
        p.add_argument("--budget", type=float, help="time limit in seconds")
        return p

    add("matrix", "print the configuration matrix")
    add("graver", "Graver basis", matrix_file=True).add_argument(
        "--check", action="store_true", help="cross-check against the cpi oracle")
    add("circuits", "circuits", matrix_file=True)
    p = add("cpi", "primitive colored partition identities")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--check", metavar="CPI", help="classify one identity, e.g. '1:1+1:3=1:2+1:2'")
    add("bound", "degree bounds").add_argument("--general", action="store_true",
                                               help="also print the generic toric bound")
    add("table", "degree table of one scroll, or reproduce the published table").add_argument(
        "--rows", choices=("core", "stretch", "all"))
    add("gb", "reduced Gröbner basis or a coverage sample").add_argument(
        "--weights", type=_int_list)
    add("project", "project a scroll onto coordinate hyperplanes").add_argument(
        "--keep", help="kept exponents per color, e.g. '1,2,4;1,3'")
    add("statedim", "state polytope dimension", matrix_file=True)
    add("oracle-check", "compare the engine with the cpi oracle")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    common = {"command", "scroll", "blocks", "matrix_file", "output", "format", "seed",
              "trials", "budget"}
    ns = vars(args)
    cfg = RunConfig(**{k: ns[k] for k in common if k in ns},
                    options={k: v for k, v in ns.items() if k not in common})
    status, text = run(cfg)
    stream = sys.stdout if status == 0 else sys.stderr
    if text:
        print(text.rstrip("\n"), file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
