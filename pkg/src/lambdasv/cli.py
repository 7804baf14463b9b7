"""Command-line entry point: ``lambdasv <command>``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 fixture error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from functools import wraps

import click

from .entangle import compare_opposite_tables, is_plain_integer, sign_canonical
from .exactnum import J, J1, J2
from .fixtures import ENV_VAR, FixtureError
from .matgroup import perm_str
from .orthograph import ks_colorability, nonorth_clique_census
from .pipeline import FLAGGED, Workspace, run_checks
from .rayconfig import AlignmentError, classify_type
from .realify import e8_verify, realify, witting_to_sv

EXIT_FAIL, EXIT_FIXTURE = 1, 3


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def common(default_format: str = "csv", formats=("json", "csv")):
    """Shared --format/--out/--fixtures options; converts fixture problems to exit 3."""
    def deco(fn):
        @click.option("--format", "fmt", type=click.Choice(formats), default=default_format,
                      show_default=True)
        @click.option("--out", type=click.Path(dir_okay=False), default=None,
                      help="Write to FILE instead of standard output.")
        @click.option("--fixtures", "fixture_dir", type=click.Path(), envvar=ENV_VAR,
                      default=None, help=f"Fixture directory (default: packaged; ${ENV_VAR}).")
        @wraps(fn)
        def wrapper(*args, fixture_dir=None, **kwargs):
            ws = Workspace(fixture_dir)
            try:
                return fn(*args, ws=ws, **kwargs)
            except (FixtureError, AlignmentError) as exc:
                click.echo(f"fixture error: {exc}", err=True)
                sys.exit(EXIT_FIXTURE)
        return wrapper
    return deco


config_option = click.option("--config", "config_name", type=click.Choice(["sv", "witting"]),
                             default="sv", show_default=True)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Exact reconstruction and checks for the 120-state and Witting configurations."""


@cli.command()
@config_option
@common()
def states(ws, config_name, fmt, out):
    """List the states with index, coordinates and type."""
    cfg = ws.config(config_name)
    rows = []
    for r in sorted(cfg.rays, key=lambda r: cfg.label(r.id)):
        t = classify_type(r) if config_name == "sv" else None
        rows.append((cfg.label(r.id), r.vector, t))
    if fmt == "csv":
        text = _csv(["index", "x1", "x2", "x3", "x4", "type"],
                    [[i, *(str(c) for c in v), "" if t is None else t] for i, v, t in rows])
    else:
        text = _json([{"index": i, "d": v.d, "coords": [list(c.to_tuple()) for c in v],
                       "type": t} for i, v, t in rows])
    _write(text, out)


@cli.command()
@config_option
@common()
def bases(ws, config_name, fmt, out):
    """List the orthonormal bases in lexicographic order of state indices."""
    B = ws.bases(config_name)
    underlined: set[int] = set()
    table = None
    if config_name == "sv":
        table, under = ws.table_bases
        underlined = set(under)
    rows = []
    for k, b in enumerate(B, start=1):
        match = "" if table is None else ("match" if table[k - 1] == b.labels else "mismatch")
        rows.append((k, b.labels, k in underlined, match))
    if fmt == "csv":
        text = _csv(["index", "s1", "s2", "s3", "s4", "underlined", "table"],
                    [[k, *lab, int(u), m] for k, lab, u, m in rows])
    else:
        text = _json([{"index": k, "states": list(lab), "underlined": u, "table": m or None}
                      for k, lab, u, m in rows])
    _write(text, out)
    if table is not None and any(m == "mismatch" for *_, m in rows):
        sys.exit(EXIT_FAIL)


@cli.command()
@config_option
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True)
@common()
def census(ws, config_name, threads, fmt, out):
    """Histogram of maximal cliques of mutually nonorthogonal states."""
    c = nonorth_clique_census(ws.graph(config_name), threads=threads)
    if fmt == "csv":
        text = _csv(["size", "count"], sorted(c.histogram.items()))
    else:
        text = _json({"config": config_name,
                      "histogram": {str(k): v for k, v in sorted(c.histogram.items())},
                      "total": c.total, "min_size": c.min_size, "max_size": c.max_size})
    _write(text, out)


@cli.command("ks-check")
@config_option
@common(default_format="json")
def ks_check(ws, config_name, fmt, out):
    """Exhaustive search for a noncontextual {0,1} assignment."""
    r = ks_colorability(ws.graph(config_name), ws.bases(config_name))
    cfg = ws.config(config_name)
    data = {"config": config_name, "satisfiable": r.satisfiable,
            "nodes_explored": r.nodes_explored,
            "witness": None if r.witness is None else
            sorted(cfg.label(i) for i, v in r.witness.items() if v)}
    if fmt == "csv":
        text = _csv(["key", "value"], [[k, json.dumps(v)] for k, v in data.items()])
    else:
        text = _json(data)
    _write(text, out)


@cli.command()
@click.option("--j", "which", type=click.Choice(["J", "J1", "J2"]), default="J",
              show_default=True)
@click.option("--strict", is_flag=True, help="Treat the known J1/J2 table swap as a failure.")
@common()
def opposites(ws, which, strict, fmt, out):
    """J-opposite involution on the 120 states, compared with the printed table."""
    cfg = ws.sv
    computed = ws.opposites(which).labelled(cfg)
    table = ws.table_opposites(which)
    rows = [(i, computed[i], table[i], "match" if computed[i] == table[i] else "mismatch")
            for i in sorted(computed)]
    if fmt == "csv":
        text = _csv(["index", "opposite", "table", "status"], rows)
    else:
        text = _json([{"index": i, "opposite": o, "table": t, "status": s}
                      for i, o, t, s in rows])
    _write(text, out)
    if all(s == "match" for *_, s in rows):
        return
    if which in ("J1", "J2"):
        comp = {w: ws.opposites(w).labelled(cfg) for w in ("J1", "J2")}
        cmp = compare_opposite_tables(comp, {w: ws.table_opposites(w) for w in ("J1", "J2")})
        if cmp["swapped"]:
            other = cmp["assignment"][which]
            click.echo(f"{FLAGGED}: computed {which} involution reproduces the table printed "
                       f"for {other}", err=True)
            if not strict:
                return
    sys.exit(EXIT_FAIL)


@cli.command("basis-pairs")
@common()
def basis_pairs(ws, fmt, out):
    """Involution on the 210 bases induced by J."""
    pairing = ws.basis_pairing
    table = ws.table_basis_pairs
    rows = [(k, v, table[k], int(k == v), "match" if table[k] == v else "mismatch")
            for k, v in sorted(pairing.pairs.items())]
    if fmt == "csv":
        text = _csv(["index", "partner", "table", "fixed", "status"], rows)
    else:
        text = _json([{"index": k, "partner": v, "table": t, "fixed": bool(f), "status": s}
                      for k, v, t, f, s in rows])
    _write(text, out)
    if any(r[-1] == "mismatch" for r in rows):
        sys.exit(EXIT_FAIL)


@cli.command()
@common()
def cosets(ws, fmt, out):
    """The 21 sign-canonical matrices C J C^T, one per coset of 2S5."""
    g = ws.group
    named = {sign_canonical(m).key(): n for n, m in (("J", J), ("J1", J1), ("J2", J2))}
    rows = []
    for k, (C, M) in enumerate(ws.coset_matrices, start=1):
        el = g.element(C)
        rows.append({"index": k, "representative": g.word_str(el.word),
                     "perm": perm_str(el.perm) if el.perm else "()",
                     "matrix": [[str(z) for z in row] for row in M.rows()],
                     "plain": is_plain_integer(M), "equals": named.get(M.key())})
    if fmt == "csv":
        text = _csv(["index", "representative", "perm", "matrix", "plain", "equals"],
                    [[r["index"], r["representative"], r["perm"],
                      ";".join(",".join(row) for row in r["matrix"]), int(r["plain"]),
                      r["equals"] or ""] for r in rows])
    else:
        text = _json(rows)
    _write(text, out)


@cli.command()
@config_option
@common(default_format="json")
def e8(ws, config_name, fmt, out):
    """Root-system report for the realified 240-vector set."""
    r = e8_verify(realify(ws.config(config_name)), strict=False)
    data = {"config": config_name, **r.to_dict()}
    if fmt == "csv":
        text = _csv(["key", "value"], [[k, json.dumps(v)] for k, v in data.items()])
    else:
        text = _json(data)
    _write(text, out)
    if not r.passed:
        sys.exit(EXIT_FAIL)


@cli.command("transform-witting")
@common()
def transform_witting(ws, fmt, out):
    """Map the 240 Witting vectors onto the 120-state vector set."""
    sv = ws.sv
    pairs = witting_to_sv(realify(ws.witting))
    rows = []
    for src, img in pairs:
        rid = sv.ray_id(img.to_complex())
        rows.append((src, img, None if rid is None else sv.label(rid)))
    if fmt == "csv":
        text = _csv(["w_re1", "w_re2", "w_re3", "w_re4", "w_im1", "w_im2", "w_im3", "w_im4",
                     "s_re1", "s_re2", "s_re3", "s_re4", "s_im1", "s_im2", "s_im3", "s_im4",
                     "state"],
                    [[*(str(x) for x in s.coords()), *(str(x) for x in i.coords()),
                      "" if k is None else k] for s, i, k in rows])
    else:
        text = _json([{"witting": {"re": [str(x) for x in s.re], "im_sqrt3": [str(x) for x in s.im]},
                       "image": {"re": [str(x) for x in i.re], "im_sqrt7": [str(x) for x in i.im]},
                       "state": k} for s, i, k in rows])
    _write(text, out)
    if any(k is None for *_, k in rows):
        sys.exit(EXIT_FAIL)


@cli.command("verify-all")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--strict", is_flag=True, help="Treat mismatch-flagged checks as failures.")
@click.option("--timings", is_flag=True, help="Include elapsed times (output no longer "
                                               "byte-reproducible).")
@common(default_format="text", formats=("text", "json", "csv"))
def verify_all(ws, threads, strict, timings, fmt, out):
    """Run every check and print expected against computed values."""
    ws.table_states  # fail closed on fixture problems before any work
    rep = run_checks(ws, threads=threads)
    if fmt == "json":
        text = _json(rep.to_dict(timings=timings) | {"passed": rep.ok(strict)})
    elif fmt == "csv":
        hdr = ["name", "status", "expected", "computed"] + (["elapsed_s"] if timings else [])
        text = _csv(hdr, [[c.name, c.status, c.expected, c.computed]
                          + ([f"{c.elapsed:.3f}"] if timings else []) for c in rep.checks])
    else:
        lines = []
        for c in rep.checks:
            t = f" ({c.elapsed:.2f}s)" if timings else ""
            lines.append(f"[{c.status}] {c.name}{t}\n    expected: {c.expected}\n"
                         f"    computed: {c.computed}")
        lines.append("ALL CHECKS PASSED" if rep.ok(strict) else "VERIFICATION FAILED")
        text = "\n".join(lines) + "\n"
    _write(text, out)
    if not rep.ok(strict):
        sys.exit(EXIT_FAIL)


def main():
    cli()


if __name__ == "__main__":
    main()
