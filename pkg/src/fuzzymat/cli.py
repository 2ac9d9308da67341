"""Command-line front end.

Every subcommand builds a plain report dict, then renders it as text, JSON or
a plot-ready CSV series.  Exit codes: 0 success, 1 model error, 2 usage or
input parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import Matrix, StateVector, as_matrix
from .bam import BamModel, bam_indirect, bam_indirect_bound, bam_run
from .cetd import SD_MODES, ColumnStats, RawDataTable, cetd_pipeline, column_stats
from .errors import FuzzyMatError, ParseError
from .fam import FamModel, fam_backward, fam_forward, fam_rank
from .fcm import Fcm, fcm_assemble_blocks, fcm_combine, fcm_hidden_pattern
from .fre import (equal_chunks, fre_fit_max_product, fre_max_solution, fre_necessary_check,
                  fre_partition_peaks, fre_verify)
from .frm import Frm, average_matrix, frm_combine, frm_combined_fuzzy, frm_fuzzify, frm_hidden_pattern, \
    frm_membership_grades
from .relations import alpha_cut, relation_properties, relation_summary

__all__ = ["parse_matrix_csv", "serialize_matrix_csv", "parse_vector", "run_command", "main"]


# ---------------------------------------------------------------- parsing

def parse_matrix_csv(text: str) -> Matrix:
    """Comma-separated numeric rows.  A first line ``#labels`` means the next
    row holds column labels (after a corner cell) and each data row starts
    with its row label.  Blank lines are skipped."""
    lines = text.splitlines()
    numbered = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    if not numbered:
        raise ParseError("empty matrix file")
    labelled = numbered[0][1].strip().lower() == "#labels"
    col_labels = None
    if labelled:
        numbered = numbered[1:]
        if not numbered:
            raise ParseError("#labels directive without a header row")
        header_line, header = numbered[0]
        col_labels = [c.strip() for c in next(csv.reader([header]))][1:]
        numbered = numbered[1:]
    rows, row_labels = [], []
    width = len(col_labels) if labelled else None
    for lineno, ln in numbered:
        cells = [c.strip() for c in next(csv.reader([ln]))]
        if labelled:
            row_labels.append(cells[0])
            cells = cells[1:]
        if width is None:
            width = len(cells)
        elif len(cells) != width:
            raise ParseError(f"row {lineno}: expected {width} cells, found {len(cells)}")
        vals = []
        for j, c in enumerate(cells):
            try:
                vals.append(float(c))
            except ValueError:
                raise ParseError(f"row {lineno}, column {j + 1}: non-numeric cell {c!r}") from None
        rows.append(vals)
    if not rows:
        raise ParseError("matrix file has no data rows")
    try:
        return Matrix(rows, row_labels or None, col_labels)
    except FuzzyMatError as exc:
        raise ParseError(str(exc)) from None


def serialize_matrix_csv(m) -> str:
    """Inverse of ``parse_matrix_csv`` (full float precision)."""
    m = as_matrix(m)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    labelled = m.row_labels is not None or m.col_labels is not None
    if labelled:
        buf.write("#labels\n")
        cols = m.col_labels or tuple(f"c{j + 1}" for j in range(m.cols))
        w.writerow([""] + list(cols))
    rows = m.row_labels or tuple(f"r{i + 1}" for i in range(m.rows))
    for i, row in enumerate(m.values):
        cells = [repr(float(x)) for x in row]
        w.writerow(([rows[i]] if labelled else []) + cells)
    return buf.getvalue()


def parse_vector(text: str, what: str = "vector") -> np.ndarray:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"{what}: expected comma-separated numbers, got {text!r}") from None
    if not vals:
        raise ParseError(f"{what}: empty")
    return np.array(vals)


def _parse_indices(text: str, what: str) -> list:
    """1-based comma list -> 0-based ints."""
    try:
        idx = [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"{what}: expected comma-separated positive integers, got {text!r}") from None
    if any(i < 0 for i in idx):
        raise ParseError(f"{what}: indices are 1-based")
    return idx


def _labels(text):
    return None if text is None else [x.strip() for x in text.split(",")]


def _read(path: str) -> Matrix:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix_csv(text)


def _read_vector_file(path: str) -> np.ndarray:
    m = _read(path)
    if 1 not in m.shape:
        raise ParseError(f"{path}: expected a single row or column, got shape {m.shape}")
    return m.flatten()


# ---------------------------------------------------------------- reports

def _py(x):
    """numpy -> plain JSON-friendly Python."""
    if isinstance(x, Matrix):
        return x.tolist()
    if isinstance(x, StateVector):
        return list(x.bits)
    if isinstance(x, np.ndarray):
        return x.tolist()
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, dict):
        return {k: _py(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_py(v) for v in x]
    return x


def _num(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        return f"{x + 0.0:.6g}"
    return str(x)


def _is_flat(v):
    return isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v)


def _render_text(obj, indent: int = 0) -> list:
    pad = "  " * indent
    out = []
    for key, v in obj.items():
        if isinstance(v, dict):
            out.append(f"{pad}{key}:")
            out.extend(_render_text(v, indent + 1))
        elif _is_flat(v):
            out.append(f"{pad}{key}: " + " ".join(_num(x) for x in v))
        elif isinstance(v, list) and all(isinstance(x, dict) for x in v):
            out.append(f"{pad}{key}:")
            for item in v:
                out.append(f"{pad}  -")
                out.extend(_render_text(item, indent + 2))
        elif isinstance(v, list):
            out.append(f"{pad}{key}:")
            for row in v:
                out.append(f"{pad}  " + _render_row(row))
        else:
            out.append(f"{pad}{key}: {_num(v)}")
    return out


def _render_row(row) -> str:
    if _is_flat(row):
        return " ".join(_num(x) for x in row)
    return " | ".join(_render_row(x) for x in row)


def _series_csv(series) -> str:
    header, rows = series
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(x) if isinstance(x, float) else x for x in r])
    return buf.getvalue()


def _row_series(labels, values, name="row_sum"):
    labels = labels or [f"R{i + 1}" for i in range(len(values))]
    return (["label", name], [(lab, float(v)) for lab, v in zip(labels, values)])


# ---------------------------------------------------------------- commands

def _cmd_cetd(a):
    raw = _read(a.raw)
    if a.intervals:
        lengths = parse_vector(a.intervals, "--intervals")
        counts = raw
    else:
        if raw.cols < 2:
            raise ParseError("without --intervals the first column must hold interval lengths")
        lengths = raw.values[:, 0]
        counts = Matrix(raw.values[:, 1:], raw.row_labels, raw.col_labels[1:] if raw.col_labels else None)
    table = RawDataTable(counts, lengths)
    rep = cetd_pipeline(table, parse_vector(a.alphas, "--alphas"), a.sd_mode, a.decimals)
    report = {
        "command": "cetd",
        "sd_mode": a.sd_mode,
        "atd": rep.atd,
        "means": rep.stats.means,
        "sds": rep.stats.sds,
        "rtd": [{"alpha": al, "matrix": m, "row_sums": s} for al, m, s in rep.rtds],
        "cetd": rep.cetd,
        "cetd_row_sums": rep.cetd_row_sums,
    }
    return report, _row_series(table.group_labels, rep.cetd_row_sums)


def _state_rows(states):
    return [list(s.bits) for s in states]


def _fcm_report(f: Fcm, on, max_steps):
    if any(i >= f.n for i in on):
        raise ParseError(f"--on index out of range for {f.n} nodes")
    hp = fcm_hidden_pattern(f, StateVector.from_on(f.n, on), max_steps)
    rep = {
        "kind": hp.kind,
        "period": len(hp.terminal_states),
        "steps": hp.steps,
        "trace": _state_rows(hp.trace),
        "hidden_pattern": _state_rows(hp.terminal_states),
    }
    series = (["step"] + list(f.node_labels or [f"C{i + 1}" for i in range(f.n)]),
              [[k] + list(s.bits) for k, s in enumerate(hp.trace)])
    return rep, series


def _cmd_fcm_run(a):
    m = _read(a.matrix)
    f = Fcm(m, _labels(a.labels), a.theta)
    rep, series = _fcm_report(f, _parse_indices(a.on, "--on"), a.max_steps)
    return {"command": "fcm run", "theta": f.theta, **rep}, series


def _cmd_fcm_combine(a):
    maps = [Fcm(_read(p)) for p in a.matrix]
    f = fcm_combine(maps, a.theta)
    report = {"command": "fcm combine", "theta": f.theta, "combined": f.adjacency}
    series = None
    if a.on:
        rep, series = _fcm_report(f, _parse_indices(a.on, "--on"), a.max_steps)
        report.update(rep)
    return report, series


def _cmd_fcm_blocks(a):
    blocks = []
    for spec in a.block:
        idx_text, sep, path = spec.partition(":")
        if not sep:
            raise ParseError(f"--block expects INDICES:FILE, got {spec!r}")
        blocks.append((_parse_indices(idx_text, "--block"), _read(path)))
    f = fcm_assemble_blocks(a.n, blocks, _labels(a.labels), a.theta)
    report = {"command": "fcm blocks", "theta": f.theta, "assembled": f.adjacency}
    series = None
    if a.on:
        rep, series = _fcm_report(f, _parse_indices(a.on, "--on"), a.max_steps)
        report.update(rep)
    return report, series


def _frm_report(f: Frm, a):
    n = f.shape[0] if a.start == "domain" else f.shape[1]
    on = _parse_indices(a.on, "--on")
    if any(i >= n for i in on):
        raise ParseError(f"--on index out of range for {n} {a.start} nodes")
    hp = frm_hidden_pattern(f, StateVector.from_on(n, on), a.start, a.max_steps)
    pair = lambda p: [list(p[0].bits), list(p[1].bits)]
    rep = {
        "kind": hp.kind,
        "start": a.start,
        "steps": hp.steps,
        "pairs": [pair(p) for p in hp.pairs],
        "cycle": [pair(p) for p in hp.cycle],
        "final_domain": list(hp.final[0].bits),
        "final_range": list(hp.final[1].bits),
    }
    series = (["step", "side", "bits"],
              [r for k, p in enumerate(hp.pairs)
               for r in ((k, "domain", "".join(map(str, p[0].bits))), (k, "range", "".join(map(str, p[1].bits))))])
    return rep, series


def _cmd_frm_run(a):
    f = Frm(_read(a.matrix), theta=a.theta)
    rep, series = _frm_report(f, a)
    return {"command": "frm run", "theta": f.theta, **rep}, series


def _cmd_frm_combine(a):
    f = frm_combine([Frm(_read(p)) for p in a.matrix], a.theta)
    report = {"command": "frm combine", "theta": f.theta, "combined": f.relation}
    series = None
    if a.on:
        rep, series = _frm_report(f, a)
        report.update(rep)
    return report, series


def _cmd_frm_fuzzify(a):
    avg = average_matrix(_read(a.matrix), a.divisor)
    if (a.means is None) != (a.sds is None):
        raise ParseError("--means and --sds must be given together")
    if a.means is not None:
        stats = ColumnStats(parse_vector(a.means, "--means"), parse_vector(a.sds, "--sds"), a.sd_mode)
    else:
        stats = column_stats(avg, a.sd_mode)
    report = {"command": "frm fuzzify", "divisor": a.divisor, "sd_mode": a.sd_mode,
              "average": avg, "means": stats.means, "sds": stats.sds}
    if a.alpha is not None:
        b = frm_fuzzify(avg, stats, a.alpha)
        sums = b.values.sum(axis=1)
        report["alpha"] = a.alpha
        report["fuzzy"] = b
        report["row_sums"] = sums
        report["grades"] = frm_membership_grades(sums)
    combined, sums, grades = frm_combined_fuzzy(avg, stats, parse_vector(a.alphas, "--alphas"))
    labels = list(avg.row_labels or [f"R{i + 1}" for i in range(avg.rows)])
    order = sorted(range(len(sums)), key=lambda i: -sums[i])
    report.update({"combined": combined, "combined_row_sums": sums, "combined_grades": grades,
                   "ranking": [labels[i] for i in order]})
    return report, _row_series(labels, sums)


def _cmd_bam_run(a):
    m = _read(a.matrix)
    n, p = m.shape
    model = BamModel(m,
                     parse_vector(a.u, "--u") if a.u else None,
                     parse_vector(a.v, "--v") if a.v else None,
                     scale=a.scale)
    tr = bam_run(model, parse_vector(a.input, "--input"), a.start, a.max_steps)
    report = {
        "command": "bam run",
        "scale": model.scale,
        "kind": tr.kind,
        "steps": tr.steps,
        "activations": [list(x) for x in tr.activations],
        "pairs": [[list(x.bits), list(y.bits)] for x, y in tr.pairs],
    }
    if tr.fixed_pair is not None:
        report["fixed_x"] = list(tr.fixed_pair[0].bits)
        report["fixed_y"] = list(tr.fixed_pair[1].bits)
        report["settle_step"] = tr.settle_step
    series = (["step", "x", "y"], [(k, "".join(map(str, x.bits)), "".join(map(str, y.bits)))
                                   for k, (x, y) in enumerate(tr.pairs)])
    return report, series


def _cmd_bam_indirect(a):
    ma, mb = _read(a.a), _read(a.b)
    res = bam_indirect(ma, mb)
    return {"command": "bam indirect", "indirect": res, "bound": bam_indirect_bound(ma, mb)}, None


def _cmd_fam_recall(a):
    model = FamModel(_read(a.matrix))
    fit = parse_vector(a.fit, "--fit")
    if a.direction == "backward":
        out = fam_backward(model, fit)
        labels = model.row_labels
    else:
        out = fam_forward(model, fit)
        labels = model.col_labels
    labels = list(labels or [str(i + 1) for i in range(out.size)])
    rank = fam_rank(out, labels)
    report = {"command": "fam recall", "direction": a.direction, "result": out,
              "ranking": [lab for lab, _ in rank]}
    return report, _row_series(labels, out, "grade")


def _cmd_fre_solve(a):
    q = _read(a.q)
    r = _read_vector_file(a.r)
    sol = fre_max_solution(q, r)
    report = {"command": "fre solve", "necessary_condition": fre_necessary_check(q, r),
              "solvable": sol.solvable, "residual": sol.residual, "p_hat": sol.p_hat}
    return report, _row_series(None, sol.p_hat, "p_hat")


def _cmd_fre_verify(a):
    res = fre_verify(_read(a.p), _read(a.q), _read(a.r), a.composition)
    return {"command": "fre verify", "composition": a.composition, "residual": res}, None


def _cmd_fre_fit(a):
    q = _read_vector_file(a.q)
    r = _read_vector_file(a.r)
    w = fre_fit_max_product(q, r)
    res = fre_verify(w, Matrix.column(q), Matrix.column(r), "max_product")
    return {"command": "fre fit", "weights": w, "residual": res}, None


def _cmd_fre_peaks(a):
    q = _read_vector_file(a.q)
    r = _read_vector_file(a.r)
    if (a.chunk is None) == (a.partition is None):
        raise ParseError("give exactly one of --chunk or --partition")
    if a.chunk is not None:
        stop = q.size if a.stop is None else a.stop
        parts = equal_chunks(a.chunk, a.start, stop)
    else:
        parts = [_parse_indices(block, "--partition") for block in a.partition.split(";") if block.strip()]
    peaks = fre_partition_peaks(q, r, parts)
    labels = _labels(a.labels)
    if labels is not None and len(labels) != q.size:
        raise ParseError(f"{len(labels)} labels for {q.size} entries")
    name = (lambda i: labels[i]) if labels else (lambda i: i + 1)
    report = {
        "command": "fre peaks",
        "partitions": [{"members": [name(i) for i in pk.indices], "peak": name(pk.peak_index),
                        "peak_value": pk.peak_value, "weight": pk.weights.values[0, 0] if pk.weights.rows else 0.0}
                       for pk in peaks],
        "peaks": [name(pk.peak_index) for pk in peaks],
    }
    series = (["partition", "peak", "peak_value"],
              [(k + 1, name(pk.peak_index), pk.peak_value) for k, pk in enumerate(peaks)])
    return report, series


def _cmd_rel_summary(a):
    s = relation_summary(_read(a.matrix))
    return {"command": "rel summary", "dom": s.dom, "ran": s.ran, "height": s.height}, None


def _cmd_rel_cut(a):
    return {"command": "rel cut", "alpha": a.alpha, "cut": alpha_cut(_read(a.matrix), a.alpha)}, None


def _cmd_rel_props(a):
    props = relation_properties(_read(a.matrix), a.eps)
    return {"command": "rel props", **props.as_dict()}, None


# ---------------------------------------------------------------- parser

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fuzzymat", description="Fuzzy matrix models from the command line.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "series-csv"), default="text")
    common.add_argument("--no-header", action="store_true", help="omit the text report header line")
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parent, name, func, help_text):
        sp = parent.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    def group(name, help_text):
        g = sub.add_parser(name, help=help_text)
        return g.add_subparsers(dest="action", required=True)

    def dynamics(sp, on_required=True):
        sp.add_argument("--on", required=on_required, help="1-based node indices switched on and clamped")
        sp.add_argument("--theta", type=float, default=1.0)
        sp.add_argument("--max-steps", type=int, default=None)

    sp = leaf(sub, "cetd", _cmd_cetd, "raw counts -> ATD -> RTD -> CETD")
    sp.add_argument("--raw", required=True)
    sp.add_argument("--intervals", help="comma list; otherwise the first CSV column")
    sp.add_argument("--alphas", default="0.15,0.35,0.45,0.75")
    sp.add_argument("--sd-mode", choices=SD_MODES, default="sample_n_minus_1")
    sp.add_argument("--decimals", type=int, default=None, help="round stats and band edges (hand calculation)")

    fcm = group("fcm", "fuzzy cognitive maps")
    sp = leaf(fcm, "run", _cmd_fcm_run, "hidden pattern from clamped nodes")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--labels")
    dynamics(sp)
    sp = leaf(fcm, "combine", _cmd_fcm_combine, "sum several maps")
    sp.add_argument("--matrix", action="append", required=True)
    dynamics(sp, on_required=False)
    sp = leaf(fcm, "blocks", _cmd_fcm_blocks, "assemble block maps")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--block", action="append", required=True, help="1-based INDICES:FILE")
    sp.add_argument("--labels")
    dynamics(sp, on_required=False)

    frm = group("frm", "fuzzy relational maps")
    for name, func in (("run", _cmd_frm_run), ("combine", _cmd_frm_combine)):
        sp = leaf(frm, name, func, f"{name} relational maps")
        sp.add_argument("--matrix", required=True, action="append" if name == "combine" else "store")
        sp.add_argument("--start", choices=("domain", "range"), default="domain")
        dynamics(sp, on_required=(name == "run"))
    sp = leaf(frm, "fuzzify", _cmd_frm_fuzzify, "graded memberships from a real relation")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--divisor", type=float, default=1.0)
    sp.add_argument("--sd-mode", choices=SD_MODES, default="abs_deviation")
    sp.add_argument("--alpha", type=float, default=None)
    sp.add_argument("--alphas", default="0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1")
    sp.add_argument("--means")
    sp.add_argument("--sds")

    bam = group("bam", "bidirectional associative memories")
    sp = leaf(bam, "run", _cmd_bam_run, "recall to a fixed pair")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--input", required=True)
    sp.add_argument("--start", choices=("X", "Y"), default="X")
    sp.add_argument("--scale", type=float, default=None)
    sp.add_argument("--u", help="X-field thresholds")
    sp.add_argument("--v", help="Y-field thresholds")
    sp.add_argument("--max-steps", type=int, default=None)
    sp = leaf(bam, "indirect", _cmd_bam_indirect, "indirect relation of chained memories")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)

    fam = group("fam", "fuzzy associative memories")
    sp = leaf(fam, "recall", _cmd_fam_recall, "max-min recall")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--fit", required=True)
    sp.add_argument("--direction", choices=("backward", "forward"), default="backward")

    fre = group("fre", "fuzzy relational equations")
    sp = leaf(fre, "solve", _cmd_fre_solve, "greatest max-min solution")
    sp.add_argument("--q", required=True)
    sp.add_argument("--r", required=True)
    sp = leaf(fre, "verify", _cmd_fre_verify, "residual of P o Q against R")
    sp.add_argument("--p", required=True)
    sp.add_argument("--q", required=True)
    sp.add_argument("--r", required=True)
    sp.add_argument("--composition", choices=("max_min", "max_product"), default="max_min")
    sp = leaf(fre, "fit", _cmd_fre_fit, "closed-form max-product weights")
    sp.add_argument("--q", required=True)
    sp.add_argument("--r", required=True)
    sp = leaf(fre, "peaks", _cmd_fre_peaks, "peak per partition")
    sp.add_argument("--q", required=True)
    sp.add_argument("--r", required=True)
    sp.add_argument("--chunk", type=int)
    sp.add_argument("--start", type=int, default=0, help="0-based first index for --chunk")
    sp.add_argument("--stop", type=int, default=None, help="0-based end (exclusive) for --chunk")
    sp.add_argument("--partition", help="1-based index lists separated by ';'")
    sp.add_argument("--labels")

    rel = group("rel", "fuzzy relation utilities")
    sp = leaf(rel, "summary", _cmd_rel_summary, "domain, range and height")
    sp.add_argument("--matrix", required=True)
    sp = leaf(rel, "cut", _cmd_rel_cut, "alpha-cut")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp = leaf(rel, "props", _cmd_rel_props, "reflexive / symmetric / transitive checks")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--eps", type=float, default=1.0)
    return p


def run_command(argv) -> tuple[int, str, str]:
    """Run one command; return (exit code, stdout text, stderr text)."""
    parser = _build_parser()
    err = io.StringIO()
    try:
        old_err, sys.stderr = sys.stderr, err
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stderr = old_err
    except SystemExit as exc:
        return int(exc.code or 0), "", err.getvalue()
    try:
        report, series = args.func(args)
    except ParseError as exc:
        return 2, "", f"error: {exc}\n"
    except FuzzyMatError as exc:
        return 1, "", f"error: {exc}\n"
    report = _py(report)
    if args.format == "json":
        return 0, json.dumps(report, indent=2) + "\n", ""
    if args.format == "series-csv":
        if series is None:
            return 2, "", f"error: {report['command']} has no series output\n"
        return 0, _series_csv(_py(series)), ""
    lines = [] if args.no_header else [f"# fuzzymat {report['command']}"]
    body = {k: v for k, v in report.items() if k != "command"}
    return 0, "\n".join(lines + _render_text(body)) + "\n", ""


def main(argv=None) -> int:
    code, out, err = run_command(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
