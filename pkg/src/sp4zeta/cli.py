"""Command-line interface: evaluation, zero analysis, censuses, symbolic derivation.

Every invocation is described by a :class:`JobSpec`; ``--save-job`` writes it
out and ``--job`` replays it.  Exit codes: 0 success, 1 usage or numeric
error, 2 the computation ran but the checked property failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction

from .precision import DEFAULT_BITS, PrecisionError, create_context, format_value, to_json
from .special import PoleError
from .closed_forms import FunctionId, evaluate

SCHEMA_VERSION = "1.0"
COMMANDS = ("eval", "zeros", "census", "rect-count", "derive", "fe-search", "verify-bounds", "plot-data")
ZERO_CSV_HEADER = ["index", "function", "re", "im", "residual", "method"]
PLOT_CSV_HEADER = ["param", "re", "im", "abs"]

EXIT_OK, EXIT_ERROR, EXIT_FAILED = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class JobSpec:
    command: str
    function: str | None = None
    s: str | None = None
    rect: str | None = None
    range: str | None = None
    step: float | None = None
    height: float | None = None
    bits: int = DEFAULT_BITS
    n: int | None = None
    kind: str | None = None
    sigma_grid: str | None = None
    t_grid: str | None = None
    axis: str | None = None
    samples: int | None = None
    workers: int = 1
    output: str = "json"
    out_path: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "JobSpec":
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown job fields: {sorted(unknown)}")
        return cls(**data)


# --- parsing helpers ------------------------------------------------------------------

def _pair(text: str, what: str) -> tuple[str, str]:
    parts = [p.strip() for p in (text or "").split(",")]
    if len(parts) != 2 or not all(parts):
        raise UsageError(f"malformed {what}: {text!r} (expected a,b)")
    return parts[0], parts[1]


def _grid(text: str, what: str) -> list[str]:
    """``"start,stop,step"`` inclusive, an explicit ``"a;b;c"`` list, or one value."""
    if ";" in text or "," not in text:
        out = [p.strip() for p in text.split(";") if p.strip()]
        if not out:
            raise UsageError(f"malformed {what}: {text!r}")
        return out
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"malformed {what}: {text!r} (expected start,stop,step)")
    start, stop, step = (Fraction(p) for p in parts)
    if step <= 0 or stop < start:
        raise UsageError(f"malformed {what}: {text!r}")
    out, x = [], start
    while x <= stop:
        out.append(str(x.numerator) if x.denominator == 1 else repr(float(x)))
        x += step
    return out


def _function(job: JobSpec) -> FunctionId:
    if not job.function:
        raise UsageError(f"{job.command} needs --fn")
    return FunctionId.parse(job.function)


def _rect(job: JobSpec):
    from .zeros import Rectangle

    if not job.rect:
        raise UsageError(f"{job.command} needs --rect a,b,c,d")
    try:
        return Rectangle.parse(job.rect)
    except ValueError as exc:
        raise UsageError(f"malformed region: {exc}") from None


# --- command implementations ---------------------------------------------------------

def _base(job: JobSpec, ctx) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": job.command, "bits": ctx.bits, "digits": ctx.digits}


def _cmd_eval(job, ctx):
    fid = _function(job)
    if job.s is None:
        raise UsageError("eval needs --s")
    s = ctx.complex(job.s)
    r = evaluate(fid, s, ctx)
    doc = _base(job, ctx) | {
        "function": fid.value,
        "s": to_json(s, ctx),
        "at_pole": r.at_pole,
        "value": None if r.at_pole else to_json(r.value, ctx),
    }
    rows = [] if r.at_pole else [[job.s, *_row(r.value, ctx)]]
    return doc, (PLOT_CSV_HEADER, rows), EXIT_OK


def _row(v, ctx):
    v = ctx.mp.mpc(v)
    return [format_value(v.real, ctx), format_value(v.imag, ctx), format_value(abs(v), ctx)]


def _zero_rows(zeros, ctx):
    rows = []
    for k, z in enumerate(zeros, start=1):
        d = z.to_dict(ctx)
        rows.append([k, d["function"], d["re"], d["im"], d["residual"], d["method"]])
    return rows


def _cmd_zeros(job, ctx):
    from .zeros import line_zeros

    fid = _function(job)
    t0, t1 = _pair(job.range, "range")
    zeros, warnings = line_zeros(fid, t0, t1, job.step, ctx)
    doc = _base(job, ctx) | {
        "function": fid.value,
        "range": {"t_min": t0, "t_max": t1},
        "zeros": [z.to_dict(ctx) for z in zeros],
        "warnings": warnings,
    }
    return doc, (ZERO_CSV_HEADER, _zero_rows(zeros, ctx)), EXIT_OK


def _cmd_census(job, ctx):
    from .zeros import Rectangle, zero_census

    fid = _function(job)
    if job.height is None:
        raise UsageError("census needs --height")
    strip = _rect(job) if job.rect else Rectangle(-5, 6, 0, job.height)
    rep = zero_census(fid, job.height, strip, ctx, step=job.step, workers=job.workers)
    doc = _base(job, ctx) | rep.to_dict(ctx)
    doc["suspects"] = doc.pop("off_line_suspects")
    code = EXIT_OK if rep.rh_holds else EXIT_FAILED
    return doc, (ZERO_CSV_HEADER, _zero_rows(rep.zeros, ctx)), code


def _cmd_rect_count(job, ctx):
    from .zeros import count_zeros_report

    fid = _function(job)
    rc = count_zeros_report(fid, _rect(job), ctx, job.step or 0.1)
    doc = _base(job, ctx) | {
        "function": fid.value,
        "rectangle": rc.rectangle.to_dict(ctx),
        "count": rc.count,
        "nudges": list(rc.nudges),
    }
    return doc, (["function", "count"], [[fid.value, rc.count]]), EXIT_OK


def _cmd_derive(job, ctx):
    from .weyl import assemble_period, closed_form_symbolic, normalize_to_zeta
    from .weyl.period import contribution_table

    n = job.n or 2
    period = assemble_period(n)
    norm = normalize_to_zeta(period, n)
    var = [f"z{k + 1}" for k in range(n)]
    last = var[:-1] + ["b"]
    doc = _base(job, ctx) | {
        "n": n,
        "weyl_terms": [
            {"element": name, "term": term.text(var),
             "residue": None if res is None else res.text(last)}
            for name, term, res in contribution_table(n)
        ],
        "period": period.serialize(last).splitlines(),
        "clearing_factor": norm.factor.text(last),
        "normalized": norm.xi_o.serialize(last).splitlines(),
        "reflection_constant": None if norm.reflection is None else str(norm.reflection),
        "zeta": None if norm.xi_s is None else norm.xi_s.serialize(var[:-1] + ["s"]).splitlines(),
    }
    code = EXIT_OK
    if n == 2:
        diff = norm.xi_s - closed_form_symbolic() if norm.xi_s is not None else None
        doc["closed_form_diff"] = None if diff is None else diff.serialize(["z1", "s"]).splitlines()
        if diff is None or len(diff):
            code = EXIT_FAILED
    rows = [[k, line] for k, line in enumerate(doc["normalized"], start=1)]
    return doc, (["index", "term"], rows), code


def _cmd_fe_search(job, ctx):
    from .weyl import assemble_period, normalize_to_zeta, search_functional_equation

    n = job.n or 2
    norm = normalize_to_zeta(assemble_period(n), n)
    res = search_functional_equation(norm.xi_o, n, samples=job.samples or 8, ctx=ctx)
    doc = _base(job, ctx) | {
        "n": n,
        "constant": str(res.constant),
        "residual": format_value(res.residual, ctx, 6),
        "table": [{"c": str(c), "residual": format_value(r, ctx, 6)} for c, r in res.table],
    }
    rows = [[str(c), format_value(r, ctx, 6)] for c, r in res.table]
    return doc, (["c", "residual"], rows), EXIT_OK


def _cmd_verify_bounds(job, ctx):
    from .zeros import verify_region_bounds

    kind = job.kind or "r_bound"
    defaults = {
        "r_bound": ("10,40,1", "0,40,1"),
        "prop32_ratio": ("0.6;1;2;5;10;20", "22,100,6"),
        "lemma39_inequality": ("0.6;1;2;5;10;20", "22,100,6"),
    }
    if kind not in defaults:
        raise UsageError(f"unknown bound kind {kind!r}")
    sig = _grid(job.sigma_grid or defaults[kind][0], "sigma grid")
    ts = _grid(job.t_grid or defaults[kind][1], "t grid")
    rep = verify_region_bounds(kind, sig, ts, ctx)
    doc = _base(job, ctx) | rep.to_dict(ctx)
    rows = [[k, q["max"], q["at"], q["bound"]] for k, q in sorted(doc["quantities"].items())]
    return doc, (["quantity", "max", "at", "bound"], rows), EXIT_OK if rep.all_below else EXIT_FAILED


def _cmd_plot_data(job, ctx):
    fid = _function(job)
    mp = ctx.mp
    axis = job.axis or "critical-line"
    samples = job.samples if job.samples is not None else 101
    if samples < 2:
        raise UsageError("plot-data needs --samples >= 2")
    points = []
    if axis in ("critical-line", "real-axis"):
        a, b = (ctx.real(x) for x in _pair(job.range, "range"))
        for k in range(samples):
            p = a + (b - a) * k / (samples - 1)
            s = mp.mpc(mp.mpf(0.5), p) if axis == "critical-line" else mp.mpc(p, 0)
            points.append((format_value(p, ctx, 12), s))
    elif axis == "rect-grid":
        x0, x1, y0, y1 = _rect(job).bounds(ctx)
        for j in range(samples):
            for k in range(samples):
                s = mp.mpc(x0 + (x1 - x0) * k / (samples - 1), y0 + (y1 - y0) * j / (samples - 1))
                points.append((format_value(s, ctx, 12), s))
    else:
        raise UsageError(f"unknown axis {axis!r}")
    rows = []
    for label, s in points:
        r = evaluate(fid, s, ctx)
        rows.append([label, "nan", "nan", "inf"] if r.at_pole else [label, *_row(r.value, ctx)])
    doc = _base(job, ctx) | {
        "function": fid.value,
        "axis": axis,
        "rows": [dict(zip(PLOT_CSV_HEADER, r)) for r in rows],
    }
    return doc, (PLOT_CSV_HEADER, rows), EXIT_OK


_HANDLERS = {
    "eval": _cmd_eval,
    "zeros": _cmd_zeros,
    "census": _cmd_census,
    "rect-count": _cmd_rect_count,
    "derive": _cmd_derive,
    "fe-search": _cmd_fe_search,
    "verify-bounds": _cmd_verify_bounds,
    "plot-data": _cmd_plot_data,
}


def render(job: JobSpec, doc: dict, table) -> str:
    if job.output == "csv":
        header, rows = table
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def run(job: JobSpec) -> tuple[int, str]:
    """Execute a job; returns (exit code, rendered output)."""
    if job.command not in _HANDLERS:
        raise UsageError(f"unknown command {job.command!r}")
    if job.output not in ("json", "csv"):
        raise UsageError(f"unknown output format {job.output!r}")
    ctx = create_context(job.bits)
    doc, table, code = _HANDLERS[job.command](job, ctx)
    return code, render(job, doc, table)


# --- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sp4zeta", description=__doc__.splitlines()[0])
    parser.add_argument("--job", help="replay a saved JobSpec (JSON file)")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--bits", type=int, default=DEFAULT_BITS)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="output", action="store_const", const="json")
        fmt.add_argument("--csv", dest="output", action="store_const", const="csv")
        p.add_argument("--out", dest="out_path")
        p.add_argument("--save-job", help="write the JobSpec to this path and run it")
        p.set_defaults(output="json")

    p = sub.add_parser("eval", help="evaluate a function at one point")
    p.add_argument("--fn", dest="function", required=True)
    p.add_argument("--s", required=True)
    common(p)

    p = sub.add_parser("zeros", help="zeros on the critical line in a t-range")
    p.add_argument("--fn", dest="function", required=True)
    p.add_argument("--range", required=True)
    p.add_argument("--step", type=float)
    common(p)

    p = sub.add_parser("census", help="rectangle count vs critical-line count")
    p.add_argument("--fn", dest="function", required=True)
    p.add_argument("--height", type=float, required=True)
    p.add_argument("--rect", help="strip a,b,c,d (default -5,6,0,height)")
    p.add_argument("--step", type=float)
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("rect-count", help="argument-principle zero count in a rectangle")
    p.add_argument("--fn", dest="function", required=True)
    p.add_argument("--rect", required=True)
    p.add_argument("--step", type=float)
    common(p)

    p = sub.add_parser("derive", help="Weyl-group period, residues and normalised zeta")
    p.add_argument("--n", type=int, default=2)
    common(p)

    p = sub.add_parser("fe-search", help="search the reflection constant of the normalised zeta")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--samples", type=int)
    common(p)

    p = sub.add_parser("verify-bounds", help="maximum of a bounded quantity over a grid")
    p.add_argument("--kind", choices=("r_bound", "prop32_ratio", "lemma39_inequality"), default="r_bound")
    p.add_argument("--sigma-grid", help="start,stop,step or a;b;c")
    p.add_argument("--t-grid", help="start,stop,step or a;b;c")
    common(p)

    p = sub.add_parser("plot-data", help="sample a function along a line or grid")
    p.add_argument("--fn", dest="function", required=True)
    p.add_argument("--axis", choices=("critical-line", "real-axis", "rect-grid"), default="critical-line")
    p.add_argument("--range")
    p.add_argument("--rect")
    p.add_argument("--samples", type=int, default=101)
    common(p)
    return parser


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    known = {f.name for f in fields(JobSpec)}
    data = {k: v for k, v in vars(ns).items() if k in known and v is not None}
    return JobSpec(**data)


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.job:
            with open(ns.job, encoding="utf-8") as fh:
                job = JobSpec.from_json(fh.read())
        elif ns.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_ERROR
        else:
            job = job_from_args(ns)
            if getattr(ns, "save_job", None):
                with open(ns.save_job, "w", encoding="utf-8") as fh:
                    fh.write(job.to_json() + "\n")
        code, text = run(job)
    except (UsageError, PrecisionError, PoleError, ArithmeticError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if job.out_path:
        with open(job.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
