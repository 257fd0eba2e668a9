"""Command-line front end.

Subcommands: tabulate, plotdata, verify, kernel, transform, gram.  Values
are written as CSV (RFC-4180-style, header row, %.17g, LF endings) or
JSON with sorted keys; everything is deterministic given the same build.
A JSON config file can supply any long-option value; explicit flags win.
``--render`` additionally writes a matplotlib figure next to the
delimited output.  Exit codes: 0 success, 1 verification failures,
2 invalid parameters, 3 numerical failure.  QE_THREADS caps suite-level
parallelism in ``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .eigenfun import lambda_batch
from .gtransform import KernelSpec, g_transform, kernel_for, meijer_kernel
from .params import ParamSet
from .quadrature import gram_matrix, inner_product
from .verify import SUITE_NAMES, run_suite


def _fmt(v: float) -> str:
    return "%.17g" % float(v)


def _write_text(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _x_grid(ns) -> np.ndarray:
    if ns.x is not None:
        return np.array([float(ns.x)])
    count = int(ns.xcount)
    if count < 1:
        raise ValueError("grid count must be >= 1")
    lo, hi = float(ns.xmin), float(ns.xmax)
    if ns.xspacing == "log":
        if lo <= 0:
            raise ValueError("log spacing needs min > 0")
        return np.geomspace(lo, hi, count)
    return np.linspace(lo, hi, count)


def _params(ns) -> ParamSet:
    return ParamSet.classify(float(ns.mu), float(ns.nu))


def _check_family(i: int, p: ParamSet):
    if i not in (1, 2, 3, 4):
        raise ValueError("family index i must be 1..4")
    if i in (3, 4) and not p.ic2:
        raise ValueError("families 3, 4 require odd integer mu >= 1 (ic2)")


def _figure_path(output: str | None, fallback: str) -> str:
    base = output if output not in (None, "-") else fallback
    root, _ = os.path.splitext(base)
    return root + ".png"


# ---------------------------------------------------------------------------
# subcommands


def cmd_tabulate(ns) -> int:
    p = _params(ns)
    i = int(ns.i)
    _check_family(i, p)
    xs = _x_grid(ns)
    js, mat = lambda_batch(i, p, int(ns.jmax), xs)
    rows = []
    for rj, j in enumerate(js):
        for cx, x in enumerate(xs):
            rows.append((i, j, p.mu, p.nu, float(x), float(mat[rj, cx])))
    if not all(np.isfinite(r[-1]) for r in rows):
        raise ArithmeticError("non-finite value in tabulation")
    if ns.format == "json":
        payload = {
            "rows": [
                {"i": r[0], "j": r[1], "mu": r[2], "nu": r[3], "x": r[4], "value": r[5]}
                for r in rows
            ]
        }
        _write_text(ns.output, json.dumps(payload, sort_keys=True, indent=1) + "\n")
    else:
        lines = ["i,j,mu,nu,x,value"]
        lines += [
            f"{r[0]},{r[1]},{_fmt(r[2])},{_fmt(r[3])},{_fmt(r[4])},{_fmt(r[5])}" for r in rows
        ]
        _write_text(ns.output, "\n".join(lines) + "\n")
    return 0


def cmd_plotdata(ns) -> int:
    p = _params(ns)
    i = int(ns.i)
    _check_family(i, p)
    xs = _x_grid(ns)
    js, mat = lambda_batch(i, p, int(ns.jmax), xs)
    if not np.all(np.isfinite(mat)):
        raise ArithmeticError("non-finite value on the plot grid")
    names = [f"L{i}_{j}" for j in js]
    lines = ["x," + ",".join(names)]
    for cx, x in enumerate(xs):
        lines.append(_fmt(x) + "," + ",".join(_fmt(mat[rj, cx]) for rj in range(len(js))))
    _write_text(ns.output, "\n".join(lines) + "\n")
    if ns.render:
        from .figures import render_columns

        out = _figure_path(ns.output, f"plotdata_i{i}.png")
        cols = {name: mat[rj] for rj, name in enumerate(names)}
        render_columns(xs, cols, out, title=f"families i={i}, mu={p.mu:g}, nu={p.nu:g}",
                       logx=ns.xspacing == "log")
    return 0


def cmd_verify(ns) -> int:
    names = ns.suite or list(SUITE_NAMES)
    for n in names:
        if n not in SUITE_NAMES:
            raise ValueError(f"unknown suite {n!r}; choose from {', '.join(SUITE_NAMES)}")
    config = {}
    if ns.mu is not None and ns.nu is not None:
        config["mu"] = float(ns.mu)
        config["nu"] = float(ns.nu)
    if ns.tol is not None:
        config["tol"] = float(ns.tol)
    if ns.precision is not None:
        config["precision_mode"] = ns.precision
    if ns.selftest_perturb:
        config["perturb"] = float(ns.selftest_perturb)
    try:
        workers = max(1, int(os.environ.get("QE_THREADS", "1")))
    except ValueError:
        workers = 1
    if workers > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda n: run_suite(n, config), names))
    else:
        reports = [run_suite(n, config) for n in names]
    dicts = [r.to_dict(timestamp=not ns.no_timestamp) for r in reports]
    if len(dicts) == 1:
        payload = dicts[0]
    else:
        agg = {"passed": 0, "failed": 0, "skipped": 0}
        for d in dicts:
            for k in agg:
                agg[k] += d["summary"][k]
        payload = {"reports": dicts, "summary": agg}
    _write_text(ns.output, json.dumps(payload, sort_keys=True, indent=1) + "\n")
    if ns.render:
        from .figures import render_report

        render_report(dicts, _figure_path(ns.output, "verify_report.png"))
    ok = all(r.all_passed for r in reports)
    if not ns.output or ns.output == "-":
        pass
    for r in reports:
        s = r.summary
        print(
            f"[{r.suite}] passed={s['passed']} failed={s['failed']} skipped={s['skipped']}",
            file=sys.stderr,
        )
    return 0 if ok else 1


def cmd_kernel(ns) -> int:
    p = _params(ns)
    spec = kernel_for(p) if ns.mode is None else KernelSpec(p.mu, p.nu, _kernel_mode(ns.mode))
    count = int(ns.tcount)
    lo, hi = float(ns.tmin), float(ns.tmax)
    ts = np.geomspace(lo, hi, count) if ns.tspacing == "log" else np.linspace(lo, hi, count)
    vals = meijer_kernel(spec, ts)
    lines = ["t,G"]
    lines += [f"{_fmt(t)},{_fmt(v)}" for t, v in zip(ts, vals)]
    _write_text(ns.output, "\n".join(lines) + "\n")
    if ns.render:
        from .figures import render_columns

        render_columns(
            ts, {"G": vals}, _figure_path(ns.output, "kernel.png"),
            title=f"kernel mu={p.mu:g}, nu={p.nu:g}", logx=ns.tspacing == "log",
        )
    return 0


def cmd_transform(ns) -> int:
    p = _params(ns)
    i = int(ns.i)
    _check_family(i, p)
    from .eigenfun import EigenfunctionHandle

    h = EigenfunctionHandle(i, int(ns.j), p)
    xs = _x_grid(ns)
    tol = float(ns.tol) if ns.tol is not None else 1e-6
    lines = ["x,Tf,f,error_estimate,converged"]
    for x in xs:
        r = g_transform(p, h.evaluate, float(x), tol)
        lines.append(
            f"{_fmt(x)},{_fmt(r.value)},{_fmt(h.evaluate(float(x)))},{_fmt(r.abs_error_estimate)},{int(r.converged)}"
        )
    _write_text(ns.output, "\n".join(lines) + "\n")
    return 0


def cmd_gram(ns) -> int:
    """Gram matrix under the canonical weight; exploration is allowed at any
    mu >= nu >= -1 (nothing is asserted outside the proven range)."""
    p = _params(ns)
    tol = float(ns.tol) if ns.tol is not None else 1e-9
    jmax = int(ns.jmax)
    g = gram_matrix(p, jmax, tol)
    lines = [",".join(["j\\k"] + [str(k) for k in range(jmax + 1)])]
    for j in range(jmax + 1):
        lines.append(",".join([str(j)] + [_fmt(g[j, k]) for k in range(jmax + 1)]))
    _write_text(ns.output, "\n".join(lines) + "\n")
    return 0


def _kernel_mode(name: str):
    from .gtransform import KernelMode

    return KernelMode(name)


# ---------------------------------------------------------------------------
# parser and config merging


def _add_param_opts(sp, need_i=True):
    sp.add_argument("--mu", type=float, default=None)
    sp.add_argument("--nu", type=float, default=None)
    if need_i:
        sp.add_argument("--i", type=int, default=None)


def _add_grid_opts(sp):
    sp.add_argument("--x", type=float, default=None, help="single grid point")
    sp.add_argument("--xmin", type=float, default=None)
    sp.add_argument("--xmax", type=float, default=None)
    sp.add_argument("--xcount", type=int, default=None)
    sp.add_argument("--xspacing", choices=("linear", "log"), default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quarteig",
        description="Eigenfunctions of the two-parameter fourth-order operator: "
        "tabulation, kernel/transform evaluation and verification suites.",
    )
    ap.add_argument("--config", default=None, help="JSON file with option defaults")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tabulate", help="write (i, j, mu, nu, x, value) rows")
    _add_param_opts(t)
    _add_grid_opts(t)
    t.add_argument("--jmax", type=int, default=None)
    t.add_argument("--format", choices=("csv", "json"), default=None)
    t.add_argument("--output", default=None)
    t.set_defaults(fn=cmd_tabulate)

    pl = sub.add_parser("plotdata", help="write x against all families j <= jmax")
    _add_param_opts(pl)
    _add_grid_opts(pl)
    pl.add_argument("--jmax", type=int, default=None)
    pl.add_argument("--output", default=None)
    pl.add_argument("--render", action="store_true", help="write a PNG next to the CSV")
    pl.set_defaults(fn=cmd_plotdata)

    v = sub.add_parser("verify", help="run verification suites, write a JSON report")
    v.add_argument("--suite", action="append", default=None, help="repeatable; default all")
    v.add_argument("--mu", type=float, default=None)
    v.add_argument("--nu", type=float, default=None)
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--precision", choices=("double", "double_double"), default=None)
    v.add_argument("--output", default=None)
    v.add_argument("--render", action="store_true", help="write a residual chart PNG")
    v.add_argument("--no-timestamp", action="store_true")
    v.add_argument(
        "--selftest-perturb",
        type=float,
        default=0.0,
        help="forced-failure harness check: bias eigen residuals by this amount",
    )
    v.set_defaults(fn=cmd_verify)

    k = sub.add_parser("kernel", help="evaluate the transform kernel on a t-grid")
    _add_param_opts(k, need_i=False)
    k.add_argument("--mode", choices=("hypergeometric_pair", "hankel_reduction"), default=None)
    k.add_argument("--tmin", type=float, default=None)
    k.add_argument("--tmax", type=float, default=None)
    k.add_argument("--tcount", type=int, default=None)
    k.add_argument("--tspacing", choices=("linear", "log"), default=None)
    k.add_argument("--output", default=None)
    k.add_argument("--render", action="store_true")
    k.set_defaults(fn=cmd_kernel)

    tr = sub.add_parser("transform", help="apply the transform to one eigenfunction")
    _add_param_opts(tr)
    _add_grid_opts(tr)
    tr.add_argument("--j", type=int, default=None)
    tr.add_argument("--tol", type=float, default=None)
    tr.add_argument("--output", default=None)
    tr.set_defaults(fn=cmd_transform)

    g = sub.add_parser("gram", help="Gram matrix of the L2 family (exploratory)")
    _add_param_opts(g, need_i=False)
    g.add_argument("--jmax", type=int, default=None)
    g.add_argument("--tol", type=float, default=None)
    g.add_argument("--output", default=None)
    g.set_defaults(fn=cmd_gram)
    return ap


_DEFAULTS = {
    "i": 2,
    "jmax": 4,
    "j": 0,
    "xmin": 0.5,
    "xmax": 5.0,
    "xcount": 10,
    "xspacing": "linear",
    "format": "csv",
    "tmin": 0.01,
    "tmax": 10.0,
    "tcount": 50,
    "tspacing": "log",
    "mu": 3.0,
    "nu": 1.0,
}


def _merge_config(ns: argparse.Namespace) -> argparse.Namespace:
    """Fill unset options from the JSON config, then from built-in defaults."""
    file_cfg = {}
    if ns.config:
        with open(ns.config) as fh:
            file_cfg = json.load(fh)
        if not isinstance(file_cfg, dict):
            raise ValueError("config file must hold a JSON object")
    for key, val in vars(ns).items():
        if val is None and key in file_cfg:
            setattr(ns, key, file_cfg[key])
    for key, val in _DEFAULTS.items():
        if getattr(ns, key, "absent") is None:
            setattr(ns, key, val)
    return ns


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        ns = _merge_config(ns)
        return ns.fn(ns)
    except (ValueError, KeyError) as exc:
        print(f"error: invalid parameters: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, OverflowError) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
