"""Figure rendering for the CLI report paths (Agg backend, files only)."""

from __future__ import annotations


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_columns(xs, columns: dict, out_path: str, title: str = "", logx: bool = False):
    """Line plot of named columns against x, written to out_path."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, ys in columns.items():
        ax.plot(xs, ys, label=name, lw=1.2)
    if logx:
        ax.set_xscale("log")
    ax.set_xlabel("x")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def render_report(report_dicts, out_path: str):
    """Residual/tolerance chart for one or more suite reports."""
    plt = _plt()
    rows = []
    for rep in report_dicts:
        for case in rep["cases"]:
            if case.get("skipped_reason") is not None:
                continue
            ratio = case["residual"] / case["tolerance"] if case["tolerance"] > 0 else 0.0
            rows.append((f"{rep['suite']}:{case['id']}", max(ratio, 1e-18), case["passed"]))
    if not rows:
        return
    fig, ax = plt.subplots(figsize=(8.0, max(3.0, 0.12 * len(rows))))
    ys = range(len(rows))
    ax.barh(
        list(ys),
        [r[1] for r in rows],
        color=["#2a7e43" if r[2] else "#b02a2a" for r in rows],
        log=True,
    )
    ax.axvline(1.0, color="k", lw=1.0, ls="--")
    ax.set_yticks(list(ys))
    ax.set_yticklabels([r[0] for r in rows], fontsize=4)
    ax.set_xlabel("residual / tolerance")
    ax.set_xlim(left=1e-18)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
