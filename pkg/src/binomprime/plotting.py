"""Figures for benchmark output."""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_STYLE = {
    "font.size": 10,
    "axes.labelsize": 11,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "lines.linewidth": 1.4,
    "lines.markersize": 4,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}

_MARKERS = "osD^v<>ph*"


def _series(rows):
    series = {}
    for row in rows:
        if row.verdict == "BUDGET":
            continue
        series.setdefault((row.kind, row.mode), []).append(row)
    return series


def plot_bench(rows, path, title=None):
    """Plot terms, multiplications and wall time against n; write to ``path``.

    Returns the path.  Budget-exceeded rows are left out.
    """
    series = _series(rows)
    with plt.rc_context(_STYLE):
        fig, axes = plt.subplots(1, 3, figsize=(13, 4))
        columns = (
            ("terms_evaluated", "terms evaluated"),
            ("multiplications", "multiplications"),
            ("wall_time_ns", "wall time [ns]"),
        )
        for ax, (attr, label) in zip(axes, columns):
            for i, ((kind, mode), pts) in enumerate(sorted(series.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value))):
                pts = sorted(pts, key=lambda r: r.n)
                xs = [r.n for r in pts]
                ys = [max(getattr(r, attr), 1) for r in pts]
                style = "-" if len(xs) > 1 else ""
                ax.plot(xs, ys, style, marker=_MARKERS[i % len(_MARKERS)],
                        markevery=max(1, len(xs) // 12), label=f"{kind.value} ({mode.value})")
            ax.set_xlabel("n")
            ax.set_ylabel(label)
            ax.set_yscale("log")
            ax.grid(True, which="major", alpha=0.3)
        axes[0].legend(loc="best", frameon=False)
        if title:
            fig.suptitle(title)
        fig.savefig(path)
        plt.close(fig)
    return path
