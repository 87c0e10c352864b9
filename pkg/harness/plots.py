import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams.update({"font.family": "DejaVu Sans", "axes.unicode_minus": False, "svg.hashsalt": "diverse"})

import matplotlib.pyplot as plt  # noqa: E402

from config.settings import get_logger  # noqa: E402
from diversity.bounds import g  # noqa: E402
from errors import InputError  # noqa: E402

logger = get_logger(__name__)

PLOT_KINDS = ("objective", "diversity")


def _series(rows):
    grouped = {}
    for row in rows:
        grouped.setdefault((row.algo, row.constraint), []).append(row)
    for key in grouped:
        grouped[key].sort(key=lambda row: row.param)
    return dict(sorted(grouped.items()))


def emit_plot(rows, kind: str, path: str) -> str:
    """
    Writes a normalized sweep plot as SVG: objective rows are divided by the
    best-known column, diversity rows by the ss bound column.
    """
    if kind not in PLOT_KINDS:
        raise InputError(f"plot kind must be one of {PLOT_KINDS}, got {kind!r}")
    if not rows:
        raise InputError("no sweep rows to plot")

    fig, ax = plt.subplots(figsize=(6.4, 4.2), constrained_layout=True)
    for (algo, constraint), series in _series(rows).items():
        xs = [row.param for row in series]
        label = f"{algo} {constraint}"
        if kind == "objective":
            denominator = series[0].best_known
            if not denominator:
                denominator = max(row.min_f for row in series) or 1
                label += " (vs max observed)"
                logger.warning(f"No best-known value for {label}; normalizing against the max observed.")
            ys = [row.min_f / denominator for row in series]
        else:
            ys = [row.ss / row.ss_bound if row.ss_bound else 0.0 for row in series]
        ax.plot(xs, ys, marker="o", label=label)

    ax.set_xlabel("b" if all(row.algo == "common" for row in rows) else "parameter (b or l)")
    ax.set_ylabel("min f / best known" if kind == "objective" else "ss / bound")
    ax.set_ylim(0.0, 1.05)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info(f"Wrote {kind} plot with {len(rows)} rows to {path}")
    return path


def emit_g_plot(path: str, a_values=range(100, 501, 100), ratios=(0.05, 0.1, 0.2, 0.3, 0.4, 0.5), c_values=range(10, 91, 20)) -> str:
    """g(a, floor(ratio * a), c) against c, one series per (a, ratio)."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2), constrained_layout=True)
    for a in a_values:
        for ratio in ratios:
            b = int(ratio * a)
            ax.plot(list(c_values), [g(a, b, c) for c in c_values], linewidth=0.8, label=f"a={a}, b={b}")
    ax.set_xlabel("c")
    ax.set_ylabel("g(a, b, c)")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper left", fontsize=5, ncol=2)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path
