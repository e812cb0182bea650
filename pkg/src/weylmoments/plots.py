"""Figure rendering for report documents.

Every row-producing subcommand can render its rows as a matplotlib figure
written next to the delimited output (Agg backend, file output only).
The x axis is the subcommand's natural sweep column when present,
otherwise the row index; every other numeric column becomes a series.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be fixed first)

from .report import ReportDocument  # noqa: E402


def _numeric_columns(rows: list[dict]) -> list[str]:
    cols = []
    for key in sorted({k for row in rows for k in row}):
        values = [row.get(key) for row in rows]
        if all(isinstance(v, (int, float)) and not isinstance(v, bool)
               for v in values if v is not None):
            if any(v is not None for v in values):
                cols.append(key)
    return cols


def render_report(doc: ReportDocument, path: str, x_field: str | None = None) -> str:
    """Plot the numeric row columns and save to `path`; returns the path."""
    if not doc.rows:
        raise ValueError("nothing to plot: report has no rows")
    numeric = _numeric_columns(doc.rows)
    if x_field in numeric and len(doc.rows) > 1:
        xs = [row.get(x_field) for row in doc.rows]
        x_label = x_field
        series = [c for c in numeric if c != x_field]
    else:
        xs = list(range(len(doc.rows)))
        x_label = "row"
        series = numeric
    if not series:
        raise ValueError("nothing to plot: no numeric columns")

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    positive = True
    for col in series:
        ys = [row.get(col) for row in doc.rows]
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.0, label=col)
        positive = positive and all(y is not None and y > 0 for y in ys)
    spread = _spread(doc.rows, series)
    if positive and spread > 1e3:
        ax.set_yscale("log")
    if x_label != "row" and all(isinstance(x, (int, float)) and x > 0 for x in xs):
        if xs and max(xs) / max(min(xs), 1e-300) > 1e3:
            ax.set_xscale("log")
    ax.set_xlabel(x_label)
    ax.set_title(doc.command)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def _spread(rows: list[dict], cols: list[str]) -> float:
    values = [row.get(c) for row in rows for c in cols
              if isinstance(row.get(c), (int, float)) and row.get(c)]
    values = [abs(v) for v in values if v]
    if not values:
        return 1.0
    return max(values) / min(values)
