"""Confusion matrices, accuracy/precision/recall/F1, table rendering, plots."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptyInput,
    EmptyMatrix,
    InconsistentClasses,
    IoError,
    LengthMismatch,
    UnknownClass,
)


@dataclass
class ConfusionMatrix:
    classes: list  # ordered class list; rows = true class, columns = predicted
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass
class MetricsReport:
    accuracy: float
    per_class: dict  # class -> (precision, recall, f1)
    matrix: ConfusionMatrix
    meta: dict = field(default_factory=dict)
    degenerate_classes: set = field(default_factory=set)


def confusion_matrix(preds, labels, classes) -> ConfusionMatrix:
    preds, labels, classes = list(preds), list(labels), list(classes)
    if len(preds) != len(labels):
        raise LengthMismatch(f"{len(preds)} predictions vs {len(labels)} labels")
    if not preds:
        raise EmptyInput("no predictions to evaluate")
    index = {c: i for i, c in enumerate(classes)}
    counts = np.zeros((len(classes), len(classes)), dtype=np.int64)
    for p, t in zip(preds, labels):
        if t not in index:
            raise UnknownClass(f"label {t!r} not in class list")
        if p not in index:
            raise UnknownClass(f"prediction {p!r} not in class list")
        counts[index[t], index[p]] += 1
    return ConfusionMatrix(classes=classes, counts=counts)


def f1_score(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def metrics_from_confusion(matrix: ConfusionMatrix, meta: dict | None = None) -> MetricsReport:
    counts = matrix.counts
    total = matrix.total
    if total == 0:
        raise EmptyMatrix("confusion matrix has no entries")
    accuracy = float(np.trace(counts)) / total
    per_class = {}
    degenerate = set()
    for i, cls in enumerate(matrix.classes):
        col = int(counts[:, i].sum())
        row = int(counts[i, :].sum())
        diag = int(counts[i, i])
        if col == 0:
            precision = 0.0
            degenerate.add(cls)
        else:
            precision = diag / col
        if row == 0:
            recall = 0.0
            degenerate.add(cls)
        else:
            recall = diag / row
        per_class[cls] = (precision, recall, f1_score(precision, recall))
    return MetricsReport(
        accuracy=accuracy,
        per_class=per_class,
        matrix=matrix,
        meta=dict(meta or {}),
        degenerate_classes=degenerate,
    )


# --- table rendering -------------------------------------------------------

LAYOUTS = ("per_model", "combiner_comparison", "modality_comparison")


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def _class_name(cls) -> str:
    return getattr(cls, "value", str(cls)).capitalize()


def _column_title(report: MetricsReport, i: int) -> str:
    return str(report.meta.get("model", f"model_{i}"))


def render_report(reports: list[MetricsReport], layout: str) -> tuple[str, str]:
    """Render a metrics table plus its CSV mirror.

    Accuracy is shown as a percentage with two decimals; per-class metrics
    are integer percentages in the comparison layouts and two-decimal
    fractions in the single-model layout. The CSV mirror keeps raw
    fractions (full precision) under the schema
    model,dataset,class,metric,value.
    """
    if layout not in LAYOUTS:
        raise ValueError(f"unknown layout {layout!r}; expected one of {LAYOUTS}")
    if not reports:
        raise ValueError("no reports to render")
    classes = reports[0].matrix.classes
    for r in reports[1:]:
        if r.matrix.classes != classes:
            raise InconsistentClasses(
                f"class sets differ: {classes} vs {r.matrix.classes}"
            )

    titles = [_column_title(r, i) for i, r in enumerate(reports)]
    fraction_style = layout == "per_model"

    def fmt_acc(r):
        return f"{r.accuracy * 100:.2f}"

    def fmt_metric(v):
        if fraction_style:
            return f"{v:.2f}"
        return str(_round_half_up(v * 100))

    rows = [("Accuracy", "", [fmt_acc(r) for r in reports])]
    for metric_name, slot in (("Precision", 0), ("Recall", 1), ("F1-Score", 2)):
        for cls in classes:
            rows.append(
                (metric_name, _class_name(cls),
                 [fmt_metric(r.per_class[cls][slot]) for r in reports])
            )

    head = ["", ""] + titles
    widths = [max(len(str(rows_i)) for rows_i in col)
              for col in zip(*([head] + [[m, c] + vals for m, c, vals in rows]))]
    lines = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    last_metric = None
    for metric, cls, vals in rows:
        shown = metric if metric != last_metric else ""
        last_metric = metric
        cells = [shown, cls] + vals
        lines.append("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    text = "\n".join(lines) + "\n"

    csv_lines = ["model,dataset,class,metric,value"]
    for r, title in zip(reports, titles):
        dataset = str(r.meta.get("dataset", ""))
        csv_lines.append(f"{title},{dataset},,accuracy,{r.accuracy!r}")
        for metric_name, slot in (("precision", 0), ("recall", 1), ("f1", 2)):
            for cls in classes:
                value = r.per_class[cls][slot]
                csv_lines.append(
                    f"{title},{dataset},{getattr(cls, 'value', cls)},{metric_name},{value!r}"
                )
    csv = "\n".join(csv_lines) + "\n"
    return text, csv


def emit_confusion_plot(matrix: ConfusionMatrix, output_path) -> None:
    """Write an annotated heatmap of the matrix to output_path."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    n = len(matrix.classes)
    names = [_class_name(c) for c in matrix.classes]
    fig, ax = plt.subplots(figsize=(1.6 * n + 1.5, 1.6 * n + 1.0))
    im = ax.imshow(matrix.counts, cmap="Blues")
    ax.set_xticks(range(n), names)
    ax.set_yticks(range(n), names)
    ax.set_xlabel("Predicted")
    ax.set_ylabel("True")
    threshold = matrix.counts.max() / 2.0 if matrix.total else 0
    for i in range(n):
        for j in range(n):
            v = int(matrix.counts[i, j])
            ax.text(j, i, str(v), ha="center", va="center",
                    color="white" if v > threshold else "black")
    fig.colorbar(im, ax=ax, fraction=0.046)
    fig.tight_layout()
    try:
        fig.savefig(output_path)
    except OSError as e:
        raise IoError(f"cannot write plot to {output_path}: {e}") from e
    finally:
        plt.close(fig)
