"""Confusion-matrix accounting and per-class precision/recall/F figures.

Orientation is fixed: rows are the machine's labels, columns the human
annotator's, both in canonical polarity order. Precision is then diagonal
over row sum and recall diagonal over column sum. Ratios with a zero
denominator are carried as None (an explicit undefined marker), never as 0.

F is the harmonic mean of precision and recall after each has been rounded
to 3 decimals (half-up). Published three-decimal figures are computed from
already-rounded inputs, and reproducing them exactly requires combining at
the same precision; full-precision inputs can land outside the last digit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .corpus import POLARITIES, Polarity


def _round3(value: float) -> float:
    return float(Decimal(str(value)).quantize(Decimal("0.001"), rounding=ROUND_HALF_UP))


def _ratio(num: int, den: int) -> float | None:
    return num / den if den else None


@dataclass(frozen=True)
class ConfusionMatrix:
    """3x3 count table; counts[machine polarity index][human polarity index]."""

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.counts) != 3 or any(len(row) != 3 for row in self.counts):
            raise ValueError("confusion matrix must be 3x3")
        for row in self.counts:
            for cell in row:
                if not isinstance(cell, int) or cell < 0:
                    raise ValueError(f"cell counts must be non-negative integers, got {cell!r}")

    def cell(self, machine: Polarity, human: Polarity) -> int:
        return self.counts[machine.index][human.index]

    def machine_total(self, polarity: Polarity) -> int:
        return sum(self.counts[polarity.index])

    def human_total(self, polarity: Polarity) -> int:
        return sum(row[polarity.index] for row in self.counts)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    @property
    def trace(self) -> int:
        return sum(self.counts[i][i] for i in range(3))

    def transpose(self) -> "ConfusionMatrix":
        return ConfusionMatrix(tuple(zip(*self.counts)))


def build_confusion(pairs: list[tuple[Polarity, Polarity]]) -> ConfusionMatrix:
    """Tally (machine, human) label pairs into a matrix; empty list allowed."""
    counts = [[0, 0, 0] for _ in range(3)]
    for machine, human in pairs:
        counts[machine.index][human.index] += 1
    return ConfusionMatrix(tuple(tuple(row) for row in counts))


def precision(cm: ConfusionMatrix, polarity: Polarity) -> float | None:
    return _ratio(cm.cell(polarity, polarity), cm.machine_total(polarity))


def recall(cm: ConfusionMatrix, polarity: Polarity) -> float | None:
    return _ratio(cm.cell(polarity, polarity), cm.human_total(polarity))


def f_measure(cm: ConfusionMatrix, polarity: Polarity) -> float | None:
    p = precision(cm, polarity)
    r = recall(cm, polarity)
    if p is None or r is None:
        return None
    p3, r3 = _round3(p), _round3(r)
    if p3 + r3 == 0.0:
        return None
    return 2.0 * p3 * r3 / (p3 + r3)


def micro_precision(cm: ConfusionMatrix) -> float | None:
    return _ratio(cm.trace, cm.total)


def micro_recall(cm: ConfusionMatrix) -> float | None:
    return _ratio(cm.trace, cm.total)


def accuracy(cm: ConfusionMatrix) -> float | None:
    return _ratio(cm.trace, cm.total)


@dataclass(frozen=True)
class ClassMetrics:
    polarity: Polarity
    precision: float | None
    recall: float | None
    f_measure: float | None


@dataclass(frozen=True)
class EvalReport:
    matrix: ConfusionMatrix
    per_class: tuple[ClassMetrics, ...]
    human_totals: tuple[int, int, int]
    machine_totals: tuple[int, int, int]
    accuracy: float | None

    def metrics_for(self, polarity: Polarity) -> ClassMetrics:
        return self.per_class[polarity.index]


def report(cm: ConfusionMatrix) -> EvalReport:
    per_class = tuple(
        ClassMetrics(
            polarity=p,
            precision=precision(cm, p),
            recall=recall(cm, p),
            f_measure=f_measure(cm, p),
        )
        for p in POLARITIES
    )
    return EvalReport(
        matrix=cm,
        per_class=per_class,
        human_totals=tuple(cm.human_total(p) for p in POLARITIES),
        machine_totals=tuple(cm.machine_total(p) for p in POLARITIES),
        accuracy=accuracy(cm),
    )


def _fmt(value: float | None) -> str:
    return "undefined" if value is None else f"{_round3(value):.3f}"


def render_text(rep: EvalReport) -> str:
    """Aligned plain-text report: count matrix with per-row figures."""
    names = [p.value for p in POLARITIES]
    width = max(len(n) for n in names) + 2
    header = (
        "machine \\ human".ljust(18)
        + "".join(n.rjust(width) for n in names)
        + "precision".rjust(12)
        + "recall".rjust(10)
        + "f-measure".rjust(12)
    )
    lines = [header]
    for p in POLARITIES:
        m = rep.metrics_for(p)
        row = (
            p.value.ljust(18)
            + "".join(str(c).rjust(width) for c in rep.matrix.counts[p.index])
            + _fmt(m.precision).rjust(12)
            + _fmt(m.recall).rjust(10)
            + _fmt(m.f_measure).rjust(12)
        )
        lines.append(row)
    lines.append(
        "human totals".ljust(18) + "".join(str(t).rjust(width) for t in rep.human_totals)
    )
    lines.append(
        "machine totals".ljust(18) + "".join(str(t).rjust(width) for t in rep.machine_totals)
    )
    lines.append(f"total {rep.matrix.total}")
    lines.append(f"accuracy {_fmt(rep.accuracy)}")
    return "\n".join(lines) + "\n"


def render_json(rep: EvalReport) -> str:
    """Machine-readable report; key order and float text are deterministic."""
    doc = {
        "matrix": [list(row) for row in rep.matrix.counts],
        "orientation": "rows=machine columns=human",
        "classes": {
            m.polarity.value: {
                "precision": m.precision,
                "recall": m.recall,
                "f_measure": m.f_measure,
            }
            for m in rep.per_class
        },
        "human_totals": list(rep.human_totals),
        "machine_totals": list(rep.machine_totals),
        "total": rep.matrix.total,
        "accuracy": rep.accuracy,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
