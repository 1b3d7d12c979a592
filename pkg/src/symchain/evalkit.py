"""Metrics over run records: accuracy, execution rate, P/R/F1, depth
breakdowns, prediction distributions, output lengths, and faithfulness
tallies, with deterministic markdown / csv / json report rendering."""

from __future__ import annotations

import csv
import io
import json
import warnings
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .corpus import Problem
from .logic import LABEL_ORDER, Label
from .pipeline import RunRecord


class IdMismatchError(Exception):
    def __init__(self, missing: list[str]):
        preview = ", ".join(missing[:5])
        super().__init__(f"records without gold labels: {preview}")
        self.missing = missing


def _check_ids(records: Sequence[RunRecord], golds: Mapping[str, Label]) -> None:
    missing = [r.problem_id for r in records if r.problem_id not in golds]
    if missing:
        raise IdMismatchError(missing)


def accuracy(records: Sequence[RunRecord], golds: Mapping[str, Label]) -> float:
    """Fraction of records whose final label equals gold; Undecided counts
    as incorrect."""
    _check_ids(records, golds)
    if not records:
        return 0.0
    correct = sum(1 for r in records if r.final_label == golds[r.problem_id])
    return correct / len(records)


def execution_rate(records: Sequence[RunRecord]) -> float:
    """Executed count over total; an empty set is vacuously 1.0 (warned)."""
    if not records:
        warnings.warn("execution_rate over an empty record set is vacuously 1.0", stacklevel=2)
        return 1.0
    return sum(1 for r in records if r.executed) / len(records)


def undecided_rate(records: Sequence[RunRecord]) -> float:
    if not records:
        return 0.0
    return sum(1 for r in records if r.final_label is Label.UNDECIDED) / len(records)


def confusion_matrix(records: Sequence[RunRecord], golds: Mapping[str, Label]) -> dict[tuple[str, str], int]:
    """Counts keyed by (gold label value, predicted label value)."""
    _check_ids(records, golds)
    counts: Counter = Counter()
    for r in records:
        counts[(golds[r.problem_id].value, r.final_label.value)] += 1
    return dict(counts)


@dataclass(frozen=True)
class LabelScores:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class LabelMetrics:
    per_label: dict[str, LabelScores]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    zero_division_labels: frozenset[str]


def _canonical_labels(confusion: Mapping[tuple[str, str], int]) -> list[str]:
    seen = {g for g, _ in confusion} | {p for _, p in confusion}
    order = [label.value for label in LABEL_ORDER]
    return [v for v in order if v in seen] + sorted(seen - set(order))


def label_metrics(confusion: Mapping[tuple[str, str], int],
                  labels: Optional[Sequence[str]] = None) -> LabelMetrics:
    """Per-label precision/recall/F1 plus macro averages.

    A zero denominator yields 0 and flags the label rather than raising.
    """
    labels = list(labels) if labels is not None else _canonical_labels(confusion)
    per_label = {}
    flagged = set()
    for label in labels:
        tp = confusion.get((label, label), 0)
        predicted = sum(n for (g, p), n in confusion.items() if p == label)
        actual = sum(n for (g, p), n in confusion.items() if g == label)
        if predicted == 0 or actual == 0:
            flagged.add(label)
        precision = tp / predicted if predicted else 0.0
        recall = tp / actual if actual else 0.0
        f1 = 2 * precision * recall / (precision + recall) if (precision + recall) else 0.0
        per_label[label] = LabelScores(precision, recall, f1)
    n = len(labels) or 1
    return LabelMetrics(
        per_label=per_label,
        macro_precision=sum(s.precision for s in per_label.values()) / n,
        macro_recall=sum(s.recall for s in per_label.values()) / n,
        macro_f1=sum(s.f1 for s in per_label.values()) / n,
        zero_division_labels=frozenset(flagged),
    )


def depth_breakdown(records: Sequence[RunRecord], golds: Mapping[str, Label],
                    problems: Sequence[Problem]) -> dict[int, float]:
    """Accuracy per reasoning depth, buckets 0..5; missing depths omitted."""
    _check_ids(records, golds)
    depths = {p.id: p.depth for p in problems}
    totals: Counter = Counter()
    correct: Counter = Counter()
    for r in records:
        depth = depths.get(r.problem_id)
        if depth is None or not (0 <= depth <= 5):
            continue
        totals[depth] += 1
        if r.final_label == golds[r.problem_id]:
            correct[depth] += 1
    return {d: correct[d] / totals[d] for d in sorted(totals)}


def prediction_distribution(records: Sequence[RunRecord]) -> dict[str, float]:
    if not records:
        return {}
    counts = Counter(r.final_label.value for r in records)
    return {label: counts[label] / len(records) for label in sorted(counts)}


def stage_output_lengths(records: Sequence[RunRecord]) -> dict[str, float]:
    """Mean completion tokens per stage name across all records."""
    sums: defaultdict = defaultdict(int)
    counts: defaultdict = defaultdict(int)
    for r in records:
        for s in r.stages:
            if s.stage == "engine":
                continue
            sums[s.stage] += s.completion_tokens
            counts[s.stage] += 1
    return {stage: sums[stage] / counts[stage] for stage in sorted(sums)}


# ---------------------------------------------------------------------------
# Faithfulness annotations

VERDICTS = ("faithful", "unfaithful", "false")


@dataclass(frozen=True)
class FaithfulnessTally:
    counts: dict[str, int]
    even_splits: tuple[str, ...]


def faithfulness_tally(rows: Iterable[tuple[str, str, str]]) -> FaithfulnessTally:
    """Majority vote per problem over (problem_id, annotator_id, verdict)
    rows; even splits are reported and excluded from the counts."""
    by_problem: defaultdict = defaultdict(list)
    for problem_id, annotator_id, verdict in rows:
        verdict = verdict.strip().lower()
        if verdict not in VERDICTS:
            raise ValueError(f"unknown faithfulness verdict {verdict!r} for {problem_id}")
        by_problem[problem_id].append(verdict)
    counts = {v: 0 for v in VERDICTS}
    even = []
    for problem_id in sorted(by_problem):
        tally = Counter(by_problem[problem_id])
        best = tally.most_common()
        if len(best) > 1 and best[0][1] == best[1][1]:
            even.append(problem_id)
            continue
        counts[best[0][0]] += 1
    return FaithfulnessTally(counts, tuple(even))


def read_annotations(path) -> list[tuple[str, str, str]]:
    """CSV with header problem_id,annotator_id,verdict."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return [(row["problem_id"], row["annotator_id"], row["verdict"]) for row in reader]


# ---------------------------------------------------------------------------
# Reports


@dataclass
class DatasetReport:
    dataset: str
    count: int
    accuracy: float
    execution_rate: float
    undecided_rate: float
    confusion: dict[tuple[str, str], int]
    metrics: LabelMetrics
    depth_breakdown: dict[int, float]
    prediction_distribution: dict[str, float]
    stage_output_lengths: dict[str, float]


@dataclass
class EvalReport:
    method: str
    datasets: dict[str, DatasetReport] = field(default_factory=dict)
    faithfulness: Optional[FaithfulnessTally] = None

    def to_dict(self) -> dict:
        out = {"method": self.method, "datasets": {}}
        for name in sorted(self.datasets):
            d = self.datasets[name]
            out["datasets"][name] = {
                "count": d.count,
                "accuracy": d.accuracy,
                "execution_rate": d.execution_rate,
                "undecided_rate": d.undecided_rate,
                "confusion": {f"{g}->{p}": n for (g, p), n in sorted(d.confusion.items())},
                "per_label": {
                    label: {"precision": s.precision, "recall": s.recall, "f1": s.f1}
                    for label, s in d.metrics.per_label.items()
                },
                "macro": {
                    "precision": d.metrics.macro_precision,
                    "recall": d.metrics.macro_recall,
                    "f1": d.metrics.macro_f1,
                },
                "zero_division_labels": sorted(d.metrics.zero_division_labels),
                "depth_breakdown": {str(k): v for k, v in d.depth_breakdown.items()},
                "prediction_distribution": d.prediction_distribution,
                "stage_output_lengths": d.stage_output_lengths,
            }
        if self.faithfulness is not None:
            out["faithfulness"] = {
                "counts": self.faithfulness.counts,
                "even_splits": list(self.faithfulness.even_splits),
            }
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "EvalReport":
        report = cls(method=data.get("method", "?"))
        for name, d in data.get("datasets", {}).items():
            confusion = {}
            for key, n in d.get("confusion", {}).items():
                gold, pred = key.split("->", 1)
                confusion[(gold, pred)] = n
            metrics = LabelMetrics(
                per_label={
                    label: LabelScores(s["precision"], s["recall"], s["f1"])
                    for label, s in d.get("per_label", {}).items()
                },
                macro_precision=d.get("macro", {}).get("precision", 0.0),
                macro_recall=d.get("macro", {}).get("recall", 0.0),
                macro_f1=d.get("macro", {}).get("f1", 0.0),
                zero_division_labels=frozenset(d.get("zero_division_labels", ())),
            )
            report.datasets[name] = DatasetReport(
                dataset=name,
                count=d.get("count", 0),
                accuracy=d.get("accuracy", 0.0),
                execution_rate=d.get("execution_rate", 0.0),
                undecided_rate=d.get("undecided_rate", 0.0),
                confusion=confusion,
                metrics=metrics,
                depth_breakdown={int(k): v for k, v in d.get("depth_breakdown", {}).items()},
                prediction_distribution=d.get("prediction_distribution", {}),
                stage_output_lengths=d.get("stage_output_lengths", {}),
            )
        if "faithfulness" in data:
            report.faithfulness = FaithfulnessTally(
                counts=data["faithfulness"]["counts"],
                even_splits=tuple(data["faithfulness"]["even_splits"]),
            )
        return report


def build_report(records: Sequence[RunRecord], golds: Mapping[str, Label],
                 problems: Sequence[Problem], method: str = "?",
                 annotations: Optional[Iterable[tuple[str, str, str]]] = None) -> EvalReport:
    report = EvalReport(method=method)
    by_dataset: defaultdict = defaultdict(list)
    for r in records:
        by_dataset[r.dataset or "?"].append(r)
    problem_index = {p.id: p for p in problems}
    for name in sorted(by_dataset):
        subset = by_dataset[name]
        subset_problems = [problem_index[r.problem_id] for r in subset if r.problem_id in problem_index]
        confusion = confusion_matrix(subset, golds)
        report.datasets[name] = DatasetReport(
            dataset=name,
            count=len(subset),
            accuracy=accuracy(subset, golds),
            execution_rate=execution_rate(subset),
            undecided_rate=undecided_rate(subset),
            confusion=confusion,
            metrics=label_metrics(confusion),
            depth_breakdown=depth_breakdown(subset, golds, subset_problems),
            prediction_distribution=prediction_distribution(subset),
            stage_output_lengths=stage_output_lengths(subset),
        )
    if annotations is not None:
        report.faithfulness = faithfulness_tally(annotations)
    return report


def _pct(value: float) -> str:
    """Percentages rendered to two decimals, e.g. 0.825 -> '82.50'."""
    return f"{value * 100:.2f}"


def render_report(report: EvalReport, fmt: str = "markdown") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), ensure_ascii=False, sort_keys=True, indent=2)
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "markdown":
        return render_comparison([report])
    raise ValueError(f"unknown report format {fmt!r}")


def _render_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["method", "dataset", "metric", "key", "value"])
    for name in sorted(report.datasets):
        d = report.datasets[name]
        writer.writerow([report.method, name, "count", "", d.count])
        writer.writerow([report.method, name, "accuracy", "", repr(d.accuracy)])
        writer.writerow([report.method, name, "execution_rate", "", repr(d.execution_rate)])
        writer.writerow([report.method, name, "undecided_rate", "", repr(d.undecided_rate)])
        for label in sorted(d.metrics.per_label):
            s = d.metrics.per_label[label]
            writer.writerow([report.method, name, "precision", label, repr(s.precision)])
            writer.writerow([report.method, name, "recall", label, repr(s.recall)])
            writer.writerow([report.method, name, "f1", label, repr(s.f1)])
        writer.writerow([report.method, name, "macro_f1", "", repr(d.metrics.macro_f1)])
        for depth in sorted(d.depth_breakdown):
            writer.writerow([report.method, name, "depth_accuracy", depth, repr(d.depth_breakdown[depth])])
        for label in sorted(d.prediction_distribution):
            writer.writerow([report.method, name, "prediction_fraction", label,
                             repr(d.prediction_distribution[label])])
        for stage in sorted(d.stage_output_lengths):
            writer.writerow([report.method, name, "mean_completion_tokens", stage,
                             repr(d.stage_output_lengths[stage])])
    if report.faithfulness is not None:
        for verdict in VERDICTS:
            writer.writerow([report.method, "", "faithfulness", verdict,
                             report.faithfulness.counts[verdict]])
    return buf.getvalue()


def render_comparison(reports: Sequence[EvalReport]) -> str:
    """Markdown comparison: one accuracy row per method, datasets as columns,
    followed by the detail sections of each report."""
    datasets = sorted({name for report in reports for name in report.datasets})
    lines = ["# Evaluation report", "", "## Accuracy (%)", ""]
    lines.append("| Method | " + " | ".join(datasets) + " |")
    lines.append("|---" * (len(datasets) + 1) + "|")
    for report in reports:
        cells = []
        for name in datasets:
            d = report.datasets.get(name)
            cells.append(_pct(d.accuracy) if d is not None else "-")
        lines.append(f"| {report.method} | " + " | ".join(cells) + " |")
    lines.append("")
    lines.append("## Execution rate (%)")
    lines.append("")
    lines.append("| Method | " + " | ".join(datasets) + " |")
    lines.append("|---" * (len(datasets) + 1) + "|")
    for report in reports:
        cells = []
        for name in datasets:
            d = report.datasets.get(name)
            cells.append(_pct(d.execution_rate) if d is not None else "-")
        lines.append(f"| {report.method} | " + " | ".join(cells) + " |")
    lines.append("")
    for report in reports:
        for name in sorted(report.datasets):
            d = report.datasets[name]
            lines.append(f"## {report.method} on {name}")
            lines.append("")
            lines.append(f"- problems: {d.count}")
            lines.append(f"- accuracy: {_pct(d.accuracy)}")
            lines.append(f"- execution rate: {_pct(d.execution_rate)}")
            lines.append(f"- undecided: {_pct(d.undecided_rate)}")
            lines.append("")
            if d.metrics.per_label:
                lines.append("| Label | Precision | Recall | F1 |")
                lines.append("|---|---|---|---|")
                for label in d.metrics.per_label:
                    s = d.metrics.per_label[label]
                    lines.append(f"| {label} | {_pct(s.precision)} | {_pct(s.recall)} | {_pct(s.f1)} |")
                lines.append(
                    f"| macro | {_pct(d.metrics.macro_precision)} | "
                    f"{_pct(d.metrics.macro_recall)} | {_pct(d.metrics.macro_f1)} |"
                )
                lines.append("")
            if d.depth_breakdown:
                lines.append("| Depth | Accuracy |")
                lines.append("|---|---|")
                for depth in sorted(d.depth_breakdown):
                    lines.append(f"| {depth} | {_pct(d.depth_breakdown[depth])} |")
                lines.append("")
            if d.prediction_distribution:
                dist = ", ".join(f"{label}: {_pct(frac)}" for label, frac in
                                 sorted(d.prediction_distribution.items()))
                lines.append(f"- prediction distribution: {dist}")
            if d.stage_output_lengths:
                lens = ", ".join(f"{stage}: {mean:.1f}" for stage, mean in
                                 sorted(d.stage_output_lengths.items()))
                lines.append(f"- mean output tokens: {lens}")
            lines.append("")
    for report in reports:
        if report.faithfulness is not None:
            lines.append(f"## Faithfulness ({report.method})")
            lines.append("")
            for verdict in VERDICTS:
                lines.append(f"- {verdict}: {report.faithfulness.counts[verdict]}")
            if report.faithfulness.even_splits:
                lines.append(f"- even splits excluded: {', '.join(report.faithfulness.even_splits)}")
            lines.append("")
    return "\n".join(lines).rstrip() + "\n"
