"""Per-class precision/recall/F-score with support-weighted averages.

Metrics follow the usual one-vs-rest reading: for each tag, that tag is
the positive class and the other is negative.  Zero-denominator precision
or recall is defined as 0; the F-score is the harmonic mean (0 when both
components are 0).  Rendered tables show percentages at two decimals while
the report objects keep full-precision reals.
"""

from dataclasses import dataclass
from typing import Callable

from .corpus import Corpus, LanguageTag
from .errors import EmptyDataError, ValidationError

# Printed rows reproducing previously reported results on the original
# 36,429-word corpus (its weighted row came from unrounded per-class values,
# so it is stored verbatim rather than recomputed).
REFERENCE_RESULTS: tuple[tuple[str, str, float, float, float, int], ...] = (
    ("LSTM (reported)", "English", 92.61, 88.25, 90.37, 2697),
    ("LSTM (reported)", "Hindi", 95.15, 97.04, 96.08, 6411),
    ("LSTM (reported)", "Weighted Avg", 94.40, 94.43, 94.39, 9108),
    ("LR (reported)", "English", 95.74, 91.77, 93.71, 2697),
    ("LR (reported)", "Hindi", 96.60, 98.28, 97.43, 6411),
    ("LR (reported)", "Weighted Avg", 96.34, 96.35, 96.33, 9108),
)

_TAG_DISPLAY = {LanguageTag.ENGLISH: "English", LanguageTag.HINDI: "Hindi"}
_TAG_ORDER = (LanguageTag.ENGLISH, LanguageTag.HINDI)


@dataclass(frozen=True)
class ConfusionMatrix:
    """One-vs-rest cell counts for a single positive tag."""

    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class ClassMetrics:
    support: int
    precision: float
    recall: float
    f_score: float


@dataclass(frozen=True)
class EvalReport:
    per_tag: dict[LanguageTag, ClassMetrics]
    weighted_avg: ClassMetrics  # support field holds the test-set size

    def supports(self) -> tuple[int, ...]:
        return tuple(self.per_tag[tag].support for tag in _TAG_ORDER)


@dataclass(frozen=True)
class ComparisonTable:
    names: list[str]
    reports: list[EvalReport]


def confusion_for(
    positive: LanguageTag, gold: list[LanguageTag], predicted: list[LanguageTag]
) -> ConfusionMatrix:
    if len(gold) != len(predicted):
        raise ValidationError(
            f"gold and predictions differ in length: {len(gold)} vs {len(predicted)}"
        )
    tp = fp = fn = tn = 0
    for g, p in zip(gold, predicted):
        if p is positive:
            if g is positive:
                tp += 1
            else:
                fp += 1
        else:
            if g is positive:
                fn += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def _metrics_from_confusion(cm: ConfusionMatrix) -> ClassMetrics:
    support = cm.tp + cm.fn
    precision = cm.tp / (cm.tp + cm.fp) if cm.tp + cm.fp else 0.0
    recall = cm.tp / support if support else 0.0
    f_score = (
        2.0 * precision * recall / (precision + recall) if precision + recall else 0.0
    )
    return ClassMetrics(support=support, precision=precision, recall=recall, f_score=f_score)


def report_from_predictions(
    gold: list[LanguageTag], predicted: list[LanguageTag]
) -> EvalReport:
    if not gold:
        raise EmptyDataError("cannot evaluate an empty prediction set")
    per_tag = {
        tag: _metrics_from_confusion(confusion_for(tag, gold, predicted))
        for tag in _TAG_ORDER
    }
    total = len(gold)
    weighted = []
    for field in ("precision", "recall", "f_score"):
        weighted.append(
            sum(m.support * getattr(m, field) for m in per_tag.values()) / total
        )
    return EvalReport(
        per_tag=per_tag,
        weighted_avg=ClassMetrics(total, weighted[0], weighted[1], weighted[2]),
    )


def evaluate(scorer: Callable[[str], LanguageTag], test: Corpus) -> EvalReport:
    if not test.entries:
        raise EmptyDataError("test corpus is empty")
    gold = [e.tag for e in test.entries]
    predicted = [scorer(e.surface) for e in test.entries]
    return report_from_predictions(gold, predicted)


def compare(named_reports: list[tuple[str, EvalReport]]) -> ComparisonTable:
    """Side-by-side table; all reports must come from the same test set."""
    if len(named_reports) < 2:
        raise ValidationError("compare needs at least two reports")
    first = named_reports[0][1]
    for name, report in named_reports[1:]:
        if report.supports() != first.supports():
            raise ValidationError(
                f"report {name!r} has supports {report.supports()}, "
                f"expected {first.supports()}"
            )
    return ComparisonTable(
        names=[name for name, _ in named_reports],
        reports=[report for _, report in named_reports],
    )


def _report_rows(name: str, report: EvalReport) -> list[tuple[str, str, ClassMetrics]]:
    rows = [(name, _TAG_DISPLAY[tag], report.per_tag[tag]) for tag in _TAG_ORDER]
    rows.append((name, "Weighted Avg", report.weighted_avg))
    return rows


def render_report_tsv(name: str, report: EvalReport) -> str:
    """Machine form; raw reals, shortest round-trip decimal."""
    lines = ["model\tclass\tprecision\trecall\tf_score\tsupport"]
    for model, cls, m in _report_rows(name, report):
        lines.append(
            f"{model}\t{cls}\t{m.precision!r}\t{m.recall!r}\t{m.f_score!r}\t{m.support}"
        )
    return "\n".join(lines) + "\n"


def _text_table(rows: list[tuple[str, ...]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return (
        "\n".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in rows
        )
        + "\n"
    )


def render_report_text(name: str, report: EvalReport) -> str:
    rows = [("Model", "Class", "Precision", "Recall", "F-Score", "Support")]
    for model, cls, m in _report_rows(name, report):
        rows.append(
            (
                model,
                cls,
                f"{m.precision * 100:.2f}",
                f"{m.recall * 100:.2f}",
                f"{m.f_score * 100:.2f}",
                str(m.support),
            )
        )
    return _text_table(rows)


def render_comparison_tsv(table: ComparisonTable) -> str:
    lines = ["model\tclass\tprecision\trecall\tf_score\tsupport"]
    for name, report in zip(table.names, table.reports):
        for model, cls, m in _report_rows(name, report):
            lines.append(
                f"{model}\t{cls}\t{m.precision!r}\t{m.recall!r}\t{m.f_score!r}\t{m.support}"
            )
    base_name, base = table.names[0], table.reports[0]
    for name, report in zip(table.names[1:], table.reports[1:]):
        for (_, cls, m), (_, _, b) in zip(_report_rows(name, report), _report_rows(base_name, base)):
            lines.append(
                f"delta:{name}-{base_name}\t{cls}"
                f"\t{m.precision - b.precision!r}"
                f"\t{m.recall - b.recall!r}"
                f"\t{m.f_score - b.f_score!r}"
                f"\t{m.support}"
            )
    return "\n".join(lines) + "\n"


def render_comparison_text(table: ComparisonTable) -> str:
    rows = [("Model", "Class", "Precision", "Recall", "F-Score", "Support")]
    for name, report in zip(table.names, table.reports):
        for model, cls, m in _report_rows(name, report):
            rows.append(
                (
                    model,
                    cls,
                    f"{m.precision * 100:.2f}",
                    f"{m.recall * 100:.2f}",
                    f"{m.f_score * 100:.2f}",
                    str(m.support),
                )
            )
    base_name, base = table.names[0], table.reports[0]
    for name, report in zip(table.names[1:], table.reports[1:]):
        for (_, cls, m), (_, _, b) in zip(_report_rows(name, report), _report_rows(base_name, base)):
            rows.append(
                (
                    f"delta {name}-{base_name}",
                    cls,
                    f"{(m.precision - b.precision) * 100:+.2f}",
                    f"{(m.recall - b.recall) * 100:+.2f}",
                    f"{(m.f_score - b.f_score) * 100:+.2f}",
                    str(m.support),
                )
            )
    return _text_table(rows)


def render_reference_text() -> str:
    rows = [("Model", "Class", "Precision", "Recall", "F-Score", "Support")]
    for model, cls, p, r, f, support in REFERENCE_RESULTS:
        rows.append((model, cls, f"{p:.2f}", f"{r:.2f}", f"{f:.2f}", str(support)))
    return _text_table(rows)
