"""Score-distribution figure: score1-vs-score2 scatter plus per-tag box plots.

The figure is written as SVG with the raw data beside it as CSV, so the
rendering is reviewable and the numbers are machine-readable.  Box summaries
use Tukey hinges (medians of the inclusive lower/upper halves) with whiskers
at the most extreme data within 1.5 IQR of the hinges; everything past the
whiskers is an outlier.  Rendering is deterministic: a fixed SVG hash salt
and no embedded timestamps make double renders byte-identical.
"""

from dataclasses import dataclass
from pathlib import Path

import matplotlib
from matplotlib.figure import Figure

from .corpus import LanguageTag
from .errors import EmptyDataError, LexforgeError, ValidationError
from .lexicon import Lexicon

SVG_HASH_SALT = "lexforge"
TAG_COLORS = {LanguageTag.ENGLISH: "tab:blue", LanguageTag.HINDI: "tab:orange"}
_TAG_DISPLAY = {LanguageTag.ENGLISH: "English", LanguageTag.HINDI: "Hindi"}
_TAG_ORDER = (LanguageTag.ENGLISH, LanguageTag.HINDI)


@dataclass(frozen=True)
class ScatterRecord:
    x: float  # score1
    y: float  # score2
    tag: LanguageTag


@dataclass(frozen=True)
class BoxStats:
    min: float  # low whisker end (most extreme datum within the fence)
    q1: float
    median: float
    q3: float
    max: float  # high whisker end
    outliers: list[float]


def scatter_data(lex: Lexicon) -> list[ScatterRecord]:
    """One record per entry, lexicon order; every entry must carry a tag."""
    records = []
    for entry in lex.entries:
        if entry.gold_tag is None:
            raise ValidationError(f"entry {entry.surface!r} has no tag; cannot color it")
        records.append(ScatterRecord(x=entry.score1, y=entry.score2, tag=entry.gold_tag))
    return records


def _median(sorted_vals: list[float]) -> float:
    n = len(sorted_vals)
    mid = n // 2
    if n % 2:
        return sorted_vals[mid]
    return 0.5 * (sorted_vals[mid - 1] + sorted_vals[mid])


def boxplot_stats(scores: list[float]) -> BoxStats:
    """Tukey-hinge five-number summary with 1.5 IQR whiskers."""
    if not scores:
        raise EmptyDataError("cannot summarize an empty score list")
    vals = sorted(scores)
    n = len(vals)
    # Inclusive hinges: both halves contain the middle datum when n is odd.
    q1 = _median(vals[: (n + 1) // 2])
    q3 = _median(vals[n // 2 :])
    median = _median(vals)
    iqr = q3 - q1
    lo_fence = q1 - 1.5 * iqr
    hi_fence = q3 + 1.5 * iqr
    inside = [v for v in vals if lo_fence <= v <= hi_fence]
    outliers = [v for v in vals if v < lo_fence or v > hi_fence]
    return BoxStats(
        min=inside[0], q1=q1, median=median, q3=q3, max=inside[-1], outliers=outliers
    )


def write_scatter_csv(records: list[ScatterRecord], path: str | Path) -> None:
    lines = ["x,y,tag"]
    lines += [f"{r.x!r},{r.y!r},{r.tag.value}" for r in records]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_box_csv(boxes: dict[LanguageTag, BoxStats], path: str | Path) -> None:
    lines = ["tag,min,q1,median,q3,max,outlier_count"]
    for tag in _TAG_ORDER:
        if tag not in boxes:
            continue
        b = boxes[tag]
        lines.append(
            f"{tag.value},{b.min!r},{b.q1!r},{b.median!r},{b.q3!r},{b.max!r},{len(b.outliers)}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _build_figure(
    records: list[ScatterRecord], boxes: dict[LanguageTag, BoxStats]
) -> Figure:
    fig = Figure(figsize=(9.0, 4.0), dpi=100)
    ax_scatter = fig.add_subplot(1, 2, 1)
    ax_box = fig.add_subplot(1, 2, 2)

    for tag in _TAG_ORDER:
        xs = [r.x for r in records if r.tag is tag]
        ys = [r.y for r in records if r.tag is tag]
        ax_scatter.scatter(
            xs, ys, s=6, color=TAG_COLORS[tag], label=_TAG_DISPLAY[tag], alpha=0.6
        )
    ax_scatter.set_xlim(0.0, 1.0)
    ax_scatter.set_ylim(0.0, 1.0)
    ax_scatter.set_xlabel("score1")
    ax_scatter.set_ylabel("score2")
    ax_scatter.legend(loc="center right")

    stats = []
    for tag in _TAG_ORDER:
        b = boxes[tag]
        stats.append(
            {
                "med": b.median,
                "q1": b.q1,
                "q3": b.q3,
                "whislo": b.min,
                "whishi": b.max,
                "fliers": b.outliers,
            }
        )
    ax_box.bxp(stats, positions=list(range(1, len(stats) + 1)))
    ax_box.set_xticks(list(range(1, len(stats) + 1)))
    ax_box.set_xticklabels([_TAG_DISPLAY[tag] for tag in _TAG_ORDER])
    ax_box.set_ylabel("score")
    ax_box.set_ylim(-0.05, 1.05)
    fig.subplots_adjust(left=0.08, right=0.97, bottom=0.12, top=0.95, wspace=0.25)
    return fig


def render_svg(
    records: list[ScatterRecord],
    boxes: dict[LanguageTag, BoxStats],
    path: str | Path,
) -> None:
    """Write the two-panel SVG at path plus scatter.csv and box.csv beside it."""
    if not records:
        raise EmptyDataError("no scatter records to plot")
    for tag in _TAG_ORDER:
        if tag not in boxes:
            raise ValidationError(f"missing box stats for tag {tag.value!r}")
    path = Path(path)
    fig = _build_figure(records, boxes)
    try:
        with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
            fig.savefig(path, format="svg", metadata={"Date": None})
        write_scatter_csv(records, path.parent / "scatter.csv")
        write_box_csv(boxes, path.parent / "box.csv")
    except OSError as exc:
        raise LexforgeError(f"cannot write figure artifacts at {path}: {exc}") from None
