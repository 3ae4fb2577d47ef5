"""Corpus construction: normalize raw word lists, label, merge, shuffle, split.

Two monolingual word lists (romanized Hindi, frequent English) come in, one
deduplicated labeled corpus comes out.  All randomness flows through
numpy's PCG64 generator so a (words, seed) pair always reproduces the same
corpus and the same train/test partition, bit for bit.
"""

import enum
import json
import math
from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np

from .errors import EmptyDataError, MissingInputError, ParseError, ValidationError


class LanguageTag(enum.Enum):
    HINDI = "hi"
    ENGLISH = "en"

    @classmethod
    def from_value(cls, value: str) -> "LanguageTag":
        for tag in cls:
            if tag.value == value:
                return tag
        raise ValueError(f"unknown language tag {value!r}")


@dataclass(frozen=True)
class LabeledWord:
    surface: str
    tag: LanguageTag


@dataclass
class SourceProvenance:
    name: str
    raw_count: int
    normalized_count: int
    non_latin_dropped: int
    duplicates_dropped: int
    cross_class_excluded: int
    retained_count: int


@dataclass
class Provenance:
    sources: list[SourceProvenance]
    # Surfaces found in both classes, excluded from both (sorted).
    cross_class_surfaces: list[str]


@dataclass
class Corpus:
    """An ordered list of labeled words.

    Invariants (no duplicate (surface, tag), no cross-class surfaces, only
    [a-z] surfaces) are guaranteed for corpora produced by build_corpus;
    hand-constructed instances are not validated.
    """

    entries: list[LabeledWord]
    seed: int | None = None
    provenance: Provenance | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def surfaces(self, tag: LanguageTag | None = None) -> list[str]:
        if tag is None:
            return [e.surface for e in self.entries]
        return [e.surface for e in self.entries if e.tag is tag]


@dataclass
class TagStats:
    count: int
    percentage: float
    max_word_length: int
    avg_word_length: float


@dataclass
class CorpusStats:
    per_tag: dict[LanguageTag, TagStats]
    total: int


@dataclass
class SplitCorpus:
    train: Corpus
    test: Corpus
    test_fraction: float


def normalize_word(raw: str) -> list[str]:
    """Clean one raw word-list item into zero or more surfaces.

    Lowercases, trims, and splits on hyphens and any whitespace, e.g.
    "self-confidence" -> ["self", "confidence"].  Total: garbage in,
    empty list out.
    """
    return raw.lower().replace("-", " ").split()


def _is_latin(surface: str) -> bool:
    return all("a" <= c <= "z" for c in surface)


def _ingest_class(name: str, raw_items: list[str]) -> tuple[list[str], SourceProvenance]:
    normalized = 0
    non_latin = 0
    dup = 0
    seen: dict[str, None] = {}
    for item in raw_items:
        for surface in normalize_word(item):
            normalized += 1
            if not _is_latin(surface):
                non_latin += 1
            elif surface in seen:
                dup += 1
            else:
                seen[surface] = None
    prov = SourceProvenance(
        name=name,
        raw_count=len(raw_items),
        normalized_count=normalized,
        non_latin_dropped=non_latin,
        duplicates_dropped=dup,
        cross_class_excluded=0,
        retained_count=len(seen),
    )
    return list(seen), prov


def build_corpus(hindi_raw: list[str], english_raw: list[str], seed: int) -> Corpus:
    """Normalize, deduplicate, label, merge and shuffle the two word lists.

    Surfaces appearing in both classes are excluded from both and recorded
    in provenance.  Raises EmptyDataError if either class ends up empty.
    """
    hindi, hindi_prov = _ingest_class("hindi", hindi_raw)
    english, english_prov = _ingest_class("english", english_raw)

    shared = sorted(set(hindi) & set(english))
    shared_set = set(shared)
    hindi = [w for w in hindi if w not in shared_set]
    english = [w for w in english if w not in shared_set]
    hindi_prov.cross_class_excluded = len(shared)
    english_prov.cross_class_excluded = len(shared)
    hindi_prov.retained_count = len(hindi)
    english_prov.retained_count = len(english)

    for name, retained in (("hindi", hindi), ("english", english)):
        if not retained:
            raise EmptyDataError(
                f"class {name!r} has no retained words after normalization "
                f"and cross-class exclusion"
            )

    entries = [LabeledWord(w, LanguageTag.HINDI) for w in hindi]
    entries += [LabeledWord(w, LanguageTag.ENGLISH) for w in english]
    rng = np.random.Generator(np.random.PCG64(seed))
    order = rng.permutation(len(entries))
    entries = [entries[i] for i in order]

    return Corpus(
        entries=entries,
        seed=seed,
        provenance=Provenance(
            sources=[hindi_prov, english_prov],
            cross_class_surfaces=shared,
        ),
    )


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """Per-tag counts, percentages and word-length statistics."""
    if not corpus.entries:
        raise EmptyDataError("cannot compute statistics of an empty corpus")
    total = len(corpus.entries)
    per_tag: dict[LanguageTag, TagStats] = {}
    for tag in LanguageTag:
        lengths = [len(e.surface) for e in corpus.entries if e.tag is tag]
        if not lengths:
            continue
        per_tag[tag] = TagStats(
            count=len(lengths),
            percentage=100.0 * len(lengths) / total,
            max_word_length=max(lengths),
            avg_word_length=sum(lengths) / len(lengths),
        )
    return CorpusStats(per_tag=per_tag, total=total)


def split_corpus(corpus: Corpus, test_fraction: float, seed: int) -> SplitCorpus:
    """Deterministic random holdout split.

    The test side gets ceil(N * fraction) entries (fractional sizes round
    up, matching the reference 36429 * 0.25 -> 9108 / 27321 arithmetic);
    a 1e-9 guard absorbs float dust on exact multiples.  Both sides keep
    the source corpus order.
    """
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0,1), got {test_fraction}")
    n = len(corpus.entries)
    n_test = math.ceil(n * test_fraction - 1e-9)
    if n_test <= 0 or n_test >= n:
        raise EmptyDataError(
            f"split of {n} entries at fraction {test_fraction} leaves an empty side"
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    perm = rng.permutation(n)
    test_idx = np.sort(perm[:n_test])
    test_mask = np.zeros(n, dtype=bool)
    test_mask[test_idx] = True
    train_entries = [e for e, m in zip(corpus.entries, test_mask) if not m]
    test_entries = [e for e, m in zip(corpus.entries, test_mask) if m]
    return SplitCorpus(
        train=Corpus(train_entries, seed=seed, provenance=corpus.provenance),
        test=Corpus(test_entries, seed=seed, provenance=corpus.provenance),
        test_fraction=test_fraction,
    )


def read_word_list(path: str | Path) -> list[str]:
    """Read a one-word-per-line UTF-8 file; blank lines are kept out."""
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"word list not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}", path=path) from None
    return [line for line in text.splitlines() if line.strip()]


def save_corpus_tsv(corpus: Corpus, path: str | Path) -> None:
    """Write entries as `surface<TAB>tag` lines, UTF-8, LF."""
    lines = [f"{e.surface}\t{e.tag.value}" for e in corpus.entries]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def load_corpus_tsv(path: str | Path) -> Corpus:
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"corpus file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}", path=path) from None
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise ParseError("expected `surface<TAB>tag`", path=path, line=lineno)
        try:
            tag = LanguageTag.from_value(parts[1])
        except ValueError as exc:
            raise ParseError(str(exc), path=path, line=lineno) from None
        entries.append(LabeledWord(parts[0], tag))
    if not entries:
        raise EmptyDataError(f"corpus file is empty: {path}")
    return Corpus(entries)


def save_provenance_json(corpus: Corpus, path: str | Path) -> None:
    if corpus.provenance is None:
        raise ValidationError("corpus carries no provenance record")
    doc = {
        "seed": corpus.seed,
        "total_entries": len(corpus.entries),
        "sources": [asdict(s) for s in corpus.provenance.sources],
        "cross_class_surfaces": corpus.provenance.cross_class_surfaces,
    }
    Path(path).write_text(
        json.dumps(doc, indent=2) + "\n", encoding="utf-8", newline="\n"
    )


# Reference distribution of the original 36,429-word corpus, for the
# side-by-side line in the stats report (counts per the running text;
# the original summary table transposes them).
REFERENCE_DISTRIBUTION = {
    LanguageTag.HINDI: (25640, 70.38),
    LanguageTag.ENGLISH: (10789, 29.62),
}


def render_stats_tsv(stats: CorpusStats) -> str:
    lines = ["tag\tcount\tpercentage\tmax_word_length\tavg_word_length"]
    for tag in sorted(stats.per_tag, key=lambda t: t.value):
        s = stats.per_tag[tag]
        lines.append(
            f"{tag.value}\t{s.count}\t{s.percentage!r}\t"
            f"{s.max_word_length}\t{s.avg_word_length!r}"
        )
    return "\n".join(lines) + "\n"


def render_stats_text(stats: CorpusStats) -> str:
    rows = [["tag", "count", "%age", "max word length", "average word length"]]
    for tag in sorted(stats.per_tag, key=lambda t: t.value):
        s = stats.per_tag[tag]
        rows.append(
            [
                tag.value,
                str(s.count),
                f"{s.percentage:.2f}",
                str(s.max_word_length),
                f"{s.avg_word_length:.2f}",
            ]
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    ref = ", ".join(
        f"{tag.value} {count} ({pct:.2f}%)"
        for tag, (count, pct) in REFERENCE_DISTRIBUTION.items()
    )
    out.append(f"reference distribution (original 36,429-word corpus): {ref}")
    return "\n".join(out) + "\n"
