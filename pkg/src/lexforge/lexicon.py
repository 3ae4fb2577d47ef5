"""The scored language lexicon: build, query, persist.

Each entry carries two Hindi language-strength scores for one word:
score1 from the recurrent model's softmax, score2 from the logistic
model's sigmoid, both strictly inside (0, 1).  The on-disk form is a
sorted TSV whose floats print via shortest round-trip decimals, so
save -> load -> save is byte-stable; metadata travels in a JSON sidecar.
"""

import hashlib
import json
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .bilstm import BiLSTMModel, softmax_score
from .corpus import Corpus, LanguageTag, normalize_word
from .errors import EmptyDataError, MissingInputError, ParseError, ValidationError, VocabMismatchError
from .features import NgramVocabulary, vectorize
from .logreg import LogRegModel, logistic_score

LEXICON_HEADER = "word\tscore1\tscore2\ttag"
META_FORMAT = "lexforge-lexicon-meta-v1"


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    score1: float  # recurrent-model Hindi strength
    score2: float  # logistic-model Hindi strength
    gold_tag: LanguageTag | None


@dataclass(frozen=True)
class LexiconMetadata:
    lr_model_id: str
    nn_model_id: str
    corpus_entries: int
    corpus_seed: int | None
    built_at: str


@dataclass(frozen=True)
class Lexicon:
    entries: list[LexiconEntry]  # sorted by UTF-8 byte order of surface
    index: dict[str, LexiconEntry]
    metadata: LexiconMetadata | None

    def __len__(self) -> int:
        return len(self.entries)


def _check_entry(entry: LexiconEntry, where: str) -> None:
    for name, value in (("score1", entry.score1), ("score2", entry.score2)):
        if not 0.0 < value < 1.0:
            raise ValidationError(f"{where}: {name} {value!r} outside the open (0,1)")


def make_lexicon(
    entries: list[LexiconEntry], metadata: LexiconMetadata | None = None
) -> Lexicon:
    """Sort by surface bytes, index, and enforce uniqueness and score range."""
    ordered = sorted(entries, key=lambda e: e.surface.encode("utf-8"))
    index: dict[str, LexiconEntry] = {}
    for entry in ordered:
        _check_entry(entry, entry.surface)
        if entry.surface in index:
            raise ValidationError(f"duplicate lexicon surface {entry.surface!r}")
        index[entry.surface] = entry
    return Lexicon(entries=ordered, index=index, metadata=metadata)


def _timestamp() -> str:
    """ISO-8601 UTC; honors SOURCE_DATE_EPOCH for reproducible builds."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    when = (
        datetime.fromtimestamp(int(epoch), tz=timezone.utc)
        if epoch
        else datetime.now(timezone.utc)
    )
    return when.isoformat(timespec="seconds")


def nn_model_id(model: BiLSTMModel) -> str:
    key = "\n".join(
        [f"d={model.hyperparams.d}", f"h={model.hyperparams.h}"]
        + model.char_vocab.chars_in_order()
    )
    return hashlib.sha256(key.encode("utf-8")).hexdigest()[:16]


def score_word(
    lr: LogRegModel,
    ngram_vocab: NgramVocabulary,
    nn: BiLSTMModel,
    surface: str,
) -> tuple[float, float]:
    """Both language strengths for one word, trained-model OOV path included.

    Unseen characters fall to the UNK embedding; unseen n-grams drop out of
    the linear score.  The input must normalize to exactly one word.
    """
    if lr.vocab_id != ngram_vocab.vocab_id:
        raise VocabMismatchError(
            f"logistic model is bound to vocabulary {lr.vocab_id}, "
            f"got {ngram_vocab.vocab_id}"
        )
    words = normalize_word(surface)
    if len(words) != 1:
        raise ValidationError(
            f"{surface!r} normalizes to {len(words)} words; need exactly one"
        )
    word = words[0]
    score1, _ = softmax_score(nn, word)
    score2 = logistic_score(lr, vectorize(word, ngram_vocab))
    return score1, score2


def build_lexicon(
    corpus: Corpus,
    lr: LogRegModel,
    ngram_vocab: NgramVocabulary,
    nn: BiLSTMModel,
) -> Lexicon:
    """One entry per unique corpus surface, scored by both models."""
    if not corpus.entries:
        raise EmptyDataError("cannot build a lexicon from an empty corpus")
    if lr.vocab_id != ngram_vocab.vocab_id:
        raise VocabMismatchError(
            f"logistic model is bound to vocabulary {lr.vocab_id}, "
            f"got {ngram_vocab.vocab_id}"
        )
    tags: dict[str, LanguageTag] = {}
    for entry in corpus.entries:
        tags.setdefault(entry.surface, entry.tag)
    entries = []
    for surface, tag in tags.items():
        score1, score2 = score_word(lr, ngram_vocab, nn, surface)
        entries.append(LexiconEntry(surface, score1, score2, tag))
    metadata = LexiconMetadata(
        lr_model_id=lr.vocab_id,
        nn_model_id=nn_model_id(nn),
        corpus_entries=len(corpus.entries),
        corpus_seed=corpus.seed,
        built_at=_timestamp(),
    )
    return make_lexicon(entries, metadata)


def lookup(lex: Lexicon, surface: str) -> LexiconEntry | None:
    """Exact match after corpus normalization; absence is None, not an error."""
    words = normalize_word(surface)
    if len(words) != 1:
        return None
    return lex.index.get(words[0])


def _meta_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta.json")


def save_lexicon(lex: Lexicon, path: str | Path) -> None:
    path = Path(path)
    lines = [LEXICON_HEADER]
    for entry in lex.entries:
        _check_entry(entry, entry.surface)
        tag = entry.gold_tag.value if entry.gold_tag is not None else ""
        lines.append(f"{entry.surface}\t{entry.score1!r}\t{entry.score2!r}\t{tag}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    if lex.metadata is not None:
        doc = {
            "format": META_FORMAT,
            "lr_model_id": lex.metadata.lr_model_id,
            "nn_model_id": lex.metadata.nn_model_id,
            "corpus_entries": lex.metadata.corpus_entries,
            "corpus_seed": lex.metadata.corpus_seed,
            "built_at": lex.metadata.built_at,
        }
        _meta_path(path).write_text(
            json.dumps(doc, indent=2) + "\n", encoding="utf-8", newline="\n"
        )


def parse_lexicon_row(line: str, path: Path | None = None, lineno: int | None = None) -> LexiconEntry:
    parts = line.split("\t")
    if len(parts) != 4:
        raise ParseError(
            f"expected 4 tab-separated fields, got {len(parts)}", path=path, line=lineno
        )
    surface, s1_text, s2_text, tag_text = parts
    if not surface:
        raise ParseError("empty word field", path=path, line=lineno)
    try:
        score1 = float(s1_text)
        score2 = float(s2_text)
    except ValueError:
        raise ParseError("unparseable score", path=path, line=lineno) from None
    if tag_text == "":
        tag = None
    else:
        try:
            tag = LanguageTag.from_value(tag_text)
        except ValueError as exc:
            raise ParseError(str(exc), path=path, line=lineno) from None
    entry = LexiconEntry(surface, score1, score2, tag)
    where = f"line {lineno}" if lineno is not None else surface
    _check_entry(entry, where)
    return entry


def load_lexicon(path: str | Path) -> Lexicon:
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"lexicon file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}", path=path) from None
    lines = text.splitlines()
    if not lines or lines[0] != LEXICON_HEADER:
        raise ParseError(f"missing header {LEXICON_HEADER!r}", path=path, line=1)
    entries = [
        parse_lexicon_row(line, path=path, lineno=lineno)
        for lineno, line in enumerate(lines[1:], start=2)
    ]

    metadata = None
    meta_path = _meta_path(path)
    if meta_path.is_file():
        try:
            doc = json.loads(meta_path.read_text(encoding="utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ParseError(f"bad metadata sidecar: {exc}", path=meta_path) from None
        if doc.get("format") != META_FORMAT:
            raise ParseError(
                f"unexpected metadata format {doc.get('format')!r}", path=meta_path
            )
        metadata = LexiconMetadata(
            lr_model_id=doc["lr_model_id"],
            nn_model_id=doc["nn_model_id"],
            corpus_entries=doc["corpus_entries"],
            corpus_seed=doc["corpus_seed"],
            built_at=doc["built_at"],
        )
    return make_lexicon(entries, metadata)
