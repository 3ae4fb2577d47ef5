"""Character n-gram features for the linear classifier.

Words are padded with one '^' start marker and one '$' end marker before
n-grams are taken, so affixes become distinguishable features ("aa$" is a
different feature from "aa").  Markers participate in every n-gram order,
unigrams included.
"""

import hashlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import Corpus
from .errors import EmptyDataError, MissingInputError, ParseError

BOUNDARY_START = "^"
BOUNDARY_END = "$"


def extract_ngrams(surface: str, n_min: int = 1, n_max: int = 5) -> Counter:
    """All n-grams of the padded surface, with multiplicity.

    extract_ngrams("ab", 1, 2) counts the 7 substrings of "^ab$" with
    length 1 or 2: ^, a, b, $, ^a, ab, b$.
    """
    if not surface:
        raise ValueError("surface must be non-empty")
    if not 1 <= n_min <= n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    padded = BOUNDARY_START + surface + BOUNDARY_END
    grams: Counter = Counter()
    for n in range(n_min, n_max + 1):
        for i in range(len(padded) - n + 1):
            grams[padded[i : i + n]] += 1
    return grams


@dataclass
class NgramVocabulary:
    """Dense 1-based index over the surviving n-grams, lexicographic order.

    vocab_id is a content hash binding trained models to the exact
    vocabulary they were fit against.
    """

    n_min: int
    n_max: int
    index: dict[str, int]
    frequencies: dict[str, int]
    vocab_id: str

    @property
    def p(self) -> int:
        return len(self.index)


@dataclass
class FeatureVector:
    """Sparse counts over vocabulary indices (1-based, strictly increasing)."""

    indices: np.ndarray
    counts: np.ndarray

    @property
    def nnz(self) -> int:
        return int(self.indices.size)

    def total(self) -> int:
        return int(self.counts.sum())


def _vocab_lines(index: dict[str, int], frequencies: dict[str, int]) -> list[str]:
    return [f"{gram}\t{idx}\t{frequencies[gram]}" for gram, idx in index.items()]


def _content_id(lines: list[str]) -> str:
    digest = hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()
    return digest[:16]


def build_vocabulary(
    train: Corpus, n_min: int = 1, n_max: int = 5, min_freq: int = 2
) -> NgramVocabulary:
    """Index every n-gram whose total corpus frequency reaches min_freq.

    Index order is lexicographic over the n-gram strings, so rebuilding
    from the same split yields a byte-identical vocabulary.
    """
    if min_freq < 1:
        raise ValueError(f"min_freq must be >= 1, got {min_freq}")
    if not train.entries:
        raise EmptyDataError("cannot build a vocabulary from an empty corpus")
    totals: Counter = Counter()
    for entry in train.entries:
        totals.update(extract_ngrams(entry.surface, n_min, n_max))
    survivors = sorted(g for g, c in totals.items() if c >= min_freq)
    if not survivors:
        raise EmptyDataError(
            f"no n-gram reaches min_freq={min_freq}; lower the threshold"
        )
    index = {gram: i + 1 for i, gram in enumerate(survivors)}
    frequencies = {gram: totals[gram] for gram in survivors}
    return NgramVocabulary(
        n_min=n_min,
        n_max=n_max,
        index=index,
        frequencies=frequencies,
        vocab_id=_content_id(_vocab_lines(index, frequencies)),
    )


def vectorize(surface: str, vocab: NgramVocabulary) -> FeatureVector:
    """Counts of the surface's in-vocabulary n-grams; unknown n-grams drop out.

    This is the out-of-vocabulary pathway: any word vectorizes, possibly
    to few (or no) active features.
    """
    grams = extract_ngrams(surface, vocab.n_min, vocab.n_max)
    pairs = sorted(
        (vocab.index[g], c) for g, c in grams.items() if g in vocab.index
    )
    if not pairs:
        return FeatureVector(
            indices=np.empty(0, dtype=np.int64), counts=np.empty(0, dtype=np.int64)
        )
    idx, cnt = zip(*pairs)
    return FeatureVector(
        indices=np.asarray(idx, dtype=np.int64), counts=np.asarray(cnt, dtype=np.int64)
    )


def save_vocabulary(vocab: NgramVocabulary, path: str | Path) -> None:
    """Write `ngram<TAB>index<TAB>frequency` lines, lexicographic order."""
    lines = _vocab_lines(vocab.index, vocab.frequencies)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def load_vocabulary(path: str | Path) -> NgramVocabulary:
    """Load a vocabulary TSV.

    n_min/n_max are recovered from the stored gram lengths; an order whose
    grams were entirely pruned contributes no features either way, so the
    recovered bounds vectorize identically to the originals.
    """
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"vocabulary file not found: {path}")
    index: dict[str, int] = {}
    frequencies: dict[str, int] = {}
    for lineno, line in enumerate(
        path.read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 3 or not parts[0]:
            raise ParseError("expected `ngram<TAB>index<TAB>frequency`", path, lineno)
        try:
            idx, freq = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("index and frequency must be integers", path, lineno)
        if parts[0] in index:
            raise ParseError(f"duplicate n-gram {parts[0]!r}", path, lineno)
        index[parts[0]] = idx
        frequencies[parts[0]] = freq
    if not index:
        raise EmptyDataError(f"vocabulary file is empty: {path}")
    if sorted(index.values()) != list(range(1, len(index) + 1)):
        raise ParseError("indices are not dense 1..p", path)
    lengths = [len(g) for g in index]
    return NgramVocabulary(
        n_min=min(lengths),
        n_max=max(lengths),
        index=index,
        frequencies=frequencies,
        vocab_id=_content_id(_vocab_lines(index, frequencies)),
    )
