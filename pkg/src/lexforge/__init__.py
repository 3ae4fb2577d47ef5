"""Hindi-English language lexicon builder.

Two character-level classifiers (a bidirectional LSTM and an n-gram
logistic regression) assign every word a pair of Hindi language-strength
scores in (0, 1); the scored vocabulary is persisted as a flat lexicon
with evaluation reports and figures alongside.
"""

from .bilstm import (
    BiLSTMHyperparams,
    BiLSTMModel,
    CharVocabulary,
    build_char_vocab,
    encode,
    gradient_check,
    load_bilstm,
    predict_bilstm,
    save_bilstm,
    softmax_score,
    train_bilstm,
)
from .corpus import (
    Corpus,
    LabeledWord,
    LanguageTag,
    SplitCorpus,
    build_corpus,
    corpus_stats,
    load_corpus_tsv,
    normalize_word,
    save_corpus_tsv,
    split_corpus,
)
from .errors import (
    ConfigError,
    DivergenceError,
    EmptyDataError,
    LexforgeError,
    MissingArtifactError,
    MissingInputError,
    ParseError,
    ValidationError,
    VocabMismatchError,
)
from .evaluation import EvalReport, compare, evaluate, report_from_predictions
from .features import (
    FeatureVector,
    NgramVocabulary,
    build_vocabulary,
    extract_ngrams,
    load_vocabulary,
    save_vocabulary,
    vectorize,
)
from .lexicon import (
    Lexicon,
    LexiconEntry,
    build_lexicon,
    load_lexicon,
    lookup,
    save_lexicon,
    score_word,
)
from .logreg import (
    LogRegHyperparams,
    LogRegModel,
    TrainReport,
    load_logreg,
    logistic_score,
    predict_lr,
    save_logreg,
    train_logreg,
)
from .viz import BoxStats, ScatterRecord, boxplot_stats, render_svg, scatter_data

__version__ = "0.1.0"

__all__ = [
    "BiLSTMHyperparams",
    "BiLSTMModel",
    "BoxStats",
    "CharVocabulary",
    "ConfigError",
    "Corpus",
    "DivergenceError",
    "EmptyDataError",
    "EvalReport",
    "FeatureVector",
    "LabeledWord",
    "LanguageTag",
    "Lexicon",
    "LexiconEntry",
    "LexforgeError",
    "LogRegHyperparams",
    "LogRegModel",
    "MissingArtifactError",
    "MissingInputError",
    "NgramVocabulary",
    "ParseError",
    "ScatterRecord",
    "SplitCorpus",
    "TrainReport",
    "ValidationError",
    "VocabMismatchError",
    "boxplot_stats",
    "build_char_vocab",
    "build_corpus",
    "build_lexicon",
    "build_vocabulary",
    "compare",
    "corpus_stats",
    "encode",
    "evaluate",
    "extract_ngrams",
    "gradient_check",
    "load_bilstm",
    "load_corpus_tsv",
    "load_lexicon",
    "load_logreg",
    "load_vocabulary",
    "logistic_score",
    "lookup",
    "normalize_word",
    "predict_bilstm",
    "predict_lr",
    "render_svg",
    "report_from_predictions",
    "save_bilstm",
    "save_corpus_tsv",
    "save_lexicon",
    "save_logreg",
    "save_vocabulary",
    "scatter_data",
    "score_word",
    "softmax_score",
    "split_corpus",
    "train_bilstm",
    "train_logreg",
    "vectorize",
]
