"""Subcommand front-end: ingest | train | eval | lexicon | score | plot.

A JSON config file declares inputs, the working directory, and all
hyperparameters.  Precedence for the working directory is flag over
LEXFORGE_WORKDIR over config; `--set SECTION.KEY=VALUE` overrides any
config key.  Relative paths in the config resolve against the config
file's own directory.

Each failure class maps to a distinct exit code (see errors module), so
shell pipelines can tell a missing artifact from a parse error.  All
subcommands are deterministic given the config's seeds.

Working directory layout:
    corpus/   corpus.tsv train.tsv test.tsv provenance.json
    models/   logreg.json bilstm.bin ngram_vocab.tsv char_vocab.tsv
    reports/  corpus_stats.{tsv,txt} train_*.json eval.{tsv,txt}
    lexicon/  lexicon.tsv (+ lexicon.tsv.meta.json)
    figs/     fig1.svg scatter.csv box.csv
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bilstm as bilstm_mod
from . import corpus as corpus_mod
from . import evaluation, features, lexicon as lexicon_mod, logreg as logreg_mod, viz
from .errors import ConfigError, LexforgeError, MissingArtifactError, ValidationError

logger = logging.getLogger(__name__)

WORKDIR_ENV = "LEXFORGE_WORKDIR"

# section -> key -> expected type (bool is never valid; JSON ints may fill floats)
_SCHEMA: dict[str, dict[str, type]] = {
    "paths": {"hindi_words": str, "english_words": str, "workdir": str},
    "corpus": {"seed": int, "test_fraction": float},
    "features": {"n_min": int, "n_max": int, "min_freq": int},
    "logreg": {
        "learning_rate": float,
        "l2_lambda": float,
        "epochs": int,
        "batch_size": int,
        "seed": int,
    },
    "bilstm": {
        "d": int,
        "h": int,
        "learning_rate": float,
        "epochs": int,
        "batch_size": int,
        "clip_norm": float,
        "seed": int,
    },
}


@dataclass
class RunConfig:
    hindi_words: Path
    english_words: Path
    workdir: Path
    seed: int
    test_fraction: float
    n_min: int
    n_max: int
    min_freq: int
    logreg: logreg_mod.LogRegHyperparams
    bilstm: bilstm_mod.BiLSTMHyperparams


class Workdir:
    """Fixed artifact layout under one root."""

    def __init__(self, root: Path):
        self.root = root
        self.corpus_tsv = root / "corpus" / "corpus.tsv"
        self.train_tsv = root / "corpus" / "train.tsv"
        self.test_tsv = root / "corpus" / "test.tsv"
        self.provenance_json = root / "corpus" / "provenance.json"
        self.stats_tsv = root / "reports" / "corpus_stats.tsv"
        self.stats_txt = root / "reports" / "corpus_stats.txt"
        self.logreg_json = root / "models" / "logreg.json"
        self.bilstm_bin = root / "models" / "bilstm.bin"
        self.ngram_vocab_tsv = root / "models" / "ngram_vocab.tsv"
        self.char_vocab_tsv = root / "models" / "char_vocab.tsv"
        self.train_logreg_json = root / "reports" / "train_logreg.json"
        self.train_bilstm_json = root / "reports" / "train_bilstm.json"
        self.eval_tsv = root / "reports" / "eval.tsv"
        self.eval_txt = root / "reports" / "eval.txt"
        self.lexicon_tsv = root / "lexicon" / "lexicon.tsv"
        self.fig_svg = root / "figs" / "fig1.svg"

    def ensure(self, *paths: Path) -> None:
        for p in paths:
            p.parent.mkdir(parents=True, exist_ok=True)

    def require(self, path: Path, hint: str) -> Path:
        if not path.is_file():
            raise MissingArtifactError(f"missing {path}; run `lexforge {hint}` first")
        return path


def _coerce(section: str, key: str, value, want: type):
    where = f"{section}.{key}"
    if isinstance(value, bool):
        raise ConfigError(f"{where}: expected {want.__name__}, got a boolean")
    if want is float and isinstance(value, (int, float)):
        return float(value)
    if want is int and isinstance(value, int):
        return value
    if want is str and isinstance(value, str):
        return value
    raise ConfigError(f"{where}: expected {want.__name__}, got {type(value).__name__}")


def load_config_file(path: str | Path) -> dict:
    """Parse and type-check the JSON config; unknown keys are rejected."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: top level must be an object")
    out: dict = {}
    for section, body in raw.items():
        if section not in _SCHEMA:
            raise ConfigError(f"{path}: unknown section {section!r}")
        if not isinstance(body, dict):
            raise ConfigError(f"{path}: section {section!r} must be an object")
        out[section] = {}
        for key, value in body.items():
            if key not in _SCHEMA[section]:
                raise ConfigError(f"{path}: unknown key {section}.{key}")
            out[section][key] = _coerce(section, key, value, _SCHEMA[section][key])
    return out


def apply_overrides(raw: dict, assignments: list[str]) -> dict:
    """Apply --set SECTION.KEY=VALUE strings on top of the config dict."""
    for text in assignments:
        head, sep, value_text = text.partition("=")
        if not sep:
            raise ConfigError(f"--set {text!r}: expected SECTION.KEY=VALUE")
        section, dot, key = head.partition(".")
        if not dot or section not in _SCHEMA or key not in _SCHEMA[section]:
            raise ConfigError(f"--set {text!r}: unknown config key {head!r}")
        want = _SCHEMA[section][key]
        try:
            value = want(value_text)
        except ValueError:
            raise ConfigError(
                f"--set {text!r}: cannot read {value_text!r} as {want.__name__}"
            ) from None
        raw.setdefault(section, {})[key] = value
    return raw


def _resolve(base: Path, value: str) -> Path:
    p = Path(value)
    return p if p.is_absolute() else base / p


def finalize_config(
    raw: dict, config_dir: Path, workdir_flag: str | None, env: dict | None = None
) -> RunConfig:
    env = os.environ if env is None else env
    paths = raw.get("paths", {})
    for key in ("hindi_words", "english_words"):
        if key not in paths:
            raise ConfigError(f"config is missing paths.{key}")
    workdir_text = workdir_flag or env.get(WORKDIR_ENV) or paths.get("workdir")
    if not workdir_text:
        raise ConfigError(
            f"no working directory: set paths.workdir, {WORKDIR_ENV}, or --workdir"
        )
    # Flag and env values resolve against the caller's CWD, config values
    # against the config file's directory.
    workdir = (
        _resolve(Path.cwd(), workdir_text)
        if (workdir_flag or env.get(WORKDIR_ENV))
        else _resolve(config_dir, workdir_text)
    )
    corpus_opts = raw.get("corpus", {})
    feat = raw.get("features", {})
    cfg = RunConfig(
        hindi_words=_resolve(config_dir, paths["hindi_words"]),
        english_words=_resolve(config_dir, paths["english_words"]),
        workdir=workdir,
        seed=corpus_opts.get("seed", 0),
        test_fraction=corpus_opts.get("test_fraction", 0.25),
        n_min=feat.get("n_min", 1),
        n_max=feat.get("n_max", 5),
        min_freq=feat.get("min_freq", 2),
        logreg=logreg_mod.LogRegHyperparams(**raw.get("logreg", {})),
        bilstm=bilstm_mod.BiLSTMHyperparams(**raw.get("bilstm", {})),
    )
    _validate_ranges(cfg)
    return cfg


def _validate_ranges(cfg: RunConfig) -> None:
    checks = [
        (cfg.seed >= 0, "corpus.seed must be >= 0"),
        (0.0 < cfg.test_fraction < 1.0, "corpus.test_fraction must be in (0,1)"),
        (cfg.n_min >= 1, "features.n_min must be >= 1"),
        (cfg.n_max >= cfg.n_min, "features.n_max must be >= n_min"),
        (cfg.min_freq >= 1, "features.min_freq must be >= 1"),
        (cfg.logreg.learning_rate > 0, "logreg.learning_rate must be > 0"),
        (cfg.logreg.l2_lambda >= 0, "logreg.l2_lambda must be >= 0"),
        (cfg.logreg.epochs >= 0, "logreg.epochs must be >= 0"),
        (cfg.logreg.batch_size >= 1, "logreg.batch_size must be >= 1"),
        (cfg.logreg.seed >= 0, "logreg.seed must be >= 0"),
        (cfg.bilstm.d >= 1, "bilstm.d must be >= 1"),
        (cfg.bilstm.h >= 1, "bilstm.h must be >= 1"),
        (cfg.bilstm.learning_rate > 0, "bilstm.learning_rate must be > 0"),
        (cfg.bilstm.epochs >= 0, "bilstm.epochs must be >= 0"),
        (cfg.bilstm.batch_size >= 1, "bilstm.batch_size must be >= 1"),
        (cfg.bilstm.clip_norm > 0, "bilstm.clip_norm must be > 0"),
        (cfg.bilstm.seed >= 0, "bilstm.seed must be >= 0"),
    ]
    for ok, message in checks:
        if not ok:
            raise ConfigError(message)


def cmd_ingest(cfg: RunConfig) -> None:
    wd = Workdir(cfg.workdir)
    hindi_raw = corpus_mod.read_word_list(cfg.hindi_words)
    english_raw = corpus_mod.read_word_list(cfg.english_words)
    corpus = corpus_mod.build_corpus(hindi_raw, english_raw, seed=cfg.seed)
    split = corpus_mod.split_corpus(corpus, cfg.test_fraction, seed=cfg.seed)
    stats = corpus_mod.corpus_stats(corpus)

    wd.ensure(wd.corpus_tsv, wd.provenance_json, wd.stats_tsv)
    corpus_mod.save_corpus_tsv(corpus, wd.corpus_tsv)
    corpus_mod.save_corpus_tsv(split.train, wd.train_tsv)
    corpus_mod.save_corpus_tsv(split.test, wd.test_tsv)
    corpus_mod.save_provenance_json(corpus, wd.provenance_json)
    wd.stats_tsv.write_text(
        corpus_mod.render_stats_tsv(stats), encoding="utf-8", newline="\n"
    )
    stats_text = corpus_mod.render_stats_text(stats)
    wd.stats_txt.write_text(stats_text, encoding="utf-8", newline="\n")
    print(stats_text, end="")
    print(f"corpus: {len(corpus)} words ({len(split.train)} train, {len(split.test)} test)")


def _load_train_split(wd: Workdir) -> corpus_mod.Corpus:
    return corpus_mod.load_corpus_tsv(wd.require(wd.train_tsv, "ingest"))


def cmd_train(cfg: RunConfig, model: str = "both") -> None:
    if model not in ("lr", "bilstm", "both"):
        raise ValidationError(f"unknown model selector {model!r}")
    wd = Workdir(cfg.workdir)
    train = _load_train_split(wd)
    wd.ensure(wd.logreg_json, wd.train_logreg_json)

    if model in ("lr", "both"):
        if cfg.logreg.epochs == 0:
            logger.warning("logreg epochs=0: persisting the untrained zero model")
        vocab = features.build_vocabulary(train, cfg.n_min, cfg.n_max, cfg.min_freq)
        lr_model, lr_report = logreg_mod.train_logreg(train, vocab, cfg.logreg)
        features.save_vocabulary(vocab, wd.ngram_vocab_tsv)
        logreg_mod.save_logreg(lr_model, wd.logreg_json)
        _write_train_report(wd.train_logreg_json, "logreg", lr_report)
        print(
            f"logreg: {vocab.p} features, final accuracy {lr_report.final_accuracy:.4f}"
        )
    if model in ("bilstm", "both"):
        if cfg.bilstm.epochs == 0:
            logger.warning("bilstm epochs=0: persisting the untrained random model")
        nn_model, nn_report = bilstm_mod.train_bilstm(train, cfg.bilstm)
        bilstm_mod.save_bilstm(nn_model, wd.bilstm_bin)
        bilstm_mod.save_char_vocab(nn_model.char_vocab, wd.char_vocab_tsv)
        _write_train_report(wd.train_bilstm_json, "bilstm", nn_report)
        print(
            f"bilstm: {nn_model.char_vocab.size} chars, "
            f"final accuracy {nn_report.final_accuracy:.4f}"
        )


def _write_train_report(path: Path, name: str, report: logreg_mod.TrainReport) -> None:
    doc = {
        "model": name,
        "epoch_losses": report.epoch_losses,
        "final_accuracy": report.final_accuracy,
    }
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8", newline="\n")


def _load_models(wd: Workdir):
    lr_model = logreg_mod.load_logreg(wd.require(wd.logreg_json, "train"))
    vocab = features.load_vocabulary(wd.require(wd.ngram_vocab_tsv, "train"))
    nn_model = bilstm_mod.load_bilstm(wd.require(wd.bilstm_bin, "train"))
    return lr_model, vocab, nn_model


def cmd_eval(cfg: RunConfig) -> None:
    wd = Workdir(cfg.workdir)
    test = corpus_mod.load_corpus_tsv(wd.require(wd.test_tsv, "ingest"))
    lr_model, vocab, nn_model = _load_models(wd)

    nn_report = evaluation.evaluate(
        lambda w: bilstm_mod.predict_bilstm(nn_model, w), test
    )
    lr_report = evaluation.evaluate(
        lambda w: logreg_mod.predict_lr(lr_model, w, vocab), test
    )
    table = evaluation.compare([("bilstm", nn_report), ("logreg", lr_report)])
    text = evaluation.render_comparison_text(table)
    reference = evaluation.render_reference_text()

    wd.ensure(wd.eval_tsv)
    wd.eval_tsv.write_text(evaluation.render_comparison_tsv(table), encoding="utf-8", newline="\n")
    wd.eval_txt.write_text(text + "\n" + reference, encoding="utf-8", newline="\n")
    print(text)
    print(reference, end="")


def cmd_lexicon(cfg: RunConfig) -> None:
    wd = Workdir(cfg.workdir)
    corpus = corpus_mod.load_corpus_tsv(wd.require(wd.corpus_tsv, "ingest"))
    lr_model, vocab, nn_model = _load_models(wd)
    lex = lexicon_mod.build_lexicon(corpus, lr_model, vocab, nn_model)
    wd.ensure(wd.lexicon_tsv)
    lexicon_mod.save_lexicon(lex, wd.lexicon_tsv)
    print(f"lexicon: {len(lex)} entries at {wd.lexicon_tsv}")


def cmd_score(cfg: RunConfig, word: str) -> None:
    wd = Workdir(cfg.workdir)
    lr_model, vocab, nn_model = _load_models(wd)
    normalized = corpus_mod.normalize_word(word)
    if len(normalized) != 1:
        raise ValidationError(
            f"{word!r} normalizes to {len(normalized)} words; score one word at a time"
        )
    score1, score2 = lexicon_mod.score_word(lr_model, vocab, nn_model, normalized[0])
    print(json.dumps({"word": normalized[0], "score1": score1, "score2": score2}))


def cmd_plot(cfg: RunConfig) -> None:
    wd = Workdir(cfg.workdir)
    lex = lexicon_mod.load_lexicon(wd.require(wd.lexicon_tsv, "lexicon"))
    records = viz.scatter_data(lex)
    pooled: dict[corpus_mod.LanguageTag, list[float]] = {}
    for entry in lex.entries:
        pooled.setdefault(entry.gold_tag, []).extend([entry.score1, entry.score2])
    boxes = {tag: viz.boxplot_stats(scores) for tag, scores in pooled.items()}
    wd.ensure(wd.fig_svg)
    viz.render_svg(records, boxes, wd.fig_svg)
    print(f"figure: {wd.fig_svg}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexforge",
        description="Build a Hindi-English language lexicon from word lists.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="JSON run configuration")
    common.add_argument("--workdir", help="working directory (overrides config and env)")
    common.add_argument(
        "--set",
        dest="assignments",
        action="append",
        default=[],
        metavar="SECTION.KEY=VALUE",
        help="override a config value (repeatable)",
    )
    common.add_argument("--verbose", action="store_true", help="debug logging")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ingest", parents=[common], help="build, split, and persist the corpus")
    p_train = sub.add_parser("train", parents=[common], help="train the classifiers")
    p_train.add_argument(
        "--model", choices=("lr", "bilstm", "both"), default="both", help="which model(s)"
    )
    sub.add_parser("eval", parents=[common], help="score models on the held-out split")
    sub.add_parser("lexicon", parents=[common], help="emit the scored lexicon TSV")
    p_score = sub.add_parser("score", parents=[common], help="score a single word")
    p_score.add_argument("word", help="word to score")
    sub.add_parser("plot", parents=[common], help="render the score figure and CSVs")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        raw = load_config_file(args.config)
        raw = apply_overrides(raw, args.assignments)
        cfg = finalize_config(raw, Path(args.config).resolve().parent, args.workdir)
        if args.command == "ingest":
            cmd_ingest(cfg)
        elif args.command == "train":
            cmd_train(cfg, args.model)
        elif args.command == "eval":
            cmd_eval(cfg)
        elif args.command == "lexicon":
            cmd_lexicon(cfg)
        elif args.command == "score":
            cmd_score(cfg, args.word)
        elif args.command == "plot":
            cmd_plot(cfg)
    except LexforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
