"""Acceptance gate: seven end-to-end checks, one test (and one verdict line) each.

The pipeline fixture runs the real CLI twice over the bundled word lists with
the default configuration, so the checks below exercise exactly what a user
gets: same artifacts, same seeds, same defaults.
"""

import json
import math
import os
import random
import statistics
import time
from pathlib import Path

import numpy as np
import pytest

from lexforge.bilstm import (
    BiLSTMHyperparams,
    gradient_check,
    load_bilstm,
    softmax_score,
    train_bilstm,
)
from lexforge.cli import main
from lexforge.corpus import Corpus, LabeledWord, LanguageTag
from lexforge.evaluation import report_from_predictions
from lexforge.features import build_vocabulary, vectorize
from lexforge.lexicon import (
    LEXICON_HEADER,
    LexiconEntry,
    load_lexicon,
    make_lexicon,
    parse_lexicon_row,
    save_lexicon,
)
from lexforge.logreg import (
    batch_loss,
    batch_loss_and_gradient,
    load_logreg,
    logistic_score,
)
from lexforge.numerics import guarded_relative_error

HI = LanguageTag.HINDI
EN = LanguageTag.ENGLISH

# Pinned tolerances and floors.
BILSTM_GRAD_TOL = 1e-4
LOGREG_GRAD_TOL = 1e-6
GRAD_TIME_BUDGET_S = 30.0
METRIC_TOL = 1e-12
LOGREG_F_FLOOR = 0.90
BILSTM_F_FLOOR = 0.88
MIN_WORDS_PER_CLASS = 2000
PIPELINE_TIME_BUDGET_S = 600.0
HINDI_MEDIAN_FLOOR = 0.8
ENGLISH_MEDIAN_CEIL = 0.2
SOFTMAX_SUM_TOL = 1e-9
N_RANDOM_WORDS = 1000

ARTIFACTS = (
    "corpus/corpus.tsv",
    "corpus/train.tsv",
    "corpus/test.tsv",
    "corpus/provenance.json",
    "models/logreg.json",
    "models/bilstm.bin",
    "models/ngram_vocab.tsv",
    "models/char_vocab.tsv",
    "reports/corpus_stats.tsv",
    "reports/corpus_stats.txt",
    "reports/train_logreg.json",
    "reports/train_bilstm.json",
    "reports/eval.tsv",
    "reports/eval.txt",
    "lexicon/lexicon.tsv",
    "lexicon/lexicon.tsv.meta.json",
    "figs/fig1.svg",
    "figs/scatter.csv",
    "figs/box.csv",
)

TABLE_ROW = "abhilaasha\t0.9943395256996155\t0.9999969538347858\thi"


@pytest.fixture(scope="module")
def runs(tmp_path_factory):
    """Two complete default-config pipeline runs; yields both workdirs and
    the wall-clock seconds of the first."""
    base = tmp_path_factory.mktemp("acceptance")
    data = Path(__file__).resolve().parents[1] / "data"
    saved_epoch = os.environ.get("SOURCE_DATE_EPOCH")
    os.environ["SOURCE_DATE_EPOCH"] = "1700000000"
    try:
        elapsed = math.inf
        for name in ("run1", "run2"):
            workdir = base / name
            config = base / f"config_{name}.json"
            config.write_text(
                json.dumps(
                    {
                        "paths": {
                            "hindi_words": str(data / "hindi_words.txt"),
                            "english_words": str(data / "english_words.txt"),
                            "workdir": str(workdir),
                        }
                    }
                ),
                encoding="utf-8",
            )
            start = time.monotonic()
            for command in (["ingest"], ["train"], ["eval"], ["lexicon"], ["plot"]):
                code = main(command + ["--config", str(config)])
                assert code == 0, f"lexforge {command[0]} exited with {code}"
            if name == "run1":
                elapsed = time.monotonic() - start
        yield base / "run1", base / "run2", elapsed
    finally:
        if saved_epoch is None:
            os.environ.pop("SOURCE_DATE_EPOCH", None)
        else:
            os.environ["SOURCE_DATE_EPOCH"] = saved_epoch


def read_tsv(path):
    return [line.split("\t") for line in path.read_text(encoding="utf-8").splitlines()]


def test_c1_gradient_oracle():
    """Analytic gradients match central finite differences for both models."""
    start = time.monotonic()

    surfaces = ["ab", "bcda", "caad", "dba", "qxq"]  # last one is all-OOV
    shapes = [(2, 3), (3, 2), (4, 4), (5, 3), (8, 8)]
    worst = 0.0
    for k, (d, h) in enumerate(shapes):
        seeded = Corpus(
            [LabeledWord(w, HI if i % 2 else EN) for i, w in enumerate(("abcd", "dcba"))]
        )
        model, _ = train_bilstm(
            seeded, BiLSTMHyperparams(d=d, h=h, epochs=0, seed=100 + k)
        )
        for j, surface in enumerate(surfaces):
            sample = LabeledWord(surface, HI if j % 2 else EN)
            worst = max(worst, gradient_check(model, sample, 1e-5))
    assert worst < BILSTM_GRAD_TOL, f"bilstm max relative error {worst:.3e}"

    words = ["aana", "gaana", "jaana", "tree", "green", "street", "qqq"]
    corpus = Corpus([LabeledWord(w, HI if i < 3 else EN) for i, w in enumerate(words)])
    vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
    fvs = [vectorize(w, vocab) for w in words]
    labels = np.array([1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0])
    rng = np.random.Generator(np.random.PCG64(5))
    theta0 = float(rng.normal(scale=0.4))
    theta = rng.normal(scale=0.4, size=vocab.p)
    lam = 1e-3
    _, g0, g = batch_loss_and_gradient(theta0, theta, fvs, labels, lam)
    step = 1e-5
    fd = np.empty(theta.size + 1)
    fd[0] = (
        batch_loss(theta0 + step, theta, fvs, labels, lam)
        - batch_loss(theta0 - step, theta, fvs, labels, lam)
    ) / (2 * step)
    for j in range(theta.size):
        bumped = theta.copy()
        bumped[j] += step
        up = batch_loss(theta0, bumped, fvs, labels, lam)
        bumped[j] -= 2 * step
        down = batch_loss(theta0, bumped, fvs, labels, lam)
        fd[j + 1] = (up - down) / (2 * step)
    lr_err = guarded_relative_error(np.concatenate([[g0], g]), fd)
    assert lr_err < LOGREG_GRAD_TOL, f"logreg max relative error {lr_err:.3e}"

    elapsed = time.monotonic() - start
    assert elapsed < GRAD_TIME_BUDGET_S, f"gradient oracle took {elapsed:.1f}s"


def test_c2_metric_oracle():
    """Evaluation agrees with an independent longhand recount on random sets."""
    rng = random.Random(2024)
    for _ in range(20):
        n = rng.randint(1, 100)
        gold = [rng.choice((HI, EN)) for _ in range(n)]
        predicted = [rng.choice((HI, EN)) for _ in range(n)]
        report = report_from_predictions(gold, predicted)

        for tag in (HI, EN):
            tp = sum(1 for g, p in zip(gold, predicted) if g is tag and p is tag)
            fp = sum(1 for g, p in zip(gold, predicted) if g is not tag and p is tag)
            fn = sum(1 for g, p in zip(gold, predicted) if g is tag and p is not tag)
            precision = tp / (tp + fp) if tp + fp else 0.0
            recall = tp / (tp + fn) if tp + fn else 0.0
            f_score = (
                2 * precision * recall / (precision + recall)
                if precision + recall
                else 0.0
            )
            m = report.per_tag[tag]
            assert m.support == tp + fn
            assert abs(m.precision - precision) <= METRIC_TOL
            assert abs(m.recall - recall) <= METRIC_TOL
            assert abs(m.f_score - f_score) <= METRIC_TOL

        # the weighted row is the support-weighted blend of the class rows
        for field in ("precision", "recall", "f_score"):
            blended = (
                sum(
                    report.per_tag[t].support * getattr(report.per_tag[t], field)
                    for t in (HI, EN)
                )
                / n
            )
            assert abs(getattr(report.weighted_avg, field) - blended) <= METRIC_TOL


def test_c3_quantitative_floor(runs):
    """Both classifiers clear their weighted-F floors on the held-out split."""
    run1, _, elapsed = runs
    tags = [row[1] for row in read_tsv(run1 / "corpus" / "corpus.tsv")]
    assert tags.count("hi") >= MIN_WORDS_PER_CLASS
    assert tags.count("en") >= MIN_WORDS_PER_CLASS

    weighted = {}
    for row in read_tsv(run1 / "reports" / "eval.tsv")[1:]:
        if row[1] == "Weighted Avg" and not row[0].startswith("delta"):
            weighted[row[0]] = float(row[4])
    assert weighted["logreg"] >= LOGREG_F_FLOOR, f"logreg weighted F {weighted['logreg']:.4f}"
    assert weighted["bilstm"] >= BILSTM_F_FLOOR, f"bilstm weighted F {weighted['bilstm']:.4f}"
    assert elapsed < PIPELINE_TIME_BUDGET_S, f"pipeline took {elapsed:.0f}s"


def test_c4_lexicon_separation(runs):
    """Held-out Hindi words score high, English words low, on both scores."""
    run1, _, _ = runs
    lex = load_lexicon(run1 / "lexicon" / "lexicon.tsv")
    scores = {HI: ([], []), EN: ([], [])}
    for surface, tag_text in read_tsv(run1 / "corpus" / "test.tsv"):
        entry = lex.index[surface]
        tag = LanguageTag.from_value(tag_text)
        scores[tag][0].append(entry.score1)
        scores[tag][1].append(entry.score2)

    hi1, hi2 = (statistics.median(s) for s in scores[HI])
    en1, en2 = (statistics.median(s) for s in scores[EN])
    assert hi1 >= HINDI_MEDIAN_FLOOR, f"hindi median score1 {hi1:.4f}"
    assert hi2 >= HINDI_MEDIAN_FLOOR, f"hindi median score2 {hi2:.4f}"
    assert en1 <= ENGLISH_MEDIAN_CEIL, f"english median score1 {en1:.4f}"
    assert en2 <= ENGLISH_MEDIAN_CEIL, f"english median score2 {en2:.4f}"


def test_c5_normalization_and_range(runs):
    """Scores normalize and stay in the open interval; artifacts are finite."""
    run1, _, _ = runs
    nn = load_bilstm(run1 / "models" / "bilstm.bin")
    lr = load_logreg(run1 / "models" / "logreg.json")
    from lexforge.features import load_vocabulary

    vocab = load_vocabulary(run1 / "models" / "ngram_vocab.tsv")

    rng = random.Random(99)
    latin = "abcdefghijklmnopqrstuvwxyz"
    foreign = "0123456789ΑΒΓ"  # never enters the corpus
    for i in range(N_RANDOM_WORDS):
        alphabet = foreign if i % 4 == 0 else latin
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 12)))
        score1, probs = softmax_score(nn, word)
        assert abs(float(probs.sum()) - 1.0) <= SOFTMAX_SUM_TOL
        assert np.isfinite(probs).all()
        assert 0.0 < score1 < 1.0
        score2 = logistic_score(lr, vectorize(word, vocab))
        assert 0.0 < score2 < 1.0 and math.isfinite(score2)

    # no NaN/Inf in anything the pipeline wrote
    for row in read_tsv(run1 / "lexicon" / "lexicon.tsv")[1:]:
        assert math.isfinite(float(row[1])) and math.isfinite(float(row[2]))
    for row in read_tsv(run1 / "reports" / "eval.tsv")[1:]:
        assert all(math.isfinite(float(v)) for v in row[2:5])
    for name in ("train_logreg.json", "train_bilstm.json"):
        doc = json.loads((run1 / "reports" / name).read_text(encoding="utf-8"))
        assert all(math.isfinite(v) for v in doc["epoch_losses"])
        assert math.isfinite(doc["final_accuracy"])
    for name in ("scatter.csv", "box.csv"):
        for line in (run1 / "figs" / name).read_text(encoding="utf-8").splitlines()[1:]:
            for cell in line.split(","):
                try:
                    value = float(cell)
                except ValueError:
                    continue  # tag column
                assert math.isfinite(value)


def test_c6_determinism(runs):
    """Both runs produced byte-identical artifacts, figure included."""
    run1, run2, _ = runs
    for rel in ARTIFACTS:
        a = (run1 / rel).read_bytes()
        b = (run2 / rel).read_bytes()
        assert a == b, f"{rel} differs between identical runs"


def test_c7_round_trip(tmp_path):
    """Lexicon files survive save/load cycles byte-for-byte."""
    tiny = 5e-324
    near_one = float.fromhex("0x1.fffffffffffffp-1")
    lexicons = [
        make_lexicon(
            [
                LexiconEntry("gulaam", 0.9503, 0.9435, HI),
                LexiconEntry("literally", 0.0010, 0.0056, EN),
                LexiconEntry("zameen", 0.5, 0.5, HI),
            ]
        ),
        make_lexicon(
            [
                LexiconEntry("edge", tiny, near_one, EN),
                LexiconEntry("verge", near_one, tiny, HI),
                LexiconEntry("mid", 0.5000000000000001, 1e-300, HI),
            ]
        ),
        make_lexicon(
            [
                LexiconEntry("anon", 0.25, 0.75, None),
                LexiconEntry("tagged", 0.75, 0.25, EN),
                LexiconEntry("étude", 0.4, 0.6, None),
            ]
        ),
    ]
    for k, lex in enumerate(lexicons):
        path = tmp_path / f"lex{k}.tsv"
        save_lexicon(lex, path)
        first = path.read_bytes()
        loaded = load_lexicon(path)
        assert loaded.entries == lex.entries
        save_lexicon(loaded, path)
        assert path.read_bytes() == first

    row = parse_lexicon_row(TABLE_ROW)
    assert (row.surface, row.gold_tag) == ("abhilaasha", HI)
    assert row.score1 == 0.9943395256996155
    path = tmp_path / "reference.tsv"
    save_lexicon(make_lexicon([row]), path)
    assert path.read_text(encoding="utf-8") == f"{LEXICON_HEADER}\n{TABLE_ROW}\n"
