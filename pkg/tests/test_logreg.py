"""Logistic regression: scoring, gradients, training, persistence."""

import json
import math

import numpy as np
import pytest

from lexforge.corpus import Corpus, LabeledWord, LanguageTag
from lexforge.errors import (
    DivergenceError,
    MissingInputError,
    ParseError,
    ValidationError,
    VocabMismatchError,
)
from lexforge.features import FeatureVector, build_vocabulary, vectorize
from lexforge.logreg import (
    LogRegHyperparams,
    LogRegModel,
    batch_loss,
    batch_loss_and_gradient,
    load_logreg,
    logistic_score,
    predict_lr,
    save_logreg,
    train_logreg,
)
from lexforge.numerics import guarded_relative_error

HI = LanguageTag.HINDI
EN = LanguageTag.ENGLISH


def tiny_corpus():
    hindi = ["aana", "jaana", "khaana", "gaana", "naacha", "saaath"]
    english = ["tree", "green", "sleep", "street", "deep", "feet"]
    return Corpus(
        [LabeledWord(w, HI) for w in hindi] + [LabeledWord(w, EN) for w in english]
    )


def fv(indices, counts):
    return FeatureVector(
        indices=np.asarray(indices, dtype=np.int64),
        counts=np.asarray(counts, dtype=np.int64),
    )


def zero_model(vocab):
    return LogRegModel(
        theta0=0.0,
        theta=np.zeros(vocab.p),
        vocab_id=vocab.vocab_id,
        hyperparams=LogRegHyperparams(),
    )


class TestLogisticScore:
    def test_zero_model_scores_exactly_half(self):
        vocab = build_vocabulary(tiny_corpus(), 1, 3, min_freq=1)
        model = zero_model(vocab)
        assert logistic_score(model, vectorize("aana", vocab)) == 0.5
        assert logistic_score(model, vectorize("zzzz", vocab)) == 0.5

    def test_bias_only_model_on_unseen_word(self):
        # n_min=2 so a fully out-of-vocabulary word activates no feature
        # at all and the score collapses to sigma(theta0) = 3/4 exactly.
        vocab = build_vocabulary(
            Corpus([LabeledWord("aaaa", HI)]), 2, 3, min_freq=1
        )
        model = zero_model(vocab)
        model.theta0 = math.log(3.0)
        assert vectorize("zz", vocab).nnz == 0
        assert logistic_score(model, vectorize("zz", vocab)) == 0.75

    def test_extreme_negative_bias_stays_open(self):
        vocab = build_vocabulary(tiny_corpus(), 2, 3, min_freq=1)
        model = zero_model(vocab)
        model.theta0 = -50.0
        score = logistic_score(model, fv([], []))
        assert 0.0 < score <= 1e-20

    def test_counts_weight_the_logit(self):
        model = LogRegModel(
            theta0=0.05,
            theta=np.array([0.1, -0.2]),
            vocab_id="x",
            hyperparams=LogRegHyperparams(),
        )
        z = 0.05 + 0.1 * 2 + (-0.2) * 3
        assert logistic_score(model, fv([1, 2], [2, 3])) == pytest.approx(
            1.0 / (1.0 + math.exp(-z)), abs=1e-15
        )

    def test_out_of_range_index_rejected(self):
        model = LogRegModel(
            theta0=0.0, theta=np.zeros(3), vocab_id="x",
            hyperparams=LogRegHyperparams(),
        )
        with pytest.raises(ValidationError):
            logistic_score(model, fv([4], [1]))
        with pytest.raises(ValidationError):
            logistic_score(model, fv([0], [1]))


class TestGradient:
    def test_single_sample_closed_form(self):
        theta0, theta, lam = 0.05, np.array([0.1, -0.2]), 0.01
        sample = fv([1, 2], [2, 3])
        label = np.array([1.0])
        z = theta0 + 0.1 * 2 + (-0.2) * 3
        p = 1.0 / (1.0 + math.exp(-z))
        loss, g0, g = batch_loss_and_gradient(theta0, theta, [sample], label, lam)
        assert loss == pytest.approx(
            math.log1p(math.exp(-z)) + 0.5 * lam * float(theta @ theta), abs=1e-15
        )
        assert g0 == pytest.approx(p - 1.0, abs=1e-15)
        assert g[0] == pytest.approx(lam * 0.1 + (p - 1.0) * 2, abs=1e-15)
        assert g[1] == pytest.approx(lam * (-0.2) + (p - 1.0) * 3, abs=1e-15)

    def test_matches_finite_differences(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        fvs = [vectorize(e.surface, vocab) for e in corpus.entries]
        labels = np.array([1.0 if e.tag is HI else 0.0 for e in corpus.entries])
        rng = np.random.Generator(np.random.PCG64(11))
        theta0 = float(rng.normal(scale=0.5))
        theta = rng.normal(scale=0.5, size=vocab.p)
        lam = 1e-3
        _, g0, g = batch_loss_and_gradient(theta0, theta, fvs, labels, lam)

        h = 1e-5
        fd0 = (
            batch_loss(theta0 + h, theta, fvs, labels, lam)
            - batch_loss(theta0 - h, theta, fvs, labels, lam)
        ) / (2 * h)
        fd = np.empty_like(theta)
        for j in range(theta.size):
            bumped = theta.copy()
            bumped[j] = theta[j] + h
            up = batch_loss(theta0, bumped, fvs, labels, lam)
            bumped[j] = theta[j] - h
            down = batch_loss(theta0, bumped, fvs, labels, lam)
            fd[j] = (up - down) / (2 * h)

        assert guarded_relative_error(np.array([g0]), np.array([fd0])) < 1e-6
        assert guarded_relative_error(g, fd) < 1e-6

    def test_l2_excludes_bias(self):
        sample = fv([1], [1])
        label = np.array([0.0])
        _, g0_a, _ = batch_loss_and_gradient(2.0, np.zeros(1), [sample], label, 0.0)
        _, g0_b, _ = batch_loss_and_gradient(2.0, np.zeros(1), [sample], label, 10.0)
        assert g0_a == g0_b

    def test_empty_feature_rows_contribute_bias_only(self):
        loss, g0, g = batch_loss_and_gradient(
            0.0, np.array([1.0]), [fv([], [])], np.array([1.0]), 0.0
        )
        assert loss == pytest.approx(math.log(2.0), abs=1e-15)
        assert g0 == pytest.approx(-0.5, abs=1e-15)
        assert g[0] == 0.0


class TestTraining:
    def test_separable_toy_reaches_full_accuracy(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        hp = LogRegHyperparams(learning_rate=0.5, epochs=60, batch_size=4, seed=0)
        model, report = train_logreg(corpus, vocab, hp)
        assert report.final_accuracy == 1.0
        assert report.epoch_losses[-1] < report.epoch_losses[0]
        for entry in corpus.entries:
            assert predict_lr(model, entry.surface, vocab) is entry.tag

    def test_same_seed_is_bit_identical(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        hp = LogRegHyperparams(epochs=5, batch_size=3, seed=42)
        a, ra = train_logreg(corpus, vocab, hp)
        b, rb = train_logreg(corpus, vocab, hp)
        assert a.theta0 == b.theta0
        assert a.theta.tobytes() == b.theta.tobytes()
        assert ra.epoch_losses == rb.epoch_losses

    def test_different_seed_changes_trajectory(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        a, _ = train_logreg(corpus, vocab, LogRegHyperparams(epochs=3, batch_size=3, seed=0))
        b, _ = train_logreg(corpus, vocab, LogRegHyperparams(epochs=3, batch_size=3, seed=1))
        assert a.theta.tobytes() != b.theta.tobytes()

    def test_zero_epochs_returns_zero_model(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        model, report = train_logreg(corpus, vocab, LogRegHyperparams(epochs=0))
        assert model.theta0 == 0.0
        assert not model.theta.any()
        assert report.epoch_losses == []
        # z = 0 everywhere predicts Hindi; accuracy is the Hindi fraction.
        assert report.final_accuracy == 0.5

    def test_divergence_reports_epoch(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        hp = LogRegHyperparams(learning_rate=1e305, epochs=4, batch_size=3, seed=0)
        with pytest.raises(DivergenceError) as exc_info:
            train_logreg(corpus, vocab, hp)
        assert exc_info.value.epoch is not None

    def test_empty_corpus_rejected(self):
        vocab = build_vocabulary(tiny_corpus(), 1, 2, min_freq=1)
        with pytest.raises(ValidationError):
            train_logreg(Corpus([]), vocab)

    def test_tie_goes_to_hindi(self):
        vocab = build_vocabulary(tiny_corpus(), 1, 3, min_freq=1)
        assert predict_lr(zero_model(vocab), "anything", vocab) is HI

    def test_vocab_mismatch_rejected(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        other = build_vocabulary(corpus, 1, 2, min_freq=1)
        with pytest.raises(VocabMismatchError):
            predict_lr(zero_model(vocab), "aana", other)


class TestPersistence:
    def trained(self):
        corpus = tiny_corpus()
        vocab = build_vocabulary(corpus, 1, 3, min_freq=1)
        model, _ = train_logreg(
            corpus, vocab, LogRegHyperparams(epochs=4, batch_size=4, seed=7)
        )
        return model, vocab

    def test_round_trip_is_bit_exact(self, tmp_path):
        model, vocab = self.trained()
        path = tmp_path / "model.json"
        save_logreg(model, path)
        loaded = load_logreg(path)
        assert loaded.theta0 == model.theta0
        assert loaded.theta.tobytes() == model.theta.tobytes()
        assert loaded.vocab_id == model.vocab_id
        assert loaded.hyperparams == model.hyperparams
        save_logreg(loaded, path)
        first = path.read_bytes()
        save_logreg(loaded, path)
        assert path.read_bytes() == first

    def test_scores_survive_round_trip(self, tmp_path):
        model, vocab = self.trained()
        path = tmp_path / "model.json"
        save_logreg(model, path)
        loaded = load_logreg(path)
        for word in ("aana", "tree", "zebra"):
            assert logistic_score(loaded, vectorize(word, vocab)) == logistic_score(
                model, vectorize(word, vocab)
            )

    def test_missing_file(self, tmp_path):
        with pytest.raises(MissingInputError):
            load_logreg(tmp_path / "absent.json")

    def test_bad_json(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ParseError):
            load_logreg(path)

    def test_wrong_format_marker(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps({"format": "other"}), encoding="utf-8")
        with pytest.raises(ParseError, match="format"):
            load_logreg(path)

    def test_length_mismatch(self, tmp_path):
        model, _ = self.trained()
        path = tmp_path / "model.json"
        save_logreg(model, path)
        doc = json.loads(path.read_text(encoding="utf-8"))
        doc["p"] = doc["p"] + 1
        path.write_text(json.dumps(doc), encoding="utf-8")
        with pytest.raises(ParseError, match="length"):
            load_logreg(path)

    def test_non_finite_refused_on_save(self, tmp_path):
        model, _ = self.trained()
        model.theta[0] = np.inf
        with pytest.raises(ValidationError):
            save_logreg(model, tmp_path / "model.json")

    def test_non_finite_refused_on_load(self, tmp_path):
        model, _ = self.trained()
        path = tmp_path / "model.json"
        save_logreg(model, path)
        doc = json.loads(path.read_text(encoding="utf-8"))
        doc["theta0"] = float("nan")
        path.write_text(json.dumps(doc), encoding="utf-8")
        with pytest.raises(ValidationError):
            load_logreg(path)
