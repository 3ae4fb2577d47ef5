"""Binary logistic regression over character n-gram counts.

Label convention: Hindi = 1, English = 0, so the model's probability is
directly the word's Hindi language strength (the lexicon's score2).
Training is plain mini-batch gradient descent on the L2-regularized mean
binary cross-entropy; one seeded PCG64 stream drives the batch order, so a
(data, hyperparams) pair always reproduces bit-identical parameters.
"""

import json
import logging
import math
from dataclasses import dataclass, asdict
from pathlib import Path

import numpy as np

from .corpus import Corpus, LanguageTag
from .errors import (
    DivergenceError,
    MissingInputError,
    ParseError,
    ValidationError,
    VocabMismatchError,
)
from .features import FeatureVector, NgramVocabulary, vectorize
from .numerics import open_unit_sigmoid, sigmoid, softplus

logger = logging.getLogger(__name__)

MODEL_FORMAT = "lexforge-logreg-v1"


@dataclass
class LogRegHyperparams:
    learning_rate: float = 0.1
    l2_lambda: float = 1e-4
    epochs: int = 30
    batch_size: int = 64
    seed: int = 0


@dataclass
class TrainReport:
    """Per-epoch mean objective values plus final training-set accuracy."""

    epoch_losses: list[float]
    final_accuracy: float


@dataclass
class LogRegModel:
    theta0: float
    theta: np.ndarray  # (p,); theta[i-1] pairs with vocabulary index i
    vocab_id: str
    hyperparams: LogRegHyperparams


def logistic_score(model: LogRegModel, fv: FeatureVector) -> float:
    """sigma(theta0 + sum theta_i * x_i), clamped into the open (0, 1)."""
    if fv.nnz and (fv.indices.min() < 1 or fv.indices.max() > model.theta.size):
        raise ValidationError(
            f"feature index out of range 1..{model.theta.size}"
        )
    z = model.theta0
    if fv.nnz:
        z += float(model.theta[fv.indices - 1] @ fv.counts.astype(np.float64))
    return open_unit_sigmoid(z)


def predict_lr(model: LogRegModel, surface: str, vocab: NgramVocabulary) -> LanguageTag:
    """Hindi iff the score reaches 0.5 (ties at exactly 0.5 go to Hindi)."""
    if model.vocab_id != vocab.vocab_id:
        raise VocabMismatchError(
            f"model was trained against vocabulary {model.vocab_id}, "
            f"got {vocab.vocab_id}"
        )
    score = logistic_score(model, vectorize(surface, vocab))
    return LanguageTag.HINDI if score >= 0.5 else LanguageTag.ENGLISH


def _stack_batch(fvs: list[FeatureVector]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Concatenate sparse vectors into (0-based indices, counts, row ids)."""
    if not fvs:
        return (
            np.empty(0, dtype=np.int64),
            np.empty(0, dtype=np.float64),
            np.empty(0, dtype=np.int64),
        )
    idx = np.concatenate([fv.indices for fv in fvs]) - 1
    cnt = np.concatenate([fv.counts for fv in fvs]).astype(np.float64)
    rows = np.repeat(np.arange(len(fvs)), [fv.nnz for fv in fvs])
    return idx, cnt, rows


def batch_logits(theta0: float, theta: np.ndarray, fvs: list[FeatureVector]) -> np.ndarray:
    idx, cnt, rows = _stack_batch(fvs)
    z = np.full(len(fvs), theta0, dtype=np.float64)
    if idx.size:
        z += np.bincount(rows, weights=theta[idx] * cnt, minlength=len(fvs))
    return z


def batch_loss(
    theta0: float,
    theta: np.ndarray,
    fvs: list[FeatureVector],
    labels: np.ndarray,
    l2_lambda: float,
) -> float:
    """Mean binary cross-entropy plus (lambda/2)||theta||^2 (bias unpenalized)."""
    # Overflow to inf is the divergence signal callers test for; keep it
    # silent here instead of emitting a RuntimeWarning.
    with np.errstate(over="ignore"):
        z = batch_logits(theta0, theta, fvs)
        bce = labels * softplus(-z) + (1.0 - labels) * softplus(z)
        return float(bce.mean() + 0.5 * l2_lambda * (theta @ theta))


def batch_loss_and_gradient(
    theta0: float,
    theta: np.ndarray,
    fvs: list[FeatureVector],
    labels: np.ndarray,
    l2_lambda: float,
) -> tuple[float, float, np.ndarray]:
    """Objective value and its analytic gradient (d/dtheta0, d/dtheta)."""
    idx, cnt, rows = _stack_batch(fvs)
    n = len(fvs)
    # As in batch_loss: a diverging objective overflows to inf by design.
    with np.errstate(over="ignore"):
        z = np.full(n, theta0, dtype=np.float64)
        if idx.size:
            z += np.bincount(rows, weights=theta[idx] * cnt, minlength=n)
        bce = labels * softplus(-z) + (1.0 - labels) * softplus(z)
        loss = float(bce.mean() + 0.5 * l2_lambda * (theta @ theta))
        err = sigmoid(z) - labels
        grad0 = float(err.mean())
        grad = l2_lambda * theta
        if idx.size:
            grad += np.bincount(idx, weights=err[rows] * cnt, minlength=theta.size) / n
    return loss, grad0, grad


def train_logreg(
    train: Corpus, vocab: NgramVocabulary, hyperparams: LogRegHyperparams | None = None
) -> tuple[LogRegModel, TrainReport]:
    """Fit by mini-batch gradient descent; deterministic given the seed.

    Parameters start at zero, so epochs=0 returns the zero model (every
    score exactly 0.5).  Raises DivergenceError when the objective goes
    non-finite.
    """
    hp = hyperparams or LogRegHyperparams()
    if not train.entries:
        raise ValidationError("training corpus is empty")
    fvs = [vectorize(e.surface, vocab) for e in train.entries]
    labels = np.array(
        [1.0 if e.tag is LanguageTag.HINDI else 0.0 for e in train.entries]
    )
    theta0 = 0.0
    theta = np.zeros(vocab.p, dtype=np.float64)

    rng = np.random.Generator(np.random.PCG64(hp.seed))
    n = len(fvs)
    epoch_losses: list[float] = []
    for epoch in range(hp.epochs):
        order = rng.permutation(n)
        weighted_loss = 0.0
        for start in range(0, n, hp.batch_size):
            batch = order[start : start + hp.batch_size]
            loss, g0, g = batch_loss_and_gradient(
                theta0, theta, [fvs[i] for i in batch], labels[batch], hp.l2_lambda
            )
            if not math.isfinite(loss):
                raise DivergenceError("logistic-regression loss is non-finite", epoch)
            weighted_loss += loss * batch.size
            theta0 -= hp.learning_rate * g0
            theta -= hp.learning_rate * g
        epoch_losses.append(weighted_loss / n)
        logger.debug("logreg epoch %d/%d loss %.6f", epoch + 1, hp.epochs, epoch_losses[-1])

    z = batch_logits(theta0, theta, fvs)
    accuracy = float(((z >= 0.0) == (labels == 1.0)).mean())
    model = LogRegModel(theta0=theta0, theta=theta, vocab_id=vocab.vocab_id, hyperparams=hp)
    return model, TrainReport(epoch_losses=epoch_losses, final_accuracy=accuracy)


def save_logreg(model: LogRegModel, path: str | Path) -> None:
    """JSON record; floats serialize via shortest round-trip repr, so a
    save/load cycle is bit-exact."""
    if not math.isfinite(model.theta0) or not np.isfinite(model.theta).all():
        raise ValidationError("refusing to save a model with non-finite parameters")
    doc = {
        "format": MODEL_FORMAT,
        "p": int(model.theta.size),
        "vocab_id": model.vocab_id,
        "hyperparams": asdict(model.hyperparams),
        "theta0": model.theta0,
        "theta": model.theta.tolist(),
    }
    Path(path).write_text(
        json.dumps(doc, indent=None) + "\n", encoding="utf-8", newline="\n"
    )


def load_logreg(path: str | Path) -> LogRegModel:
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"model file not found: {path}")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad model file: {exc}", path=path) from None
    if doc.get("format") != MODEL_FORMAT:
        raise ParseError(f"unexpected model format {doc.get('format')!r}", path=path)
    theta = np.asarray(doc["theta"], dtype=np.float64)
    if theta.size != doc["p"]:
        raise ParseError(
            f"theta length {theta.size} does not match header p={doc['p']}", path=path
        )
    if not math.isfinite(doc["theta0"]) or not np.isfinite(theta).all():
        raise ValidationError(f"model has non-finite parameters: {path}")
    return LogRegModel(
        theta0=float(doc["theta0"]),
        theta=theta,
        vocab_id=doc["vocab_id"],
        hyperparams=LogRegHyperparams(**doc["hyperparams"]),
    )
