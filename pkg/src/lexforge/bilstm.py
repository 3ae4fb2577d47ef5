"""Character-level bidirectional LSTM classifier, implemented from scratch.

A word is a character sequence; each direction runs an independent LSTM
(its own gate parameters) over the embedded characters, and the output
layer maps the concatenated final hidden states [h_fwd ; h_bwd] to two
logits (O_hi, O_en).  The softmax Hindi component is the word's score1.

Everything is plain numpy float64: forward, backpropagation through time,
gradient clipping, SGD.  One loss-and-gradients routine serves both the
training loop and the finite-difference gradient check, so the oracle
exercises exactly the code that trains.
"""

import json
import logging
import math
import struct
from dataclasses import dataclass, asdict
from pathlib import Path

import numpy as np

from .corpus import Corpus, LabeledWord, LanguageTag
from .errors import DivergenceError, MissingInputError, ParseError, ValidationError
from .logreg import TrainReport
from .numerics import guarded_relative_error, log_softmax, open_unit_softmax, sigmoid

logger = logging.getLogger(__name__)

MODEL_MAGIC = b"LFBILSTM"
MODEL_FORMAT = "lexforge-bilstm-v1"
UNK_ID = 0
UNK_TOKEN = "<UNK>"

# Logit positions: index 0 is Hindi, index 1 is English.
HINDI_IDX = 0
ENGLISH_IDX = 1


@dataclass
class BiLSTMHyperparams:
    d: int = 16  # character embedding width
    h: int = 32  # hidden units per direction
    learning_rate: float = 0.05
    epochs: int = 20
    batch_size: int = 64
    clip_norm: float = 5.0
    seed: int = 0


@dataclass(frozen=True)
class CharVocabulary:
    """Characters seen in training, ids 1..K; id 0 is the reserved UNK."""

    index: dict[str, int]

    @property
    def size(self) -> int:
        return len(self.index) + 1

    def chars_in_order(self) -> list[str]:
        return sorted(self.index, key=self.index.__getitem__)


@dataclass
class LSTMDirectionParams:
    """One direction's gates: input, forget, output, candidate.

    Each weight matrix is (h, d+h) and acts on [x_t ; h_{t-1}]; each bias
    has length h.
    """

    w_i: np.ndarray
    w_f: np.ndarray
    w_o: np.ndarray
    w_g: np.ndarray
    b_i: np.ndarray
    b_f: np.ndarray
    b_o: np.ndarray
    b_g: np.ndarray


@dataclass
class BiLSTMModel:
    char_vocab: CharVocabulary
    embeddings: np.ndarray  # (vocab size, d); row 0 is UNK
    forward: LSTMDirectionParams
    backward: LSTMDirectionParams
    out_w: np.ndarray  # (2, 2h)
    out_b: np.ndarray  # (2,)
    hyperparams: BiLSTMHyperparams


# Serialization and gradient bookkeeping walk tensors in this fixed order.
_GATE_NAMES = ("w_i", "w_f", "w_o", "w_g", "b_i", "b_f", "b_o", "b_g")
TENSOR_ORDER = (
    ("embeddings",)
    + tuple(f"fwd_{g}" for g in _GATE_NAMES)
    + tuple(f"bwd_{g}" for g in _GATE_NAMES)
    + ("out_w", "out_b")
)


def _tensors(model: BiLSTMModel) -> dict[str, np.ndarray]:
    out = {"embeddings": model.embeddings, "out_w": model.out_w, "out_b": model.out_b}
    for prefix, direction in (("fwd", model.forward), ("bwd", model.backward)):
        for g in _GATE_NAMES:
            out[f"{prefix}_{g}"] = getattr(direction, g)
    return out


def build_char_vocab(train: Corpus) -> CharVocabulary:
    chars = sorted({ch for e in train.entries for ch in e.surface})
    if not chars:
        raise ValidationError("no characters found to build a vocabulary from")
    return CharVocabulary(index={ch: i + 1 for i, ch in enumerate(chars)})


def encode_chars(surface: str, vocab: CharVocabulary) -> np.ndarray:
    """Character ids, unseen characters mapping to UNK (id 0)."""
    if not surface:
        raise ValueError("cannot encode an empty word")
    return np.array([vocab.index.get(ch, UNK_ID) for ch in surface], dtype=np.int64)


def _run_direction(
    params: LSTMDirectionParams, emb: np.ndarray, gates_out: list | None = None
) -> np.ndarray:
    """Single-word LSTM pass over emb (T, d); returns the final hidden state."""
    hdim = params.b_i.size
    h = np.zeros(hdim)
    c = np.zeros(hdim)
    for x in emb:
        z = np.concatenate([x, h])
        i = sigmoid(params.w_i @ z + params.b_i)
        f = sigmoid(params.w_f @ z + params.b_f)
        o = sigmoid(params.w_o @ z + params.b_o)
        g = np.tanh(params.w_g @ z + params.b_g)
        c = f * c + i * g
        h = o * np.tanh(c)
        if gates_out is not None:
            gates_out.append((i, f, o, g))
    return h


def encode(model: BiLSTMModel, surface: str) -> np.ndarray:
    """Word representation [h_fwd_final ; h_bwd_final], length 2h."""
    ids = encode_chars(surface, model.char_vocab)
    emb = model.embeddings[ids]
    h_fwd = _run_direction(model.forward, emb)
    h_bwd = _run_direction(model.backward, emb[::-1])
    return np.concatenate([h_fwd, h_bwd])


def word_logits(model: BiLSTMModel, surface: str) -> np.ndarray:
    return model.out_w @ encode(model, surface) + model.out_b


def softmax_score(model: BiLSTMModel, surface: str) -> tuple[float, np.ndarray]:
    """(score1, probs): probs is the stable 2-class softmax of the logits,
    score1 its Hindi component, both confined to the open (0, 1)."""
    probs = open_unit_softmax(word_logits(model, surface))
    return float(probs[HINDI_IDX]), probs


def predict_bilstm(model: BiLSTMModel, surface: str) -> LanguageTag:
    """Hindi iff the Hindi logit is at least the English one (ties to Hindi)."""
    logits = word_logits(model, surface)
    return LanguageTag.HINDI if logits[HINDI_IDX] >= logits[ENGLISH_IDX] else LanguageTag.ENGLISH


def _batch_forward_direction(
    params: LSTMDirectionParams, emb: np.ndarray
) -> tuple[np.ndarray, list]:
    """Batched pass over emb (B, T, d); returns final hidden (B, h) + caches."""
    bsz, steps, _ = emb.shape
    hdim = params.b_i.size
    h = np.zeros((bsz, hdim))
    c = np.zeros((bsz, hdim))
    cache = []
    for t in range(steps):
        z = np.concatenate([emb[:, t, :], h], axis=1)
        i = sigmoid(z @ params.w_i.T + params.b_i)
        f = sigmoid(z @ params.w_f.T + params.b_f)
        o = sigmoid(z @ params.w_o.T + params.b_o)
        g = np.tanh(z @ params.w_g.T + params.b_g)
        c_prev = c
        c = f * c_prev + i * g
        tc = np.tanh(c)
        h = o * tc
        cache.append((z, i, f, o, g, c_prev, c, tc))
    return h, cache


def _batch_backward_direction(
    params: LSTMDirectionParams, cache: list, dh_final: np.ndarray, d: int
) -> tuple[dict[str, np.ndarray], np.ndarray]:
    """BPTT for one direction; returns gate gradients and d(embeddings) (B, T, d)."""
    grads = {g: np.zeros_like(getattr(params, g)) for g in _GATE_NAMES}
    bsz = dh_final.shape[0]
    steps = len(cache)
    dx = np.zeros((bsz, steps, d))
    dh = dh_final
    dc = np.zeros_like(dh_final)
    for t in range(steps - 1, -1, -1):
        z, i, f, o, g, c_prev, _, tc = cache[t]
        do = dh * tc
        dc = dc + dh * o * (1.0 - tc * tc)
        di = dc * g
        dg = dc * i
        df = dc * c_prev
        da_i = di * i * (1.0 - i)
        da_f = df * f * (1.0 - f)
        da_o = do * o * (1.0 - o)
        da_g = dg * (1.0 - g * g)
        grads["w_i"] += da_i.T @ z
        grads["w_f"] += da_f.T @ z
        grads["w_o"] += da_o.T @ z
        grads["w_g"] += da_g.T @ z
        grads["b_i"] += da_i.sum(axis=0)
        grads["b_f"] += da_f.sum(axis=0)
        grads["b_o"] += da_o.sum(axis=0)
        grads["b_g"] += da_g.sum(axis=0)
        dz = da_i @ params.w_i + da_f @ params.w_f + da_o @ params.w_o + da_g @ params.w_g
        dx[:, t, :] = dz[:, :d]
        dh = dz[:, d:]
        dc = dc * f
    return grads, dx


def _batch_loss_and_grads(
    model: BiLSTMModel, ids: np.ndarray, labels: np.ndarray
) -> tuple[float, dict[str, np.ndarray]]:
    """Mean cross-entropy over a same-length batch and all parameter gradients.

    ids: (B, T) character ids; labels: (B,) logit indices (0 Hindi, 1 English).
    """
    # A diverged model overflows to inf/nan here by design; the training
    # loop turns the non-finite loss into DivergenceError, so keep numpy
    # quiet instead of warning on the way there.
    with np.errstate(over="ignore", invalid="ignore"):
        return _batch_loss_and_grads_inner(model, ids, labels)


def _batch_loss_and_grads_inner(
    model: BiLSTMModel, ids: np.ndarray, labels: np.ndarray
) -> tuple[float, dict[str, np.ndarray]]:
    bsz = ids.shape[0]
    d = model.hyperparams.d
    emb = model.embeddings[ids]
    h_fwd, cache_fwd = _batch_forward_direction(model.forward, emb)
    h_bwd, cache_bwd = _batch_forward_direction(model.backward, emb[:, ::-1, :])
    rep = np.concatenate([h_fwd, h_bwd], axis=1)
    logits = rep @ model.out_w.T + model.out_b
    logp = log_softmax(logits)
    loss = float(-logp[np.arange(bsz), labels].mean())

    dlogits = np.exp(logp)
    dlogits[np.arange(bsz), labels] -= 1.0
    dlogits /= bsz
    grads: dict[str, np.ndarray] = {
        "out_w": dlogits.T @ rep,
        "out_b": dlogits.sum(axis=0),
    }
    drep = dlogits @ model.out_w
    hdim = model.hyperparams.h
    g_fwd, dx_fwd = _batch_backward_direction(model.forward, cache_fwd, drep[:, :hdim], d)
    g_bwd, dx_bwd = _batch_backward_direction(model.backward, cache_bwd, drep[:, hdim:], d)
    for name, g in g_fwd.items():
        grads[f"fwd_{name}"] = g
    for name, g in g_bwd.items():
        grads[f"bwd_{name}"] = g

    # Scatter-add per-position embedding gradients back onto their rows; the
    # backward direction consumed the reversed sequence.
    g_emb = np.zeros_like(model.embeddings)
    np.add.at(g_emb, ids.ravel(), dx_fwd.reshape(-1, d))
    np.add.at(g_emb, ids[:, ::-1].ravel(), dx_bwd.reshape(-1, d))
    grads["embeddings"] = g_emb
    return loss, grads


def _init_model(
    vocab: CharVocabulary, hp: BiLSTMHyperparams, rng: np.random.Generator
) -> BiLSTMModel:
    """Uniform(-1/sqrt(h), 1/sqrt(h)) weights, zero biases, forget bias +1."""
    bound = 1.0 / math.sqrt(hp.h)

    def weights(shape: tuple[int, ...]) -> np.ndarray:
        return rng.uniform(-bound, bound, size=shape)

    def direction() -> LSTMDirectionParams:
        gate_shape = (hp.h, hp.d + hp.h)
        return LSTMDirectionParams(
            w_i=weights(gate_shape),
            w_f=weights(gate_shape),
            w_o=weights(gate_shape),
            w_g=weights(gate_shape),
            b_i=np.zeros(hp.h),
            b_f=np.ones(hp.h),
            b_o=np.zeros(hp.h),
            b_g=np.zeros(hp.h),
        )

    embeddings = weights((vocab.size, hp.d))
    fwd = direction()
    bwd = direction()
    out_w = weights((2, 2 * hp.h))
    return BiLSTMModel(
        char_vocab=vocab,
        embeddings=embeddings,
        forward=fwd,
        backward=bwd,
        out_w=out_w,
        out_b=np.zeros(2),
        hyperparams=hp,
    )


def _clip_global_norm(grads: dict[str, np.ndarray], clip_norm: float) -> float:
    """Scale all gradients so their joint 2-norm is at most clip_norm."""
    total = math.sqrt(sum(float((g * g).sum()) for g in grads.values()))
    if total > clip_norm and total > 0.0:
        scale = clip_norm / total
        for g in grads.values():
            g *= scale
    return total


def _epoch_batches(
    rng: np.random.Generator, lengths: list[int], batch_size: int
) -> list[np.ndarray]:
    """Shuffle, bucket by word length (no padding), chunk, shuffle batch order."""
    order = rng.permutation(len(lengths))
    buckets: dict[int, list[int]] = {}
    for i in order:
        buckets.setdefault(lengths[int(i)], []).append(int(i))
    batches = []
    for length in sorted(buckets):
        bucket = buckets[length]
        for start in range(0, len(bucket), batch_size):
            batches.append(np.array(bucket[start : start + batch_size], dtype=np.int64))
    return [batches[int(j)] for j in rng.permutation(len(batches))]


def _label_indices(train: Corpus) -> np.ndarray:
    return np.array(
        [HINDI_IDX if e.tag is LanguageTag.HINDI else ENGLISH_IDX for e in train.entries],
        dtype=np.int64,
    )


def train_bilstm(
    train: Corpus, hyperparams: BiLSTMHyperparams | None = None
) -> tuple[BiLSTMModel, TrainReport]:
    """SGD with gradient-norm clipping; deterministic given the seed.

    The character vocabulary comes from the train split only.  epochs=0
    returns the seeded random initialization untouched.
    """
    hp = hyperparams or BiLSTMHyperparams()
    if not train.entries:
        raise ValidationError("training corpus is empty")
    vocab = build_char_vocab(train)
    rng = np.random.Generator(np.random.PCG64(hp.seed))
    model = _init_model(vocab, hp, rng)

    ids_list = [encode_chars(e.surface, vocab) for e in train.entries]
    lengths = [ids.size for ids in ids_list]
    labels = _label_indices(train)
    n = len(ids_list)

    epoch_losses: list[float] = []
    tensors = _tensors(model)
    for epoch in range(hp.epochs):
        running = 0.0
        for batch in _epoch_batches(rng, lengths, hp.batch_size):
            ids = np.stack([ids_list[i] for i in batch])
            loss, grads = _batch_loss_and_grads(model, ids, labels[batch])
            if not math.isfinite(loss):
                raise DivergenceError("cross-entropy loss is non-finite", epoch)
            _clip_global_norm(grads, hp.clip_norm)
            with np.errstate(over="ignore"):
                for name, g in grads.items():
                    tensors[name] -= hp.learning_rate * g
            running += loss * batch.size
        epoch_losses.append(running / n)
        logger.debug("bilstm epoch %d/%d loss %.6f", epoch + 1, hp.epochs, epoch_losses[-1])

    correct = 0
    for batch in _epoch_batches(rng, lengths, hp.batch_size):
        ids = np.stack([ids_list[i] for i in batch])
        emb = model.embeddings[ids]
        h_fwd, _ = _batch_forward_direction(model.forward, emb)
        h_bwd, _ = _batch_forward_direction(model.backward, emb[:, ::-1, :])
        logits = np.concatenate([h_fwd, h_bwd], axis=1) @ model.out_w.T + model.out_b
        correct += int((logits.argmax(axis=1) == labels[batch]).sum())
    return model, TrainReport(epoch_losses=epoch_losses, final_accuracy=correct / n)


def gradient_check(model: BiLSTMModel, sample: LabeledWord, h_step: float) -> float:
    """Max guarded relative error between analytic BPTT gradients and central
    finite differences, over every scalar parameter.

    Only tractable for tiny models; d and h must not exceed 8, h_step must
    be positive.  The guard floor keeps near-zero gradients (where the
    quotient is all rounding noise) from dominating.
    """
    if h_step <= 0.0:
        raise ValueError("h_step must be positive")
    hp = model.hyperparams
    if hp.d > 8 or hp.h > 8:
        raise ValueError("gradient_check requires d <= 8 and h <= 8")
    ids = encode_chars(sample.surface, model.char_vocab)[None, :]
    labels = np.array([HINDI_IDX if sample.tag is LanguageTag.HINDI else ENGLISH_IDX])
    _, grads = _batch_loss_and_grads(model, ids, labels)

    worst = 0.0
    for name in TENSOR_ORDER:
        tensor = _tensors(model)[name]
        analytic = grads[name]
        flat = tensor.ravel()
        for k in range(flat.size):
            saved = flat[k]
            flat[k] = saved + h_step
            loss_plus, _ = _batch_loss_and_grads(model, ids, labels)
            flat[k] = saved - h_step
            loss_minus, _ = _batch_loss_and_grads(model, ids, labels)
            flat[k] = saved
            fd = (loss_plus - loss_minus) / (2.0 * h_step)
            worst = max(worst, guarded_relative_error(analytic.ravel()[k], fd))
    return worst


def save_bilstm(model: BiLSTMModel, path: str | Path) -> None:
    """Magic, u32 little-endian header length, JSON manifest, then the raw
    row-major float64 little-endian tensors in manifest order."""
    tensors = _tensors(model)
    for name in TENSOR_ORDER:
        if not np.isfinite(tensors[name]).all():
            raise ValidationError(f"refusing to save non-finite tensor {name}")
    header = {
        "format": MODEL_FORMAT,
        "chars": model.char_vocab.chars_in_order(),
        "hyperparams": asdict(model.hyperparams),
        "tensors": [[name, list(tensors[name].shape)] for name in TENSOR_ORDER],
    }
    blob = json.dumps(header, ensure_ascii=False).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(MODEL_MAGIC)
        fh.write(struct.pack("<I", len(blob)))
        fh.write(blob)
        for name in TENSOR_ORDER:
            fh.write(np.ascontiguousarray(tensors[name], dtype="<f8").tobytes())


def load_bilstm(path: str | Path) -> BiLSTMModel:
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"model file not found: {path}")
    raw = path.read_bytes()
    if raw[: len(MODEL_MAGIC)] != MODEL_MAGIC:
        raise ParseError("bad magic; not a bilstm model file", path=path)
    pos = len(MODEL_MAGIC)
    (hlen,) = struct.unpack_from("<I", raw, pos)
    pos += 4
    try:
        header = json.loads(raw[pos : pos + hlen].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad model header: {exc}", path=path) from None
    pos += hlen
    if header.get("format") != MODEL_FORMAT:
        raise ParseError(f"unexpected model format {header.get('format')!r}", path=path)
    names = [name for name, _ in header["tensors"]]
    if names != list(TENSOR_ORDER):
        raise ParseError("model tensor manifest does not match the known layout", path=path)

    arrays: dict[str, np.ndarray] = {}
    for name, shape in header["tensors"]:
        count = int(np.prod(shape)) if shape else 1
        nbytes = count * 8
        if pos + nbytes > len(raw):
            raise ParseError(f"truncated tensor data at {name}", path=path)
        arr = np.frombuffer(raw[pos : pos + nbytes], dtype="<f8").reshape(shape)
        arrays[name] = arr.astype(np.float64, copy=True)
        pos += nbytes
    if pos != len(raw):
        raise ParseError("trailing bytes after declared tensors", path=path)
    for name, arr in arrays.items():
        if not np.isfinite(arr).all():
            raise ValidationError(f"model tensor {name} has non-finite values: {path}")

    hp = BiLSTMHyperparams(**header["hyperparams"])
    vocab = CharVocabulary(index={ch: i + 1 for i, ch in enumerate(header["chars"])})
    if arrays["embeddings"].shape != (vocab.size, hp.d):
        raise ParseError("embedding shape does not match vocabulary and d", path=path)

    def direction(prefix: str) -> LSTMDirectionParams:
        return LSTMDirectionParams(**{g: arrays[f"{prefix}_{g}"] for g in _GATE_NAMES})

    return BiLSTMModel(
        char_vocab=vocab,
        embeddings=arrays["embeddings"],
        forward=direction("fwd"),
        backward=direction("bwd"),
        out_w=arrays["out_w"],
        out_b=arrays["out_b"],
        hyperparams=hp,
    )


def save_char_vocab(vocab: CharVocabulary, path: str | Path) -> None:
    lines = [f"{UNK_TOKEN}\t{UNK_ID}"]
    lines += [f"{ch}\t{vocab.index[ch]}" for ch in vocab.chars_in_order()]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def load_char_vocab(path: str | Path) -> CharVocabulary:
    path = Path(path)
    if not path.is_file():
        raise MissingInputError(f"character vocabulary not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid UTF-8: {exc}", path=path) from None
    index: dict[str, int] = {}
    saw_unk = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError("expected 2 tab-separated fields", path=path, line=lineno)
        token, id_text = parts
        try:
            idx = int(id_text)
        except ValueError:
            raise ParseError(f"bad index {id_text!r}", path=path, line=lineno) from None
        if token == UNK_TOKEN:
            if idx != UNK_ID or saw_unk:
                raise ParseError("UNK must appear once with index 0", path=path, line=lineno)
            saw_unk = True
            continue
        if len(token) != 1:
            raise ParseError(f"character entry {token!r} is not one char", path=path, line=lineno)
        if token in index:
            raise ParseError(f"duplicate character {token!r}", path=path, line=lineno)
        index[token] = idx
    if not saw_unk:
        raise ParseError("missing UNK row", path=path)
    if sorted(index.values()) != list(range(1, len(index) + 1)):
        raise ParseError("character indices are not dense 1..K", path=path)
    return CharVocabulary(index=index)
