"""Numerically careful primitives shared by both classifiers.

Score-producing functions must stay inside the open interval (0, 1) for any
finite input, so the saturating ends are pulled back to the nearest
representable values instead of exact 0.0 / 1.0.
"""

import numpy as np

# Smallest positive normal double and the largest double below 1.0.
_TINY = np.finfo(np.float64).tiny
_ONE_MINUS = np.nextafter(1.0, 0.0)


def sigmoid(z):
    """Logistic function, safe for any finite argument (no overflow).

    Branches on sign so only exp of non-positive values is evaluated.
    Saturates to exact 0.0 / 1.0 in float64 for |z| beyond ~745 / ~37.
    """
    z = np.asarray(z, dtype=np.float64)
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def open_unit_sigmoid(z: float) -> float:
    """Sigmoid clamped into the open interval (0, 1).

    Used for emitted language-strength scores, which are contractually
    never 0, 1, NaN, or Inf for finite logits.
    """
    s = float(sigmoid(np.float64(z)))
    return min(max(s, _TINY), _ONE_MINUS)


def softplus(z):
    """log(1 + exp(z)) without overflow; used by the cross-entropy losses."""
    return np.logaddexp(0.0, z)


def softmax(logits):
    """Max-subtracted softmax over the last axis."""
    logits = np.asarray(logits, dtype=np.float64)
    shifted = logits - logits.max(axis=-1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=-1, keepdims=True)


def open_unit_softmax(logits):
    """Softmax with every component clamped into (0, 1).

    Clamping moves each component by at most one ulp of 1.0 plus one tiny,
    so the probabilities still sum to 1 within ~1e-15.
    """
    return np.clip(softmax(logits), _TINY, _ONE_MINUS)


def log_softmax(logits):
    """Log-probabilities over the last axis, max-subtracted for stability."""
    logits = np.asarray(logits, dtype=np.float64)
    shifted = logits - logits.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def guarded_relative_error(a, b, floor: float = 1e-3) -> float:
    """Elementwise |a-b| / max(|a|, |b|, floor), reduced to the maximum.

    The floor keeps finite-difference round-off on near-zero gradients from
    dominating the comparison; a genuine gradient bug still produces an
    error orders of magnitude above any sane tolerance.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    denom = np.maximum(np.maximum(np.abs(a), np.abs(b)), floor)
    if a.size == 0:
        return 0.0
    return float((np.abs(a - b) / denom).max())
