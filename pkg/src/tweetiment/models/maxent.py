"""Maximum entropy (conditional exponential) classifier with iterative scaling.

Features are joint: vocabulary index i and class c own weight
lambda[c, i], which fires with the document's value for i only when the
candidate class is c.  A document's total firing mass is therefore the
same for every candidate class, which is exactly what lets both trainers
below use document mass as their step denominator.

Training maximizes conditional log-likelihood by generalized (GIS) or
improved (IIS) iterative scaling: fixed-point methods that pull model
feature expectations toward the empirical ones and never decrease the
training log-likelihood.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.special import logsumexp

from tweetiment.errors import DataError
from tweetiment.sentiment import Sentiment

GIS = "gis"
IIS = "iis"

# Features whose term never co-occurs with a class would be driven to
# -inf; clamping keeps every weight finite and serializable.
_WEIGHT_LIMIT = 30.0
_NEWTON_MAX_STEPS = 50
_NEWTON_TOLERANCE = 1e-10


@dataclass(frozen=True)
class TrainerConfig:
    algorithm: str = IIS
    max_iterations: int = 100
    ll_tolerance: float = 1e-6

    def __post_init__(self):
        if self.algorithm not in (GIS, IIS):
            raise ValueError(f"unknown trainer algorithm: {self.algorithm!r}")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")
        if self.ll_tolerance <= 0:
            raise ValueError("ll_tolerance must be positive")


@dataclass(eq=False)
class MaxEntModel:
    """Weights lambda[c, i]; row 0 is NEGATIVE, row 1 POSITIVE.

    ll_history records training log-likelihood before the first update and
    after each one.  It is a training diagnostic, not part of the model.
    """

    weights: np.ndarray  # shape (2, vocab_size)
    vocab_size: int
    ll_history: tuple = ()


def maxent_prob(model: MaxEntModel, doc) -> np.ndarray:
    """Conditional class distribution for one document.

    Indices at or beyond vocab_size are ignored.  An empty document or
    all-zero weights give the uniform distribution.
    """
    scores = np.zeros(2)
    for index, value in doc.entries.items():
        if 0 <= index < model.vocab_size:
            scores += value * model.weights[:, index]
    shifted = np.exp(scores - scores.max())
    return shifted / shifted.sum()


def maxent_predict(model: MaxEntModel, doc) -> Sentiment:
    """Argmax of maxent_prob; exact ties go positive."""
    probs = maxent_prob(model, doc)
    return Sentiment.POSITIVE if probs[1] >= probs[0] else Sentiment.NEGATIVE


def _document_matrix(pairs, vocab_size: int):
    rows, cols, data = [], [], []
    labels = np.empty(len(pairs), dtype=int)
    for d, (vector, label) in enumerate(pairs):
        labels[d] = int(label)
        for index, value in vector.entries.items():
            if 0 <= index < vocab_size and value != 0:
                rows.append(d)
                cols.append(index)
                data.append(float(value))
    matrix = csr_matrix((data, (rows, cols)), shape=(len(pairs), vocab_size))
    return matrix, labels


def _forward(matrix, weights, labels):
    """Per-document log class distribution and total log-likelihood."""
    scores = np.asarray(matrix @ weights.T)
    log_probs = scores - logsumexp(scores, axis=1, keepdims=True)
    ll = float(log_probs[np.arange(len(labels)), labels].sum())
    return log_probs, ll


def _gis_step(weights, matrix, probs, empirical, active, slack):
    model_expectation = np.asarray(matrix.T @ probs).T  # (2, vocab_size)
    # Where empirical mass exists, model mass is positive too (the same
    # document contributes to both), so the ratio is well-defined.
    ratio = np.ones_like(weights)
    np.divide(empirical, model_expectation, out=ratio, where=active)
    stepped = weights + np.log(ratio) / slack
    return np.clip(stepped, -_WEIGHT_LIMIT, _WEIGHT_LIMIT)


def _newton_solve(log_coefficients, masses, log_target):
    """Solve logsumexp(log_coefficients + delta * masses) = log_target.

    The left side is convex and strictly increasing in delta (masses are
    positive), so Newton from zero converges; iterates after the first
    bound the root from above.
    """
    delta = 0.0
    for _ in range(_NEWTON_MAX_STEPS):
        exponents = log_coefficients + delta * masses
        peak = exponents.max()
        shifted = np.exp(exponents - peak)
        value = peak + np.log(shifted.sum()) - log_target
        slope = (shifted @ masses) / shifted.sum()
        step = value / slope
        delta -= step
        if abs(step) < _NEWTON_TOLERANCE:
            break
    return delta


def _iis_step(weights, matrix_csc, log_probs, empirical, masses):
    stepped = weights.copy()
    indptr = matrix_csc.indptr
    indices = matrix_csc.indices
    data = matrix_csc.data
    for i in range(weights.shape[1]):
        start, end = indptr[i], indptr[i + 1]
        if start == end:
            continue
        docs = indices[start:end]
        values = data[start:end]
        doc_masses = masses[docs]
        log_values = np.log(values)
        for c in (0, 1):
            target = empirical[c, i]
            if target <= 0:
                continue  # zero empirical mass: update would diverge, freeze
            log_coefficients = log_probs[docs, c] + log_values
            if log_coefficients.max() == -np.inf:
                continue  # no model mass to rescale
            delta = _newton_solve(log_coefficients, doc_masses, np.log(target))
            stepped[c, i] += delta
    return np.clip(stepped, -_WEIGHT_LIMIT, _WEIGHT_LIMIT)


def maxent_train(corpus, vocab_size: int, config: TrainerConfig | None = None) -> MaxEntModel:
    """Fit weights by iterative scaling.

    `corpus` is (FeatureVector, Sentiment) pairs.  Stops after
    max_iterations or once the relative log-likelihood improvement of an
    iteration falls below ll_tolerance.  Raises DataError on an empty
    corpus, a single-class corpus, or a corpus with no active features.
    """
    if config is None:
        config = TrainerConfig()
    pairs = list(corpus)
    if not pairs:
        raise DataError("no training data")

    matrix, labels = _document_matrix(pairs, vocab_size)
    if matrix.nnz == 0:
        raise DataError("no active features in training corpus")

    empirical = np.zeros((2, vocab_size))
    for c in (0, 1):
        of_class = labels == c
        if not of_class.any():
            raise DataError("degenerate labels: both classes must appear in training data")
        empirical[c] = np.asarray(matrix[of_class].sum(axis=0)).ravel()
    active = empirical > 0

    masses = np.asarray(matrix.sum(axis=1)).ravel()
    slack = float(masses.max())  # the GIS constant C
    matrix_csc = matrix.tocsc() if config.algorithm == IIS else None

    weights = np.zeros((2, vocab_size))
    log_probs, ll = _forward(matrix, weights, labels)
    history = [ll]
    for _ in range(config.max_iterations):
        if config.algorithm == GIS:
            weights = _gis_step(weights, matrix, np.exp(log_probs), empirical, active, slack)
        else:
            weights = _iis_step(weights, matrix_csc, log_probs, empirical, masses)
        log_probs, new_ll = _forward(matrix, weights, labels)
        history.append(new_ll)
        improvement = (new_ll - ll) / max(abs(ll), 1e-12)
        ll = new_ll
        if improvement < config.ll_tolerance:
            break
    return MaxEntModel(weights=weights, vocab_size=vocab_size, ll_history=tuple(history))
