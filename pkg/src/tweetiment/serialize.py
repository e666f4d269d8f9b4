"""Versioned text persistence for vocabularies and trained models.

Both formats are line-oriented UTF-8 with tab-separated fields and a
version-carrying header.  Floats are written with repr(), which
round-trips every double exactly, so a deserialized model reproduces the
original's predictions bit for bit.

Vocabulary file:

    tweetiment-vocab v1 <unigram_budget> <bigram_budget>
    <index>TAB<U|B>TAB<term>          (bigram terms are "word1 word2")

Model file:

    tweetiment-model v1 <kind>
    meta TAB <key> TAB <value...>
    vocabulary TAB <unigram_budget> TAB <bigram_budget> TAB <n_terms>
    <term lines as above>
    parameters TAB <n_lines>
    <kind-specific parameter lines>
    end
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tweetiment.errors import ModelFormatError
from tweetiment.features import FEATURE_MODES, Vocabulary, vectorize
from tweetiment.models.baseline import OpinionLexicon, baseline_classify
from tweetiment.models.maxent import MaxEntModel, TrainerConfig, maxent_predict
from tweetiment.models.naive_bayes import NaiveBayesModel, nb_predict
from tweetiment.sentiment import Sentiment

VOCAB_MAGIC = "tweetiment-vocab"
MODEL_MAGIC = "tweetiment-model"
FORMAT_VERSION = "v1"
MODEL_KINDS = ("naive_bayes", "maxent", "baseline")


@dataclass(frozen=True)
class TrainingMetadata:
    n_docs: int
    trained_at: str
    feature_mode: str | None = None
    trainer: TrainerConfig | None = None
    alpha: float | None = None


@dataclass(frozen=True)
class ModelArtifact:
    """A trained model plus everything needed to run it on raw tokens."""

    kind: str
    vocabulary: Vocabulary
    model: object
    metadata: TrainingMetadata

    def __post_init__(self):
        if self.kind not in MODEL_KINDS:
            raise ValueError(f"unknown model kind: {self.kind!r}")


def _write_term_lines(vocab: Vocabulary, sink):
    for term, index in sorted(vocab.unigram_index.items(), key=lambda kv: kv[1]):
        sink.write(f"{index}\tU\t{term}\n")
    for (first, second), index in sorted(vocab.bigram_index.items(), key=lambda kv: kv[1]):
        sink.write(f"{index}\tB\t{first} {second}\n")


def _read_term_lines(lines, n_terms: int) -> tuple[dict, dict]:
    unigram_index: dict = {}
    bigram_index: dict = {}
    for _ in range(n_terms):
        fields = _next_line(lines).split("\t")
        if len(fields) != 3:
            raise ModelFormatError(f"malformed vocabulary line: {fields!r}")
        index_text, kind, term = fields
        if not index_text.isdigit():
            raise ModelFormatError(f"bad vocabulary index: {index_text!r}")
        index = int(index_text)
        if kind == "U":
            unigram_index[term] = index
        elif kind == "B":
            parts = term.split(" ")
            if len(parts) != 2:
                raise ModelFormatError(f"bigram term is not two words: {term!r}")
            bigram_index[(parts[0], parts[1])] = index
        else:
            raise ModelFormatError(f"unknown term kind: {kind!r}")
    indices = sorted(unigram_index.values()) + sorted(bigram_index.values())
    if indices != list(range(len(indices))):
        raise ModelFormatError("vocabulary indices are not contiguous")
    return unigram_index, bigram_index


def write_vocabulary_file(vocab: Vocabulary, sink):
    sink.write(
        f"{VOCAB_MAGIC} {FORMAT_VERSION} {vocab.unigram_budget} {vocab.bigram_budget}\n"
    )
    _write_term_lines(vocab, sink)


def read_vocabulary_file(source) -> Vocabulary:
    lines = iter(source)
    header = _next_line(lines).split()
    if len(header) != 4 or header[0] != VOCAB_MAGIC:
        raise ModelFormatError("not a vocabulary file")
    if header[1] != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported vocabulary format version: {header[1]}")
    remaining = [line.rstrip("\n") for line in lines if line.strip()]
    unigram_index, bigram_index = _read_term_lines(iter(remaining), len(remaining))
    return Vocabulary(
        unigram_index=unigram_index,
        bigram_index=bigram_index,
        unigram_budget=int(header[2]),
        bigram_budget=int(header[3]),
    )


def _next_line(lines) -> str:
    line = next(lines, None)
    if line is None:
        raise ModelFormatError("truncated model file")
    return line.rstrip("\n")


def serialize_model(artifact: ModelArtifact, sink):
    """Write a ModelArtifact in the versioned text format."""
    sink.write(f"{MODEL_MAGIC} {FORMAT_VERSION} {artifact.kind}\n")
    meta = artifact.metadata
    sink.write(f"meta\tn_docs\t{meta.n_docs}\n")
    sink.write(f"meta\ttrained_at\t{meta.trained_at}\n")
    if meta.feature_mode is not None:
        sink.write(f"meta\tfeature_mode\t{meta.feature_mode}\n")
    if meta.trainer is not None:
        sink.write(
            f"meta\ttrainer\t{meta.trainer.algorithm}"
            f"\t{meta.trainer.max_iterations}\t{repr(meta.trainer.ll_tolerance)}\n"
        )
    if meta.alpha is not None:
        sink.write(f"meta\talpha\t{repr(float(meta.alpha))}\n")

    vocab = artifact.vocabulary
    sink.write(
        f"vocabulary\t{vocab.unigram_budget}\t{vocab.bigram_budget}\t{len(vocab)}\n"
    )
    _write_term_lines(vocab, sink)

    parameter_lines = list(_parameter_lines(artifact))
    sink.write(f"parameters\t{len(parameter_lines)}\n")
    for line in parameter_lines:
        sink.write(line + "\n")
    sink.write("end\n")


def _parameter_lines(artifact: ModelArtifact):
    model = artifact.model
    if artifact.kind == "naive_bayes":
        for c in (0, 1):
            yield f"prior\t{c}\t{repr(float(model.class_log_prior[c]))}"
        for c in (0, 1):
            for i in range(model.vocab_size):
                yield f"likelihood\t{c}\t{i}\t{repr(float(model.feature_log_likelihood[c, i]))}"
    elif artifact.kind == "maxent":
        for c in (0, 1):
            for i in np.flatnonzero(model.weights[c]):
                yield f"weight\t{c}\t{i}\t{repr(float(model.weights[c, i]))}"
    else:
        for word in sorted(model.positive_words):
            yield f"positive_word\t{word}"
        for word in sorted(model.negative_words):
            yield f"negative_word\t{word}"


def deserialize_model(source) -> ModelArtifact:
    """Read a ModelArtifact back; rejects unknown versions and kinds."""
    lines = iter(source)
    header = _next_line(lines).split()
    if not header or header[0] != MODEL_MAGIC:
        raise ModelFormatError("not a model file")
    if len(header) != 3:
        raise ModelFormatError("malformed model header")
    if header[1] != FORMAT_VERSION:
        raise ModelFormatError(f"unsupported model format version: {header[1]}")
    kind = header[2]
    if kind not in MODEL_KINDS:
        raise ModelFormatError(f"unknown model kind: {kind!r}")

    meta_fields: dict = {}
    line = _next_line(lines)
    while line.startswith("meta\t"):
        fields = line.split("\t")
        meta_fields[fields[1]] = fields[2:]
        line = _next_line(lines)

    if not line.startswith("vocabulary\t"):
        raise ModelFormatError(f"expected vocabulary block, found: {line!r}")
    vocab_fields = line.split("\t")
    if len(vocab_fields) != 4:
        raise ModelFormatError("malformed vocabulary header")
    unigram_index, bigram_index = _read_term_lines(lines, int(vocab_fields[3]))
    vocabulary = Vocabulary(
        unigram_index=unigram_index,
        bigram_index=bigram_index,
        unigram_budget=int(vocab_fields[1]),
        bigram_budget=int(vocab_fields[2]),
    )

    line = _next_line(lines)
    if not line.startswith("parameters\t"):
        raise ModelFormatError(f"expected parameter block, found: {line!r}")
    parameter_lines = [_next_line(lines) for _ in range(int(line.split("\t")[1]))]
    if _next_line(lines) != "end":
        raise ModelFormatError("missing end marker")

    metadata = _metadata_from_fields(meta_fields)
    model = _model_from_parameters(kind, parameter_lines, len(vocabulary), metadata)
    return ModelArtifact(kind=kind, vocabulary=vocabulary, model=model, metadata=metadata)


def _metadata_from_fields(fields: dict) -> TrainingMetadata:
    try:
        n_docs = int(fields["n_docs"][0])
        trained_at = fields["trained_at"][0]
    except (KeyError, IndexError):
        raise ModelFormatError("missing model metadata") from None
    trainer = None
    if "trainer" in fields:
        algorithm, max_iterations, ll_tolerance = fields["trainer"]
        trainer = TrainerConfig(
            algorithm=algorithm,
            max_iterations=int(max_iterations),
            ll_tolerance=float(ll_tolerance),
        )
    feature_mode = fields.get("feature_mode", [None])[0]
    if feature_mode is not None and feature_mode not in FEATURE_MODES:
        raise ModelFormatError(f"unknown feature mode: {feature_mode!r}")
    alpha = float(fields["alpha"][0]) if "alpha" in fields else None
    return TrainingMetadata(
        n_docs=n_docs,
        trained_at=trained_at,
        feature_mode=feature_mode,
        trainer=trainer,
        alpha=alpha,
    )


def _model_from_parameters(kind, parameter_lines, vocab_size, metadata):
    if kind == "naive_bayes":
        prior = np.zeros(2)
        likelihood = np.zeros((2, vocab_size))
        for line in parameter_lines:
            fields = line.split("\t")
            if fields[0] == "prior" and len(fields) == 3:
                prior[int(fields[1])] = float(fields[2])
            elif fields[0] == "likelihood" and len(fields) == 4:
                likelihood[int(fields[1]), int(fields[2])] = float(fields[3])
            else:
                raise ModelFormatError(f"bad parameter line: {line!r}")
        if metadata.feature_mode is None or metadata.alpha is None:
            raise ModelFormatError("model file lacks feature_mode or alpha metadata")
        return NaiveBayesModel(
            class_log_prior=prior,
            feature_log_likelihood=likelihood,
            alpha=metadata.alpha,
            mode=metadata.feature_mode,
            vocab_size=vocab_size,
        )
    if kind == "maxent":
        weights = np.zeros((2, vocab_size))
        for line in parameter_lines:
            fields = line.split("\t")
            if fields[0] != "weight" or len(fields) != 4:
                raise ModelFormatError(f"bad parameter line: {line!r}")
            weights[int(fields[1]), int(fields[2])] = float(fields[3])
        return MaxEntModel(weights=weights, vocab_size=vocab_size)
    positive = set()
    negative = set()
    for line in parameter_lines:
        fields = line.split("\t")
        if fields[0] == "positive_word" and len(fields) == 2:
            positive.add(fields[1])
        elif fields[0] == "negative_word" and len(fields) == 2:
            negative.add(fields[1])
        else:
            raise ModelFormatError(f"bad parameter line: {line!r}")
    return OpinionLexicon(
        positive_words=frozenset(positive), negative_words=frozenset(negative)
    )


def artifact_predict(artifact: ModelArtifact, tokens) -> Sentiment:
    """Classify a normalized token list with whatever the artifact holds."""
    if artifact.kind == "baseline":
        return baseline_classify(tokens, artifact.model)
    doc = vectorize(tokens, artifact.vocabulary, artifact.metadata.feature_mode)
    if artifact.kind == "naive_bayes":
        label, _ = nb_predict(artifact.model, doc)
        return label
    return maxent_predict(artifact.model, doc)
