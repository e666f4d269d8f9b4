"""N-gram feature extraction: vocabularies and sparse document vectors.

A vocabulary keeps the most frequent unigrams and bigrams of a training
corpus, each term owning one index in a shared contiguous space (unigrams
first, bigrams after).  Documents become sparse index -> value maps, with
values either binarized ("presence") or raw in-tweet counts ("frequency").
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

PRESENCE = "presence"
FREQUENCY = "frequency"
FEATURE_MODES = (PRESENCE, FREQUENCY)

#: Default vocabulary budgets.
DEFAULT_UNIGRAM_BUDGET = 15000
DEFAULT_BIGRAM_BUDGET = 10000


def extract_unigrams(tweet) -> list:
    """Unigrams of a normalized tweet: the token list itself."""
    return list(tweet)


def extract_bigrams(tweet) -> list:
    """Adjacent token pairs, in order.  A tweet of n tokens yields n-1."""
    return list(zip(tweet, tweet[1:]))


def unigram_frequencies(corpus) -> Counter:
    """Corpus-wide unigram counts."""
    counts = Counter()
    for tweet in corpus:
        counts.update(extract_unigrams(tweet))
    return counts


def bigram_frequencies(corpus) -> Counter:
    """Corpus-wide bigram counts."""
    counts = Counter()
    for tweet in corpus:
        counts.update(extract_bigrams(tweet))
    return counts


def rank_frequency(dist) -> list:
    """Order a frequency distribution for plotting or export.

    Returns (rank, term, count) triples, rank starting at 1, sorted by
    descending count with ties broken by ascending term.
    """
    ordered = sorted(dist.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(rank, term, count) for rank, (term, count) in enumerate(ordered, start=1)]


def _top_terms(counts: Counter, budget: int) -> list:
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [term for term, _ in ordered[:budget]]


@dataclass(frozen=True)
class Vocabulary:
    """Frozen term -> index maps for unigrams and bigrams.

    Unigram indices fill [0, U), bigram indices [U, U+B).  Budgets record
    what was requested; the index maps may be smaller when the corpus has
    fewer distinct terms.
    """

    unigram_index: dict
    bigram_index: dict
    unigram_budget: int
    bigram_budget: int

    def __len__(self):
        return len(self.unigram_index) + len(self.bigram_index)

    @cached_property
    def _terms_by_index(self) -> dict:
        terms = {i: t for t, i in self.unigram_index.items()}
        terms.update({i: t for t, i in self.bigram_index.items()})
        return terms

    def term_at(self, index: int):
        """The unigram string or bigram tuple owning this index."""
        return self._terms_by_index[index]


def build_vocabulary(
    corpus,
    n_unigrams: int = DEFAULT_UNIGRAM_BUDGET,
    n_bigrams: int = DEFAULT_BIGRAM_BUDGET,
) -> Vocabulary:
    """Count the corpus once and keep the top n of each n-gram class.

    Selection and index assignment are deterministic: descending corpus
    frequency, ties by ascending term.  An empty corpus yields an empty
    (but usable) vocabulary.
    """
    if n_unigrams < 1:
        raise ValueError("unigram budget must be at least 1")
    if n_bigrams < 0:
        raise ValueError("bigram budget must be non-negative")

    unigrams = Counter()
    bigrams = Counter()
    for tweet in corpus:
        unigrams.update(extract_unigrams(tweet))
        bigrams.update(extract_bigrams(tweet))

    unigram_index = {t: i for i, t in enumerate(_top_terms(unigrams, n_unigrams))}
    offset = len(unigram_index)
    bigram_index = {t: offset + i for i, t in enumerate(_top_terms(bigrams, n_bigrams))}
    return Vocabulary(
        unigram_index=unigram_index,
        bigram_index=bigram_index,
        unigram_budget=n_unigrams,
        bigram_budget=n_bigrams,
    )


@dataclass(frozen=True)
class FeatureVector:
    """Sparse document representation over a Vocabulary's index space."""

    entries: dict
    mode: str

    def __post_init__(self):
        if self.mode not in FEATURE_MODES:
            raise ValueError(f"unknown feature mode: {self.mode!r}")


def vectorize(tweet, vocab: Vocabulary, mode: str = PRESENCE) -> FeatureVector:
    """Map a normalized tweet onto the vocabulary's index space.

    Out-of-vocabulary terms contribute nothing.  Presence mode records 1
    per distinct in-vocabulary term; frequency mode records in-tweet
    counts.
    """
    if mode not in FEATURE_MODES:
        raise ValueError(f"unknown feature mode: {mode!r}")
    entries: dict = {}
    for word in tweet:
        index = vocab.unigram_index.get(word)
        if index is not None:
            entries[index] = entries.get(index, 0) + 1
    for pair in extract_bigrams(tweet):
        index = vocab.bigram_index.get(pair)
        if index is not None:
            entries[index] = entries.get(index, 0) + 1
    if mode == PRESENCE:
        entries = dict.fromkeys(entries, 1)
    return FeatureVector(entries=entries, mode=mode)
