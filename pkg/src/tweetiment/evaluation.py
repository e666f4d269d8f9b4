"""Accuracy reports and corpus statistics over normalized tweets."""

from __future__ import annotations

from dataclasses import dataclass

from tweetiment.errors import DataError
from tweetiment.models.baseline import OpinionLexicon, baseline_classify
from tweetiment.normalize import (
    EMO_NEG_TOKEN,
    EMO_POS_TOKEN,
    URL_TOKEN,
    USER_MENTION_TOKEN,
)
from tweetiment.sentiment import Sentiment


@dataclass(frozen=True)
class TokenStats:
    """Counts for one special-token kind: corpus total, per-tweet average
    and maximum."""

    total: int
    average: float
    maximum: int


@dataclass(frozen=True)
class EmoticonStats:
    total: int
    positive: int
    negative: int
    average: float
    maximum: int


@dataclass(frozen=True)
class NgramStats:
    """maximum is None where it is not reported (bigrams)."""

    total: int
    unique: int
    average: float
    maximum: int | None


@dataclass(frozen=True)
class CorpusStats:
    """Per-corpus statistics; label counts are None for unlabeled corpora."""

    n_tweets: int
    n_positive: int | None
    n_negative: int | None
    user_mentions: TokenStats
    emoticons: EmoticonStats
    urls: TokenStats
    unigrams: NgramStats
    bigrams: NgramStats


@dataclass(frozen=True)
class EvaluationReport:
    """Accuracy plus the 2x2 confusion table, confusion[gold][predicted]."""

    accuracy: float
    confusion: tuple
    n_docs: int
    model_name: str
    baseline_accuracy: float | None = None

    @property
    def true_negatives(self):
        return self.confusion[0][0]

    @property
    def false_positives(self):
        return self.confusion[0][1]

    @property
    def false_negatives(self):
        return self.confusion[1][0]

    @property
    def true_positives(self):
        return self.confusion[1][1]


def corpus_stats(corpus) -> CorpusStats:
    """Aggregate Table-style statistics over (tokens, optional label) pairs.

    Averages are exact totals over tweet count (0 for an empty corpus);
    rounding is left to the renderer.  Sentiment counts are filled only
    when every tweet carries a label.
    """
    n_tweets = 0
    labels: list = []
    all_labeled = True

    mention_total = mention_max = 0
    url_total = url_max = 0
    emo_pos_total = emo_neg_total = emo_max = 0
    unigram_total = unigram_max = 0
    unique_unigrams: set = set()
    bigram_total = 0
    unique_bigrams: set = set()

    for tokens, label in corpus:
        n_tweets += 1
        if label is None:
            all_labeled = False
        else:
            labels.append(label)

        mentions = sum(1 for t in tokens if t == USER_MENTION_TOKEN)
        urls = sum(1 for t in tokens if t == URL_TOKEN)
        emo_pos = sum(1 for t in tokens if t == EMO_POS_TOKEN)
        emo_neg = sum(1 for t in tokens if t == EMO_NEG_TOKEN)

        mention_total += mentions
        mention_max = max(mention_max, mentions)
        url_total += urls
        url_max = max(url_max, urls)
        emo_pos_total += emo_pos
        emo_neg_total += emo_neg
        emo_max = max(emo_max, emo_pos + emo_neg)

        unigram_total += len(tokens)
        unigram_max = max(unigram_max, len(tokens))
        unique_unigrams.update(tokens)
        bigram_total += max(0, len(tokens) - 1)
        unique_bigrams.update(zip(tokens, tokens[1:]))

    def avg(total):
        return total / n_tweets if n_tweets else 0.0

    emo_total = emo_pos_total + emo_neg_total
    n_positive = sum(1 for label in labels if label is Sentiment.POSITIVE)
    return CorpusStats(
        n_tweets=n_tweets,
        n_positive=n_positive if all_labeled else None,
        n_negative=len(labels) - n_positive if all_labeled else None,
        user_mentions=TokenStats(mention_total, avg(mention_total), mention_max),
        emoticons=EmoticonStats(
            emo_total, emo_pos_total, emo_neg_total, avg(emo_total), emo_max
        ),
        urls=TokenStats(url_total, avg(url_total), url_max),
        unigrams=NgramStats(
            unigram_total, len(unique_unigrams), avg(unigram_total), unigram_max
        ),
        bigrams=NgramStats(
            bigram_total, len(unique_bigrams), avg(bigram_total), None
        ),
    )


def evaluate(predictions, gold, model_name: str = "model") -> EvaluationReport:
    """Confusion counts and accuracy for aligned prediction/gold sequences."""
    predictions = list(predictions)
    gold = list(gold)
    if not gold:
        raise DataError("nothing to evaluate: empty gold sequence")
    if len(predictions) != len(gold):
        raise DataError(
            f"prediction/gold length mismatch: {len(predictions)} vs {len(gold)}"
        )
    counts = [[0, 0], [0, 0]]
    for predicted, actual in zip(predictions, gold):
        counts[int(actual)][int(predicted)] += 1
    correct = counts[0][0] + counts[1][1]
    return EvaluationReport(
        accuracy=correct / len(gold),
        confusion=(tuple(counts[0]), tuple(counts[1])),
        n_docs=len(gold),
        model_name=model_name,
    )


def baseline_report(corpus, lexicon: OpinionLexicon, model_predictions, model_name: str = "model") -> EvaluationReport:
    """Evaluate model predictions with the lexicon baseline run alongside.

    `corpus` is (tokens, Sentiment) pairs with gold labels; the returned
    report carries the model's numbers plus baseline_accuracy over the
    same tweets.
    """
    pairs = list(corpus)
    gold = [label for _, label in pairs]
    report = evaluate(model_predictions, gold, model_name=model_name)
    baseline_predictions = [baseline_classify(tokens, lexicon) for tokens, _ in pairs]
    baseline = evaluate(baseline_predictions, gold, model_name="baseline")
    return EvaluationReport(
        accuracy=report.accuracy,
        confusion=report.confusion,
        n_docs=report.n_docs,
        model_name=report.model_name,
        baseline_accuracy=baseline.accuracy,
    )


def _fmt_avg(value: float) -> str:
    return f"{value:.4f}"


def format_stats(stats: CorpusStats) -> str:
    """Plain-text rendering of CorpusStats, averages shown to 4 decimals."""
    lines = [f"tweets          total {stats.n_tweets}"]
    if stats.n_positive is not None:
        lines.append(f"  positive      {stats.n_positive}")
        lines.append(f"  negative      {stats.n_negative}")
    lines.append(
        "user mentions   total {0.total}   avg {1}   max {0.maximum}".format(
            stats.user_mentions, _fmt_avg(stats.user_mentions.average)
        )
    )
    lines.append(
        "emoticons       total {0.total} (positive {0.positive}, negative {0.negative})   "
        "avg {1}   max {0.maximum}".format(
            stats.emoticons, _fmt_avg(stats.emoticons.average)
        )
    )
    lines.append(
        "urls            total {0.total}   avg {1}   max {0.maximum}".format(
            stats.urls, _fmt_avg(stats.urls.average)
        )
    )
    lines.append(
        "unigrams        total {0.total}   unique {0.unique}   avg {1}   max {0.maximum}".format(
            stats.unigrams, _fmt_avg(stats.unigrams.average)
        )
    )
    lines.append(
        "bigrams         total {0.total}   unique {0.unique}   avg {1}   max N/A".format(
            stats.bigrams, _fmt_avg(stats.bigrams.average)
        )
    )
    return "\n".join(lines)


def format_report(report: EvaluationReport) -> str:
    lines = [
        f"{report.model_name} accuracy: {report.accuracy:.4f} on {report.n_docs} tweets",
        "confusion (gold x predicted):",
        f"  gold negative:  predicted negative {report.true_negatives}, positive {report.false_positives}",
        f"  gold positive:  predicted negative {report.false_negatives}, positive {report.true_positives}",
    ]
    if report.baseline_accuracy is not None:
        lines.append(f"baseline accuracy: {report.baseline_accuracy:.4f}")
    return "\n".join(lines)
