"""Dataset CSV ingestion, output writers, and the train/test split.

Input files are comma-separated with RFC-4180 quoting, an optional
header row, and integer tweet ids.  Labeled rows are
`tweet_id,sentiment,tweet` with sentiment a literal 0 or 1; unlabeled
rows drop the sentiment column.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from math import floor

from tweetiment.errors import DataError
from tweetiment.sentiment import Sentiment


@dataclass(frozen=True)
class LabeledRecord:
    tweet_id: int
    sentiment: Sentiment
    text: str


@dataclass(frozen=True)
class UnlabeledRecord:
    tweet_id: int
    text: str


def _is_int(field: str) -> bool:
    try:
        int(field)
    except ValueError:
        return False
    return True


def _strip_quote_pair(text: str) -> str:
    # Some exports wrap the tweet field in literal double quotes that
    # survive CSV parsing; peel exactly one pair.
    if len(text) >= 2 and text.startswith('"') and text.endswith('"'):
        return text[1:-1]
    return text


def _rows(stream, n_columns: int, lenient: bool):
    """Yield (line_number, row) with the shape checked and an optional
    header row skipped.

    In lenient mode, rows with extra fields have the overflow rejoined
    into the last column (an unquoted tweet containing commas); in strict
    mode they are malformed.
    """
    reader = csv.reader(stream)
    first = True
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if first:
            first = False
            if not _is_int(row[0]):
                continue  # header
        if len(row) < n_columns:
            raise DataError(f"line {line}: expected {n_columns} fields, got {len(row)}")
        if len(row) > n_columns:
            if not lenient:
                raise DataError(
                    f"line {line}: expected {n_columns} fields, got {len(row)} "
                    "(use lenient parsing for unquoted commas)"
                )
            row = row[: n_columns - 1] + [",".join(row[n_columns - 1 :])]
        yield line, row


def _parse_id(field: str, line: int, seen: set) -> int:
    if not _is_int(field):
        raise DataError(f"line {line}: tweet_id {field!r} is not an integer")
    tweet_id = int(field)
    if tweet_id in seen:
        raise DataError(f"line {line}: duplicate tweet_id {tweet_id}")
    seen.add(tweet_id)
    return tweet_id


def parse_labeled_csv(stream, lenient: bool = False):
    """Yield LabeledRecord from a `tweet_id,sentiment,tweet` stream."""
    seen: set = set()
    for line, row in _rows(stream, 3, lenient):
        tweet_id = _parse_id(row[0], line, seen)
        if row[1] not in ("0", "1"):
            raise DataError(f"line {line}: sentiment must be 0 or 1, got {row[1]!r}")
        yield LabeledRecord(
            tweet_id=tweet_id,
            sentiment=Sentiment(int(row[1])),
            text=_strip_quote_pair(row[2]),
        )


def parse_unlabeled_csv(stream, lenient: bool = False):
    """Yield UnlabeledRecord from a `tweet_id,tweet` stream."""
    seen: set = set()
    for line, row in _rows(stream, 2, lenient):
        tweet_id = _parse_id(row[0], line, seen)
        yield UnlabeledRecord(tweet_id=tweet_id, text=_strip_quote_pair(row[1]))


def write_labeled_csv(records, sink):
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["tweet_id", "sentiment", "tweet"])
    for record in records:
        writer.writerow([record.tweet_id, int(record.sentiment), record.text])


def write_unlabeled_csv(records, sink):
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["tweet_id", "tweet"])
    for record in records:
        writer.writerow([record.tweet_id, record.text])


def write_predictions_csv(id_sentiment_pairs, sink):
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["tweet_id", "sentiment"])
    for tweet_id, sentiment in id_sentiment_pairs:
        writer.writerow([tweet_id, int(sentiment)])


def write_normalized_csv(rows, sink, labeled: bool):
    """Write normalized tweets: `tweet_id[,sentiment],space-joined tokens`.

    `rows` holds (tweet_id, sentiment-or-None, tokens) triples.
    """
    writer = csv.writer(sink, lineterminator="\n")
    if labeled:
        writer.writerow(["tweet_id", "sentiment", "tweet"])
    else:
        writer.writerow(["tweet_id", "tweet"])
    for tweet_id, sentiment, tokens in rows:
        joined = " ".join(tokens)
        if labeled:
            writer.writerow([tweet_id, int(sentiment), joined])
        else:
            writer.writerow([tweet_id, joined])


def split_dataset(records, ratio: float = 0.8, seed: int = 1):
    """Shuffle deterministically under `seed` and split at `ratio`.

    The train side gets floor(ratio * n) records (with a tiny epsilon so
    exact products like 0.7 * 10 are not undercut by float noise).  A
    split leaving either side empty raises DataError.
    """
    if not 0 < ratio < 1:
        raise ValueError("ratio must be strictly between 0 and 1")
    shuffled = list(records)
    if not shuffled:
        raise DataError("nothing to split: empty record list")
    random.Random(seed).shuffle(shuffled)
    n_train = floor(ratio * len(shuffled) + 1e-9)
    if n_train == 0 or n_train == len(shuffled):
        raise DataError(
            f"ratio {ratio} leaves one side of the {len(shuffled)}-record split empty"
        )
    return shuffled[:n_train], shuffled[n_train:]
