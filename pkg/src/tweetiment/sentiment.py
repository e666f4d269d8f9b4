"""Two-class sentiment labels."""

from enum import IntEnum


class Sentiment(IntEnum):
    """Polarity of a tweet: NEGATIVE serializes as 0, POSITIVE as 1."""

    NEGATIVE = 0
    POSITIVE = 1
