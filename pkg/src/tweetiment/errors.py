"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: DataError -> 3, ModelFormatError -> 4.
"""


class TweetimentError(Exception):
    """Base class for all toolkit errors."""


class DataError(TweetimentError):
    """Malformed or inconsistent input data (CSV rows, labels, lexicons, config)."""


class LexiconConflictError(DataError):
    """A word appears in both the positive and the negative opinion lexicon."""


class ModelFormatError(TweetimentError):
    """A model or vocabulary file is unreadable: bad version, kind, or truncation."""
