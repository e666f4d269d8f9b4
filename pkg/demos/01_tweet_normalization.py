"""
Tweet normalization walkthrough
===============================

Raw tweets are noisy: URLs, @mentions, emoticons, hashtags, elongated
words.  The normalizer rewrites all of that into a clean token list.
"""

from tweetiment import DEFAULT_EMOTICONS, EmoticonTable, normalize_tweet, normalize_word

raw_tweets = [
    "I'm sooooo happpppy today!!! :)",
    "@media_team loved the new t-shirt design <3",
    "RT @nobody: breaking... news at http://example.org/story",
    "Mondays are the WORST :( #mondays",
]

# each stage (lowercase, URL/mention/emoticon/hashtag rewriting, word
# cleanup) is applied in a fixed order inside normalize_tweet
for raw in raw_tweets:
    print(f"raw:        {raw}")
    print(f"normalized: {' '.join(normalize_tweet(raw))}")
    print()

# word-level cleanup on its own: hyphens and apostrophes are deleted,
# edge punctuation stripped, letter runs capped at two
for word in ["sooooo", "t-shirt", "don't", "r.i.p.", "!!!"]:
    print(f"{word!r:12} -> {normalize_word(word)!r}")
print()

# the emoticon table is data, not code; swap in your own
kaomoji = EmoticonTable(
    positive_forms=frozenset({"^_^", "(^o^)"}),
    negative_forms=frozenset({";_;", "(>_<)"}),
)
print(normalize_tweet("passed the exam ^_^", emoticons=kaomoji))
print(normalize_tweet("missed the bus (>_<)", emoticons=kaomoji))

# the default table covers the usual ASCII smileys
print(sorted(DEFAULT_EMOTICONS.positive_forms))
