"""
N-gram features and the vocabulary
==================================

Normalized tweets become sparse vectors over a frequency-ranked
vocabulary of top unigrams and bigrams.
"""

from pathlib import Path

from tweetiment import (
    FREQUENCY,
    PRESENCE,
    build_vocabulary,
    normalize_tweet,
    parse_labeled_csv,
    rank_frequency,
    vectorize,
)
from tweetiment.features import unigram_frequencies

HERE = Path(__file__).parent

with open(HERE / "sample_tweets.csv", encoding="utf-8", newline="") as stream:
    records = list(parse_labeled_csv(stream))
corpus = [normalize_tweet(r.text) for r in records]

print(f"{len(corpus)} tweets, e.g. {corpus[0]}")
print()

# rank-frequency: the head of the unigram distribution
print("rank  term          count")
for rank, term, count in rank_frequency(unigram_frequencies(corpus))[:8]:
    print(f"{rank:4d}  {term:12}  {count}")
print()

# the vocabulary indexes the top-N unigrams first, then the top bigrams;
# ties break alphabetically so the mapping never depends on input order
vocab = build_vocabulary(corpus, n_unigrams=10, n_bigrams=5)
print(f"vocabulary holds {len(vocab)} features")
for term, index in sorted(vocab.unigram_index.items(), key=lambda kv: kv[1]):
    print(f"  [{index}] {term}")
for pair, index in sorted(vocab.bigram_index.items(), key=lambda kv: kv[1]):
    print(f"  [{index}] {pair[0]} {pair[1]}")
print()

# one tweet, two feature modes
tweet = normalize_tweet("this game, this great great game!")
print("tokens:   ", tweet)
print("frequency:", vectorize(tweet, vocab, FREQUENCY).entries)
print("presence: ", vectorize(tweet, vocab, PRESENCE).entries)
