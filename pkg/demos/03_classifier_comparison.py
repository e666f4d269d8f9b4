"""
Three classifiers on one corpus
===============================

A lexicon-counting baseline, multinomial Naive Bayes, and a MaxEnt model
trained by both iterative-scaling algorithms, scored side by side.
"""

from pathlib import Path

from tweetiment import (
    FREQUENCY,
    PRESENCE,
    OpinionLexicon,
    TrainerConfig,
    baseline_classify,
    build_vocabulary,
    evaluate,
    format_report,
    maxent_predict,
    maxent_train,
    nb_predict,
    nb_train,
    normalize_tweet,
    parse_labeled_csv,
    vectorize,
)

HERE = Path(__file__).parent

with open(HERE / "sample_tweets.csv", encoding="utf-8", newline="") as stream:
    records = list(parse_labeled_csv(stream))
tweets = [normalize_tweet(r.text) for r in records]
gold = [r.sentiment for r in records]
vocab = build_vocabulary(tweets, n_unigrams=50, n_bigrams=50)

# baseline: count word hits against curated lists, ties go positive
lexicon = OpinionLexicon(
    positive_words=frozenset({"love", "great", "best", "happy", "good"}),
    negative_words=frozenset({"hate", "worst", "bad", "terrible", "awful", "sucks"}),
)
baseline_predictions = [baseline_classify(t, lexicon) for t in tweets]
print(format_report(evaluate(baseline_predictions, gold, model_name="baseline")))
print()

# Naive Bayes on frequency counts
nb_corpus = [(vectorize(t, vocab, FREQUENCY), y) for t, y in zip(tweets, gold)]
nb = nb_train(nb_corpus, len(vocab), alpha=1.0)
nb_predictions = [nb_predict(nb, doc)[0] for doc, _ in nb_corpus]
print(format_report(evaluate(nb_predictions, gold, model_name="naive bayes")))
print()

# MaxEnt on presence indicators, once per trainer
me_corpus = [(vectorize(t, vocab, PRESENCE), y) for t, y in zip(tweets, gold)]
for algorithm in ("gis", "iis"):
    config = TrainerConfig(algorithm=algorithm, max_iterations=200, ll_tolerance=1e-9)
    model = maxent_train(me_corpus, len(vocab), config)
    predictions = [maxent_predict(model, doc) for doc, _ in me_corpus]
    report = evaluate(predictions, gold, model_name=f"maxent/{algorithm}")
    print(format_report(report))
    history = model.ll_history
    print(f"  log-likelihood {history[0]:.4f} -> {history[-1]:.4f} in {len(history) - 1} updates")
    print()

# the learned models also score unseen text
for raw in ["what a great best day", "this is awful, I hate it"]:
    doc = vectorize(normalize_tweet(raw), vocab, FREQUENCY)
    label, _ = nb_predict(nb, doc)
    print(f"{raw!r} -> {label.name.lower()}")
