"""Tests for the tweet normalization pipeline."""

import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tweetiment.errors import DataError
from tweetiment.normalize import (
    DEFAULT_EMOTICONS,
    SPECIAL_TOKENS,
    EmoticonTable,
    is_valid_word,
    load_emoticon_table,
    normalize_tweet,
    normalize_word,
    remove_retweet_markers,
    replace_emoticons,
    replace_hashtags,
    replace_urls,
    replace_user_mentions,
)
from sample_data import GOLDEN_TWEETS, WORD_CASES

URL_SHAPE = re.compile(r"(www\.\S+)|(https?://\S+)")
MENTION_SHAPE = re.compile(r"@\S+")
HASHTAG_SHAPE = re.compile(r"#\S+")
TRIPLE_LETTER = re.compile(r"([a-zA-Z])\1\1")


class TestReplaceUrls:
    def test_http_link(self):
        assert replace_urls("go to http://a.co now") == "go to URL now"

    def test_bare_www(self):
        assert replace_urls("www.example.com/x?y=1") == "URL"

    def test_https(self):
        assert replace_urls("see https://b.org/path") == "see URL"

    def test_no_links(self):
        assert replace_urls("no links here") == "no links here"


class TestReplaceUserMentions:
    def test_simple(self):
        assert replace_user_mentions("@bob hi") == "USER_MENTION hi"

    def test_mid_word_at_survives(self):
        assert replace_user_mentions("a@b") == "a@b"

    def test_two_mentions(self):
        assert replace_user_mentions("@x @y") == "USER_MENTION USER_MENTION"

    def test_start_of_string(self):
        assert replace_user_mentions("@only") == "USER_MENTION"


class TestReplaceEmoticons:
    def test_positive_padded(self):
        assert replace_emoticons("great :)") == "great  EMO_POS "

    def test_glued_detaches(self):
        assert replace_emoticons("oh no :(rip") == "oh no  EMO_NEG rip"

    def test_no_match(self):
        assert replace_emoticons("plain text") == "plain text"

    def test_both_polarities(self):
        out = replace_emoticons("up :) down :(")
        assert "EMO_POS" in out and "EMO_NEG" in out

    def test_longest_form_wins(self):
        # With one form a prefix of another, the longer must match first.
        table = EmoticonTable(
            positive_forms=frozenset({":)"}),
            negative_forms=frozenset({":))"}),
        )
        assert replace_emoticons(":))", table) == " EMO_NEG "


class TestEmoticonTable:
    def test_overlap_rejected(self):
        with pytest.raises(DataError):
            EmoticonTable(
                positive_forms=frozenset({":)", ":x"}),
                negative_forms=frozenset({":(", ":x"}),
            )

    def test_empty_side_rejected(self):
        with pytest.raises(DataError):
            EmoticonTable(positive_forms=frozenset(), negative_forms=frozenset({":("}))

    def test_load_from_files(self, tmp_path):
        pos = tmp_path / "pos.txt"
        neg = tmp_path / "neg.txt"
        pos.write_text("# smiles\n:)\n:-)\n\n", encoding="utf-8")
        neg.write_text(":(\n", encoding="utf-8")
        table = load_emoticon_table(pos, neg)
        assert table.positive_forms == {":)", ":-)"}
        assert table.negative_forms == {":("}

    def test_load_conflict_rejected(self, tmp_path):
        pos = tmp_path / "pos.txt"
        neg = tmp_path / "neg.txt"
        pos.write_text(":)\n", encoding="utf-8")
        neg.write_text(":)\n", encoding="utf-8")
        with pytest.raises(DataError):
            load_emoticon_table(pos, neg)


class TestReplaceHashtags:
    def test_tag_with_trailing_word(self):
        assert replace_hashtags("#Windows updates") == "Windows updates"

    def test_bare_tag(self):
        assert replace_hashtags("#hello") == "hello"

    def test_no_tags(self):
        assert replace_hashtags("no tags") == "no tags"


class TestRemoveRetweetMarkers:
    def test_leading_marker(self):
        assert remove_retweet_markers("rt this is old") == " this is old"

    def test_inside_word_untouched(self):
        assert remove_retweet_markers("start here") == "start here"

    def test_repeated_marker(self):
        assert remove_retweet_markers("rt rt news") == "  news"


class TestNormalizeWord:
    @pytest.mark.parametrize("word,expected", WORD_CASES)
    def test_cases(self, word, expected):
        assert normalize_word(word) == expected

    def test_hyphen_removed_before_compression(self):
        # Deleting the hyphen merges two letter runs; the merged run must
        # still compress.
        assert normalize_word("baaa-aaad") == "baad"

    def test_hyphen_removed_before_edge_strip(self):
        assert normalize_word("a.-") == "a"

    def test_digits_not_compressed(self):
        assert normalize_word("room777") == "room777"


class TestIsValidWord:
    def test_letters_digits_dot_underscore(self):
        assert is_valid_word("hello_2.0")

    def test_digit_initial(self):
        assert not is_valid_word("2fast")

    def test_empty(self):
        assert not is_valid_word("")

    def test_non_ascii(self):
        assert not is_valid_word("héllo")


class TestNormalizeTweet:
    @pytest.mark.parametrize("raw,expected", GOLDEN_TWEETS)
    def test_golden_pairs(self, raw, expected):
        assert normalize_tweet(raw) == expected

    def test_empty_input(self):
        assert normalize_tweet("") == []

    def test_whitespace_dots_quotes_only(self):
        assert normalize_tweet("  ...  \"\" '' .. ") == []

    def test_elongation_and_case(self):
        assert normalize_tweet("I am sooooo happpppy") == ["i", "am", "soo", "happy"]

    def test_retweet_marker_removed(self):
        assert normalize_tweet("RT @bob: breaking news") == [
            "USER_MENTION",
            "breaking",
            "news",
        ]

    def test_fragment_glued_to_marker_is_lowercased(self):
        # The URL rule matches mid-word, which can glue a leading fragment
        # onto the inserted marker; the result is an ordinary word.
        assert normalize_tweet("awww.x.com") == ["aurl"]

    def test_custom_emoticon_table(self):
        table = EmoticonTable(
            positive_forms=frozenset({"^^"}),
            negative_forms=frozenset({"qq"}),
        )
        assert normalize_tweet("nice ^^ but qq", table) == ["nice", "EMO_POS", "but", "EMO_NEG"]


def tweet_texts():
    atoms = st.sampled_from(
        [
            "hello", "WORLD", "sooooo", "t-shirt", "#tag", "@someone",
            "http://x.co/a", "www.b.com", ":)", ":(", "rt", "RT",
            "don't", "!!!", "a@b", "...", "r.i.p.", '"quoted"', "777",
        ]
    )
    chunk = st.one_of(atoms, st.text(max_size=8))
    return st.lists(chunk, max_size=12).map(" ".join)


class TestPipelineInvariants:
    @given(tweet_texts())
    def test_tokens_are_valid_or_special(self, raw):
        for token in normalize_tweet(raw):
            assert token in SPECIAL_TOKENS or is_valid_word(token)

    @given(tweet_texts())
    def test_non_special_tokens_lowercase(self, raw):
        for token in normalize_tweet(raw):
            if token not in SPECIAL_TOKENS:
                assert token == token.lower()

    @given(tweet_texts())
    def test_no_triple_letters(self, raw):
        for token in normalize_tweet(raw):
            assert TRIPLE_LETTER.search(token) is None

    @given(tweet_texts())
    def test_no_raw_url_mention_hashtag_shapes(self, raw):
        for token in normalize_tweet(raw):
            assert URL_SHAPE.search(token) is None
            assert MENTION_SHAPE.search(token) is None
            assert HASHTAG_SHAPE.search(token) is None

    @given(st.text(alphabet=" \t.\"'", max_size=30))
    def test_filler_only_input_yields_nothing(self, raw):
        assert normalize_tweet(raw) == []

    @given(st.text(max_size=60))
    def test_never_raises_and_no_whitespace_in_tokens(self, raw):
        for token in normalize_tweet(raw):
            assert token == token.strip()
            assert " " not in token
