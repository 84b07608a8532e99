"""Tokenizer, vocabulary, and weighting behavior."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commentum.errors import EmptyVocabulary
from commentum.features import (
    Scheme,
    Vocabulary,
    build_vocab,
    build_vocab_from_pairs,
    pair_tokens,
    tokenize,
    vectorize,
    vectorize_tokens,
)
from test_dataset import make_pair


def test_tokenize_rules():
    assert tokenize("Init the ptr, fast!") == ["init", "the", "ptr", "fast"]
    assert tokenize("") == []
    assert tokenize("x+=i;//ok") == ["ok"]  # single chars dropped
    assert tokenize("snake_case stays one_token") == \
        ["snake_case", "stays", "one_token"]


@settings(max_examples=100, deadline=None)
@given(st.text(max_size=80))
def test_tokenize_is_pure_and_lowercase(text):
    tokens = tokenize(text)
    assert tokens == tokenize(text)
    for t in tokens:
        assert len(t) >= 2
        assert t == t.lower()


def test_build_vocab_min_df():
    vocab = build_vocab([["a", "b"], ["b", "c"]], min_df=2, max_terms=100)
    assert set(vocab.term_to_index) == {"b"}
    assert vocab.doc_freq == {"b": 2}


def test_build_vocab_max_terms_tie_break():
    vocab = build_vocab([["a", "b"], ["b", "c"]], min_df=1, max_terms=2)
    # b has df=2; the a-vs-c tie resolves to the lexically smaller term
    assert set(vocab.term_to_index) == {"a", "b"}
    assert vocab.term_to_index == {"a": 0, "b": 1}  # indices in term order


def test_build_vocab_empty():
    with pytest.raises(EmptyVocabulary):
        build_vocab([["a"], ["b"]], min_df=3)


def test_vectorize_count_scheme():
    vocab = build_vocab([["b", "b"], ["b"]], min_df=1)
    v = vectorize_tokens(["b", "b"], vocab, Scheme.COUNT)
    assert v.indices == (0,)
    assert v.values == (2.0,)


def test_vectorize_out_of_vocab_only():
    vocab = build_vocab([["ab", "cd"]], min_df=1)
    v = vectorize_tokens(["zz", "yy"], vocab)
    assert v.indices == () and v.values == () and v.norm == 0.0


def test_tfidf_hand_computed():
    # corpus ["a b", "b c"]; document "a b"
    vocab = build_vocab([["a", "b"], ["b", "c"]], min_df=1)
    assert vocab.idf("a") == pytest.approx(math.log(3 / 2) + 1, abs=1e-9)
    assert vocab.idf("b") == pytest.approx(1.0, abs=1e-12)
    v = vectorize_tokens(["a", "b"], vocab, Scheme.TFIDF)
    by_term = {vocab.terms[i]: val for i, val in zip(v.indices, v.values)}
    assert by_term["a"] == pytest.approx(0.814802, abs=1e-6)
    assert by_term["b"] == pytest.approx(0.579739, abs=1e-6)


def test_tfidf_norm_is_one_or_zero():
    vocab = build_vocab([["aa", "bb"], ["bb", "cc"], ["aa", "cc", "dd"]], min_df=1)
    docs = [["aa"], ["aa", "bb", "cc"], ["zz"], []]
    for tokens in docs:
        v = vectorize_tokens(tokens, vocab, Scheme.TFIDF)
        norm = math.sqrt(sum(x * x for x in v.values))
        assert norm == pytest.approx(v.norm, abs=1e-9)
        assert v.norm in (0.0, pytest.approx(1.0, abs=1e-9))


def test_vectorize_never_mutates_vocab():
    train = [make_pair(1, text="alpha beta"), make_pair(2, text="beta gamma")]
    vocab = build_vocab_from_pairs(train, min_df=1)
    before = (dict(vocab.doc_freq), vocab.n_docs)
    vectorize(make_pair(9, text="alpha alpha beta unseen"), vocab)
    assert (dict(vocab.doc_freq), vocab.n_docs) == before


def test_indices_strictly_increasing():
    vocab = build_vocab([["aa", "bb", "cc", "dd"]], min_df=1)
    v = vectorize_tokens(["dd", "aa", "cc", "aa"], vocab, Scheme.COUNT)
    assert list(v.indices) == sorted(set(v.indices))
    assert all(x > 0 for x in v.values)


def test_pair_tokens_include_context_separator():
    p = make_pair(1, text="increment counter", ctx="count += 1;")
    tokens = pair_tokens(p)
    assert "increment" in tokens and "count" in tokens
    assert "ctx" in tokens  # boundary marker survives as its word run


def test_vocab_save_load_digest_stable(tmp_path):
    train = [make_pair(1, text="alpha beta"), make_pair(2, text="beta gamma")]
    vocab = build_vocab_from_pairs(train, min_df=1)
    path = tmp_path / "vocab.json"
    vocab.save(path)
    loaded = Vocabulary.load(path)
    assert loaded == vocab
    assert loaded.digest() == vocab.digest()


def test_vectorize_deterministic():
    vocab = build_vocab([["aa", "bb"], ["bb"]], min_df=1)
    a = vectorize_tokens(["aa", "bb", "bb"], vocab)
    b = vectorize_tokens(["aa", "bb", "bb"], vocab)
    assert a == b
