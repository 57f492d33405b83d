"""Token normalization: stopwords, special tokens, stemming."""

from collections import Counter

from tracelink.corpus.preprocess import normalize_token, preprocess


def test_assigned_routes():
    assert preprocess(["Assigned", "Routes"]) == Counter({"assign": 1, "rout": 1})


def test_all_stopwords_vanish():
    assert preprocess(["the", "of", "and"]) == Counter()


def test_available_list_survives():
    assert preprocess(["available", "list"]) == Counter({"avail": 1, "list": 1})


def test_special_tokens_removed():
    assert preprocess(["--", "...", "(", "route"]) == Counter({"rout": 1})


def test_empty_input():
    assert preprocess([]) == Counter()


def test_multiplicity_preserved():
    assert preprocess(["route", "routes", "ROUTE"]) == Counter({"rout": 3})


def test_digits_kept():
    assert preprocess(["647"]) == Counter({"647": 1})


def test_single_letters_are_stopwords():
    assert normalize_token("x") is None
    assert normalize_token("af") == "af"


def test_case_insensitive_stopwords():
    assert normalize_token("The") is None
    assert normalize_token("AND") is None


def test_idempotent_on_corpus_stems():
    # Stability check over a realistic vocabulary: re-normalizing the stems
    # of these corpus words changes nothing.
    words = [
        "users", "apply", "standard", "flight", "operations", "selected",
        "uav", "list", "routes", "available", "assign", "emergency", "halt",
        "aircraft", "fleet", "alarm", "button", "icon", "information",
        "battery", "status", "component", "resource", "pilot",
    ]
    once = preprocess(words)
    again = preprocess(list(once.elements()))
    assert once == again
