"""Identifier splitting behaviour, including the acronym rule."""

import re

import pytest
from hypothesis import given, strategies as st

from tracelink.corpus.identifiers import split_identifier


@pytest.mark.parametrize("identifier,expected", [
    ("AFInfoBox", ["af", "info", "box"]),
    ("assignRouteIcon", ["assign", "route", "icon"]),
    ("snake_case_id", ["snake", "case", "id"]),
    ("getAssignRouteResource", ["get", "assign", "route", "resource"]),
    ("AFEmergencyComponent", ["af", "emergency", "component"]),
    ("parseHTTPResponse", ["parse", "http", "response"]),
    ("XMLParser", ["xml", "parser"]),
    ("route66icon", ["route", "66", "icon"]),
    ("DD647", ["dd", "647"]),
    ("simple", ["simple"]),
    ("UAV", ["uav"]),
    ("__dunder__name__", ["dunder", "name"]),
    ("CONSTANT_VALUE", ["constant", "value"]),
])
def test_examples(identifier, expected):
    assert split_identifier(identifier) == expected


_IDENT = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,24}", fullmatch=True)


@given(_IDENT)
def test_round_trip_preserves_alnum_content(identifier):
    tokens = split_identifier(identifier)
    rebuilt = "".join(tokens)
    original = re.sub(r"[^a-z0-9]", "", identifier.lower())
    assert rebuilt == original


@given(_IDENT)
def test_tokens_lowercase_nonempty(identifier):
    for token in split_identifier(identifier):
        assert token
        assert token == token.lower()
