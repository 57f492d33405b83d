"""Build normalized documents from artifacts.

An NL artifact contributes every token of every sentence. A code artifact
contributes its comments plus the split tokens of class names, method names,
field types/names and parameter types/names; invoked method names are left
out of the document (they still matter for biterm importance counts).
"""

from __future__ import annotations

from .preprocess import preprocess
from .types import Artifact, Document, Kind

_DOCUMENT_PARTS = (
    "class_names",
    "method_names",
    "field_type_names",
    "field_names",
    "parameter_type_names",
    "parameter_names",
)


def build_document(artifact: Artifact) -> Document:
    tokens: list[str] = []
    if artifact.kind is Kind.NATURAL_LANGUAGE:
        for sentence in artifact.sentences:
            tokens.extend(tok for tok, _ in sentence)
    else:
        parts = artifact.code_parts
        assert parts is not None
        for name in _DOCUMENT_PARTS:
            for identifier_tokens in getattr(parts, name):
                tokens.extend(identifier_tokens)
        for comment_tokens in parts.comments:
            tokens.extend(comment_tokens)
    return Document(artifact_id=artifact.id, terms=preprocess(tokens))
