"""tf-idf indexing and pairwise similarity under VSM, LSI and JS.

The term-document matrix uses raw term counts (including enrichment weights)
times ln(N/df). LSI takes a deterministic dense SVD of that matrix and
compares documents in the scaled topic space; JS compares smoothed term
distributions with base-2 Jensen-Shannon divergence. All stored similarities
are clamped into [0, 1] and symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corpus.types import Document
from .errors import ConfigError, NumericError, ValidationError

MODELS = ("vsm", "lsi", "js")

_JS_EPSILON = 1e-9


@dataclass
class TermDocMatrix:
    """tf-idf weighted document vectors over a shared vocabulary."""

    vocabulary: list[str]
    doc_ids: list[str]
    weights: np.ndarray  # shape (n_docs, n_terms)
    _index: dict[str, int] = field(default_factory=dict, repr=False)

    def row(self, doc_id: str) -> np.ndarray:
        try:
            return self.weights[self._index[doc_id]]
        except KeyError:
            raise ValidationError(f"unknown document id {doc_id!r}") from None


def build_matrix(documents: list[Document]) -> TermDocMatrix:
    """Index documents into a tf-idf matrix; idf = ln(N/df), tf = raw count."""
    if not documents:
        raise ValidationError("cannot build a matrix from zero documents")
    ids = [d.artifact_id for d in documents]
    if len(set(ids)) != len(ids):
        raise ValidationError("duplicate document ids in matrix input")

    vocabulary = sorted({t for d in documents for t in d.weighted_terms()})
    if not vocabulary:
        raise ValidationError("empty vocabulary: all documents are empty")
    term_index = {t: i for i, t in enumerate(vocabulary)}

    n_docs = len(documents)
    tf = np.zeros((n_docs, len(vocabulary)))
    for row, doc in enumerate(documents):
        for term, count in doc.weighted_terms().items():
            tf[row, term_index[term]] = count
    df = np.count_nonzero(tf > 0, axis=0)
    idf = np.log(n_docs / np.maximum(df, 1))
    weights = tf * idf

    matrix = TermDocMatrix(vocabulary=vocabulary, doc_ids=ids, weights=weights)
    matrix._index = {doc_id: i for i, doc_id in enumerate(ids)}
    return matrix


def _cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def similarity_vsm(matrix: TermDocMatrix, a: str, b: str) -> float:
    """Cosine of the two tf-idf vectors; 0 when either vector is all-zero."""
    return _cosine(matrix.row(a), matrix.row(b))


def default_lsi_rank(n_docs: int) -> int:
    return max(2, int(0.3 * n_docs))


def lsi_document_space(matrix: TermDocMatrix, k: int) -> np.ndarray:
    """Rows of V_k scaled by the top-k singular values (documents in topic space)."""
    max_rank = min(len(matrix.vocabulary), len(matrix.doc_ids))
    if not 1 <= k <= max_rank:
        raise ConfigError(f"LSI rank {k} outside [1, {max_rank}]")
    try:
        # weights is docs x terms; SVD of the term-document matrix A = weights.T
        # gives A = U S Vt with document coordinates in Vt.T.
        _, singular, vt = np.linalg.svd(matrix.weights.T, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD failed to converge: {exc}") from exc
    return vt.T[:, :k] * singular[:k]


def similarity_lsi(matrix: TermDocMatrix, k: int, a: str, b: str) -> float:
    """Cosine between two documents' rank-k topic coordinates."""
    space = lsi_document_space(matrix, k)
    index = {doc_id: i for i, doc_id in enumerate(matrix.doc_ids)}
    for doc_id in (a, b):
        if doc_id not in index:
            raise ValidationError(f"unknown document id {doc_id!r}")
    return _cosine(space[index[a]], space[index[b]])


def _distribution(doc: Document, vocabulary: list[str]) -> np.ndarray:
    counts = doc.weighted_terms()
    vec = np.array([counts.get(t, 0.0) for t in vocabulary], dtype=float)
    vec += _JS_EPSILON
    return vec / vec.sum()


def similarity_js(doc_a: Document, doc_b: Document) -> float:
    """1 minus the base-2 Jensen-Shannon divergence of the term distributions."""
    vocabulary = sorted(set(doc_a.weighted_terms()) | set(doc_b.weighted_terms()))
    if not vocabulary:
        return 0.0
    p = _distribution(doc_a, vocabulary)
    q = _distribution(doc_b, vocabulary)
    m = (p + q) / 2.0
    jsd = 0.5 * _kl_base2(p, m) + 0.5 * _kl_base2(q, m)
    return 1.0 - float(jsd)


def _kl_base2(p: np.ndarray, q: np.ndarray) -> float:
    mask = p > 0
    return float(np.sum(p[mask] * np.log2(p[mask] / q[mask])))


class SimilarityTable:
    """Symmetric pairwise similarities in [0, 1] under one model."""

    def __init__(self, model: str):
        if model not in MODELS:
            raise ConfigError(f"unknown IR model {model!r}; expected one of {MODELS}")
        self.model = model
        self._scores: dict[tuple[str, str], float] = {}

    @staticmethod
    def _key(a: str, b: str) -> tuple[str, str]:
        return (a, b) if a <= b else (b, a)

    def put(self, a: str, b: str, score: float) -> None:
        self._scores[self._key(a, b)] = min(1.0, max(0.0, score))

    def score(self, a: str, b: str) -> float:
        key = self._key(a, b)
        if key not in self._scores:
            raise ValidationError(f"no similarity stored for pair ({a!r}, {b!r})")
        return self._scores[key]

    def pairs(self) -> dict[tuple[str, str], float]:
        return dict(self._scores)


def build_similarity_table(
    documents: list[Document],
    model: str,
    lsi_rank: int | None = None,
) -> SimilarityTable:
    """Compute all pairwise similarities among `documents` under `model`.

    Documents that are entirely empty compare as 0 to everything. When every
    document is empty the table is all zeros (degenerate but well-defined).
    """
    table = SimilarityTable(model)
    ids = [d.artifact_id for d in documents]

    if model == "js":
        by_id = {d.artifact_id: d for d in documents}
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                da, db = by_id[a], by_id[b]
                if da.total_mass() == 0 or db.total_mass() == 0:
                    table.put(a, b, 0.0)
                else:
                    table.put(a, b, similarity_js(da, db))
        return table

    if all(d.total_mass() == 0 for d in documents):
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                table.put(a, b, 0.0)
        return table

    matrix = build_matrix(documents)
    if model == "vsm":
        vectors = {doc_id: matrix.row(doc_id) for doc_id in matrix.doc_ids}
    else:
        k = lsi_rank if lsi_rank is not None else default_lsi_rank(len(documents))
        k = max(1, min(k, min(len(matrix.vocabulary), len(matrix.doc_ids))))
        space = lsi_document_space(matrix, k)
        vectors = {doc_id: space[i] for i, doc_id in enumerate(matrix.doc_ids)}

    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            table.put(a, b, _cosine(vectors[a], vectors[b]))
    return table


def rank_candidates(
    table: SimilarityTable,
    source_ids: list[str],
    target_ids: list[str],
) -> dict[str, list[tuple[str, float]]]:
    """Per-source target ranking, descending score with ascending-id tie-break."""
    ranked: dict[str, list[tuple[str, float]]] = {}
    for source in source_ids:
        scored = [(target, table.score(source, target)) for target in target_ids]
        scored.sort(key=lambda item: (-item[1], item[0]))
        ranked[source] = scored
    return ranked


def format_ranked_csv(ranked: dict[str, list[tuple[str, float]]]) -> str:
    """CSV export: source_id,target_id,score sorted by (source, -score, target)."""
    lines = ["source_id,target_id,score"]
    for source in sorted(ranked):
        for target, score in ranked[source]:
            lines.append(f"{source},{target},{score:.6f}")
    return "\n".join(lines) + "\n"


def parse_ranked_csv(text: str) -> dict[str, list[tuple[str, float]]]:
    """Inverse of format_ranked_csv; raises ParseError with the line number."""
    from .errors import ParseError

    lines = text.splitlines()
    if not lines or lines[0].strip() != "source_id,target_id,score":
        raise ParseError("line 1: expected header 'source_id,target_id,score'")
    ranked: dict[str, list[tuple[str, float]]] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected 3 comma-separated fields, got {len(fields)}")
        source, target, score_text = fields
        try:
            score = float(score_text)
        except ValueError:
            raise ParseError(f"line {lineno}: bad score {score_text!r}") from None
        ranked.setdefault(source, []).append((target, score))
    return ranked


def global_ranked_links(
    ranked: dict[str, list[tuple[str, float]]],
) -> list[tuple[str, str, float]]:
    """Flatten per-source lists into one global list sorted by score then ids."""
    links = [(s, t, score) for s, targets in ranked.items() for t, score in targets]
    links.sort(key=lambda item: (-item[2], item[0], item[1]))
    return links
