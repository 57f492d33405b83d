"""End-to-end pipeline: extract, filter, enrich, rank, deduce, adjust.

Mode components: "b" turns on intermediate-centric biterm enrichment,
"o" turns on outer-transitive path deduction and score adjustment, and
"i" additionally allows one inner-transitive link per path. Enrichment
similarities are taken from a pre-enrichment table built over documents
carrying only their own biterm terms; candidate generation and path
deduction use a table rebuilt after enrichment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .biterms import BitermSet, consensual_filter, extract_biterms
from .corpus.documents import build_document
from .corpus.types import Dataset, Document
from .enrich import (
    EnrichmentConfig,
    add_own_biterms,
    enrich_artifact,
    select_related_intermediates,
)
from .errors import ConfigError
from .evaluate import parse_mode
from .irmodels import MODELS, SimilarityTable, build_similarity_table, rank_candidates
from .transitive import TransitivePath, adjust_scores, form_paths


@dataclass(frozen=True)
class PipelineConfig:
    model: str = "vsm"
    mode: str = "b+o+i"
    m: float = 0.5
    t: int = 3
    lsi_rank: int | None = None
    pairs_dir: Path | None = None

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise ConfigError(f"unknown IR model {self.model!r}; expected one of {MODELS}")
        parse_mode(self.mode)
        # Threshold validation is shared with EnrichmentConfig.
        EnrichmentConfig(m=self.m, t=self.t)

    def enrichment(self) -> EnrichmentConfig:
        return EnrichmentConfig(m=self.m, t=self.t)


@dataclass
class PipelineResult:
    documents: dict[str, Document]
    similarity: SimilarityTable
    candidates: dict[str, list[tuple[str, float]]]
    paths: dict[str, list[TransitivePath]] = field(default_factory=dict)
    filtered_biterms: dict[str, BitermSet] = field(default_factory=dict)


def run_pipeline(dataset: Dataset, config: PipelineConfig) -> PipelineResult:
    components = parse_mode(config.mode)
    use_biterms = "b" in components
    use_outer = "o" in components
    use_inner = "i" in components
    cfg = config.enrichment()

    artifacts = dataset.all_artifacts()
    documents = {a.id: build_document(a) for a in artifacts}
    filtered_by_id: dict[str, BitermSet] = {}

    if use_biterms:
        source_sets = [extract_biterms(a, config.pairs_dir) for a in dataset.sources]
        inter_sets = [extract_biterms(a, config.pairs_dir) for a in dataset.intermediates]
        target_sets = [extract_biterms(a, config.pairs_dir) for a in dataset.targets]
        f_sources, f_inters, f_targets = consensual_filter(source_sets, inter_sets, target_sets)
        filtered_by_id = {s.artifact_id: s for s in (*f_sources, *f_inters, *f_targets)}

        documents = {
            a_id: add_own_biterms(doc, filtered_by_id[a_id])
            for a_id, doc in documents.items()
        }

        if dataset.intermediates:
            pre_table = build_similarity_table(
                list(documents.values()), config.model, config.lsi_rank
            )
            intermediate_ids = dataset.intermediate_ids()
            enriched: dict[str, Document] = dict(documents)
            for artifact in (*dataset.sources, *dataset.targets):
                related_ids = select_related_intermediates(
                    artifact.id, intermediate_ids, pre_table, cfg
                )
                related_sets = [filtered_by_id[i] for i in related_ids]
                enriched[artifact.id] = enrich_artifact(documents[artifact.id], related_sets)
            documents = enriched

    table = build_similarity_table(list(documents.values()), config.model, config.lsi_rank)
    candidates = rank_candidates(table, dataset.source_ids(), dataset.target_ids())

    paths: dict[str, list[TransitivePath]] = {}
    if use_outer:
        for source in dataset.source_ids():
            paths[source] = form_paths(source, dataset, table, cfg, allow_inner=use_inner)
        candidates = adjust_scores(candidates, paths)

    return PipelineResult(
        documents=documents,
        similarity=table,
        candidates=candidates,
        paths=paths,
        filtered_biterms=filtered_by_id,
    )
