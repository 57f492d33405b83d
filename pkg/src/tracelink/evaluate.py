"""Retrieval metrics, statistical comparison, and the ablation matrix.

Precision/recall/F and AP work on the global ranked link list; MAP averages
per-query AP over queries that have at least one relevant target. The
Wilcoxon rank-sum test is exact (full enumeration via a subset-sum count)
for small samples and falls back to the tie-corrected normal approximation;
Cliff's delta uses the absolute-value form with the 0.15/0.33/0.47
category cutpoints.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .errors import ConfigError, EvaluationError

ABLATION_MODES = ("ir-only", "b", "o", "b+o", "o+i", "b+o+i")

# Exact Wilcoxon enumeration is used while C(n1+n2, n1) stays below this.
_EXACT_LIMIT = 500_000


@dataclass
class EvalReport:
    """Precision-recall curve, sampled F values, AP and MAP for one run."""

    pr_curve: list[tuple[float, float]]          # (recall%, precision%) per cutoff
    f_at_recall: list[float]                     # F sampled at recall levels 1..100
    ap: float
    map: float
    per_query_ap: dict[str, float]

    def to_payload(self) -> dict:
        return {
            "ap": round(self.ap, 6),
            "map": round(self.map, 6),
            "per_query_ap": {q: round(v, 6) for q, v in sorted(self.per_query_ap.items())},
            "pr_curve": [[round(r, 6), round(p, 6)] for r, p in self.pr_curve],
            "f_at_recall": [round(f, 6) for f in self.f_at_recall],
        }


@dataclass
class StatComparison:
    p_value: float
    delta: float
    category: str

    def to_payload(self) -> dict:
        return {
            "p_value": round(self.p_value, 9),
            "delta": round(self.delta, 6),
            "category": self.category,
        }


def precision_recall(
    ranked: list[tuple[str, str]],
    oracle: set[tuple[str, str]],
) -> list[tuple[float, float]]:
    """(recall%, precision%) at every cutoff k = 1..N of the ranked link list."""
    if not oracle:
        raise EvaluationError("precision/recall undefined for an empty oracle")
    curve: list[tuple[float, float]] = []
    hits = 0
    for k, link in enumerate(ranked, start=1):
        if link in oracle:
            hits += 1
        precision = 100.0 * hits / k
        recall = 100.0 * hits / len(oracle)
        curve.append((recall, precision))
    return curve


def f_measure(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; defined as 0 at P = R = 0."""
    if precision + recall == 0.0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def f_at_recall_levels(curve: list[tuple[float, float]]) -> list[float]:
    """F at integer recall levels 1..100, stepping on the pr curve.

    For each level the curve point at the smallest cutoff reaching that
    recall supplies both precision and recall; unreachable levels give 0.
    """
    values: list[float] = []
    for level in range(1, 101):
        point = next(((r, p) for r, p in curve if r >= level), None)
        values.append(0.0 if point is None else f_measure(point[1], point[0]))
    return values


def average_precision(
    ranked: list[tuple[str, str]],
    oracle: set[tuple[str, str]],
) -> float:
    """Mean of precision at relevant ranks over |oracle|, as a percentage."""
    if not oracle:
        raise EvaluationError("average precision undefined for an empty oracle")
    hits = 0
    total = 0.0
    for k, link in enumerate(ranked, start=1):
        if link in oracle:
            hits += 1
            total += hits / k
    return 100.0 * total / len(oracle)


def mean_average_precision(
    per_query: dict[str, list[tuple[str, str]]],
    oracle: set[tuple[str, str]],
) -> tuple[float, dict[str, float]]:
    """Mean per-query AP, skipping queries without relevant targets."""
    per_query_ap: dict[str, float] = {}
    for query, ranked in per_query.items():
        relevant = {pair for pair in oracle if pair[0] == query}
        if not relevant:
            continue
        per_query_ap[query] = average_precision(ranked, relevant)
    if not per_query_ap:
        raise EvaluationError("no query has any relevant target")
    return sum(per_query_ap.values()) / len(per_query_ap), per_query_ap


def _midranks(pooled: list[float]) -> list[float]:
    order = sorted(range(len(pooled)), key=lambda i: pooled[i])
    ranks = [0.0] * len(pooled)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def _exact_rank_sum_p(rank2: list[int], n1: int, w2_obs: int) -> float:
    """Two-sided exact p over all n1-subsets of the doubled midranks.

    Counts subsets whose doubled rank sum deviates from the mean at least
    as much as observed. Integer arithmetic throughout (midranks doubled),
    so no floating-point tolerance is needed.
    """
    n = len(rank2)
    total2 = sum(rank2)
    # mean of W2 over subsets = n1 * total2 / n; compare scaled by n to stay integral
    dev_obs = abs(w2_obs * n - n1 * total2)

    # counts[size][sum2] = number of subsets of that size and doubled-rank sum
    counts: list[dict[int, int]] = [dict() for _ in range(n1 + 1)]
    counts[0][0] = 1
    for r in rank2:
        for size in range(min(n1, len(counts) - 1), 0, -1):
            lower = counts[size - 1]
            if not lower:
                continue
            target = counts[size]
            for s, c in lower.items():
                target[s + r] = target.get(s + r, 0) + c
    total_subsets = math.comb(n, n1)
    extreme = sum(
        c for s, c in counts[n1].items() if abs(s * n - n1 * total2) >= dev_obs
    )
    return extreme / total_subsets


def wilcoxon_rank_sum(a: list[float], b: list[float]) -> float:
    """Two-sided rank-sum p-value with midrank ties.

    Exact enumeration when the subset count is small enough, otherwise the
    tie-corrected normal approximation (no continuity correction). Fully
    tied pooled samples give p = 1.
    """
    if not a or not b:
        raise EvaluationError("both samples must be nonempty")
    n1, n2 = len(a), len(b)
    n = n1 + n2
    pooled = [*a, *b]
    ranks = _midranks(pooled)
    w = sum(ranks[:n1])

    if len(set(pooled)) == 1:
        return 1.0

    if math.comb(n, n1) <= _EXACT_LIMIT:
        rank2 = [int(round(2 * r)) for r in ranks]
        return _exact_rank_sum_p(rank2, n1, int(round(2 * w)))

    mean = n1 * (n + 1) / 2.0
    tie_counts: dict[float, int] = {}
    for value in pooled:
        tie_counts[value] = tie_counts.get(value, 0) + 1
    tie_term = sum(t**3 - t for t in tie_counts.values())
    variance = (n1 * n2 / 12.0) * ((n + 1) - tie_term / (n * (n - 1)))
    if variance <= 0.0:
        return 1.0
    z = (w - mean) / math.sqrt(variance)
    return math.erfc(abs(z) / math.sqrt(2.0))


def cliffs_delta(a: list[float], b: list[float]) -> StatComparison:
    """Absolute Cliff's delta with the standard category cutpoints.

    Computed by sorting one sample and counting dominances with binary
    search, which matches the quadratic definition exactly.
    """
    if not a or not b:
        raise EvaluationError("both samples must be nonempty")
    sorted_b = sorted(b)
    n1, n2 = len(a), len(b)
    greater = 0
    less = 0
    for x in a:
        greater += bisect.bisect_left(sorted_b, x)          # b values < x
        less += n2 - bisect.bisect_right(sorted_b, x)       # b values > x
    delta = abs(greater - less) / (n1 * n2)
    return StatComparison(p_value=float("nan"), delta=delta, category=delta_category(delta))


def delta_category(delta: float) -> str:
    if delta < 0.15:
        return "negligible"
    if delta < 0.33:
        return "small"
    if delta < 0.47:
        return "medium"
    return "large"


def compare_runs(f_a: list[float], f_b: list[float]) -> StatComparison:
    """Wilcoxon p and Cliff's delta between two runs' F-at-recall samples."""
    p = wilcoxon_rank_sum(f_a, f_b)
    comparison = cliffs_delta(f_a, f_b)
    comparison.p_value = p
    return comparison


def evaluate_ranking(
    candidates: dict[str, list[tuple[str, float]]],
    oracle: set[tuple[str, str]],
) -> EvalReport:
    """Full report for one run: global list metrics plus per-query MAP."""
    from .irmodels import global_ranked_links

    if not oracle:
        raise EvaluationError("evaluation requires a nonempty oracle")
    global_links = [(s, t) for s, t, _ in global_ranked_links(candidates)]
    curve = precision_recall(global_links, oracle)
    ap = average_precision(global_links, oracle)
    per_query = {s: [(s, t) for t, _ in targets] for s, targets in candidates.items()}
    map_value, per_query_ap = mean_average_precision(per_query, oracle)
    return EvalReport(
        pr_curve=curve,
        f_at_recall=f_at_recall_levels(curve),
        ap=ap,
        map=map_value,
        per_query_ap=per_query_ap,
    )


def parse_mode(mode: str) -> frozenset[str]:
    """Map an ablation mode name to its toggled components."""
    if mode not in ABLATION_MODES:
        raise ConfigError(f"unknown ablation mode {mode!r}; expected one of {ABLATION_MODES}")
    return frozenset() if mode == "ir-only" else frozenset(mode.split("+"))


def run_ablation(
    dataset,
    model: str,
    modes: list[str],
    *,
    m: float = 0.5,
    t: int = 3,
    lsi_rank: int | None = None,
    pairs_dir=None,
) -> dict[str, EvalReport]:
    """Run the pipeline once per mode and evaluate against the S-T oracle."""
    from .pipeline import PipelineConfig, run_pipeline

    if not modes:
        raise ConfigError("ablation requires at least one mode")
    for mode in modes:
        parse_mode(mode)
    reports: dict[str, EvalReport] = {}
    for mode in modes:
        config = PipelineConfig(
            model=model, mode=mode, m=m, t=t, lsi_rank=lsi_rank, pairs_dir=pairs_dir,
        )
        result = run_pipeline(dataset, config)
        reports[mode] = evaluate_ranking(result.candidates, dataset.oracle_st)
    return reports
