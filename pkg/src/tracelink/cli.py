"""Command-line entry point.

Subcommands:
    trace   run the pipeline and write ranked candidate links + path traces
    eval    evaluate a run (or a ranked-links CSV) against the oracle
    ablate  run several ablation modes and write per-mode reports + a summary

Flag precedence: command line over JSON config file over built-in defaults.
Exit codes: 0 success, 1 runtime/numeric error, 2 configuration/validation
error. Outputs are byte-identical across repeat runs on identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus.manifest import load_dataset
from .errors import (
    ConfigError,
    EvaluationError,
    LoadError,
    NumericError,
    ParseError,
    TracelinkError,
    ValidationError,
)
from .evaluate import (
    ABLATION_MODES,
    EvalReport,
    compare_runs,
    evaluate_ranking,
    run_ablation,
)
from .irmodels import format_ranked_csv, parse_ranked_csv
from .pipeline import PipelineConfig, run_pipeline
from .transitive import paths_to_json_payload

_DEFAULTS = {
    "model": "vsm",
    "mode": "b+o+i",
    "m": 0.5,
    "t": 3,
    "lsi_rank": None,
    "pairs_dir": None,
    "out": "tracelink-out",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracelink",
        description="Recover ranked trace links between source and target artifacts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--manifest", required=True, help="dataset manifest JSON")
        p.add_argument("--config", default=None, help="JSON config file (flags override it)")
        p.add_argument("--model", choices=["vsm", "lsi", "js"], default=None)
        p.add_argument("--m", type=float, default=None, help="relative similarity threshold")
        p.add_argument("--t", type=int, default=None, help="max related artifacts / link cap")
        p.add_argument("--lsi-rank", type=int, default=None, dest="lsi_rank")
        p.add_argument("--pairs-dir", default=None, dest="pairs_dir",
                       help="directory of <artifact_id>.tsv dependency-pair files")
        p.add_argument("--out", default=None, help="output directory")

    trace = sub.add_parser("trace", help="write ranked links CSV and path traces JSON")
    add_common(trace)
    trace.add_argument("--mode", choices=list(ABLATION_MODES), default=None)
    trace.add_argument("--dump-corpus", action="store_true", dest="dump_corpus",
                       help="also write the enriched documents as JSON")

    evaluate = sub.add_parser("eval", help="write evaluation report and PR curve")
    add_common(evaluate)
    evaluate.add_argument("--mode", choices=list(ABLATION_MODES), default=None)
    evaluate.add_argument("--ranked", default=None,
                          help="evaluate this ranked-links CSV instead of running the pipeline")
    evaluate.add_argument("--compare", default=None,
                          help="second ranked-links CSV; adds a statistical comparison")

    ablate = sub.add_parser("ablate", help="run ablation modes and write a summary table")
    add_common(ablate)
    ablate.add_argument("--modes", default=None,
                        help="comma-separated subset of: " + ", ".join(ABLATION_MODES)
                             + " (default: all)")
    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    merged = dict(_DEFAULTS)
    if getattr(args, "config", None):
        try:
            file_values = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {args.config} is not valid JSON: {exc}") from exc
        unknown = set(file_values) - set(_DEFAULTS) - {"mode", "modes"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        merged.update(file_values)
    for key in ("model", "mode", "m", "t", "lsi_rank", "pairs_dir", "out"):
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    merged.setdefault("mode", _DEFAULTS["mode"])
    return merged


def _pipeline_config(merged: dict) -> PipelineConfig:
    pairs_dir = merged.get("pairs_dir")
    return PipelineConfig(
        model=merged["model"],
        mode=merged["mode"],
        m=float(merged["m"]),
        t=int(merged["t"]),
        lsi_rank=merged["lsi_rank"],
        pairs_dir=Path(pairs_dir) if pairs_dir else None,
    )


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="")


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _pr_curve_csv(report: EvalReport) -> str:
    lines = ["recall,precision"]
    lines.extend(f"{r:.6f},{p:.6f}" for r, p in report.pr_curve)
    return "\n".join(lines) + "\n"


def _cmd_trace(args: argparse.Namespace) -> int:
    merged = _merge_config(args)
    config = _pipeline_config(merged)
    dataset = load_dataset(args.manifest)
    result = run_pipeline(dataset, config)
    out = Path(merged["out"])
    _write(out / "ranked_links.csv", format_ranked_csv(result.candidates))
    _write(out / "path_traces.json", _json_text(paths_to_json_payload(result.paths)))
    if getattr(args, "dump_corpus", False):
        from .enrich import corpus_dump_payload

        _write(out / "enriched_corpus.json", _json_text(corpus_dump_payload(result.documents)))
    print(f"wrote {out / 'ranked_links.csv'} and {out / 'path_traces.json'}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    merged = _merge_config(args)
    dataset = load_dataset(args.manifest)
    if not dataset.oracle_st:
        raise ConfigError("manifest has no oracle_st; evaluation needs true links")

    if args.ranked:
        candidates = _read_ranked(args.ranked)
    else:
        result = run_pipeline(dataset, _pipeline_config(merged))
        candidates = result.candidates
    report = evaluate_ranking(candidates, dataset.oracle_st)

    out = Path(merged["out"])
    _write(out / "eval_report.json", _json_text(report.to_payload()))
    _write(out / "pr_curve.csv", _pr_curve_csv(report))
    written = [out / "eval_report.json", out / "pr_curve.csv"]

    if args.compare:
        other = evaluate_ranking(_read_ranked(args.compare), dataset.oracle_st)
        comparison = compare_runs(report.f_at_recall, other.f_at_recall)
        payload = {
            "comparison": comparison.to_payload(),
            "ap": round(report.ap, 6),
            "other_ap": round(other.ap, 6),
            "map": round(report.map, 6),
            "other_map": round(other.map, 6),
        }
        _write(out / "comparison.json", _json_text(payload))
        written.append(out / "comparison.json")
    print("wrote " + ", ".join(str(p) for p in written))
    return 0


def _read_ranked(path: str) -> dict[str, list[tuple[str, float]]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read ranked-links file {path}: {exc}") from exc
    return parse_ranked_csv(text)


def _cmd_ablate(args: argparse.Namespace) -> int:
    merged = _merge_config(args)
    modes_text = args.modes if args.modes is not None else merged.get(
        "modes", ",".join(ABLATION_MODES)
    )
    modes = [m.strip() for m in str(modes_text).split(",") if m.strip()]
    dataset = load_dataset(args.manifest)
    if not dataset.oracle_st:
        raise ConfigError("manifest has no oracle_st; ablation needs true links")
    pairs_dir = merged.get("pairs_dir")
    reports = run_ablation(
        dataset, merged["model"], modes,
        m=float(merged["m"]), t=int(merged["t"]), lsi_rank=merged["lsi_rank"],
        pairs_dir=Path(pairs_dir) if pairs_dir else None,
    )

    out = Path(merged["out"])
    written = []
    for mode, report in reports.items():
        safe = mode.replace("+", "_")
        _write(out / f"report_{safe}.json", _json_text(report.to_payload()))
        _write(out / f"pr_curve_{safe}.csv", _pr_curve_csv(report))
        written.append(out / f"report_{safe}.json")
    summary = ["mode,ap,map"]
    summary.extend(f"{mode},{reports[mode].ap:.6f},{reports[mode].map:.6f}" for mode in modes)
    _write(out / "ablation_summary.csv", "\n".join(summary) + "\n")
    written.append(out / "ablation_summary.csv")
    print("wrote " + ", ".join(str(p) for p in written))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"trace": _cmd_trace, "eval": _cmd_eval, "ablate": _cmd_ablate}
    try:
        return handlers[args.command](args)
    except (ConfigError, ValidationError, LoadError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericError, EvaluationError, TracelinkError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
