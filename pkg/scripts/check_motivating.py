#!/usr/bin/env python3
"""Diagnostic runner for the bundled motivating-example dataset.

Prints every intermediate quantity the golden acceptance test depends on,
plus PASS/FAIL lines for each constraint. Used while tuning the fixture
texts; not part of the test suite.
"""

import sys
from pathlib import Path

from tracelink.biterms import extract_biterms, consensual_filter
from tracelink.corpus.manifest import load_dataset
from tracelink.pipeline import PipelineConfig, run_pipeline

DATA = Path(__file__).resolve().parent.parent / "tests" / "data" / "motivating"


def main() -> int:
    dataset = load_dataset(DATA / "manifest.json")

    source_sets = [extract_biterms(a) for a in dataset.sources]
    inter_sets = [extract_biterms(a) for a in dataset.intermediates]
    target_sets = [extract_biterms(a) for a in dataset.targets]
    print("== raw biterm sets ==")
    for s in (*source_sets, *inter_sets, *target_sets):
        print(f"  {s.artifact_id}: {sorted(s.biterms.items())}")
    fs, fi, ft = consensual_filter(source_sets, inter_sets, target_sets)
    print("== filtered biterm sets ==")
    for s in (*fs, *fi, *ft):
        print(f"  {s.artifact_id}: {sorted(s.biterms.items())}")

    checks = []

    afib = next(s for s in ft if s.artifact_id == "AFInfoBox")
    checks.append(("AFInfoBox filtered == {(assign, rout)}",
                   afib.pairs() == {("assign", "rout")}))

    ir_only = run_pipeline(dataset, PipelineConfig(model="vsm", mode="ir-only"))
    full = run_pipeline(dataset, PipelineConfig(model="vsm", mode="b+o+i"))

    print("== enriched documents (b+o+i) ==")
    for doc_id in sorted(full.documents):
        doc = full.documents[doc_id]
        print(f"  {doc_id}: terms={dict(sorted(doc.terms.items()))}")
        print(f"      added={dict(sorted(doc.added_biterm_terms.items()))}")

    print("== post-enrichment similarities ==")
    for (a, b), score in sorted(full.similarity.pairs().items()):
        if score > 0:
            print(f"  {a} ~ {b}: {score:.4f}")

    print("== paths (b+o+i) ==")
    for source in sorted(full.paths):
        for p in full.paths[source]:
            print(f"  {' > '.join(p.nodes)}  bonus={p.bonus:.4f}")

    print("== rankings for RE-691 ==")
    print(f"  ir-only: {ir_only.candidates['RE-691']}")
    print(f"  b+o+i  : {full.candidates['RE-691']}")

    path_keys = {p.key() for p in full.paths.get("RE-691", [])}
    checks.append(("path RE-691 > DD-694 > AFEmergencyComponent",
                   ("RE-691", "DD-694", "AFEmergencyComponent") in path_keys))
    checks.append(("path RE-691 > DD-694 > DD-647 > AFInfoBox",
                   ("RE-691", "DD-694", "DD-647", "AFInfoBox") in path_keys))

    def rank_of(candidates, target):
        return [t for t, _ in candidates].index(target) + 1

    rank_ir = rank_of(ir_only.candidates["RE-691"], "AFInfoBox")
    rank_full = rank_of(full.candidates["RE-691"], "AFInfoBox")
    print(f"  AFInfoBox rank: ir-only={rank_ir}, b+o+i={rank_full}")
    checks.append(("AFInfoBox strictly higher in b+o+i", rank_full < rank_ir))

    print("== checks ==")
    ok = True
    for label, passed in checks:
        print(f"  {'PASS' if passed else 'FAIL'}: {label}")
        ok = ok and passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
