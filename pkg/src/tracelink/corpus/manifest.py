"""Dataset manifest loading.

A manifest is a single JSON document:

    {
      "sources":       [{"id": "...", "path": "relative/file.txt", "kind": "nl"}, ...],
      "intermediates": [...],
      "targets":       [...],
      "oracle_st":     [["source_id", "target_id"], ...],
      "oracle_si":     [...],          // optional
      "oracle_it":     [...]           // optional
    }

Artifact bodies are plain-text files; paths are resolved relative to the
manifest location. `kind` is "nl" or "code"; the code language is inferred
from the file suffix (.c/.h -> C, anything else -> Java).
"""

from __future__ import annotations

import json
from pathlib import Path

from ..errors import LoadError, ValidationError
from .codescan import scan_code
from .nltext import tokenize_natural
from .types import Artifact, Dataset, Kind, Level

_LEVEL_KEYS = (
    ("sources", Level.SOURCE),
    ("intermediates", Level.INTERMEDIATE),
    ("targets", Level.TARGET),
)


def load_dataset(manifest_path: str | Path) -> Dataset:
    manifest_path = Path(manifest_path)
    try:
        text = manifest_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read manifest {manifest_path}: {exc}") from exc
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(f"manifest {manifest_path} is not valid JSON: {exc}") from exc

    base = manifest_path.parent
    levels: dict[Level, list[Artifact]] = {lvl: [] for _, lvl in _LEVEL_KEYS}
    for key, level in _LEVEL_KEYS:
        for entry in spec.get(key, []):
            levels[level].append(_load_artifact(entry, level, base))

    dataset = Dataset(
        sources=levels[Level.SOURCE],
        intermediates=levels[Level.INTERMEDIATE],
        targets=levels[Level.TARGET],
        oracle_st=_load_oracle(spec, "oracle_st"),
        oracle_si=_load_oracle(spec, "oracle_si"),
        oracle_it=_load_oracle(spec, "oracle_it"),
    )
    dataset.validate()
    return dataset


def _load_artifact(entry: dict, level: Level, base: Path) -> Artifact:
    for required in ("id", "path", "kind"):
        if required not in entry:
            raise ValidationError(f"artifact entry missing {required!r}: {entry}")
    path = base / entry["path"]
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read artifact file {path}: {exc}") from exc

    kind_name = str(entry["kind"]).lower()
    if kind_name in ("nl", "natural", "naturallanguage", "text"):
        return Artifact(
            id=entry["id"], level=level, kind=Kind.NATURAL_LANGUAGE,
            raw=raw, sentences=tokenize_natural(raw),
        )
    if kind_name == "code":
        language = "c" if path.suffix.lower() in (".c", ".h") else "java"
        return Artifact(
            id=entry["id"], level=level, kind=Kind.CODE,
            raw=raw, code_parts=scan_code(raw, language),
        )
    raise ValidationError(f"unknown artifact kind {entry['kind']!r} for {entry['id']!r}")


def _load_oracle(spec: dict, key: str) -> set[tuple[str, str]]:
    pairs = set()
    for item in spec.get(key, []):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValidationError(f"{key} entries must be [left, right] pairs, got {item!r}")
        pairs.add((str(item[0]), str(item[1])))
    return pairs
