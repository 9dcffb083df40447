"""Reading and writing distribution files for the command line.

Two single-variable forms are accepted: a JSON object with "labels" and
"probs" arrays, or CSV lines "label,prob". A joint pmf is the JSON object
{"rows": [...], "cols": [...], "matrix": [[...]]}. Extra JSON keys (such
as the "counts" emitted by frequency estimation) are ignored. Parse
failures name the offending line or field.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .dist import Distribution, JointDistribution, make_distribution


def _json_number_list(obj: dict, key: str) -> list[float]:
    value = obj.get(key)
    if not isinstance(value, list):
        raise ValueError(f"field {key!r}: expected an array")
    out = []
    for i, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ValueError(f"field {key!r}[{i}]: expected a number, got {x!r}")
        out.append(float(x))
    return out


def _json_label_list(obj: dict, key: str) -> list[str]:
    value = obj.get(key)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ValueError(f"field {key!r}: expected an array of strings")
    return list(value)


def _parse_json(obj: object) -> Distribution | JointDistribution:
    if not isinstance(obj, dict):
        raise ValueError("top level: expected a JSON object")
    if "matrix" in obj:
        for key in ("rows", "cols", "matrix"):
            if key not in obj:
                raise ValueError(f"field {key!r}: missing from joint form")
        rows = _json_label_list(obj, "rows")
        cols = _json_label_list(obj, "cols")
        matrix = obj["matrix"]
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise ValueError("field 'matrix': expected an array of arrays")
        try:
            return JointDistribution(tuple(rows), tuple(cols), np.array(matrix, dtype=float))
        except ValueError as e:
            raise ValueError(f"field 'matrix': {e}") from None
    if "labels" not in obj or "probs" not in obj:
        raise ValueError("expected fields 'labels' and 'probs' (or a joint 'matrix' form)")
    labels = _json_label_list(obj, "labels")
    probs = _json_number_list(obj, "probs")
    if len(labels) != len(probs):
        raise ValueError(
            f"field 'probs': {len(probs)} entries for {len(labels)} labels"
        )
    return make_distribution(labels, probs)


def _parse_csv(text: str) -> Distribution:
    labels: list[str] = []
    probs: list[float] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise ValueError(
                f"line {lineno}: expected 'label,prob', got {raw!r}"
            )
        label, prob = fields[0].strip(), fields[1].strip()
        try:
            value = float(prob)
        except ValueError:
            raise ValueError(f"line {lineno}: {prob!r} is not a number") from None
        labels.append(label)
        probs.append(value)
    if not labels:
        raise ValueError("no distribution records found")
    return make_distribution(labels, probs)


def parse_distribution_text(text: str) -> Distribution | JointDistribution:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"line {e.lineno}: invalid JSON: {e.msg}") from None
        return _parse_json(obj)
    return _parse_csv(text)


def load_distribution_file(path: str | Path) -> Distribution | JointDistribution:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ValueError(f"cannot read {path}: {e}") from None
    try:
        return parse_distribution_text(text)
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def distribution_to_json(
    dist: Distribution, counts: dict[str, int] | None = None
) -> str:
    doc: dict = {"labels": list(dist.labels), "probs": [float(p) for p in dist.probs]}
    if counts is not None:
        doc["counts"] = [int(counts[label]) for label in dist.labels]
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
