"""CSV ingestion and report-document round-tripping.

Reports are JSON trees written atomically (temp file, then rename). Floats
are emitted with Python's shortest round-trip repr so parsing a report
reproduces every value bit for bit; infinities travel as the string tokens
"inf" and "-inf" since JSON has no literal for them.
"""

from __future__ import annotations

import csv
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from ._version import __version__
from .bench import BenchCell, BenchReport
from .data import FeatureScores, LabelVector, Method, SelectionResult, validate_dataset
from .errors import EmptyMatrix, LabelColumnMissing, ParseError, RaggedRows
from .evaluation import EvalReport, SweepCell, SweepReport


def load_csv(path, has_header: bool = False, label_column: int | str | None = None):
    """Read a samples-by-features CSV, optionally splitting off a label column.

    Returns (dataset, labels); labels is None unless label_column names a
    column by 0-based index or by header name. Label tokens that all parse
    as numbers are canonicalized numerically (so "1" and "1.0" coincide),
    otherwise as strings. Blank lines are skipped.
    """
    path = Path(path)
    header: list[str] | None = None
    rows: list[list[str]] = []
    line_nums: list[int] = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        for row in reader:
            if not row:
                continue
            if has_header and header is None:
                header = [cell.strip() for cell in row]
                continue
            rows.append(row)
            line_nums.append(reader.line_num)
    if not rows:
        raise EmptyMatrix(f"no data rows in {path}")
    width = len(rows[0])
    for row, line_num in zip(rows, line_nums):
        if len(row) != width:
            raise RaggedRows(f"line {line_num} has {len(row)} fields, expected {width}")
    if header is not None and len(header) != width:
        raise RaggedRows(f"header has {len(header)} fields, data rows have {width}")

    label_idx = None
    if label_column is not None:
        label_idx = _resolve_label_column(label_column, header, width)
    feature_cols = [j for j in range(width) if j != label_idx]
    if not feature_cols:
        raise EmptyMatrix("no feature columns left after removing the label column")

    matrix = np.empty((len(rows), len(feature_cols)))
    for i, row in enumerate(rows):
        for jj, j in enumerate(feature_cols):
            token = row[j].strip()
            try:
                matrix[i, jj] = float(token)
            except ValueError:
                raise ParseError(i, j, token) from None

    names = [header[j] for j in feature_cols] if header is not None else None
    labels = None
    if label_idx is not None:
        labels = _canonical_labels([row[label_idx].strip() for row in rows])
    return validate_dataset(matrix, names), labels


def _resolve_label_column(label_column, header, width: int) -> int:
    if isinstance(label_column, bool):
        raise LabelColumnMissing(f"label column must be an index or name, got {label_column!r}")
    if isinstance(label_column, int):
        if not 0 <= label_column < width:
            raise LabelColumnMissing(f"label column index {label_column} out of range for {width} columns")
        return label_column
    name = str(label_column)
    if header is None:
        raise LabelColumnMissing(f"label column {name!r} needs a header row to resolve")
    if name not in header:
        raise LabelColumnMissing(f"no column named {name!r} in header")
    return header.index(name)


def _canonical_labels(tokens: list[str]) -> LabelVector:
    try:
        values = np.array([float(t) for t in tokens])
    except ValueError:
        values = np.array(tokens)
    return LabelVector.from_raw(values)


def write_matrix_csv(path, values, header=None) -> None:
    """Plain CSV dump of a matrix, floats at full round-trip precision."""
    lines = []
    if header is not None:
        lines.append(",".join(str(h) for h in header))
    for row in np.asarray(values):
        lines.append(",".join(repr(float(x)) for x in row))
    _atomic_write_text(Path(path), "\n".join(lines) + "\n")


def _atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent) if str(path.parent) else ".", prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass(eq=False)
class ReportDocument:
    """Envelope persisting one result payload with provenance fields."""

    payload: object
    invocation: dict
    tool_version: str = __version__
    timestamp: str = field(default_factory=_utc_now)

    @property
    def kind(self) -> str:
        return _kind_of(self.payload)

    def __eq__(self, other):
        if not isinstance(other, ReportDocument):
            return NotImplemented
        return (
            self.payload == other.payload
            and self.invocation == other.invocation
            and self.tool_version == other.tool_version
            and self.timestamp == other.timestamp
        )


def _kind_of(payload) -> str:
    if isinstance(payload, SelectionResult):
        return "selection"
    if isinstance(payload, EvalReport):
        return "evaluation"
    if isinstance(payload, SweepReport):
        return "sweep"
    if isinstance(payload, BenchReport):
        return "bench"
    raise TypeError(f"unsupported payload type {type(payload).__name__}")


def _float_out(x: float):
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        raise ValueError("reports never carry NaN")
    return x


def _float_in(v) -> float:
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    return float(v)


def _floats_out(arr) -> list:
    return [_float_out(x) for x in np.asarray(arr).tolist()]


def _floats_in(values) -> np.ndarray:
    return np.array([_float_in(v) for v in values], dtype=np.float64)


def _scores_to_dict(scores: FeatureScores) -> dict:
    return {
        "d": _floats_out(scores.d),
        "v": _floats_out(scores.v),
        "cs": _floats_out(scores.cs),
        "mu": _floats_out(scores.mu),
        "k_used": scores.k_used,
    }


def _scores_from_dict(obj: dict) -> FeatureScores:
    return FeatureScores(
        d=_floats_in(obj["d"]),
        v=_floats_in(obj["v"]),
        cs=_floats_in(obj["cs"]),
        mu=_floats_in(obj["mu"]),
        k_used=obj["k_used"],
    )


def _eval_to_dict(report: EvalReport) -> dict:
    return {
        "per_seed": [[s, _float_out(a), _float_out(m)] for s, a, m in report.per_seed],
        "mean_acc": _float_out(report.mean_acc),
        "mean_nmi": _float_out(report.mean_nmi),
        "n_features_used": report.n_features_used,
        "method": report.method.value,
    }


def _eval_from_dict(obj: dict) -> EvalReport:
    return EvalReport(
        per_seed=[(int(s), _float_in(a), _float_in(m)) for s, a, m in obj["per_seed"]],
        mean_acc=_float_in(obj["mean_acc"]),
        mean_nmi=_float_in(obj["mean_nmi"]),
        n_features_used=int(obj["n_features_used"]),
        method=Method(obj["method"]),
    )


def _payload_to_dict(payload) -> dict:
    kind = _kind_of(payload)
    if kind == "selection":
        body = {
            "selected": [int(i) for i in payload.selected],
            "d_requested": payload.d_requested,
            "method": payload.method.value,
            "scores": _scores_to_dict(payload.scores),
        }
    elif kind == "evaluation":
        body = _eval_to_dict(payload)
    elif kind == "sweep":
        body = {
            "method": payload.method.value,
            "d_values": list(payload.d_values),
            "k_values": list(payload.k_values),
            "cells": [{"d": c.d, "k": c.k, "report": _eval_to_dict(c.report)} for c in payload.cells],
        }
    else:
        body = {
            "repetitions": payload.repetitions,
            "grid": [
                {
                    "n": c.n,
                    "m": c.m,
                    "k": c.k,
                    "naive_seconds": _float_out(c.naive_seconds),
                    "optimized_seconds": _float_out(c.optimized_seconds),
                    "speedup": _float_out(c.speedup),
                    "agreement": c.agreement,
                }
                for c in payload.grid
            ],
        }
    return {"kind": kind, "body": body}


def _payload_from_dict(obj: dict):
    kind = obj["kind"]
    body = obj["body"]
    if kind == "selection":
        return SelectionResult(
            selected=np.array(body["selected"], dtype=np.int64),
            scores=_scores_from_dict(body["scores"]),
            method=Method(body["method"]),
            d_requested=int(body["d_requested"]),
        )
    if kind == "evaluation":
        return _eval_from_dict(body)
    if kind == "sweep":
        return SweepReport(
            method=Method(body["method"]),
            d_values=[int(d) for d in body["d_values"]],
            k_values=[int(k) for k in body["k_values"]],
            cells=[SweepCell(d=int(c["d"]), k=int(c["k"]), report=_eval_from_dict(c["report"])) for c in body["cells"]],
        )
    if kind == "bench":
        return BenchReport(
            grid=[
                BenchCell(
                    n=int(c["n"]),
                    m=int(c["m"]),
                    k=int(c["k"]),
                    naive_seconds=_float_in(c["naive_seconds"]),
                    optimized_seconds=_float_in(c["optimized_seconds"]),
                    speedup=_float_in(c["speedup"]),
                    agreement=bool(c["agreement"]),
                )
                for c in body["grid"]
            ],
            repetitions=int(body["repetitions"]),
        )
    raise ValueError(f"unknown report kind {kind!r}")


def serialize_report(doc: ReportDocument) -> str:
    """Deterministic JSON text for a report document."""
    tree = {
        "tool_version": doc.tool_version,
        "timestamp": doc.timestamp,
        "invocation": doc.invocation,
        "payload": _payload_to_dict(doc.payload),
    }
    return json.dumps(tree, indent=2, sort_keys=True, allow_nan=False) + "\n"


def parse_report(text: str) -> ReportDocument:
    tree = json.loads(text)
    return ReportDocument(
        payload=_payload_from_dict(tree["payload"]),
        invocation=tree["invocation"],
        tool_version=tree["tool_version"],
        timestamp=tree["timestamp"],
    )


def write_report(doc: ReportDocument, path) -> None:
    """Serialize and atomically persist a report document."""
    _atomic_write_text(Path(path), serialize_report(doc))


def read_report(path) -> ReportDocument:
    return parse_report(Path(path).read_text(encoding="utf-8"))
