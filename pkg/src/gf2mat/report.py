"""Machine-readable run reports.

Reports are deterministic: timing is kept out of the serialized body unless
asked for, JSON keys are sorted, and rationals are written as ``p/q``.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .gf2 import AffineFlat, PointSet, Subspace

SCHEMA_VERSION = 1


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


def to_jsonable(obj):
    """Plain JSON values for the library's result types."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": [int(b) for b in obj.basis]}
    if isinstance(obj, AffineFlat):
        return {"dim": obj.dim, "basis": [int(b) for b in obj.space.basis], "shift": int(obj.shift)}
    if isinstance(obj, PointSet):
        return [int(p) for p in obj.points()]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class RunReport:
    command: str
    inputs_digest: str
    results: dict
    version: str
    timing: dict = field(default_factory=dict)
    schema: int = SCHEMA_VERSION

    def body(self, include_timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "results": to_jsonable(self.results),
            "schema": self.schema,
            "version": self.version,
        }
        if include_timing:
            out["timing"] = {k: round(float(v), 6) for k, v in self.timing.items()}
        return out


def _text_lines(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        if not value:
            out.append(f"{prefix}: {{}}")
        for k in sorted(value):
            _text_lines(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        for i, v in enumerate(value):
            _text_lines(f"{prefix}[{i}]", v, out)
    elif isinstance(value, list) and not value:
        out.append(f"{prefix}: []")
    elif isinstance(value, list):
        out.append(f"{prefix}: " + " ".join("null" if v is None else str(v) for v in value))
    elif isinstance(value, bool):
        out.append(f"{prefix}: {'true' if value else 'false'}")
    elif value is None:
        out.append(f"{prefix}: null")
    else:
        out.append(f"{prefix}: {value}")


def emit_report(report: RunReport, fmt: str = "text", include_timing: bool = False) -> bytes:
    body = report.body(include_timing)
    if fmt == "json":
        return (json.dumps(body, sort_keys=True, indent=2) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines: list[str] = []
    _text_lines("", body, lines)
    return ("\n".join(lines) + "\n").encode("utf-8")
