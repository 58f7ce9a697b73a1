"""Deterministic reports: every rational is a string, keys are sorted."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact.algebraic import AlgebraicNumber
from .exact.rational import fmt


def jsonable(x: Any) -> Any:
    """Convert library values into plain JSON data with exact strings."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return fmt(Fraction(x))
    if isinstance(x, AlgebraicNumber):
        return x.to_json()
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    raise TypeError(f"cannot serialise {type(x).__name__}")


@dataclass
class Report:
    op: str
    inputs: Any = field(default_factory=dict)
    result: Any = None
    witness: Any = None
    ok: bool = True
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.inputs = jsonable(self.inputs)
        self.result = jsonable(self.result)
        self.witness = jsonable(self.witness)
        self.notes = [str(n) for n in self.notes]

    def to_json(self) -> dict:
        out = {"op": self.op, "inputs": self.inputs, "result": self.result, "ok": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = self.notes
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Report":
        return cls(obj["op"], obj.get("inputs", {}), obj.get("result"), obj.get("witness"), obj.get("ok", True), obj.get("notes", []))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    @classmethod
    def loads(cls, text: str) -> "Report":
        return cls.from_json(json.loads(text))

    def text(self) -> str:
        lines = [f"{'PASS' if self.ok else 'FAIL'} {self.op}"]
        if self.inputs:
            lines.append(f"  inputs:  {_compact(self.inputs)}")
        if isinstance(self.result, list) and self.result and all(isinstance(r, dict) and "check" in r for r in self.result):
            for r in self.result:
                mark = "ok  " if r["ok"] else "FAIL"
                lines.append(f"  [{mark}] {r['check']}: {_compact(r['got'])}")
                if not r["ok"]:
                    lines.append(f"         expected {_compact(r['expected'])}")
        else:
            lines.append(f"  result:  {_compact(self.result)}")
        if self.witness is not None:
            lines.append(f"  witness: {_compact(self.witness)}")
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def _compact(x) -> str:
    if isinstance(x, list) and all(isinstance(v, str) for v in x):
        return "(" + ",".join(x) + ")"
    return json.dumps(x, sort_keys=True, separators=(", ", ": "))


def dumps_many(reports: list[Report]) -> str:
    return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2)
