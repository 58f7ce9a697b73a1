"""Space files and argument parsing.

A space file is JSON.  Finite-dimensional spaces look like::

    {"kind": "fd", "name": "K4", "dim": 3,
     "cone": {"generators": [["1","0","1"], ...]},
     "vectors": {"v1": ["1","0","1"]}}

and function spaces like::

    {"kind": "function", "name": "ex", "carrier": "PP2",
     "functions": {"g": {"domain": [...], "breakpoints": [...], "pieces": [...]}},
     "descriptors": {"B": {"zero_set": [["-1","0"]], "germ_zero": ["0"]}}}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .cone import PolyCone
from .exact.algebraic import AlgebraicNumber
from .exact.linalg import Subspace
from .exact.rational import Q, unit
from .fdspace import FDSpace, band_generated, build_space, dcomplement, extension_band, extension_ideal, ideal_generated, restrict
from .funcspace.carrier import Carrier, named_carrier
from .funcspace.descriptor import SubspaceDescriptor
from .funcspace.intervals import IntervalSet
from .funcspace.ppoly import PPoly


class SpecError(ValueError):
    """A malformed input, with the location of the problem."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


@dataclass
class SpaceSpec:
    kind: str
    name: str
    space: FDSpace | None = None
    carrier: Carrier | None = None
    vectors: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    descriptors: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict)


def _rat(x, where: str):
    try:
        return Q(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecError(f"not an exact rational: {x!r}", where) from exc


def _vec(xs, where: str, n: int | None = None) -> tuple:
    if not isinstance(xs, list):
        raise SpecError("expected a list of rationals", where)
    v = tuple(_rat(x, f"{where}[{k}]") for k, x in enumerate(xs))
    if n is not None and len(v) != n:
        raise SpecError(f"expected length {n}, got {len(v)}", where)
    return v


def parse_json_text(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, f"{source}: line {exc.lineno} column {exc.colno}") from exc


def parse_cone(obj: dict, where: str = "cone", n: int | None = None) -> PolyCone:
    if not isinstance(obj, dict):
        raise SpecError("expected an object", where)
    if "generators" in obj:
        gens = [_vec(g, f"{where}.generators[{k}]", n) for k, g in enumerate(obj["generators"])]
        if not gens and n is None:
            raise SpecError("empty generator list needs 'dim'", where)
        return PolyCone.from_generators(gens, n or len(gens[0]))
    if "inequalities" in obj:
        rows = [_vec(r, f"{where}.inequalities[{k}]", n) for k, r in enumerate(obj["inequalities"])]
        if not rows and n is None:
            raise SpecError("empty inequality list needs 'dim'", where)
        return PolyCone.from_inequalities(rows, n or len(rows[0]))
    raise SpecError("needs 'generators' or 'inequalities'", where)


def parse_carrier(obj, where: str = "carrier") -> Carrier:
    try:
        return Carrier.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(str(exc), where) from exc


def parse_function(obj, where: str = "function") -> PPoly:
    if not isinstance(obj, dict):
        raise SpecError("expected an object with domain, breakpoints, pieces", where)
    for key in ("domain", "breakpoints", "pieces"):
        if key not in obj:
            raise SpecError(f"missing field '{key}'", where)
    try:
        return PPoly.from_json(obj)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecError(str(exc), where) from exc


def parse_descriptor(obj, carrier: Carrier | None, where: str = "descriptor") -> SubspaceDescriptor:
    if not isinstance(obj, dict):
        raise SpecError("expected an object with zero_set and germ_zero", where)
    if "carrier" in obj:
        carrier = parse_carrier(obj["carrier"], f"{where}.carrier")
    if carrier is None:
        raise SpecError("no carrier given", where)
    try:
        Z = IntervalSet.from_json(obj.get("zero_set", []))
        flags = [AlgebraicNumber.from_json(p) for p in obj.get("germ_zero", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(str(exc), where) from exc
    return SubspaceDescriptor(Z, flags, carrier)


def load_space_obj(obj: dict, source: str = "<input>") -> SpaceSpec:
    if not isinstance(obj, dict):
        raise SpecError("top level must be an object", source)
    kind = obj.get("kind")
    name = str(obj.get("name", Path(source).stem))
    if kind == "fd":
        n = obj.get("dim")
        if "cone" not in obj:
            raise SpecError("missing field 'cone'", source)
        cone = parse_cone(obj["cone"], "cone", n)
        functionals = None
        if "functionals" in obj:
            functionals = [_vec(f, f"functionals[{k}]", cone.n) for k, f in enumerate(obj["functionals"])]
        space = build_space(cone, functionals)
        vectors = {k: _vec(v, f"vectors.{k}", cone.n) for k, v in obj.get("vectors", {}).items()}
        return SpaceSpec("fd", name, space=space, vectors=vectors, raw=obj)
    if kind == "function":
        carrier = parse_carrier(obj.get("carrier", "PP2"))
        if "domain" in obj and isinstance(obj.get("carrier", "PP2"), str):
            carrier = named_carrier(obj["carrier"], tuple(_vec(obj["domain"], "domain", 2)))
        functions = {k: parse_function(f, f"functions.{k}") for k, f in obj.get("functions", {}).items()}
        descriptors = {k: parse_descriptor(d, carrier, f"descriptors.{k}") for k, d in obj.get("descriptors", {}).items()}
        return SpaceSpec("function", name, carrier=carrier, functions=functions, descriptors=descriptors, raw=obj)
    raise SpecError("'kind' must be 'fd' or 'function'", f"{source}: kind")


def load_space(path: str | Path) -> SpaceSpec:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise SpecError(str(exc), str(p)) from exc
    return load_space_obj(parse_json_text(text, str(p)), str(p))


# ---------------------------------------------------------------------------
# arguments for fd operations


def parse_vector(spec: SpaceSpec, x, side: str = "X", where: str = "arg") -> tuple:
    """A vector given by name ("v2"), by cover unit ("e3"), as "1,0,1" or as a list."""
    space = spec.space
    n = space.n if side == "X" else space.m
    if isinstance(x, str):
        s = x.strip()
        if s in spec.vectors:
            v = spec.vectors[s]
            return v if side == "X" else space.embed(v)
        if side == "Y" and s.startswith("e") and s[1:].isdigit():
            j = int(s[1:])
            if not 1 <= j <= n:
                raise SpecError(f"unit vector index out of range 1..{n}", where)
            return unit(n, j - 1)
        if s.startswith("i(") and s.endswith(")") and side == "Y":
            return space.embed(parse_vector(spec, s[2:-1], "X", where))
        return _vec([t for t in s.strip("()").split(",")], where, n)
    return _vec(x, where, n)


def parse_vectors(spec: SpaceSpec, xs, side: str = "X", where: str = "arg") -> list[tuple]:
    """A list of vectors; a string is split on ";" or read as comma-separated names."""
    if isinstance(xs, str):
        if ";" in xs:
            xs = [t for t in xs.split(";") if t.strip()]
        else:
            parts = [t.strip() for t in xs.split(",") if t.strip()]
            named = all(t in spec.vectors or (t[0] == "e" and t[1:].isdigit()) for t in parts)
            xs = parts if named else [xs] if parts else []
    if not isinstance(xs, list):
        raise SpecError("expected a list of vectors", where)
    return [parse_vector(spec, x, side, f"{where}[{k}]") for k, x in enumerate(xs)]


def parse_subspace(spec: SpaceSpec, expr, side: str, where: str = "arg") -> Subspace:
    """Subspace expressions.

    X side: "all", "zero", "span:v1,v4", "ideal:...", "band:...", "dcomp:...",
    "restrict:<Y expr>".  Y side: "all", "zero", "coords:1,2,3",
    "image:<X expr>", "ext-ideal:...", "ext-band:...".  A list of vectors
    means their span.
    """
    space = spec.space
    n = space.n if side == "X" else space.m
    if isinstance(expr, list):
        return Subspace(n, parse_vectors(spec, expr, side, where))
    if not isinstance(expr, str):
        raise SpecError("subspace must be a string expression or a list of vectors", where)
    head, _, rest = expr.strip().partition(":")
    if head == "all":
        return Subspace.full(n)
    if head == "zero":
        return Subspace.zero(n)
    if side == "X":
        if head == "span":
            return Subspace(n, parse_vectors(spec, rest, "X", where))
        if head == "ideal":
            return ideal_generated(space, parse_vectors(spec, rest, "X", where)).subspace
        if head == "band":
            return band_generated(space, parse_vectors(spec, rest, "X", where)).subspace
        if head == "dcomp":
            return dcomplement(space, parse_vectors(spec, rest, "X", where))
        if head == "restrict":
            return restrict(space, parse_subspace(spec, rest, "Y", where))
    else:
        if head == "coords":
            idx = [int(t) - 1 for t in rest.split(",") if t.strip()]
            if any(not 0 <= j < n for j in idx):
                raise SpecError(f"coordinate out of range 1..{n}", where)
            return Subspace.coordinate(n, idx)
        if head == "image":
            return space.image(parse_subspace(spec, rest, "X", where))
        if head == "ext-ideal":
            return extension_ideal(space, parse_vectors(spec, rest, "X", where)).subspace
        if head == "ext-band":
            return extension_band(space, parse_vectors(spec, rest, "X", where))[0].subspace
        if head == "span":
            return Subspace(n, parse_vectors(spec, rest, "Y", where))
    raise SpecError(f"unknown {side}-side subspace expression {expr!r}", where)


# ---------------------------------------------------------------------------
# arguments for function operations


def parse_fn_arg(spec: SpaceSpec, x, where: str = "arg") -> PPoly:
    if isinstance(x, str):
        if x in spec.functions:
            return spec.functions[x]
        raise SpecError(f"unknown function name {x!r}", where)
    return parse_function(x, where)


def parse_desc_arg(spec: SpaceSpec, x, where: str = "arg") -> SubspaceDescriptor:
    if isinstance(x, str):
        if x in spec.descriptors:
            return spec.descriptors[x]
        if x == "full":
            return SubspaceDescriptor.full(spec.carrier)
        raise SpecError(f"unknown descriptor name {x!r}", where)
    return parse_descriptor(x, spec.carrier, where)


def parse_args(text: str | None, pairs: list[str] | None = None) -> dict:
    """--args as a JSON object, plus any key=value pairs (value JSON or bare string)."""
    out: dict = {}
    if text:
        obj = parse_json_text(text, "--args")
        if not isinstance(obj, dict):
            raise SpecError("--args must be a JSON object", "--args")
        out.update(obj)
    for p in pairs or []:
        key, sep, value = p.partition("=")
        if not sep:
            raise SpecError(f"expected key=value, got {p!r}", "--arg")
        try:
            out[key.strip()] = json.loads(value)
        except json.JSONDecodeError:
            out[key.strip()] = value
    return out

