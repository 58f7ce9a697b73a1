"""Command-line front end.

Exit codes: 0 success, 2 a decider answered negatively and produced a
witness, 1 any error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Callable

from . import fdspace as fd
from .cone import dual_cone, extremal_rays
from .exact.linalg import Subspace
from .fixtures import FIXTURES, run_fixtures
from .funcspace import (
    Gap,
    InconclusiveProbe,
    Infeasible,
    NotDirected,
    UnsupportedCarrier,
    band_generated_descriptor,
    dcomp,
    directedness_certificate,
    disjoint,
    ideal_extension_descriptor,
    membership_witness_majorized,
    named_carrier,
    order_density_witness,
    pervasive_witness,
    rdp_probe_lp,
    sup_disjoint_check,
)
from .io import (
    SpaceSpec,
    SpecError,
    load_space,
    load_space_obj,
    parse_args,
    parse_carrier,
    parse_desc_arg,
    parse_fn_arg,
    parse_json_text,
    parse_subspace,
    parse_vector,
    parse_vectors,
)
from .properties import properties
from .report import Report, dumps_many


@dataclass(frozen=True)
class Outcome:
    result: object
    witness: object = None
    negative: bool = False


def _need(args: dict, key: str):
    if key not in args:
        raise SpecError(f"missing argument '{key}'", "--args")
    return args[key]


# ---------------------------------------------------------------------------
# fd operations


def _fd_embed(spec, a):
    return Outcome(spec.space.embed(parse_vector(spec, _need(a, "x"), "X", "x")))


def _fd_disjoint(spec, a):
    x, y = parse_vector(spec, _need(a, "x"), "X", "x"), parse_vector(spec, _need(a, "y"), "X", "y")
    return Outcome({"definition": fd.disjoint_def(spec.space, x, y), "coordinates": fd.disjoint_coord(spec.space, x, y)})


def _fd_dcomp(spec, a):
    return Outcome(fd.dcomplement(spec.space, parse_vectors(spec, a.get("S", []), "X", "S")))


def _fd_band(spec, a):
    return Outcome(fd.band_generated(spec.space, parse_vectors(spec, a.get("S", []), "X", "S")).subspace)


def _fd_ideal(spec, a):
    return Outcome(fd.ideal_generated(spec.space, parse_vectors(spec, _need(a, "S"), "X", "S")).subspace)


def _fd_directed(spec, a):
    return Outcome(fd.is_directed(spec.space, parse_subspace(spec, _need(a, "L"), "X", "L")))


def _fd_ext_ideal(spec, a):
    return Outcome(fd.extension_ideal(spec.space, parse_vectors(spec, _need(a, "S"), "X", "S")).subspace)


def _fd_ext_band(spec, a):
    h, ok = fd.extension_band(spec.space, parse_vectors(spec, a.get("S", []), "X", "S"))
    return Outcome({"band": h.subspace, "restricts_correctly": ok})


def _fd_restrict(spec, a):
    return Outcome(fd.restrict(spec.space, parse_subspace(spec, _need(a, "J"), "Y", "J")))


def _fd_inf(spec, a):
    r = fd.inf_upper_set(spec.space, parse_subspace(spec, _need(a, "L"), "Y", "L"), parse_vector(spec, _need(a, "y"), "Y", "y"))
    return Outcome(r)


def _fd_majorizing(spec, a):
    L, J = parse_subspace(spec, _need(a, "L"), "Y", "L"), parse_subspace(spec, _need(a, "J"), "Y", "J")
    return Outcome(fd.is_majorizing(spec.space, L, J))


def _fd_order_dense(spec, a):
    L, J = parse_subspace(spec, _need(a, "L"), "Y", "L"), parse_subspace(spec, _need(a, "J"), "Y", "J")
    y = parse_vector(spec, a["y"], "Y", "y") if "y" in a else None
    res = fd.is_order_dense(spec.space, L, J, y)
    return Outcome(res.dense, res.witness, not res.dense)


def _fd_pervasive(spec, a):
    return Outcome(fd.is_pervasive(spec.space))


def _fd_fordable(spec, a):
    return Outcome(fd.is_fordable(spec.space))


def _fd_rays(spec, a):
    return Outcome({"cone": spec.space.cone.rays, "dual": extremal_rays(dual_cone(spec.space.cone))})


def _fd_space(spec, a):
    return Outcome(spec.space)


FD_OPS: dict[str, Callable] = {
    "space": _fd_space,
    "rays": _fd_rays,
    "embed": _fd_embed,
    "disjoint": _fd_disjoint,
    "dcomplement": _fd_dcomp,
    "band": _fd_band,
    "ideal": _fd_ideal,
    "directed": _fd_directed,
    "extension-ideal": _fd_ext_ideal,
    "extension-band": _fd_ext_band,
    "restrict": _fd_restrict,
    "inf-upper-set": _fd_inf,
    "majorizing": _fd_majorizing,
    "order-dense": _fd_order_dense,
    "pervasive": _fd_pervasive,
    "fordable": _fd_fordable,
}


# ---------------------------------------------------------------------------
# function-space operations


def _fn(spec, a, key):
    return parse_fn_arg(spec, _need(a, key), key)


def _desc(spec, a, key):
    return parse_desc_arg(spec, _need(a, key), key)


def _fn_join(spec, a):
    return Outcome(_fn(spec, a, "f").join(_fn(spec, a, "g")))


def _fn_meet(spec, a):
    return Outcome(_fn(spec, a, "f").meet(_fn(spec, a, "g")))


def _fn_leq(spec, a):
    return Outcome(_fn(spec, a, "f").leq(_fn(spec, a, "g")))


def _fn_disjoint(spec, a):
    return Outcome(disjoint(_fn(spec, a, "f"), _fn(spec, a, "g")))


def _fn_support(spec, a):
    f = _fn(spec, a, "f")
    return Outcome({"support": f.support(), "zero_set": f.zero_set()})


def _gens_or_desc(spec, a):
    if "S" in a:
        return [parse_fn_arg(spec, s, f"S[{k}]") for k, s in enumerate(a["S"])]
    return _desc(spec, a, "D")


def _fn_dcomp(spec, a):
    return Outcome(dcomp(_gens_or_desc(spec, a), spec.carrier))


def _fn_band(spec, a):
    return Outcome(band_generated_descriptor(_gens_or_desc(spec, a), spec.carrier))


def _fn_ideal_ext(spec, a):
    cover = parse_carrier(a.get("cover", "PP2"), "cover")
    return Outcome(ideal_extension_descriptor(_desc(spec, a, "B"), cover, a.get("probes")))


def _fn_majorized(spec, a):
    res = membership_witness_majorized(_fn(spec, a, "g"), _desc(spec, a, "D"))
    if isinstance(res, Infeasible):
        return Outcome(False, res.certificate, True)
    return Outcome(True, res.f)


def _fn_directed(spec, a):
    D = _desc(spec, a, "D")
    try:
        res = directedness_certificate(D, a.get("probes", [D.carrier.domain[0], 0, D.carrier.domain[1]]))
    except InconclusiveProbe as exc:
        return Outcome("inconclusive", str(exc))
    if isinstance(res, NotDirected):
        return Outcome(False, res, True)
    return Outcome(True, res.name)


def _fn_pervasive(spec, a):
    return Outcome(pervasive_witness(spec.carrier, _fn(spec, a, "f")))


def _fn_sup(spec, a):
    S = [parse_fn_arg(spec, s, f"S[{k}]") for k, s in enumerate(_need(a, "S"))]
    return Outcome(sup_disjoint_check(_fn(spec, a, "a"), S, spec.carrier))


def _fn_order_density(spec, a):
    res = order_density_witness(_desc(spec, a, "D"), _desc(spec, a, "cover"), _fn(spec, a, "y"))
    if isinstance(res, Gap):
        return Outcome("gap", res, True)
    return Outcome("inf equals y")


def _fn_rdp(spec, a):
    res = rdp_probe_lp(_fn(spec, a, "q"), _fn(spec, a, "a1"), _fn(spec, a, "a2"), a.get("probes", ("-1", "-1/2", "0", "1/2", "1")))
    if res.feasible:
        return Outcome("feasible", res.x)
    return Outcome("infeasible", res.certificate, True)


FN_OPS: dict[str, Callable] = {
    "join": _fn_join,
    "meet": _fn_meet,
    "leq": _fn_leq,
    "disjoint": _fn_disjoint,
    "support": _fn_support,
    "dcomp": _fn_dcomp,
    "band": _fn_band,
    "ideal-extension": _fn_ideal_ext,
    "majorized": _fn_majorized,
    "directed": _fn_directed,
    "pervasive-witness": _fn_pervasive,
    "sup-disjoint": _fn_sup,
    "order-density": _fn_order_density,
    "rdp-lp": _fn_rdp,
}


def run(op_name: str, spec: SpaceSpec, args: dict) -> tuple[Report, int]:
    """Dispatch one operation; returns the report and the exit code."""
    table = FD_OPS if spec.kind == "fd" else FN_OPS
    if op_name not in table:
        raise SpecError(f"unknown op {op_name!r} for {spec.kind} spaces; known: {', '.join(sorted(table))}", "--op")
    out = table[op_name](spec, args)
    report = Report(op_name, {"space": spec.name, "args": args}, out.result, out.witness, True)
    return report, 2 if out.negative else 0


# ---------------------------------------------------------------------------
# argparse


def _emit(reports, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        text = reports[0].dumps() if len(reports) == 1 else dumps_many(reports)
    else:
        text = "\n".join(r.text() for r in reports)
    print(text, file=stream)


def _function_spec(ns) -> SpaceSpec:
    """--carrier NAME with an optional --in FILE of functions and descriptors."""
    obj: dict = {"kind": "function", "name": ns.carrier, "carrier": ns.carrier}
    if ns.input:
        with open(ns.input) as fh:
            extra = parse_json_text(fh.read(), ns.input)
        if not isinstance(extra, dict):
            raise SpecError("input file must hold an object", ns.input)
        if "breakpoints" in extra:
            extra = {"functions": {"f": extra}}
        obj.update({k: v for k, v in extra.items() if k in ("functions", "descriptors", "domain")})
    return load_space_obj(obj, ns.input or "<carrier>")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rieszcover", description="Exact pre-Riesz space computations.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run one operation on a space file")
    r.add_argument("--space", help="space file (JSON)")
    r.add_argument("--carrier", help="named carrier, instead of --space")
    r.add_argument("--in", dest="input", help="functions/descriptors for --carrier")
    r.add_argument("--op", required=True)
    r.add_argument("--args", dest="args_json", help="JSON object of operation arguments")
    r.add_argument("--arg", action="append", default=[], help="key=value, repeatable")
    r.add_argument("--report", choices=("text", "json"), default="text")

    f = sub.add_parser("fixtures", help="run the worked examples")
    f.add_argument("names", nargs="*", help=f"subset of: {', '.join(FIXTURES)}")
    f.add_argument("--report", choices=("text", "json"), default="text")

    q = sub.add_parser("properties", help="run the randomized property suites")
    q.add_argument("--seed", type=int, default=42)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--func-trials", type=int, default=None)
    q.add_argument("--report", choices=("text", "json"), default="text")

    d = sub.add_parser("dump-k4", help="print the K4 space file")
    d.add_argument("--report", choices=("text", "json"), default="json")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "run":
            if bool(ns.space) == bool(ns.carrier):
                raise SpecError("give exactly one of --space or --carrier", "run")
            spec = load_space(ns.space) if ns.space else _function_spec(ns)
            report, code = run(ns.op, spec, parse_args(ns.args_json, ns.arg))
            _emit([report], ns.report)
            return code
        if ns.command == "fixtures":
            reports = run_fixtures(ns.names or None)
            _emit(reports, ns.report)
            passed = sum(r.ok for r in reports)
            print(f"{passed}/{len(reports)} fixtures passed", file=sys.stderr)
            return 0 if passed == len(reports) else 1
        if ns.command == "properties":
            report = properties(ns.seed, ns.trials, ns.func_trials)
            _emit([report], ns.report)
            return 0 if report.ok else 1
        if ns.command == "dump-k4":
            from .fixtures import k4_space_file

            print(json.dumps(k4_space_file(), indent=2))
            return 0
    except (SpecError, LookupError, ValueError, ArithmeticError, UnsupportedCarrier) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 1  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
