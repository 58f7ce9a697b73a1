"""Worked examples, run end to end with exact expected values.

Each fixture returns a Report whose ``result`` lists its checks as
``{"check", "expected", "got", "ok"}`` and whose ``ok`` is their conjunction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import fdspace as fd
from .cone import PolyCone, polyhedron_equal
from .exact.linalg import Subspace
from .exact.poly import Poly
from .exact.rational import primitive
from .funcspace import (
    Dominator,
    Gap,
    Infeasible,
    NotDirected,
    NotDirectedEvidence,
    PPoly,
    SubspaceDescriptor,
    band_generated_descriptor,
    c1_bump,
    dcomp,
    directedness_certificate,
    ideal_extension_descriptor,
    membership_witness_majorized,
    named_carrier,
    order_density_witness,
    pervasive_witness,
    q_function,
    rdp_probe_lp,
)
from .report import Report, jsonable

HALF = Fraction(1, 2)

K4_RAYS = {"v1": (1, 0, 1), "v2": (0, 1, 1), "v3": (-1, 0, 1), "v4": (0, -1, 1)}
K4_FUNCTIONALS = ((-1, -1, 1), (1, -1, 1), (1, 1, 1), (-1, 1, 1))


def k4_cone() -> PolyCone:
    return PolyCone.from_generators(K4_RAYS.values(), 3)


def k4_space() -> fd.FDSpace:
    """The K4 space with embedding rows in the order f1, f2, f3, f4."""
    return fd.build_space(k4_cone(), K4_FUNCTIONALS)


def k4_space_file() -> dict:
    return {
        "kind": "fd",
        "name": "K4",
        "dim": 3,
        "cone": {"generators": [[str(c) for c in v] for v in K4_RAYS.values()]},
        "functionals": [[str(c) for c in f] for f in K4_FUNCTIONALS],
        "vectors": {k: [str(c) for c in v] for k, v in K4_RAYS.items()},
    }


class _Checks:
    def __init__(self):
        self.rows: list[dict] = []

    def __call__(self, name: str, got, expected=True) -> bool:
        ok = got == expected
        self.rows.append({"check": name, "expected": jsonable(expected), "got": jsonable(got), "ok": ok})
        return ok

    def report(self, name: str, witness=None, notes=()) -> Report:
        return Report(f"fixture:{name}", {}, self.rows, witness, all(r["ok"] for r in self.rows), list(notes))


def _pos(x: Poly, domain) -> PPoly:
    return PPoly.poly(x, domain).pos()


# ---------------------------------------------------------------------------
# finite-dimensional examples


def fixture_fordability() -> Report:
    c = _Checks()
    v = K4_RAYS
    space = k4_space()
    auto = fd.build_space(k4_cone())
    c("four functionals", space.m, 4)
    c("functionals match extremal dual rays up to scaling", sorted(primitive(f) for f in auto.functionals), sorted(primitive(f) for f in K4_FUNCTIONALS))
    c("embed(v2)", space.embed(v["v2"]), (0, 0, 2, 2))
    c("embed(v2) proportional to (0,0,1,1)", primitive(space.embed(v["v2"])), (0, 0, 1, 1))
    c("bipositive: {x : i(x) >= 0} equals K4", PolyCone.from_inequalities(space.functionals, 3) == k4_cone())
    c("H-description of K4 equals the functionals", sorted(k4_cone().facets) == sorted(primitive(f) for f in K4_FUNCTIONALS))
    c("band({v1,v4}) = X", fd.band_generated(space, [v["v1"], v["v4"]]).subspace, Subspace.full(3))
    band, ok = fd.extension_band(space, [v["v1"], v["v4"]])
    c("cover band of {v1,v4}", band.subspace, Subspace.coordinate(4, [0, 1, 2]))
    c("restriction of cover band = span{v1,v4}", fd.restrict(space, band.subspace), Subspace(3, [v["v1"], v["v4"]]))
    c("extension band restricts correctly", ok, False)
    c("fordable", fd.is_fordable(space), False)
    c("pervasive", fd.is_pervasive(space), False)
    nonzero_bands = [fd.band_generated(space, [r]).subspace.dim for r in v.values()]
    c("bands generated by rays are one-dimensional", nonzero_bands, [1, 1, 1, 1])
    return c.report("k4_not_fordable")


def fixture_k4_ideal() -> Report:
    c = _Checks()
    v = K4_RAYS
    space = k4_space()
    S = [v["v1"], v["v4"]]
    I = fd.ideal_generated(space, S).subspace
    c("ideal({v1,v4}) = span{v1,v4}", I, Subspace(3, S))
    c("ideal({v1,v4}) = ker f4", I, Subspace(3, [(1, 0, 1), (0, 1, -1)]))
    c("ideal is directed", fd.is_directed(space, I))
    J = fd.extension_ideal(space, S).subspace
    c("extension ideal = span{e1,e2,e3}", J, Subspace.coordinate(4, [0, 1, 2]))
    L = space.image(I)
    c("i(I) majorizing in extension ideal", fd.is_majorizing(space, L, J))
    z = (1, 0, 1, 0)
    c("inf of upper set at z", fd.inf_upper_set(space, L, z), (1, 2, 1, 0))
    res = fd.is_order_dense(space, L, J, z)
    c("order dense", res.dense, False)
    c("witness is z", res.witness, z)
    c("F(witness) differs from witness", res.upper != res.witness)
    return c.report("k4_ideal_order_density", res.witness)


def fixture_k4_band() -> Report:
    c = _Checks()
    v = K4_RAYS
    space = k4_space()
    B = Subspace(3, [v["v2"]])
    c("span{v2} is a band", fd.is_band(space, B))
    c("band({v2}) = span{v2}", fd.band_generated(space, [v["v2"]]).subspace, B)
    band, ok = fd.extension_band(space, [v["v2"]])
    c("cover band = span{e3,e4}", band.subspace, Subspace.coordinate(4, [2, 3]))
    c("restricts correctly", ok)
    c("restriction of span{e3,e4} = span{v2}", fd.restrict(space, band.subspace), B)
    L = space.image(B)
    c("i(B) majorizing in cover band", fd.is_majorizing(space, L, band.subspace))
    y = (0, 0, 0, 1)
    c("inf of upper set at (0,0,0,1)", fd.inf_upper_set(space, L, y), (0, 0, 1, 1))
    res = fd.is_order_dense(space, L, band.subspace, y)
    c("order dense", res.dense, False)
    c("witness", res.witness, y)
    return c.report("k4_band_order_density", res.witness)


# ---------------------------------------------------------------------------
# function-space examples


def fixture_namioka() -> Report:
    c = _Checks()
    N = named_carrier("Namioka")
    I = SubspaceDescriptor([(-HALF, 0), (-1, -1), (1, 1)], [], N)
    B = band_generated_descriptor(I)
    c("band of I vanishes exactly on [-1/2, 0]", B, SubspaceDescriptor([(-HALF, 0)], [], N))
    c("I is not a band", B == I, False)
    rule = directedness_certificate(I, [-1, 0, 1])
    c("I: rule f -> |f|", type(rule).__name__, "DirectedWitnessRule")
    cert = directedness_certificate(B, [-1, 0, 1])
    c("band of I: not directed", type(cert).__name__, "NotDirected")
    ok = isinstance(cert, NotDirected) and cert.verify(B)
    c("certificate verifies", ok)
    c("f(-1), f(0), f(1)", [cert.f(t) for t in (-1, 0, 1)] if ok else None, [-1, 0, 1])
    try:
        ideal_extension_descriptor(B, named_carrier("PP2"))
        refused = False
    except NotDirectedEvidence:
        refused = True
    c("no extension ideal offered for the non-directed band", refused)
    # the cover interval is [-1, 1]
    ext = ideal_extension_descriptor(I, named_carrier("PP2"))
    c("extension of I into PP2 keeps the vanishing set", ext.zero_set, I.zero_set)
    f = PPoly.constant(1, N.domain)
    g = pervasive_witness(N, f)
    c("pervasive witness under 1 lies in the carrier", N.contains(g) and PPoly.zero(N.domain).leq(g) and g.leq(f) and not g.is_zero())
    return c.report("namioka_band", cert.to_json() if ok else None, ["cover interval taken as [-1, 1]"])


def fixture_c1_band() -> Report:
    c = _Checks()
    dom = (0, 1)
    C1 = named_carrier("C1PP2")
    PP2 = named_carrier("PP2", dom)
    s = c1_bump(HALF, 1, 1, dom)
    c("generator lies in C1 and vanishes on [0,1/2] and at 1", C1.contains(s) and s(1) == 0 and s.vanishes_on(SubspaceDescriptor([(0, HALF)], [], C1).zero_set))
    B = band_generated_descriptor([s], C1)
    c("band vanishes on [0, 1/2]", B, SubspaceDescriptor([(0, HALF)], [], C1))
    B_hat = B.with_carrier(PP2)
    t = Poly.t()
    g = _pos(t - Poly.const(HALF), dom)
    c("g in the cover band", B_hat.contains(g))
    res = membership_witness_majorized(g, B)
    c("C1 band: no dominator", type(res).__name__, "Infeasible")
    kind = res.certificate.kind if isinstance(res, Infeasible) else None
    c("certificate kind", kind, "expansion")
    c("certificate verifies", isinstance(res, Infeasible) and res.certificate.verify(g, B))
    res2 = membership_witness_majorized(g, B_hat)
    c("PP2 band: dominator found", isinstance(res2, Dominator) and g.leq(res2.f) and B_hat.contains(res2.f))
    gap = order_density_witness(B, B_hat, g)
    c("gap point just above 1/2", isinstance(gap, Gap) and HALF < gap.point < Fraction(3, 4) and gap.margin > 0)
    return c.report("c1_band", res.certificate.to_json() if isinstance(res, Infeasible) else None)


def fixture_germ_band() -> Report:
    c = _Checks()
    dom = (-1, 1)
    t = Poly.t()
    Y = named_carrier("PP2")
    Xrho = named_carrier("Xrho")
    X = named_carrier("X")
    X0 = named_carrier("X0")
    notes = []

    B = SubspaceDescriptor([(-1, 0)], [0], X)
    c("B is a band in X", band_generated_descriptor(B) == B)
    I_Y = ideal_extension_descriptor(B, Y)
    B_Y = dcomp(dcomp(I_Y))
    c("ideal in Y keeps the germ flag at 0", [p.to_json() for p in I_Y.germ_zero], ["0"])
    c("band in Y drops it", [p.to_json() for p in B_Y.germ_zero], [])
    c("ideal strictly inside band (Y)", I_Y < B_Y)
    x = _pos(t, dom)
    c("t+ in band, not in ideal (Y)", B_Y.contains(x) and not I_Y.contains(x))

    I_R = ideal_extension_descriptor(B, Xrho)
    B_R = dcomp(dcomp(I_R))
    c("ideal equals band (X^rho surrogate)", I_R == B_R)
    c("complement of ideal in X^rho vanishes on [0,1]", dcomp(I_R).zero_set, SubspaceDescriptor([(0, 1)], [], Xrho).zero_set)

    q = q_function(dom)
    a1 = PPoly(dom, [-1, -HALF, 1], [-t - Poly.const(HALF), Poly()])
    a2 = PPoly(dom, [-1, HALF, 1], [Poly(), t - Poly.const(HALF)])
    c("q, a1, a2 lie in X", X.contains(q) and X.contains(a1) and X.contains(a2))
    # on [1/2, 1]: a2 - q = -(t - 1/2)^2, so the stated inequality runs the other way
    c("q <= a1 + a2", q.leq(a1 + a2), False)
    c("a1 + a2 <= q", (a1 + a2).leq(q), True)
    notes.append("q <= a1 + a2 fails pointwise; a1 + a2 <= q holds instead")
    lp = rdp_probe_lp(q, a1, a2)
    c("decomposition LP infeasible", lp.status, "infeasible")
    c("Farkas certificate present", lp.certificate is not None)

    f = abs(PPoly.poly(t, dom))
    g = pervasive_witness(X0, f)
    c("X0 pervasive witness under |t|", X0.contains(g) and g.leq(f) and not g.is_zero())
    return c.report("germ_band_decomposition", x.to_json(), notes)


FIXTURES: dict[str, Callable[[], Report]] = {
    "namioka_band": fixture_namioka,
    "k4_not_fordable": fixture_fordability,
    "c1_band": fixture_c1_band,
    "k4_ideal_order_density": fixture_k4_ideal,
    "k4_band_order_density": fixture_k4_band,
    "germ_band_decomposition": fixture_germ_band,
}


def run_fixtures(names=None, registry: dict | None = None) -> list[Report]:
    reg = FIXTURES if registry is None else registry
    if not reg:
        raise LookupError("fixture registry is empty")
    out = []
    for name in names or reg:
        if name not in reg:
            raise LookupError(f"unknown fixture {name!r}")
        try:
            out.append(reg[name]())
        except Exception as exc:  # a crash is a failed fixture, reported not raised
            out.append(Report(f"fixture:{name}", {}, None, None, False, [f"{type(exc).__name__}: {exc}"]))
    return out
