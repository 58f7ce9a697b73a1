"""Piecewise-polynomial function spaces on a compact interval."""

from .carrier import C1, Carrier, GermConstantAt, MaxDegree, PointRelation, SpanX0PlusQ, UnsupportedCarrier, named_carrier, q_function
from .deciders import (
    DirectedWitnessRule,
    Dominator,
    Gap,
    InconclusiveProbe,
    Infeasible,
    InfEqualsY,
    LocalCertificate,
    NotDirected,
    NotDirectedEvidence,
    NoWitness,
    SupCheck,
    directedness_certificate,
    ideal_extension_descriptor,
    membership_witness_majorized,
    order_density_witness,
    pervasive_witness,
    rdp_probe_lp,
    sup_disjoint_check,
)
from .descriptor import SubspaceDescriptor, band_generated_descriptor, dcomp
from .intervals import IntervalSet
from .ppoly import DomainMismatch, PPoly, c1_bump, c1_plateau, disjoint, hat, sup, trapezoid
from .sampling import boundary_probe, random_nonneg, random_pa, random_pp2, sample_member

__all__ = [
    "C1",
    "Carrier",
    "DirectedWitnessRule",
    "DomainMismatch",
    "Dominator",
    "Gap",
    "GermConstantAt",
    "InconclusiveProbe",
    "InfEqualsY",
    "Infeasible",
    "IntervalSet",
    "LocalCertificate",
    "MaxDegree",
    "NoWitness",
    "NotDirected",
    "NotDirectedEvidence",
    "PPoly",
    "PointRelation",
    "SpanX0PlusQ",
    "SubspaceDescriptor",
    "SupCheck",
    "UnsupportedCarrier",
    "band_generated_descriptor",
    "boundary_probe",
    "c1_bump",
    "c1_plateau",
    "dcomp",
    "directedness_certificate",
    "disjoint",
    "hat",
    "ideal_extension_descriptor",
    "membership_witness_majorized",
    "named_carrier",
    "order_density_witness",
    "pervasive_witness",
    "q_function",
    "random_nonneg",
    "random_pa",
    "random_pp2",
    "rdp_probe_lp",
    "sample_member",
    "sup",
    "sup_disjoint_check",
    "trapezoid",
]
