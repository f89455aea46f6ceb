"""Sensor devices, derivative transforms and output-simulation checks."""

from ._eventify import (
    Device,
    InvalidModel,
    Monoid,
    ParseError,
    TransformResult,
    Variator,
    Verdict,
    check_output_simulation,
    check_output_stable,
    check_vertex_stable,
    delta_transform,
    direct_product,
    disaggregator,
    eventify,
    exact_min_cardinality,
    is_3colorable,
    minimize_variator,
    monoid_integrator,
    pump_transform,
    reduce_3coloring,
    shave_delta_transform,
    shrink_transform,
    singleton_restrict,
)

__all__ = [
    "Device",
    "InvalidModel",
    "Monoid",
    "ParseError",
    "TransformResult",
    "Variator",
    "Verdict",
    "check_output_simulation",
    "check_output_stable",
    "check_vertex_stable",
    "delta_transform",
    "direct_product",
    "disaggregator",
    "eventify",
    "exact_min_cardinality",
    "is_3colorable",
    "minimize_variator",
    "monoid_integrator",
    "pump_transform",
    "reduce_3coloring",
    "shave_delta_transform",
    "shrink_transform",
    "singleton_restrict",
]
