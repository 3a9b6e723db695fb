"""Structure generators, the property-check registry, and sweep drivers."""

from .generators import (Bounds, downset_lattice, generate_bilocales,
                         generate_bispaces, generate_lattices, generate_posets)
from .registry import CHECKS, CheckOutcome, PropertyCheck, checks_for_scope, \
    get_check
from .runner import (Counterexample, Diagram, PropertyReport, SweepReport,
                     iter_sweep_structures, run_property_suite, run_sweep,
                     search_counterexample, serialize_structure)

__all__ = [
    "Bounds", "generate_posets", "downset_lattice", "generate_lattices",
    "generate_bilocales", "generate_bispaces", "CHECKS", "PropertyCheck",
    "CheckOutcome", "checks_for_scope", "get_check", "Diagram",
    "PropertyReport", "SweepReport", "Counterexample", "run_property_suite",
    "run_sweep", "search_counterexample", "iter_sweep_structures",
    "serialize_structure",
]
