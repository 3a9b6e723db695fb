"""Suite execution: per-structure reports, full sweeps, counterexample search.

Reports are deterministic: structures arrive in canonical generation
order, checks run in registry order, and machine-readable lines carry no
timing.  Expected-fail bookkeeping lives at the sweep level: a sweep is
good when no expected-pass check ever fails and every expected-fail
check fails somewhere.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..bilocales import Bilocale
from ..bispaces import Bispace
from ..formats import (bilocale_to_text, bispace_to_text, lattice_to_text,
                       map_to_text, parse_text)
from ..lattice import FiniteLattice
from ..maps import BilocalicMap, enumerate_bilocalic_maps
from . import generators
from .registry import CHECKS, CheckOutcome, get_check


@dataclass
class Diagram:
    """An explicit finite diagram of bilocales and bilocalic maps."""

    name: str
    objects: list
    morphisms: list


def structure_id(structure):
    return structure.name


def _scoped_views(structure):
    """(scope, view) pairs of checks applicable to a structure."""
    if isinstance(structure, FiniteLattice):
        return [("lattice", structure)]
    if isinstance(structure, Bilocale):
        return [("lattice", structure.total), ("bilocale", structure)]
    if isinstance(structure, Bispace):
        return [("bispace", structure)]
    if isinstance(structure, BilocalicMap):
        return [("map", structure)]
    if isinstance(structure, Diagram):
        return [("diagram", structure)]
    raise TypeError(f"no checks apply to {type(structure).__name__}")


@dataclass
class RanCheck:
    check_id: str
    structure_id: str
    verdict: str                 # PASS | FAIL | SKIP
    reason: str = ""
    witness: str = ""
    expected_fail: bool = False
    elapsed: float = 0.0

    def machine_line(self):
        v = self.verdict if self.verdict != "SKIP" else f"SKIP({self.reason})"
        line = f"CHECK {self.check_id} {self.structure_id} {v}"
        if self.witness:
            line += f" witness={self.witness.replace(' ', '_')}"
        return line


@dataclass
class PropertyReport:
    structure_id: str
    outcomes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self):
        return [o for o in self.outcomes if o.verdict == "FAIL"]

    @property
    def unexpected_failures(self):
        return [o for o in self.failures if not o.expected_fail]

    def machine_lines(self):
        return [o.machine_line() for o in self.outcomes]


def _run_one(chk, view, sid):
    t0 = time.perf_counter()
    out: CheckOutcome = chk.evaluator(view)
    elapsed = time.perf_counter() - t0
    return RanCheck(chk.id, sid, out.verdict.upper(), out.reason, out.witness,
                    chk.expected_fail, elapsed)


def run_property_suite(structure, checks="all"):
    """Run every applicable (or the named) registered check on a structure."""
    sid = structure_id(structure)
    views = _scoped_views(structure)
    report = PropertyReport(structure_id=sid)
    t0 = time.perf_counter()
    if checks == "all":
        for scope, view in views:
            for chk in CHECKS.values():
                if chk.scope != scope:
                    continue
                report.outcomes.append(_run_one(chk, view, sid))
    else:
        scope_map = dict(views)
        for cid in checks:
            chk = get_check(cid)
            if chk.scope not in scope_map:
                report.outcomes.append(RanCheck(
                    chk.id, sid, "SKIP",
                    reason=f"scope {chk.scope} not applicable",
                    expected_fail=chk.expected_fail))
                continue
            report.outcomes.append(_run_one(chk, scope_map[chk.scope], sid))
    report.elapsed = time.perf_counter() - t0
    return report


# -- the sweep universe ------------------------------------------------------


def iter_sweep_structures(bounds=None, kinds=("lattice", "bilocale", "bispace",
                                              "map", "diagram")):
    """Yield the canonical generated universe, smallest structures first.

    Lattices and their bilocales come from the poset stream; bispaces
    from the topology-pair stream; maps from pruned enumeration between
    small bilocales; one diagram bundles the map universe per size tier.
    """
    bounds = bounds or generators.Bounds()
    lattices = generators.generate_lattices(
        bounds.max_poset_points, max_elements=bounds.max_lattice_elements)
    if "lattice" in kinds or "bilocale" in kinds or "map" in kinds or \
       "diagram" in kinds:
        small_bilocales = []
        for lat in lattices:
            if "lattice" in kinds:
                yield lat
            if "bilocale" in kinds or "map" in kinds or "diagram" in kinds:
                bs = generators.generate_bilocales(lat)
                for b in bs:
                    if "bilocale" in kinds:
                        yield b
                    if lat.n <= bounds.max_map_elements:
                        small_bilocales.append(b)
        if "map" in kinds or "diagram" in kinds:
            morphisms = []
            for src in small_bilocales:
                for tgt in small_bilocales:
                    for k, f in enumerate(enumerate_bilocalic_maps(src, tgt)):
                        f.base.name = f"{src.name}_to_{tgt.name}_{k}"
                        morphisms.append(f)
            if "map" in kinds:
                yield from morphisms
            if "diagram" in kinds:
                yield Diagram(f"diagram_p{bounds.max_map_elements}",
                              small_bilocales, morphisms)
    if "bispace" in kinds:
        yield from generators.generate_bispaces(bounds.max_bispace_points)


@dataclass
class SweepReport:
    reports: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def outcomes(self):
        for rep in self.reports:
            yield from rep.outcomes

    def tally(self):
        counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
        for o in self.outcomes:
            counts[o.verdict] += 1
        return counts

    def unexpected_failures(self):
        return [o for o in self.outcomes
                if o.verdict == "FAIL" and not o.expected_fail]

    def missing_expected_failures(self):
        expected = {cid for cid, chk in CHECKS.items() if chk.expected_fail}
        seen = {o.check_id for o in self.outcomes
                if o.verdict == "FAIL" and o.expected_fail}
        ran = {o.check_id for o in self.outcomes}
        return sorted((expected & ran) - seen)

    @property
    def ok(self):
        return not self.unexpected_failures() and \
            not self.missing_expected_failures()

    def machine_lines(self):
        lines = []
        for rep in self.reports:
            lines.extend(rep.machine_lines())
        return lines


def run_sweep(bounds=None, kinds=("lattice", "bilocale", "bispace", "map",
                                  "diagram"), checks="all"):
    """Run the suite over the whole generated universe."""
    t0 = time.perf_counter()
    sweep = SweepReport()
    for structure in iter_sweep_structures(bounds, kinds):
        sweep.reports.append(run_property_suite(structure, checks))
    sweep.elapsed = time.perf_counter() - t0
    return sweep


# -- counterexample search ----------------------------------------------------


@dataclass
class Counterexample:
    property_id: str
    structure_id: str
    structure_text: str
    witness: str

    def refails(self):
        """Re-parse the serialized structure and re-run the check on it."""
        doc = parse_text(self.structure_text)
        chk = get_check(self.property_id)
        for kind, name, value in doc.structures():
            for scope, view in _scoped_views(value):
                if scope == chk.scope:
                    return chk.evaluator(view).verdict == "fail"
        return False


def serialize_structure(structure):
    if isinstance(structure, FiniteLattice):
        return lattice_to_text(structure)
    if isinstance(structure, Bilocale):
        return bilocale_to_text(structure)
    if isinstance(structure, Bispace):
        return bispace_to_text(structure)
    if isinstance(structure, BilocalicMap):
        parts = [bilocale_to_text(structure.source_b, name="SRC")]
        tgt_name = "SRC"
        if structure.target_b is not structure.source_b:
            parts.append(bilocale_to_text(structure.target_b, name="TGT"))
            tgt_name = "TGT"
        parts.append(map_to_text(structure, "SRC", tgt_name))
        return "".join(parts)
    raise TypeError(f"cannot serialize {type(structure).__name__}")


def search_counterexample(property_id, bounds=None, seed=0, exhaustive=True):
    """Sweep generated structures and return the first failing one, or None.

    Exhaustive mode walks the canonical generation order; seeded random
    mode draws random lattices and bilocales within the bounds.
    """
    chk = get_check(property_id)
    bounds = bounds or generators.Bounds()
    if exhaustive:
        structures = iter_sweep_structures(bounds, kinds=(chk.scope,))
    else:
        structures = _random_structures(chk.scope, bounds, seed)
    for structure in structures:
        for scope, view in _scoped_views(structure):
            if scope != chk.scope:
                continue
            out = chk.evaluator(view)
            if out.verdict == "fail":
                return Counterexample(property_id, structure_id(structure),
                                      serialize_structure(structure),
                                      out.witness)
    return None


def _random_structures(scope, bounds, seed):
    if scope in ("lattice", "bilocale"):
        lats = generators.generate_lattices(
            bounds.max_poset_points, mode="random", seed=seed, count=64,
            max_elements=bounds.max_lattice_elements)
        for lat in lats:
            if scope == "lattice":
                yield lat
            else:
                yield from generators.generate_bilocales(
                    lat, mode="random", seed=seed, count=16)
    elif scope == "bispace":
        yield from generators.generate_bispaces(bounds.max_bispace_points)
    else:
        yield from iter_sweep_structures(bounds, kinds=(scope,))
