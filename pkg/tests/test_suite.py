import pytest

from biloc import fixtures
from biloc.errors import UnknownCheckId
from biloc.suite import (CHECKS, Bounds, get_check, run_property_suite,
                         run_sweep, search_counterexample)

EXPECTED_FAIL_IDS = {
    "prop_smallest_dense_converse",
    "prop_ijremote_weak",
    "prop_remoteremb_weak",
    "prop_remequall_clause2_weak",
    "example_booleanbi_4_weak",
    "prop_ndbilocaleclopen_literal",
    "thm_remote_subbilocale_weak_literal",
}


def test_registry_shape():
    assert len(CHECKS) > 100
    assert {c.id for c in CHECKS.values() if c.expected_fail} == \
        EXPECTED_FAIL_IDS
    for c in CHECKS.values():
        assert c.scope in ("lattice", "bilocale", "bispace", "map", "diagram")
        assert c.doc


def test_unknown_check_id():
    with pytest.raises(UnknownCheckId):
        get_check("prop_nonexistent")


def test_b4_all_applicable_pass():
    rep = run_property_suite(fixtures.b4_sym())
    assert not rep.failures
    ids = [o.check_id for o in rep.outcomes]
    assert len(ids) == len(set(ids))


def test_c3_fails_exactly_the_weak_discrepancies():
    rep = run_property_suite(fixtures.c3_sym())
    failed = {o.check_id for o in rep.outcomes if o.verdict == "FAIL"}
    assert failed == {"prop_ijremote_weak", "prop_remoteremb_weak",
                      "prop_remequall_clause2_weak", "example_booleanbi_4_weak"}
    assert not rep.unexpected_failures


def test_pt_fails_only_the_converse():
    rep = run_property_suite(fixtures.pt())
    failed = {o.check_id for o in rep.outcomes if o.verdict == "FAIL"}
    assert failed == {"prop_smallest_dense_converse"}


def test_named_checks_and_scope_skip():
    rep = run_property_suite(fixtures.c3(), checks=["law_frame", "prop_bullet"])
    byid = {o.check_id: o for o in rep.outcomes}
    assert byid["law_frame"].verdict == "PASS"
    assert byid["prop_bullet"].verdict == "SKIP"


def test_sweep_small_is_green():
    sweep = run_sweep(Bounds(max_poset_points=2, max_bispace_points=2,
                             max_map_elements=2),
                      kinds=("lattice", "bilocale", "bispace"))
    assert not sweep.unexpected_failures()
    # the clopen-literal discrepancies need six-element structures, which
    # only arise from three-point posets: the sweep must notice the gap
    assert set(sweep.missing_expected_failures()) == {
        "prop_ndbilocaleclopen_literal", "thm_remote_subbilocale_weak_literal"}
    assert not sweep.ok


def test_sweep_three_points_finds_every_discrepancy():
    sweep = run_sweep(Bounds(max_poset_points=3, max_bispace_points=2,
                             max_map_elements=2),
                      kinds=("lattice", "bilocale"))
    assert not sweep.unexpected_failures()
    assert sweep.missing_expected_failures() == []
    assert sweep.ok


def test_search_finds_c3_for_weak_rmt():
    cex = search_counterexample("prop_ijremote_weak",
                                Bounds(max_poset_points=2))
    assert cex is not None
    assert "elements" in cex.structure_text
    assert cex.refails()


def test_search_finds_converse_witness_at_pt_size():
    cex = search_counterexample("prop_smallest_dense_converse",
                                Bounds(max_poset_points=3))
    assert cex is not None
    doc_lattice_lines = [l for l in cex.structure_text.splitlines()
                         if l.startswith("elements")]
    assert len(doc_lattice_lines[0].split()) - 1 <= 6


def test_search_theorem_has_no_counterexample():
    assert search_counterexample("prop_pseudo_7",
                                 Bounds(max_poset_points=2)) is None


def test_search_booleanbi4_finds_a_chain():
    cex = search_counterexample("example_booleanbi_4_weak",
                                Bounds(max_poset_points=2))
    assert cex is not None
    assert cex.refails()


def test_determinism_of_reports():
    a = run_property_suite(fixtures.pt())
    b = run_property_suite(fixtures.pt())
    assert a.machine_lines() == b.machine_lines()
    s1 = run_sweep(Bounds(max_poset_points=2), kinds=("lattice", "bilocale"))
    s2 = run_sweep(Bounds(max_poset_points=2), kinds=("lattice", "bilocale"))
    assert s1.machine_lines() == s2.machine_lines()


def test_machine_line_format():
    rep = run_property_suite(fixtures.c3_sym())
    for line in rep.machine_lines():
        parts = line.split()
        assert parts[0] == "CHECK"
        assert parts[2] == "C3"
        assert parts[3].startswith(("PASS", "FAIL", "SKIP("))
