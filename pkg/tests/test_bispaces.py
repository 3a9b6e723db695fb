import pytest

from biloc import bilocales as bl
from biloc import bispaces as bsp
from biloc.errors import NotATopology


def make_pt():
    return bsp.build_bispace(["a", "b", "c"], [["a"], ["b", "c"]], [["b"]],
                             name="PT")


def test_pt_tau_generation():
    pt = make_pt()
    assert [pt.set_label(u) for u in pt.tau] == \
        ["{}", "{a}", "{b}", "{a,b}", "{b,c}", "{a,b,c}"]


def test_discrete_two_points():
    d = bsp.build_bispace(["x", "y"], [["x"], ["y"]], [["x"], ["y"]])
    assert len(d.tau) == 4
    assert bsp.is_sup_td(d)
    b = bsp.to_bilocale(d)
    assert bl.classify_bilocale(b).boolean


def test_not_a_topology_witness():
    with pytest.raises(NotATopology):
        bsp.build_bispace(["x", "y"], [["x"]], [], generate=False)


def test_sup_td_examples():
    assert bsp.is_sup_td(make_pt())
    indiscrete = bsp.build_bispace(["x", "y"], [], [])
    assert not bsp.is_sup_td(indiscrete)


def test_induced_sublocale_examples():
    pt = make_pt()
    ind = bsp.induced_sublocale(pt, pt.point_mask(["a"]))
    assert ind.labels == ["{b,c}", "{a,b,c}"]
    assert bsp.induced_sublocale(pt, pt.full).is_whole()
    assert bsp.induced_sublocale(pt, 0).is_void()


def test_tau_ij_nowhere_dense_examples():
    pt = make_pt()
    a = pt.point_mask(["a"])
    assert bsp.tau_ij_nowhere_dense(pt, a, (1, 2))
    assert not bsp.tau_ij_nowhere_dense(pt, pt.full, (1, 2))


def test_tau_ij_remote_modes_agree():
    pt = make_pt()
    for amask in range(pt.full + 1):
        for pair in ((1, 2), (2, 1)):
            assert bsp.tau_ij_remote(pt, amask, pair) == \
                bsp.tau_ij_remote(pt, amask, pair, "characterization")
    assert bsp.tau_ij_remote(pt, 0, (1, 2))


def test_to_bilocale_matches_fixture():
    from biloc.fixtures import pt as fixture_pt
    space_b = bsp.to_bilocale(make_pt())
    fb = fixture_pt()
    assert space_b.total.is_isomorphic(fb.total)
    assert len(space_b.part_elements(1)) == len(fb.part_elements(1))
    assert len(space_b.part_elements(2)) == len(fb.part_elements(2))


def test_indiscrete_to_bilocale():
    ind = bsp.build_bispace(["x", "y"], [], [])
    b = bsp.to_bilocale(ind)
    assert b.total.n == 2
    assert b.part_mask(1) == b.part_mask(2) == b.total.full_mask


def test_conservativity_pt():
    rep = bsp.conservativity_check(make_pt())
    assert rep.ok and not rep.skipped
    assert rep.checks_run > 90


def test_conservativity_skip_notice():
    ind = bsp.build_bispace(["x", "y"], [], [])
    rep = bsp.conservativity_check(ind)
    assert rep.skipped
    assert "sup-T_D" in rep.reason
    assert rep.ok


def test_bullet_identity_runs_without_td():
    ind = bsp.build_bispace(["x", "y"], [], [])
    rep = bsp.conservativity_check(ind)
    # the bullet identity needs no separation axiom and still runs
    assert rep.checks_run > 0


def test_point_membership():
    pt = make_pt()
    for amask in range(pt.full + 1):
        ind = bsp.induced_sublocale(pt, amask)
        for x in range(pt.n):
            elt = bsp.point_sublocale_element(pt, x)
            assert bool((amask >> x) & 1) == (elt in ind)
