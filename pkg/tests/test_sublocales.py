import pytest

from biloc import sublocales as sl
from biloc.errors import MixedParents, TooLarge
from biloc.sublocales import Sublocale

from conftest import mask_of


def test_is_sublocale_examples(c3):
    assert sl.is_sublocale(c3, mask_of(c3, ["m", "1"]))
    assert not sl.is_sublocale(c3, mask_of(c3, ["0", "m"]))
    assert sl.is_sublocale(c3, mask_of(c3, ["1"]))


def test_violation_witnesses(c3, b4):
    kind, witness = sl.sublocale_violation(c3, mask_of(c3, ["0", "m"]))
    assert kind == "top-missing"
    # {0,1} in B4 is meet-closed but fails the Heyting condition
    kind, witness = sl.sublocale_violation(b4, mask_of(b4, ["0", "1"]))
    assert kind == "heyting"
    assert sl.sublocale_violation(b4, 0) == ("empty", ())


def test_closed_open_examples(pt_lat):
    cbc = sl.closed_sublocale(pt_lat, pt_lat.index("bc"))
    assert cbc.labels == ["bc", "1"]
    oa = sl.open_sublocale(pt_lat, pt_lat.index("a"))
    assert oa.labels == ["bc", "1"]
    assert sl.closed_sublocale(pt_lat, pt_lat.bottom).is_whole()
    assert sl.open_sublocale(pt_lat, pt_lat.bottom).is_void()


def test_b_of_examples(c3, b4):
    assert sl.b_of(c3, c3.bottom).labels == ["0", "1"]
    assert sl.b_of(c3, c3.top).is_void()
    assert sl.b_of(b4, b4.index("p")).labels == ["p", "1"]


def test_nu_examples(c3, pt_lat):
    s = Sublocale(c3, mask_of(c3, ["0", "1"]))
    assert sl.nu(s, c3.index("m")) == c3.top
    assert sl.nu(s, c3.top) == c3.top
    up_bc = sl.closed_sublocale(pt_lat, pt_lat.index("bc"))
    assert sl.nu(up_bc, pt_lat.index("b")) == pt_lat.index("bc")


def test_closure_interior_examples(c3, pt_lat):
    s = Sublocale(c3, mask_of(c3, ["m", "1"]))
    assert sl.closure(s).mask == s.mask
    up_b = sl.closed_sublocale(pt_lat, pt_lat.index("b"))
    assert sl.interior(up_b).labels == ["bc", "1"]
    assert sl.closure(sl.void(c3)).is_void()
    assert sl.interior(sl.whole(c3)).is_whole()


def test_booleanization_examples(c3, b4, pt_lat):
    assert sl.booleanization(pt_lat).labels == ["0", "a", "bc", "1"]
    assert sl.booleanization(c3).labels == ["0", "1"]
    assert sl.booleanization(b4).is_whole()


def test_join_meet_examples(c3, pt_lat):
    o = sl.void(c3)
    s = Sublocale(c3, mask_of(c3, ["m", "1"]))
    t = Sublocale(c3, mask_of(c3, ["0", "1"]))
    assert sl.join_sublocales([o, s]).mask == s.mask
    assert sl.join_sublocales([s, t]).is_whole()
    a = pt_lat.index("a")
    meet = sl.meet_sublocales([sl.closed_sublocale(pt_lat, a),
                               sl.open_sublocale(pt_lat, a)])
    assert meet.is_void()


def test_mixed_parents_rejected(c3, b4):
    with pytest.raises(MixedParents):
        sl.join_sublocales([sl.void(c3), sl.void(b4)])
    with pytest.raises(MixedParents):
        sl.meet_sublocales([sl.void(c3), sl.void(b4)])


def test_supplement_examples(c3, pt_lat):
    for a in range(pt_lat.n):
        supp = sl.supplement(pt_lat, sl.closed_sublocale(pt_lat, a))
        assert supp.mask == pt_lat.open_masks[a]
    assert sl.supplement(c3, Sublocale(c3, mask_of(c3, ["0", "1"]))).labels == \
        ["m", "1"]
    assert sl.supplement(c3, sl.void(c3)).is_whole()


def test_density_examples(c3, b4, pt_lat):
    assert sl.is_nowhere_dense(c3, Sublocale(c3, mask_of(c3, ["m", "1"])))
    for s in sl.enumerate_sublocales(b4):
        assert sl.is_nowhere_dense(b4, s) == s.is_void()
    assert sl.is_dense_sub(pt_lat, sl.booleanization(pt_lat))


def test_enumerate_examples(c3, p1, b4):
    assert len(sl.enumerate_sublocales(c3)) == 4
    assert [s.labels for s in sl.enumerate_sublocales(p1)] == [["0"]]
    gen = sl.enumerate_sublocales(b4, "generated")
    brute = sl.enumerate_sublocales(b4, "brute")
    assert [s.mask for s in gen] == [s.mask for s in brute]
    assert len(gen) == 4


def test_brute_cap():
    from biloc.lattice import build_lattice
    labels = [f"e{i}" for i in range(13)]
    pairs = [(f"e{i}", f"e{i + 1}") for i in range(12)]
    lat = build_lattice(labels, pairs)
    with pytest.raises(TooLarge):
        sl.enumerate_sublocales(lat, "brute")


def test_clopen_examples(c3, pt_lat):
    assert sl.is_clopen_sublocale(
        pt_lat, sl.closed_sublocale(pt_lat, pt_lat.index("bc")))
    assert not sl.is_clopen_sublocale(
        c3, Sublocale(c3, mask_of(c3, ["m", "1"])))
    assert sl.is_clopen_sublocale(c3, sl.void(c3))
    assert sl.is_clopen_sublocale(c3, sl.whole(c3))


def test_outputs_are_sublocales(pt_lat):
    lat = pt_lat
    for a in range(lat.n):
        for mask in (lat.up[a], lat.open_masks[a], lat.b_masks[a]):
            assert sl.is_sublocale(lat, mask)
    assert sl.is_sublocale(lat, lat.bool_mask)


def test_every_sublocale_join_of_principals(pt_lat):
    subs = sl.enumerate_sublocales(pt_lat)
    for s in subs:
        parts = [sl.b_of(pt_lat, x) for x in s.members]
        assert sl.join_sublocales(parts).mask == s.mask


def test_remote_plain(c3, b4):
    assert not sl.is_remote_plain(c3, c3.full_mask)
    assert sl.is_remote_plain(c3, c3.bool_mask)
    assert sl.is_remote_plain(b4, b4.full_mask)
