import pytest

from biloc import bilocales as bl
from biloc import sublocales as sl
from biloc.errors import GenerationFails, NotASubframe, NotInPart
from biloc.sublocales import Sublocale

from conftest import mask_of


def test_validate_pt(pt):
    assert pt.part(1).labels == ["0", "a", "bc", "1"]
    assert pt.part(2).labels == ["0", "b", "1"]


def test_symmetric_always_valid(c3):
    b = bl.symmetric_bilocale(c3)
    assert b.part_mask(1) == c3.full_mask


def test_generation_fails_witness(c3):
    small = mask_of(c3, ["0", "1"])
    with pytest.raises(GenerationFails) as err:
        bl.validate_bilocale(c3, small, small)
    assert err.value.witness == "m"


def test_not_a_subframe(pt_lat):
    bad = mask_of(pt_lat, ["0", "a", "b", "1"])   # misses a v b = ab
    with pytest.raises(NotASubframe):
        bl.validate_bilocale(pt_lat, bad, pt_lat.full_mask)


def test_bullet_examples(pt):
    lat = pt.total
    assert bl.bullet(pt, lat.index("a"), 1) == lat.index("b")
    assert bl.bullet(pt, lat.index("bc"), 1) == lat.bottom
    for owner in (1, 2):
        assert bl.bullet(pt, lat.bottom, owner) == lat.top
    with pytest.raises(NotInPart):
        bl.bullet(pt, lat.index("b"), 1)


def test_cl_int_examples(pt):
    lat = pt.total
    a_tilde = Sublocale(lat, mask_of(lat, ["bc", "1"]))
    assert bl.cl_index(pt, a_tilde, 1).mask == a_tilde.mask
    cbc = sl.closed_sublocale(lat, lat.index("bc"))
    assert bl.int_index(pt, cbc, 2).is_void()
    assert bl.cl_index(pt, sl.whole(lat), 1).is_whole()
    assert bl.int_index(pt, sl.void(lat), 1).is_void()


def test_index_dense_elements(pt):
    lat = pt.total
    assert bl.is_index_dense_element(pt, lat.index("bc"), 1)
    assert not bl.is_index_dense_element(pt, lat.index("a"), 1)
    for owner in (1, 2):
        assert bl.is_index_dense_element(pt, lat.top, owner)


def test_index_dense_sublocales(pt):
    lat = pt.total
    assert bl.is_index_dense_sublocale(pt, sl.whole(lat), 1)
    assert not bl.is_index_dense_sublocale(pt, sl.void(lat), 1)
    # o(bc) = c(a) has 1-closure c(a), not everything
    assert not bl.is_index_dense_sublocale(
        pt, sl.open_sublocale(lat, lat.index("bc")), 1)


@pytest.mark.parametrize("mode", ["definition", "element", "closure"])
def test_nowhere_dense_examples(pt, mode):
    lat = pt.total
    a_tilde = Sublocale(lat, mask_of(lat, ["bc", "1"]))
    assert bl.is_ij_nowhere_dense(pt, a_tilde, (1, 2), mode)
    assert bl.is_ij_nowhere_dense(pt, sl.void(lat), (1, 2), mode)
    assert bl.is_ij_nowhere_dense(pt, sl.void(lat), (2, 1), mode)


def test_remote_examples(pt, c3_sym):
    lat = pt.total
    ca = sl.closed_sublocale(lat, lat.index("a"))
    for mode in ("definition", "characterization", "oracle"):
        assert bl.is_ij_remote(pt, ca, (1, 2), weak=False, mode=mode)
        assert bl.is_ij_remote(pt, sl.void(lat), (1, 2), weak=False, mode=mode)
    whole = sl.whole(c3_sym.total)
    assert not bl.is_ij_remote(c3_sym, whole, (1, 2), weak=False)
    assert bl.is_ij_remote(c3_sym, whole, (1, 2), weak=True)


def test_largest_remote_examples(pt, c3_sym, b4_sym):
    assert bl.largest_ij_remote(b4_sym, (1, 2)).is_whole()
    assert bl.largest_ij_remote(c3_sym, (1, 2)).mask == c3_sym.total.bool_mask
    big = bl.largest_ij_remote(pt, (1, 2))
    ca = pt.total.up[pt.total.index("a")]
    assert ca & ~big.mask == 0


def test_rmt_examples(pt, c3_sym, b4_sym):
    lat = pt.total
    assert bl.rmt(pt, (1, 2), "weak").labels == ["a", "ab", "1"]
    assert bl.rmt(pt, (1, 2), "weak").mask == lat.up[lat.index("a")]
    for variant in ("weak", "strong"):
        assert bl.rmt(b4_sym, (1, 2), variant).is_whole()
    assert bl.rmt(c3_sym, (1, 2), "weak").is_whole()
    assert bl.rmt(c3_sym, (1, 2), "strong").is_void()


def test_classify_examples(pt, c3_sym, b4_sym):
    f = bl.classify_bilocale(pt)
    assert (f.balanced, f.symmetric, f.boolean) == (False, False, False)
    f = bl.classify_bilocale(c3_sym)
    assert (f.balanced, f.symmetric, f.boolean) == (True, True, False)
    f = bl.classify_bilocale(b4_sym)
    assert (f.balanced, f.symmetric, f.boolean) == (True, True, True)


def test_ij_clopen_is_part_sensitive(pt):
    lat = pt.total
    cbc = lat.up[lat.index("bc")]
    assert bl.is_ij_clopen(pt, cbc, (1, 2))      # bc lives in part 1
    assert not bl.is_ij_clopen(pt, cbc, (2, 1))  # but not in part 2
    assert sl.is_clopen_sublocale(lat, Sublocale(lat, cbc))


def test_nd_family_pt(pt):
    lat = pt.total
    masks = bl.nd_masks(pt, (1, 2))
    labels = [Sublocale(lat, m).labels for m in masks]
    assert ["bc", "1"] in labels and ["1"] in labels and len(masks) == 2
    assert bl.nd_masks(pt, (1, 2), clopen=True) == masks


def test_dense_part_elements(pt):
    lat = pt.total
    assert [lat.names[x] for x in bl.dense_part_elements(pt, (1, 2))] == \
        ["bc", "1"]
    assert [lat.names[x]
            for x in bl.dense_part_elements(pt, (1, 2), True)] == ["bc", "1"]
    assert [lat.names[x] for x in bl.dense_part_elements(pt, (2, 1))] == ["1"]


def test_pair_validation(pt):
    with pytest.raises(ValueError):
        bl.check_pair((1, 1))
    with pytest.raises(ValueError):
        bl.bullet(pt, 0, 3)


def test_weak_theory_counterexample_structure(pt_lat):
    """The six-element bilocale separating part-free clopenness from the
    complemented dense generators (the reason clopenness is indexed)."""
    part1 = mask_of(pt_lat, ["0", "bc", "1"])
    part2 = mask_of(pt_lat, ["0", "a", "b", "ab", "1"])
    b = bl.validate_bilocale(pt_lat, part1, part2, name="PTswap")
    pair = (2, 1)
    cbc = pt_lat.up[pt_lat.index("bc")]
    assert sl.is_clopen_sublocale(pt_lat, Sublocale(pt_lat, cbc))
    assert bl.nowhere_dense_mask(b, cbc, pair)
    assert not bl.is_ij_clopen(b, cbc, pair)
    dense = bl.dense_part_elements(b, pair, complemented_only=True)
    assert [pt_lat.names[x] for x in dense] == ["1"]
