import pytest

from biloc import maps as mp
from biloc.errors import (AdjointNotFrameHom, NotMeetPreserving,
                          PartViolation)
from biloc.fixtures import c2
from biloc.sublocales import Sublocale


def test_identity_adjoint(c3):
    f = mp.localic_map(c3, c3, range(c3.n), name="id")
    assert f.adjoint == tuple(range(c3.n))
    assert mp.is_weakly_closed(f)


def test_inclusion_adjoint_collapses(c3):
    two = c2()
    inc = mp.localic_map(two, c3, [c3.index("0"), c3.index("1")])
    # h(m) must be the top of the two-element source
    assert inc.adjoint[c3.index("m")] == two.top


def test_swap_is_not_meet_preserving(c3):
    table = [c3.index("m"), c3.index("0"), c3.index("1")]
    with pytest.raises(NotMeetPreserving):
        mp.localic_map(c3, c3, table)


def test_adjoint_frame_hom_violation(b4):
    # meet-preserving map (bottom moves up) whose adjoint misses the top
    from biloc.fixtures import c3 as make_c3
    chain = make_c3()
    m = chain.index("m")
    table = [m, m, chain.top, chain.top]
    with pytest.raises(AdjointNotFrameHom):
        mp.localic_map(b4, chain, table)


def test_rmt_object_carriers(c3_sym, b4_sym):
    w, index = mp.rmt_object(c3_sym, (1, 2), "strong")
    assert sorted(index) == [c3_sym.total.top]
    w, index = mp.rmt_object(b4_sym, (1, 2), "weak")
    assert sorted(index) == list(range(4))


def test_part_violation(pt):
    # identity between the same frame with swapped parts breaks part one
    import biloc.bilocales as bload
    swapped = bload.validate_bilocale(pt.total, pt.part_mask(2),
                                      pt.part_mask(1), name="PTswap")
    with pytest.raises(PartViolation):
        mp.bilocalic_map(pt, swapped, range(pt.total.n))


def test_image_preimage_identities(pt):
    lat = pt.total
    f = mp.localic_map(lat, lat, range(lat.n), name="id")
    for m in (lat.up[2], lat.open_masks[1], lat.bool_mask):
        s = Sublocale(lat, m)
        assert mp.image_sublocale(f, s).mask == m
        assert mp.preimage_sublocale(f, s).mask == m
    for x in range(lat.n):
        assert mp.preimage_sublocale(f, Sublocale(lat, lat.up[x])).mask == \
            lat.up[f.adjoint[x]]


def test_quotient_map_preimages(c3):
    # the closure surjection onto the up-set of m, then included back
    m = c3.index("m")
    table = [c3.join_of(x, m) for x in range(c3.n)]
    f = mp.localic_map(c3, c3, table, name="vee_m")
    for x in range(c3.n):
        assert mp.preimage_sublocale(f, Sublocale(c3, c3.up[x])).mask == \
            c3.up[f.adjoint[x]]
        assert mp.preimage_sublocale(f, Sublocale(c3, c3.open_masks[x])).mask \
            == c3.open_masks[f.adjoint[x]]


def test_enumerate_localic_maps_c3(c3):
    maps = mp.enumerate_localic_maps(c3, c3)
    tables = [f.table for f in maps]
    assert tuple(range(3)) in tables
    assert len(tables) == 3
    for f in maps:
        w = mp._frame_hom_witness(f.adjoint, c3, c3)
        assert w is None


def test_enumerate_bilocalic_maps(c3_sym):
    maps = mp.enumerate_bilocalic_maps(c3_sym, c3_sym)
    assert len(maps) == 3


def test_rem_map_examples(pt, b4_sym):
    ident = mp.bilocalic_map(pt, pt, range(pt.total.n), name="id")
    for variant in ("weak", "strong"):
        assert mp.is_rem_map(ident, (1, 2), variant)
    # anything into a Boolean target is a Rem-map
    for f in mp.enumerate_bilocalic_maps(b4_sym, b4_sym):
        assert mp.is_rem_map(f, (1, 2), "weak")


def test_check_preservation_identity(pt):
    ident = mp.bilocalic_map(pt, pt, range(pt.total.n), name="id")
    for pair in ((1, 2), (2, 1)):
        rep = mp.check_preservation(ident, pair)
        assert rep.ok
        assert rep.entries["sends_dense_to_dense"]


def test_category_laws_identity_diagram(pt):
    ident = mp.bilocalic_map(pt, pt, range(pt.total.n), name="id")
    for law in ("functor", "naturality"):
        rep = mp.verify_category_laws([pt], [ident], law, (1, 2), "weak")
        assert rep.ok


def test_comonad_and_coreflection_on_b4(b4_sym):
    ident = mp.bilocalic_map(b4_sym, b4_sym, range(4), name="id")
    rep = mp.verify_category_laws([b4_sym], [ident], "comonad", (1, 2), "weak")
    assert rep.ok
    rep = mp.verify_category_laws([b4_sym], [ident], "coreflection",
                                  (1, 2), "weak")
    assert rep.ok
    assert rep.entries == [("unique factorization of id", True)]


def test_coreflection_all_b4_endomaps(b4_sym):
    # every bilocalic endomap of the Boolean square is a Rem-map and must
    # factor uniquely through the (trivial) coreflection
    maps = [f for f in mp.enumerate_bilocalic_maps(b4_sym, b4_sym)
            if mp.is_rem_map(f, (1, 2), "weak")]
    assert len(maps) > 1
    rep = mp.verify_category_laws([b4_sym], maps, "coreflection",
                                  (1, 2), "weak")
    assert rep.ok


def test_coreflection_into_nontrivial_target(p1_sym, c3_sym):
    # the symmetric chain has strong Rmt = O, which is remote; the only
    # Rem-map from a Boolean source lands in the top and factors uniquely
    maps = [f for f in mp.enumerate_bilocalic_maps(p1_sym, c3_sym)
            if mp.is_rem_map(f, (1, 2), "strong")]
    assert len(maps) == 1
    rep = mp.verify_category_laws([c3_sym], maps, "coreflection",
                                  (1, 2), "strong")
    assert rep.ok


def test_restriction_hypotheses(pt):
    ident = mp.bilocalic_map(pt, pt, range(pt.total.n), name="id")
    assert mp.is_weakly_closed(ident.base)
    for pair in ((1, 2), (2, 1)):
        assert mp.adjoint_preserves_dense(ident, pair)
        assert mp.adjoint_preserves_dense(ident, pair, complemented_only=True)


def test_weakly_closed_point_source(p1, c3):
    # the frame-hom direction lands in the one-point frame: vacuously
    # weakly closed
    f = mp.localic_map(p1, c3, [c3.top], name="point")
    assert mp.is_weakly_closed(f)
