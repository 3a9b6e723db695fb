from biloc import bilocales as bl
from biloc import constructions as con
from biloc.bilocales import PAIRS, VARIANTS
from biloc.fixtures import b4, c3, p1, pt


def test_congruence_c3_is_boolean_square():
    cb = con.congruence_bilocale(c3())
    assert cb.total.n == 4
    assert cb.total.is_isomorphic(b4())


def test_congruence_p1_trivial():
    cb = con.congruence_bilocale(p1())
    assert cb.total.n == 1


def test_congruence_rmt_everything():
    for lat in (c3(), b4(), pt().total):
        cb = con.congruence_bilocale(lat)
        for pair in PAIRS:
            for variant in VARIANTS:
                assert bl.rmt_mask(cb, pair, variant) == cb.total.full_mask


def test_congruence_kernel_bijection_c3():
    cb = con.congruence_bilocale(c3())
    model = con.congruence_model(cb)
    assert len(set(model.relations)) == len(model.sublocale_masks) == 4
    # order-reversal: bigger sublocale, finer congruence
    masks = model.sublocale_masks
    for a, ma in enumerate(masks):
        for b, mb in enumerate(masks):
            assert (ma & ~mb == 0) == cb.total.leq(b, a)


def test_nabla_delta_complements():
    cb = con.congruence_bilocale(pt().total)
    model = con.congruence_model(cb)
    clat = cb.total
    for a in range(model.lattice.n):
        na, da = model.nabla[a], model.delta[a]
        assert clat.meet_of(na, da) == clat.bottom
        assert clat.join_of(na, da) == clat.top


def test_ideal_bilocale_shapes():
    b = pt()
    jb = con.ideal_bilocale(b)
    assert jb.total.n == b.total.n
    assert jb.total.is_isomorphic(b.total)
    assert len(jb.part_elements(1)) == len(b.part_elements(1))
    assert len(jb.part_elements(2)) == len(b.part_elements(2))
    assert jb.total.names[0].startswith("down_")


def test_ideal_c3_three_principal():
    jb = con.ideal_bilocale(bl.symmetric_bilocale(c3()))
    assert jb.total.n == 3
    assert sorted(con.all_ideal_masks(c3())) == \
        sorted(con.ideal_model(jb).ideal_masks)


def test_ideal_p1():
    jb = con.ideal_bilocale(bl.symmetric_bilocale(p1()))
    assert jb.total.n == 1


def test_construction_theorems_fixtures():
    for b in (pt(), bl.symmetric_bilocale(c3()), bl.symmetric_bilocale(b4())):
        rep = con.check_construction_theorems(b)
        assert rep.ok, rep.violations


def test_noetherian_sides_computed_independently():
    b = pt()
    jb = con.ideal_bilocale(b)
    assert bl.rmt_mask(b, (1, 2), "weak") != b.total.full_mask
    assert bl.rmt_mask(jb, (1, 2), "weak") != jb.total.full_mask
    b4s = bl.symmetric_bilocale(b4())
    assert bl.rmt_mask(b4s, (1, 2), "weak") == b4s.total.full_mask
    assert bl.rmt_mask(con.ideal_bilocale(b4s), (1, 2), "weak") == \
        con.ideal_bilocale(b4s).total.full_mask
