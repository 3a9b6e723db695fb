"""The executable check registry.

Every structural law the workbench cares about is registered here as a
named, deterministic evaluator with witness extraction.  Checks are
scoped to the kind of structure they consume (lattice, bilocale,
bispace, map, diagram); hypothesis-scoped checks (balanced-only,
symmetric-only, sup-T_D-only, ...) skip with a reason instead of
passing vacuously.  A handful of checks are registered expected-fail:
they encode statements that are provably false under the weak reading
of Rmt, and the sweep asserts that they do fail.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import bilocales as bl
from .. import bispaces as bsp
from .. import constructions as con
from .. import kernel
from .. import maps as mp
from .. import sublocales as sl
from ..bilocales import PAIRS, VARIANTS
from ..errors import UnknownCheckId
from ..lattice import popcount
from ..sublocales import Sublocale, _sublocale_masks

JOIN_SAMPLE_CAP = 64
CONSTRUCTION_SUBLOCALE_CAP = 64


@dataclass(frozen=True)
class PropertyCheck:
    id: str
    scope: str
    doc: str
    expected_fail: bool = False
    evaluator: object = None


@dataclass
class CheckOutcome:
    verdict: str              # "pass" | "fail" | "skip"
    witness: str = ""
    reason: str = ""


CHECKS: dict[str, PropertyCheck] = {}


def check(check_id, scope, doc, expected_fail=False):
    def wrap(fn):
        CHECKS[check_id] = PropertyCheck(check_id, scope, doc, expected_fail, fn)
        return fn
    return wrap


def checks_for_scope(scope):
    return [c for c in CHECKS.values() if c.scope == scope]


def get_check(check_id):
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownCheckId(check_id) from None


def _ok():
    return CheckOutcome("pass")


def _fail(witness):
    return CheckOutcome("fail", witness=witness)


def _skip(reason):
    return CheckOutcome("skip", reason=reason)


def _verdict(cond, witness):
    return _ok() if cond else _fail(witness)


def _set(lat, mask):
    return "{%s}" % ",".join(lat.names[i] for i in kernel.bit_indices(mask))


def _pair_tag(pair):
    return f"(i,j)=({pair[0]},{pair[1]})"


def _require_frame(lat):
    return None if lat.is_frame else _skip("not a frame")


# =====================================================================
# lattice scope
# =====================================================================

@check("law_frame", "lattice",
       "binary meets distribute over binary joins on every triple")
def _law_frame(lat):
    w = lat.frame_witness
    return _verdict(w is None,
                    "" if w is None else ",".join(lat.names[i] for i in w))


@check("inv_tables_glb_lub", "lattice",
       "meet/join tables agree with a direct glb/lub search over the order")
def _tables_oracle(lat):
    for a in range(lat.n):
        for b in range(lat.n):
            lows = lat.down[a] & lat.down[b]
            m = lat.meet_of(a, b)
            if not (lows >> m) & 1 or lows & ~lat.down[m]:
                return _fail(f"meet({lat.names[a]},{lat.names[b]})")
            highs = lat.up[a] & lat.up[b]
            j = lat.join_of(a, b)
            if not (highs >> j) & 1 or highs & ~lat.up[j]:
                return _fail(f"join({lat.names[a]},{lat.names[b]})")
    return _ok()


@check("inv_heyting_adjunction", "lattice",
       "c <= (a -> b) exactly when c & a <= b, for all triples")
def _heyting_adjunction(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for a in range(lat.n):
        for b in range(lat.n):
            h = lat.heyting_of(a, b)
            for c in range(lat.n):
                if lat.leq(c, h) != lat.leq(lat.meet_of(c, a), b):
                    return _fail(f"a={lat.names[a]} b={lat.names[b]} c={lat.names[c]}")
    return _ok()


@check("inv_pc_antitone", "lattice",
       "pseudocomplement reverses order: a <= b forces b* <= a*")
def _pc_antitone(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for a in range(lat.n):
        for b in kernel.bit_indices(lat.up[a]):
            if not lat.leq(lat.star_of(b), lat.star_of(a)):
                return _fail(f"a={lat.names[a]} b={lat.names[b]}")
    return _ok()


@check("inv_pc_double_neg", "lattice", "a sits below its double pseudocomplement")
def _pc_double_neg(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for a in range(lat.n):
        if not lat.leq(a, lat.star_of(lat.star_of(a))):
            return _fail(f"a={lat.names[a]}")
    return _ok()


@check("sub_outputs_valid", "lattice",
       "closed/open/principal/Booleanization/supplement/join outputs are sublocales")
def _sub_outputs_valid(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for a in range(lat.n):
        for mask, tag in ((lat.up[a], "c"), (lat.open_masks[a], "o"),
                          (lat.b_masks[a], "b")):
            if sl.sublocale_violation(lat, mask):
                return _fail(f"{tag}({lat.names[a]})")
    if sl.sublocale_violation(lat, lat.bool_mask):
        return _fail("booleanization")
    masks = _sublocale_masks(lat)
    for m in masks:
        supp = sl.supplement(lat, Sublocale(lat, m)).mask
        if sl.sublocale_violation(lat, supp):
            return _fail(f"supplement of {_set(lat, m)}")
    sample = masks[:JOIN_SAMPLE_CAP]
    for x in sample:
        for y in sample:
            j = kernel.meet_closure(lat.n, lat.meet, x | y)
            if sl.sublocale_violation(lat, j):
                return _fail(f"join of {_set(lat, x)} and {_set(lat, y)}")
    return _ok()


@check("sub_c_o_complements", "lattice",
       "c(a) and o(a) intersect in O and join to the whole lattice")
def _c_o_complements(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    topbit = 1 << lat.top
    for a in range(lat.n):
        c, o = lat.up[a], lat.open_masks[a]
        if c & o != topbit or \
           kernel.meet_closure(lat.n, lat.meet, c | o) != lat.full_mask:
            return _fail(f"a={lat.names[a]}")
    return _ok()


@check("sub_b_of_crosscheck", "lattice",
       "smallest sublocale containing a equals the arrow description {x -> a}")
def _b_of_crosscheck(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for a in range(lat.n):
        try:
            sl.b_of(lat, a)
        except AssertionError:
            return _fail(f"a={lat.names[a]}")
    return _ok()


@check("sub_closure_interior_props", "lattice",
       "closure is inflationary/monotone/idempotent; interior dually")
def _closure_interior(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    masks = _sublocale_masks(lat)
    data = {}
    for m in masks:
        s = Sublocale(lat, m)
        data[m] = (sl.closure(s).mask, sl.interior(s).mask)
    for m in masks:
        cm, im = data[m]
        if m & ~cm or im & ~m:
            return _fail(f"S={_set(lat, m)} not between interior and closure")
        if data[cm][0] != cm or data[im][1] != im:
            return _fail(f"S={_set(lat, m)} idempotence")
        for m2 in masks:
            if m & ~m2 == 0:
                if data[m][0] & ~data[m2][0] or data[m][1] & ~data[m2][1]:
                    return _fail(f"monotone at {_set(lat, m)} <= {_set(lat, m2)}")
    return _ok()


@check("sub_enum_modes_agree", "lattice",
       "generated sublocale enumeration equals brute subset filtering")
def _enum_modes(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    if lat.n > sl.BRUTE_CAP:
        return _skip(f"brute oracle capped at {sl.BRUTE_CAP} elements")
    gen = [s.mask for s in sl.enumerate_sublocales(lat, "generated")]
    brute = [s.mask for s in sl.enumerate_sublocales(lat, "brute")]
    return _verdict(gen == brute,
                    f"generated {len(gen)} vs brute {len(brute)}")


@check("sub_coframe_law", "lattice",
       "sublocale join distributes over intersections on all triples")
def _coframe_law(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    masks = _sublocale_masks(lat)
    join = {}
    for x in masks:
        for y in masks:
            join[x, y] = kernel.meet_closure(lat.n, lat.meet, x | y)
    for a in masks:
        for b in masks:
            for c in masks:
                if join[a, b & c] != join[a, b] & join[a, c]:
                    return _fail(f"A={_set(lat, a)} B={_set(lat, b)} C={_set(lat, c)}")
    return _ok()


@check("sub_dense_iff_contains_bool", "lattice",
       "a sublocale is dense exactly when it contains the Booleanization")
def _dense_iff_bool(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for m in _sublocale_masks(lat):
        s = Sublocale(lat, m)
        if sl.is_dense_sub(lat, s) != (lat.bool_mask & ~m == 0):
            return _fail(_set(lat, m))
    return _ok()


@check("sub_supplement_c_o", "lattice",
       "supplements swap closed and open sublocales and fix O and L")
def _supplement_c_o(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for a in range(lat.n):
        if sl.supplement(lat, Sublocale(lat, lat.up[a])).mask != lat.open_masks[a]:
            return _fail(f"supplement c({lat.names[a]})")
        if sl.supplement(lat, Sublocale(lat, lat.open_masks[a])).mask != lat.up[a]:
            return _fail(f"supplement o({lat.names[a]})")
    if sl.supplement(lat, sl.void(lat)).mask != lat.full_mask or \
       sl.supplement(lat, sl.whole(lat)).mask != 1 << lat.top:
        return _fail("bounds")
    return _ok()


@check("sub_booleanization_least_dense", "lattice",
       "the Booleanization is dense and inside every dense sublocale")
def _bool_least_dense(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    if not sl.is_dense_sub(lat, Sublocale(lat, lat.bool_mask)):
        return _fail("booleanization not dense")
    for m in _sublocale_masks(lat):
        if sl.is_dense_sub(lat, Sublocale(lat, m)) and lat.bool_mask & ~m:
            return _fail(_set(lat, m))
    return _ok()


@check("sub_nu_least", "lattice",
       "nu_S(a) is the least member of S above a and fixes S pointwise")
def _nu_least(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    for m in _sublocale_masks(lat):
        s = Sublocale(lat, m)
        for a in range(lat.n):
            v = sl.nu(s, a)
            above = m & lat.up[a]
            if not (above >> v) & 1 or above & ~lat.up[v]:
                return _fail(f"S={_set(lat, m)} a={lat.names[a]}")
        for a in kernel.bit_indices(m):
            if sl.nu(s, a) != a:
                return _fail(f"S={_set(lat, m)} fixpoint {lat.names[a]}")
    return _ok()


def _congruence_guard(lat):
    skip = _require_frame(lat)
    if skip:
        return skip
    if len(_sublocale_masks(lat)) > CONSTRUCTION_SUBLOCALE_CAP:
        return _skip("congruence lattice beyond the check cap")
    return None


def _congruence_bilocale_cached(lat):
    if "congruence_bilocale" not in lat._cache:
        lat._cache["congruence_bilocale"] = con.congruence_bilocale(lat)
    return lat._cache["congruence_bilocale"]


@check("con_congruence_kernel_bij", "lattice",
       "sublocale kernels are an order-reversing bijection onto the congruences")
def _congruence_bijection(lat):
    skip = _congruence_guard(lat)
    if skip:
        return skip
    cb = _congruence_bilocale_cached(lat)
    model = con.congruence_model(cb)
    masks = model.sublocale_masks
    for a, ma in enumerate(masks):
        for b, mb in enumerate(masks):
            sub_le = ma & ~mb == 0
            theta_le = cb.total.leq(b, a)
            if sub_le != theta_le:
                return _fail(f"S={_set(lat, ma)} T={_set(lat, mb)}")
    return _ok()


@check("con_nabla_delta", "lattice",
       "nabla embeds L preserving meet/join, with delta_a its complement")
def _nabla_delta(lat):
    skip = _congruence_guard(lat)
    if skip:
        return skip
    try:
        cb = _congruence_bilocale_cached(lat)
    except AssertionError as exc:
        return _fail(str(exc))
    model = con.congruence_model(cb)
    clat = cb.total
    nb = model.nabla
    for a in range(lat.n):
        for b in range(lat.n):
            if clat.meet_of(nb[a], nb[b]) != nb[lat.meet_of(a, b)]:
                return _fail(f"nabla meet at {lat.names[a]},{lat.names[b]}")
            if clat.join_of(nb[a], nb[b]) != nb[lat.join_of(a, b)]:
                return _fail(f"nabla join at {lat.names[a]},{lat.names[b]}")
    for a in range(lat.n):
        d = model.delta[a]
        if clat.meet_of(nb[a], d) != clat.bottom or \
           clat.join_of(nb[a], d) != clat.top:
            return _fail(f"delta complement at {lat.names[a]}")
        if not (cb.part_mask(2) >> d) & 1:
            return _fail(f"delta_{lat.names[a]} outside the delta part")
    return _ok()


@check("con_rmt_congruence", "lattice",
       "Rmt of the congruence bilocale is everything (both pairs, both variants)")
def _rmt_congruence(lat):
    skip = _congruence_guard(lat)
    if skip:
        return skip
    cb = _congruence_bilocale_cached(lat)
    for pair in PAIRS:
        for variant in VARIANTS:
            if bl.rmt_mask(cb, pair, variant) != cb.total.full_mask:
                return _fail(f"{_pair_tag(pair)} variant={variant}")
    return _ok()


# =====================================================================
# bilocale scope
# =====================================================================

def _parts_with_bullets(b):
    for i, j in PAIRS:
        yield (i, j), b.part_elements(i), bl._bullet_table(b, i)


@check("prop_pseudo_1", "bilocale", "the bullet of the bottom is the top")
def _pseudo_1(b):
    lat = b.total
    for i in (1, 2):
        if bl.bullet(b, lat.bottom, i) != lat.top:
            return _fail(f"owner={i}")
    return _ok()


@check("prop_pseudo_2", "bilocale", "every part element is disjoint from its bullet")
def _pseudo_2(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        for a in elems:
            if lat.meet_of(a, tab[a]) != lat.bottom:
                return _fail(f"owner={i} a={lat.names[a]}")
    return _ok()


@check("prop_pseudo_3", "bilocale",
       "disjointness from b is the same as sitting below the bullet of b")
def _pseudo_3(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        for bb in elems:
            for a in b.part_elements(j):
                if (lat.meet_of(a, bb) == lat.bottom) != lat.leq(a, tab[bb]):
                    return _fail(f"{_pair_tag((i, j))} a={lat.names[a]} "
                                 f"b={lat.names[bb]}")
    return _ok()


@check("prop_pseudo_4", "bilocale", "the bullet is antitone on each part")
def _pseudo_4(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        for a in elems:
            for bb in elems:
                if lat.leq(a, bb) and not lat.leq(tab[bb], tab[a]):
                    return _fail(f"owner={i} {lat.names[a]}<={lat.names[bb]}")
    return _ok()


@check("prop_pseudo_5", "bilocale", "every part element sits below its double bullet")
def _pseudo_5(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        other = bl._bullet_table(b, j)
        for a in elems:
            if not lat.leq(a, other[tab[a]]):
                return _fail(f"owner={i} a={lat.names[a]}")
    return _ok()


@check("prop_pseudo_6", "bilocale", "triple bullet collapses to single bullet")
def _pseudo_6(b):
    for (i, j), elems, tab in _parts_with_bullets(b):
        other = bl._bullet_table(b, j)
        for a in elems:
            if tab[other[tab[a]]] != tab[a]:
                return _fail(f"owner={i} a={b.total.names[a]}")
    return _ok()


@check("prop_pseudo_7", "bilocale", "bullet of a join is the meet of the bullets")
def _pseudo_7(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        for a in elems:
            for bb in elems:
                if tab[lat.join_of(a, bb)] != lat.meet_of(tab[a], tab[bb]):
                    return _fail(f"owner={i} {lat.names[a]},{lat.names[bb]}")
    return _ok()


@check("prop_int_1", "bilocale",
       "every sublocale sits inside its closure inside its indexed closure")
def _int_1(b):
    lat = b.total
    for m in _sublocale_masks(lat):
        closed = lat.up[lat.meet_mask(m)]
        for i in (1, 2):
            cl = bl.cl_mask(b, m, i)
            if m & ~closed or closed & ~cl:
                return _fail(f"i={i} S={_set(lat, m)}")
    return _ok()


@check("prop_int_2", "bilocale", "indexed closure is monotone")
def _int_2(b):
    lat = b.total
    masks = _sublocale_masks(lat)
    for i in (1, 2):
        cls = {m: bl.cl_mask(b, m, i) for m in masks}
        for s in masks:
            for t in masks:
                if t & ~s == 0 and cls[t] & ~cls[s]:
                    return _fail(f"i={i} T={_set(lat, t)} S={_set(lat, s)}")
    return _ok()


@check("prop_int_3", "bilocale", "indexed closure is idempotent")
def _int_3(b):
    lat = b.total
    for m in _sublocale_masks(lat):
        for i in (1, 2):
            c = bl.cl_mask(b, m, i)
            if bl.cl_mask(b, c, i) != c:
                return _fail(f"i={i} S={_set(lat, m)}")
    return _ok()


@check("prop_int_4", "bilocale",
       "closed sublocales of part elements are their own indexed closures")
def _int_4(b):
    lat = b.total
    for i in (1, 2):
        for a in b.part_elements(i):
            if bl.cl_mask(b, lat.up[a], i) != lat.up[a]:
                return _fail(f"i={i} a={lat.names[a]}")
    return _ok()


@check("prop_int_5", "bilocale",
       "indexed interior agrees with the join of the opens it contains")
def _int_5(b):
    lat = b.total
    for m in _sublocale_masks(lat):
        for i in (1, 2):
            direct = bl.int_mask(b, m, i)
            acc = 1 << lat.top
            for a in b.part_elements(i):
                if lat.open_masks[a] & ~m == 0:
                    acc = kernel.meet_closure(lat.n, lat.meet,
                                              acc | lat.open_masks[a])
            if direct != acc:
                return _fail(f"i={i} S={_set(lat, m)}")
    return _ok()


@check("prop_int_6", "bilocale",
       "indexed interior sits inside the plain interior inside the sublocale")
def _int_6(b):
    lat = b.total
    for m in _sublocale_masks(lat):
        plain = sl.interior(Sublocale(lat, m)).mask
        for i in (1, 2):
            im = bl.int_mask(b, m, i)
            if im & ~plain or plain & ~m:
                return _fail(f"i={i} S={_set(lat, m)}")
    return _ok()


@check("prop_int_7", "bilocale", "indexed interior is monotone")
def _int_7(b):
    lat = b.total
    masks = _sublocale_masks(lat)
    for i in (1, 2):
        ints = {m: bl.int_mask(b, m, i) for m in masks}
        for s in masks:
            for t in masks:
                if t & ~s == 0 and ints[t] & ~ints[s]:
                    return _fail(f"i={i} T={_set(lat, t)} S={_set(lat, s)}")
    return _ok()


@check("prop_int_8", "bilocale", "indexed interior is idempotent")
def _int_8(b):
    lat = b.total
    for m in _sublocale_masks(lat):
        for i in (1, 2):
            im = bl.int_mask(b, m, i)
            if bl.int_mask(b, im, i) != im:
                return _fail(f"i={i} S={_set(lat, m)}")
    return _ok()


@check("prop_int_9", "bilocale",
       "open sublocales of part elements are their own indexed interiors")
def _int_9(b):
    lat = b.total
    for i in (1, 2):
        for a in b.part_elements(i):
            if bl.int_mask(b, lat.open_masks[a], i) != lat.open_masks[a]:
                return _fail(f"i={i} a={lat.names[a]}")
    return _ok()


@check("prop_int_10", "bilocale",
       "the closed sublocale of a bullet is the opposite closure of the open")
def _int_10(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        for a in elems:
            if lat.up[tab[a]] != bl.cl_mask(b, lat.open_masks[a], j):
                return _fail(f"{_pair_tag((i, j))} a={lat.names[a]}")
    return _ok()


@check("prop_int_11", "bilocale",
       "the open sublocale of a bullet is the opposite interior of the closed")
def _int_11(b):
    lat = b.total
    for (i, j), elems, tab in _parts_with_bullets(b):
        for a in elems:
            if lat.open_masks[tab[a]] != bl.int_mask(b, lat.up[a], j):
                return _fail(f"{_pair_tag((i, j))} a={lat.names[a]}")
    return _ok()


@check("prop_int_12", "bilocale",
       "opposite closure of an open is the supplement of the opposite interior")
def _int_12(b):
    lat = b.total
    for (i, j), elems, _ in _parts_with_bullets(b):
        for a in elems:
            lhs = bl.cl_mask(b, lat.open_masks[a], j)
            rhs = sl.supplement(
                lat, Sublocale(lat, bl.int_mask(b, lat.up[a], j))).mask
            if lhs != rhs:
                return _fail(f"{_pair_tag((i, j))} a={lat.names[a]}")
    return _ok()


@check("prop_int_13", "bilocale",
       "opposite interior of a closed is the supplement of the opposite closure")
def _int_13(b):
    lat = b.total
    for (i, j), elems, _ in _parts_with_bullets(b):
        for a in elems:
            lhs = bl.int_mask(b, lat.up[a], j)
            rhs = sl.supplement(
                lat, Sublocale(lat, bl.cl_mask(b, lat.open_masks[a], j))).mask
            if lhs != rhs:
                return _fail(f"{_pair_tag((i, j))} a={lat.names[a]}")
    return _ok()


@check("prop_int_14", "bilocale",
       "supplement of the indexed interior of an open is the indexed closure "
       "of the closed, for every element")
def _int_14(b):
    lat = b.total
    for a in range(lat.n):
        for i in (1, 2):
            lhs = sl.supplement(
                lat, Sublocale(lat, bl.int_mask(b, lat.open_masks[a], i))).mask
            if lhs != bl.cl_mask(b, lat.up[a], i):
                return _fail(f"i={i} a={lat.names[a]}")
    return _ok()


@check("prop_int_15", "bilocale",
       "supplement of the indexed closure of a closed is the indexed interior "
       "of the open, for every element")
def _int_15(b):
    lat = b.total
    for a in range(lat.n):
        for i in (1, 2):
            lhs = sl.supplement(
                lat, Sublocale(lat, bl.cl_mask(b, lat.up[a], i))).mask
            if lhs != bl.int_mask(b, lat.open_masks[a], i):
                return _fail(f"i={i} a={lat.names[a]}")
    return _ok()


@check("prop_bullet", "bilocale",
       "the three characterizations of dense part elements coincide")
def _prop_bullet(b):
    lat = b.total
    for (i, j) in PAIRS:
        for x in b.part_elements(j):
            c1 = bl.bullet(b, x, j) == lat.bottom
            c2 = bl.cl_mask(b, lat.open_masks[x], i) == lat.full_mask
            c3 = all(a == lat.bottom for a in b.part_elements(i)
                     if lat.meet_of(a, x) == lat.bottom)
            if not c1 == c2 == c3:
                return _fail(f"{_pair_tag((i, j))} x={lat.names[x]}")
    return _ok()


@check("obs_dense_implies_idense", "bilocale",
       "part elements dense in the total are dense for the opposite part")
def _dense_implies_idense(b):
    lat = b.total
    for (i, j) in PAIRS:
        for x in b.part_elements(j):
            if lat.star_of(x) == lat.bottom and \
               bl.bullet(b, x, j) != lat.bottom:
                return _fail(f"{_pair_tag((i, j))} x={lat.names[x]}")
    return _ok()


@check("lem_ijndsubset", "bilocale",
       "sublocales of nowhere dense sublocales are nowhere dense")
def _ijndsubset(b):
    lat = b.total
    masks = _sublocale_masks(lat)
    for pair in PAIRS:
        nd = set(bl.nd_masks(b, pair))
        for s in nd:
            for t in masks:
                if t & ~s == 0 and t not in nd:
                    return _fail(f"{_pair_tag(pair)} T={_set(lat, t)} inside "
                                 f"S={_set(lat, s)}")
    return _ok()


@check("thm_ijnd", "bilocale",
       "the six characterizations of nowhere density coincide")
def _thm_ijnd(b):
    lat = b.total
    for pair in PAIRS:
        i, j = pair
        for m in _sublocale_masks(lat):
            x = bl.cl_element(b, m, i)
            supp = sl.supplement(lat, Sublocale(lat, lat.up[x])).mask
            clauses = (
                bl.nowhere_dense_mask(b, m, pair, "definition"),
                bl.cl_mask(b, supp, j) == lat.full_mask,
                bl.bullet(b, x, i) == lat.bottom,
                bl.nowhere_dense_mask(b, m, pair, "element"),
                bl.nowhere_dense_mask(b, bl.cl_mask(b, m, i), pair),
                bl.nowhere_dense_mask(b, m, pair, "closure"),
            )
            if len(set(clauses)) != 1:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)} "
                             f"clauses={clauses}")
    return _ok()


@check("cor_nd_elements", "bilocale",
       "a part element is dense opposite exactly when its closed sublocale "
       "is nowhere dense")
def _cor_nd_elements(b):
    lat = b.total
    for pair in PAIRS:
        i, j = pair
        for a in b.part_elements(i):
            dense = bl.bullet(b, a, i) == lat.bottom
            if dense != bl.nowhere_dense_mask(b, lat.up[a], pair):
                return _fail(f"{_pair_tag(pair)} a={lat.names[a]}")
    return _ok()


@check("prop_ndbilocaleclopen", "bilocale",
       "the six characterizations of clopen nowhere density coincide on "
       "closed sublocales of part elements (the coherent scope)")
def _ndbilocaleclopen(b):
    lat = b.total
    comp = lat.complemented_mask
    for pair in PAIRS:
        i, j = pair
        for a in b.part_elements(i):
            m = lat.up[a]
            x = bl.cl_element(b, m, i)
            supp = sl.supplement(lat, Sublocale(lat, lat.up[x])).mask
            clm = bl.cl_mask(b, m, i)
            closed = lat.up[lat.meet_mask(m)]
            xs = bl.cl_element(b, supp, j)
            clauses = (
                bl.is_ij_clopen(b, m, pair) and
                bl.nowhere_dense_mask(b, m, pair),
                bool((comp >> x) & 1) and
                bl.cl_mask(b, supp, j) == lat.full_mask,
                bl.bullet(b, x, i) == lat.bottom and bool((comp >> x) & 1),
                bl.nowhere_dense_mask(b, m, pair, "element") and
                bool((comp >> x) & 1),
                bl.is_ij_clopen(b, clm, pair) and
                bl.nowhere_dense_mask(b, clm, pair),
                bl.is_ij_clopen(b, closed, pair) and
                bl.nowhere_dense_mask(b, closed, pair),
            )
            del xs
            if len(set(clauses)) != 1:
                return _fail(f"{_pair_tag(pair)} S=c({lat.names[a]}) "
                             f"clauses={clauses}")
    return _ok()


@check("prop_ndbilocaleclopen_literal", "bilocale",
       "the clopen six-way equivalence quantified over every sublocale with "
       "part-free clopenness (fails: a six-element bilocale separates the "
       "clauses)", expected_fail=True)
def _ndbilocaleclopen_literal(b):
    lat = b.total
    comp = lat.complemented_mask
    for pair in PAIRS:
        i, j = pair
        for m in _sublocale_masks(lat):
            s = Sublocale(lat, m)
            x = bl.cl_element(b, m, i)
            nd = bl.nowhere_dense_mask(b, m, pair)
            clm = bl.cl_mask(b, m, i)
            clauses = (
                sl.is_clopen_sublocale(lat, s) and nd,
                bl.bullet(b, x, i) == lat.bottom and bool((comp >> x) & 1),
                sl.is_clopen_sublocale(lat, Sublocale(lat, clm)) and
                bl.nowhere_dense_mask(b, clm, pair),
            )
            if len(set(clauses)) != 1:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)} "
                             f"clauses={clauses}")
    return _ok()


@check("thm_remote_subbilocale_weak_literal", "bilocale",
       "the weak remoteness six-way equivalence with part-free clopenness "
       "(fails: a six-element bilocale has a clopen nowhere dense sublocale "
       "whose generator leaves the part)", expected_fail=True)
def _remote_subbilocale_weak_literal(b):
    lat = b.total
    topbit = 1 << lat.top
    for pair in PAIRS:
        family = [m for m in bl.nd_masks(b, pair)
                  if sl.is_clopen_sublocale(lat, Sublocale(lat, m))]
        dense = bl.dense_part_elements(b, pair, complemented_only=True)
        for m in _sublocale_masks(lat):
            r1 = all(m & nd == topbit for nd in family)
            r4 = all(m & lat.up[x] == topbit for x in dense)
            if r1 != r4:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)} "
                             f"miss_all={r1} miss_generators={r4}")
    return _ok()


@check("cor_nd_elements_clopen", "bilocale",
       "dense-and-complemented part elements match clopen nowhere dense "
       "closed sublocales")
def _cor_nd_clopen(b):
    lat = b.total
    for pair in PAIRS:
        i, j = pair
        for a in b.part_elements(i):
            lhs = bl.bullet(b, a, i) == lat.bottom and \
                bool((lat.complemented_mask >> a) & 1)
            rhs = sl.is_clopen_sublocale(lat, Sublocale(lat, lat.up[a])) and \
                bl.nowhere_dense_mask(b, lat.up[a], pair)
            if lhs != rhs:
                return _fail(f"{_pair_tag(pair)} a={lat.names[a]}")
    return _ok()


@check("prop_smallest_dense_fwd", "bilocale",
       "indexed closure missing the Booleanization forces nowhere density")
def _smallest_dense_fwd(b):
    lat = b.total
    topbit = 1 << lat.top
    for pair in PAIRS:
        i, j = pair
        for m in _sublocale_masks(lat):
            if bl.cl_mask(b, m, i) & lat.bool_mask == topbit and \
               not bl.nowhere_dense_mask(b, m, pair):
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


@check("prop_smallest_dense_converse", "bilocale",
       "nowhere density forces the indexed closure to miss the Booleanization "
       "(fails: witnessed at the six-open join topology of three points)",
       expected_fail=True)
def _smallest_dense_converse(b):
    lat = b.total
    topbit = 1 << lat.top
    for pair in PAIRS:
        i, j = pair
        for m in _sublocale_masks(lat):
            if bl.nowhere_dense_mask(b, m, pair) and \
               bl.cl_mask(b, m, i) & lat.bool_mask != topbit:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


def _balanced_guard(b):
    if not bl.classify_bilocale(b).balanced:
        return _skip("bilocale is not balanced")
    return None


@check("prop_smallest_dense_balanced_iff", "bilocale",
       "on balanced bilocales nowhere density is exactly the indexed closure "
       "missing the Booleanization")
def _smallest_dense_balanced(b):
    skip = _balanced_guard(b)
    if skip:
        return skip
    lat = b.total
    topbit = 1 << lat.top
    for pair in PAIRS:
        i, j = pair
        for m in _sublocale_masks(lat):
            if bl.nowhere_dense_mask(b, m, pair) != \
               (bl.cl_mask(b, m, i) & lat.bool_mask == topbit):
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


@check("cor_ijndbalanced", "bilocale",
       "on balanced bilocales a sublocale is nowhere dense exactly when its "
       "indexed closure is plainly nowhere dense")
def _ijndbalanced(b):
    skip = _balanced_guard(b)
    if skip:
        return skip
    lat = b.total
    topbit = 1 << lat.top
    for pair in PAIRS:
        i, j = pair
        for m in _sublocale_masks(lat):
            plain_nd = bl.cl_mask(b, m, i) & lat.bool_mask == topbit
            if bl.nowhere_dense_mask(b, m, pair) != plain_nd:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


@check("exa_balanced_remote", "bilocale",
       "on balanced bilocales plainly remote sublocales are indexed-remote")
def _balanced_remote(b):
    skip = _balanced_guard(b)
    if skip:
        return skip
    lat = b.total
    for m in _sublocale_masks(lat):
        if sl.is_remote_plain(lat, m):
            for pair in PAIRS:
                if not bl.is_ij_remote(b, Sublocale(lat, m), pair, mode="oracle"):
                    return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


def _remote_clauses(b, pair, weak):
    lat = b.total
    topbit = 1 << lat.top
    i, j = pair
    family = bl.nd_masks(b, pair, clopen=weak)
    dense = bl.dense_part_elements(b, pair, weak)
    out = []
    for m in _sublocale_masks(lat):
        s = Sublocale(lat, m)
        r1 = all(m & nd == topbit for nd in family)
        r2 = all(m & bl.cl_mask(b, nd, i) == topbit for nd in family)
        r3 = all(m & lat.up[lat.meet_mask(nd)] == topbit for nd in family)
        r4 = all(m & lat.up[x] == topbit for x in dense)
        r5 = all(m & ~lat.open_masks[x] == 0 for x in dense)
        r6 = all(sl.nu(s, x) == lat.top for x in dense)
        out.append((m, (r1, r2, r3, r4, r5, r6)))
    return out


@check("thm_remote_subbilocale_plain", "bilocale",
       "the six characterizations of remoteness coincide")
def _remote_subbilocale_plain(b):
    lat = b.total
    for pair in PAIRS:
        for m, clauses in _remote_clauses(b, pair, weak=False):
            if len(set(clauses)) != 1:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)} "
                             f"clauses={clauses}")
    return _ok()


@check("thm_remote_subbilocale_weak", "bilocale",
       "the six characterizations of weak remoteness coincide")
def _remote_subbilocale_weak(b):
    lat = b.total
    for pair in PAIRS:
        for m, clauses in _remote_clauses(b, pair, weak=True):
            if len(set(clauses)) != 1:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)} "
                             f"clauses={clauses}")
    return _ok()


@check("prop_bidense_plain", "bilocale",
       "a closed sublocale is remote exactly when its generator joins every "
       "dense opposite-part element to the top")
def _bidense_plain(b):
    return _bidense(b, weak=False)


@check("prop_bidense_weak", "bilocale",
       "a closed sublocale is weakly remote exactly when its generator joins "
       "every complemented dense element to the top")
def _bidense_weak(b):
    return _bidense(b, weak=True)


def _bidense(b, weak):
    lat = b.total
    for pair in PAIRS:
        dense = bl.dense_part_elements(b, pair, weak)
        for a in range(lat.n):
            lhs = bl.is_ij_remote(b, Sublocale(lat, lat.up[a]), pair,
                                  weak=weak, mode="oracle")
            rhs = all(lat.join_of(a, x) == lat.top for x in dense)
            if lhs != rhs:
                return _fail(f"{_pair_tag(pair)} a={lat.names[a]}")
    return _ok()


@check("prop_largestijremote_plain", "bilocale",
       "remote sublocales have a largest one (their join stays remote)")
def _largest_plain(b):
    return _largest(b, weak=False)


@check("prop_largestijremote_weak", "bilocale",
       "weakly remote sublocales have a largest one")
def _largest_weak(b):
    return _largest(b, weak=True)


def _largest(b, weak):
    lat = b.total
    for pair in PAIRS:
        try:
            big = bl.largest_ij_remote(b, pair, weak)
        except AssertionError:
            return _fail(f"{_pair_tag(pair)} join left the remote family")
        if not bl.is_ij_remote(b, big, pair, weak, mode="oracle"):
            return _fail(f"{_pair_tag(pair)} largest fails the oracle")
        for m in bl.remote_masks(b, pair, weak):
            if m & ~big.mask:
                return _fail(f"{_pair_tag(pair)} {_set(lat, m)} outside largest")
    return _ok()


@check("coframe_law_remote_plain", "bilocale",
       "the remote sublocales form a coframe (distributivity on triples)")
def _coframe_remote_plain(b):
    return _coframe_remote(b, weak=False)


@check("coframe_law_remote_weak", "bilocale",
       "the weakly remote sublocales form a coframe")
def _coframe_remote_weak(b):
    return _coframe_remote(b, weak=True)


def _coframe_remote(b, weak):
    lat = b.total
    for pair in PAIRS:
        fam = bl.remote_masks(b, pair, weak)
        famset = set(fam)
        join = {}
        for x in fam:
            for y in fam:
                j = kernel.meet_closure(lat.n, lat.meet, x | y)
                if j not in famset:
                    return _fail(f"{_pair_tag(pair)} join escapes the family")
                join[x, y] = j
        for x in fam:
            for y in fam:
                if x & y not in famset:
                    return _fail(f"{_pair_tag(pair)} meet escapes the family")
        for a in fam:
            for x in fam:
                for y in fam:
                    if join[a, x & y] != join[a, x] & join[a, y]:
                        return _fail(f"{_pair_tag(pair)} A={_set(lat, a)} "
                                     f"B={_set(lat, x)} C={_set(lat, y)}")
    return _ok()


@check("prop_remclosed_weak", "bilocale",
       "the weak Rmt collection is a closed sublocale")
def _remclosed_weak(b):
    return _remclosed(b, "weak")


@check("prop_remclosed_strong", "bilocale",
       "the strong Rmt collection is a closed sublocale")
def _remclosed_strong(b):
    return _remclosed(b, "strong")


def _remclosed(b, variant):
    lat = b.total
    for pair in PAIRS:
        mask = bl.rmt_mask(b, pair, variant)
        if sl.sublocale_violation(lat, mask):
            return _fail(f"{_pair_tag(pair)} not a sublocale")
        if mask != lat.up[lat.meet_mask(mask)]:
            return _fail(f"{_pair_tag(pair)} not closed")
    return _ok()


@check("rmt_upward_closed_weak", "bilocale",
       "weak Rmt is an up-set containing the top")
def _rmt_up_weak(b):
    return _rmt_up(b, "weak")


@check("rmt_upward_closed_strong", "bilocale",
       "strong Rmt is an up-set containing the top")
def _rmt_up_strong(b):
    return _rmt_up(b, "strong")


def _rmt_up(b, variant):
    lat = b.total
    for pair in PAIRS:
        mask = bl.rmt_mask(b, pair, variant)
        if not (mask >> lat.top) & 1:
            return _fail(f"{_pair_tag(pair)} top missing")
        for x in kernel.bit_indices(mask):
            if lat.up[x] & ~mask:
                return _fail(f"{_pair_tag(pair)} x={lat.names[x]}")
    return _ok()


@check("prop_ijremote_weak", "bilocale",
       "weak Rmt is an indexed-remote sublocale "
       "(fails: on the symmetric three-chain weak Rmt is everything)",
       expected_fail=True)
def _ijremote_weak(b):
    return _ijremote(b, "weak")


@check("prop_ijremote_strong", "bilocale",
       "strong Rmt is an indexed-remote sublocale")
def _ijremote_strong(b):
    return _ijremote(b, "strong")


def _ijremote(b, variant):
    lat = b.total
    for pair in PAIRS:
        s = Sublocale(lat, bl.rmt_mask(b, pair, variant))
        if not bl.is_ij_remote(b, s, pair, weak=False, mode="oracle"):
            return _fail(f"{_pair_tag(pair)} Rmt={_set(lat, s.mask)}")
    return _ok()


@check("rmt_weak_weakly_remote", "bilocale",
       "weak Rmt is a weakly indexed-remote sublocale")
def _rmt_weak_weakly(b):
    lat = b.total
    for pair in PAIRS:
        s = Sublocale(lat, bl.rmt_mask(b, pair, "weak"))
        if not bl.is_ij_remote(b, s, pair, weak=True, mode="oracle"):
            return _fail(f"{_pair_tag(pair)} Rmt={_set(lat, s.mask)}")
    return _ok()


@check("prop_remoteremb_weak", "bilocale",
       "when a part is the whole frame, weak Rmt is plainly remote "
       "(fails: on the symmetric three-chain weak Rmt is everything)",
       expected_fail=True)
def _remoteremb_weak(b):
    return _remoteremb(b, "weak")


@check("prop_remoteremb_strong", "bilocale",
       "when a part is the whole frame, strong Rmt is plainly remote")
def _remoteremb_strong(b):
    return _remoteremb(b, "strong")


def _remoteremb(b, variant):
    lat = b.total
    applicable = [pair for pair in PAIRS
                  if b.part_mask(pair[0]) == lat.full_mask]
    if not applicable:
        return _skip("no part equals the total frame")
    for pair in applicable:
        mask = bl.rmt_mask(b, pair, variant)
        if not sl.is_remote_plain(lat, mask):
            return _fail(f"{_pair_tag(pair)} Rmt={_set(lat, mask)}")
    return _ok()


@check("prop_remequall_134_weak", "bilocale",
       "Rmt is everything iff the only complemented dense generator is the "
       "top iff the bottom belongs to Rmt (weak variant)")
def _remequall_134(b):
    lat = b.total
    for pair in PAIRS:
        mask = bl.rmt_mask(b, pair, "weak")
        b1 = mask == lat.full_mask
        dense = bl.dense_part_elements(b, pair, complemented_only=True)
        b3 = all(x == lat.top for x in dense)
        b4 = bool((mask >> lat.bottom) & 1)
        if not b1 == b3 == b4:
            return _fail(f"{_pair_tag(pair)} clauses=({b1},{b3},{b4})")
    return _ok()


@check("prop_remequall_clause2_weak", "bilocale",
       "weak Rmt is everything iff the whole frame is indexed-remote "
       "(fails: the symmetric three-chain separates the two)",
       expected_fail=True)
def _remequall_c2_weak(b):
    return _remequall_c2(b, "weak")


@check("prop_remequall_clause2_strong", "bilocale",
       "strong Rmt is everything iff the whole frame is indexed-remote")
def _remequall_c2_strong(b):
    return _remequall_c2(b, "strong")


def _remequall_c2(b, variant):
    lat = b.total
    for pair in PAIRS:
        b1 = bl.rmt_mask(b, pair, variant) == lat.full_mask
        b2 = bl.is_ij_remote(b, sl.whole(lat), pair, weak=False, mode="oracle")
        if b1 != b2:
            return _fail(f"{_pair_tag(pair)} rmt_whole={b1} self_remote={b2}")
    return _ok()


@check("example_booleanbi_2", "bilocale",
       "on Boolean bilocales Rmt is everything (both variants)")
def _booleanbi_2(b):
    if not bl.classify_bilocale(b).boolean:
        return _skip("bilocale is not Boolean")
    lat = b.total
    for pair in PAIRS:
        for variant in VARIANTS:
            if bl.rmt_mask(b, pair, variant) != lat.full_mask:
                return _fail(f"{_pair_tag(pair)} variant={variant}")
    return _ok()


def _symmetric_guard(b):
    if not bl.classify_bilocale(b).symmetric:
        return _skip("bilocale is not symmetric")
    return None


@check("example_booleanbi_4_weak", "bilocale",
       "on symmetric bilocales weak Rmt is everything iff the frame is "
       "Boolean (fails: the three-chain has weak Rmt everything)",
       expected_fail=True)
def _booleanbi_4_weak(b):
    return _booleanbi_4(b, "weak")


@check("example_booleanbi_4_strong", "bilocale",
       "on symmetric bilocales strong Rmt is everything iff the frame is "
       "Boolean")
def _booleanbi_4_strong(b):
    return _booleanbi_4(b, "strong")


def _booleanbi_4(b, variant):
    skip = _symmetric_guard(b)
    if skip:
        return skip
    lat = b.total
    boolean = bl.classify_bilocale(b).boolean
    for pair in PAIRS:
        if (bl.rmt_mask(b, pair, variant) == lat.full_mask) != boolean:
            return _fail(f"{_pair_tag(pair)} boolean={boolean}")
    return _ok()


@check("exa_o_remote", "bilocale",
       "the void sublocale is remote and weakly remote")
def _o_remote(b):
    lat = b.total
    o = sl.void(lat)
    for pair in PAIRS:
        for weak in (False, True):
            for mode in ("definition", "oracle"):
                if not bl.is_ij_remote(b, o, pair, weak, mode):
                    return _fail(f"{_pair_tag(pair)} weak={weak} mode={mode}")
    return _ok()


@check("exa_subsets_remote", "bilocale",
       "sublocales of remote sublocales stay remote (both forms)")
def _subsets_remote(b):
    lat = b.total
    masks = _sublocale_masks(lat)
    for pair in PAIRS:
        for weak in (False, True):
            fam = set(bl.remote_masks(b, pair, weak))
            for s in fam:
                for t in masks:
                    if t & ~s == 0 and t not in fam:
                        return _fail(f"{_pair_tag(pair)} weak={weak} "
                                     f"T={_set(lat, t)}")
    return _ok()


@check("exa_remote_implies_weak", "bilocale",
       "indexed-remote sublocales are weakly indexed-remote")
def _remote_implies_weak(b):
    lat = b.total
    for pair in PAIRS:
        weakfam = set(bl.remote_masks(b, pair, weak=True))
        for m in bl.remote_masks(b, pair, weak=False):
            if m not in weakfam:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


@check("exa_symmetric_remote_coincide", "bilocale",
       "on symmetric bilocales indexed remoteness is plain remoteness and "
       "the Booleanization is remote")
def _symmetric_remote(b):
    skip = _symmetric_guard(b)
    if skip:
        return skip
    lat = b.total
    for pair in PAIRS:
        for m in _sublocale_masks(lat):
            if bl.is_ij_remote(b, Sublocale(lat, m), pair, mode="oracle") != \
               sl.is_remote_plain(lat, m):
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
        if not bl.is_ij_remote(b, Sublocale(lat, lat.bool_mask), pair,
                               mode="oracle"):
            return _fail(f"{_pair_tag(pair)} booleanization")
    return _ok()


@check("exa_symmetric_weakly_all", "bilocale",
       "on symmetric bilocales every sublocale is weakly remote and the void "
       "sublocale is the only clopen nowhere dense one")
def _symmetric_weakly_all(b):
    skip = _symmetric_guard(b)
    if skip:
        return skip
    lat = b.total
    topbit = 1 << lat.top
    for pair in PAIRS:
        if bl.nd_masks(b, pair, clopen=True) != (topbit,):
            return _fail(f"{_pair_tag(pair)} clopen nowhere dense family")
        for m in _sublocale_masks(lat):
            if not bl.is_ij_remote(b, Sublocale(lat, m), pair, weak=True,
                                   mode="oracle"):
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)}")
    return _ok()


@check("exa_symmetric_bstar_family", "bilocale",
       "on symmetric bilocales the remote sublocales are exactly the "
       "principal sublocales of pseudocomplements")
def _symmetric_bstar(b):
    skip = _symmetric_guard(b)
    if skip:
        return skip
    lat = b.total
    for pair in PAIRS:
        fam = set(bl.remote_masks(b, pair, weak=False))
        bstar = {lat.b_masks[lat.star_of(x)] for x in range(lat.n)}
        if fam != bstar:
            only_fam = sorted(fam - bstar)
            only_bstar = sorted(bstar - fam)
            return _fail(f"{_pair_tag(pair)} fam-only={only_fam} "
                         f"bstar-only={only_bstar}")
    return _ok()


@check("classify_balanced_star_bullet", "bilocale",
       "on balanced bilocales the pseudocomplement equals the bullet on parts")
def _balanced_star_bullet(b):
    skip = _balanced_guard(b)
    if skip:
        return skip
    lat = b.total
    for i in (1, 2):
        for a in b.part_elements(i):
            if lat.star_of(a) != bl.bullet(b, a, i):
                return _fail(f"owner={i} a={lat.names[a]}")
    return _ok()


@check("oracle_ijremote_modes", "bilocale",
       "definition, characterization and oracle remoteness agree everywhere")
def _oracle_remote_modes(b):
    lat = b.total
    for pair in PAIRS:
        for weak in (False, True):
            for m in _sublocale_masks(lat):
                s = Sublocale(lat, m)
                d = bl.is_ij_remote(b, s, pair, weak, "definition")
                c = bl.is_ij_remote(b, s, pair, weak, "characterization")
                o = bl.is_ij_remote(b, s, pair, weak, "oracle")
                if not d == c == o:
                    return _fail(f"{_pair_tag(pair)} weak={weak} "
                                 f"S={_set(lat, m)} modes=({d},{c},{o})")
    return _ok()


@check("oracle_ijnd_modes", "bilocale",
       "definition, element and closure nowhere-density modes agree")
def _oracle_nd_modes(b):
    lat = b.total
    for pair in PAIRS:
        for m in _sublocale_masks(lat):
            d = bl.nowhere_dense_mask(b, m, pair, "definition")
            e = bl.nowhere_dense_mask(b, m, pair, "element")
            c = bl.nowhere_dense_mask(b, m, pair, "closure")
            if not d == e == c:
                return _fail(f"{_pair_tag(pair)} S={_set(lat, m)} "
                             f"modes=({d},{e},{c})")
    return _ok()


@check("oracle_generation_meets", "bilocale",
       "the generation axiom agrees with join-irreducible meet coverage")
def _oracle_generation(b):
    lat = b.total
    witness = kernel.generation_witness(
        lat.n, lat.meet, lat.join, lat.down, b.part_mask(1), b.part_mask(2))
    covered = lat.join_irreducible_mask & ~kernel.meets_mask(
        lat.n, lat.meet, b.part_mask(1), b.part_mask(2)) == 0
    return _verdict((witness < 0) == covered,
                    f"witness={witness} covered={covered}")


@check("con_ideal_iso", "bilocale",
       "ideals are principal, the ideal frame is isomorphic to the base, and "
       "the parts correspond")
def _ideal_iso(b):
    lat = b.total
    jb = con.ideal_bilocale(b)
    model = con.ideal_model(jb)
    if lat.n <= 12:
        oracle = con.all_ideal_masks(lat)
        if sorted(model.ideal_masks) != sorted(oracle):
            return _fail("non-principal ideal exists")
    for a in range(lat.n):
        if lat.join_mask(model.ideal_masks[a]) != a:
            return _fail(f"join of ideal down_{lat.names[a]}")
    for i in (1, 2):
        if jb.part_mask(i) != b.part_mask(i):
            return _fail(f"part {i} does not correspond")
    return _ok()


@check("con_noetherian_equiv", "bilocale",
       "Rmt is everything on the base iff on the ideal bilocale "
       "(both pairs, both variants)")
def _noetherian(b):
    lat = b.total
    jb = con.ideal_bilocale(b)
    for pair in PAIRS:
        for variant in VARIANTS:
            base = bl.rmt_mask(b, pair, variant) == lat.full_mask
            ideal = bl.rmt_mask(jb, pair, variant) == jb.total.full_mask
            if base != ideal:
                return _fail(f"{_pair_tag(pair)} variant={variant} "
                             f"base={base} ideal={ideal}")
    return _ok()


# =====================================================================
# bispace scope
# =====================================================================

def _suptd_guard(space):
    if not bsp.is_sup_td(space):
        return _skip("space is not sup-T_D")
    return None


@check("bsp_tau_join_oracle", "bispace",
       "the join topology equals unions of pairwise intersections of the "
       "two topologies (independent two-step generation)")
def _tau_join_oracle(space):
    basis = set(space.tau1) | set(space.tau2)
    changed = True
    while changed:
        changed = False
        for a in sorted(basis):
            for bmask in sorted(basis):
                if a & bmask not in basis:
                    basis.add(a & bmask)
                    changed = True
    basis = sorted(basis)
    if len(basis) > 20:
        return _skip("basis too large for the subset-union oracle")
    unions = set()
    for pick in range(1 << len(basis)):
        acc = 0
        p = pick
        while p:
            low = p & -p
            acc |= basis[low.bit_length() - 1]
            p ^= low
        unions.add(acc)
    return _verdict(unions == set(space.tau),
                    f"oracle size {len(unions)} vs tau size {len(space.tau)}")


@check("bsp_induced_is_sublocale", "bispace",
       "induced point-set sublocales are sublocales, with the empty and full "
       "sets inducing the void and whole ones")
def _induced_sublocale_check(space):
    b = bsp.to_bilocale(space)
    lat = b.total
    for amask in range(space.full + 1):
        ind = bsp.induced_sublocale(space, amask)
        if sl.sublocale_violation(lat, ind.mask):
            return _fail(space.set_label(amask))
    if bsp.induced_sublocale(space, 0).mask != 1 << lat.top:
        return _fail("empty set")
    if bsp.induced_sublocale(space, space.full).mask != lat.full_mask:
        return _fail("full set")
    return _ok()


@check("bsp_point_membership", "bispace",
       "on sup-T_D spaces a point lies in A exactly when its open witness "
       "lies in the induced sublocale")
def _point_membership(space):
    skip = _suptd_guard(space)
    if skip:
        return skip
    elts = [bsp.point_sublocale_element(space, x) for x in range(space.n)]
    for amask in range(space.full + 1):
        ind = bsp.induced_sublocale(space, amask)
        for x in range(space.n):
            if bool((amask >> x) & 1) != (elts[x] in ind):
                return _fail(f"A={space.set_label(amask)} x={space.points[x]}")
    return _ok()


@check("lem_biclo", "bispace",
       "inducing commutes with closure: the induced sublocale of the spatial "
       "closure is the indexed closure of the induced sublocale")
def _biclo(space):
    skip = _suptd_guard(space)
    if skip:
        return skip
    b = bsp.to_bilocale(space)
    for amask in range(space.full + 1):
        ind = bsp.induced_sublocale(space, amask)
        for pair in PAIRS:
            i, j = pair
            closed = bsp.closure_in(space, space.tau_of(i), amask)
            if bsp.induced_sublocale(space, closed).mask != \
               bl.cl_mask(b, ind.mask, i):
                return _fail(f"{_pair_tag(pair)} A={space.set_label(amask)}")
    return _ok()


@check("prop_ijndinduced", "bispace",
       "spatial nowhere density transfers to the induced sublocale and back")
def _ijndinduced(space):
    skip = _suptd_guard(space)
    if skip:
        return skip
    b = bsp.to_bilocale(space)
    for amask in range(space.full + 1):
        ind = bsp.induced_sublocale(space, amask)
        for pair in PAIRS:
            if bsp.tau_ij_nowhere_dense(space, amask, pair) != \
               bl.nowhere_dense_mask(b, ind.mask, pair):
                return _fail(f"{_pair_tag(pair)} A={space.set_label(amask)}")
    return _ok()


@check("prop_remotebilocale", "bispace",
       "spatial remoteness transfers to the induced sublocale and back")
def _remotebilocale(space):
    skip = _suptd_guard(space)
    if skip:
        return skip
    b = bsp.to_bilocale(space)
    for amask in range(space.full + 1):
        ind = bsp.induced_sublocale(space, amask)
        for pair in PAIRS:
            if bsp.tau_ij_remote(space, amask, pair) != \
               bl.is_ij_remote(b, ind, pair, mode="oracle"):
                return _fail(f"{_pair_tag(pair)} A={space.set_label(amask)}")
    return _ok()


@check("bsp_idense_conserv", "bispace",
       "spatial i-density matches indexed density of the induced sublocale")
def _idense_conserv(space):
    skip = _suptd_guard(space)
    if skip:
        return skip
    b = bsp.to_bilocale(space)
    for amask in range(space.full + 1):
        ind = bsp.induced_sublocale(space, amask)
        for i in (1, 2):
            spatial = bsp.closure_in(space, space.tau_of(i), amask) == space.full
            if spatial != bl.is_index_dense_sublocale(b, ind, i):
                return _fail(f"i={i} A={space.set_label(amask)}")
    return _ok()


@check("bsp_bullet_identity", "bispace",
       "the bullet of an open set is the complement of its opposite closure, "
       "making element-level density transfer too")
def _bullet_identity(space):
    b = bsp.to_bilocale(space)
    lat = b.total
    for pair in PAIRS:
        i, j = pair
        for u in space.tau_of(i):
            e = bsp.open_element(space, u)
            closed = bsp.closure_in(space, space.tau_of(j), u)
            if bl.bullet(b, e, i) != bsp.open_element(space,
                                                      space.full & ~closed):
                return _fail(f"{_pair_tag(pair)} U={space.set_label(u)}")
            if (bl.bullet(b, e, i) == lat.bottom) != (closed == space.full):
                return _fail(f"{_pair_tag(pair)} density of "
                             f"U={space.set_label(u)}")
    return _ok()


@check("thm_remote_subset", "bispace",
       "the three characterizations of spatial remoteness coincide")
def _remote_subset(space):
    for pair in PAIRS:
        i, j = pair
        nd = bsp.nd_subsets(space, pair)
        for amask in range(space.full + 1):
            t1 = all(amask & f == 0 for f in nd)
            t2 = all(amask & bsp.closure_in(space, space.tau_of(i), f) == 0
                     for f in nd)
            t3 = bsp.tau_ij_remote(space, amask, pair, "characterization")
            if not t1 == t2 == t3:
                return _fail(f"{_pair_tag(pair)} A={space.set_label(amask)} "
                             f"clauses=({t1},{t2},{t3})")
    return _ok()


@check("bsp_obs_2117", "bispace",
       "for closed-or-open A, disjointness of point sets matches disjointness "
       "of induced sublocales")
def _obs_2117(space):
    skip = _suptd_guard(space)
    if skip:
        return skip
    b = bsp.to_bilocale(space)
    topbit = 1 << b.total.top
    closed_or_open = set(space.tau)
    closed_or_open.update(space.full & ~u for u in space.tau)
    for amask in sorted(closed_or_open):
        ia = bsp.induced_sublocale(space, amask)
        for bmask in range(space.full + 1):
            ib = bsp.induced_sublocale(space, bmask)
            if (amask & bmask == 0) != (ia.mask & ib.mask == topbit):
                return _fail(f"A={space.set_label(amask)} "
                             f"B={space.set_label(bmask)}")
    return _ok()


# =====================================================================
# map scope
# =====================================================================

@check("map_adjunction", "map",
       "the adjunction between the map and its left adjoint holds exhaustively")
def _map_adjunction(fb):
    f = fb.base
    src, tgt = f.source, f.target
    h = f.adjoint
    for a in range(src.n):
        for b in range(tgt.n):
            if src.leq(h[b], a) != tgt.leq(b, f.table[a]):
                return _fail(f"a={src.names[a]} b={tgt.names[b]}")
    return _ok()


@check("map_image_sublocales", "map",
       "set images of sublocales are sublocales")
def _map_images(fb):
    f = fb.base
    for m in _sublocale_masks(f.source):
        try:
            mp.image_sublocale(f, Sublocale(f.source, m))
        except AssertionError:
            return _fail(_set(f.source, m))
    return _ok()


@check("map_preimage_c_o", "map",
       "preimages of closed/open sublocales are the closed/open sublocales "
       "of the adjoint image")
def _map_preimage(fb):
    f = fb.base
    src, tgt = f.source, f.target
    for x in range(tgt.n):
        pc = mp.preimage_sublocale(f, Sublocale(tgt, tgt.up[x]))
        if pc.mask != src.up[f.adjoint[x]]:
            return _fail(f"c({tgt.names[x]})")
        po = mp.preimage_sublocale(f, Sublocale(tgt, tgt.open_masks[x]))
        if po.mask != src.open_masks[f.adjoint[x]]:
            return _fail(f"o({tgt.names[x]})")
    return _ok()


def _preservation_cached(fb, pair):
    key = ("preservation", pair)
    if key not in fb.base._cache:
        fb.base._cache[key] = mp.check_preservation(fb, pair)
    return fb.base._cache[key]


@check("prop_ijndpreserve", "map",
       "the image/preimage/adjoint preservation clauses satisfy their "
       "stated implications (equivalences on balanced sources)")
def _ijndpreserve(fb):
    for pair in PAIRS:
        rep = _preservation_cached(fb, pair)
        if rep.violations:
            return _fail(f"{_pair_tag(pair)} {rep.violations[0]}")
    return _ok()


@check("prop_preimagebi", "map",
       "maps sending dense generators to dense generators pull remote "
       "sublocales back to remote sublocales")
def _preimagebi(fb):
    applicable = False
    for pair in PAIRS:
        rep = _preservation_cached(fb, pair)
        if not rep.entries.get("sends_dense_to_dense"):
            continue
        applicable = True
        if not rep.entries.get("preimage_preserves_remote", True):
            return _fail(_pair_tag(pair))
    if not applicable:
        return _skip("map does not send dense generators to dense generators")
    return _ok()


@check("prop_preimagebiweakly", "map",
       "bounded-lattice-hom maps sending dense to dense pull weakly remote "
       "sublocales back")
def _preimagebiweakly(fb):
    applicable = False
    for pair in PAIRS:
        rep = _preservation_cached(fb, pair)
        if not (rep.entries.get("sends_dense_to_dense") and
                rep.entries.get("bounded_lattice_hom")):
            continue
        applicable = True
        if not rep.entries.get("preimage_preserves_weakly_remote", True):
            return _fail(_pair_tag(pair))
    if not applicable:
        return _skip("hypotheses (dense-preserving bounded lattice hom) not met")
    return _ok()


@check("prop_restriction_weak", "map",
       "weakly closed adjoints preserving complemented dense generators make "
       "the map restrict to weak Rmt")
def _restriction_weak(fb):
    return _restriction(fb, "weak")


@check("prop_restriction_strong", "map",
       "weakly closed adjoints preserving dense generators make the map "
       "restrict to strong Rmt")
def _restriction_strong(fb):
    return _restriction(fb, "strong")


def _restriction(fb, variant):
    if not mp.is_weakly_closed(fb.base):
        return _skip("adjoint is not weakly closed")
    complemented = variant == "weak"
    applicable = False
    for pair in PAIRS:
        if not mp.adjoint_preserves_dense(fb, pair, complemented):
            continue
        applicable = True
        if not mp.is_rem_map(fb, pair, variant):
            return _fail(_pair_tag(pair))
    if not applicable:
        return _skip("adjoint does not preserve the dense generators")
    return _ok()


# =====================================================================
# diagram scope
# =====================================================================

@check("thm_functor_rem", "diagram",
       "restricting to Rmt is functorial on Rem-map diagrams")
def _functor_rem(diagram):
    for pair in PAIRS:
        for variant in VARIANTS:
            morphs = [f for f in diagram.morphisms
                      if mp.is_rem_map(f, pair, variant)]
            rep = mp.verify_category_laws(diagram.objects, morphs, "functor",
                                          pair, variant)
            if not rep.ok:
                return _fail(f"{_pair_tag(pair)} variant={variant} "
                             f"{rep.violations[0]}")
    return _ok()


@check("prop_natural", "diagram",
       "the inclusion of Rmt into the total part is natural")
def _natural(diagram):
    for pair in PAIRS:
        for variant in VARIANTS:
            morphs = [f for f in diagram.morphisms
                      if mp.is_rem_map(f, pair, variant)]
            rep = mp.verify_category_laws(diagram.objects, morphs,
                                          "naturality", pair, variant)
            if not rep.ok:
                return _fail(f"{_pair_tag(pair)} variant={variant} "
                             f"{rep.violations[0]}")
    return _ok()


def _comonad_objects(diagram, pair, variant):
    objs = []
    for b in diagram.objects:
        if not bl.classify_bilocale(b).symmetric:
            continue
        if sl.is_remote_plain(b.total, bl.rmt_mask(b, pair, variant)):
            objs.append(b)
    return objs


@check("thm_comonad", "diagram",
       "the Rmt endofunctor carries a comonad on symmetric objects with "
       "remote Rmt")
def _comonad(diagram):
    found = False
    for pair in PAIRS:
        for variant in VARIANTS:
            objs = _comonad_objects(diagram, pair, variant)
            if not objs:
                continue
            found = True
            keep = set(map(id, objs))
            morphs = [f for f in diagram.morphisms
                      if id(f.source_b) in keep and id(f.target_b) in keep
                      and mp.is_rem_map(f, pair, variant)]
            rep = mp.verify_category_laws(objs, morphs, "comonad", pair, variant)
            if not rep.ok:
                return _fail(f"{_pair_tag(pair)} variant={variant} "
                             f"{rep.violations[0]}")
    if not found:
        return _skip("no symmetric objects with remote Rmt in the diagram")
    return _ok()


@check("prop_reflective", "diagram",
       "Rem-maps from symmetric Boolean bilocales factor uniquely through "
       "the Rmt coreflection")
def _reflective(diagram):
    found = False
    for pair in PAIRS:
        for variant in VARIANTS:
            objs = _comonad_objects(diagram, pair, variant)
            keep = set(map(id, objs))
            morphs = []
            for f in diagram.morphisms:
                flags = bl.classify_bilocale(f.source_b)
                if flags.symmetric and flags.boolean and \
                   id(f.target_b) in keep and mp.is_rem_map(f, pair, variant):
                    morphs.append(f)
            if not morphs:
                continue
            found = True
            rep = mp.verify_category_laws(objs, morphs, "coreflection",
                                          pair, variant)
            if not rep.ok:
                return _fail(f"{_pair_tag(pair)} variant={variant} "
                             f"{rep.violations[0]}")
    if not found:
        return _skip("no Rem-maps from symmetric Boolean sources to "
                     "remote-Rmt targets")
    return _ok()


@check("prop_functorremrb_faithful", "diagram",
       "on objects whose Rmt is everything, equal restrictions force equal maps")
def _faithful(diagram):
    for pair in PAIRS:
        for variant in VARIANTS:
            for f in diagram.morphisms:
                for g in diagram.morphisms:
                    if f.source_b is not g.source_b or \
                       f.target_b is not g.target_b:
                        continue
                    src, tgt = f.source_b, f.target_b
                    if bl.rmt_mask(src, pair, variant) != src.total.full_mask:
                        continue
                    if bl.rmt_mask(tgt, pair, variant) != tgt.total.full_mask:
                        continue
                    if not (mp.is_rem_map(f, pair, variant) and
                            mp.is_rem_map(g, pair, variant)):
                        continue
                    rf = mp.rmt_restriction(f, pair, variant)
                    rg = mp.rmt_restriction(g, pair, variant)
                    if rf == rg and f.base.table != g.base.table:
                        return _fail(f"{_pair_tag(pair)} {f.name} vs {g.name}")
    return _ok()


@check("prop_natural_iso_omega", "diagram",
       "on objects whose Rmt is everything the inclusion components are "
       "bijections")
def _natural_iso(diagram):
    for pair in PAIRS:
        for variant in VARIANTS:
            for b in diagram.objects:
                mask = bl.rmt_mask(b, pair, variant)
                if mask != b.total.full_mask:
                    continue
                if popcount(mask) != b.total.n:
                    return _fail(f"{_pair_tag(pair)} {b.name}")
    return _ok()
