"""The congruence bilocale and the ideal bilocale of a finite (bi)locale.

Frame congruences of a finite frame are exactly the kernels of the
quotient maps nu_S onto its sublocales, so they are enumerated through
the sublocale list and ordered by relation inclusion.  Ideals of a
finite lattice are all principal, but they are kept as explicit
down/join-closed subsets so the part-generation condition of the ideal
bilocale is exercised literally.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernel
from .bilocales import Bilocale, validate_bilocale
from .errors import TooLarge
from .lattice import FiniteLattice, lattice_from_up
from .sublocales import _sublocale_masks

CONGRUENCE_CAP = 512


@dataclass
class CongruenceModel:
    """Bookkeeping behind a congruence bilocale."""

    lattice: FiniteLattice = field(repr=False)      # the base frame L
    sublocale_masks: tuple = ()                      # canonical S(L) order
    relations: tuple = ()                            # row-mask tuples per theta
    nabla: tuple = ()                                # index of nabla_a per a
    delta: tuple = ()                                # index of delta_a per a


def _kernel_relation(lat, sub_mask):
    """Row masks of the kernel of nu_S for a sublocale mask."""
    n = lat.n
    nu = []
    for x in range(n):
        nu.append(lat.meet_mask(sub_mask & lat.up[x]))
    rows = []
    for x in range(n):
        row = 0
        for y in range(n):
            if nu[y] == nu[x]:
                row |= 1 << y
        rows.append(row)
    return tuple(rows)


def _relation_of_condition(lat, value):
    """Row masks of the relation x ~ y iff value(x) == value(y)."""
    n = lat.n
    rows = []
    for x in range(n):
        vx = value(x)
        row = 0
        for y in range(n):
            if value(y) == vx:
                row |= 1 << y
        rows.append(row)
    return tuple(rows)


def congruence_bilocale(lat, name=None):
    """(cL, nabla_L, delta_L): the congruence bilocale of a frame.

    Congruences are the sublocale kernels theta_S, ordered by relation
    inclusion; nabla_a and delta_a are built from their defining
    conditions (x v a = y v a, x & a = y & a) and cross-checked against
    the kernels of c(a) and o(a).  Every nabla_a must be complemented
    with its complement in delta_L.
    """
    lat._require_frame()
    sub_masks = _sublocale_masks(lat)
    if len(sub_masks) > CONGRUENCE_CAP:
        raise TooLarge(
            f"{lat.name}: {len(sub_masks)} congruences exceed the cap "
            f"of {CONGRUENCE_CAP}")
    relations = [_kernel_relation(lat, m) for m in sub_masks]
    index = {rel: k for k, rel in enumerate(relations)}
    if len(index) != len(relations):
        raise AssertionError("sublocale kernels are not pairwise distinct")
    k = len(relations)
    up = [0] * k
    for a in range(k):
        ra = relations[a]
        for b in range(k):
            rb = relations[b]
            if all(ra[x] & ~rb[x] == 0 for x in range(lat.n)):
                up[a] |= 1 << b
    labels = [f"theta_S#{i}" for i in range(k)]
    clat = lattice_from_up(labels, up, name=name or f"C({lat.name})",
                           max_elements=max(k, 24))
    nabla = []
    delta = []
    nabla_mask = 0
    for a in range(lat.n):
        nrel = _relation_of_condition(lat, lambda x, a=a: lat.join_of(x, a))
        drel = _relation_of_condition(lat, lambda x, a=a: lat.meet_of(x, a))
        if nrel != _kernel_relation(lat, lat.up[a]) or \
           drel != _kernel_relation(lat, lat.open_masks[a]):
            raise AssertionError("nabla/delta disagree with their kernels")
        nabla.append(index[nrel])
        delta.append(index[drel])
        nabla_mask |= 1 << index[nrel]
    delta_mask = _subframe_closure(clat, delta)
    b = validate_bilocale(clat, nabla_mask, delta_mask,
                          name=name or f"C({lat.name})")
    for a in range(lat.n):
        na, da = nabla[a], delta[a]
        if clat.meet_of(na, da) != clat.bottom or \
           clat.join_of(na, da) != clat.top:
            raise AssertionError("nabla_a is not complemented by delta_a")
    b._cache["congruence_model"] = CongruenceModel(
        lattice=lat, sublocale_masks=tuple(sub_masks),
        relations=tuple(relations), nabla=tuple(nabla), delta=tuple(delta))
    return b


def congruence_model(b):
    return b._cache["congruence_model"]


def _subframe_closure(lat, elements):
    """Mask of the least subframe containing the given elements."""
    mask = (1 << lat.bottom) | (1 << lat.top)
    for e in elements:
        mask |= 1 << e
    changed = True
    while changed:
        changed = False
        elems = kernel.bit_indices(mask)
        for i, x in enumerate(elems):
            for y in elems[i:]:
                for z in (lat.meet_of(x, y), lat.join_of(x, y)):
                    if not (mask >> z) & 1:
                        mask |= 1 << z
                        changed = True
    return mask


@dataclass
class IdealModel:
    """Bookkeeping behind an ideal bilocale."""

    base: Bilocale = field(repr=False)
    ideal_masks: tuple = ()                          # k-th ideal as element mask


def ideal_bilocale(b, name=None):
    """(JL, (JL)_1, (JL)_2): the ideal bilocale of a bilocale.

    Finite lattices make every ideal principal, so the ideal frame is
    the down-sets {down(a)} ordered by inclusion; part i keeps the
    ideals generated by their part-i members.
    """
    lat = b.total
    ideal_masks = tuple(lat.down[a] for a in range(lat.n))
    labels = [f"down_{lat.names[a]}" for a in range(lat.n)]
    jlat = lattice_from_up(labels, lat.up, name=name or f"J({lat.name})",
                           max_elements=max(lat.n, 24))
    parts = []
    for i in (1, 2):
        pm = b.part_mask(i)
        mask = 0
        for a in range(lat.n):
            if lat.join_mask(ideal_masks[a] & pm) == a:
                mask |= 1 << a
        parts.append(mask)
    jb = validate_bilocale(jlat, parts[0], parts[1], name=name or f"J({b.name})")
    jb._cache["ideal_model"] = IdealModel(base=b, ideal_masks=ideal_masks)
    return jb


def ideal_model(b):
    return b._cache["ideal_model"]


def all_ideal_masks(lat):
    """Every nonempty down-closed join-closed subset (oracle for principality)."""
    out = []
    for mask in range(1, 1 << lat.n):
        elems = kernel.bit_indices(mask)
        ok = all(lat.down[x] & ~mask == 0 for x in elems)
        if ok:
            for i, x in enumerate(elems):
                for y in elems[i:]:
                    if not (mask >> lat.join_of(x, y)) & 1:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(mask)
    return out


@dataclass
class ConstructionReport:
    name: str
    entries: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    def record(self, label, ok):
        self.entries.append((label, ok))
        if not ok:
            self.violations.append(label)

    @property
    def ok(self):
        return not self.violations


def check_construction_theorems(b):
    """Rmt is everything on congruence bilocales, and the ideal bilocale
    has Rmt equal to the whole iff the base does (both pairs, both
    variants; every finite lattice is Noetherian)."""
    from .bilocales import PAIRS, VARIANTS, rmt_mask

    rep = ConstructionReport(name=b.name)
    jb = ideal_bilocale(b)
    cb = congruence_bilocale(b.total)
    for pair in PAIRS:
        for variant in VARIANTS:
            tag = f"({pair[0]},{pair[1]}),{variant}"
            base_full = rmt_mask(b, pair, variant) == b.total.full_mask
            ideal_full = rmt_mask(jb, pair, variant) == jb.total.full_mask
            rep.record(f"noetherian equivalence {tag}", base_full == ideal_full)
            rep.record(f"congruence rmt whole {tag}",
                       rmt_mask(cb, pair, variant) == cb.total.full_mask)
    return rep
