"""Bilocales and their indexed operators.

A bilocale is a frame together with two subframes whose part-wise meets
join back to every element.  This module carries the (i, j)-indexed
machinery: the bullet pseudocomplement, part-indexed closure/interior,
i-density, (i, j)-nowhere density, plain and weak (i, j)-remoteness, the
Rmt sublocale in both variants, and the balanced/symmetric/Boolean
classification.  Index pairs are explicit arguments everywhere; there is
no ambient (i, j) state.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernel
from .errors import GenerationFails, NotASubframe, NotInPart
from .lattice import FiniteLattice
from .sublocales import Sublocale, _sublocale_masks

PAIRS = ((1, 2), (2, 1))
VARIANTS = ("weak", "strong")


def check_pair(pair):
    i, j = pair
    if {i, j} != {1, 2}:
        raise ValueError(f"index pair must be (1,2) or (2,1), got {pair!r}")
    return i, j


@dataclass(frozen=True)
class Subframe:
    parent: FiniteLattice = field(repr=False)
    mask: int

    @property
    def members(self):
        return tuple(kernel.bit_indices(self.mask))

    @property
    def labels(self):
        return [self.parent.names[i] for i in self.members]

    def __contains__(self, element):
        return (self.mask >> element) & 1 == 1


def subframe_violation(lat, mask):
    """None if the mask is a subframe, else a (kind, witness) pair."""
    if not (mask >> lat.bottom) & 1:
        return ("bottom-missing", (lat.names[lat.bottom],))
    if not (mask >> lat.top) & 1:
        return ("top-missing", (lat.names[lat.top],))
    elems = kernel.bit_indices(mask)
    n = lat.n
    for i, x in enumerate(elems):
        for y in elems[i:]:
            m = lat.meet[x * n + y]
            if not (mask >> m) & 1:
                return ("meet", (lat.names[x], lat.names[y], lat.names[m]))
            jn = lat.join[x * n + y]
            if not (mask >> jn) & 1:
                return ("join", (lat.names[x], lat.names[y], lat.names[jn]))
    return None


class Bilocale:
    """An assembled bilocale; construct through :func:`validate_bilocale`."""

    __slots__ = ("name", "total", "part1", "part2", "_cache")

    def __init__(self, total, part1, part2, name="B"):
        self.name = name
        self.total = total
        self.part1 = part1
        self.part2 = part2
        self._cache = {}

    def part(self, i):
        if i == 1:
            return self.part1
        if i == 2:
            return self.part2
        raise ValueError(f"part index must be 1 or 2, got {i!r}")

    def part_mask(self, i):
        return self.part(i).mask

    def part_elements(self, i):
        key = ("elems", i)
        if key not in self._cache:
            self._cache[key] = tuple(kernel.bit_indices(self.part_mask(i)))
        return self._cache[key]

    def __repr__(self):
        return (f"Bilocale({self.name!r}, |L|={self.total.n}, "
                f"|L1|={len(self.part_elements(1))}, "
                f"|L2|={len(self.part_elements(2))})")


def validate_bilocale(lat, mask1, mask2, name="B"):
    """Check the subframe invariants and the generation axiom, then assemble.

    Raises NotASubframe or GenerationFails with a witness; never repairs
    the parts (explicitness over convenience).
    """
    lat._require_frame()
    for idx, mask in ((1, mask1), (2, mask2)):
        v = subframe_violation(lat, mask)
        if v is not None:
            raise NotASubframe(idx, v)
    w = kernel.generation_witness(lat.n, lat.meet, lat.join, lat.down, mask1, mask2)
    if w >= 0:
        raise GenerationFails(lat.names[w])
    return Bilocale(lat, Subframe(lat, mask1), Subframe(lat, mask2), name=name)


def symmetric_bilocale(lat, name=None):
    """(L, L, L); always satisfies the generation axiom."""
    return validate_bilocale(lat, lat.full_mask, lat.full_mask,
                             name=name or f"{lat.name}-sym")


# -- the bullet pseudocomplement -------------------------------------------


def _bullet_table(b, owner):
    """bullet[c] for c in part(owner), computed over the opposite part."""
    key = ("bullet", owner)
    if key not in b._cache:
        lat = b.total
        other = b.part_elements(2 if owner == 1 else 1)
        table = {}
        for c in b.part_elements(owner):
            acc = lat.bottom
            for x in other:
                if lat.meet_of(x, c) == lat.bottom:
                    acc = lat.join_of(acc, x)
            table[c] = acc
        b._cache[key] = table
    return b._cache[key]


def bullet(b, c, owner):
    """The join of the opposite part's elements disjoint from c."""
    table = _bullet_table(b, owner)
    if c not in table:
        raise NotInPart(b.total.names[c], owner)
    return table[c]


def is_index_dense_element(b, x, owner):
    """x in part(owner) meets every nonzero element of the other part."""
    return bullet(b, x, owner) == b.total.bottom


def dense_part_elements(b, pair, complemented_only=False):
    """Elements of part i that are j-dense, optionally also complemented.

    These are exactly the generators of the maximal (clopen, in the
    complemented case) (i, j)-nowhere dense closed sublocales.
    """
    i, j = check_pair(pair)
    key = ("dense-elts", i, complemented_only)
    if key not in b._cache:
        lat = b.total
        table = _bullet_table(b, i)
        out = [c for c in b.part_elements(i) if table[c] == lat.bottom]
        if complemented_only:
            out = [c for c in out if (lat.complemented_mask >> c) & 1]
        b._cache[key] = tuple(out)
    return b._cache[key]


# -- indexed closure and interior -------------------------------------------


def _part_floor(b, i):
    """For each element e: the join of all part-i elements below e."""
    key = ("floor", i)
    if key not in b._cache:
        lat = b.total
        elems = b.part_elements(i)
        floors = []
        for e in range(lat.n):
            acc = lat.bottom
            for x in elems:
                if lat.leq(x, e):
                    acc = lat.join_of(acc, x)
            floors.append(acc)
        b._cache[key] = tuple(floors)
    return b._cache[key]


def cl_element(b, mask, i):
    """The part-i element whose closed sublocale is cl_i of the mask."""
    lat = b.total
    return _part_floor(b, i)[lat.meet_mask(mask)]


def cl_mask(b, mask, i):
    return b.total.up[cl_element(b, mask, i)]


def int_mask(b, mask, i):
    lat = b.total
    acc = lat.bottom
    for a in b.part_elements(i):
        if lat.open_masks[a] & ~mask == 0:
            acc = lat.join_of(acc, a)
    return lat.open_masks[acc]


def cl_index(b, sub, i):
    """Bilocale closure: the smallest c(a), a in part i, containing S."""
    return Sublocale(b.total, cl_mask(b, sub.mask, i))


def int_index(b, sub, i):
    """Bilocale interior: the largest o(a), a in part i, inside S."""
    return Sublocale(b.total, int_mask(b, sub.mask, i))


def is_index_dense_sublocale(b, sub, i):
    """cl_i(S) is the whole lattice."""
    return cl_mask(b, sub.mask, i) == b.total.full_mask


# -- (i, j)-nowhere density ---------------------------------------------------


def nowhere_dense_mask(b, mask, pair, mode="definition"):
    """(i, j)-nowhere density of a sublocale mask, by one of three routes.

    definition: Int_j(cl_i(S)) is void.  element: the part-i generator of
    cl_i(S) is j-dense (tested by the quantifier form, keeping the route
    independent of the bullet tables).  closure: the definition formula
    applied to the plain closure of S.
    """
    i, j = check_pair(pair)
    lat = b.total
    if mode == "definition":
        return int_mask(b, cl_mask(b, mask, i), j) == 1 << lat.top
    if mode == "element":
        x = cl_element(b, mask, i)
        return all(a == lat.bottom
                   for a in b.part_elements(j)
                   if lat.meet_of(a, x) == lat.bottom)
    if mode == "closure":
        closed = lat.up[lat.meet_mask(mask)]
        return int_mask(b, cl_mask(b, closed, i), j) == 1 << lat.top
    raise ValueError(f"unknown nowhere-density mode {mode!r}")


def is_ij_nowhere_dense(b, sub, pair, mode="definition"):
    return nowhere_dense_mask(b, sub.mask, pair, mode)


def is_ij_clopen(b, mask, pair):
    """Clopen in the indexed sense: c(a) for a complemented a in part i.

    The part restriction is what makes the weak remoteness theory cohere;
    with part-free clopenness the six-way weak characterizations break
    (see the expected-fail literal checks in the suite registry).
    """
    i, j = check_pair(pair)
    lat = b.total
    for a in b.part_elements(i):
        if (lat.complemented_mask >> a) & 1 and lat.up[a] == mask:
            return True
    return False


def nd_masks(b, pair, clopen=False):
    """Every (i, j)-nowhere dense sublocale mask (optionally only clopen)."""
    i, j = check_pair(pair)
    key = ("nd", i, clopen)
    if key not in b._cache:
        lat = b.total
        out = [m for m in _sublocale_masks(lat)
               if nowhere_dense_mask(b, m, pair)]
        if clopen:
            out = [m for m in out if is_ij_clopen(b, m, pair)]
        b._cache[key] = tuple(out)
    return b._cache[key]


def max_nd_masks(b, pair, weak=False):
    """The closed sublocales c(x) of (complemented) j-dense x in part i.

    Every (clopen) (i, j)-nowhere dense sublocale sits inside one of
    these, so missing them all is equivalent to missing every one.
    """
    i, j = check_pair(pair)
    lat = b.total
    return tuple(lat.up[x] for x in dense_part_elements(b, pair, weak))


# -- (i, j)-remoteness ---------------------------------------------------------


def is_ij_remote(b, sub, pair, weak=False, mode="definition"):
    """S misses every (clopen, if weak) (i, j)-nowhere dense sublocale.

    definition quantifies over the maximal nowhere dense family;
    characterization tests S inside every open o(a) of a (complemented)
    j-dense a in part i; oracle quantifies over the full enumerated
    nowhere dense family.
    """
    lat = b.total
    topbit = 1 << lat.top
    if mode == "definition":
        return all(sub.mask & m == topbit for m in max_nd_masks(b, pair, weak))
    if mode == "characterization":
        return all(sub.mask & ~lat.open_masks[a] == 0
                   for a in dense_part_elements(b, pair, weak))
    if mode == "oracle":
        return all(sub.mask & m == topbit for m in nd_masks(b, pair, clopen=weak))
    raise ValueError(f"unknown remoteness mode {mode!r}")


def remote_masks(b, pair, weak=False):
    """Every (weakly) (i, j)-remote sublocale mask, canonically ordered."""
    i, j = check_pair(pair)
    key = ("remote", i, weak)
    if key not in b._cache:
        lat = b.total
        maximal = max_nd_masks(b, pair, weak)
        topbit = 1 << lat.top
        b._cache[key] = tuple(
            m for m in _sublocale_masks(lat)
            if all(m & nd == topbit for nd in maximal))
    return b._cache[key]


def largest_ij_remote(b, pair, weak=False):
    """The join of all (weakly) (i, j)-remote sublocales; itself remote."""
    lat = b.total
    acc = 1 << lat.top
    for m in remote_masks(b, pair, weak):
        acc = kernel.meet_closure(lat.n, lat.meet, acc | m)
    out = Sublocale(lat, acc)
    if not is_ij_remote(b, out, pair, weak):
        raise AssertionError("join of remote sublocales failed to stay remote")
    return out


# -- the Rmt sublocale --------------------------------------------------------


def rmt_mask(b, pair, variant="weak"):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be 'weak' or 'strong', got {variant!r}")
    i, j = check_pair(pair)
    key = ("rmt", i, variant)
    if key not in b._cache:
        lat = b.total
        dense = dense_part_elements(b, pair, complemented_only=variant == "weak")
        mask = 0
        for x in range(lat.n):
            if all(lat.join_of(x, a) == lat.top for a in dense):
                mask |= 1 << x
        b._cache[key] = mask
    return b._cache[key]


def rmt(b, pair, variant="weak"):
    """Elements whose closed sublocales are weakly (i, j)-remote.

    The weak variant quantifies over complemented j-dense elements of
    part i (the displayed description of Rmt); strong drops the
    complementedness restriction.  Both are first-class because the
    source propositions split between them.
    """
    return Sublocale(b.total, rmt_mask(b, pair, variant))


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class BilocaleFlags:
    balanced: bool
    symmetric: bool
    boolean: bool


def classify_bilocale(b):
    """Balanced / symmetric / Boolean flags.

    In the balanced case the agreement of the two pseudocomplements
    (star and bullet) on part elements is re-verified as a consistency
    assertion.
    """
    lat = b.total
    balanced = all((b.part_mask(2) >> lat.star_of(x)) & 1
                   for x in b.part_elements(1)) and \
        all((b.part_mask(1) >> lat.star_of(x)) & 1 for x in b.part_elements(2))
    symmetric = b.part_mask(1) == lat.full_mask and b.part_mask(2) == lat.full_mask
    boolean = True
    for i, jdx in PAIRS:
        other = b.part_elements(jdx)
        for x in b.part_elements(i):
            if not any(lat.meet_of(x, c) == lat.bottom and
                       lat.join_of(x, c) == lat.top for c in other):
                boolean = False
                break
        if not boolean:
            break
    if balanced:
        for i in (1, 2):
            for a in b.part_elements(i):
                if lat.star_of(a) != bullet(b, a, i):
                    raise AssertionError(
                        "balanced bilocale with star != bullet; tables corrupt")
    return BilocaleFlags(balanced=balanced, symmetric=symmetric, boolean=boolean)
