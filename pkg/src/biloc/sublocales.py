"""Sublocales of a finite frame.

A sublocale is a subset of the lattice closed under all meets and under
x -> (-) for every x.  Values are thin wrappers around a bit-mask; the
void sublocale O is {top}, never the empty set.  All set outputs are
reported in ascending element order, and enumerations are sorted by the
member tuple, so every operation here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernel
from .errors import MixedParents, TooLarge
from .lattice import FiniteLattice

BRUTE_CAP = 12


@dataclass(frozen=True)
class Sublocale:
    parent: FiniteLattice = field(repr=False)
    mask: int

    def __post_init__(self):
        if self.mask == 0:
            raise ValueError("a sublocale is never empty; the void one is {top}")

    @property
    def members(self):
        return tuple(kernel.bit_indices(self.mask))

    @property
    def labels(self):
        return [self.parent.names[i] for i in self.members]

    def __contains__(self, element):
        return (self.mask >> element) & 1 == 1

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def __le__(self, other):
        return self.issubset(other)

    def __repr__(self):
        return "Sublocale({%s})" % ", ".join(self.labels)

    def is_void(self):
        return self.mask == 1 << self.parent.top

    def is_whole(self):
        return self.mask == self.parent.full_mask


def void(lat):
    """The smallest sublocale O = {top}."""
    return Sublocale(lat, 1 << lat.top)


def whole(lat):
    """The lattice itself as its largest sublocale."""
    return Sublocale(lat, lat.full_mask)


def sublocale_violation(lat, mask):
    """None if the mask is a sublocale, else a (kind, witness) pair."""
    if mask == 0:
        return ("empty", ())
    if not (mask >> lat.top) & 1:
        return ("top-missing", (lat.names[lat.top],))
    elems = kernel.bit_indices(mask)
    n = lat.n
    for i, x in enumerate(elems):
        for y in elems[i:]:
            m = lat.meet[x * n + y]
            if not (mask >> m) & 1:
                return ("meet", (lat.names[x], lat.names[y], lat.names[m]))
    for x in range(n):
        for s in elems:
            h = lat.hey[x * n + s]
            if not (mask >> h) & 1:
                return ("heyting", (lat.names[x], lat.names[s], lat.names[h]))
    return None


def is_sublocale(lat, members):
    """True iff the mask (or Sublocale) satisfies the sublocale conditions."""
    mask = members.mask if isinstance(members, Sublocale) else members
    return sublocale_violation(lat, mask) is None


def _checked(lat, mask, what):
    v = sublocale_violation(lat, mask)
    if v is not None:  # all callers construct genuine sublocales
        raise AssertionError(f"{what} produced a non-sublocale: {v}")
    return Sublocale(lat, mask)


def closed_sublocale(lat, a):
    """c(a): the up-set of a."""
    return Sublocale(lat, lat.up[a])


def open_sublocale(lat, a):
    """o(a) = {a -> x : x in L}, the complement of c(a)."""
    return Sublocale(lat, lat.open_masks[a])


def b_of(lat, a):
    """b(a): the smallest sublocale containing a.

    Computed as the intersection of every enumerated sublocale containing
    a, and cross-checked against the direct description {x -> a : x in L}.
    """
    direct = lat.b_masks[a]
    inter = lat.full_mask
    for m in _sublocale_masks(lat):
        if (m >> a) & 1:
            inter &= m
    if inter != direct:
        raise AssertionError("b(a) descriptions disagree; lattice tables corrupt")
    return Sublocale(lat, direct)


def booleanization(lat):
    """B(L) = {x -> 0 : x in L}, the least dense sublocale."""
    return _checked(lat, lat.bool_mask, "booleanization")


def nu(sub, a):
    """nu_S(a): the least member of S above a."""
    lat = sub.parent
    return lat.meet_mask(sub.mask & lat.up[a])


def closure(sub):
    """The smallest closed sublocale containing S: c(meet of S)."""
    lat = sub.parent
    return closed_sublocale(lat, lat.meet_mask(sub.mask))


def interior(sub):
    """The largest open sublocale inside S."""
    lat = sub.parent
    acc = lat.bottom
    for a in range(lat.n):
        if lat.open_masks[a] & ~sub.mask == 0:
            acc = lat.join_of(acc, a)
    return open_sublocale(lat, acc)


def is_dense_sub(lat, sub):
    """Dense: the closure is the whole lattice, i.e. meet of S is 0."""
    return lat.meet_mask(sub.mask) == lat.bottom


def is_nowhere_dense(lat, sub):
    """Nowhere dense: S meets the Booleanization only at the top."""
    return sub.mask & lat.bool_mask == 1 << lat.top


def is_remote_plain(lat, mask):
    """Misses every plain nowhere dense sublocale of the lattice."""
    topbit = 1 << lat.top
    return all(mask & m == topbit
               for m in _sublocale_masks(lat)
               if m & lat.bool_mask == topbit)


def join_sublocales(subs):
    """Join: the closure of the union under all meets."""
    subs = list(subs)
    if not subs:
        raise ValueError("join of no sublocales is undefined; pass [void(L)]")
    lat = subs[0].parent
    union = 0
    for s in subs:
        if s.parent is not lat:
            raise MixedParents("join operands live in different lattices")
        union |= s.mask
    return _checked(lat, kernel.meet_closure(lat.n, lat.meet, union), "join")


def meet_sublocales(subs):
    """Meet: plain intersection."""
    subs = list(subs)
    if not subs:
        raise ValueError("meet of no sublocales is undefined; pass [whole(L)]")
    lat = subs[0].parent
    inter = lat.full_mask
    for s in subs:
        if s.parent is not lat:
            raise MixedParents("meet operands live in different lattices")
        inter &= s.mask
    return Sublocale(lat, inter)


def supplement(lat, sub):
    """L minus S: the largest sublocale missing S (brute-force join)."""
    key = ("supplement", sub.mask)
    if key not in lat._cache:
        topbit = 1 << lat.top
        acc = topbit
        for m in _sublocale_masks(lat):
            if m & sub.mask == topbit:
                acc = kernel.meet_closure(lat.n, lat.meet, acc | m)
        lat._cache[key] = acc
    return Sublocale(lat, lat._cache[key])


def _sublocale_masks(lat):
    """Canonical tuple of every sublocale mask (generated mode, cached)."""
    if "sublocales" not in lat._cache:
        seeds = [1 << lat.top]
        seeds.extend(lat.b_masks)
        masks = kernel.generated_sublocales(lat.n, lat.meet, sorted(set(seeds)))
        masks.sort(key=lambda m: tuple(kernel.bit_indices(m)))
        lat._cache["sublocales"] = tuple(masks)
    return lat._cache["sublocales"]


def enumerate_sublocales(lat, mode="generated"):
    """All sublocales, canonically ordered.

    ``generated`` closes {O} and the b(a) under pairwise joins; ``brute``
    filters every subset (only for lattices of at most 12 elements) and
    exists as an independent oracle for the generated mode.
    """
    if mode == "generated":
        masks = _sublocale_masks(lat)
    elif mode == "brute":
        if lat.n > BRUTE_CAP:
            raise TooLarge(
                f"brute sublocale enumeration is capped at {BRUTE_CAP} elements")
        masks = kernel.brute_sublocales(lat.n, lat.meet, lat.hey, lat.top)
        masks = sorted(masks, key=lambda m: tuple(kernel.bit_indices(m)))
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    return [Sublocale(lat, m) for m in masks]


def is_clopen_sublocale(lat, sub):
    """True iff S is c(a) for a complemented a.

    The equivalent open/closed double description is recomputed as a
    consistency assertion.
    """
    closed_form = any(lat.up[a] == sub.mask
                      for a in kernel.bit_indices(lat.complemented_mask))
    both_forms = any(lat.up[a] == sub.mask for a in range(lat.n)) and \
        any(lat.open_masks[b] == sub.mask for b in range(lat.n))
    if closed_form != both_forms:
        raise AssertionError("clopen tests disagree; lattice tables corrupt")
    return closed_form
