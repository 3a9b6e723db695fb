"""Finite bitopological spaces and the bridge to bilocales.

Point subsets travel as bit-masks over the point list.  The join
topology tau of the two declared topologies becomes a finite frame whose
elements are the tau-opens sorted by (size, mask); a point subset A
induces the sublocale A~ of that frame, and the conservativity report
verifies that the spatial notions (closure, (tau_i, tau_j)-nowhere
density, remoteness, i-density, the bullet of an open set) transfer to
their bilocale counterparts on sup-T_D spaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bilocales, kernel
from .errors import NotATopology
from .lattice import lattice_from_up, popcount
from .sublocales import Sublocale


def _close_family(masks, full):
    """Close a family of subsets under union and intersection."""
    fam = set(masks)
    fam.add(0)
    fam.add(full)
    frontier = sorted(fam)
    while frontier:
        a = frontier.pop()
        for b in sorted(fam):
            for c in (a | b, a & b):
                if c not in fam:
                    fam.add(c)
                    frontier.append(c)
    return tuple(sorted(fam, key=lambda m: (popcount(m), m)))


def _family_violation(masks, full):
    fam = set(masks)
    if 0 not in fam:
        return "missing the empty set"
    if full not in fam:
        return "missing the full point set"
    for a in sorted(fam):
        for b in sorted(fam):
            if a | b not in fam:
                return f"not union-closed at {a:#x}, {b:#x}"
            if a & b not in fam:
                return f"not intersection-closed at {a:#x}, {b:#x}"
    return None


class Bispace:
    """A finite point set with two topologies and their join topology."""

    __slots__ = ("name", "points", "n", "tau1", "tau2", "tau", "full", "_cache")

    def __init__(self, name, points, tau1, tau2, tau):
        self.name = name
        self.points = tuple(points)
        self.n = len(points)
        self.full = (1 << self.n) - 1
        self.tau1 = tau1
        self.tau2 = tau2
        self.tau = tau
        self._cache = {}

    def tau_of(self, i):
        if i == 1:
            return self.tau1
        if i == 2:
            return self.tau2
        raise ValueError(f"topology index must be 1 or 2, got {i!r}")

    def point_mask(self, labels):
        m = 0
        for lab in labels:
            m |= 1 << self.points.index(lab)
        return m

    def set_label(self, mask):
        return "{%s}" % ",".join(self.points[i] for i in kernel.bit_indices(mask))

    def __repr__(self):
        return (f"Bispace({self.name!r}, |X|={self.n}, |tau1|={len(self.tau1)}, "
                f"|tau2|={len(self.tau2)}, |tau|={len(self.tau)})")


def build_bispace(points, opens1, opens2, generate=True, name="X"):
    """Assemble a bispace from two open-set families.

    With ``generate`` the families are closed under union and finite
    intersection (plus the empty and full sets); otherwise they are
    validated as given and NotATopology carries a witness.
    """
    points = list(points)
    if len(set(points)) != len(points):
        raise ValueError(f"{name}: duplicate point labels")
    full = (1 << len(points)) - 1
    fams = []
    for idx, opens in ((1, opens1), (2, opens2)):
        masks = []
        for o in opens:
            if isinstance(o, int):
                masks.append(o)
            else:
                m = 0
                for lab in o:
                    try:
                        m |= 1 << points.index(lab)
                    except ValueError:
                        raise ValueError(
                            f"{name}: open set uses unknown point {lab!r}") from None
                masks.append(m)
        if generate:
            fams.append(_close_family(masks, full))
        else:
            v = _family_violation(masks, full)
            if v is not None:
                raise NotATopology(idx, v)
            fams.append(tuple(sorted(set(masks), key=lambda m: (popcount(m), m))))
    tau = _close_family(fams[0] + fams[1], full)
    return Bispace(name, points, fams[0], fams[1], tau)


# -- spatial operators ----------------------------------------------------


def interior_in(family, mask):
    """Union of the family members inside the mask."""
    acc = 0
    for u in family:
        if u & ~mask == 0:
            acc |= u
    return acc


def closure_in(space, family, mask):
    return space.full & ~interior_in(family, space.full & ~mask)


def tau_interior(space, mask):
    return interior_in(space.tau, mask)


def tau_closure(space, mask):
    return closure_in(space, space.tau, mask)


def is_sup_td(space):
    """Every point has a tau-open U containing it with U minus the point open."""
    touts = set(space.tau)
    for x in range(space.n):
        bit = 1 << x
        if not any(u & bit and (u & ~bit) in touts for u in space.tau):
            return False
    return True


def is_tau_dense(space, family_index, mask):
    """Density of a point set with respect to one of the two topologies."""
    return closure_in(space, space.tau_of(family_index), mask) == space.full


def tau_ij_nowhere_dense(space, mask, pair):
    """Int_{tau_j}(cl_{tau_i}(A)) is empty."""
    i, j = bilocales.check_pair(pair)
    closed = closure_in(space, space.tau_of(i), mask)
    return interior_in(space.tau_of(j), closed) == 0


def nd_subsets(space, pair):
    """All (tau_i, tau_j)-nowhere dense point sets, cached."""
    i, j = bilocales.check_pair(pair)
    key = ("nd", i)
    if key not in space._cache:
        space._cache[key] = tuple(
            f for f in range(space.full + 1)
            if tau_ij_nowhere_dense(space, f, pair))
    return space._cache[key]


def tau_ij_remote(space, mask, pair, mode="definition"):
    """A meets no (tau_i, tau_j)-nowhere dense subset.

    definition sweeps every subset of the points; characterization tests
    A inside every tau_j-dense member of tau_i.
    """
    i, j = bilocales.check_pair(pair)
    if mode == "definition":
        return all(mask & f == 0 for f in nd_subsets(space, pair))
    if mode == "characterization":
        return all(mask & ~u == 0
                   for u in space.tau_of(i) if is_tau_dense(space, j, u))
    raise ValueError(f"unknown remoteness mode {mode!r}")


# -- the bridge to bilocales ------------------------------------------------


def to_bilocale(space):
    """The bilocale (tau, tau1, tau2) on the frame of tau-opens."""
    if "bilocale" not in space._cache:
        opens = space.tau
        index = {u: k for k, u in enumerate(opens)}
        n = len(opens)
        up = [0] * n
        for k, u in enumerate(opens):
            for m, v in enumerate(opens):
                if u & ~v == 0:
                    up[k] |= 1 << m
        labels = [space.set_label(u) for u in opens]
        lat = lattice_from_up(labels, up, name=f"O({space.name})",
                              max_elements=max(n, 24))
        m1 = 0
        for u in space.tau1:
            m1 |= 1 << index[u]
        m2 = 0
        for u in space.tau2:
            m2 |= 1 << index[u]
        space._cache["open_index"] = index
        space._cache["bilocale"] = bilocales.validate_bilocale(
            lat, m1, m2, name=space.name)
    return space._cache["bilocale"]


def open_element(space, open_mask):
    """The frame element carrying a tau-open point set."""
    to_bilocale(space)
    return space._cache["open_index"][open_mask]


def induced_sublocale(space, mask):
    """A~ = {Int_tau((X minus A) union G) : G in tau} inside the tau-frame."""
    key = ("induced", mask)
    if key not in space._cache:
        b = to_bilocale(space)
        complement = space.full & ~mask
        members = 0
        for g in space.tau:
            members |= 1 << open_element(space, tau_interior(space, complement | g))
        space._cache[key] = Sublocale(b.total, members)
    return space._cache[key]


def point_sublocale_element(space, x):
    """The frame element Int_tau(X minus {x}) testing point membership."""
    return open_element(space, tau_interior(space, space.full & ~(1 << x)))


# -- conservativity -------------------------------------------------------


@dataclass
class ConservativityReport:
    space: str
    skipped: bool = False
    reason: str = ""
    failures: list = field(default_factory=list)
    checks_run: int = 0

    @property
    def ok(self):
        return self.skipped or not self.failures


def conservativity_check(space):
    """Verify the space-to-bilocale transfer laws on every point subset.

    Scoped to sup-T_D spaces (others are reported as skipped): the
    induced-closure law, nowhere-density and remoteness conservativity,
    i-density conservativity, point membership, plus the bullet identity
    for opens (which needs no separation axiom).
    """
    rep = ConservativityReport(space=space.name)
    b = to_bilocale(space)
    lat = b.total

    def record(law, pair, subject, ok):
        rep.checks_run += 1
        if not ok:
            rep.failures.append((law, pair, subject))

    for pair in bilocales.PAIRS:
        i, j = pair
        for u in space.tau_of(i):
            e = open_element(space, u)
            spatial = open_element(space, space.full & ~closure_in(
                space, space.tau_of(j), u))
            record("bullet_identity", pair, space.set_label(u),
                   bilocales.bullet(b, e, i) == spatial)

    if not is_sup_td(space):
        rep.skipped = True
        rep.reason = "space is not sup-T_D; conservativity laws are out of scope"
        return rep

    point_elts = [point_sublocale_element(space, x) for x in range(space.n)]
    for amask in range(space.full + 1):
        label = space.set_label(amask)
        ind = induced_sublocale(space, amask)
        for x in range(space.n):
            record("point_membership", None, label,
                   bool(amask >> x & 1) == (point_elts[x] in ind))
        for pair in bilocales.PAIRS:
            i, j = pair
            closed = closure_in(space, space.tau_of(i), amask)
            record("biclo", pair, label,
                   induced_sublocale(space, closed).mask ==
                   bilocales.cl_mask(b, ind.mask, i))
            record("ijnd_conservative", pair, label,
                   tau_ij_nowhere_dense(space, amask, pair) ==
                   bilocales.nowhere_dense_mask(b, ind.mask, pair))
            record("remote_conservative", pair, label,
                   tau_ij_remote(space, amask, pair) ==
                   bilocales.is_ij_remote(b, ind, pair))
            record("idense_conservative", pair, label,
                   (closure_in(space, space.tau_of(i), amask) == space.full) ==
                   bilocales.is_index_dense_sublocale(b, ind, i))
    return rep
