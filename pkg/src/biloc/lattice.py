"""Finite bounded lattices with explicit order and operation tables.

Elements are integers ``0..n-1`` in input order; labels are kept for
printing only.  Sets of elements travel as int bit-masks.  A lattice is
immutable after construction; derived data (Heyting table, open-sublocale
masks, enumerations, ...) is cached lazily on the instance, so sharing a
lattice between many bilocales is cheap.
"""

from __future__ import annotations

from . import kernel
from .errors import CycleInOrder, NotAFrame, NotALattice, TooLarge

DEFAULT_MAX_ELEMENTS = 24


def popcount(mask):
    return bin(mask).count("1")


class FiniteLattice:
    """A finite bounded lattice.

    Build through :func:`build_lattice` (generating order pairs) or
    :func:`lattice_from_up` (full order relation); the constructor
    assumes the tables are already consistent.
    """

    __slots__ = ("name", "names", "n", "up", "down", "meet", "join",
                 "bottom", "top", "full_mask", "_cache")

    def __init__(self, names, up, down, meet, join, bottom, top, name="L"):
        self.name = name
        self.names = tuple(names)
        self.n = len(names)
        self.up = tuple(up)
        self.down = tuple(down)
        self.meet = tuple(meet)
        self.join = tuple(join)
        self.bottom = bottom
        self.top = top
        self.full_mask = (1 << self.n) - 1
        self._cache = {}

    # -- basic order and operations ------------------------------------

    def leq(self, a, b):
        return (self.up[a] >> b) & 1 == 1

    def meet_of(self, a, b):
        return self.meet[a * self.n + b]

    def join_of(self, a, b):
        return self.join[a * self.n + b]

    def meet_mask(self, mask):
        """Meet of a set of elements given as a mask (empty set: top)."""
        acc = self.top
        for x in kernel.bit_indices(mask):
            acc = self.meet[acc * self.n + x]
        return acc

    def join_mask(self, mask):
        """Join of a set of elements given as a mask (empty set: bottom)."""
        acc = self.bottom
        for x in kernel.bit_indices(mask):
            acc = self.join[acc * self.n + x]
        return acc

    def index(self, label):
        try:
            return self.names.index(label)
        except ValueError:
            raise ValueError(f"{self.name}: unknown element label {label!r}") from None

    def labels_of(self, mask):
        return [self.names[i] for i in kernel.bit_indices(mask)]

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, n={self.n})"

    # -- frame structure -------------------------------------------------

    @property
    def frame_witness(self):
        """A distributivity-violating triple, or None for a frame."""
        if "frame_witness" not in self._cache:
            self._cache["frame_witness"] = kernel.distributivity_witness(
                self.n, self.meet, self.join)
        return self._cache["frame_witness"]

    @property
    def is_frame(self):
        return self.frame_witness is None

    def _require_frame(self):
        w = self.frame_witness
        if w is not None:
            raise NotAFrame(*[self.names[i] for i in w])

    @property
    def hey(self):
        """Flat Heyting table; only available on frames."""
        if "hey" not in self._cache:
            self._require_frame()
            self._cache["hey"] = tuple(kernel.heyting_table(
                self.n, self.meet, self.join, self.down))
        return self._cache["hey"]

    def heyting_of(self, a, b):
        return self.hey[a * self.n + b]

    def star_of(self, a):
        """Pseudocomplement a -> bottom."""
        return self.hey[a * self.n + self.bottom]

    @property
    def complemented_mask(self):
        """Mask of elements a with a v a* = top."""
        if "complemented" not in self._cache:
            mask = 0
            for a in range(self.n):
                if self.join_of(a, self.star_of(a)) == self.top:
                    mask |= 1 << a
            self._cache["complemented"] = mask
        return self._cache["complemented"]

    @property
    def open_masks(self):
        """o(a) = {a -> x : x in L} for each a, as masks."""
        if "open_masks" not in self._cache:
            n = self.n
            out = []
            for a in range(n):
                m = 0
                row = a * n
                for x in range(n):
                    m |= 1 << self.hey[row + x]
                out.append(m)
            self._cache["open_masks"] = tuple(out)
        return self._cache["open_masks"]

    @property
    def b_masks(self):
        """b(a) = {x -> a : x in L}, the smallest sublocale containing a."""
        if "b_masks" not in self._cache:
            n = self.n
            out = []
            for a in range(n):
                m = 0
                for x in range(n):
                    m |= 1 << self.hey[x * n + a]
                out.append(m)
            self._cache["b_masks"] = tuple(out)
        return self._cache["b_masks"]

    @property
    def bool_mask(self):
        """The Booleanization {x -> 0 : x in L} as a mask."""
        return self.b_masks[self.bottom]

    @property
    def join_irreducible_mask(self):
        """Elements with exactly one lower cover (bottom excluded)."""
        if "ji" not in self._cache:
            mask = 0
            for a in range(self.n):
                below = self.down[a] & ~(1 << a)
                covers = [b for b in kernel.bit_indices(below)
                          if self.up[b] & below & ~(1 << b) == 0]
                if len(covers) == 1:
                    mask |= 1 << a
            self._cache["ji"] = mask
        return self._cache["ji"]

    # -- isomorphism ------------------------------------------------------

    @property
    def iso_invariant(self):
        """Cheap isomorphism-invariant fingerprint for dedup buckets."""
        if "iso_inv" not in self._cache:
            degs = sorted((popcount(self.down[i]), popcount(self.up[i]))
                          for i in range(self.n))
            meet_prof = sorted(
                sorted(popcount(self.down[self.meet_of(a, b)]) for b in range(self.n))
                for a in range(self.n))
            self._cache["iso_inv"] = (self.n, tuple(degs),
                                      tuple(tuple(row) for row in meet_prof))
        return self._cache["iso_inv"]

    def isomorphisms_to(self, other, first_only=True):
        """Order isomorphisms self -> other, found by backtracking."""
        if self.n != other.n or self.iso_invariant != other.iso_invariant:
            return []
        n = self.n
        mine = [(popcount(self.down[i]), popcount(self.up[i])) for i in range(n)]
        theirs = [(popcount(other.down[i]), popcount(other.up[i])) for i in range(n)]
        candidates = [[j for j in range(n) if theirs[j] == mine[i]] for i in range(n)]
        order = sorted(range(n), key=lambda i: len(candidates[i]))
        perm = [-1] * n
        used = [False] * n
        found = []

        def place(k):
            if k == n:
                found.append(tuple(perm))
                return not first_only
            i = order[k]
            for j in candidates[i]:
                if used[j]:
                    continue
                ok = True
                for kk in range(k):
                    i2 = order[kk]
                    if self.leq(i, i2) != other.leq(j, perm[i2]) or \
                       self.leq(i2, i) != other.leq(perm[i2], j):
                        ok = False
                        break
                if ok:
                    perm[i] = j
                    used[j] = True
                    if not place(k + 1):
                        perm[i] = -1
                        used[j] = False
                        return False
                    perm[i] = -1
                    used[j] = False
            return True

        place(0)
        return found

    def is_isomorphic(self, other):
        return bool(self.isomorphisms_to(other, first_only=True))

    @property
    def automorphisms(self):
        if "autos" not in self._cache:
            self._cache["autos"] = self.isomorphisms_to(self, first_only=False)
        return self._cache["autos"]


def _transitive_closure(rows):
    n = len(rows)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            for j in kernel.bit_indices(rows[i]):
                acc |= rows[j]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    return rows


def _tables_from_order(names, up, down):
    n = len(names)
    meet = [0] * (n * n)
    join = [0] * (n * n)
    for a in range(n):
        for b in range(a, n):
            lows = down[a] & down[b]
            glb = -1
            for c in kernel.bit_indices(lows):
                if lows & ~down[c] == 0:
                    glb = c
                    break
            if glb < 0:
                raise NotALattice("meet", names[a], names[b])
            highs = up[a] & up[b]
            lub = -1
            for c in kernel.bit_indices(highs):
                if highs & ~up[c] == 0:
                    lub = c
                    break
            if lub < 0:
                raise NotALattice("join", names[a], names[b])
            meet[a * n + b] = meet[b * n + a] = glb
            join[a * n + b] = join[b * n + a] = lub
    return meet, join


def lattice_from_up(names, up, name="L", max_elements=DEFAULT_MAX_ELEMENTS):
    """Build a lattice from a full reflexive order given as up-masks."""
    n = len(names)
    if n == 0:
        raise ValueError("a lattice needs at least one element")
    if n > max_elements:
        raise TooLarge(f"{name}: {n} elements exceeds the cap of {max_elements}")
    if len(set(names)) != n:
        raise ValueError(f"{name}: duplicate element labels")
    for i in range(n):
        if not (up[i] >> i) & 1:
            raise ValueError(f"{name}: order not reflexive at {names[i]}")
    for i in range(n):
        for j in kernel.bit_indices(up[i]):
            if i != j and (up[j] >> i) & 1:
                raise CycleInOrder(names[i], names[j])
            if up[j] & ~up[i]:
                raise ValueError(f"{name}: order not transitive at "
                                 f"{names[i]} <= {names[j]}")
    down = [0] * n
    for i in range(n):
        for j in kernel.bit_indices(up[i]):
            down[j] |= 1 << i
    meet, join = _tables_from_order(names, up, down)
    bottom = 0
    top = 0
    for x in range(n):
        bottom = meet[bottom * n + x]
        top = join[top * n + x]
    return FiniteLattice(names, up, down, meet, join, bottom, top, name=name)


def build_lattice(labels, order_pairs, name="L", max_elements=DEFAULT_MAX_ELEMENTS):
    """Build a lattice from labels and a generating set of order pairs.

    The reflexive-transitive closure of the pairs is computed; raises
    :class:`CycleInOrder` if antisymmetry fails and :class:`NotALattice`
    (with a witness pair) if some meet or join is missing.
    """
    labels = list(labels)
    n = len(labels)
    if n == 0:
        raise ValueError("a lattice needs at least one element")
    if len(set(labels)) != n:
        raise ValueError(f"{name}: duplicate element labels")
    if n > max_elements:
        raise TooLarge(f"{name}: {n} elements exceeds the cap of {max_elements}")
    pos = {lab: i for i, lab in enumerate(labels)}
    rows = [1 << i for i in range(n)]
    for lo, hi in order_pairs:
        if lo not in pos or hi not in pos:
            raise ValueError(f"{name}: order pair ({lo}, {hi}) uses unknown labels")
        rows[pos[lo]] |= 1 << pos[hi]
    rows = _transitive_closure(rows)
    for i in range(n):
        for j in kernel.bit_indices(rows[i]):
            if i != j and (rows[j] >> i) & 1:
                raise CycleInOrder(labels[i], labels[j])
    return lattice_from_up(labels, rows, name=name, max_elements=max_elements)


# -- spec-level operations ------------------------------------------------

def check_frame(lat):
    """True iff binary meets distribute over binary joins everywhere."""
    return lat.is_frame


def heyting(lat, a, b):
    """The largest c with c & a <= b (requires a frame)."""
    return lat.heyting_of(a, b)


def pseudocomplement(lat, a):
    """a* = a -> bottom; a is dense iff this is the bottom."""
    return lat.star_of(a)


def is_complemented(lat, a):
    """True iff a v a* is the top."""
    return lat.join_of(a, lat.star_of(a)) == lat.top


def is_dense_element(lat, a):
    """True iff a* is the bottom."""
    return lat.star_of(a) == lat.bottom
