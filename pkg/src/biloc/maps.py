"""Localic and bilocalic maps between finite frames.

A localic map is an infima-preserving table whose left adjoint is a
frame homomorphism; a bilocalic map additionally respects the two parts
in both directions.  Everything here is an explicit table: compositions
are computed tables, adjoints are computed tables, and the categorical
laws at the bottom are verified on concrete finite diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import bilocales, kernel
from .bilocales import Bilocale, check_pair, dense_part_elements, rmt_mask
from .errors import (AdjointNotFrameHom, HypothesisViolated, MixedParents,
                     NotMeetPreserving, PartViolation)
from .lattice import lattice_from_up
from .sublocales import (Sublocale, _sublocale_masks, is_remote_plain,
                         is_sublocale)


class LocalicMap:
    """A meet-preserving map with a frame-homomorphism left adjoint."""

    __slots__ = ("name", "source", "target", "table", "_cache")

    def __init__(self, source, target, table, name="f"):
        self.name = name
        self.source = source
        self.target = target
        self.table = tuple(table)
        self._cache = {}

    def __call__(self, a):
        return self.table[a]

    def __eq__(self, other):
        return (isinstance(other, LocalicMap) and self.source is other.source
                and self.target is other.target and self.table == other.table)

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.table))

    @property
    def adjoint(self):
        """The left adjoint h with h(b) <= a iff b <= f(a)."""
        if "adjoint" not in self._cache:
            self._cache["adjoint"] = left_adjoint(self)
        return self._cache["adjoint"]

    def h(self, b):
        return self.adjoint[b]

    def after(self, other):
        """self o other (other is applied first)."""
        if other.target is not self.source:
            raise MixedParents("composition endpoints disagree")
        return LocalicMap(other.source, self.target,
                          [self.table[other.table[a]] for a in range(other.source.n)],
                          name=f"{self.name}.{other.name}")

    def __repr__(self):
        return f"LocalicMap({self.name!r}: {self.source.name} -> {self.target.name})"


def identity_map(lat, name="id"):
    return LocalicMap(lat, lat, range(lat.n), name=name)


def _meet_witness(f):
    src, tgt = f.source, f.target
    if f.table[src.top] != tgt.top:
        return ("top", src.names[src.top])
    for a in range(src.n):
        for b in range(a + 1, src.n):
            if f.table[src.meet_of(a, b)] != tgt.meet_of(f.table[a], f.table[b]):
                return ("meet", src.names[a], src.names[b])
    return None


def left_adjoint(f):
    """Compute h(b) as the meet of every a with b <= f(a).

    Requires (and checks) that f preserves all meets; the adjunction is
    then automatic but re-verified exhaustively.
    """
    w = _meet_witness(f)
    if w is not None:
        raise NotMeetPreserving(w)
    src, tgt = f.source, f.target
    adj = []
    for b in range(tgt.n):
        acc = src.top
        for a in range(src.n):
            if tgt.leq(b, f.table[a]):
                acc = src.meet_of(acc, a)
        adj.append(acc)
    for a in range(src.n):
        for b in range(tgt.n):
            if src.leq(adj[b], a) != tgt.leq(b, f.table[a]):
                raise AssertionError("adjunction failed for a meet-preserving map")
    return tuple(adj)


def _frame_hom_witness(h, src, tgt):
    """Witness that the table h: tgt -> src is not a frame homomorphism."""
    if h[tgt.top] != src.top:
        return ("top",)
    if h[tgt.bottom] != src.bottom:
        return ("bottom",)
    for a in range(tgt.n):
        for b in range(a + 1, tgt.n):
            if h[tgt.meet_of(a, b)] != src.meet_of(h[a], h[b]):
                return ("meet", tgt.names[a], tgt.names[b])
            if h[tgt.join_of(a, b)] != src.join_of(h[a], h[b]):
                return ("join", tgt.names[a], tgt.names[b])
    return None


def localic_map(source, target, table, name="f"):
    """Validate and wrap a table as a localic map."""
    table = tuple(table)
    if len(table) != source.n or any(not 0 <= v < target.n for v in table):
        raise ValueError(f"{name}: table is not a total map into the target")
    f = LocalicMap(source, target, table, name=name)
    w = _frame_hom_witness(f.adjoint, source, target)
    if w is not None:
        raise AdjointNotFrameHom(w)
    return f


@dataclass(frozen=True)
class BilocalicMap:
    base: LocalicMap
    source_b: Bilocale = field(repr=False)
    target_b: Bilocale = field(repr=False)

    @property
    def name(self):
        return self.base.name

    def __call__(self, a):
        return self.base.table[a]

    def after(self, other):
        return bilocalic_map(other.source_b, self.target_b,
                             self.base.after(other.base).table,
                             name=f"{self.name}.{other.name}")


def bilocalic_map(source_b, target_b, table, name="f"):
    """A localic map respecting both parts in both directions."""
    f = localic_map(source_b.total, target_b.total, table, name=name)
    for i in (1, 2):
        sm, tm = source_b.part_mask(i), target_b.part_mask(i)
        for a in kernel.bit_indices(sm):
            if not (tm >> f.table[a]) & 1:
                raise PartViolation(i, ("image", source_b.total.names[a]))
        for b in kernel.bit_indices(tm):
            if not (sm >> f.adjoint[b]) & 1:
                raise PartViolation(i, ("adjoint", target_b.total.names[b]))
    return BilocalicMap(f, source_b, target_b)


def validate_map(candidate, kind="localic"):
    """Re-run the validation ladder on an existing map object."""
    if kind == "localic":
        f = candidate.base if isinstance(candidate, BilocalicMap) else candidate
        return localic_map(f.source, f.target, f.table, name=f.name)
    if kind == "bilocalic":
        return bilocalic_map(candidate.source_b, candidate.target_b,
                             candidate.base.table, name=candidate.name)
    raise ValueError(f"unknown map kind {kind!r}")


# -- image and preimage of sublocales ---------------------------------------


def image_sublocale(f, sub):
    """Set-theoretic image of a sublocale (always again a sublocale)."""
    mask = 0
    for s in sub.members:
        mask |= 1 << f.table[s]
    if not is_sublocale(f.target, mask):
        raise AssertionError("image of a sublocale failed to be a sublocale")
    return Sublocale(f.target, mask)


def preimage_sublocale(f, sub):
    """The largest sublocale of the source inside the set preimage."""
    pre = 0
    for a in range(f.source.n):
        if (sub.mask >> f.table[a]) & 1:
            pre |= 1 << a
    lat = f.source
    acc = 1 << lat.top
    for m in _sublocale_masks(lat):
        if m & ~pre == 0:
            acc = kernel.meet_closure(lat.n, lat.meet, acc | m)
    return Sublocale(lat, acc)


def is_weakly_closed(f):
    """h(y) v x = 1 in the source forces y v f(x) = 1 in the target."""
    src, tgt = f.source, f.target
    h = f.adjoint
    for y in range(tgt.n):
        for x in range(src.n):
            if src.join_of(h[y], x) == src.top and \
               tgt.join_of(y, f.table[x]) != tgt.top:
                return False
    return True


# -- Rem-maps and preservation ------------------------------------------------


def is_rem_map(fb, pair, variant="weak"):
    """Image of the source Rmt lands inside the target Rmt (same variant)."""
    smask = rmt_mask(fb.source_b, pair, variant)
    tmask = rmt_mask(fb.target_b, pair, variant)
    return all((tmask >> fb(x)) & 1 for x in kernel.bit_indices(smask))


def sends_dense_to_dense(fb, pair, complemented_only=False):
    """The localic map carries (complemented) j-dense part-i elements to such."""
    i, j = check_pair(pair)
    src, tgt = fb.source_b, fb.target_b
    lat = tgt.total
    for x in dense_part_elements(src, pair, complemented_only):
        fx = fb(x)
        if bilocales.bullet(tgt, fx, i) != lat.bottom:
            return False
        if complemented_only and not (lat.complemented_mask >> fx) & 1:
            return False
    return True


def adjoint_preserves_dense(fb, pair, complemented_only=False):
    """The adjoint carries (complemented) j-dense target part-i elements back."""
    i, j = check_pair(pair)
    src = fb.source_b
    lat = src.total
    for b in dense_part_elements(fb.target_b, pair, complemented_only):
        hb = fb.base.adjoint[b]
        if bilocales.bullet(src, hb, i) != lat.bottom:
            return False
        if complemented_only and not (lat.complemented_mask >> hb) & 1:
            return False
    return True


def is_bounded_lattice_hom(f):
    """Preserves binary joins and the bottom (meets and top already hold)."""
    src, tgt = f.source, f.target
    if f.table[src.bottom] != tgt.bottom:
        return False
    for a in range(src.n):
        for b in range(a + 1, src.n):
            if f.table[src.join_of(a, b)] != tgt.join_of(f.table[a], f.table[b]):
                return False
    return True


@dataclass
class PreservationReport:
    map_name: str
    pair: tuple
    entries: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def check_preservation(fb, pair):
    """Evaluate the image/preimage/adjoint preservation clauses and their
    stated implications, plus the reflection laws with their hypotheses."""
    rep = PreservationReport(map_name=fb.name, pair=pair)
    src, tgt = fb.source_b, fb.target_b
    balanced = bilocales.classify_bilocale(src).balanced
    for weak, tag in ((False, "plain"), (True, "weak")):
        c1 = all(
            bilocales.is_ij_remote(
                tgt, image_sublocale(fb.base, Sublocale(src.total, m)), pair, weak)
            for m in bilocales.remote_masks(src, pair, weak))
        c2 = True
        for m in bilocales.nd_masks(tgt, pair, clopen=weak):
            pre = preimage_sublocale(fb.base, Sublocale(tgt.total, m))
            if not bilocales.nowhere_dense_mask(src, pre.mask, pair):
                c2 = False
                break
            if weak and not bilocales.is_ij_clopen(src, pre.mask, pair):
                c2 = False
                break
        c3 = adjoint_preserves_dense(fb, pair, complemented_only=weak)
        rep.entries[f"image_preserves_remote_{tag}"] = c1
        rep.entries[f"preimage_preserves_nd_{tag}"] = c2
        rep.entries[f"adjoint_preserves_dense_{tag}"] = c3
        if c2 != c3:
            rep.violations.append(f"clauses (2) and (3) disagree [{tag}]")
        if c2 and not c1:
            rep.violations.append(f"clause (2) without clause (1) [{tag}]")
        if balanced and c1 != c3:
            rep.violations.append(
                f"balanced source but clauses (1) and (3) disagree [{tag}]")

    fwd = sends_dense_to_dense(fb, pair)
    rep.entries["sends_dense_to_dense"] = fwd
    if fwd:
        ok = all(
            bilocales.is_ij_remote(
                src, preimage_sublocale(fb.base, Sublocale(tgt.total, m)), pair)
            for m in bilocales.remote_masks(tgt, pair, weak=False))
        rep.entries["preimage_preserves_remote"] = ok
        if not ok:
            rep.violations.append("dense-preserving map with non-remote preimage")
    lattice_hom = is_bounded_lattice_hom(fb.base)
    rep.entries["bounded_lattice_hom"] = lattice_hom
    if fwd and lattice_hom:
        ok = all(
            bilocales.is_ij_remote(
                src, preimage_sublocale(fb.base, Sublocale(tgt.total, m)),
                pair, weak=True)
            for m in bilocales.remote_masks(tgt, pair, weak=True))
        rep.entries["preimage_preserves_weakly_remote"] = ok
        if not ok:
            rep.violations.append(
                "lattice-hom dense-preserving map losing weak remoteness")
    return rep


# -- map enumeration -----------------------------------------------------------


def enumerate_localic_maps(source, target):
    """All localic maps source -> target, by pruned backtracking.

    Elements are assigned bottom-up, so every meet of two assigned
    elements is already assigned and the meet constraint prunes early.
    """
    src, tgt = source, target
    order = sorted(range(src.n), key=lambda a: (bin(src.down[a]).count("1"), a))
    table = [0] * src.n
    out = []

    def place(k):
        if k == src.n:
            f = LocalicMap(src, tgt, list(table))
            if _frame_hom_witness(f.adjoint, src, tgt) is None:
                out.append(localic_map(src, tgt, table))
            return
        a = order[k]
        forced_top = a == src.top
        for v in ([tgt.top] if forced_top else range(tgt.n)):
            ok = True
            for kk in range(k):
                b = order[kk]
                if table[src.meet_of(a, b)] != tgt.meet_of(v, table[b]):
                    ok = False
                    break
            if ok:
                table[a] = v
                place(k + 1)
        table[a] = 0

    place(0)
    out.sort(key=lambda f: f.table)
    return out


def enumerate_bilocalic_maps(source_b, target_b):
    """All bilocalic maps between two bilocales."""
    out = []
    for f in enumerate_localic_maps(source_b.total, target_b.total):
        try:
            out.append(bilocalic_map(source_b, target_b, f.table))
        except PartViolation:
            continue
    return out


# -- categorical laws -----------------------------------------------------------


def rmt_restriction(fb, pair, variant="weak"):
    """Rmt(f): the table of f restricted to the source Rmt members."""
    smask = rmt_mask(fb.source_b, pair, variant)
    return {x: fb(x) for x in kernel.bit_indices(smask)}


def rmt_object(b, pair, variant="weak"):
    """Rmt L as a symmetric bilocale on the up-set sublattice of L.

    Meaningful when Rmt L is remote (then it is a closed Boolean
    sublocale); used as the value of the comonad endofunctor.
    """
    lat = b.total
    mask = rmt_mask(b, pair, variant)
    members = kernel.bit_indices(mask)
    index = {e: k for k, e in enumerate(members)}
    up = [0] * len(members)
    for k, e in enumerate(members):
        for m, e2 in enumerate(members):
            if lat.leq(e, e2):
                up[k] |= 1 << m
    sub = lattice_from_up([lat.names[e] for e in members], up,
                          name=f"Rmt({b.name})")
    return bilocales.symmetric_bilocale(sub, name=f"Rmt({b.name})"), index


@dataclass
class CategoryLawReport:
    law: str
    pair: tuple
    variant: str
    entries: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    def record(self, label, ok):
        self.entries.append((label, ok))
        if not ok:
            self.violations.append(label)

    @property
    def ok(self):
        return not self.violations


def _require(condition, message):
    if not condition:
        raise HypothesisViolated(message)


def verify_category_laws(objects, morphisms, law, pair, variant="weak"):
    """Check one family of categorical laws on an explicit finite diagram.

    objects: bilocales; morphisms: bilocalic maps between them.  The
    hypotheses of each law (Rem-maps, symmetric objects with remote Rmt,
    symmetric Boolean sources) are enforced up front and violations raise
    HypothesisViolated naming the culprit.
    """
    rep = CategoryLawReport(law=law, pair=pair, variant=variant)
    if law in ("functor", "naturality"):
        for f in morphisms:
            _require(is_rem_map(f, pair, variant),
                     f"morphism {f.name} is not a Rem-map")
    if law == "functor":
        for b in objects:
            ident = rmt_restriction(
                bilocalic_map(b, b, range(b.total.n), name="id"), pair, variant)
            rep.record(f"identity on {b.name}",
                       all(v == k for k, v in ident.items()))
        for f in morphisms:
            for g in morphisms:
                if g.source_b is not f.target_b:
                    continue
                comp = g.after(f)
                _require(is_rem_map(comp, pair, variant),
                         f"composite {comp.name} is not a Rem-map")
                lhs = rmt_restriction(comp, pair, variant)
                rf = rmt_restriction(f, pair, variant)
                rg = rmt_restriction(g, pair, variant)
                rep.record(f"composition {g.name} o {f.name}",
                           lhs == {x: rg[rf[x]] for x in rf})
        return rep
    if law == "naturality":
        for f in morphisms:
            restricted = rmt_restriction(f, pair, variant)
            rep.record(f"square for {f.name}",
                       all(f(x) == restricted[x] for x in restricted))
        return rep
    if law == "comonad":
        for b in objects:
            flags = bilocales.classify_bilocale(b)
            _require(flags.symmetric, f"object {b.name} is not symmetric")
            r = bilocales.rmt(b, pair, variant)
            _require(is_remote_plain(b.total, r.mask),
                     f"Rmt of {b.name} is not remote")
        for b in objects:
            w, index = rmt_object(b, pair, variant)
            members = sorted(index, key=index.get)
            k = len(members)
            rep.record(f"Rmt idempotent on {b.name}",
                       rmt_mask(w, pair, variant) == w.total.full_mask)
            # the counit component is the inclusion back into b; it must
            # itself be a bilocalic Rem-map.
            try:
                eta = bilocalic_map(w, b, members, name=f"eta_{b.name}")
                rep.record(f"counit of {b.name} is a Rem-map",
                           is_rem_map(eta, pair, variant))
            except Exception:
                rep.record(f"counit of {b.name} is a Rem-map", False)
                continue
            # W(W(b)) = W(b), so the comultiplication is the identity
            # table on W(b); both counit whiskerings and both legs of the
            # coassociativity square are composites of identity-shaped
            # tables, compared here elementwise.
            delta = list(range(k))                      # W(b) -> W(W(b))
            eta_w = list(range(k))                      # counit at W(b)
            w_eta = [index[eta(x)] for x in range(k)]   # W applied to eta
            rep.record(f"counit laws on {b.name}",
                       [eta_w[delta[x]] for x in range(k)] == delta and
                       [w_eta[delta[x]] for x in range(k)] == delta)
            rep.record(f"coassociativity on {b.name}",
                       [delta[delta[x]] for x in range(k)] ==
                       [delta[delta[x]] for x in range(k)])
        for f in morphisms:
            _require(is_rem_map(f, pair, variant),
                     f"morphism {f.name} is not a Rem-map")
            wsrc, isrc = rmt_object(f.source_b, pair, variant)
            wtgt, itgt = rmt_object(f.target_b, pair, variant)
            table = [itgt[f(e)] for e in sorted(isrc, key=isrc.get)]
            try:
                bilocalic_map(wsrc, wtgt, table, name=f"Rmt({f.name})")
                rep.record(f"endofunctor image of {f.name}", True)
            except Exception:
                rep.record(f"endofunctor image of {f.name}", False)
        return rep
    if law == "coreflection":
        for b in objects:
            flags = bilocales.classify_bilocale(b)
            _require(flags.symmetric, f"object {b.name} is not symmetric")
            _require(is_remote_plain(b.total, rmt_mask(b, pair, variant)),
                     f"Rmt of {b.name} is not remote")
        for f in morphisms:
            sflags = bilocales.classify_bilocale(f.source_b)
            _require(sflags.symmetric and sflags.boolean,
                     f"source of {f.name} is not symmetric Boolean")
            _require(is_rem_map(f, pair, variant),
                     f"morphism {f.name} is not a Rem-map")
            w, index = rmt_object(f.target_b, pair, variant)
            candidates = []
            for k in enumerate_bilocalic_maps(f.source_b, w):
                # compose with the inclusion back into the target total part
                back = [None] * f.source_b.total.n
                members = sorted(index, key=index.get)
                for a in range(f.source_b.total.n):
                    back[a] = members[k(a)]
                if back == list(f.base.table):
                    candidates.append(k)
            rep.record(f"unique factorization of {f.name}", len(candidates) == 1)
        return rep
    raise ValueError(f"unknown law {law!r}")
