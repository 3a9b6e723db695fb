"""Exhaustive and seeded generation of desk-scale structures.

Finite posets are built up one point at a time (a new point is glued
onto a down-set/up-set pair), deduplicated by canonical relabelling at
every size; their down-set lattices are exactly the finite distributive
lattices, so the lattice stream is exhaustive up to isomorphism by
construction.  Bilocale generation enumerates subframe pairs and keeps
the ones satisfying the generation axiom, deduplicating by lattice
automorphism; bispace generation enumerates topology pairs up to a
simultaneous point permutation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .. import kernel
from ..bilocales import validate_bilocale
from ..bispaces import Bispace, _close_family
from ..lattice import lattice_from_up, popcount


@dataclass(frozen=True)
class Bounds:
    """Default sweep bounds: exhaustive and small."""

    max_poset_points: int = 4
    max_bispace_points: int = 4
    max_lattice_elements: int = 16
    max_map_elements: int = 4


EXHAUSTIVE_POSET_CAP = 5


def _canonical_poset(up):
    n = len(up)
    best = None
    for perm in permutations(range(n)):
        rows = [0] * n
        for i in range(n):
            for j in kernel.bit_indices(up[i]):
                rows[perm[i]] |= 1 << perm[j]
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best


def generate_posets(max_points, mode="exhaustive", seed=0, count=0):
    """All posets with up to max_points elements, up to isomorphism.

    Posets are up-mask tuples (reflexive).  Exhaustive mode is capped at
    five points; random mode draws `count` posets of exactly max_points
    points from seeded random DAG closures.
    """
    if mode == "random":
        rng = random.Random(seed)
        out = []
        for _ in range(count):
            n = max_points
            rows = [1 << i for i in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    if rng.random() < 0.4:
                        rows[i] |= 1 << j
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
            out.append(tuple(rows))
        return out
    if max_points > EXHAUSTIVE_POSET_CAP:
        raise ValueError(
            f"exhaustive poset generation is capped at {EXHAUSTIVE_POSET_CAP}")
    levels = [[()]]
    for _ in range(1, max_points + 1):
        seen = set()
        for up in levels[-1]:
            old = len(up)
            downsets = [m for m in range(1 << old) if _is_downset(up, m)]
            upsets = [m for m in range(1 << old) if _is_upset(up, m)]
            for d in downsets:
                for u in upsets:
                    if d & u:
                        continue
                    if any(not (up[x] >> y) & 1
                           for x in kernel.bit_indices(d)
                           for y in kernel.bit_indices(u)):
                        continue
                    rows = [up[i] | ((1 << old) if (d >> i) & 1 else 0)
                            for i in range(old)]
                    rows.append((1 << old) | u)
                    seen.add(_canonical_poset(rows))
        levels.append(sorted(seen))
    out = []
    for lvl in levels:
        out.extend(lvl)
    return out


def _is_downset(up, mask):
    for x in kernel.bit_indices(mask):
        for y in range(len(up)):
            if (up[y] >> x) & 1 and not (mask >> y) & 1:
                return False
    return True


def _is_upset(up, mask):
    for x in kernel.bit_indices(mask):
        if up[x] & ~mask:
            return False
    return True


def downset_lattice(up, name="D"):
    """The lattice of down-closed subsets of a poset, ordered by inclusion."""
    n = len(up)
    downsets = []
    for m in range(1 << n):
        ok = True
        for x in kernel.bit_indices(m):
            for y in range(n):
                if (up[y] >> x) & 1 and not (m >> y) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            downsets.append(m)
    downsets.sort(key=lambda m: (popcount(m), m))
    k = len(downsets)
    rows = [0] * k
    for i, a in enumerate(downsets):
        for j, b in enumerate(downsets):
            if a & ~b == 0:
                rows[i] |= 1 << j
    labels = [f"x{i}" for i in range(k)]
    return lattice_from_up(labels, rows, name=name, max_elements=max(k, 24))


def generate_lattices(max_poset_points, mode="exhaustive", seed=0, count=0,
                      max_elements=None):
    """Down-set lattices of the generated posets, deduplicated up to
    isomorphism (fingerprint buckets refined by exact search)."""
    posets = generate_posets(max_poset_points, mode=mode, seed=seed, count=count)
    buckets = {}
    out = []
    sizes = {}
    for up in posets:
        p = len(up)
        if p == 0:
            continue
        sizes[p] = sizes.get(p, 0)
        lat = downset_lattice(up, name=f"dl{p}p{sizes[p]}")
        sizes[p] += 1
        if max_elements is not None and lat.n > max_elements:
            continue
        inv = lat.iso_invariant
        if any(lat.is_isomorphic(other) for other in buckets.get(inv, [])):
            continue
        buckets.setdefault(inv, []).append(lat)
        out.append(lat)
    return out


def subframe_masks(lat):
    """All subframe masks of a frame, cached on the lattice."""
    if "subframes" not in lat._cache:
        required = (1 << lat.bottom) | (1 << lat.top)
        lat._cache["subframes"] = tuple(kernel.closed_subsets(
            lat.n, lat.meet, lat.join, required))
    return lat._cache["subframes"]


def generate_bilocales(lat, mode="exhaustive", up_to_iso=True, seed=0, count=0):
    """Bilocales on a frame: subframe pairs passing the generation axiom.

    Pairs are unordered (both index orientations are checked downstream)
    and, with up_to_iso, deduplicated under the lattice's automorphism
    group.  The symmetric bilocale is always present.  Random mode closes
    seeded generator subsets instead of enumerating every subframe.
    """
    if mode == "random":
        rng = random.Random(seed)
        cand = set()
        full = lat.full_mask
        required = (1 << lat.bottom) | (1 << lat.top)
        for _ in range(count):
            m1 = required
            m2 = required
            for x in range(lat.n):
                if rng.random() < 0.5:
                    m1 |= 1 << x
                if rng.random() < 0.5:
                    m2 |= 1 << x
            m1 = _frame_closure(lat, m1)
            m2 = _frame_closure(lat, m2)
            cand.add((min(m1, m2), max(m1, m2)))
        cand.add((full, full))
        pairs = sorted(cand)
        pairs = [p for p in pairs
                 if kernel.generation_witness(lat.n, lat.meet, lat.join,
                                              lat.down, p[0], p[1]) < 0]
    else:
        masks = subframe_masks(lat)
        idx_pairs = kernel.generation_pairs(
            lat.n, lat.meet, lat.join, lat.down, list(masks),
            lat.join_irreducible_mask)
        pairs = [(masks[i], masks[j]) for i, j in idx_pairs]
    if up_to_iso:
        autos = lat.automorphisms
        if len(autos) > 1:
            keep = []
            seen = set()
            for m1, m2 in pairs:
                orbit_min = None
                for perm in autos:
                    p1 = _apply_perm(m1, perm)
                    p2 = _apply_perm(m2, perm)
                    key = (min(p1, p2), max(p1, p2))
                    if orbit_min is None or key < orbit_min:
                        orbit_min = key
                if orbit_min not in seen:
                    seen.add(orbit_min)
                    keep.append((m1, m2))
            pairs = keep
    out = []
    for k, (m1, m2) in enumerate(pairs):
        out.append(validate_bilocale(lat, m1, m2, name=f"{lat.name}b{k}"))
    return out


def _apply_perm(mask, perm):
    out = 0
    for x in kernel.bit_indices(mask):
        out |= 1 << perm[x]
    return out


def _frame_closure(lat, mask):
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


# -- bispaces ----------------------------------------------------------------


def all_topologies(n):
    """Every topology on n labelled points (families of subset masks)."""
    full = (1 << n) - 1
    middles = [m for m in range(full + 1) if m not in (0, full)]
    out = []
    for pick in range(1 << len(middles)):
        fam = {0, full}
        p = pick
        while p:
            low = p & -p
            fam.add(middles[low.bit_length() - 1])
            p ^= low
        ok = True
        for a in sorted(fam):
            for b in sorted(fam):
                if a | b not in fam or a & b not in fam:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(sorted(fam, key=lambda m: (popcount(m), m))))
    out.sort()
    return out


def _permute_family(fam, perm):
    out = []
    for m in fam:
        pm = 0
        for x in kernel.bit_indices(m):
            pm |= 1 << perm[x]
        out.append(pm)
    return tuple(sorted(out, key=lambda m: (popcount(m), m)))


def generate_bispaces(max_points):
    """Bispaces on 1..max_points points, exhaustive over topology pairs
    up to a simultaneous point permutation and a swap of the two
    topologies (both index orientations run downstream)."""
    out = []
    for n in range(1, max_points + 1):
        topos = all_topologies(n)
        perms = list(permutations(range(n)))
        variants = [tuple(_permute_family(t, perm) for perm in perms)
                    for t in topos]
        seen = set()
        idx = 0
        points = [chr(ord("a") + i) for i in range(n)]
        for a, t1 in enumerate(topos):
            for b, t2 in enumerate(topos):
                key = min(
                    min(zip(variants[a], variants[b])),
                    min(zip(variants[b], variants[a])))
                if key in seen:
                    continue
                seen.add(key)
                tau = _close_family(tuple(set(t1) | set(t2)), (1 << n) - 1)
                out.append(Bispace(f"bs{n}p{idx}", points, t1, t2, tau))
                idx += 1
    return out
