"""Pure-Python bit-mask kernels.

These are the hot inner loops of the workbench: subset-closure
enumeration, sublocale generation, and the bilocale generation-axiom
filter, all over element bit-masks with precomputed flat ``n*n``
operation tables.  A compiled twin lives in ``_speedups.pyx``;
``biloc.kernel`` selects whichever is importable at run time.  The two
implementations must stay behaviourally identical -- see
``tests/test_kernel_backends.py``.

Conventions: lattice elements are integers ``0..n-1``; a subset of
elements is an ``int`` whose bit ``k`` is set iff element ``k`` is in
the subset; ``meet``/``join``/``hey`` are flat row-major tables of
length ``n*n``; ``down[b]`` is the mask of elements ``<= b``.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def bit_indices(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def distributivity_witness(n, meet, join):
    """First triple (a, b, c) with a&(b|c) != (a&b)|(a&c), or None."""
    for a in range(n):
        arow = a * n
        for b in range(n):
            ab = meet[arow + b]
            for c in range(n):
                if meet[arow + join[b * n + c]] != join[ab * n + meet[arow + c]]:
                    return (a, b, c)
    return None


def heyting_table(n, meet, join, down):
    """Flat table of a -> b, the join of every c with c & a <= b.

    Only meaningful on frames; there the candidate set is join-closed,
    so folding binary joins reaches its maximum.
    """
    hey = [0] * (n * n)
    for a in range(n):
        for b in range(n):
            mb = down[b]
            acc = 0
            for c in range(n):
                if (mb >> meet[c * n + a]) & 1:
                    acc = join[acc * n + c]
            hey[a * n + b] = acc
    return hey


def meet_closure(n, meet, mask):
    """Smallest superset of ``mask`` closed under binary meet."""
    closed = mask
    work = bit_indices(mask)
    while work:
        x = work.pop()
        xr = x * n
        for y in bit_indices(closed):
            m = meet[xr + y]
            if not (closed >> m) & 1:
                closed |= 1 << m
                work.append(m)
    return closed


def closed_subsets(n, meet, join, required):
    """All masks containing ``required`` closed under meet and join."""
    free = [i for i in range(n) if not (required >> i) & 1]
    nfree = len(free)
    out = []
    for pick in range(1 << nfree):
        mask = required
        p = pick
        while p:
            low = p & -p
            mask |= 1 << free[low.bit_length() - 1]
            p ^= low
        elems = bit_indices(mask)
        ok = True
        for i, x in enumerate(elems):
            xr = x * n
            for y in elems[i:]:
                if not (mask >> meet[xr + y]) & 1 or not (mask >> join[xr + y]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    out.sort()
    return out


def brute_sublocales(n, meet, hey, top):
    """All sublocale masks, by filtering every subset containing the top."""
    rest = [i for i in range(n) if i != top]
    nrest = len(rest)
    topbit = 1 << top
    out = []
    for pick in range(1 << nrest):
        mask = topbit
        p = pick
        while p:
            low = p & -p
            mask |= 1 << rest[low.bit_length() - 1]
            p ^= low
        if _is_sublocale_mask(n, meet, hey, mask):
            out.append(mask)
    out.sort()
    return out


def _is_sublocale_mask(n, meet, hey, mask):
    elems = bit_indices(mask)
    for i, x in enumerate(elems):
        xr = x * n
        for y in elems[i:]:
            if not (mask >> meet[xr + y]) & 1:
                return False
    for x in range(n):
        xr = x * n
        for s in elems:
            if not (mask >> hey[xr + s]) & 1:
                return False
    return True


def generated_sublocales(n, meet, seeds):
    """Close the seed masks under pairwise sublocale join.

    The join of two sublocales is the meet-closure of their union, so a
    fixpoint of pairwise joins over the seeds (which must include the
    void sublocale and every principal b(a)) reaches every sublocale.
    """
    known = set(seeds)
    frontier = list(seeds)
    while frontier:
        s = frontier.pop()
        for t in sorted(known):
            j = meet_closure(n, meet, s | t)
            if j not in known:
                known.add(j)
                frontier.append(j)
    return sorted(known)


def meets_mask(n, meet, mask1, mask2):
    """Mask of all pairwise meets a1 & a2 with a1 in mask1, a2 in mask2."""
    acc = 0
    e2 = bit_indices(mask2)
    for x in bit_indices(mask1):
        xr = x * n
        for y in e2:
            acc |= 1 << meet[xr + y]
    return acc


def generation_witness(n, meet, join, down, mask1, mask2):
    """First element not reached by joins of part-wise meets below it.

    Returns -1 when the generation axiom holds.
    """
    mm = meets_mask(n, meet, mask1, mask2)
    for a in range(n):
        avail = mm & down[a]
        acc = 0
        while avail:
            low = avail & -avail
            acc = join[acc * n + (low.bit_length() - 1)]
            avail ^= low
        if acc != a:
            return a
    return -1


def generation_pairs(n, meet, join, down, masks, ji_mask):
    """Index pairs (i, j), i <= j, of subframe masks that assemble a bilocale.

    Fast path: generation holds iff every join-irreducible is a
    part-wise meet (every element is the join of the join-irreducibles
    below it, and a join-irreducible that is a join of meets below it
    must itself be one of those meets).
    """
    out = []
    k = len(masks)
    for i in range(k):
        mi = masks[i]
        for j in range(i, k):
            if ji_mask & ~meets_mask(n, meet, mi, masks[j]):
                continue
            out.append((i, j))
    return out
