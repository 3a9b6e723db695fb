# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure kernels in ``_kernel_py``.

Same signatures, same results; element counts are limited to 31 so that
subset masks fit comfortably in 64-bit words (``biloc.kernel`` routes
larger calls to the pure implementation).
"""

from cpython cimport array
import array

BACKEND_NAME = "compiled"

ctypedef unsigned long long u64


cdef array.array _ints(obj):
    if isinstance(obj, array.array):
        return obj
    return array.array("i", obj)


cdef inline int _lowest_bit(u64 m) nogil:
    cdef int k = 0
    while not (m >> k) & 1:
        k += 1
    return k


def bit_indices(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    cdef u64 m = mask
    cdef int k = 0
    while m:
        if m & 1:
            out.append(k)
        m >>= 1
        k += 1
    return out


def distributivity_witness(int n, meet, join):
    cdef array.array meet_a = _ints(meet), join_a = _ints(join)
    cdef int[:] mt = meet_a, jt = join_a
    cdef int a, b, c, ab
    for a in range(n):
        for b in range(n):
            ab = mt[a * n + b]
            for c in range(n):
                if mt[a * n + jt[b * n + c]] != jt[ab * n + mt[a * n + c]]:
                    return (a, b, c)
    return None


def heyting_table(int n, meet, join, down):
    cdef array.array meet_a = _ints(meet), join_a = _ints(join)
    cdef int[:] mt = meet_a, jt = join_a
    cdef list down_l = list(down)
    cdef array.array out = array.array("i", [0]) * (n * n)
    cdef int[:] hv = out
    cdef u64 mb
    cdef int a, b, c, acc
    for a in range(n):
        for b in range(n):
            mb = down_l[b]
            acc = 0
            for c in range(n):
                if (mb >> mt[c * n + a]) & 1:
                    acc = jt[acc * n + c]
            hv[a * n + b] = acc
    return list(out)


cdef u64 _meet_closure(int n, int[:] mt, u64 mask) nogil:
    cdef u64 closed = mask, work = mask
    cdef int x, y, m
    cdef u64 ybits
    while work:
        x = _lowest_bit(work)
        work &= work - 1
        ybits = closed
        while ybits:
            y = _lowest_bit(ybits)
            ybits &= ybits - 1
            m = mt[x * n + y]
            if not (closed >> m) & 1:
                closed |= (<u64>1) << m
                work |= (<u64>1) << m
    return closed


def meet_closure(int n, meet, mask):
    cdef array.array meet_a = _ints(meet)
    cdef int[:] mt = meet_a
    return _meet_closure(n, mt, <u64>mask)


cdef bint _both_closed(int n, int[:] mt, int[:] jt, u64 mask) nogil:
    cdef u64 xbits = mask, ybits
    cdef int x, y
    while xbits:
        x = _lowest_bit(xbits)
        xbits &= xbits - 1
        ybits = mask
        while ybits:
            y = _lowest_bit(ybits)
            ybits &= ybits - 1
            if y > x:
                break
            if not (mask >> mt[x * n + y]) & 1:
                return False
            if not (mask >> jt[x * n + y]) & 1:
                return False
    return True


def closed_subsets(int n, meet, join, required):
    cdef array.array meet_a = _ints(meet), join_a = _ints(join)
    cdef int[:] mt = meet_a, jt = join_a
    cdef u64 req = required, mask, pick, low
    cdef int nfree = 0, i
    cdef int free[64]
    for i in range(n):
        if not (req >> i) & 1:
            free[nfree] = i
            nfree += 1
    out = []
    cdef u64 total = (<u64>1) << nfree
    cdef u64 p
    for pick in range(total):
        mask = req
        p = pick
        while p:
            low = p & (~p + 1)
            mask |= (<u64>1) << free[_lowest_bit(low)]
            p &= p - 1
        if _both_closed(n, mt, jt, mask):
            out.append(mask)
    out.sort()
    return out


cdef bint _is_subloc(int n, int[:] mt, int[:] ht, u64 mask) nogil:
    cdef u64 xbits = mask, sbits
    cdef int x, s
    while xbits:
        x = _lowest_bit(xbits)
        xbits &= xbits - 1
        sbits = mask
        while sbits:
            s = _lowest_bit(sbits)
            sbits &= sbits - 1
            if s > x:
                break
            if not (mask >> mt[x * n + s]) & 1:
                return False
    for x in range(n):
        sbits = mask
        while sbits:
            s = _lowest_bit(sbits)
            sbits &= sbits - 1
            if not (mask >> ht[x * n + s]) & 1:
                return False
    return True


def brute_sublocales(int n, meet, hey, int top):
    cdef array.array meet_a = _ints(meet), hey_a = _ints(hey)
    cdef int[:] mt = meet_a, ht = hey_a
    cdef int nrest = 0, i
    cdef int rest[64]
    for i in range(n):
        if i != top:
            rest[nrest] = i
            nrest += 1
    cdef u64 topbit = (<u64>1) << top
    cdef u64 total = (<u64>1) << nrest
    cdef u64 pick, mask, p, low
    out = []
    for pick in range(total):
        mask = topbit
        p = pick
        while p:
            low = p & (~p + 1)
            mask |= (<u64>1) << rest[_lowest_bit(low)]
            p &= p - 1
        if _is_subloc(n, mt, ht, mask):
            out.append(mask)
    out.sort()
    return out


def generated_sublocales(int n, meet, seeds):
    cdef array.array meet_a = _ints(meet)
    cdef int[:] mt = meet_a
    known = set()
    cdef u64 s, t, j
    for s in seeds:
        known.add(s)
    frontier = list(known)
    while frontier:
        s = frontier.pop()
        for t in sorted(known):
            j = _meet_closure(n, mt, s | t)
            if j not in known:
                known.add(j)
                frontier.append(j)
    return sorted(known)


cdef u64 _meets_mask(int n, int[:] mt, u64 mask1, u64 mask2) nogil:
    cdef u64 acc = 0, xbits = mask1, ybits
    cdef int x, y
    while xbits:
        x = _lowest_bit(xbits)
        xbits &= xbits - 1
        ybits = mask2
        while ybits:
            y = _lowest_bit(ybits)
            ybits &= ybits - 1
            acc |= (<u64>1) << mt[x * n + y]
    return acc


def meets_mask(int n, meet, mask1, mask2):
    cdef array.array meet_a = _ints(meet)
    cdef int[:] mt = meet_a
    return _meets_mask(n, mt, <u64>mask1, <u64>mask2)


def generation_witness(int n, meet, join, down, mask1, mask2):
    cdef array.array meet_a = _ints(meet), join_a = _ints(join)
    cdef int[:] mt = meet_a, jt = join_a
    cdef list down_l = list(down)
    cdef u64 mm = _meets_mask(n, mt, <u64>mask1, <u64>mask2)
    cdef u64 avail, low
    cdef int a, acc
    for a in range(n):
        avail = mm & <u64>down_l[a]
        acc = 0
        while avail:
            low = avail & (~avail + 1)
            acc = jt[acc * n + _lowest_bit(low)]
            avail &= avail - 1
        if acc != a:
            return a
    return -1


def generation_pairs(int n, meet, join, down, masks, ji_mask):
    cdef array.array meet_a = _ints(meet)
    cdef int[:] mt = meet_a
    cdef u64 ji = ji_mask
    cdef int k = len(masks), i, j
    cdef array.array marr = array.array("Q", masks)
    cdef u64[:] mv = marr
    out = []
    for i in range(k):
        for j in range(i, k):
            if ji & ~_meets_mask(n, mt, mv[i], mv[j]):
                continue
            out.append((i, j))
    return out
