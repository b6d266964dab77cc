# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernel; same functions and algorithm as ``_pykernel``."""

from libc.stdint cimport uint64_t

BACKEND = "cython"

cdef enum:
    MAXN = 63

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline int popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline uint64_t reach(const uint64_t* adj, uint64_t mask, int start) noexcept nogil:
    cdef uint64_t seen = (<uint64_t>1) << start
    cdef uint64_t frontier = seen
    cdef uint64_t nxt
    while frontier:
        nxt = 0
        while frontier:
            nxt |= adj[ctz(frontier)]
            frontier &= frontier - 1
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


cdef inline bint strong(const uint64_t* out, const uint64_t* inn, uint64_t mask) noexcept nogil:
    if mask == 0:
        return True
    cdef int start = ctz(mask)
    return reach(out, mask, start) == mask and reach(inn, mask, start) == mask


cdef bint find_separator(const uint64_t* out, const uint64_t* inn, uint64_t mask,
                         int k, uint64_t* result) noexcept nogil:
    cdef int verts[MAXN]
    cdef int idx[MAXN]
    cdef int m = 0
    cdef int s, i, j
    cdef uint64_t rest = mask, smask
    while rest:
        verts[m] = ctz(rest)
        m += 1
        rest &= rest - 1
    for s in range(k):
        if s > m:
            break
        for i in range(s):
            idx[i] = i
        while True:
            smask = 0
            for i in range(s):
                smask |= (<uint64_t>1) << verts[idx[i]]
            if not strong(out, inn, mask & ~smask):
                result[0] = smask
                return True
            # next combination in lexicographic order
            i = s - 1
            while i >= 0 and idx[i] == m - s + i:
                i -= 1
            if i < 0:
                break
            idx[i] += 1
            for j in range(i + 1, s):
                idx[j] = idx[j - 1] + 1
    return False


cdef uint64_t contains(const uint64_t* out, const uint64_t* inn, uint64_t mask, int k) noexcept nogil:
    cdef uint64_t sep, rest, comp, found
    cdef int v
    if popcount(mask) <= k:
        return 0
    if not find_separator(out, inn, mask, k, &sep):
        return mask
    rest = mask & ~sep
    while rest:
        v = ctz(rest)
        comp = reach(out, rest, v) & reach(inn, rest, v)
        rest &= ~comp
        found = contains(out, inn, sep | comp, k)
        if found:
            return found
    return 0


cdef void fill_in(const uint64_t* out, uint64_t* inn, int n) noexcept nogil:
    cdef int u
    cdef uint64_t m
    for u in range(n):
        inn[u] = 0
    for u in range(n):
        m = out[u]
        while m:
            inn[ctz(m)] |= (<uint64_t>1) << u
            m &= m - 1


cdef void decode_into(int n, uint64_t index, uint64_t* out) noexcept nogil:
    cdef int u, r, b
    for u in range(n):
        out[u] = 0
    while index:
        b = ctz(index)
        index &= index - 1
        u = b // (n - 1)
        r = b % (n - 1)
        out[u] |= (<uint64_t>1) << (r if r < u else r + 1)


cdef bint saturated(uint64_t* out, uint64_t* inn, int n, int k) noexcept nogil:
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef uint64_t missing, low, found
    cdef int u, v
    if contains(out, inn, full, k):
        return False
    for u in range(n):
        missing = full & ~out[u] & ~((<uint64_t>1) << u)
        while missing:
            low = missing & (~missing + 1)
            v = ctz(low)
            missing ^= low
            out[u] |= low
            inn[v] |= (<uint64_t>1) << u
            found = contains(out, inn, full, k)
            out[u] &= ~low
            inn[v] &= ~((<uint64_t>1) << u)
            if not found:
                return False
    return True


cdef int load(object out_masks, uint64_t* out, uint64_t* inn) except -1:
    cdef int n = len(out_masks)
    cdef int u
    if n > MAXN:
        raise ValueError(f"compiled kernel supports n <= {MAXN}, got {n}")
    for u in range(n):
        out[u] = out_masks[u]
    fill_in(out, inn, n)
    return n


def decode(int n, index):
    cdef uint64_t out[MAXN]
    if n > 8:
        raise ValueError("index decoding is limited to n <= 8")
    if n < 2:
        return [0] * n
    decode_into(n, index, out)
    return [out[u] for u in range(n)]


def contains_k_strong(out_masks, int k):
    cdef uint64_t out[MAXN]
    cdef uint64_t inn[MAXN]
    cdef int n = load(out_masks, out, inn)
    if n == 0:
        return 0
    return contains(out, inn, ((<uint64_t>1) << n) - 1, k)


def kappa(out_masks):
    cdef uint64_t out[MAXN]
    cdef uint64_t inn[MAXN]
    cdef uint64_t sep
    cdef int n = load(out_masks, out, inn)
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    if n <= 1:
        return 0
    # sizes 0..n-2 leave at least two vertices; size n-1 always separates
    if find_separator(out, inn, full, n - 1, &sep):
        return popcount(sep)
    return n - 1


def is_saturated(out_masks, int k):
    cdef uint64_t out[MAXN]
    cdef uint64_t inn[MAXN]
    cdef int n = load(out_masks, out, inn)
    return bool(saturated(out, inn, n, k))


def scan_saturated(int n, int k, lo, hi, bint collect=False):
    cdef uint64_t out[MAXN]
    cdef uint64_t inn[MAXN]
    cdef uint64_t idx = lo, end = hi
    cdef long long count = 0
    cdef int sat = -1, ex = -1, arcs
    cdef uint64_t sat_idx = 0, ex_idx = 0
    cdef list found = [] if collect else None
    if n < 1 or n > 7:
        raise ValueError("scan_saturated supports 1 <= n <= 7")
    while idx < end:
        decode_into(n, idx, out)
        fill_in(out, inn, n)
        if saturated(out, inn, n, k):
            arcs = popcount(idx)
            count += 1
            if sat < 0 or arcs < sat:
                sat = arcs
                sat_idx = idx
            if arcs > ex:
                ex = arcs
                ex_idx = idx
            if collect:
                found.append(idx)
        idx += 1
    return (count, sat, sat_idx if sat >= 0 else -1,
            ex, ex_idx if ex >= 0 else -1, found)


def scan_free(int n, int k, lo, hi):
    cdef uint64_t out[MAXN]
    cdef uint64_t inn[MAXN]
    cdef uint64_t idx = lo, end = hi
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    cdef long long count = 0
    cdef int best = -1, arcs
    cdef uint64_t best_idx = 0
    if n < 1 or n > 7:
        raise ValueError("scan_free supports 1 <= n <= 7")
    while idx < end:
        decode_into(n, idx, out)
        fill_in(out, inn, n)
        if not contains(out, inn, full, k):
            count += 1
            arcs = popcount(idx)
            if arcs > best:
                best = arcs
                best_idx = idx
        idx += 1
    return count, best, best_idx if best >= 0 else -1
