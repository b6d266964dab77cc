"""Pure-Python bitmask kernel (fallback for the compiled ``_ckernel``).

Digraphs are lists of out-neighbour masks.  Separators are found by subset
enumeration in order of size, so these routines are only meant for the
small orders the exhaustive oracle visits.
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "python"


def decode(n: int, index: int) -> list[int]:
    out = [0] * n
    if n < 2:
        return out
    m = n - 1
    b = 0
    while index:
        if index & 1:
            u, r = divmod(b, m)
            out[u] |= 1 << (r if r < u else r + 1)
        index >>= 1
        b += 1
    return out


def _in_masks(out: list[int]) -> list[int]:
    inn = [0] * len(out)
    for u, m in enumerate(out):
        while m:
            low = m & -m
            inn[low.bit_length() - 1] |= 1 << u
            m ^= low
    return inn


def _reach(adj: list[int], mask: int, start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def _strong(out: list[int], inn: list[int], mask: int) -> bool:
    if not mask:
        return True
    start = (mask & -mask).bit_length() - 1
    return _reach(out, mask, start) == mask and _reach(inn, mask, start) == mask


def _find_separator(out: list[int], inn: list[int], mask: int, k: int) -> int:
    """Smallest S within ``mask``, ``|S| <= k-1``, leaving a non-strong rest; -1 if none."""
    verts = [v for v in range(len(out)) if (mask >> v) & 1]
    for s in range(k):
        for sep in combinations(verts, s):
            smask = 0
            for v in sep:
                smask |= 1 << v
            if not _strong(out, inn, mask & ~smask):
                return smask
    return -1


def _contains(out: list[int], inn: list[int], mask: int, k: int) -> int:
    if mask.bit_count() <= k:
        return 0
    sep = _find_separator(out, inn, mask, k)
    if sep < 0:
        return mask
    rest = mask & ~sep
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = _reach(out, rest, v) & _reach(inn, rest, v)
        rest &= ~comp
        found = _contains(out, inn, sep | comp, k)
        if found:
            return found
    return 0


def contains_k_strong(out_masks, k: int) -> int:
    """Vertex mask of a k-strong induced subdigraph, or 0."""
    out = list(out_masks)
    return _contains(out, _in_masks(out), (1 << len(out)) - 1, k)


def kappa(out_masks) -> int:
    out = list(out_masks)
    n = len(out)
    inn = _in_masks(out)
    full = (1 << n) - 1
    for s in range(n):
        for sep in combinations(range(n), s):
            smask = sum(1 << v for v in sep)
            rest = full & ~smask
            if rest.bit_count() <= 1 or not _strong(out, inn, rest):
                return s
    return max(n - 1, 0)


def _saturated(out: list[int], inn: list[int], n: int, k: int) -> bool:
    full = (1 << n) - 1
    if _contains(out, inn, full, k):
        return False
    for u in range(n):
        missing = full & ~out[u] & ~(1 << u)
        while missing:
            low = missing & -missing
            v = low.bit_length() - 1
            missing ^= low
            out[u] |= low
            inn[v] |= 1 << u
            found = _contains(out, inn, full, k)
            out[u] &= ~low
            inn[v] &= ~(1 << u)
            if not found:
                return False
    return True


def is_saturated(out_masks, k: int) -> bool:
    out = list(out_masks)
    return _saturated(out, _in_masks(out), len(out), k)


def scan_saturated(n: int, k: int, lo: int, hi: int, collect: bool = False):
    """Scan indices ``[lo, hi)`` for D_k-saturated digraphs.

    Returns ``(count, sat, sat_index, ex, ex_index, indices)`` where ``sat`` /
    ``ex`` are -1 when nothing was found and ``indices`` is a list only when
    ``collect`` is set.
    """
    count = 0
    sat = ex = sat_idx = ex_idx = -1
    found = [] if collect else None
    for idx in range(lo, hi):
        out = decode(n, idx)
        if _saturated(out, _in_masks(out), n, k):
            arcs = idx.bit_count()
            count += 1
            if sat < 0 or arcs < sat:
                sat, sat_idx = arcs, idx
            if arcs > ex:
                ex, ex_idx = arcs, idx
            if collect:
                found.append(idx)
    return count, sat, sat_idx, ex, ex_idx, found


def scan_free(n: int, k: int, lo: int, hi: int):
    """Count k-strong-free digraphs in ``[lo, hi)``; ``(count, max_arcs, max_index)``."""
    count = 0
    best = best_idx = -1
    full = (1 << n) - 1
    for idx in range(lo, hi):
        out = decode(n, idx)
        if not _contains(out, _in_masks(out), full, k):
            count += 1
            arcs = idx.bit_count()
            if arcs > best:
                best, best_idx = arcs, idx
    return count, best, best_idx
