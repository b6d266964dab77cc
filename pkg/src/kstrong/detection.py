"""Does a digraph contain a k-strongly connected subdigraph?

Adding arcs never creates a separator, so a k-strong subdigraph exists iff
some *induced* subdigraph is k-strong; witnesses are vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .connectivity import kappa, min_separator, separation
from .digraph import Digraph, DigraphError


@dataclass(frozen=True)
class DetectionResult:
    contains: bool
    witness: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.contains

    def to_dict(self) -> dict:
        return {
            "contains": self.contains,
            "witness": sorted(self.witness) if self.witness is not None else None,
        }


def _check_k(k: int) -> None:
    if k <= 0:
        raise DigraphError(f"k must be positive, got {k}")


def contains_k_strong(digraph: Digraph, k: int) -> DetectionResult:
    """Recursive separator decomposition.

    A k-strong subdigraph cannot meet two strong components of ``D - S`` when
    ``|S| <= k - 1``, so it lives inside a single S-lobe.
    """
    _check_k(k)
    found = _search(digraph, k)
    if found is None:
        return DetectionResult(False)
    return DetectionResult(True, frozenset(found))


def _search(digraph: Digraph, k: int) -> tuple[int, ...] | None:
    if digraph.n <= k:
        return None
    if kappa(digraph) >= k:
        return tuple(range(digraph.n))
    sep = separation(digraph, min_separator(digraph))
    if len(sep.components) < 2:
        # D - S trivial: only reachable when n <= k, kept for safety.
        return None
    for lobe in sep.lobes:
        found = _search(lobe.digraph, k)
        if found is not None:
            return tuple(lobe.vertices[i] for i in found)
    return None


# -- exhaustive oracle ---------------------------------------------------

BRUTEFORCE_MAX_N = 8


def _strong_table(digraph: Digraph) -> list[bool]:
    """strong[mask] for every vertex subset, by plain forward/backward search."""
    n = digraph.n
    out, inn = digraph.out_masks, digraph.in_masks
    table = [True] * (1 << n)
    for mask in range(1, 1 << n):
        start = (mask & -mask).bit_length() - 1
        ok = True
        for adj in (out, inn):
            seen = 1 << start
            stack = [start]
            while stack:
                x = stack.pop()
                new = adj[x] & mask & ~seen
                seen |= new
                stack.extend(v for v in range(n) if (new >> v) & 1)
            if seen != mask:
                ok = False
                break
        table[mask] = ok
    return table


def contains_k_strong_bruteforce(digraph: Digraph, k: int, max_n: int = BRUTEFORCE_MAX_N) -> bool:
    """True iff some vertex set W, ``|W| >= k+1``, has every ``W - S`` strong
    for all ``S`` with ``|S| <= k-1`` (the definition of k-strong, spelled out).
    """
    _check_k(k)
    n = digraph.n
    if n > max_n:
        raise DigraphError(f"exhaustive detection limited to n <= {max_n}, got {n}")
    strong = _strong_table(digraph)
    for size in range(n, k, -1):
        for w in combinations(range(n), size):
            if _kappa_at_least(strong, w, k):
                return True
    return False


def _kappa_at_least(strong: list[bool], vertices: tuple[int, ...], k: int) -> bool:
    wmask = 0
    for v in vertices:
        wmask |= 1 << v
    for s in range(k):
        for sep in combinations(vertices, s):
            smask = 0
            for v in sep:
                smask |= 1 << v
            if not strong[wmask & ~smask]:
                return False
    return True


def kappa_bruteforce(digraph: Digraph) -> int:
    """Smallest S with ``D - S`` not strong or trivial, by subset enumeration."""
    n = digraph.n
    if n == 0:
        raise DigraphError("connectivity of the empty digraph is undefined")
    strong = _strong_table(digraph)
    full = (1 << n) - 1
    for s in range(n):
        for sep in combinations(range(n), s):
            smask = sum(1 << v for v in sep)
            rest = full & ~smask
            if rest.bit_count() <= 1 or not strong[rest]:
                return s
    return n - 1  # pragma: no cover
