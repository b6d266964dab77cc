"""The D_k-saturation predicate and greedy saturating completion."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .detection import contains_k_strong
from .digraph import Arc, Digraph, DigraphError


@dataclass(frozen=True)
class SaturationReport:
    k: int
    free: bool
    violating_arcs: tuple[Arc, ...]
    witness_for: dict[Arc, frozenset[int]] = field(default_factory=dict, compare=False)
    free_witness: frozenset[int] | None = None

    @property
    def saturated(self) -> bool:
        return self.free and not self.violating_arcs

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "saturated": self.saturated,
            "free": self.free,
            "free_witness": sorted(self.free_witness) if self.free_witness else None,
            "violating_arcs": [list(a) for a in self.violating_arcs],
            "witnesses": [
                {"arc": list(arc), "vertices": sorted(w)}
                for arc, w in sorted(self.witness_for.items())
            ],
        }


def is_saturated(digraph: Digraph, k: int) -> SaturationReport:
    """Full report: every missing arc is tested, witnesses are kept."""
    if k <= 0:
        raise DigraphError(f"k must be positive, got {k}")
    own = contains_k_strong(digraph, k)
    violating = []
    witnesses = {}
    for u, v in digraph.complement_arcs():
        res = contains_k_strong(digraph.add_arc(u, v), k)
        if res.contains:
            witnesses[(u, v)] = res.witness
        else:
            violating.append((u, v))
    return SaturationReport(
        k=k,
        free=not own.contains,
        violating_arcs=tuple(violating),
        witness_for=witnesses,
        free_witness=own.witness,
    )


def saturate(digraph: Digraph, k: int, order: Iterable[Arc] | None = None) -> Digraph:
    """Add missing arcs that keep the digraph k-strong-free until none remain.

    Arcs are tried in ``order`` (default ascending ``(u, v)``), in repeated
    passes until a pass adds nothing.
    """
    if contains_k_strong(digraph, k).contains:
        raise DigraphError(f"digraph already contains a {k}-strongly connected subdigraph")
    arcs = list(order) if order is not None else None
    current = digraph
    changed = True
    while changed:
        changed = False
        candidates = arcs if arcs is not None else current.complement_arcs()
        for u, v in candidates:
            if current.has_arc(u, v):
                continue
            bigger = current.add_arc(u, v)
            if not contains_k_strong(bigger, k).contains:
                current = bigger
                changed = True
    if arcs is not None:
        # A custom order may not list every pair; finish in default order.
        for u, v in current.complement_arcs():
            bigger = current.add_arc(u, v)
            if not contains_k_strong(bigger, k).contains:
                return saturate(bigger, k, arcs)
    return current
