"""Directed c-trees, the layered D_U(n, k) family and transitive tournaments."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

from .digraph import Digraph, DigraphError

Orientation = Literal["out", "in"]


class PlanError(DigraphError):
    pass


@dataclass(frozen=True)
class KTreeStep:
    """One added vertex: its reciprocal clique and where its other arcs point.

    ``"out"``: the new vertex sends an arc to every existing non-clique vertex;
    ``"in"``: it receives one from each.
    """

    clique: tuple[int, ...]
    orientation: Orientation


@dataclass(frozen=True)
class KTreePlan:
    c: int
    n: int
    steps: tuple[KTreeStep, ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "c": self.c,
                "n": self.n,
                "steps": [
                    {"clique": list(s.clique), "orientation": s.orientation}
                    for s in self.steps
                ],
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> KTreePlan:
        try:
            doc = json.loads(text)
            steps = tuple(
                KTreeStep(tuple(int(v) for v in s["clique"]), s["orientation"])
                for s in doc["steps"]
            )
            return cls(int(doc["c"]), int(doc["n"]), steps)
        except (KeyError, TypeError, ValueError) as exc:
            raise PlanError(f"malformed plan: {exc}") from exc


def ktree(plan: KTreePlan) -> Digraph:
    """Build the directed c-tree described by ``plan``.

    Vertices ``0..c-1`` form the base clique; vertex ``c + i`` is added by
    ``plan.steps[i]``.
    """
    c, n = plan.c, plan.n
    if c < 1 or n < c:
        raise PlanError(f"need n >= c >= 1, got c={c}, n={n}")
    if len(plan.steps) != n - c:
        raise PlanError(f"expected {n - c} steps, got {len(plan.steps)}")
    out = [((1 << c) - 1) & ~(1 << u) for u in range(c)] + [0] * (n - c)
    for i, step in enumerate(plan.steps):
        new = c + i
        clique = step.clique
        if len(set(clique)) != c or len(clique) != c:
            raise PlanError(f"step {i}: clique must have {c} distinct vertices")
        if any(not 0 <= v < new for v in clique):
            raise PlanError(f"step {i}: clique vertex out of range")
        for a in clique:
            for b in clique:
                if a != b and not (out[a] >> b) & 1:
                    raise PlanError(f"step {i}: {list(clique)} is not a clique")
        if step.orientation not in ("out", "in"):
            raise PlanError(f"step {i}: orientation must be 'out' or 'in'")
        cmask = sum(1 << v for v in clique)
        for v in clique:
            out[v] |= 1 << new
        out[new] |= cmask
        others = ((1 << new) - 1) & ~cmask
        if step.orientation == "out":
            out[new] |= others
        else:
            for v in range(new):
                if (others >> v) & 1:
                    out[v] |= 1 << new
    return Digraph.from_masks(out)


def ktree_random(c: int, n: int, seed: int | None = None) -> tuple[KTreePlan, Digraph]:
    """Random directed c-tree; the clique is drawn uniformly from all c-cliques."""
    if not 1 <= c <= n:
        raise PlanError(f"need n >= c >= 1, got c={c}, n={n}")
    rng = random.Random(seed)
    cliques: list[tuple[int, ...]] = [tuple(range(c))]
    steps = []
    for new in range(c, n):
        clique = rng.choice(cliques)
        orientation: Orientation = rng.choice(("out", "in"))
        steps.append(KTreeStep(clique, orientation))
        # Every clique through the new vertex lies inside clique + {new}.
        cliques.extend(sub + (new,) for sub in combinations(clique, c - 1))
    plan = KTreePlan(c, n, tuple(steps))
    return plan, ktree(plan)


@dataclass(frozen=True)
class DuSpec:
    n: int
    k: int
    t: int
    r: int
    parts: tuple[tuple[int, ...], ...]


def du_spec(n: int, k: int) -> DuSpec:
    if k < 2 or n < 2 * (k - 1):
        raise DigraphError(f"D_U(n, k) needs k >= 2 and n >= 2(k-1), got n={n}, k={k}")
    t, r = divmod(n, k - 1)
    sizes = [k - 1] * t + [r]
    parts = []
    start = 0
    for size in sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    return DuSpec(n, k, t, r, tuple(parts))


def du(n: int, k: int) -> Digraph:
    """Canonical member of D_U(n, k).

    ``V0`` is a transitive tournament oriented low to high, each later part is
    complete, ``V0`` is joined both ways to everything else, and parts
    ``V_i -> V_j`` for ``1 <= i < j``.
    """
    spec = du_spec(n, k)
    hub = spec.parts[0]
    arcs = [(u, v) for u, v in combinations(hub, 2)]
    rest = [v for part in spec.parts[1:] for v in part]
    for u in hub:
        for v in rest:
            arcs.append((u, v))
            arcs.append((v, u))
    for i, part in enumerate(spec.parts[1:]):
        arcs.extend((u, v) for u in part for v in part if u != v)
        for later in spec.parts[i + 2:]:
            arcs.extend((u, v) for u in part for v in later)
    return Digraph(n, arcs)


def acyclic_tournament(n: int) -> Digraph:
    if n < 1:
        raise DigraphError(f"tournament needs n >= 1, got {n}")
    return Digraph(n, combinations(range(n), 2))


# -- recognizer ------------------------------------------------------------


@dataclass(frozen=True)
class Peel:
    vertex: int
    clique: tuple[int, ...]
    orientation: Orientation


@dataclass(frozen=True)
class CTreeRecognition:
    accepted: bool
    peels: tuple[Peel, ...]
    base: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.accepted

    def to_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "peels": [
                {"vertex": p.vertex, "clique": list(p.clique), "orientation": p.orientation}
                for p in self.peels
            ],
            "base": list(self.base),
        }

    def plan(self, c: int) -> tuple[KTreePlan, list[int]]:
        """Replay the peel trace forward.

        Returns the plan and ``perm`` with ``perm[i]`` the original label of
        construction vertex ``i``.
        """
        if not self.accepted:
            raise PlanError("digraph was not recognised as a directed c-tree")
        perm = list(self.base)
        steps = []
        for peel in reversed(self.peels):
            pos = {v: i for i, v in enumerate(perm)}
            steps.append(KTreeStep(tuple(sorted(pos[v] for v in peel.clique)), peel.orientation))
            perm.append(peel.vertex)
        return KTreePlan(c, len(perm), tuple(steps)), perm


def _peelable(out: Sequence[int], inn: Sequence[int], alive: int, v: int, c: int) -> Peel | None:
    recip = out[v] & inn[v] & alive
    if recip.bit_count() != c:
        return None
    members = [w for w in range(len(out)) if (recip >> w) & 1]
    for a in members:
        if (recip & ~(1 << a)) & ~out[a]:
            return None
    others = alive & ~recip & ~(1 << v)
    sends = out[v] & others
    gets = inn[v] & others
    if sends & gets:
        return None
    if sends == others and not gets:
        return Peel(v, tuple(members), "out")
    if gets == others and not sends:
        return Peel(v, tuple(members), "in")
    return None


def is_directed_ctree(digraph: Digraph, c: int) -> CTreeRecognition:
    """Greedy peeling recognizer for directed c-trees.

    Repeatedly removes the smallest vertex whose reciprocal neighbourhood is a
    c-clique and whose other arcs all point the same way; accepts iff what
    remains is the complete digraph on c vertices.
    """
    if c < 1:
        raise DigraphError(f"c must be positive, got {c}")
    n = digraph.n
    out, inn = digraph.out_masks, digraph.in_masks
    alive = (1 << n) - 1
    peels: list[Peel] = []
    remaining = n
    while remaining > c:
        for v in range(n):
            if (alive >> v) & 1:
                peel = _peelable(out, inn, alive, v, c)
                if peel is not None:
                    break
        else:
            return CTreeRecognition(False, tuple(peels), ())
        peels.append(peel)
        alive &= ~(1 << peel.vertex)
        remaining -= 1
    base = tuple(v for v in range(n) if (alive >> v) & 1)
    ok = remaining == c and all(
        (out[u] & alive) == alive & ~(1 << u) for u in base
    )
    return CTreeRecognition(ok, tuple(peels), base if ok else ())
