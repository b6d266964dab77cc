"""Strict finite digraphs on dense integer vertices.

A :class:`Digraph` stores one out-neighbour bitmask and one in-neighbour
bitmask per vertex.  Values are immutable; :meth:`Digraph.add_arc` returns a
new digraph.  The *index* of a digraph is its adjacency encoding: bit
``u*(n-1) + (v if v < u else v-1)`` is set iff the arc ``(u, v)`` is present
(row-major over ordered pairs, diagonal skipped).  Enumerating indices
``0 .. 2**(n*(n-1)) - 1`` therefore enumerates every labelled digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

Arc = tuple[int, int]


class DigraphError(ValueError):
    """Raised for loops, out-of-range vertices and similar domain errors."""


class DigraphParseError(DigraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def pair_bit(n: int, u: int, v: int) -> int:
    """Bit position of the ordered pair ``(u, v)`` in the adjacency encoding."""
    return u * (n - 1) + (v if v < u else v - 1)


def bit_pair(n: int, b: int) -> Arc:
    u, r = divmod(b, n - 1)
    return u, (r if r < u else r + 1)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Classification:
    is_complete: bool
    is_tournament: bool
    is_acyclic_tournament: bool


class Digraph:
    __slots__ = ("n", "_out", "_in", "_hash")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise DigraphError(f"vertex count must be non-negative, got {n}")
        out = [0] * n
        inn = [0] * n
        for u, v in arcs:
            self._check_arc(n, u, v)
            out[u] |= 1 << v
            inn[v] |= 1 << u
        self.n = n
        self._out = tuple(out)
        self._in = tuple(inn)
        self._hash = None

    @staticmethod
    def _check_arc(n: int, u: int, v: int) -> None:
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"arc ({u}, {v}) out of range for n={n}")
        if u == v:
            raise DigraphError(f"loop ({u}, {v}) is not allowed in a strict digraph")

    @classmethod
    def from_masks(cls, out_masks: Sequence[int]) -> Digraph:
        n = len(out_masks)
        full = (1 << n) - 1
        inn = [0] * n
        for u, m in enumerate(out_masks):
            if m & ~full or (m >> u) & 1:
                raise DigraphError(f"invalid out-mask {m:#x} for vertex {u}")
            for v in _bits(m):
                inn[v] |= 1 << u
        g = cls.__new__(cls)
        g.n = n
        g._out = tuple(out_masks)
        g._in = tuple(inn)
        g._hash = None
        return g

    @classmethod
    def from_index(cls, n: int, index: int) -> Digraph:
        m = n * (n - 1)
        if not 0 <= index < (1 << m) or (n == 0 and index):
            raise DigraphError(f"index {index} out of range for n={n}")
        out = [0] * n
        for b in _bits(index):
            u, v = bit_pair(n, b)
            out[u] |= 1 << v
        return cls.from_masks(out)

    @classmethod
    def complete(cls, n: int) -> Digraph:
        full = (1 << n) - 1
        return cls.from_masks([full & ~(1 << u) for u in range(n)])

    # -- basic queries -------------------------------------------------

    @property
    def out_masks(self) -> tuple[int, ...]:
        return self._out

    @property
    def in_masks(self) -> tuple[int, ...]:
        return self._in

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def index(self) -> int:
        idx = 0
        for u in range(self.n):
            for v in _bits(self._out[u]):
                idx |= 1 << pair_bit(self.n, u, v)
        return idx

    def has_arc(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self._out[u] >> v) & 1)

    def arcs(self) -> list[Arc]:
        """All arcs, ascending by ``(u, v)``."""
        return [(u, v) for u in range(self.n) for v in _bits(self._out[u])]

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self._out)

    def complement_arcs(self) -> list[Arc]:
        full = (1 << self.n) - 1
        return [
            (u, v)
            for u in range(self.n)
            for v in _bits(full & ~self._out[u] & ~(1 << u))
        ]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DigraphError(f"vertex {v} out of range for n={self.n}")

    def out_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self._out[v]))

    def in_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self._in[v]))

    def reciprocal_neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self._out[v] & self._in[v]))

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._in[v].bit_count()

    def reciprocal_degree(self, v: int) -> int:
        self._check_vertex(v)
        return (self._out[v] & self._in[v]).bit_count()

    def min_reciprocal_degree(self) -> int:
        if self.n == 0:
            raise DigraphError("minimum reciprocal degree of the empty digraph")
        return min(self.reciprocal_degree(v) for v in range(self.n))

    # -- derived digraphs ----------------------------------------------

    def add_arc(self, u: int, v: int) -> Digraph:
        self._check_arc(self.n, u, v)
        if self.has_arc(u, v):
            return self
        out = list(self._out)
        out[u] |= 1 << v
        return Digraph.from_masks(out)

    def remove_arc(self, u: int, v: int) -> Digraph:
        self._check_arc(self.n, u, v)
        out = list(self._out)
        out[u] &= ~(1 << v)
        return Digraph.from_masks(out)

    def add_arcs(self, arcs: Iterable[Arc]) -> Digraph:
        out = list(self._out)
        for u, v in arcs:
            self._check_arc(self.n, u, v)
            out[u] |= 1 << v
        return Digraph.from_masks(out)

    def induced(self, vertices: Iterable[int]) -> Digraph:
        """Subdigraph induced by ``vertices``, relabelled in ascending order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        out = []
        for v in keep:
            m = 0
            for w in _bits(self._out[v]):
                if w in pos:
                    m |= 1 << pos[w]
            out.append(m)
        return Digraph.from_masks(out)

    def remove_vertices(self, vertices: Iterable[int]) -> Digraph:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Digraph with arc ``(perm[u], perm[v])`` for every arc ``(u, v)``."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabelling must be a permutation of the vertices")
        return Digraph(self.n, ((perm[u], perm[v]) for u, v in self.arcs()))

    # -- classification ------------------------------------------------

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self._out[u] == full & ~(1 << u) for u in range(self.n))

    def is_tournament(self) -> bool:
        full = (1 << self.n) - 1
        for u in range(self.n):
            if self._out[u] & self._in[u]:
                return False
            if (self._out[u] | self._in[u]) != full & ~(1 << u):
                return False
        return True

    def is_transitive(self) -> bool:
        for x in range(self.n):
            for y in _bits(self._out[x]):
                if self._out[y] & ~self._out[x] & ~(1 << x):
                    return False
        return True

    def classify(self) -> Classification:
        tournament = self.is_tournament()
        return Classification(
            is_complete=self.is_complete(),
            is_tournament=tournament,
            is_acyclic_tournament=tournament and self.is_transitive(),
        )

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._out))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"

    # -- text formats --------------------------------------------------

    def serialize(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.arcs())
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> Digraph:
        n = None
        seen: set[Arc] = set()
        arcs: list[Arc] = []
        for lineno, raw in enumerate(text.split("\n"), start=1):
            line = raw.rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split(" ")
            if n is None:
                if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                    raise DigraphParseError(f"expected 'n <count>', got {line!r}", lineno)
                n = int(parts[1])
                continue
            if len(parts) != 2 or not all(p.isdigit() for p in parts):
                raise DigraphParseError(f"expected '<u> <v>', got {line!r}", lineno)
            u, v = int(parts[0]), int(parts[1])
            if u == v:
                raise DigraphParseError(f"loop ({u}, {v})", lineno)
            if u >= n or v >= n:
                raise DigraphParseError(f"vertex out of range in ({u}, {v}) for n={n}", lineno)
            if (u, v) in seen:
                raise DigraphParseError(f"duplicate arc ({u}, {v})", lineno)
            seen.add((u, v))
            arcs.append((u, v))
        if n is None:
            raise DigraphParseError("missing 'n <count>' header")
        return cls(n, arcs)

    def to_dot(self, name: str = "D") -> str:
        lines = [f"digraph {name} {{"]
        lines.extend(f"  {v};" for v in range(self.n))
        lines.extend(f"  {u} -> {v};" for u, v in self.arcs())
        lines.append("}")
        return "\n".join(lines) + "\n"


def read_dg(path: str | Path) -> Digraph:
    with open(path, newline="") as fh:
        return Digraph.parse(fh.read())


def write_dg(digraph: Digraph, path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(digraph.serialize())
