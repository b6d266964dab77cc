import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from kstrong.digraph import Digraph


@st.composite
def digraphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, [p for p, keep in zip(pairs, present) if keep])


def random_digraph(rng: random.Random, n: int, p: float | None = None) -> Digraph:
    if p is None:
        p = rng.uniform(0.2, 1.0)
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def cycle(n: int) -> Digraph:
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def reaches(d: Digraph, src: int, dst: int, removed: frozenset) -> bool:
    """Plain DFS, used as an independent reference."""
    if src in removed or dst in removed:
        return False
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in d.out_neighbors(x):
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return False


def min_vertex_cut(d: Digraph, u: int, v: int) -> int:
    """Smallest X in V - {u, v} destroying all (u, v)-dipaths, by enumeration."""
    others = [w for w in range(d.n) if w not in (u, v)]
    for size in range(len(others) + 1):
        for cut in combinations(others, size):
            if not reaches(d, u, v, frozenset(cut)):
                return size
    return len(others) + 1


@pytest.fixture
def rng():
    return random.Random(20251016)
