"""Exhaustive computation of sat(n, D_k) and ex(n, D_k) over labelled digraphs.

Enumeration index ``i`` is the adjacency encoding of the digraph (see
:mod:`kstrong.digraph`).  Ranges of indices are scanned by the bitmask kernel
and merged with an associative, commutative reduction, so the result does not
depend on how the range was split or how many workers ran.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Sequence

from . import kernel
from .connectivity import is_separator, kappa, strong_components
from .digraph import Digraph, DigraphError, pair_bit

DEFAULT_GUARD = 5
LARGE_LIMIT = 6
CANONICAL_MAX_N = 8
DEFAULT_SAMPLE = 200_000

Progress = Callable[[int, int], None]


class GuardError(DigraphError):
    """Exhaustive work requested beyond the configured size guard."""


def total_digraphs(n: int) -> int:
    return 1 << (n * (n - 1))


def _check_guard(n: int, allow_large: bool) -> None:
    if n < 1:
        raise DigraphError(f"n must be positive, got {n}")
    if n > LARGE_LIMIT:
        raise GuardError(f"exhaustive enumeration is limited to n <= {LARGE_LIMIT}")
    if n > DEFAULT_GUARD and not allow_large:
        raise GuardError(f"n={n} exceeds the guard n <= {DEFAULT_GUARD}; pass allow_large (--allow-large on the command line)")


def enumerate_digraphs(
    n: int, lo: int = 0, hi: int | None = None, allow_large: bool = False
) -> Iterator[Digraph]:
    """Labelled digraphs with index in ``[lo, hi)``, ascending."""
    _check_guard(n, allow_large)
    total = total_digraphs(n)
    hi = total if hi is None else hi
    if not 0 <= lo <= hi <= total:
        raise DigraphError(f"range [{lo}, {hi}) outside [0, {total})")
    for idx in range(lo, hi):
        yield Digraph.from_index(n, idx)


def chunk_ranges(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    ranges = []
    lo = 0
    for i in range(chunks):
        hi = lo + step + (1 if i < extra else 0)
        ranges.append((lo, hi))
        lo = hi
    return ranges


# -- canonical forms --------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Minimum adjacency index over all relabellings."""

    n: int
    index: int

    @property
    def bits(self) -> str:
        width = self.n * (self.n - 1)
        return format(self.index, f"0{width}b") if width else ""

    def digraph(self) -> Digraph:
        return Digraph.from_index(self.n, self.index)


def canonical_form(digraph: Digraph) -> CanonicalForm:
    n = digraph.n
    if n > CANONICAL_MAX_N:
        raise GuardError(f"canonical form is limited to n <= {CANONICAL_MAX_N}")
    arcs = digraph.arcs()
    best = None
    for perm in permutations(range(n)):
        idx = 0
        for u, v in arcs:
            idx |= 1 << pair_bit(n, perm[u], perm[v])
        if best is None or idx < best:
            best = idx
    return CanonicalForm(n, best or 0)


# -- sat / ex ---------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    n: int
    k: int
    sat: int | None
    ex: int | None
    labeled_saturated_count: int
    canonical_saturated_count: int | None
    min_witness: Digraph | None
    max_witness: Digraph | None
    enumerated_total: int
    exhaustive: bool = True
    backend: str = kernel.BACKEND
    elapsed: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = True) -> dict:
        doc = {
            "n": self.n,
            "k": self.k,
            "sat": self.sat,
            "ex": self.ex,
            "labeled_saturated_count": self.labeled_saturated_count,
            "canonical_saturated_count": self.canonical_saturated_count,
            "min_witness": self.min_witness.serialize() if self.min_witness else None,
            "max_witness": self.max_witness.serialize() if self.max_witness else None,
            "enumerated_total": self.enumerated_total,
            "exhaustive": self.exhaustive,
            "backend": self.backend,
        }
        if timing:
            doc["elapsed"] = round(self.elapsed, 3)
        return doc


@dataclass
class _Acc:
    count: int = 0
    sat: tuple[int, int] | None = None  # (arcs, index)
    ex: tuple[int, int] | None = None  # (-arcs, index)
    indices: list[int] = field(default_factory=list)

    def merge(self, part: tuple) -> None:
        count, sat, sat_idx, ex, ex_idx, found = part
        self.count += count
        if sat >= 0:
            key = (sat, sat_idx)
            self.sat = key if self.sat is None else min(self.sat, key)
            key = (-ex, ex_idx)
            self.ex = key if self.ex is None else min(self.ex, key)
        if found:
            self.indices.extend(found)


def _scan_chunk(args: tuple) -> tuple:
    n, k, lo, hi, collect = args
    return kernel.scan_saturated(n, k, lo, hi, collect)


def _run_chunks(func, tasks: Sequence[tuple], jobs: int, progress: Progress | None) -> list:
    results = []
    if jobs <= 1:
        for i, task in enumerate(tasks):
            results.append(func(task))
            if progress:
                progress(i + 1, len(tasks))
        return results
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, res in enumerate(pool.map(func, tasks)):
            results.append(res)
            if progress:
                progress(i + 1, len(tasks))
    return results


def _sample_indices(n: int, sample: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    bits = n * (n - 1)
    return sorted({rng.getrandbits(bits) for _ in range(sample)})


def _scan_sample(args: tuple) -> tuple:
    n, k, indices, collect = args
    count = 0
    sat = ex = sat_idx = ex_idx = -1
    found = [] if collect else None
    for idx in indices:
        if kernel.is_saturated(kernel.decode(n, idx), k):
            arcs = idx.bit_count()
            count += 1
            if sat < 0 or arcs < sat:
                sat, sat_idx = arcs, idx
            if arcs > ex:
                ex, ex_idx = arcs, idx
            if collect:
                found.append(idx)
    return count, sat, sat_idx, ex, ex_idx, found


def oracle_sat_ex(
    n: int,
    k: int,
    jobs: int = 1,
    chunks: int | None = None,
    canonical: bool = False,
    allow_large: bool = False,
    sample: int | None = None,
    seed: int = 0,
    progress: Progress | None = None,
) -> OracleResult:
    """Minimum and maximum arc counts over all n-vertex D_k-saturated digraphs.

    At ``n = 6`` (with ``allow_large``) a seeded random sample of indices is
    scanned instead and the result is flagged non-exhaustive.
    """
    if k < 1:
        raise DigraphError(f"k must be positive, got {k}")
    _check_guard(n, allow_large)
    start = time.perf_counter()
    total = total_digraphs(n)
    exhaustive = n <= DEFAULT_GUARD and sample is None
    if exhaustive:
        chunks = chunks or max(1, 4 * jobs)
        tasks = [(n, k, lo, hi, canonical) for lo, hi in chunk_ranges(total, chunks)]
        parts = _run_chunks(_scan_chunk, tasks, jobs, progress)
        scanned = total
    else:
        indices = _sample_indices(n, sample or DEFAULT_SAMPLE, seed)
        chunks = chunks or max(1, 4 * jobs)
        step = -(-len(indices) // chunks)
        tasks = [(n, k, indices[i:i + step], canonical) for i in range(0, len(indices), step)]
        parts = _run_chunks(_scan_sample, tasks, jobs, progress)
        scanned = len(indices)
    acc = _Acc()
    for part in parts:
        acc.merge(part)
    canonical_count = None
    if canonical:
        canonical_count = len({canonical_form(Digraph.from_index(n, i)) for i in acc.indices})
    return OracleResult(
        n=n,
        k=k,
        sat=acc.sat[0] if acc.sat else None,
        ex=-acc.ex[0] if acc.ex else None,
        labeled_saturated_count=acc.count,
        canonical_saturated_count=canonical_count,
        min_witness=Digraph.from_index(n, acc.sat[1]) if acc.sat else None,
        max_witness=Digraph.from_index(n, acc.ex[1]) if acc.ex else None,
        enumerated_total=scanned,
        exhaustive=exhaustive,
        elapsed=time.perf_counter() - start,
    )


def saturated_digraphs(n: int, k: int, jobs: int = 1, allow_large: bool = False) -> list[Digraph]:
    """Every labelled n-vertex D_k-saturated digraph, ascending by index."""
    _check_guard(n, allow_large)
    tasks = [(n, k, lo, hi, True) for lo, hi in chunk_ranges(total_digraphs(n), max(1, 4 * jobs))]
    found: list[int] = []
    for part in _run_chunks(_scan_chunk, tasks, jobs, None):
        found.extend(part[5])
    return [Digraph.from_index(n, i) for i in sorted(found)]


# -- k-strong-free digraphs -------------------------------------------------


@dataclass(frozen=True)
class FreeScan:
    """Arc-count profile of all n-vertex digraphs with no k-strong subdigraph."""

    n: int
    k: int
    free_count: int
    max_arcs: int
    max_witness: Digraph


def _free_chunk(args: tuple) -> tuple:
    n, k, lo, hi = args
    return kernel.scan_free(n, k, lo, hi)


def free_scan(n: int, k: int, jobs: int = 1, progress: Progress | None = None) -> FreeScan:
    if k < 1:
        raise DigraphError(f"k must be positive, got {k}")
    _check_guard(n, False)
    tasks = [(n, k, lo, hi) for lo, hi in chunk_ranges(total_digraphs(n), max(1, 4 * jobs))]
    count = 0
    best: tuple[int, int] | None = None
    for c, arcs, idx in _run_chunks(_free_chunk, tasks, jobs, progress):
        count += c
        if arcs >= 0 and (best is None or (-arcs, idx) < best):
            best = (-arcs, idx)
    assert best is not None  # the empty digraph is always free
    return FreeScan(n, k, count, -best[0], Digraph.from_index(n, best[1]))


# -- structural audits ------------------------------------------------------


@dataclass(frozen=True)
class AuditFailure:
    digraph: Digraph
    check: str
    detail: str


@dataclass(frozen=True)
class AuditReport:
    k: int
    checked: int
    separators_checked: int
    failures: tuple[AuditFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def tournament_pattern_violations(digraph: Digraph, separator: Iterable[int]) -> list[str]:
    """Arcs breaking "all arcs B_i -> B_j for i < j, none back" across components of D - S."""
    sep = set(separator)
    rest = [v for v in range(digraph.n) if v not in sep]
    comps = strong_components(digraph.induced(rest)).components
    comps = [[rest[i] for i in comp] for comp in comps]
    problems = []
    for i, j in combinations(range(len(comps)), 2):
        for a in comps[i]:
            for b in comps[j]:
                if not digraph.has_arc(a, b):
                    problems.append(f"missing ({a}, {b})")
                if digraph.has_arc(b, a):
                    problems.append(f"reversed ({b}, {a})")
    return problems


def audit_structure(digraphs: Iterable[Digraph], k: int) -> AuditReport:
    """Connectivity equals k-1, and every minimum separator splits the rest
    into a complete transitive multipartite pattern.
    """
    failures = []
    checked = seps = 0
    for d in digraphs:
        checked += 1
        if d.n < k + 1:
            continue
        kap = kappa(d)
        if kap != k - 1:
            failures.append(AuditFailure(d, "kappa", f"kappa={kap}, expected {k - 1}"))
            continue
        for sep in combinations(range(d.n), k - 1):
            if not is_separator(d, sep):
                continue
            seps += 1
            problems = tournament_pattern_violations(d, sep)
            if problems:
                failures.append(
                    AuditFailure(d, "multipartite", f"S={list(sep)}: " + ", ".join(problems))
                )
    return AuditReport(k, checked, seps, tuple(failures))
