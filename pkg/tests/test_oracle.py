from itertools import permutations
from math import factorial

import pytest

from kstrong.constructions import acyclic_tournament, du
from kstrong.detection import contains_k_strong
from kstrong.digraph import Digraph
from kstrong.oracle import (
    GuardError,
    audit_structure,
    canonical_form,
    chunk_ranges,
    enumerate_digraphs,
    free_scan,
    oracle_sat_ex,
    saturated_digraphs,
    total_digraphs,
    tournament_pattern_violations,
)
from kstrong.saturation import is_saturated


def burnside_count(n):
    """Digraphs on n vertices up to isomorphism, by averaging fixed labellings."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    fixed = 0
    for perm in permutations(range(n)):
        seen, cycles = set(), 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            while p not in seen:
                seen.add(p)
                p = (perm[p[0]], perm[p[1]])
        fixed += 2**cycles
    return fixed // factorial(n)


def test_enumeration_counts_and_endpoints():
    assert total_digraphs(3) == 64
    assert total_digraphs(4) == 4096
    all3 = list(enumerate_digraphs(3))
    assert len(all3) == 64
    assert all3[0] == Digraph(3)
    assert all3[-1] == Digraph.complete(3)
    assert len(set(all3)) == 64


@pytest.mark.parametrize("n, expected", [(3, 16), (4, 218)])
def test_canonical_classes(n, expected):
    assert burnside_count(n) == expected
    assert len({canonical_form(d) for d in enumerate_digraphs(n)}) == expected


def test_canonical_form_is_invariant():
    d = du(4, 2)
    forms = {canonical_form(d.relabel(p)) for p in permutations(range(4))}
    assert len(forms) == 1
    form = forms.pop()
    assert len(form.bits) == 12
    assert canonical_form(form.digraph()) == form


def test_chunk_ranges_cover():
    for total, chunks in [(64, 1), (64, 7), (5, 8)]:
        ranges = chunk_ranges(total, chunks)
        assert ranges[0][0] == 0 and ranges[-1][1] == total
        assert all(a[1] == b[0] for a, b in zip(ranges, ranges[1:]))


@pytest.mark.parametrize(
    "n, k, sat, ex, labelled",
    [(3, 1, 3, 3, 6), (4, 1, 6, 6, 24), (3, 2, 5, 5, 6), (4, 2, 9, 9, 96), (4, 3, 11, 11, None)],
)
def test_oracle_examples(n, k, sat, ex, labelled):
    res = oracle_sat_ex(n, k)
    assert (res.sat, res.ex) == (sat, ex)
    if labelled is not None:
        assert res.labeled_saturated_count == labelled
    assert res.exhaustive and res.enumerated_total == total_digraphs(n)
    for w in (res.min_witness, res.max_witness):
        assert is_saturated(w, k).saturated
    assert res.min_witness.arc_count == sat and res.max_witness.arc_count == ex


def test_canonical_count():
    assert oracle_sat_ex(4, 2, canonical=True).canonical_saturated_count == 4


def test_chunking_and_workers_do_not_change_result():
    base = oracle_sat_ex(4, 2, chunks=1).to_dict(timing=False)
    for chunks in (2, 8):
        assert oracle_sat_ex(4, 2, chunks=chunks).to_dict(timing=False) == base
    assert oracle_sat_ex(4, 2, jobs=2).to_dict(timing=False) == base


def test_saturated_digraphs_are_saturated():
    found = saturated_digraphs(4, 2)
    assert len(found) == 96
    assert all(is_saturated(d, 2).saturated for d in found)


def test_guard():
    with pytest.raises(GuardError):
        oracle_sat_ex(6, 2)
    with pytest.raises(GuardError):
        oracle_sat_ex(7, 2, allow_large=True)
    with pytest.raises(GuardError):
        list(enumerate_digraphs(6))


def test_sampling_is_flagged_and_reproducible():
    a = oracle_sat_ex(6, 2, allow_large=True, sample=300, seed=4)
    b = oracle_sat_ex(6, 2, allow_large=True, sample=300, seed=4)
    assert not a.exhaustive
    assert a.to_dict(timing=False) == b.to_dict(timing=False)
    assert a.enumerated_total <= 300


def test_free_scan():
    scan = free_scan(4, 2)
    assert scan.max_arcs == 9
    assert not contains_k_strong(scan.max_witness, 2)
    assert free_scan(3, 1).max_arcs == 3


def test_audit_passes_on_oracle_output():
    for n, k in [(3, 2), (4, 2), (4, 3)]:
        report = audit_structure(saturated_digraphs(n, k), k)
        assert report.ok, report.failures
        assert report.checked > 0 and report.separators_checked > 0


def test_audit_negative_control():
    broken = du(4, 2).remove_arc(1, 3)
    report = audit_structure([broken], 2)
    assert not report.ok
    assert tournament_pattern_violations(broken, {0}) == ["missing (1, 3)"]
    report = audit_structure([acyclic_tournament(4)], 2)
    assert report.failures[0].check == "kappa"
