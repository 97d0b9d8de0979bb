"""Property-based laws for the finite engine, cross-checked against the
brute-force oracles."""

import hypothesis.strategies as st
from hypothesis import given, settings

from posetsplit import FinitePoset

from oracles import (
    brute_maximal_antichains,
    check_axioms_bruteforce,
    split_search_reversed,
)


@st.composite
def posets(draw, max_size=7):
    """Random poset: upper-triangular cover pairs plus closure."""
    n = draw(st.integers(min_value=0, max_value=max_size))
    names = ["v%d" % i for i in range(n)]
    pairs = [(names[i], names[j])
             for i in range(n) for j in range(i + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return FinitePoset.from_cover_relations(names, covers)


@st.composite
def posets_with_subset(draw):
    p = draw(posets())
    h = draw(st.sets(st.sampled_from(p.elements))) if len(p) else set()
    return p, h


@given(posets())
def test_construction_satisfies_axioms(p):
    check_axioms_bruteforce(p)


@given(posets_with_subset())
def test_down_set_contains_and_idempotent(ph):
    p, h = ph
    d = p.down_set(h)
    assert h <= d
    assert p.down_set(d) == d


@given(posets_with_subset())
def test_up_set_contains_and_idempotent(ph):
    p, h = ph
    u = p.up_set(h)
    assert h <= u
    assert p.up_set(u) == u


@given(posets_with_subset(), st.randoms(use_true_random=False))
def test_down_up_sets_monotone(ph, rnd):
    p, h = ph
    sub = {e for e in h if rnd.random() < 0.5}
    assert p.down_set(sub) <= p.down_set(h)
    assert p.up_set(sub) <= p.up_set(h)


@given(posets_with_subset())
def test_maximality_matches_two_formulations(ph):
    p, h = ph
    direct = p.is_maximal_antichain(h)
    formulated = p.is_antichain(h) and all(
        any(p.leq(z, m) or p.leq(m, z) for m in h)
        for z in p.elements if z not in h)
    assert direct == formulated


@settings(max_examples=60)
@given(posets())
def test_enumeration_matches_bruteforce(p):
    found = p.maximal_antichains()
    assert len(found) == len(set(found)), "duplicates in enumeration"
    for a in found:
        assert p.is_maximal_antichain(a)
    assert {frozenset(a) for a in found} == brute_maximal_antichains(p)


@settings(max_examples=60)
@given(posets())
def test_split_results_validated_and_complete(p):
    for a in p.maximal_antichains():
        part = p.try_split(a)
        oracle = split_search_reversed(p, a)
        if part is None:
            assert oracle is None, "engine missed a split of %r" % (a,)
        else:
            assert oracle is not None
            assert set(part.down) | set(part.up) == set(a)
            assert set(part.down) & set(part.up) == set()
            covered = p.down_set(part.down) | p.up_set(part.up)
            assert covered == set(p.elements)


@given(posets())
def test_strong_density_gap_is_real(p):
    check = p.is_strongly_dense()
    if check.strongly_dense:
        assert check.gap is None
        for x in p.elements:
            for y in p.elements:
                inside = p.open_interval(x, y)
                if inside:
                    assert any(p.incomparable(z1, z2)
                               for z1 in inside for z2 in inside)
    else:
        x, y = check.gap
        inside = p.open_interval(x, y)
        assert inside
        assert all(p.leq(z1, z2) or p.leq(z2, z1)
                   for z1 in inside for z2 in inside)
