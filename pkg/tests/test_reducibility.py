import random

import pytest

from braidcurves.braid import parse_braid
from braidcurves.garside import BudgetExceeded, normal_form, transposition
from braidcurves.reducibility import (
    NTKind,
    PunctureSet,
    brute_force_invariant_sets,
    curve_is_invariant,
    find_standard_invariant_curve,
    fixpoint_trace,
    invariant_curve_through_pair,
    nt_type,
    s_chain,
    s_set,
)
from braidcurves.sampling import random_band_word, random_normal_form


def P(n, *members):
    return PunctureSet.of(n, members)


def test_s_set_examples():
    assert s_set(P(4, 1, 2), tuple(range(4))) == P(4, 1, 2)
    assert s_set(P(4, 1, 2), transposition(4, 1, 3)) == P(4, 1, 2, 3)
    assert s_chain(P(4, 1, 2), parse_braid("a(1,2)", 4)) == P(4, 1, 2)
    # no factors: only the delta rotation
    assert s_chain(P(5, 1, 2), parse_braid("d^2", 5)) == P(5, 4, 5)


def test_s_chain_is_nested_s_set():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(3, 7)
        nf = normal_form(random_band_word(rng, n, rng.randint(1, 8)), "dual")
        I = PunctureSet.of(n, rng.sample(range(1, n + 1), rng.randint(2, n - 1)))
        cur = PunctureSet.of(n, ((v - 1 - nf.infimum) % n + 1 for v in I.members))
        for s in nf.factors:
            cur = s_set(cur, s)
        assert s_chain(I, nf) == cur


def test_pair_examples():
    assert invariant_curve_through_pair(parse_braid("a(1,2)", 4), 1, 2) == P(4, 1, 2)
    d = parse_braid("d", 4)
    assert all(invariant_curve_through_pair(d, a, b) is None for a in range(1, 5) for b in range(a + 1, 5))
    with pytest.raises(ValueError):
        invariant_curve_through_pair(d, 2, 2)


def test_monotone_iteration():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(4, 7)
        x = random_band_word(rng, n, 6)
        a, b = sorted(rng.sample(range(1, n + 1), 2))
        trace = fixpoint_trace(x, a, b)
        assert len(trace) == n - 1
        assert all(p.members <= q.members for p, q in zip(trace, trace[1:]))
        fast = invariant_curve_through_pair(x, a, b)
        last = trace[-1]
        assert fast == (None if len(last) == n else last)


def test_find_examples():
    assert find_standard_invariant_curve(parse_braid("s1 s3", 4)) == P(4, 1, 2)
    assert find_standard_invariant_curve(parse_braid("d", 4)) is None
    assert find_standard_invariant_curve(parse_braid("d^3", 5)) is None
    # a quarter turn squared is a half turn, which preserves the curve around 1 and 3
    assert find_standard_invariant_curve(parse_braid("d^2", 4)) == P(4, 1, 3)
    assert curve_is_invariant(P(4, 1, 3), parse_braid("d^2", 4))


def test_find_agrees_with_brute_force():
    """Some pair seeds a witness exactly when some standard curve is invariant."""
    rng = random.Random(2)
    both = 0
    for _ in range(300):
        n = rng.randint(3, 6)
        x = random_band_word(rng, n, rng.randint(1, 6))
        found = find_standard_invariant_curve(x)
        oracle = brute_force_invariant_sets(x)
        assert (found is not None) == bool(oracle), str(x)
        if found is not None:
            both += 1
            assert found in oracle
            # every invariant set through a pair contains the minimal set grown from that pair
            a, b = sorted(found.members)[:2]
            seeded = invariant_curve_through_pair(x, a, b)
            assert seeded is not None and all(seeded.members <= J.members for J in oracle if {a, b} <= J.members)
    assert both > 50


def test_unverified_witnesses_are_sound():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(4, 8)
        nf = random_normal_form(rng, "dual", n, rng.randint(1, 4))
        raw = find_standard_invariant_curve(nf, verify=False)
        if raw is not None:
            assert curve_is_invariant(raw, nf)


def test_nt_examples():
    assert nt_type(parse_braid("d", 4)).kind is NTKind.PERIODIC
    v = nt_type(parse_braid("s1 s3", 4))
    assert v.kind is NTKind.REDUCIBLE and curve_is_invariant(v.invariant, normal_form(v.element.word() ** v.power, "dual"))
    assert nt_type(parse_braid("s1 s2^-1", 3)).kind is NTKind.PSEUDO_ANOSOV_CANDIDATE
    assert nt_type(parse_braid("s1 s2^-1", 3), bfs=True).kind is NTKind.PSEUDO_ANOSOV_CANDIDATE


def test_nt_budget():
    with pytest.raises(BudgetExceeded):
        nt_type(parse_braid("s1 s2^-1 s3 s2 s1^-1", 4), budget=0 + 1, bfs=True, bfs_size=1)
