import random
from itertools import permutations

import pytest
from oracles import artin_action, crossings, dual_simples_by_absolute_order

from braidcurves.braid import delta_word, half_twist_word, parse_braid
from braidcurves.garside import (
    Structure,
    blocks_of,
    cyclic_sliding_dual,
    equals,
    is_noncrossing,
    is_periodic,
    normal_form,
    perm_from_blocks,
    preferred_prefix,
    sliding_circuits_bfs,
    sliding_orbit,
    structure,
)
from braidcurves.sampling import all_dual_simples, random_band_word, random_normal_form

BOTH = [Structure.CLASSICAL, Structure.DUAL]


def test_example_normal_forms():
    assert normal_form(parse_braid("a(1,2) a(1,4)", 4), "dual").render() == "p=0; [{1,2}] [{1,4}]"
    assert normal_form(parse_braid("s1 s2 s1", 3), "classical").render() == "p=1;"
    assert normal_form(parse_braid("", 3), "classical").render() == "p=0;"
    assert normal_form(parse_braid("d^4", 4), "classical").infimum == 2
    assert normal_form(parse_braid("D^2", 4), "dual").infimum == 4
    assert normal_form(parse_braid("d^-1", 5), "dual").infimum == -1


@pytest.mark.parametrize("n", range(2, 8))
def test_dual_simples_match_absolute_order(n):
    found = set(all_dual_simples(n))
    assert found == dual_simples_by_absolute_order(n)
    st = structure("dual", n)
    assert all(st.is_simple(s) for s in found)
    assert sum(st.is_simple(p) for p in permutations(range(n))) == len(found)


def test_noncrossing_blocks_roundtrip():
    for s in all_dual_simples(6):
        blocks = [p.vertices for p in blocks_of(s)]
        assert is_noncrossing(6, blocks)
        assert perm_from_blocks(6, blocks) == s
    assert not is_noncrossing(4, [(1, 3), (2, 4)])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_classical_prefix_order_is_crossing_inclusion(n):
    """u is a prefix of a exactly when every strand pair crossing in u also crosses in a."""
    st = structure("classical", n)
    perms = list(permutations(range(n)))
    rng = random.Random(n)
    for _ in range(300):
        u, a = rng.choice(perms), rng.choice(perms)
        assert st.is_prefix(u, a) == (crossings(u) <= crossings(a))


@pytest.mark.parametrize("kind", BOTH)
def test_normal_form_matches_free_group_oracle(kind):
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 5)
        x = random_band_word(rng, n, rng.randint(0, 7))
        nf = normal_form(x, kind)
        assert artin_action(nf.word()) == artin_action(x)
        assert normal_form(nf.word(), kind) == nf


@pytest.mark.parametrize("kind", BOTH)
def test_equality_decision_agrees_with_oracle(kind):
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(3, 5)
        x = random_band_word(rng, n, rng.randint(0, 5))
        y = random_band_word(rng, n, rng.randint(0, 5)) if rng.random() < 0.5 else normal_form(x, "dual").word()
        assert equals(x, y, kind) == (artin_action(x) == artin_action(y))


def test_relations():
    for kind in BOTH:
        assert equals(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3), kind)
        assert equals(parse_braid("s1 s3", 4), parse_braid("s3 s1", 4), kind)
        assert not equals(parse_braid("s1 s2", 3), parse_braid("s2 s1", 3), kind)
        assert equals(parse_braid("a(1,3)", 3), parse_braid("s2^-1 s1 s2", 3), kind)
        assert equals(delta_word(5) ** 5, half_twist_word(5) ** 2, kind)


@pytest.mark.parametrize("kind", BOTH)
def test_directly_built_forms_are_normal(kind):
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 6)
        nf = random_normal_form(rng, kind, n, rng.randint(1, 5), infimum=rng.randint(-2, 2))
        assert normal_form(nf.word(), kind) == nf


def test_left_weighted_factors():
    rng = random.Random(8)
    for kind in BOTH:
        st = structure(kind, 5)
        for _ in range(50):
            nf = normal_form(random_band_word(rng, 5, 8), kind)
            for a, b in zip(nf.factors, nf.factors[1:]):
                assert st.is_left_weighted(a, b)
                assert a not in (st.identity, st.garside) and b != st.identity


def test_dual_meet_is_greatest_common_prefix():
    st = structure("dual", 5)
    simples = all_dual_simples(5)
    rng = random.Random(2)
    for _ in range(100):
        a, b = rng.choice(simples), rng.choice(simples)
        m = st.meet(a, b)
        common = [u for u in simples if st.is_prefix(u, a) and st.is_prefix(u, b)]
        assert m in common
        assert all(st.is_prefix(u, m) for u in common)


def test_periodicity():
    assert is_periodic(parse_braid("d", 4))
    assert is_periodic(parse_braid("d^3", 5))
    assert is_periodic(parse_braid("D", 4))
    assert is_periodic(parse_braid("s1 s2", 3))  # conjugate to delta
    assert is_periodic(parse_braid("s1^-1 s1 s1 s2", 3))
    assert not is_periodic(parse_braid("s1", 3))
    assert not is_periodic(parse_braid("s1 s2^-1", 3))
    assert not is_periodic(parse_braid("s1 s3", 4))


def test_sliding_yields_conjugates():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(3, 5)
        x = random_band_word(rng, n, rng.randint(1, 6))
        y = cyclic_sliding_dual(x)
        p = structure("dual", n).simple_word(preferred_prefix(x))
        assert artin_action(y) == artin_action(p.inverse() * x * p)
        circuit, pre = sliding_orbit(x)
        assert len(circuit) >= 1 and pre >= 0
        # the circuit is closed under sliding
        nxt = normal_form(cyclic_sliding_dual(circuit[-1].word()), "dual")
        assert nxt == circuit[0]


def test_bfs_closure_contains_orbit():
    x = parse_braid("s1 s2^-1", 3)
    orbit, _ = sliding_orbit(x)
    closure = sliding_circuits_bfs(x)
    assert set(orbit) <= set(closure)
