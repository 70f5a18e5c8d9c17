import random
from itertools import combinations

import pytest

from braidcurves import curves_dual as cd
from braidcurves.braid import delta_word, parse_braid, permutation_of
from braidcurves.garside import blocks_of, normal_form, structure
from braidcurves.sampling import all_dual_simples, random_band_word, random_proper_simple, random_puncture_set


def test_standard_curve_examples():
    assert str(cd.standard_curve({1, 2}, 4)) == "2 ( 4 v"
    assert cd.standard_curve({1, 3}, 4).pretty() == "1↶4⌣3↶2⌣"
    w = cd.standard_curve({3, 4, 12, 13}, 16)
    assert cd.is_standard(w) and sum(x in "()" for x in w.letters()) == 2
    assert cd.parse_dual_curve("std:{1,2}", 4) == cd.standard_curve({1, 2}, 4)


@pytest.mark.parametrize("n", range(3, 9))
def test_enclosed_roundtrip(n):
    for k in range(2, n):
        for I in combinations(range(1, n + 1), k):
            w = cd.standard_curve(I, n)
            assert cd.is_standard(w)
            assert cd.enclosed_punctures_standard(w) == frozenset(I)


def test_is_standard_examples():
    assert cd.is_standard(cd.parse_dual_curve("2↶4⌣", 4))
    assert not cd.is_standard(cd.parse_dual_curve("4↶3⌣13↶12⌣10↺10⌣", 16))
    assert not cd.is_standard(cd.parse_dual_curve("1 ( 4 v 3 ) 2 v", 4))
    assert cd.is_standard(cd.parse_dual_curve("4 ) 2 v", 4))  # all clockwise reads as standard reversed


def test_parse_equivalences_and_errors():
    a = cd.parse_dual_curve("1 ( 4 v 3 ( 2 v", 4)
    assert cd.parse_dual_curve("3 ( 2 v 1 ( 4 v", 4) == a
    assert cd.parse_dual_curve("v 1 ( 4 v 3 ( 2", 4) == a
    # reversal swaps the orientation letters
    assert cd.parse_dual_curve("2 ) 3 v 4 ) 1 v", 4) == a
    for bad in ["1 ( 4", "1 ( 5 v", "1 v 4 v", "1 ( 1 v 3 ( 2 v", "1 (( 2 v", "2 x 3 v"]:
        with pytest.raises(cd.DualCurveError):
            cd.parse_dual_curve(bad, 4)
    with pytest.raises(cd.DualCurveError):
        cd.standard_curve({1}, 4)
    with pytest.raises(cd.NotStandardError):
        cd.enclosed_punctures_standard(cd.parse_dual_curve("1 ( 4 v 3 ) 2 v", 4))


def test_polygon_examples():
    w = cd.standard_curve({1, 2}, 4)
    assert cd.act_polygon(w, (1, 2)) == w
    img = cd.act_polygon(w, (1, 4))
    assert not cd.is_standard(img)
    assert img.pretty() == "1↶4⌣3↷2⌣"
    assert {b.pair for b in cd.bending_pairs(img)} == {(1, 2)}
    assert not cd.bending_pairs(w)


def test_delta_relabels():
    w = cd.standard_curve({1, 2}, 4)
    img = cd.act_dual(w, parse_braid("d", 4))
    assert cd.enclosed_punctures_standard(img) == permutation_of(delta_word(4)).image_set({1, 2}) == {4, 1}
    # the full polygon is delta
    assert cd.act_polygon(w, (1, 2, 3, 4)) == img
    rng = random.Random(0)
    for _ in range(30):
        n = rng.randint(3, 7)
        v = cd.act_dual(cd.standard_curve(random_puncture_set(rng, n), n), random_band_word(rng, n, 3))
        assert cd.act_delta_power(v, n) == v
        assert cd.act_polygon(v, tuple(range(1, n + 1))) == cd.act_delta_power(v, 1)


def test_prescribed_removal_is_sufficient():
    """After the prescribed removals the polygon image has no bigon left."""
    rng = random.Random(1)
    for _ in range(400):
        n = rng.randint(3, 7)
        w = cd.act_dual(cd.standard_curve(random_puncture_set(rng, n), n), random_band_word(rng, n, rng.randint(0, 6)))
        s = random_proper_simple(rng, "dual", n)
        for poly in blocks_of(s):
            G, D = cd.prescribed_polygon_image(w, poly)
            assert cd.is_reduced_arrays(G, D), (str(w), poly.vertices)


def test_disjoint_blocks_commute():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(4, 7)
        s = rng.choice([t for t in all_dual_simples(n) if len(blocks_of(t)) >= 2])
        p1, p2 = blocks_of(s)[:2]
        w = cd.act_dual(cd.standard_curve(random_puncture_set(rng, n), n), random_band_word(rng, n, 4))
        assert cd.act_polygon(cd.act_polygon(w, p1), p2) == cd.act_polygon(cd.act_polygon(w, p2), p1)


def test_action_is_a_right_action():
    rng = random.Random(3)
    for _ in range(80):
        n = rng.randint(3, 6)
        w = cd.standard_curve(random_puncture_set(rng, n), n)
        x, y = random_band_word(rng, n, 4), random_band_word(rng, n, 4)
        assert cd.act_dual(w, x * y) == cd.act_dual(cd.act_dual(w, x), y)
        assert cd.act_dual(cd.act_dual(w, x), x.inverse()) == w
        assert cd.act_dual(w, x) == cd.act_band_letters(w, x)


def test_relations_on_curves():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(4, 6)
        w = cd.act_dual(cd.standard_curve(random_puncture_set(rng, n), n), random_band_word(rng, n, 3))
        i, j, k = sorted(rng.sample(range(1, n + 1), 3))
        lhs = parse_braid(f"a({i},{j}) a({j},{k})", n)
        for rhs in (f"a({j},{k}) a({i},{k})", f"a({i},{k}) a({i},{j})"):
            assert cd.act_band_letters(w, lhs) == cd.act_band_letters(w, parse_braid(rhs, n))


def test_nonstandard_images_have_bending_pairs_extending_the_factor():
    """If a simple s sends a standard curve to a nonstandard one, some bending pair extends s."""
    rng = random.Random(5)
    hits = 0
    for _ in range(400):
        n = rng.randint(3, 7)
        st = structure("dual", n)
        w = cd.standard_curve(random_puncture_set(rng, n), n)
        s = random_proper_simple(rng, "dual", n)
        img = cd.act_dual_simple(w, s)
        if cd.is_standard(img):
            continue
        hits += 1
        pairs = [b.pair for b in cd.bending_pairs(img)]
        assert pairs, str(img)
        assert any(st.atom_extends(s, p) for p in pairs), (str(w), s, str(img))
    assert hits > 100


def test_round_curve_through_nonround_standard_golden():
    nf = normal_form(parse_braid("a(1,2) a(1,4)", 4), "dual")
    assert nf.render() == "p=0; [{1,2}] [{1,4}]"
    w = cd.standard_curve({1, 4}, 4)
    images = cd.prefix_images_dual(w, nf)
    assert [str(v) for v in images] == ["1 ( 3 v", "1 ) 2 v 3 ) 4 v", "2 ( 4 v"]
    assert cd.is_round_dual(images[0]) and cd.is_round_dual(images[2])
    assert cd.is_standard(images[1]) and not cd.is_round_dual(images[1])
