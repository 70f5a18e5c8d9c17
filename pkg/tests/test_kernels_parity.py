"""Compiled kernels and their Python sources must agree bit for bit."""
import random

import numpy as np
import pytest

from braidcurves import _kernels as K
from braidcurves import curves_classical as cc
from braidcurves import curves_dual as cd
from braidcurves._accel import USE_NUMBA, python_version
from braidcurves.garside import normal_form
from braidcurves.reducibility import PunctureSet, _tables
from braidcurves.sampling import (
    random_band_word,
    random_proper_simple,
    random_puncture_set,
    random_round_interval,
)

pytestmark = pytest.mark.skipif(not USE_NUMBA, reason="numba disabled; nothing to compare")


def both(fn, *args):
    fast = fn(*args)
    slow = python_version(fn)(*[a.copy() if isinstance(a, np.ndarray) else a for a in args])
    return fast, slow


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def test_classical_kernels():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(3, 8)
        a, b = random_round_interval(rng, n)
        g = cc.act_braid(cc.round_curve(a, b, n), random_band_word(rng, n, 5)).gaps()
        p = rng.randint(2, n)
        k = rng.randint(1, p - 1)
        assert same(*both(K.act_sigma_pk, g, p, k))
        assert same(*both(K.classical_half_turn, g, n))
        raw = K.sigma_pk_raw(g, p, k)
        assert same(*both(K.classical_reduce, raw))
        moves = np.array([[rng.randint(2, n), 1] for _ in range(4)], dtype=np.int64)
        assert same(*both(K.act_sigma_sequence, g, moves))


def test_dual_kernels():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(3, 8)
        w = cd.act_dual(cd.standard_curve(random_puncture_set(rng, n), n), random_band_word(rng, n, 4))
        G, D = w.arrays()
        s = random_proper_simple(rng, "dual", n)
        polys = cd.polygons_of(s)
        verts, offs = cd._pack(polys)
        assert same(*both(K.act_polygon_sequence, G, D, n, verts, offs))
        assert same(*both(K.dual_shift, G, n, rng.randint(-n, n)))
        if polys:
            v = np.array(polys[0], dtype=np.int64)
            assert same(*both(K.dual_polygon_raw, G, D, n, v))


def test_s_set_kernels():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(3, 9)
        nf = normal_form(random_band_word(rng, n, 6), "dual")
        blks, bsizes, rhos = _tables(nf)
        mask = PunctureSet.of(n, random_puncture_set(rng, n)).mask()
        assert same(*both(K.s_chain_mask, mask, nf.infimum, blks, bsizes, rhos, n))
        a, b = sorted(rng.sample(range(n), 2))
        assert same(*both(K.pair_fixpoint_mask, a, b, nf.infimum, blks, bsizes, rhos, n))
        assert same(*both(K.all_pairs_fixpoint, nf.infimum, blks, bsizes, rhos, n))


def test_least_rotation():
    rng = np.random.default_rng(3)
    for _ in range(100):
        tok = rng.integers(0, 4, size=2 * int(rng.integers(1, 10))).astype(np.int64)
        assert same(*both(K.least_rotation, tok, 2))


def test_fully_interpreted_run_matches():
    """The same seeded inputs through a fresh interpreter with numba switched off."""
    import json
    import os
    import subprocess
    import sys
    from pathlib import Path

    bench = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    outs = []
    for flag in ("0", "1"):
        env = dict(os.environ, BRAIDCURVES_NO_NUMBA=flag)
        proc = subprocess.run([sys.executable, str(bench), "--worker", "--reps", "1"], env=env, check=True, capture_output=True, text=True)
        outs.append(json.loads(proc.stdout))
    assert outs[0]["numba"] and not outs[1]["numba"]
    assert {k: v["result"] for k, v in outs[0]["cases"].items()} == {k: v["result"] for k, v in outs[1]["cases"].items()}
