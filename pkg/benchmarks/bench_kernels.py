"""
Compare compiled kernels against the pure Python fallback.

    python3 benchmarks/bench_kernels.py [--reps 200]

Each mode runs in its own interpreter (the fallback with
BRAIDCURVES_NO_NUMBA=1) on identical seeded inputs, and the outputs are
checked to match.
"""
import argparse
import json
import os
import random
import subprocess
import sys
import time

import numpy as np

from braidcurves import _kernels as K
from braidcurves import curves_classical as cc
from braidcurves import curves_dual as cd
from braidcurves._accel import USE_NUMBA
from braidcurves.reducibility import _tables
from braidcurves.sampling import (
    random_band_word,
    random_normal_form,
    random_proper_simple,
    random_puncture_set,
    random_round_interval,
)


def cases(seed):
    rng = random.Random(seed)
    n = 12
    a, b = random_round_interval(rng, n)
    g = cc.act_braid(cc.round_curve(a, b, n), random_band_word(rng, n, 12)).gaps()
    moves = np.array([[rng.randint(2, n), 1] for _ in range(30)], dtype=np.int64)
    w = cd.act_dual(cd.standard_curve(random_puncture_set(rng, n), n), random_band_word(rng, n, 12))
    G, D = w.arrays()
    verts, offs = cd._pack(cd.polygons_of(random_proper_simple(rng, "dual", n)))
    nf = random_normal_form(rng, "dual", 16, 40)
    blks, bsizes, rhos = _tables(nf)
    return {
        "classical sigma sequence": (K.act_sigma_sequence, (g, moves)),
        "dual polygon sequence": (K.act_polygon_sequence, (G, D, n, verts, offs)),
        "all-pairs S-set fixpoint": (K.all_pairs_fixpoint, (nf.infimum, blks, bsizes, rhos, 16)),
    }


def clock(fn, args, reps):
    fn(*args)
    t = time.perf_counter()
    for _ in range(reps):
        fn(*args)
    return (time.perf_counter() - t) / reps


def measure(seed, reps):
    out = {}
    for name, (fn, a) in cases(seed).items():
        res = fn(*a)
        res = res if isinstance(res, tuple) else (res,)
        out[name] = {"us": clock(fn, a, reps) * 1e6, "result": [np.asarray(r).tolist() for r in res]}
    return out


def run_mode(no_numba, seed, reps):
    env = dict(os.environ, BRAIDCURVES_NO_NUMBA="1" if no_numba else "0")
    cmd = [sys.executable, __file__, "--worker", "--seed", str(seed), "--reps", str(reps)]
    return json.loads(subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps({"numba": USE_NUMBA, "cases": measure(args.seed, args.reps)}))
        return
    fast = run_mode(False, args.seed, args.reps)
    slow = run_mode(True, args.seed, max(1, args.reps // 20))
    if not fast["numba"]:
        print("numba unavailable: both columns are the Python fallback")
    print(f"{'kernel':28s} {'njit us':>10s} {'python us':>10s} {'speedup':>8s}")
    for name, f in fast["cases"].items():
        p = slow["cases"][name]
        assert f["result"] == p["result"], f"{name}: outputs differ"
        print(f"{name:28s} {f['us']:10.1f} {p['us']:10.1f} {p['us'] / f['us']:8.1f}x")


if __name__ == "__main__":
    main()
