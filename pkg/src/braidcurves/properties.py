"""
Randomised and exhaustive property drivers.

Each driver returns a ``Report`` with the number of cases checked, the
violations found (at most a few are kept verbatim) and counters describing
how non-trivial the sample was.
"""
from __future__ import annotations

import dataclasses
import random
from itertools import combinations
from typing import Callable

from . import curves_classical as cc
from . import curves_dual as cd
from .braid import permutation_of
from .garside import GarsideNormalForm, Perm, Structure, structure, then
from .reducibility import PunctureSet, s_set, s_set_grown
from .sampling import (
    all_dual_simples,
    random_band_word,
    random_proper_simple,
    random_puncture_set,
    random_round_interval,
)


@dataclasses.dataclass
class Report:
    name: str
    cases: int = 0
    violations: int = 0
    examples: list[str] = dataclasses.field(default_factory=list)
    counters: dict[str, int] = dataclasses.field(default_factory=dict)

    def bump(self, key: str, by: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + by

    def fail(self, msg: str) -> None:
        self.violations += 1
        if len(self.examples) < 5:
            self.examples.append(msg)

    @property
    def ok(self) -> bool:
        return self.cases > 0 and self.violations == 0

    def summary(self) -> str:
        extra = ", ".join(f"{k}={v}" for k, v in sorted(self.counters.items()))
        return f"{self.cases} cases, {self.violations} violations" + (f" ({extra})" if extra else "")

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


# ------------------------------------------------------------ curve helpers


def _classical_image(w: cc.CurveWord, s: Perm) -> cc.CurveWord:
    return cc.act_positive(w, [s])


def _round_preserving_factors(rng, kind, n, w, act, good, r, tries=300):
    """Up to r random proper simples, each keeping the running image ``good``."""
    out = []
    cur = w
    for _ in range(r):
        for _ in range(tries):
            s = random_proper_simple(rng, kind, n)
            img = act(cur, s)
            if good(img):
                out.append(s)
                cur = img
                break
        else:
            break
    return out, cur


def _free_factors(rng, kind, n, w, act, good, r, attempts=40):
    """r unconstrained random simples, retried until the final image is ``good``."""
    for _ in range(attempts):
        facs = [random_proper_simple(rng, kind, n) for _ in range(r)]
        cur = w
        for s in facs:
            cur = act(cur, s)
        if good(cur):
            return facs
    return None


def _prefix_driver(rng: random.Random, trials: int, kind: Structure, name: str, ns=range(3, 8), max_factors=8) -> Report:
    rep = Report(name)
    ns = list(ns)
    if kind is Structure.CLASSICAL:
        curves = {n: list(cc.all_round_curves(n)) for n in ns}
        act = _classical_image
        good = cc.is_round
        trace = cc.prefix_images
    else:
        curves = {n: [cd.standard_curve(c, n) for k in range(2, n) for c in combinations(range(1, n + 1), k)] for n in ns}
        act = cd.act_dual_simple
        good = cd.is_standard
        trace = cd.prefix_images_dual
    for t in range(trials):
        n = ns[t % len(ns)]
        st = structure(kind, n)
        # cycle through every starting curve of each size
        pool = curves[n]
        w = pool[(t // len(ns)) % len(pool)]
        r = rng.randint(1, max_factors)
        facs = _free_factors(rng, kind, n, w, act, good, r) if t % 2 else None
        if facs is None:
            facs, _ = _round_preserving_factors(rng, kind, n, w, act, good, r)
            rep.bump("constructive")
        else:
            rep.bump("unconstrained")
        p, nf_facs = st.normalize(0, facs)
        nf = GarsideNormalForm(kind, n, p, nf_facs)
        images = trace(w, nf)
        rep.cases += 1
        if not good(images[-1]):
            rep.fail(f"sampler produced a non-{name} image: {nf.render()} on {w}")
            continue
        if list(nf_facs) != list(facs):
            rep.bump("nf_differs_from_sample")
        if len(nf_facs) >= 2:
            rep.bump("canonical_length_ge_2")
        for m, img in enumerate(images):
            if not good(img):
                rep.fail(f"n={n} curve {w} nf {nf.render()}: prefix {m} image {img}")
                break
    return rep


def round_prefixes(rng: random.Random, trials: int) -> Report:
    """Round curves with round images stay round along classical normal-form prefixes."""
    return _prefix_driver(rng, trials, Structure.CLASSICAL, "round")


def standard_prefixes(rng: random.Random, trials: int) -> Report:
    """Standard curves with standard images stay standard along dual normal-form prefixes."""
    return _prefix_driver(rng, trials, Structure.DUAL, "standard")


# ------------------------------------------------------ well-definedness


def random_atom_factorization(rng: random.Random, kind: Structure, s: Perm) -> list[tuple[int, int]]:
    """A random reduced atom word for s: repeatedly peel a random atom prefix."""
    st = structure(kind, len(s))
    word = []
    cur = s
    while cur != st.identity:
        choices = [at for at in st.atoms() if st.atom_is_prefix(cur, at)]
        at = rng.choice(choices)
        word.append(at)
        cur = then(st.atom_perm(at), cur)
    return word


def _random_classical_curve(rng, n):
    a, b = random_round_interval(rng, n)
    w = cc.round_curve(a, b, n)
    return cc.act_braid(w, random_band_word(rng, n, rng.randint(0, 6)))


def _random_dual_curve(rng, n):
    w = cd.standard_curve(random_puncture_set(rng, n), n)
    return cd.act_dual(w, random_band_word(rng, n, rng.randint(0, 6)))


def well_defined(rng: random.Random, trials: int, ns=range(3, 7)) -> Report:
    """Acting atom by atom in a random order matches the canonical factorisation."""
    rep = Report("well-defined")
    ns = list(ns)
    for t in range(trials):
        n = ns[t % len(ns)]
        for kind in (Structure.CLASSICAL, Structure.DUAL):
            s = random_proper_simple(rng, kind, n)
            atoms = random_atom_factorization(rng, kind, s)
            if kind is Structure.CLASSICAL:
                w = _random_classical_curve(rng, n)
                a = cc.act_positive(w, [s])
                b = cc.CurveWord.from_gaps(n, cc._apply_moves(w, cc.artin_moves(i for i, _ in atoms)), check=False)
            else:
                w = _random_dual_curve(rng, n)
                a = cd.act_dual_simple(w, s)
                b = w
                for at in atoms:
                    b = cd.act_polygon(b, at)
            rep.cases += 1
            rep.bump(kind.value)
            if len(atoms) >= 2:
                rep.bump("multi_atom")
            if a != b:
                rep.fail(f"{kind.value} n={n} s={s} atoms={atoms} on {w}: {a} vs {b}")
    return rep


# ----------------------------------------------------------- equivariance


def equivariance(rng: random.Random, trials: int, ns=range(3, 8)) -> Report:
    """Enclosed punctures of the image are rho(x) of the enclosed punctures."""
    rep = Report("equivariance")
    ns = list(ns)
    for t in range(trials):
        n = ns[t % len(ns)]
        x = random_band_word(rng, n, rng.randint(1, 10))
        rho = permutation_of(x)
        a, b = random_round_interval(rng, n)
        img = cc.act_braid(cc.round_curve(a, b, n), x)
        rep.cases += 1
        rep.bump("classical")
        if img.enclosed() != rho.image_set(range(a, b + 1)):
            rep.fail(f"classical {x} on round {a}-{b}: {img}")
        for _ in range(200):
            x = random_band_word(rng, n, rng.randint(1, 10))
            I = random_puncture_set(rng, n)
            dimg = cd.act_dual(cd.standard_curve(I, n), x)
            if cd.is_standard(dimg):
                break
        else:
            rep.bump("dual_sampling_gave_up")
            continue
        rho = permutation_of(x)
        rep.cases += 1
        rep.bump("dual_standard_outputs")
        if rho.image_set(I) != frozenset(I):
            rep.bump("dual_set_moved")
        if cd.enclosed_punctures_standard(dimg) != rho.image_set(I):
            rep.fail(f"dual {x} on std {sorted(I)}: {dimg}")
    return rep


# -------------------------------------------------------- S-set fixpoint


def sset_fixpoint_exhaustive(ns=range(4, 7)) -> Report:
    """
    For every proper I and dual simple s:
    S(I, s) = I implies s maps the standard curve around I to itself, and any
    superset J of I whose standard curve has a standard image contains the
    grown set.
    """
    rep = Report("sset-fixpoint")
    for n in ns:
        simples = all_dual_simples(n)
        sets = [frozenset(c) for k in range(2, n) for c in combinations(range(1, n + 1), k)]
        std_ok: dict[tuple[Perm, frozenset[int]], bool] = {}
        for s in simples:
            for J in sets:
                img = cd.act_dual_simple(cd.standard_curve(J, n), s)
                std_ok[s, J] = cd.is_standard(img)
                if std_ok[s, J]:
                    rep.bump("standard_images")
        for s in simples:
            rho = [v + 1 for v in s]
            for I in sets:
                P = PunctureSet(n, I)
                rep.cases += 1
                if s_set(P, s).members == I:
                    rep.bump("fixpoints")
                    img = cd.act_dual_simple(cd.standard_curve(I, n), s)
                    if not cd.is_standard(img) or cd.enclosed_punctures_standard(img) != frozenset(rho[v - 1] for v in I):
                        rep.fail(f"fixpoint n={n} I={sorted(I)} s={s}: image {img}")
                grown = s_set_grown(P, s).members
                for J in sets:
                    if I <= J and std_ok[s, J] and not grown <= J:
                        rep.fail(f"necessity n={n} I={sorted(I)} J={sorted(J)} s={s}: grown {sorted(grown)}")
    return rep


def sset_fixpoint(rng: random.Random, trials: int) -> Report:
    return sset_fixpoint_exhaustive(range(4, 4 + max(1, min(trials, 3))))


CHECKS: dict[str, Callable[[random.Random, int], Report]] = {
    "round-prefixes": round_prefixes,
    "standard-prefixes": standard_prefixes,
    "well-defined": well_defined,
    "equivariance": equivariance,
    "sset-fixpoint": sset_fixpoint,
}
