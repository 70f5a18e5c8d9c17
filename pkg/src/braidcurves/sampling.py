"""Seeded random generators for simples, normal forms, braids and curves."""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

from .braid import BraidWord, artin, band
from .garside import (
    GarsideNormalForm,
    Perm,
    Structure,
    then,
    transposition,
    structure,
)


@lru_cache(maxsize=None)
def all_classical_simples(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def all_dual_simples(n: int) -> tuple[Perm, ...]:
    """Every non-crossing partition of 1..n as a permutation (Catalan many)."""
    st = structure(Structure.DUAL, n)
    found = {st.identity}
    frontier = [st.identity]
    while frontier:
        nxt = []
        for s in frontier:
            for at in st.atoms():
                if st.atom_extends(s, at):
                    t = then(s, st.atom_perm(at))
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return tuple(sorted(found))


def all_simples(kind: Structure | str, n: int) -> tuple[Perm, ...]:
    kind = Structure(kind)
    return all_classical_simples(n) if kind is Structure.CLASSICAL else all_dual_simples(n)


def random_simple(rng: random.Random, kind: Structure | str, n: int) -> Perm:
    """Uniform for small n; a random atom walk when enumeration is too large."""
    kind = Structure(kind)
    if kind is Structure.CLASSICAL:
        p = list(range(n))
        rng.shuffle(p)
        return tuple(p)
    if n <= 9:
        return rng.choice(all_dual_simples(n))
    st = structure(kind, n)
    s = st.identity
    for _ in range(rng.randint(1, n - 1)):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        if st.atom_extends(s, (i, j)):
            s = then(s, transposition(n, i, j))
    return s


def random_proper_simple(rng: random.Random, kind: Structure | str, n: int) -> Perm:
    st = structure(kind, n)
    while True:
        s = random_simple(rng, kind, n)
        if s not in (st.identity, st.garside):
            return s


def random_normal_form(rng: random.Random, kind: Structure | str, n: int, length: int, infimum: int = 0) -> GarsideNormalForm:
    """A left-weighted factor sequence built directly, without normalizing."""
    st = structure(kind, n)
    out: list[Perm] = []
    tries = 0
    while len(out) < length:
        s = random_proper_simple(rng, kind, n)
        if not out or st.is_left_weighted(out[-1], s):
            out.append(s)
            tries = 0
        else:
            tries += 1
            if tries > 200:
                out.pop()  # dead end: every proper simple we drew fails
    return GarsideNormalForm(Structure(kind), n, infimum, tuple(out))


def random_band_word(rng: random.Random, n: int, length: int, positive: bool = False) -> BraidWord:
    letters = []
    for _ in range(length):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        letters.append((band(i, j), 1 if positive else rng.choice((1, -1))))
    return BraidWord(n, tuple(letters))


def random_artin_word(rng: random.Random, n: int, length: int, positive: bool = False) -> BraidWord:
    letters = []
    for _ in range(length):
        letters.append((artin(rng.randint(1, n - 1)), 1 if positive else rng.choice((1, -1))))
    return BraidWord(n, tuple(letters))


def random_puncture_set(rng: random.Random, n: int) -> frozenset[int]:
    return frozenset(rng.sample(range(1, n + 1), rng.randint(2, n - 1)))


def random_round_interval(rng: random.Random, n: int) -> tuple[int, int]:
    size = rng.randint(2, n - 1)
    a = rng.randint(1, n - size + 1)
    return a, a + size - 1
