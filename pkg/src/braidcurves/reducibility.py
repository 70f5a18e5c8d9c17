"""
Search for standard curves preserved by a braid, and the resulting
periodic / reducible / pseudo-Anosov classification.

The search grows a puncture set from a seed pair with the S-set recurrence
until it stabilises; a proper stable set describes a standard curve that the
braid maps to itself. Every reported witness is re-checked by acting on the
curve directly.
"""
from __future__ import annotations

import dataclasses
import enum
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as K
from .braid import BraidWord
from .curves_dual import act_dual, enclosed_punctures_standard, is_standard, standard_curve
from .garside import (
    BudgetExceeded,
    GarsideNormalForm,
    Perm,
    Structure,
    blocks_of,
    is_periodic,
    normal_form,
    sliding_circuits_bfs,
    sliding_orbit,
)


@dataclasses.dataclass(frozen=True)
class PunctureSet:
    n: int
    members: frozenset[int]

    def __post_init__(self):
        if not self.members <= frozenset(range(1, self.n + 1)):
            raise ValueError(f"punctures must lie in 1..{self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> PunctureSet:
        return cls(n, frozenset(members))

    @property
    def proper(self) -> bool:
        return 2 <= len(self.members) <= self.n - 1

    def mask(self) -> np.ndarray:
        m = np.zeros(self.n, np.bool_)
        for v in self.members:
            m[v - 1] = True
        return m

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> PunctureSet:
        return cls(len(mask), frozenset(int(v) + 1 for v in np.flatnonzero(mask)))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"

    def __len__(self) -> int:
        return len(self.members)


class NTKind(str, enum.Enum):
    PERIODIC = "periodic"
    REDUCIBLE = "reducible"
    PSEUDO_ANOSOV_CANDIDATE = "pseudo-anosov-candidate"


@dataclasses.dataclass(frozen=True)
class NTVerdict:
    kind: NTKind
    invariant: PunctureSet | None = None
    power: int | None = None
    element: GarsideNormalForm | None = None
    circuit_size: int = 0
    exhaustive: bool = False

    def describe(self) -> str:
        if self.kind is NTKind.REDUCIBLE:
            return f"reducible: y^{self.power} preserves the standard curve around {self.invariant}, y = {self.element.render()}"
        if self.kind is NTKind.PSEUDO_ANOSOV_CANDIDATE:
            scope = "closure" if self.exhaustive else "sliding orbit"
            return f"pseudo-anosov-candidate: no standard invariant curve over {self.circuit_size} {scope} element(s)"
        return "periodic"


def _simple_tables(n: int, s: Perm) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # singletons get their own ids past the polygons, with size 1
    blk = np.arange(n, dtype=np.int64) + n
    bsize = np.ones(2 * n, np.int64)
    for b, poly in enumerate(blocks_of(s)):
        for v in poly.vertices:
            blk[v - 1] = b
        bsize[b] = len(poly.vertices)
    return blk, bsize, np.array(s, dtype=np.int64)


def _tables(nf: GarsideNormalForm) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n = nf.strands
    r = len(nf.factors)
    blks = np.zeros((r, n), np.int64)
    bsizes = np.zeros((r, 2 * n), np.int64)
    rhos = np.zeros((r, n), np.int64)
    for f, s in enumerate(nf.factors):
        blks[f], bsizes[f], rhos[f] = _simple_tables(n, s)
    return blks, bsizes, rhos


def _as_dual_nf(x: BraidWord | GarsideNormalForm) -> GarsideNormalForm:
    if isinstance(x, GarsideNormalForm):
        if x.structure is not Structure.DUAL:
            return normal_form(x.word(), Structure.DUAL)
        return x
    return normal_form(x, Structure.DUAL)


def s_set(I: PunctureSet | Iterable[int], s: Perm, n: int | None = None) -> PunctureSet:
    """rho(s) applied to I grown by the first vertex, in each gap between members of I, of every block crossing that gap."""
    if not isinstance(I, PunctureSet):
        I = PunctureSet.of(n if n is not None else len(s), I)
    blk, bsize, rho = _simple_tables(I.n, tuple(s))
    return PunctureSet.from_mask(K.s_set_mask(I.mask(), blk, bsize, rho, I.n))


def s_set_grown(I: PunctureSet, s: Perm) -> PunctureSet:
    """The grown set before rho(s) is applied."""
    out = s_set(I, s)
    inv = [0] * I.n
    for k, v in enumerate(s):
        inv[v] = k
    return PunctureSet.of(I.n, (inv[v - 1] + 1 for v in out.members))


def s_chain(I0: PunctureSet, x: BraidWord | GarsideNormalForm) -> PunctureSet:
    nf = _as_dual_nf(x)
    blks, bsizes, rhos = _tables(nf)
    return PunctureSet.from_mask(K.s_chain_mask(I0.mask(), nf.infimum, blks, bsizes, rhos, I0.n))


def fixpoint_trace(x: BraidWord | GarsideNormalForm, a: int, b: int) -> list[PunctureSet]:
    """I_0 = {a, b}, I_m = S(I_{m-1}, x) | I_{m-1} for m = 1..n-2 (no early exit)."""
    nf = _as_dual_nf(x)
    n = nf.strands
    cur = PunctureSet.of(n, (a, b))
    out = [cur]
    for _ in range(n - 2):
        cur = PunctureSet(n, s_chain(cur, nf).members | cur.members)
        out.append(cur)
    return out


def curve_is_invariant(I: PunctureSet, x: BraidWord | GarsideNormalForm) -> bool:
    """Direct check: x maps the standard curve around I to itself."""
    if not I.proper:
        return False
    img = act_dual(standard_curve(I.members, I.n), _as_dual_nf(x))
    return is_standard(img) and enclosed_punctures_standard(img) == I.members


def invariant_curve_through_pair(x: BraidWord | GarsideNormalForm, a: int, b: int) -> PunctureSet | None:
    if a == b:
        raise ValueError("seed punctures must differ")
    nf = _as_dual_nf(x)
    n = nf.strands
    blks, bsizes, rhos = _tables(nf)
    mask = K.pair_fixpoint_mask(a - 1, b - 1, nf.infimum, blks, bsizes, rhos, n)
    if mask.all():
        return None
    return PunctureSet.from_mask(mask)


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            yield a, b


def find_standard_invariant_curve(x: BraidWord | GarsideNormalForm, verify: bool = True) -> PunctureSet | None:
    """
    First proper stable set over seed pairs in lexicographic order.

    With ``verify`` a candidate is kept only if direct curve action confirms
    it; candidates failing that check are skipped.
    """
    nf = _as_dual_nf(x)
    n = nf.strands
    blks, bsizes, rhos = _tables(nf)
    mask = K.all_pairs_fixpoint(nf.infimum, blks, bsizes, rhos, n)
    if not mask.any():
        return None
    first = PunctureSet.from_mask(mask)
    if not verify or curve_is_invariant(first, nf):
        return first
    for a, b in _pairs(n):
        m = K.pair_fixpoint_mask(a - 1, b - 1, nf.infimum, blks, bsizes, rhos, n)
        if not m.all():
            cand = PunctureSet.from_mask(m)
            if curve_is_invariant(cand, nf):
                return cand
    return None


def brute_force_invariant_sets(x: BraidWord | GarsideNormalForm) -> list[PunctureSet]:
    """Every proper I whose standard curve x preserves, by direct action."""
    from itertools import combinations

    nf = _as_dual_nf(x)
    n = nf.strands
    return [
        PunctureSet.of(n, c)
        for k in range(2, n)
        for c in combinations(range(1, n + 1), k)
        if curve_is_invariant(PunctureSet.of(n, c), nf)
    ]


def nt_type(x: BraidWord, budget: int = 1000, bfs: bool = False, bfs_size: int = 2000) -> NTVerdict:
    """
    Classify x. ``budget`` bounds the sliding steps; with ``bfs`` the search
    runs over the closure of sliding circuits under atom conjugation.

    Raises BudgetExceeded instead of guessing when a bound is hit.
    """
    if is_periodic(x):
        return NTVerdict(NTKind.PERIODIC)
    if bfs:
        circuit = sliding_circuits_bfs(x, max_size=bfs_size, max_steps=budget)
    else:
        circuit, _ = sliding_orbit(x, max_steps=budget)
    n = x.strands
    for y in circuit:
        yw = y.word()
        for k in range(1, n // 2 + 1):
            I = find_standard_invariant_curve(normal_form(yw ** k, Structure.DUAL))
            if I is not None:
                return NTVerdict(NTKind.REDUCIBLE, I, k, y, len(circuit), bfs)
    return NTVerdict(NTKind.PSEUDO_ANOSOV_CANDIDATE, circuit_size=len(circuit), exhaustive=bfs)


__all__ = [
    "BudgetExceeded",
    "NTKind",
    "NTVerdict",
    "PunctureSet",
    "brute_force_invariant_sets",
    "curve_is_invariant",
    "find_standard_invariant_curve",
    "fixpoint_trace",
    "invariant_curve_through_pair",
    "nt_type",
    "s_chain",
    "s_set",
    "s_set_grown",
]
