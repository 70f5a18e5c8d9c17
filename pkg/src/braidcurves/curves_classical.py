"""
Curve words on the disk with diameter [0, n+1] and punctures 1..n.

A curve crossing the real line transversally is recorded as the cyclic word
of the gaps it crosses (gap i is the interval ]i, i+1[) separated by upper
arcs ``^`` and lower arcs ``v``. Words are stored canonically: the least
rotation, over both orientations, starting at a number, with the token order
numbers < ``^`` < ``v``.
"""
from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .braid import BraidWord, Permutation, permutation_of
from .garside import (
    ClassicalStructure,
    GarsideNormalForm,
    Perm,
    Structure,
    normal_form,
    reduced_artin_word,
    structure,
)

UPPER = "^"
LOWER = "v"


class CurveError(ValueError):
    pass


class DegenerateCurveError(CurveError):
    """The curve surrounds fewer than two or more than n-1 punctures."""


def _canonical(n: int, g: np.ndarray) -> tuple[int, ...]:
    up, lo = n + 1, n + 2
    m = g.shape[0]
    fwd = np.empty(2 * m, np.int64)
    fwd[0::2] = g
    fwd[1::4] = up
    fwd[3::4] = lo
    rev = fwd[::-1].copy()
    a = fwd[K.least_rotation(fwd, 2):]
    a = np.concatenate((a, fwd[: 2 * m - a.shape[0]]))
    # rev starts with an arc token; rotate by one so numbers sit at even slots
    rev = np.concatenate((rev[1:], rev[:1]))
    b = rev[K.least_rotation(rev, 2):]
    b = np.concatenate((b, rev[: 2 * m - b.shape[0]]))
    ta, tb = tuple(int(v) for v in a), tuple(int(v) for v in b)
    return min(ta, tb)


@dataclasses.dataclass(frozen=True)
class CurveWord:
    """Reduced, canonical curve word. Build with ``from_gaps`` or ``parse_curve``."""

    n: int
    tokens: tuple[int, ...]

    @classmethod
    def from_gaps(cls, n: int, gaps, check: bool = True) -> CurveWord:
        """Gap sequence whose first arc (gaps[0] to gaps[1]) is an upper arc."""
        g = np.asarray(gaps, dtype=np.int64)
        g = K.classical_reduce(g)
        if g.shape[0] < 2:
            raise DegenerateCurveError("curve collapses to nothing")
        w = cls(n, _canonical(n, g))
        if check:
            k = len(w.enclosed())
            if not 2 <= k <= n - 1:
                raise DegenerateCurveError(f"curve surrounds {k} punctures")
        return w

    def gaps(self) -> np.ndarray:
        """Gap array in kernel convention (upper arc first)."""
        nums = np.array(self.tokens[0::2], dtype=np.int64)
        if self.tokens[1] == self.n + 1:
            return nums
        return np.concatenate((nums[1:], nums[:1]))

    @property
    def size(self) -> int:
        """Number of letters (numbers and arcs)."""
        return len(self.tokens)

    def letters(self) -> list[str]:
        up = self.n + 1
        out = []
        for k, t in enumerate(self.tokens):
            if k % 2 == 0:
                out.append(str(t))
            else:
                out.append(UPPER if t == up else LOWER)
        return out

    def __str__(self) -> str:
        return " ".join(self.letters())

    def enclosed(self) -> frozenset[int]:
        return enclosed_punctures_classical(self)


def parse_curve(text: str, n: int) -> CurveWord:
    """
    ``0 ^ 2 v`` style words, or ``round:first-last``.

    >>> str(parse_curve("round:1-2", 4))
    '0 ^ 2 v'
    """
    text = text.strip()
    if text.startswith("round:"):
        a, _, b = text[len("round:"):].partition("-")
        try:
            return round_curve(int(a), int(b), n)
        except ValueError as exc:
            if isinstance(exc, CurveError):
                raise
            raise CurveError(f"bad round curve {text!r}") from exc
    toks = text.replace("⌢", " ^ ").replace("⌣", " v ").split()
    if len(toks) < 4 or len(toks) % 2:
        raise CurveError("a curve word alternates numbers and arcs, length >= 4")
    if not toks[0].isdigit():
        toks = toks[1:] + toks[:1]
    nums: list[int] = []
    arcs: list[str] = []
    for k, t in enumerate(toks):
        if k % 2 == 0:
            if not t.isdigit() or not 0 <= int(t) <= n:
                raise CurveError(f"bad gap number {t!r} at token {k}")
            nums.append(int(t))
        else:
            if t not in (UPPER, LOWER):
                raise CurveError(f"bad arc {t!r} at token {k}")
            arcs.append(t)
    if any(arcs[k] == arcs[k + 1] for k in range(len(arcs) - 1)) or arcs[0] == arcs[-1]:
        raise CurveError("upper and lower arcs must alternate")
    if arcs[0] == LOWER:
        nums = nums[1:] + nums[:1]
    if not is_planar(nums):
        raise CurveError("arcs cross each other; not a simple curve")
    return CurveWord.from_gaps(n, nums)


def _chords_cross(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = sorted(c1)
    c, d = sorted(c2)
    if len({a, b, c, d}) < 4:
        return False  # shared gap: the order inside the gap can separate them
    return (a < c < b < d) or (c < a < d < b)


def is_planar(gaps: Sequence[int]) -> bool:
    """Necessary simplicity check: arcs in one half plane never interleave."""
    m = len(gaps)
    for parity in (0, 1):
        chords = [(gaps[t], gaps[(t + 1) % m]) for t in range(parity, m, 2)]
        for x in range(len(chords)):
            for y in range(x + 1, len(chords)):
                if _chords_cross(chords[x], chords[y]):
                    return False
    return True


def round_curve(first: int, last: int, n: int) -> CurveWord:
    if not 1 <= first <= last <= n or not 2 <= last - first + 1 <= n - 1:
        raise DegenerateCurveError(f"round curve {first}-{last} is degenerate for n={n}")
    return CurveWord.from_gaps(n, [first - 1, last])


def reduce(n: int, gaps: Sequence[int]) -> CurveWord:
    """Reduce an arbitrary gap sequence (upper arc first)."""
    return CurveWord.from_gaps(n, gaps)


def act_sigma_pk(w: CurveWord, p: int, k: int) -> CurveWord:
    if not 1 <= k < p <= w.n:
        raise ValueError(f"Sigma_{{{p},{k}}} needs 1 <= k < p <= n")
    return CurveWord.from_gaps(w.n, K.act_sigma_pk(w.gaps(), p, k), check=False)


def prescribed_sigma_image(w: CurveWord, p: int, k: int) -> np.ndarray:
    """Image gaps after removing only the ``p v p`` subwords, nothing else."""
    return K.classical_prescribed_removal(K.sigma_pk_raw(w.gaps(), p, k), p)


def act_delta_classical(w: CurveWord, times: int = 1) -> CurveWord:
    if times % 2 == 0:
        return w
    return CurveWord.from_gaps(w.n, K.classical_half_turn(w.gaps(), w.n), check=False)


def _moves_for_simple(st: ClassicalStructure, s: Perm) -> list[tuple[int, int]]:
    return st.sigma_factorization(s)


def simple_moves(s: Perm) -> list[tuple[int, int]]:
    """Sigma_{p,k_p} factorization of a permutation braid."""
    return structure(Structure.CLASSICAL, len(s)).sigma_factorization(s)


def artin_moves(indices: Iterable[int]) -> list[tuple[int, int]]:
    """sigma_i = Sigma_{i+1,1}."""
    return [(i + 1, 1) for i in indices]


def _apply_moves(w: CurveWord, moves: list[tuple[int, int]], g: np.ndarray | None = None) -> np.ndarray:
    if g is None:
        g = w.gaps()
    if not moves:
        return g
    return K.act_sigma_sequence(g, np.array(moves, dtype=np.int64).reshape(-1, 2))


def act_positive(w: CurveWord, x) -> CurveWord:
    """
    Act by a positive Artin word or by a sequence of simple permutations.

    Band letters and negative letters are rejected; normalize first.
    """
    if isinstance(x, BraidWord):
        if not x.is_positive() or any(gen.is_band and gen.j != gen.i + 1 for gen, _ in x.letters):
            raise ValueError("act_positive needs a positive Artin word")
        moves = artin_moves(gen.i for gen, _ in x.letters)
    else:
        moves = [m for s in x for m in simple_moves(tuple(s))]
    return CurveWord.from_gaps(w.n, _apply_moves(w, moves), check=False)


def act_simple_by_letters(w: CurveWord, s: Perm) -> CurveWord:
    """Act through a reduced Artin word of s instead of its Sigma factorization."""
    return CurveWord.from_gaps(w.n, _apply_moves(w, artin_moves(reduced_artin_word(s))), check=False)


def prefix_images(w: CurveWord, nf: GarsideNormalForm) -> list[CurveWord]:
    """Images under Delta^p, Delta^p x_1, ..., Delta^p x_1...x_r."""
    cur = act_delta_classical(w, nf.infimum)
    out = [cur]
    for f in nf.factors:
        cur = CurveWord.from_gaps(w.n, _apply_moves(cur, simple_moves(f)), check=False)
        out.append(cur)
    return out


def act_braid(w: CurveWord, x: BraidWord | GarsideNormalForm) -> CurveWord:
    nf = x if isinstance(x, GarsideNormalForm) else normal_form(x, Structure.CLASSICAL)
    cur = act_delta_classical(w, nf.infimum)
    moves = [m for f in nf.factors for m in simple_moves(f)]
    return CurveWord.from_gaps(w.n, _apply_moves(cur, moves), check=False)


def is_round(w: CurveWord) -> bool:
    return w.size == 4


def is_almost_round(w: CurveWord) -> bool:
    g = w.tokens[0::2]
    m = len(g)
    signs = [g[(t + 1) % m] > g[t] for t in range(m)]
    changes = sum(1 for t in range(m) if signs[t] != signs[(t + 1) % m])
    return changes <= 2


@dataclasses.dataclass(frozen=True, order=True)
class BendingPoint:
    j: int
    position: int  # index of the witness's first letter in the canonical word


def bending_points(w: CurveWord) -> frozenset[BendingPoint]:
    """
    All j with a subword i ^ j v l, i < j < l, up to rotation and reversal.

    Read forwards the reversed pattern is i v j ^ l with i > j > l.
    """
    tok = w.tokens
    up = w.n + 1
    L = len(tok)
    found: dict[int, int] = {}
    for t in range(0, L, 2):
        a, arc1, b, arc2, c = (tok[(t + r) % L] for r in range(5))
        if arc1 == up and a < b < c or arc1 != up and a > b > c:
            found.setdefault(b, t)
    del arc2
    return frozenset(BendingPoint(j, pos) for j, pos in found.items())


def bending_indices(w: CurveWord) -> set[int]:
    return {b.j for b in bending_points(w)}


def enclosed_punctures_classical(w: CurveWord) -> frozenset[int]:
    """Puncture m is inside iff an odd number of crossings lie left of it."""
    g = w.tokens[0::2]
    return frozenset(m for m in range(1, w.n + 1) if sum(1 for v in g if v < m) % 2 == 1)


def all_round_curves(n: int) -> list[CurveWord]:
    return [
        round_curve(a, b, n)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if b - a + 1 <= n - 1
    ]


def compatible(j: int, s: Perm) -> bool:
    """Strands ending at j and j+1 have not crossed in s (s * sigma_j simple)."""
    return structure(Structure.CLASSICAL, len(s)).atom_extends(s, (j, j + 1))


def equivariance_holds(w: CurveWord, x: BraidWord) -> bool:
    img = act_braid(w, x)
    rho: Permutation = permutation_of(x)
    return img.enclosed() == rho.image_set(w.enclosed())
