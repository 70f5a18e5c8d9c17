"""
Curve words relative to the circle through the punctures.

Punctures 1..n sit clockwise on a circle; the circle arc from puncture i to
i+1 is gap i. A curve is recorded as the cyclic sequence of gaps it crosses,
separated by inner arcs ``v`` and outer arcs. Outer arcs are ``(`` when they
run counterclockwise, ``)`` clockwise, and ``((`` / ``))`` for loops whose two
ends lie in the same gap.

Internally an outer arc carries a signed displacement: the number of
punctures it passes over, negative for counterclockwise travel.
"""
from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .braid import Permutation
from .garside import (
    GarsideNormalForm,
    Perm,
    Polygon,
    Structure,
    blocks_of,
    normal_form,
    structure,
)

INNER, CCW, CW, LOOP_CCW, LOOP_CW = "v", "(", ")", "((", "))"
_UNICODE = {"⌣": INNER, "↶": CCW, "↷": CW, "↺": LOOP_CCW, "↻": LOOP_CW}
_PRETTY = {v: k for k, v in _UNICODE.items()}
_SWAP = {CCW: CW, CW: CCW, LOOP_CCW: LOOP_CW, LOOP_CW: LOOP_CCW, INNER: INNER}
# canonical order among arc letters: numbers < ( < ) < (( < )) < v
_ARC_CODE = {CCW: 1, CW: 2, LOOP_CCW: 3, LOOP_CW: 4, INNER: 5}
_CODE_ARC = {v: k for k, v in _ARC_CODE.items()}


class DualCurveError(ValueError):
    pass


class NotStandardError(DualCurveError):
    pass


def _arc_of(d: int, n: int) -> str:
    if d == -n:
        return LOOP_CCW
    if d == n:
        return LOOP_CW
    if -n < d < 0:
        return CCW
    if 0 < d < n:
        return CW
    raise DualCurveError(f"outer arc displacement {d} outside ]-n, n[ u {{-n, n}}")


def _displacement(a: int, arc: str, b: int, n: int) -> int:
    if arc in (LOOP_CCW, LOOP_CW):
        if a != b:
            raise DualCurveError(f"loop {a}{arc}{b} needs equal ends")
        return -n if arc == LOOP_CCW else n
    if a == b:
        raise DualCurveError(f"outer arc {a}{arc}{b} bounds a bigon")
    return -((a - b) % n) if arc == CCW else (b - a) % n


def _tokens(n: int, G: np.ndarray, D: np.ndarray) -> list[int]:
    """Integer tokens: numbers as is, arc letters as n + code."""
    out: list[int] = []
    h = len(D)
    for t in range(h):
        out += [int(G[2 * t]), n + _ARC_CODE[INNER], int(G[2 * t + 1]), n + _ARC_CODE[_arc_of(int(D[t]), n)]]
    return out


def _canonical(n: int, G: np.ndarray, D: np.ndarray) -> tuple[int, ...]:
    fwd = np.array(_tokens(n, G, D), dtype=np.int64)
    swap = {n + _ARC_CODE[a]: n + _ARC_CODE[b] for a, b in _SWAP.items()}
    rev = np.array([swap.get(int(v), int(v)) for v in fwd[::-1]], dtype=np.int64)
    rev = np.concatenate((rev[1:], rev[:1]))
    best = None
    for arr in (fwd, rev):
        s = K.least_rotation(arr, 2)
        cand = tuple(int(v) for v in np.concatenate((arr[s:], arr[:s])))
        if best is None or cand < best:
            best = cand
    return best


@dataclasses.dataclass(frozen=True)
class DualCurveWord:
    """Reduced canonical dual curve word. Build with ``from_arrays`` or ``parse_dual_curve``."""

    n: int
    tokens: tuple[int, ...]

    @classmethod
    def from_arrays(cls, n: int, G, D, reduce: bool = True) -> DualCurveWord:
        G = np.asarray(G, dtype=np.int64)
        D = np.asarray(D, dtype=np.int64)
        if reduce:
            G, D = K.dual_reduce(G, D)
        if G.shape[0] < 2:
            raise DualCurveError("curve collapses to nothing")
        return cls(n, _canonical(n, G, D))

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(G, D) with the inner arc G[0] -> G[1] first."""
        n = self.n
        nums = list(self.tokens[0::2])
        arcs = [_CODE_ARC[c - n] for c in self.tokens[1::2]]
        if arcs[0] != INNER:
            nums = nums[1:] + nums[:1]
            arcs = arcs[1:] + arcs[:1]
        m = len(nums)
        D = [_displacement(nums[2 * t + 1], arcs[2 * t + 1], nums[(2 * t + 2) % m], n) for t in range(m // 2)]
        return np.array(nums, dtype=np.int64), np.array(D, dtype=np.int64)

    def letters(self) -> list[str]:
        return [str(t) if k % 2 == 0 else _CODE_ARC[t - self.n] for k, t in enumerate(self.tokens)]

    @property
    def size(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return " ".join(self.letters())

    def pretty(self) -> str:
        return "".join(_PRETTY.get(x, x) for x in self.letters())


_TOK = re.compile(r"\s*(\d+|\(\(|\)\)|\(|\)|v|⌣|↶|↷|↺|↻)")


def parse_dual_curve(text: str, n: int) -> DualCurveWord:
    """
    Parse ``2 ( 4 v`` style text (unicode arrows also accepted) or ``std:{1,2}``.

    >>> str(parse_dual_curve("std:{1,2}", 4))
    '2 ( 4 v'
    """
    text = text.strip()
    if text.startswith("std:"):
        body = text[4:].strip().strip("{}")
        try:
            I = {int(v) for v in body.split(",") if v.strip()}
        except ValueError as exc:
            raise DualCurveError(f"bad puncture set {text!r}") from exc
        return standard_curve(I, n)
    toks: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOK.match(text, pos)
        if m is None:
            raise DualCurveError(f"unexpected input at position {pos}: {text[pos:pos + 6]!r}")
        toks.append(_UNICODE.get(m.group(1), m.group(1)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    if len(toks) < 4 or len(toks) % 2:
        raise DualCurveError("a dual curve word alternates numbers and arcs, length >= 4")
    if not toks[0].isdigit():
        toks = toks[1:] + toks[:1]
    nums, arcs = toks[0::2], toks[1::2]
    if not all(t.isdigit() and 1 <= int(t) <= n for t in nums):
        raise DualCurveError(f"gap numbers must lie in 1..{n}")
    if any(a.isdigit() for a in arcs):
        raise DualCurveError("numbers and arcs must alternate")
    kinds = [a == INNER for a in arcs]
    if any(kinds[k] == kinds[(k + 1) % len(kinds)] for k in range(len(kinds))):
        raise DualCurveError("inner and outer arcs must alternate")
    vals = [int(t) for t in nums]
    if not kinds[0]:
        vals = vals[1:] + vals[:1]
        arcs = arcs[1:] + arcs[:1]
    m = len(vals)
    D = [_displacement(vals[2 * t + 1], arcs[2 * t + 1], vals[(2 * t + 2) % m], n) for t in range(m // 2)]
    if not _inner_planar(vals, n):
        raise DualCurveError("inner arcs cross each other; not a simple curve")
    return DualCurveWord.from_arrays(n, vals, D)


def _inner_planar(G: Sequence[int], n: int) -> bool:
    chords = [tuple(sorted((G[2 * t], G[2 * t + 1]))) for t in range(len(G) // 2)]
    for x in range(len(chords)):
        for y in range(x + 1, len(chords)):
            a, b = chords[x]
            c, d = chords[y]
            if len({a, b, c, d}) == 4 and ((a < c < b < d) or (c < a < d < b)):
                return False
    return True


def is_reduced_arrays(G: np.ndarray, D: np.ndarray) -> bool:
    h = len(D)
    return all(G[2 * t] != G[2 * t + 1] and D[t] != 0 for t in range(h))


def standard_curve(I: Iterable[int], n: int) -> DualCurveWord:
    """The standard curve surrounding exactly the punctures in I."""
    I = set(I)
    if not I <= set(range(1, n + 1)) or not 2 <= len(I) <= n - 1:
        raise DualCurveError(f"puncture set {sorted(I)} is degenerate for n={n}")
    # start right after a puncture outside I, collect clockwise runs
    start = next(v for v in range(1, n + 1) if v not in I)
    runs: list[tuple[int, int]] = []
    cur: list[int] = []
    for k in range(1, n + 1):
        v = (start + k - 1) % n + 1
        if v in I:
            cur.append(v)
        elif cur:
            runs.append((cur[0], cur[-1]))
            cur = []
    if cur:
        runs.append((cur[0], cur[-1]))
    runs.reverse()  # counterclockwise order
    G: list[int] = []
    D: list[int] = []
    for u, v in runs:
        a, b = v, (u - 2) % n + 1
        G += [a, b]
        D.append(-((a - b) % n))
    # G lists outer arcs a -> b; rotate so the inner arc comes first
    G = G[1:] + G[:1]
    D = D[1:] + D[:1]
    return DualCurveWord.from_arrays(n, G, D)


def outer_displacements(w: DualCurveWord) -> np.ndarray:
    return w.arrays()[1]


def is_standard(w: DualCurveWord) -> bool:
    D = outer_displacements(w)
    n = w.n
    return bool(np.all((D < 0) & (D > -n)) or np.all((D > 0) & (D < n)))


def is_round_dual(w: DualCurveWord) -> bool:
    """Standard with a single outer arc: a circle around consecutive punctures."""
    return w.size == 4 and is_standard(w)


def enclosed_punctures_standard(w: DualCurveWord) -> frozenset[int]:
    if not is_standard(w):
        raise NotStandardError(f"{w} is not standard")
    n = w.n
    G, D = w.arrays()
    h = len(D)
    out: set[int] = set()
    for t in range(h):
        a, b = int(G[2 * t + 1]), int(G[(2 * t + 2) % (2 * h)])
        if D[t] > 0:
            a, b = b, a  # read the clockwise arc backwards
        # punctures on the clockwise circle arc from b+1 to a
        k = b % n + 1
        while True:
            out.add(k)
            if k == a:
                break
            k = k % n + 1
    return frozenset(out)


def act_polygon(w: DualCurveWord, P: Polygon | Sequence[int]) -> DualCurveWord:
    verts = np.array(P.vertices if isinstance(P, Polygon) else sorted(P), dtype=np.int64)
    if verts.shape[0] < 2:
        return w
    G, D = w.arrays()
    G, D = K.dual_polygon_raw(G, D, w.n, verts)
    G, D = K.dual_remove_outer_bigons(G, D)
    return DualCurveWord.from_arrays(w.n, G, D)


def prescribed_polygon_image(w: DualCurveWord, P: Polygon | Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Image arrays after only the prescribed outer-bigon removals."""
    verts = np.array(P.vertices if isinstance(P, Polygon) else sorted(P), dtype=np.int64)
    G, D = w.arrays()
    G, D = K.dual_polygon_raw(G, D, w.n, verts)
    return K.dual_remove_outer_bigons(G, D)


def _pack(polys: Sequence[Sequence[int]]) -> tuple[np.ndarray, np.ndarray]:
    flat = [v for p in polys for v in p]
    offs = np.zeros(len(polys) + 1, dtype=np.int64)
    for r, p in enumerate(polys):
        offs[r + 1] = offs[r] + len(p)
    return np.array(flat, dtype=np.int64), offs


def polygons_of(s: Perm) -> list[tuple[int, ...]]:
    return [p.vertices for p in blocks_of(s) if len(p.vertices) > 1]


def act_dual_simple(w: DualCurveWord, s: Perm | Permutation) -> DualCurveWord:
    if isinstance(s, Permutation):
        s = s.zero_based()
    return _act_polys(w, polygons_of(tuple(s)))


def _act_polys(w: DualCurveWord, polys: Sequence[Sequence[int]]) -> DualCurveWord:
    if not polys:
        return w
    verts, offs = _pack(polys)
    G, D = w.arrays()
    G, D = K.act_polygon_sequence(G, D, w.n, verts, offs)
    return DualCurveWord.from_arrays(w.n, G, D)


def act_delta_power(w: DualCurveWord, k: int) -> DualCurveWord:
    """delta^k relabels every gap by -k."""
    if k % w.n == 0:
        return w
    G, D = w.arrays()
    return DualCurveWord.from_arrays(w.n, K.dual_shift(G, w.n, k), D, reduce=False)


def prefix_images_dual(w: DualCurveWord, nf: GarsideNormalForm) -> list[DualCurveWord]:
    """Images under delta^p, delta^p x_1, ..., delta^p x_1...x_r."""
    cur = act_delta_power(w, nf.infimum)
    out = [cur]
    for f in nf.factors:
        cur = act_dual_simple(cur, f)
        out.append(cur)
    return out


def act_dual(w: DualCurveWord, x) -> DualCurveWord:
    nf = x if isinstance(x, GarsideNormalForm) else normal_form(x, Structure.DUAL)
    if nf.structure != Structure.DUAL:
        raise ValueError("act_dual needs a dual normal form")
    return prefix_images_dual(w, nf)[-1]


def act_band_letters(w: DualCurveWord, x) -> DualCurveWord:
    """Act letter by letter, each band letter (or its inverse) as a two-vertex polygon."""
    n = w.n
    cur = w
    st = structure(Structure.DUAL, n)
    for gen, sign in x.letters:
        i, j = gen.transposition()
        if sign > 0:
            cur = _act_polys(cur, [(i, j)])
        else:
            # a^-1 = (a^-1 delta) delta^-1, and a^-1 delta is simple
            comp = st.right_complement(st.atom_perm((i, j)))
            cur = act_delta_power(act_dual_simple(cur, comp), -1)
    return cur


@dataclasses.dataclass(frozen=True, order=True)
class BendingPair:
    pair: tuple[int, int]
    position: int  # index of the inner arc's first gap in the canonical word


def bending_pairs(w: DualCurveWord) -> frozenset[BendingPair]:
    """Inner arcs i v j entered by a clockwise outer arc and left counterclockwise."""
    n = w.n
    G, D = w.arrays()
    h = len(D)
    found: dict[tuple[int, int], int] = {}
    for t in range(h):
        before, after = int(D[(t - 1) % h]), int(D[t])
        if (0 < before < n and -n <= after < 0) or (before == n and -n < after < 0):
            i, j = int(G[2 * t]), int(G[2 * t + 1])
            found.setdefault((min(i, j), max(i, j)), 2 * t)
    return frozenset(BendingPair(p, pos) for p, pos in found.items())
