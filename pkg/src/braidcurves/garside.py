"""
Simple elements, left normal forms, periodicity and dual cyclic sliding.

Both Garside structures store a simple element as the zero-based tuple of the
permutation it induces (position before -> position after). This is faithful:
classical simples are permutation braids, and a dual simple is determined by
its non-crossing partition, whose blocks are exactly the cycles. A product of
simples ``s * t`` has permutation ``then(s, t)``.
"""
from __future__ import annotations

import dataclasses
import enum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .braid import (
    BraidWord,
    Generator,
    Letter,
    Permutation,
    band,
    to_artin,
)

Perm = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """An iterative search ran out of its step budget."""


class Structure(str, enum.Enum):
    CLASSICAL = "classical"
    DUAL = "dual"


def then(a: Perm, b: Perm) -> Perm:
    return tuple(b[x] for x in a)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple(inv)


def transposition(n: int, i: int, j: int) -> Perm:
    """Zero-based transposition of the one-based punctures i and j."""
    p = list(range(n))
    p[i - 1], p[j - 1] = j - 1, i - 1
    return tuple(p)


def cycles(a: Perm) -> list[list[int]]:
    seen = [False] * len(a)
    out = []
    for s in range(len(a)):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = a[x]
        out.append(cyc)
    return out


def inversions(a: Perm) -> int:
    n = len(a)
    return sum(1 for i in range(n) for j in range(i + 1, n) if a[i] > a[j])


def absolute_length(a: Perm) -> int:
    return len(a) - len(cycles(a))


# ------------------------------------------------------------------ polygons


@dataclasses.dataclass(frozen=True, order=True)
class Polygon:
    """Punctures listed clockwise, i.e. ascending from the smallest."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        v = tuple(sorted(self.vertices))
        if len(v) < 2 or len(set(v)) != len(v):
            raise ValueError(f"bad polygon {self.vertices}")
        object.__setattr__(self, "vertices", v)

    def word(self, n: int) -> BraidWord:
        v = self.vertices
        return BraidWord(n, tuple((band(v[k], v[k + 1]), 1) for k in range(len(v) - 1)))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.vertices)) + "}"


def in_cw_arc(v: int, a: int, b: int, n: int) -> bool:
    """Whether puncture v lies on the closed clockwise arc (a, b) of the circle."""
    return (v - a) % n <= (b - a) % n


def polygon_perm(n: int, vertices: Sequence[int]) -> Perm:
    """Each vertex moves to the previous vertex in clockwise order."""
    p = list(range(n))
    v = sorted(vertices)
    for k in range(len(v)):
        p[v[k] - 1] = v[k - 1] - 1
    return tuple(p)


def blocks_of(a: Perm) -> tuple[Polygon, ...]:
    """Non-singleton cycles of a permutation as polygons (one-based)."""
    return tuple(sorted(Polygon(tuple(x + 1 for x in c)) for c in cycles(a) if len(c) > 1))


def perm_from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> Perm:
    p = list(range(n))
    for blk in blocks:
        v = sorted(blk)
        for k in range(len(v)):
            p[v[k] - 1] = v[k - 1] - 1
    return tuple(p)


def is_noncrossing(n: int, blocks: Sequence[Sequence[int]]) -> bool:
    """No a < b < c < d with a, c in one block and b, d in another."""
    label = {}
    for idx, blk in enumerate(blocks):
        for v in blk:
            label[v] = idx
    pts = sorted(label)
    for x in range(len(pts)):
        for y in range(x + 1, len(pts)):
            if label[pts[x]] == label[pts[y]]:
                continue
            for z in range(y + 1, len(pts)):
                if label[pts[z]] != label[pts[x]]:
                    continue
                for w in range(z + 1, len(pts)):
                    if label[pts[w]] == label[pts[y]]:
                        return False
    return True


# ---------------------------------------------------------------- structures


class GarsideStructure:
    """Shared normal-form machinery; subclasses supply the lattice primitives."""

    kind: Structure

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.identity: Perm = tuple(range(n))

    # primitives -----------------------------------------------------------
    garside: Perm

    def atoms(self) -> list[tuple[int, int]]:
        raise NotImplementedError

    def atom_perm(self, atom: tuple[int, int]) -> Perm:
        return transposition(self.n, *atom)

    def is_simple(self, a: Perm) -> bool:
        raise NotImplementedError

    def length(self, a: Perm) -> int:
        raise NotImplementedError

    def atom_is_prefix(self, s: Perm, atom: tuple[int, int]) -> bool:
        raise NotImplementedError

    def atom_extends(self, s: Perm, atom: tuple[int, int]) -> bool:
        """Whether s * atom is still simple."""
        raise NotImplementedError

    def letter_factors(self, gen: Generator) -> list[Perm]:
        """Simple factors whose product is the positive generator."""
        raise NotImplementedError

    def simple_word(self, s: Perm) -> BraidWord:
        raise NotImplementedError

    # derived ---------------------------------------------------------------
    def is_prefix(self, u: Perm, a: Perm) -> bool:
        """u <= a in the prefix order."""
        q = then(inverse(u), a)
        return self.length(q) == self.length(a) - self.length(u) and self.is_simple(q)

    def right_complement(self, s: Perm) -> Perm:
        """The simple t with s * t = Garside element."""
        return then(inverse(s), self.garside)

    def tau(self, s: Perm, k: int = 1) -> Perm:
        """G^k s G^-k."""
        g = self.garside if k < 0 else inverse(self.garside)
        for _ in range(abs(k)):
            s = then(then(inverse(g), s), g)
        return s

    def meet(self, a: Perm, b: Perm) -> Perm:
        m = self.identity
        grown = True
        while grown:
            grown = False
            for at in self.atoms():
                if not self.atom_extends(m, at):
                    continue
                c = then(m, self.atom_perm(at))
                if self.is_prefix(c, a) and self.is_prefix(c, b):
                    m = c
                    grown = True
                    break
        return m

    def is_left_weighted(self, a: Perm, b: Perm) -> bool:
        return not any(
            self.atom_is_prefix(b, at) and self.atom_extends(a, at) for at in self.atoms()
        )

    def left_weight(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        """Move atoms from the front of b to the back of a until left-weighted."""
        moved = True
        while moved:
            moved = False
            for at in self.atoms():
                if self.atom_is_prefix(b, at) and self.atom_extends(a, at):
                    t = self.atom_perm(at)
                    a = then(a, t)
                    b = then(t, b)
                    moved = True
        return a, b

    def normalize(self, power: int, factors: Sequence[Perm]) -> tuple[int, tuple[Perm, ...]]:
        """Normal form of G^power * factors[0] * ... for arbitrary simple factors."""
        out: list[Perm] = []
        for f in factors:
            if f == self.identity:
                continue
            out.append(f)
            i = len(out) - 1
            while i > 0:
                a, b = self.left_weight(out[i - 1], out[i])
                if (a, b) == (out[i - 1], out[i]):
                    break
                out[i - 1], out[i] = a, b
                i -= 1
            out = [x for x in out if x != self.identity]
        changed = True
        while changed:
            changed = False
            for i in range(len(out) - 1):
                a, b = self.left_weight(out[i], out[i + 1])
                if (a, b) != (out[i], out[i + 1]):
                    out[i], out[i + 1] = a, b
                    changed = True
            if self.identity in out:
                out = [x for x in out if x != self.identity]
                changed = True
        lead = 0
        while lead < len(out) and out[lead] == self.garside:
            lead += 1
        # G^p G^lead x = G^(p+lead) x; the remaining factors are unchanged
        return power + lead, tuple(out[lead:])

    def garside_word(self) -> BraidWord:
        return self.simple_word(self.garside)


class ClassicalStructure(GarsideStructure):
    kind = Structure.CLASSICAL

    def __init__(self, n: int):
        super().__init__(n)
        self.garside = tuple(range(n - 1, -1, -1))

    def atoms(self):
        return [(j, j + 1) for j in range(1, self.n)]

    def is_simple(self, a):
        return True

    def length(self, a):
        return inversions(a)

    def atom_is_prefix(self, s, atom):
        j = atom[0]
        return s[j - 1] > s[j]

    def atom_extends(self, s, atom):
        j = atom[0]
        inv = inverse(s)
        return inv[j - 1] < inv[j]

    def letter_factors(self, gen):
        if gen.is_band and gen.j != gen.i + 1:
            raise ValueError("expand band letters with to_artin first")
        return [transposition(self.n, gen.i, gen.i + 1)]

    def sigma_prefixes(self, s: Perm) -> set[int]:
        """Starting set S(s): indices j with sigma_j a prefix."""
        return {j for j in range(1, self.n) if s[j - 1] > s[j]}

    def sigma_suffixes(self, s: Perm) -> set[int]:
        """Finishing set F(s): indices j with sigma_j a suffix."""
        inv = inverse(s)
        return {j for j in range(1, self.n) if inv[j - 1] > inv[j]}

    def simple_word(self, s: Perm) -> BraidWord:
        return BraidWord.from_artin(self.n, reduced_artin_word(s))

    def sigma_factorization(self, s: Perm) -> list[tuple[int, int]]:
        """The unique (p, k_p) with s = prod_{p=2}^n Sigma_{p,k_p}, k_p > 0 only."""
        out = []
        for p in range(2, self.n + 1):
            k = sum(1 for q in range(p - 1) if s[q] > s[p - 1])
            if k:
                out.append((p, k))
        return out


class DualStructure(GarsideStructure):
    kind = Structure.DUAL

    def __init__(self, n: int):
        super().__init__(n)
        self.garside = tuple((i - 1) % n for i in range(n))

    @cached_property
    def _atoms(self):
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]

    def atoms(self):
        return self._atoms

    def is_simple(self, a):
        cyc = cycles(a)
        for c in cyc:
            v = sorted(c)
            for k in range(len(v)):
                if a[v[k]] != v[k - 1]:
                    return False
        return is_noncrossing(self.n, [[x + 1 for x in c] for c in cyc if len(c) > 1])

    def length(self, a):
        return absolute_length(a)

    def atom_is_prefix(self, s, atom):
        i, j = atom[0] - 1, atom[1] - 1
        x = s[i]
        while x != i:
            if x == j:
                return True
            x = s[x]
        return False

    def atom_extends(self, s, atom):
        i, j = atom
        n = self.n
        for c in cycles(s):
            if len(c) < 2:
                continue
            side_a = side_b = False
            for v in c:
                v1 = v + 1
                if in_cw_arc(v1, j % n + 1, i, n):
                    side_a = True
                if in_cw_arc(v1, i % n + 1, j, n):
                    side_b = True
            if side_a and side_b:
                return False
        return True

    def letter_factors(self, gen):
        a, b = gen.transposition()
        return [transposition(self.n, a, b)]

    def polygons(self, s: Perm) -> tuple[Polygon, ...]:
        return blocks_of(s)

    def simple_word(self, s: Perm) -> BraidWord:
        letters: list[Letter] = []
        for poly in blocks_of(s):
            letters.extend(poly.word(self.n).letters)
        return BraidWord(self.n, tuple(letters))

    def meet(self, a, b):
        """Common refinement of the two partitions."""
        la = _block_labels(a)
        lb = _block_labels(b)
        groups: dict[tuple[int, int], list[int]] = {}
        for v in range(self.n):
            groups.setdefault((la[v], lb[v]), []).append(v + 1)
        return perm_from_blocks(self.n, [g for g in groups.values() if len(g) > 1])


def _block_labels(a: Perm) -> list[int]:
    lab = [0] * len(a)
    for idx, c in enumerate(cycles(a)):
        for v in c:
            lab[v] = idx
    return lab


def reduced_artin_word(s: Perm) -> list[int]:
    """A reduced word (one-based indices) whose induced permutation is s."""
    # bubble sort the target positions; each adjacent swap is one sigma
    n = len(s)
    cur = list(range(n))  # cur[pos] = strand at position pos
    target = {strand: s[strand] for strand in range(n)}
    word = []
    changed = True
    while changed:
        changed = False
        for pos in range(n - 1):
            if target[cur[pos]] > target[cur[pos + 1]]:
                cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
                word.append(pos + 1)
                changed = True
    return word


@lru_cache(maxsize=None)
def structure(kind: Structure | str, n: int) -> GarsideStructure:
    kind = Structure(kind)
    return ClassicalStructure(n) if kind is Structure.CLASSICAL else DualStructure(n)


# -------------------------------------------------------------- normal forms


@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    structure: Structure
    strands: int
    infimum: int
    factors: tuple[Perm, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def garside(self) -> GarsideStructure:
        return structure(self.structure, self.strands)

    def word(self) -> BraidWord:
        st = self.garside
        w = st.garside_word() ** self.infimum
        for f in self.factors:
            w = w * st.simple_word(f)
        return w

    def factor_blocks(self) -> list[tuple[Polygon, ...]]:
        return [blocks_of(f) for f in self.factors]

    def permutations(self) -> list[Permutation]:
        return [Permutation.from_zero_based(f) for f in self.factors]

    def prefixes(self) -> Iterator[GarsideNormalForm]:
        """G^p x_1 ... x_m for m = 0..r."""
        for m in range(len(self.factors) + 1):
            yield GarsideNormalForm(self.structure, self.strands, self.infimum, self.factors[:m])

    def render(self) -> str:
        if self.structure is Structure.CLASSICAL:
            body = " ".join(str(Permutation.from_zero_based(f)) for f in self.factors)
        else:
            body = " ".join(
                "[" + ",".join(str(b) for b in blocks_of(f)) + "]" for f in self.factors
            )
        return f"p={self.infimum};" + (f" {body}" if body else "")


def _decompose(st: GarsideStructure, x: BraidWord) -> tuple[int, list[Perm]]:
    """Write x as G^p * s_1 ... s_k with every s_i simple (not normalized)."""
    p = 0
    facs: list[Perm] = []
    for gen, sign in x.letters:
        parts = st.letter_factors(gen)
        if sign > 0:
            facs.extend(parts)
            continue
        for s in reversed(parts):
            # L * s^-1 = L * d(s) * G^-1 = G^-1 * tau(L * d(s))
            facs.append(st.right_complement(s))
            facs = [st.tau(f, 1) for f in facs]
            p -= 1
    return p, facs


def normal_form(x: BraidWord, kind: Structure | str = Structure.CLASSICAL) -> GarsideNormalForm:
    st = structure(kind, x.strands)
    if st.kind is Structure.CLASSICAL:
        x = to_artin(x)
    p, facs = _decompose(st, x)
    power, out = st.normalize(p, facs)
    return GarsideNormalForm(st.kind, x.strands, power, out)


def equals(x: BraidWord, y: BraidWord, kind: Structure | str = Structure.DUAL) -> bool:
    if x.strands != y.strands:
        from .braid import StrandMismatchError

        raise StrandMismatchError(f"{x.strands} vs {y.strands} strands")
    return normal_form(x, kind) == normal_form(y, kind)


def multiply(x: BraidWord, y: BraidWord) -> BraidWord:
    return x * y


def invert(x: BraidWord) -> BraidWord:
    return x.inverse()


def is_periodic(x: BraidWord) -> bool:
    """x is periodic iff x^n or x^(n-1) is a power of Delta^2."""
    n = x.strands
    for k in (n, n - 1):
        nf = normal_form(x ** k, Structure.CLASSICAL)
        if not nf.factors and nf.infimum % 2 == 0:
            return True
    return False


def initial_factor(nf: GarsideNormalForm) -> Perm:
    """iota(x) = G^p x_1 G^-p; the identity when x is a Garside power."""
    st = nf.garside
    if not nf.factors:
        return st.identity
    return st.tau(nf.factors[0], nf.infimum)


def preferred_prefix(x: BraidWord) -> Perm:
    """iota(x) meet iota(x^-1) in the dual structure."""
    st = structure(Structure.DUAL, x.strands)
    a = initial_factor(normal_form(x, Structure.DUAL))
    b = initial_factor(normal_form(x.inverse(), Structure.DUAL))
    return st.meet(a, b)


def cyclic_sliding_dual(x: BraidWord) -> BraidWord:
    """Conjugate x by its preferred prefix: p^-1 x p."""
    nf = normal_form(x, Structure.DUAL)
    if not nf.factors:
        return x
    st = nf.garside
    p = st.simple_word(preferred_prefix(x))
    return p.inverse() * x * p


def slide_normal_form(nf: GarsideNormalForm) -> GarsideNormalForm:
    return normal_form(cyclic_sliding_dual(nf.word()), Structure.DUAL)


def sliding_orbit(x: BraidWord, max_steps: int = 10_000) -> tuple[list[GarsideNormalForm], int]:
    """
    Iterate dual cyclic sliding until an element recurs.

    Returns the sliding circuit (in order) and the number of steps taken before
    entering it.
    """
    if max_steps <= 0:
        raise ValueError("max_steps must be positive")
    seen: dict[GarsideNormalForm, int] = {}
    path: list[GarsideNormalForm] = []
    cur = normal_form(x, Structure.DUAL)
    for step in range(max_steps + 1):
        if cur in seen:
            start = seen[cur]
            return path[start:], start
        seen[cur] = step
        path.append(cur)
        cur = slide_normal_form(cur)
    raise BudgetExceeded(f"no sliding circuit within {max_steps} steps")


def conjugates_by_atoms(nf: GarsideNormalForm) -> Iterator[GarsideNormalForm]:
    """a^-1 x a for every dual atom a (used for bounded exhaustive closures)."""
    x = nf.word()
    n = nf.strands
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a = BraidWord(n, ((band(i, j), 1),))
            yield normal_form(a.inverse() * x * a, Structure.DUAL)


def sliding_circuits_bfs(x: BraidWord, max_size: int = 2000, max_steps: int = 10_000) -> list[GarsideNormalForm]:
    """
    Every sliding-circuit element reachable from x by atom conjugation followed
    by sliding, explored breadth first. Exhaustive only within ``max_size``.
    """
    from collections import deque

    circuit, _ = sliding_orbit(x, max_steps)
    found: set[GarsideNormalForm] = set(circuit)
    queue = deque(circuit)
    while queue:
        y = queue.popleft()
        for z in conjugates_by_atoms(y):
            if z in found:
                continue
            circ, _ = sliding_orbit(z.word(), max_steps)
            for c in circ:
                if c not in found:
                    found.add(c)
                    queue.append(c)
                    if len(found) > max_size:
                        raise BudgetExceeded(f"closure exceeds {max_size} elements")
    return sorted(found, key=lambda g: (g.infimum, g.factors))
