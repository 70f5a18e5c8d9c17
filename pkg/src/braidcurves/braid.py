"""
Braid words over Artin generators sigma_i and band generators a_{i,j}.

Conventions used throughout the package:

* sigma_i is the counterclockwise half twist exchanging punctures i and i+1;
  a_{i,j} the counterclockwise half twist along the chord from i to j when the
  punctures sit clockwise on a circle. sigma_i = a_{i,i+1}.
* Words are read left to right and the first letter acts first. The induced
  permutation follows the same order: ``permutation_of(x * y)`` is
  ``permutation_of(x)`` followed by ``permutation_of(y)``. A permutation maps
  the position of a puncture before the braid to its position after.
* delta = a_{1,2} a_{2,3} ... a_{n-1,n}. It moves every puncture one step
  counterclockwise, so its permutation is k -> k-1 (and 1 -> n).
"""
from __future__ import annotations

import dataclasses
import re
from typing import Iterable, Sequence


class BraidSyntaxError(ValueError):
    """Malformed braid text. ``position`` is the offending character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class StrandMismatchError(ValueError):
    pass


@dataclasses.dataclass(frozen=True, order=True)
class Generator:
    """artin(i) when ``j == 0``, otherwise band(i, j) stored with i < j."""

    i: int
    j: int = 0

    @property
    def is_band(self) -> bool:
        return self.j != 0

    def transposition(self) -> tuple[int, int]:
        return (self.i, self.j) if self.is_band else (self.i, self.i + 1)

    def __str__(self) -> str:
        return f"a({self.i},{self.j})" if self.is_band else f"s{self.i}"


def artin(i: int) -> Generator:
    return Generator(i)


def band(i: int, j: int) -> Generator:
    if i == j:
        raise ValueError("band generator needs two distinct punctures")
    return Generator(min(i, j), max(i, j))


Letter = tuple[Generator, int]


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        n = self.strands
        if n < 2:
            raise ValueError("a braid needs at least two strands")
        for gen, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"bad sign {sign}")
            if gen.is_band:
                if not 1 <= gen.i < gen.j <= n:
                    raise IndexError(f"{gen} out of range for n={n}")
            elif not 1 <= gen.i <= n - 1:
                raise IndexError(f"{gen} out of range for n={n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.strands != self.strands:
            raise StrandMismatchError(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((g, -s) for g, s in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.letters)

    def __str__(self) -> str:
        return " ".join(f"{g}^-1" if s < 0 else str(g) for g, s in self.letters)

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def from_artin(cls, n: int, indices: Iterable[int]) -> BraidWord:
        """Word from signed Artin indices: ``[1, -2]`` is s1 s2^-1."""
        return cls(n, tuple((artin(abs(i)), 1 if i > 0 else -1) for i in indices))


def delta_word(n: int) -> BraidWord:
    return BraidWord(n, tuple((band(i, i + 1), 1) for i in range(1, n)))


def half_twist_word(n: int) -> BraidWord:
    """A positive Artin word for the half twist Delta."""
    idx = [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord.from_artin(n, idx)


def band_in_artin(n: int, i: int, j: int) -> BraidWord:
    """
    a_{i,j} (i < j) as sigma_{j-1}^-1 ... sigma_{i+1}^-1 sigma_i sigma_{i+1} ... sigma_{j-1}.

    This is the expansion forced by the dual relations a_{i,j} a_{j,k} = a_{j,k} a_{k,i}
    for i < j < k, together with sigma_i = a_{i,i+1}.
    """
    i, j = min(i, j), max(i, j)
    mid = list(range(i + 1, j))
    return BraidWord.from_artin(n, [-m for m in reversed(mid)] + [i] + mid)


def to_artin(x: BraidWord) -> BraidWord:
    """Expand band letters into Artin letters."""
    out: list[Letter] = []
    for gen, sign in x.letters:
        if not gen.is_band or gen.j == gen.i + 1:
            out.append((artin(gen.i), sign))
            continue
        w = band_in_artin(x.strands, gen.i, gen.j)
        out.extend(w.letters if sign > 0 else w.inverse().letters)
    return BraidWord(x.strands, tuple(out))


_TOKEN = re.compile(
    r"""\s*(?:
        s(?P<s>\d+)
      | a\(\s*(?P<ai>\d+)\s*,\s*(?P<aj>\d+)\s*\)
      | (?P<D>D)
      | (?P<d>d)
    )(?:\^(?P<exp>-?\d+))?""",
    re.VERBOSE,
)


def parse_braid(text: str, n: int) -> BraidWord:
    """
    Parse whitespace separated tokens ``sK``, ``a(I,J)``, ``D`` (half twist)
    and ``d`` (delta), each optionally followed by ``^k``.

    >>> str(parse_braid("s1 s3", 4))
    's1 s3'
    >>> str(parse_braid("s2^-1 a(3,1)", 3))
    's2^-1 a(1,3)'
    """
    letters: list[Letter] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise BraidSyntaxError(f"unexpected input {text[start:start + 8]!r}", start)
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
        if m.group("s") is not None:
            i = int(m.group("s"))
            if not 1 <= i <= n - 1:
                raise IndexError(f"s{i} out of range for n={n}")
            base = BraidWord(n, ((artin(i), 1),))
        elif m.group("ai") is not None:
            i, j = int(m.group("ai")), int(m.group("aj"))
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise IndexError(f"a({i},{j}) out of range for n={n}")
            base = BraidWord(n, ((band(i, j), 1),))
        elif m.group("D") is not None:
            base = half_twist_word(n)
        else:
            base = delta_word(n)
        letters.extend((base ** exp).letters)
        pos = m.end()
        if pos < len(text) and not text[pos].isspace():
            raise BraidSyntaxError(f"unexpected character {text[pos]!r}", pos)
    return BraidWord(n, tuple(letters))


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply self first, then other."""
        return Permutation(tuple(other(self(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for k, v in enumerate(self.images, 1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def image_set(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(self(k) for k in s)

    def zero_based(self) -> tuple[int, ...]:
        return tuple(v - 1 for v in self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_zero_based(cls, perm: Sequence[int]) -> Permutation:
        return cls(tuple(v + 1 for v in perm))

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.images)) + "]"


def permutation_of(x: BraidWord) -> Permutation:
    """
    Permutation induced by the word, letters applied in order.

    >>> str(permutation_of(parse_braid("s1 s2", 3)))
    '[3 1 2]'
    """
    pos = list(range(1, x.strands + 1))
    where = {k: k for k in pos}  # puncture label -> current position
    at = {k: k for k in pos}     # position -> puncture label
    for gen, _ in x.letters:
        a, b = gen.transposition()
        pa, pb = at[a], at[b]
        at[a], at[b] = pb, pa
        where[pa], where[pb] = b, a
    return Permutation(tuple(where[k] for k in pos))
