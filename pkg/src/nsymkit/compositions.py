"""Integer compositions, the subset bijection, refinement and the scalar
statistics that show up as change-of-basis coefficients.

Compositions are plain tuples of positive ints.  ``()`` is the unique
composition of 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Iterator, Optional, Sequence

Composition = tuple  # tuple[int, ...]
Partition = tuple


@dataclass(frozen=True)
class SubsetOfRange:
    """A subset of [n-1] = {1, ..., n-1}."""

    n: int
    members: tuple

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        for m in members:
            if not 1 <= m <= self.n - 1:
                raise ValueError(f"member {m} outside [1, {self.n - 1}]")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def complement(self) -> "SubsetOfRange":
        return SubsetOfRange(self.n, tuple(i for i in range(1, self.n) if i not in self.members))

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}|n=" + str(self.n)


def as_composition(parts: Sequence[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {parts}")
    return parts


# -- bijection with subsets ------------------------------------------------

def descent_mask(alpha: Composition) -> int:
    """set(alpha) as a bitmask: bit j-1 is set iff j is a partial sum."""
    mask = 0
    s = 0
    for a in alpha[:-1]:
        s += a
        mask |= 1 << (s - 1)
    return mask


def from_mask(mask: int, n: int) -> Composition:
    if n == 0:
        return ()
    parts = []
    last = 0
    for j in range(1, n):
        if mask >> (j - 1) & 1:
            parts.append(j - last)
            last = j
    parts.append(n - last)
    return tuple(parts)


def set_of(alpha: Composition) -> SubsetOfRange:
    n = sum(alpha)
    partial = []
    s = 0
    for a in alpha[:-1]:
        s += a
        partial.append(s)
    return SubsetOfRange(max(n, 1), tuple(partial))


def set_inverse(S: SubsetOfRange) -> Composition:
    for m in S.members:
        if not 0 < m < S.n:
            raise ValueError(f"member {m} not in [1, {S.n - 1}]")
    return from_mask(sum(1 << (m - 1) for m in S.members), S.n)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    """All compositions of n, ordered by the binary encoding of set(alpha)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    return tuple(from_mask(mask, n) for mask in range(1 << (n - 1)))


def enumerate_compositions(n: int) -> list:
    return list(compositions(n))


@lru_cache(maxsize=None)
def index_of(n: int) -> dict:
    return {a: i for i, a in enumerate(compositions(n))}


# -- involutions -------------------------------------------------------------

def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    if n == 0:
        return ()
    full = (1 << (n - 1)) - 1
    return from_mask(full ^ descent_mask(alpha), n)


def transpose(alpha: Composition) -> Composition:
    return complement(reverse(alpha))


INVOLUTIONS = {"reverse": reverse, "complement": complement, "transpose": transpose}


def involution(alpha: Composition, kind: str) -> Composition:
    try:
        return INVOLUTIONS[kind](alpha)
    except KeyError:
        raise ValueError(f"unknown involution {kind!r}") from None


# -- refinement ----------------------------------------------------------------

def refines(beta: Composition, alpha: Composition) -> Optional[list]:
    """Blocks beta^(1), ..., beta^(l(alpha)) if beta refines alpha, else None."""
    if sum(beta) != sum(alpha):
        return None
    blocks = []
    it = iter(beta)
    for a in alpha:
        block = []
        s = 0
        while s < a:
            b = next(it, None)
            if b is None:
                return None
            block.append(b)
            s += b
        if s != a:
            return None
        blocks.append(tuple(block))
    return blocks


def is_refinement(beta: Composition, alpha: Composition) -> bool:
    """beta <= alpha, i.e. set(beta) contains set(alpha)."""
    if sum(beta) != sum(alpha):
        return False
    ma = descent_mask(alpha)
    return descent_mask(beta) & ma == ma


@lru_cache(maxsize=None)
def refinements(alpha: Composition) -> tuple:
    """All beta <= alpha, with their blocks, as (beta, blocks) pairs."""
    per_part = [compositions(a) for a in alpha]
    out = []
    for blocks in product(*per_part):
        out.append((tuple(x for b in blocks for x in b), blocks))
    return tuple(out)


@lru_cache(maxsize=None)
def coarsenings(alpha: Composition) -> tuple:
    """All beta >= alpha (set(beta) a subset of set(alpha))."""
    n = sum(alpha)
    if n == 0:
        return ((),)
    mask = descent_mask(alpha)
    out = []
    sub = mask
    while True:
        out.append(from_mask(sub, n))
        if sub == 0:
            break
        sub = (sub - 1) & mask
    return tuple(out)


def mobius(S: SubsetOfRange, T: SubsetOfRange) -> int:
    """Mobius function of the Boolean lattice on the interval [T, S]; 0 off-interval."""
    if S.n != T.n:
        raise ValueError(f"ambient mismatch: n={S.n} vs n={T.n}")
    if not set(T.members) <= set(S.members):
        return 0
    return (-1) ** (len(S) - len(T))


# -- statistics ----------------------------------------------------------------

def multiplicities(alpha: Composition) -> dict:
    m = {}
    for a in alpha:
        m[a] = m.get(a, 0) + 1
    return m


def sort_partition(alpha: Composition) -> Partition:
    return tuple(sorted(alpha, reverse=True))


@lru_cache(maxsize=None)
def z_coefficient(alpha: Composition) -> int:
    return prod(i ** k * factorial(k) for i, k in multiplicities(alpha).items())


def sort_and_z(alpha: Composition):
    return sort_partition(alpha), Fraction(z_coefficient(alpha))


def last_part(alpha):
    return alpha[-1]


def partial_sum_product(alpha) -> int:
    out, s = 1, 0
    for a in alpha:
        s += a
        out *= s
    return out


def special_product(alpha) -> int:
    return factorial(len(alpha)) * prod(alpha)


_STATS = {
    "lp": last_part,
    "prod": prod,
    "piu": partial_sum_product,
    "sp": special_product,
}


def stat(alpha: Composition, kind: str) -> Fraction:
    if not alpha:
        raise ValueError("statistic undefined on the empty composition")
    return Fraction(_STATS[kind](alpha))


_BLOCK_STATS = {
    "lp": last_part,
    "fp": lambda b: b[0],
    "len": len,
    "piu": partial_sum_product,
    "sp": special_product,
    "fb": lambda b: factorial(len(b)),
}


def refined_stat(beta: Composition, alpha: Composition, kind: str) -> Fraction:
    """Product over the blocks of beta <= alpha of a per-block statistic."""
    blocks = refines(beta, alpha)
    if blocks is None:
        raise ValueError(f"{beta} does not refine {alpha}")
    f = _BLOCK_STATS[kind]
    return Fraction(prod(f(b) for b in blocks))


def block_stat(blocks, kind: str) -> int:
    f = _BLOCK_STATS[kind]
    return prod(f(b) for b in blocks)


def binomial_partial_sum(n: int, c: int) -> Fraction:
    if n < 0 or c < 0:
        raise ValueError("n and c must be nonnegative")
    return sum((Fraction(comb(n, k), comb(n + c, k + c)) for k in range(n + 1)), Fraction(0))


# -- partitions (for the commutative side) ------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """Partitions of n in reverse lexicographic order, largest first."""
    def gen(n, maxpart) -> Iterator[tuple]:
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxpart), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest
    return tuple(gen(n, n))


def is_hook(gamma: Composition) -> bool:
    """(1^k, s): every part but the last equals 1."""
    return all(p == 1 for p in gamma[:-1])


# -- text notation -------------------------------------------------------------

def format_composition(alpha) -> str:
    return "[" + ",".join(map(str, alpha)) + "]"


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    if not text.strip():
        return ()
    return as_composition(int(t) for t in text.split(","))
