"""Truncated polynomial realizations in m noncommuting or commuting variables.

This is the ground truth every abstract formula is checked against: basis
elements are built here from their defining monomial sums, never from the
change-of-basis formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from collections import Counter
from math import comb, factorial

from .compositions import compositions, descent_mask, from_mask, partitions, sort_partition
from .linalg import SingularMatrixError, solve

DEFAULT_CAP = 8
# Refuse to enumerate more words than this when a generator's support is everything.
MAX_WORDS = 5_000_000


class RealizationError(ValueError):
    pass


_DES_MEMO = {}
_DES_MEMO_LIMIT = 1 << 21


def des_mask(word) -> int:
    mask = _DES_MEMO.get(word)
    if mask is None:
        mask = 0
        for j in range(len(word) - 1):
            if word[j] > word[j + 1]:
                mask |= 1 << j
        if len(_DES_MEMO) >= _DES_MEMO_LIMIT:
            _DES_MEMO.clear()
        _DES_MEMO[word] = mask
    return mask


def des(word) -> set:
    return {j + 1 for j in range(len(word) - 1) if word[j] > word[j + 1]}


def _clean(terms):
    return {k: v for k, v in terms.items() if v != 0}


def _exact(c):
    """Exact rational; integral values are kept as int, which is much faster to multiply."""
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True, eq=False)
class NCPoly:
    """Polynomial in noncommuting x_1..x_m; keys are words (tuples of indices)."""

    m: int
    terms: dict = field(default_factory=dict)
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.m < 1:
            raise RealizationError("need at least one variable")
        object.__setattr__(self, "terms", _clean({tuple(w): _exact(c) for w, c in self.terms.items()}))
        for w in self.terms:
            if any(not 1 <= i <= self.m for i in w):
                raise RealizationError(f"word {w} uses an index outside 1..{self.m}")
            if len(w) > self.cap:
                raise RealizationError(f"word {w} exceeds degree cap {self.cap}")

    @classmethod
    def one(cls, m, cap=DEFAULT_CAP):
        return cls(m, {(): 1}, cap)

    @classmethod
    def _trusted(cls, m, terms, cap):
        # skips validation; terms must already be clean exact coefficients over valid words
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "cap", cap)
        return obj

    def _check(self, other):
        if self.m != other.m:
            raise RealizationError(f"variable count mismatch: {self.m} vs {other.m}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(self.m, out, max(self.cap, other.cap))

    def __neg__(self):
        return NCPoly(self.m, {w: -c for w, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return NCPoly(self.m, {w: c * v for w, v in self.terms.items()}, self.cap)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        return nc_mul(self, other)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __getitem__(self, word):
        return self.terms.get(tuple(word), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def to_json(self):
        return [{"word": list(w), "coeff": _fmt(c)} for w, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        return _signed_sum(("".join(f"x{i}" for i in w) or "1", c) for w, c in self.sorted_terms())


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _signed_sum(pairs) -> str:
    """'x1x2 - 1/2 x2x1 + ...' from (monomial, coefficient) pairs."""
    out = []
    for mono, c in pairs:
        mag = abs(c)
        body = mono if mag == 1 and mono != "1" else f"{_fmt(mag)} {mono}" if mono != "1" else _fmt(mag)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def nc_mul(p: NCPoly, q: NCPoly) -> NCPoly:
    p._check(q)
    cap = max(p.cap, q.cap)
    if p.terms and q.terms:
        top = max(map(len, p.terms)) + max(map(len, q.terms))
        if top > cap:
            raise RealizationError(f"product degree {top} exceeds cap {cap}")
    if len(set(map(len, p.terms))) <= 1 and len(set(map(len, q.terms))) <= 1:
        # homogeneous factors: every concatenation u + v is distinct and nonzero
        qt = list(q.terms.items())
        if all(type(c) is int for c in p.terms.values()) and all(type(c) is int for _, c in qt):
            out = {u + v: a * b for u, a in p.terms.items() for v, b in qt}
        else:
            # rational coefficients take few distinct values; multiply each pair of objects once
            memo, out = {}, {}
            for u, a in p.terms.items():
                ia = id(a)
                for v, b in qt:
                    key = (ia, id(b))
                    c = memo.get(key)
                    if c is None:
                        c = memo[key] = a * b
                    out[u + v] = c
        return NCPoly._trusted(p.m, out, cap)
    out = {}
    get = out.get
    for u, a in p.terms.items():
        for v, b in q.terms.items():
            w = u + v
            out[w] = get(w, 0) + a * b
    return NCPoly._trusted(p.m, _clean(out), cap)


def nc_linear(combination, m, cap=DEFAULT_CAP) -> NCPoly:
    """Sum of c * p over (c, p) pairs."""
    out = {}
    for c, p in combination:
        if p.m != m:
            raise RealizationError(f"variable count mismatch: {p.m} vs {m}")
        for w, v in p.terms.items():
            out[w] = out.get(w, 0) + Fraction(c) * v
    return NCPoly(m, out, cap)


# -- word generators -----------------------------------------------------------

def words_with_descent_mask(mask: int, n: int, m: int):
    """All words of length n over [m] whose descent set is exactly ``mask``."""
    if n == 0:
        yield ()
        return
    word = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(word)
            return
        prev = word[pos - 1]
        if mask >> (pos - 1) & 1:
            rng = range(1, prev)
        else:
            rng = range(prev, m + 1)
        for i in rng:
            word[pos] = i
            yield from rec(pos + 1)

    for first in range(1, m + 1):
        word[0] = first
        yield from rec(1)


@lru_cache(maxsize=None)
def count_words_with_descent_mask(mask: int, n: int, m: int) -> int:
    if n == 0:
        return 1
    counts = [1] * (m + 1)
    counts[0] = 0
    for pos in range(1, n):
        new = [0] * (m + 1)
        if mask >> (pos - 1) & 1:
            run = 0
            for i in range(m, 0, -1):
                new[i] = run
                run += counts[i]
        else:
            run = 0
            for i in range(1, m + 1):
                run += counts[i]
                new[i] = run
        counts = new
    return sum(counts)


def _psi_words(n, m):
    """Words in A_n with their k: strictly decreasing to position k, then weakly increasing."""
    for k in range(1, n + 1):
        for dec in itertools.combinations(range(m, 0, -1), k):
            # dec is strictly decreasing
            if k == n:
                yield dec, k
                continue
            for rest in itertools.combinations_with_replacement(range(dec[-1], m + 1), n - k):
                yield dec + rest, k


GENERATORS = ("ribbon", "h", "e", "psi", "phi")


def realize_nc(gen, m: int, cap: int = DEFAULT_CAP) -> NCPoly:
    """Realize a generator: ('ribbon', alpha), ('h', n), ('e', n), ('psi', n) or ('phi', n)."""
    kind, arg = gen
    if m < 1:
        raise RealizationError("need at least one variable")
    return _realize_nc(kind, tuple(arg) if kind == "ribbon" else int(arg), m, cap)


@lru_cache(maxsize=None)
def _realize_nc(kind, arg, m, cap):
    n = sum(arg) if kind == "ribbon" else arg
    if n > cap:
        raise RealizationError(f"degree {n} exceeds cap {cap}")
    if n == 0:
        return NCPoly.one(m, cap)
    one = Fraction(1)
    if kind == "ribbon":
        terms = {w: one for w in words_with_descent_mask(descent_mask(arg), n, m)}
    elif kind == "h":
        terms = {w: one for w in itertools.combinations_with_replacement(range(1, m + 1), n)}
    elif kind == "e":
        terms = {w: one for w in itertools.combinations(range(m, 0, -1), n)}
    elif kind == "psi":
        terms = {w: Fraction((-1) ** (k - 1)) for w, k in _psi_words(n, m)}
    elif kind == "phi":
        if m ** n > MAX_WORDS:
            raise RealizationError(f"phi_{n} with m={m} needs {m ** n} words")
        coeff = [Fraction((-1) ** d, comb(n - 1, d)) for d in range(n)]
        terms = {w: coeff[bin(des_mask(w)).count("1")]
                 for w in itertools.product(range(1, m + 1), repeat=n)}
    else:
        raise RealizationError(f"unknown generator {kind!r}")
    poly = NCPoly(m, terms, cap)
    # share one object per distinct coefficient so products can memoize by identity
    canon = {}
    return NCPoly._trusted(m, {w: canon.setdefault(c, c) for w, c in poly.terms.items()}, cap)


def realize_basis(basis: str, alpha, m: int, cap: int = DEFAULT_CAP) -> NCPoly:
    """Realize r_alpha directly, or a multiplicative basis element as a product of generators."""
    return _realize_basis(basis, tuple(alpha), m, cap)


@lru_cache(maxsize=256)
def _realize_basis(basis, alpha, m, cap):
    if basis in ("R", "ribbon", "r"):
        return realize_nc(("ribbon", alpha), m, cap)
    kind = {"H": "h", "E": "e", "Psi": "psi", "Phi": "phi"}[basis]
    if not alpha:
        return NCPoly.one(m, cap)
    # prefix products are shared across compositions with a common start
    return nc_mul(_realize_basis(basis, alpha[:-1], m, cap), realize_nc((kind, alpha[-1]), m, cap))


# -- NSym membership -------------------------------------------------------------

@dataclass
class MembershipResult:
    member: bool
    witness: tuple = None  # (word I, word J) with equal descent sets, different coefficients

    def __bool__(self):
        return self.member


# Up to this many words, all words of a degree are pre-grouped by descent set.
_TABLE_LIMIT = 1 << 20


@lru_cache(maxsize=8)
def _word_table(n, m):
    if n == 0:
        return ((0, ((),)),)
    return tuple((mask, tuple(words_with_descent_mask(mask, n, m))) for mask in range(1 << (n - 1)))


def _check_args(p, n, m):
    if m < n:
        raise RealizationError(f"membership test unsound with m={m} < n={n}")
    if p.m != m:
        raise RealizationError(f"polynomial has m={p.m}, expected {m}")


def _descent_classes(p: NCPoly, n: int, m: int):
    classes = {}
    for w, c in p.terms.items():
        if len(w) != n:
            raise RealizationError(f"term {w} is not of degree {n}")
        classes.setdefault(des_mask(w), []).append((w, c))
    return classes


def _membership(classes, n, m):
    coords = {}
    for mask in sorted(classes):
        members = classes[mask]
        c0 = members[0][1]
        if any(c != c0 for _, c in members):
            members = sorted(members)
            w0, c0 = members[0]
            w = next(w for w, c in members if c != c0)
            return MembershipResult(False, (w0, w)), None
        if len(members) != count_words_with_descent_mask(mask, n, m):
            support = {w for w, _ in members}
            w0 = min(support)
            missing = next(w for w in words_with_descent_mask(mask, n, m) if w not in support)
            return MembershipResult(False, tuple(sorted((w0, missing)))), None
        coords[mask] = c0
    return MembershipResult(True), coords


def _membership_table(p, n, m):
    # one set() per descent class, over every word of the class
    stray = next((w for w in p.terms if len(w) != n), None)
    if stray is not None:
        raise RealizationError(f"term {stray} is not of degree {n}")
    get = p.terms.get
    coords = {}
    for mask, words in _word_table(n, m):
        vals = list(map(get, words))
        c0 = vals[0]
        if vals.count(c0) == len(vals):
            if c0 is not None:
                coords[mask] = c0
            continue
        return MembershipResult(False, (words[0], next(w for w in words if get(w) != c0))), None
    return MembershipResult(True), coords


def _classify(p, n, m):
    _check_args(p, n, m)
    if m ** n <= _TABLE_LIMIT:
        return _membership_table(p, n, m)
    return _membership(_descent_classes(p, n, m), n, m)


def is_nsym(p: NCPoly, n: int, m: int) -> MembershipResult:
    """Whether the coefficients of the degree-n polynomial p depend only on des(word)."""
    return _classify(p, n, m)[0]


def ribbon_coordinates(p: NCPoly, n: int, m: int) -> dict:
    """Coefficients of p in the ribbon basis; p must lie in NSym (m >= n)."""
    res, coords = _classify(p, n, m)
    if not res:
        raise RealizationError(f"not in NSym: words {res.witness[0]} and {res.witness[1]} disagree")
    return {from_mask(mask, n): c for mask, c in coords.items()}


# -- commutative side --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CPoly:
    """Polynomial in commuting x_1..x_m; keys are exponent vectors of length m."""

    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean({tuple(e): _exact(c) for e, c in self.terms.items()}))
        for e in self.terms:
            if len(e) != self.m:
                raise RealizationError(f"exponent vector {e} has wrong length")

    @classmethod
    def one(cls, m):
        return cls(m, {(0,) * m: Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CPoly(self.m, out)

    def __neg__(self):
        return CPoly(self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return CPoly(self.m, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CPoly):
            return self.scale(other)
        if other.m != self.m:
            raise RealizationError("variable count mismatch")
        out = {}
        for e, a in self.terms.items():
            for f, b in other.terms.items():
                g = tuple(x + y for x, y in zip(e, f))
                out[g] = out.get(g, 0) + a * b
        return CPoly(self.m, out)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, CPoly) and self.m == other.m and self.terms == other.terms

    def __getitem__(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))

    def to_json(self):
        return [{"exponents": list(e), "coeff": _fmt(c)} for e, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        return _signed_sum(
            ("".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k) or "1", c)
            for e, c in self.sorted_terms())


def chi(p: NCPoly) -> CPoly:
    out = {}
    for w, c in p.terms.items():
        e = [0] * p.m
        for i in w:
            e[i - 1] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + c
    return CPoly(p.m, out)


def _word_to_exps(word, m):
    e = [0] * m
    for i in word:
        e[i - 1] += 1
    return tuple(e)


def realize_c(gen, m: int) -> CPoly:
    """('e', n), ('h', n), ('p', n), ('m', lam), ('f', lam), ('M', alpha) or ('F', alpha)."""
    kind, arg = gen
    if m < 1:
        raise RealizationError("need at least one variable")
    return _realize_c(kind, tuple(arg) if isinstance(arg, (tuple, list)) else int(arg), m)


@lru_cache(maxsize=None)
def _realize_c(kind, arg, m):
    one = Fraction(1)
    if kind in ("e", "h", "p") and arg == 0:
        return CPoly.one(m)
    if kind == "e":
        return CPoly(m, {_word_to_exps(w, m): one for w in itertools.combinations(range(1, m + 1), arg)})
    if kind == "h":
        return CPoly(m, {_word_to_exps(w, m): one
                         for w in itertools.combinations_with_replacement(range(1, m + 1), arg)})
    if kind == "p":
        return CPoly(m, {tuple(arg if j == i else 0 for j in range(m)): one for i in range(m)})
    if kind == "m":
        lam = sort_partition(arg)
        if len(lam) > m:
            return CPoly(m, {})
        padded = lam + (0,) * (m - len(lam))
        return CPoly(m, {e: one for e in set(itertools.permutations(padded))})
    if kind == "M":
        alpha = arg
        terms = {}
        for pos in itertools.combinations(range(m), len(alpha)):
            e = [0] * m
            for p, a in zip(pos, alpha):
                e[p] = a
            terms[tuple(e)] = one
        return CPoly(m, terms)
    if kind == "F":
        alpha = arg
        n = sum(alpha)
        strict = {j for j in range(1, n) if descent_mask(alpha) >> (j - 1) & 1}
        terms = {}
        for w in itertools.combinations_with_replacement(range(1, m + 1), n):
            if all(w[j - 1] < w[j] for j in strict):
                e = _word_to_exps(w, m)
                terms[e] = terms.get(e, 0) + one
        return CPoly(m, terms)
    if kind == "f":
        return omega_sym(_realize_c("m", arg, m))
    raise RealizationError(f"unknown commutative generator {kind!r}")


@lru_cache(maxsize=None)
def realize_family(family: str, lam: tuple, m: int) -> CPoly:
    """Multiplicative family element b_lam = b_{lam_1} b_{lam_2} ... for b in e, h, p."""
    out = CPoly.one(m)
    for part in lam:
        out = out * _realize_c(family, part, m)
    return out


class NotSymmetricError(ValueError):
    pass


def _orbit_size(e) -> int:
    out = factorial(len(e))
    for k in Counter(e).values():
        out //= factorial(k)
    return out


def check_symmetric(target: CPoly):
    """Raise unless every coefficient is constant on full S_m orbits of exponent vectors."""
    orbits = {}
    for e, c in target.terms.items():
        key = tuple(sorted(e, reverse=True))
        first = orbits.setdefault(key, (e, c, []))
        if first[1] != c:
            raise NotSymmetricError(f"coefficient of {e} differs from that of {first[0]}")
        first[2].append(e)
    for key, (e, c, members) in orbits.items():
        if len(members) != _orbit_size(key):
            missing = next(f for f in itertools.permutations(key) if f not in target.terms)
            raise NotSymmetricError(f"coefficient of {missing} differs from that of {e}")


def _monomial_coords(poly: CPoly, n: int):
    m = poly.m
    return [poly[lam + (0,) * (m - len(lam))] for lam in partitions(n)]


def degree_of(target: CPoly) -> int:
    degrees = {sum(e) for e in target.terms}
    if len(degrees) > 1:
        raise ValueError("polynomial is not homogeneous")
    return degrees.pop() if degrees else 0


def sym_expand(target: CPoly, family: str, n: int = None) -> dict:
    """Coefficients c with target = sum_lam c_lam b_lam, b in {e, h, p, m, f}."""
    m = target.m
    n = degree_of(target) if n is None else n
    if m < n:
        raise RealizationError(f"Lambda expansion unsound with m={m} < n={n}")
    check_symmetric(target)
    lams = partitions(n)
    if family == "m":
        coords = _monomial_coords(target, n)
        return {lam: c for lam, c in zip(lams, coords) if c}
    if family == "f":
        return sym_expand(omega_sym(target, n), "m", n)
    if family not in ("e", "h", "p"):
        raise ValueError(f"unknown family {family!r}")
    cols = [_monomial_coords(realize_family(family, lam, m), n) for lam in lams]
    a = [[cols[j][i] for j in range(len(lams))] for i in range(len(lams))]
    t = [[x] for x in _monomial_coords(target, n)]
    try:
        x = solve(a, t)
    except SingularMatrixError as exc:
        raise AssertionError(f"family {family} singular at degree {n}, m={m}") from exc
    return {lam: row[0] for lam, row in zip(lams, x) if row[0]}


def omega_sym(target: CPoly, n: int = None) -> CPoly:
    """omega on Lambda: expand in e, then read the same coefficients on h."""
    m = target.m
    coeffs = sym_expand(target, "e", n)
    out = CPoly(m, {})
    for lam, c in coeffs.items():
        out = out + realize_family("h", lam, m).scale(c)
    return out
