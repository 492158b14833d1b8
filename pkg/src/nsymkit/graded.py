"""Homogeneous elements indexed by compositions, and their text notation.

Notation: ``basis[parts]`` terms joined by + and -, with optional rational
coefficients, e.g. ``r[2,1] + 3/2 r[1,1,1]``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm

from .compositions import compositions, format_composition, index_of


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


def fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def common_denominator(coeffs: dict):
    """Return (D, {key: int}) with coeffs[key] == nums[key] / D."""
    d = lcm(*(c.denominator for c in coeffs.values())) if coeffs else 1
    return d, {k: c.numerator * (d // c.denominator) for k, c in coeffs.items()}


def linear_combination(pairs) -> dict:
    """Sum of scale * column over pairs ((D, nums), scale), in integer arithmetic.

    Coefficients come back as int when integral, else Fraction.
    """
    pairs = [(col, Fraction(s)) for col, s in pairs]
    big = lcm(*(d * s.denominator for (d, _), s in pairs)) if pairs else 1
    out = {}
    get = out.get
    for (d, nums), s in pairs:
        f = s.numerator * (big // (d * s.denominator))
        for k, v in nums.items():
            out[k] = get(k, 0) + f * v
    res = {}
    for k, v in out.items():
        if v:
            q, r = divmod(v, big)
            res[k] = q if not r else Fraction(v, big)
    return res


class GradedElement:
    """Base for NSym and QSym elements: a basis tag plus composition -> coefficient."""

    BASES: tuple = ()
    TAGS: dict = {}  # basis -> printed tag
    space = ""

    __slots__ = ("basis", "coeffs", "degree")

    def __init__(self, basis, coeffs=None, degree=None):
        basis = self.normalize_basis(basis)
        terms = {}
        for alpha, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                alpha = tuple(alpha)
                terms[alpha] = terms.get(alpha, 0) + c
        terms = {a: c for a, c in terms.items() if c}
        sizes = {sum(a) for a in terms}
        if len(sizes) > 1:
            raise ValueError(f"inhomogeneous element: degrees {sorted(sizes)}")
        if sizes:
            d = sizes.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
            degree = d
        self.basis = basis
        self.coeffs = terms
        self.degree = 0 if degree is None else degree

    @classmethod
    def _trusted(cls, basis, terms, degree):
        # internal results: basis already normalized, terms nonzero and homogeneous
        obj = object.__new__(cls)
        obj.basis, obj.coeffs, obj.degree = basis, terms, degree
        return obj

    @classmethod
    def normalize_basis(cls, basis):
        if basis in cls.BASES:
            return basis
        for b, tag in cls.TAGS.items():
            if basis == tag or (isinstance(basis, str) and basis.lower() == b.lower()):
                return b
        raise ValueError(f"unknown {cls.space} basis {basis!r}")

    @classmethod
    def basis_vector(cls, basis, alpha):
        return cls(basis, {tuple(alpha): 1}, sum(alpha))

    @classmethod
    def zero(cls, basis, degree):
        return cls(basis, {}, degree)

    # subclasses supply conversion
    def to(self, basis):
        raise NotImplementedError

    def _coerce(self, other):
        if not isinstance(other, type(self)):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.coeffs and self.coeffs and other.degree != self.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")
        return other.to(self.basis)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        degree = self.degree if self.coeffs else other.degree
        return type(self)(self.basis, out, degree if out else max(self.degree, other.degree))

    def __neg__(self):
        return type(self)(self.basis, {a: -c for a, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return type(self)(self.basis, {a: c * v for a, v in self.coeffs.items()}, self.degree)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        if not self.coeffs and not other.coeffs:
            return True
        if self.degree != other.degree:
            return False
        return self.coeffs == other.to(self.basis).coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.degree, frozenset(self.to(self.BASES[0]).coeffs.items())))

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, alpha):
        return self.coeffs.get(tuple(alpha), Fraction(0))

    def items(self):
        """Terms in canonical composition order."""
        order = index_of(self.degree)
        return sorted(self.coeffs.items(), key=lambda t: order[t[0]])

    def vector(self):
        return [self[a] for a in compositions(self.degree)]

    def __str__(self):
        tag = self.TAGS[self.basis]
        if not self.coeffs:
            return "0"
        out = []
        for i, (alpha, c) in enumerate(self.items()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"{tag}{format_composition(alpha)}"
            if mag != 1:
                body = f"{fmt_rational(mag)} {body}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def to_json(self):
        return {
            "space": self.space,
            "degree": self.degree,
            "basis": self.TAGS[self.basis],
            "terms": [{"index": list(a), "coeff": fmt_rational(c)} for a, c in self.items()],
        }

    @classmethod
    def from_json(cls, data):
        basis = cls.normalize_basis(data["basis"])
        return cls(basis, {tuple(t["index"]): Fraction(t["coeff"]) for t in data["terms"]}, data["degree"])

    @classmethod
    def parse(cls, text):
        """Parse a linear combination in one basis (mixed bases are converted to the first)."""
        return parse_expression(cls, text)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<tag>[A-Za-z]+)|(?P<br>\[[^\]]*\])|(?P<op>[+\-*]))")


def parse_expression(cls, text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    i = 0
    result = None

    def peek():
        return tokens[i]

    while True:
        sign = 1
        kind, val, at = peek()
        if result is not None:
            if kind == "end":
                break
            if kind != "op" or val not in "+-":
                raise ParseError("expected + or -", at)
            sign = -1 if val == "-" else 1
            i += 1
        elif kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        coeff = Fraction(1)
        kind, val, at = peek()
        if kind == "num":
            coeff = Fraction(val)
            i += 1
            if peek()[0] == "op" and peek()[1] == "*":
                i += 1
        kind, val, at = peek()
        if kind != "tag":
            raise ParseError("expected a basis name", at)
        try:
            basis = cls.normalize_basis(val)
        except ValueError:
            raise ParseError(f"unknown basis {val!r}", at) from None
        i += 1
        kind, br, at2 = peek()
        if kind != "br":
            raise ParseError("expected [parts]", at2)
        i += 1
        inner = br[1:-1].strip()
        try:
            alpha = tuple(int(t) for t in inner.split(",")) if inner else ()
        except ValueError:
            raise ParseError(f"bad composition {br!r}", at2) from None
        if any(a < 1 for a in alpha):
            raise ParseError(f"composition parts must be positive in {br!r}", at2)
        term = cls.basis_vector(basis, alpha).scale(sign * coeff)
        result = term if result is None else result + term
    if result is None:
        raise ParseError("empty expression", 0)
    return result
