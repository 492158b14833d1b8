"""Noncommutative symmetric functions in the ribbon, complete, elementary and
power-sum (both kinds) bases.

The ribbon basis is the internal home: involutions are index maps there and
the mixed-basis product uses the ribbon product rule.  Each conversion is a
direct closed formula where one exists; the rest are composed through H.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .compositions import (
    block_stat,
    coarsenings,
    complement,
    compositions,
    descent_mask,
    from_mask,
    is_hook,
    refinements,
    refines,
    reverse,
    transpose,
)
from .graded import GradedElement, common_denominator, linear_combination

BASES = ("R", "H", "E", "Psi", "Phi")
MULTIPLICATIVE = ("H", "E", "Psi", "Phi")


class NSymElem(GradedElement):
    BASES = BASES
    TAGS = {"R": "r", "H": "h", "E": "e", "Psi": "psi", "Phi": "phi"}
    space = "nsym"
    __slots__ = ()

    def to(self, basis):
        return convert(self, basis)

    def __mul__(self, other):
        if isinstance(other, NSymElem):
            return mul(self, other)
        return self.scale(other)

    def involution(self, kind):
        return apply_involution(self, kind)


def r(*alpha):
    return NSymElem.basis_vector("R", alpha)


def h(*alpha):
    return NSymElem.basis_vector("H", alpha)


def e(*alpha):
    return NSymElem.basis_vector("E", alpha)


def psi(*alpha):
    return NSymElem.basis_vector("Psi", alpha)


def phi(*alpha):
    return NSymElem.basis_vector("Phi", alpha)


def unit(basis="R"):
    return NSymElem(basis, {(): 1}, 0)


# -- ribbon decomposition --------------------------------------------------------

@dataclass(frozen=True)
class RibbonDecomposition:
    blocks: tuple
    psr: Fraction
    phr: Fraction


def ribbon_decomposition(alpha, beta) -> RibbonDecomposition:
    """Split gamma = set^-1(set(alpha) | set(beta)) at the parts of beta.

    psr is the coefficient of r_alpha in psi_beta, phr that in phi_beta.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    n = sum(alpha)
    if n != sum(beta):
        raise ValueError(f"size mismatch: |{alpha}| != |{beta}|")
    gamma = from_mask(descent_mask(alpha) | descent_mask(beta), n)
    blocks = tuple(refines(gamma, beta))
    psr = Fraction(1)
    phr = Fraction(1)
    for g, b in zip(blocks, beta):
        k = len(g)
        psr *= (-1) ** (k - 1) if is_hook(g) else 0
        # per-block binomial: phi_beta is the product of the phi_{beta_j}
        phr *= Fraction((-1) ** (k - 1), comb(b - 1, k - 1))
    return RibbonDecomposition(blocks, psr, phr)


# -- direct change-of-basis formulas ------------------------------------------------
# Each returns {beta: coefficient} for the expansion of the basis element alpha.

def _ones(betas):
    return {b: Fraction(1) for b in betas}


def _h_to_r(alpha):
    return _ones(coarsenings(alpha))


def _r_to_h(alpha):
    return {b: Fraction((-1) ** (len(alpha) - len(b))) for b in coarsenings(alpha)}


def _e_to_r(alpha):
    return _ones(b for b, _ in refinements(complement(alpha)))


def _r_to_e(alpha):
    ac = complement(alpha)
    return {b: Fraction((-1) ** (len(ac) - len(b))) for b in coarsenings(ac)}


def _h_to_e(alpha):
    n = sum(alpha)
    return {b: Fraction((-1) ** (n - len(b))) for b, _ in refinements(alpha)}


_e_to_h = _h_to_e


def _h_to_psi(alpha):
    return {b: Fraction(1, block_stat(bl, "piu")) for b, bl in refinements(alpha)}


def _psi_to_h(alpha):
    return {b: Fraction((-1) ** (len(b) - len(alpha)) * block_stat(bl, "lp")) for b, bl in refinements(alpha)}


def _h_to_phi(alpha):
    return {b: Fraction(1, block_stat(bl, "sp")) for b, bl in refinements(alpha)}


def _phi_to_h(alpha):
    p = prod(alpha)
    return {b: Fraction((-1) ** (len(b) - len(alpha)) * p, block_stat(bl, "len")) for b, bl in refinements(alpha)}


def _rev_piu(blocks):
    # pi_u(beta^r, alpha^r): blocks of the reversal are the reversed blocks
    return prod(block_stat([tuple(reversed(bl))], "piu") for bl in blocks)


def _e_to_psi(alpha):
    n = sum(alpha)
    return {b: Fraction((-1) ** (n - len(b)), _rev_piu(bl)) for b, bl in refinements(alpha)}


def _psi_to_e(alpha):
    n = sum(alpha)
    # lp(beta^r, alpha^r) = product of first parts of the blocks
    return {b: Fraction((-1) ** (n - len(b)) * block_stat(bl, "fp")) for b, bl in refinements(alpha)}


def _e_to_phi(alpha):
    n = sum(alpha)
    return {b: Fraction((-1) ** (n - len(b)), block_stat(bl, "sp")) for b, bl in refinements(alpha)}


def _phi_to_e(alpha):
    n = sum(alpha)
    p = prod(alpha)
    return {b: Fraction((-1) ** (n - len(b)) * p, block_stat(bl, "len")) for b, bl in refinements(alpha)}


def _psi_to_r(alpha):
    out = {}
    for b in compositions(sum(alpha)):
        c = ribbon_decomposition(b, alpha).psr
        if c:
            out[b] = c
    return out


def _phi_to_r(alpha):
    return {b: ribbon_decomposition(b, alpha).phr for b in compositions(sum(alpha))}


DIRECT = {
    ("H", "R"): _h_to_r,
    ("R", "H"): _r_to_h,
    ("E", "R"): _e_to_r,
    ("R", "E"): _r_to_e,
    ("H", "E"): _h_to_e,
    ("E", "H"): _e_to_h,
    ("H", "Psi"): _h_to_psi,
    ("Psi", "H"): _psi_to_h,
    ("H", "Phi"): _h_to_phi,
    ("Phi", "H"): _phi_to_h,
    ("E", "Psi"): _e_to_psi,
    ("Psi", "E"): _psi_to_e,
    ("E", "Phi"): _e_to_phi,
    ("Phi", "E"): _phi_to_e,
    ("Psi", "R"): _psi_to_r,
    ("Phi", "R"): _phi_to_r,
}


@lru_cache(maxsize=None)
def expansion(frm: str, to: str, alpha: tuple) -> dict:
    """Coefficients of the frm-basis element alpha in the to-basis."""
    if frm == to:
        return {alpha: Fraction(1)}
    direct = DIRECT.get((frm, to))
    if direct is not None:
        return {b: c for b, c in direct(alpha).items() if c}
    # no closed formula (R -> Psi/Phi, Psi <-> Phi): go through H
    via = expansion(frm, "H", alpha)
    return linear_combination((_column("H", to, b), c) for b, c in via.items())


@lru_cache(maxsize=None)
def _column(frm, to, alpha):
    return common_denominator(expansion(frm, to, alpha))


def convert(x: NSymElem, to: str) -> NSymElem:
    to = NSymElem.normalize_basis(to)
    if to == x.basis:
        return x
    out = linear_combination((_column(x.basis, to, a), c) for a, c in x.coeffs.items())
    return NSymElem._trusted(to, out, x.degree)


# -- products -------------------------------------------------------------------------

def _ribbon_product(alpha, beta):
    if not alpha:
        return (beta,)
    if not beta:
        return (alpha,)
    return (alpha + beta, alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:])


def mul(a: NSymElem, b: NSymElem) -> NSymElem:
    if a.basis == b.basis and a.basis in MULTIPLICATIVE:
        out = {}
        for x, c in a.coeffs.items():
            for y, d in b.coeffs.items():
                out[x + y] = out.get(x + y, 0) + c * d
        return NSymElem(a.basis, out, a.degree + b.degree)
    ar, br = a.to("R"), b.to("R")
    out = {}
    for x, c in ar.coeffs.items():
        for y, d in br.coeffs.items():
            for z in _ribbon_product(x, y):
                out[z] = out.get(z, 0) + c * d
    return NSymElem("R", out, a.degree + b.degree)


# -- involutions -------------------------------------------------------------------------

_INDEX_MAPS = {"rho": reverse, "psi": complement, "omega": transpose}


def apply_involution(x: NSymElem, kind: str, basis: str = None) -> NSymElem:
    """rho, psi or omega: index involution on the ribbon basis, extended linearly."""
    try:
        f = _INDEX_MAPS[kind]
    except KeyError:
        raise ValueError(f"unknown involution {kind!r}") from None
    xr = x.to("R")
    image = NSymElem("R", {f(a): c for a, c in xr.coeffs.items()}, x.degree)
    return image.to(basis or x.basis)


# -- generating series ---------------------------------------------------------------------

@dataclass
class SeriesCheck:
    name: str
    degree: int
    passed: bool
    detail: str = ""


@dataclass
class SeriesReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


class Series:
    """Truncated power series in a commuting variable t with NSym coefficients."""

    def __init__(self, coeffs, order):
        self.order = order
        self.coeffs = [coeffs[k] if k < len(coeffs) and coeffs[k] is not None else NSymElem.zero("R", k)
                       for k in range(order + 1)]

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other):
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def scale(self, c):
        return Series([a.scale(c) for a in self.coeffs], self.order)

    def __mul__(self, other):
        out = []
        for k in range(self.order + 1):
            acc = NSymElem.zero("R", k)
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a.coeffs and b.coeffs:
                    acc = acc + mul(a, b)
            out.append(acc)
        return Series(out, self.order)

    def derivative(self):
        return Series([self.coeffs[k + 1].scale(k + 1) for k in range(self.order)], self.order - 1)

    def truncate(self, order):
        return Series(self.coeffs[: order + 1], order)

    @classmethod
    def one(cls, order):
        return cls([unit("R")], order)


def series_exp(x: Series) -> Series:
    """exp(x) for x with zero constant term, as sum_j x^j / j!."""
    if x[0].coeffs:
        raise ValueError("exp needs a series without constant term")
    total = Series.one(x.order)
    power = Series.one(x.order)
    for j in range(1, x.order + 1):
        power = power * x
        total = total + power.scale(Fraction(1, factorial(j)))
    return total


def _generator(basis, k):
    return unit(basis) if k == 0 else NSymElem.basis_vector(basis, (k,))


def verify_series(N: int) -> SeriesReport:
    """Generating-series identities among e, h, psi and phi up to degree N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    report = SeriesReport()
    add = report.checks.append

    for n in range(1, N + 1):
        # E(-t)H(t) = 1 = H(t)E(-t), coefficientwise
        for order, name in (("eh", "sum (-1)^(n-i) e_i h_(n-i) = 0"), ("he", "sum (-1)^(n-i) h_i e_(n-i) = 0")):
            acc = NSymElem.zero("R", n)
            for i in range(n + 1):
                ei, hi = _generator("E", i), _generator("H", n - i)
                term = mul(ei, hi) if order == "eh" else mul(_generator("H", i), _generator("E", n - i))
                acc = acc + term.scale((-1) ** (n - i))
            add(SeriesCheck(name, n, acc.is_zero(), "" if acc.is_zero() else str(acc)))

        # sum_{i<n} h_i psi_(n-i) = n h_n
        lhs = NSymElem.zero("R", n)
        for i in range(n):
            lhs = lhs + mul(_generator("H", i), _generator("Psi", n - i))
        rhs = h(n).scale(n)
        ok = lhs == rhs
        add(SeriesCheck("sum h_i psi_(n-i) = n h_n", n, ok, "" if ok else f"{lhs.to('R')} != {rhs.to('R')}"))

    # H(t) = exp(phi(t)), phi(t) = sum phi_k t^k / k
    phi_series = Series([NSymElem.zero("R", 0)] + [phi(k).scale(Fraction(1, k)) for k in range(1, N + 1)], N)
    expo = series_exp(phi_series)
    for n in range(1, N + 1):
        ok = expo[n] == h(n)
        add(SeriesCheck("H(t) = exp(phi(t))", n, ok, "" if ok else f"{expo[n].to('R')} != {h(n).to('R')}"))

    # d/dt H(t) = H(t) psi'(t), psi(t) = sum psi_k t^k / k
    H = Series([_generator("H", k) for k in range(N + 1)], N)
    psi_prime = Series([psi(k + 1) for k in range(N)], N - 1)
    rhs = H.truncate(N - 1) * psi_prime
    lhs = H.derivative()
    for k in range(N):
        ok = lhs[k] == rhs[k]
        add(SeriesCheck("d/dt H(t) = H(t) psi'(t)", k + 1, ok, "" if ok else f"t^{k}: {lhs[k]} != {rhs[k]}"))
    return report
