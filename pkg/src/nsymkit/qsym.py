"""Quasisymmetric functions in the monomial, fundamental, forgotten-like and
the two power-sum bases, together with the pairing against NSym.

Dual pairs: M with h, F with r, For with e, Psi with psi (up to z), Phi with
phi (up to z).  M is the hub; pairs without a closed formula go through it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod

from .compositions import (
    block_stat,
    coarsenings,
    complement,
    partitions,
    refinements,
    refines,
    reverse,
    sort_partition,
    transpose,
    z_coefficient,
)
from .graded import GradedElement, common_denominator, linear_combination
from .nsym import NSymElem

BASES = ("M", "F", "For", "Psi", "Phi")


class QSymElem(GradedElement):
    BASES = BASES
    TAGS = {"M": "M", "F": "F", "For": "For", "Psi": "Psi", "Phi": "Phi"}
    space = "qsym"
    __slots__ = ()

    @classmethod
    def normalize_basis(cls, basis):
        if basis in cls.BASES:
            return basis
        # tags coincide with names; match case-insensitively but keep F and For apart
        for b in cls.BASES:
            if isinstance(basis, str) and basis.lower() == b.lower():
                return b
        raise ValueError(f"unknown qsym basis {basis!r}")

    def to(self, basis):
        return qconvert(self, basis)

    def involution(self, kind, basis=None):
        return qinvolution(self, kind, basis)


def M(*alpha):
    return QSymElem.basis_vector("M", alpha)


def F(*alpha):
    return QSymElem.basis_vector("F", alpha)


def For(*alpha):
    return QSymElem.basis_vector("For", alpha)


def Psi(*alpha):
    return QSymElem.basis_vector("Psi", alpha)


def Phi(*alpha):
    return QSymElem.basis_vector("Phi", alpha)


# -- direct formulas -----------------------------------------------------------------

def _sign(k):
    return 1 if k % 2 == 0 else -1


def _f_to_m(alpha):
    return {b: Fraction(1) for b, _ in refinements(alpha)}


def _m_to_f(alpha):
    return {b: Fraction(_sign(len(b) - len(alpha))) for b, _ in refinements(alpha)}


def _f_to_for(alpha):
    return {b: Fraction(1) for b, _ in refinements(complement(alpha))}


def _for_to_f(alpha):
    return {complement(g): Fraction(_sign(len(g) - len(alpha))) for g, _ in refinements(alpha)}


def _for_to_m(alpha):
    s = Fraction(_sign(sum(alpha) - len(alpha)))
    return {b: s for b in coarsenings(alpha)}


_m_to_for = _for_to_m


def _coarser(alpha):
    """(beta, blocks of alpha inside beta) for every beta >= alpha."""
    for beta in coarsenings(alpha):
        yield beta, refines(alpha, beta)


def _psi_to_m(alpha):
    z = z_coefficient(alpha)
    return {b: Fraction(z, block_stat(bl, "piu")) for b, bl in _coarser(alpha)}


def _m_to_psi(alpha):
    return {b: Fraction(_sign(len(alpha) - len(b)) * block_stat(bl, "lp"), z_coefficient(b))
            for b, bl in _coarser(alpha)}


def _phi_to_m(alpha):
    z = z_coefficient(alpha)
    return {b: Fraction(z, block_stat(bl, "sp")) for b, bl in _coarser(alpha)}


def _m_to_phi(alpha):
    return {b: Fraction(_sign(len(alpha) - len(b)) * prod(b), block_stat(bl, "len") * z_coefficient(b))
            for b, bl in _coarser(alpha)}


def _rev_piu(blocks):
    return prod(block_stat([tuple(reversed(bl))], "piu") for bl in blocks)


def _psi_to_for(alpha):
    z = z_coefficient(alpha)
    s = _sign(sum(alpha) - len(alpha))
    return {b: Fraction(s * z, _rev_piu(bl)) for b, bl in _coarser(alpha)}


def _for_to_psi(alpha):
    s = _sign(sum(alpha) - len(alpha))
    # lp on reversed blocks is the first part of each block
    return {b: Fraction(s * block_stat(bl, "fp"), z_coefficient(b)) for b, bl in _coarser(alpha)}


def _phi_to_for(alpha):
    z = z_coefficient(alpha)
    s = _sign(sum(alpha) - len(alpha))
    return {b: Fraction(s * z, block_stat(bl, "sp")) for b, bl in _coarser(alpha)}


def _for_to_phi(alpha):
    s = _sign(sum(alpha) - len(alpha))
    return {b: Fraction(s * prod(b), block_stat(bl, "len") * z_coefficient(b)) for b, bl in _coarser(alpha)}


DIRECT = {
    ("F", "M"): _f_to_m,
    ("M", "F"): _m_to_f,
    ("F", "For"): _f_to_for,
    ("For", "F"): _for_to_f,
    ("For", "M"): _for_to_m,
    ("M", "For"): _m_to_for,
    ("Psi", "M"): _psi_to_m,
    ("M", "Psi"): _m_to_psi,
    ("Phi", "M"): _phi_to_m,
    ("M", "Phi"): _m_to_phi,
    ("Psi", "For"): _psi_to_for,
    ("For", "Psi"): _for_to_psi,
    ("Phi", "For"): _phi_to_for,
    ("For", "Phi"): _for_to_phi,
}


@lru_cache(maxsize=None)
def qexpansion(frm: str, to: str, alpha: tuple) -> dict:
    if frm == to:
        return {alpha: Fraction(1)}
    direct = DIRECT.get((frm, to))
    if direct is not None:
        return {b: c for b, c in direct(alpha).items() if c}
    via = qexpansion(frm, "M", alpha)
    return linear_combination((_column("M", to, b), c) for b, c in via.items())


@lru_cache(maxsize=None)
def _column(frm, to, alpha):
    return common_denominator(qexpansion(frm, to, alpha))


def qconvert(x: QSymElem, to: str) -> QSymElem:
    to = QSymElem.normalize_basis(to)
    if to == x.basis:
        return x
    out = linear_combination((_column(x.basis, to, a), c) for a, c in x.coeffs.items())
    return QSymElem._trusted(to, out, x.degree)


_INDEX_MAPS = {"rho": reverse, "psi": complement, "omega": transpose}


def qinvolution(x: QSymElem, kind: str, basis: str = None) -> QSymElem:
    """Involution acting on fundamental indices; result in ``basis`` (default: x's)."""
    try:
        f = _INDEX_MAPS[kind]
    except KeyError:
        raise ValueError(f"unknown involution {kind!r}") from None
    xf = x.to("F")
    image = QSymElem("F", {f(a): c for a, c in xf.coeffs.items()}, x.degree)
    return image.to(basis or x.basis)


# -- duality -------------------------------------------------------------------------------

def pair(q: QSymElem, ns: NSymElem) -> Fraction:
    """<q, ns> with <F_alpha, r_beta> = delta; 0 across degrees."""
    if q.degree != ns.degree:
        return Fraction(0)
    qf = q.to("F").coeffs
    nr = ns.to("R").coeffs
    return sum((c * nr[a] for a, c in qf.items() if a in nr), Fraction(0))


DUAL = {"M": "H", "F": "R", "For": "E", "Psi": "Psi", "Phi": "Phi"}


def dual_normalizer(qbasis: str, alpha) -> Fraction:
    """<X_alpha, x_alpha> for the dual pair (X, x)."""
    return Fraction(z_coefficient(tuple(alpha))) if qbasis in ("Psi", "Phi") else Fraction(1)


# -- forgotten functions -------------------------------------------------------------------------

def forgotten_sum(lam) -> QSymElem:
    """Sum of For_alpha over the rearrangements alpha of the partition lam."""
    lam = sort_partition(lam)
    from itertools import permutations
    return QSymElem("For", {a: 1 for a in set(permutations(lam))}, sum(lam))


def check_forgotten(n: int, m: int = None):
    """Compare sum_{sort(alpha)=lam} For_alpha with f_lam = omega(m_lam) as polynomials.

    Returns a list of (lam, agrees) over all partitions of n.
    """
    from .polyreal import CPoly, realize_c

    m = n if m is None else m
    out = []
    for lam in partitions(n):
        fsum = forgotten_sum(lam).to("F")
        poly = CPoly(m, {})
        for a, c in fsum.coeffs.items():
            poly = poly + realize_c(("F", a), m).scale(c)
        out.append((lam, poly == realize_c(("f", lam), m)))
    return out
