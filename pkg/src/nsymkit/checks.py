"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a SuiteResult whose lines read ``PASS name: detail`` or
``FAIL name: detail``.  Misprinted statements are listed with their outcome
but never make a suite fail.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .compositions import (
    SubsetOfRange,
    binomial_partial_sum,
    complement,
    compositions,
    enumerate_compositions,
    format_composition,
    involution,
    mobius,
    partitions,
    refined_stat,
    refinements,
    reverse,
    set_inverse,
    set_of,
    sort_and_z,
    stat,
    transpose,
    z_coefficient,
)
from .nsym import BASES as NSYM_BASES
from .nsym import NSymElem, verify_series
from .qsym import BASES as QSYM_BASES
from .qsym import DUAL, QSymElem, check_forgotten, dual_normalizer, pair

SUITES = ("series", "matrices", "walls", "bricks", "duality", "oracle", "lemmas")


@dataclass
class Line:
    name: str
    passed: bool
    detail: str = ""
    status: str = "printed"

    def render(self):
        tag = "" if self.status == "printed" else f" [{self.status}]"
        detail = f": {self.detail}" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}{tag}{detail}"

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "status": self.status, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    n: int
    lines: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self):
        return all(l.passed for l in self.lines if l.status != "misprint")

    def to_json(self):
        return {"suite": self.suite, "n": self.n, "passed": self.passed,
                "checks": [l.to_json() for l in self.lines]}


# -- suites ---------------------------------------------------------------------------------

def _series(n, m):
    report = verify_series(n)
    out = []
    for name in dict.fromkeys(c.name for c in report.checks):
        checks = [c for c in report.checks if c.name == name]
        bad = [c for c in checks if not c.passed]
        degrees = f"degrees {checks[0].degree}..{checks[-1].degree}"
        out.append(Line(name, not bad, degrees if not bad else f"degree {bad[0].degree}: {bad[0].detail}"))
    return out


def _matrices(n, m):
    from .transmat import check_identities

    out = []
    for k in range(1, n + 1):
        for r in check_identities(k).results:
            detail = f"n={k}"
            if r.offending:
                a, b, x, y = r.offending
                detail += (f", entry ({format_composition(a)},{format_composition(b)}): "
                           f"{x} != {y}")
            out.append(Line(r.statement, r.passed, detail, r.status))
    return out


def _theorem_lines(report, k):
    return [Line(f"{r.name} {r.statement}", r.passed, f"n={k}" + (f", {r.counterexample}" if r.counterexample else ""),
                 r.status) for r in report.results]


def _walls(n, m):
    from .walls import enumerate_indexed_walls, enumerate_walls, indexed_wall_count, verify_wall_theorems

    out = []
    for k in range(1, n + 1):
        out.extend(_theorem_lines(verify_wall_theorems(k), k))
        ok = all(len(enumerate_indexed_walls(W.shape, W.type)) == indexed_wall_count(W.shape, W.type)
                 for a in compositions(k) for W in enumerate_walls(of_shape=a))
        out.append(Line("indexed walls: listing matches prod m_i(type)!", ok, f"n={k}"))
    return out


def _listing_agrees(tabs, count, total, weight):
    return len(tabs) == count and weight(tabs) == total


def _bricks(n, m):
    from .walls import brick_tabloids, tabloid_count, tabloid_weight, verify_brick_theorems, weight

    out = []
    for k in range(1, n + 1):
        out.extend(_theorem_lines(verify_brick_theorems(k), k))
        ok = all(_listing_agrees(brick_tabloids(lam, mu), tabloid_count(lam, mu), tabloid_weight(lam, mu), weight)
                 for lam in partitions(k) for mu in partitions(k))
        out.append(Line("brick tabloids: listing matches count and weight", ok, f"n={k}"))
    return out


def verify_duality(n):
    """<X_a, x_b> = normalizer * delta for each dual pair, plus the forgotten sums."""
    out = []
    for k in range(1, n + 1):
        comps = compositions(k)
        for qb in QSYM_BASES:
            nb = DUAL[qb]
            bad = None
            for a in comps:
                X = QSymElem.basis_vector(qb, a)
                for b in comps:
                    want = dual_normalizer(qb, a) if a == b else Fraction(0)
                    got = pair(X, NSymElem.basis_vector(nb, b))
                    if got != want:
                        bad = f"<{qb}{format_composition(a)}, {nb.lower()}{format_composition(b)}> = {got}"
                        break
                if bad:
                    break
            norm = "z_a" if qb in ("Psi", "Phi") else "1"
            out.append(Line(f"<{qb}_a, {NSymElem.TAGS[nb]}_b> = {norm} [a=b]", bad is None,
                            bad or f"n={k}"))
        # QSym involutions are adjoint to the NSym ones on F/r indices
        for kind in ("rho", "psi", "omega"):
            ok = all(
                pair(QSymElem.basis_vector("F", a).involution(kind), NSymElem.basis_vector("R", b))
                == pair(QSymElem.basis_vector("F", a), NSymElem.basis_vector("R", b).involution(kind))
                for a in comps for b in comps)
            out.append(Line(f"{kind} is self-adjoint for the pairing", ok, f"n={k}"))
        ok = all(QSymElem.basis_vector("M", a).involution("psi", "For") == QSymElem.basis_vector("For", a)
                 for a in comps)
        out.append(Line("For_a = psi(M_a)", ok, f"n={k}"))
    for k in range(1, min(n, 5) + 1):
        res = check_forgotten(k)
        bad = [lam for lam, ok in res if not ok]
        out.append(Line("f_lam = sum of For_a over rearrangements a of lam", not bad,
                        f"n={k}" if not bad else f"fails at {format_composition(bad[0])}"))
    return out


def _duality(n, m):
    return verify_duality(n)


def verify_oracle(n, m=None, qsym_bases=("M", "F")):
    """Compare abstract conversions with realizations in m variables, degree n.

    Each NSym basis element is realized from its definition, checked for
    membership, and read off in ribbon coordinates; a conversion X -> Y is
    correct iff the Y-expansion, realized, reproduces the X-realization.
    QSym works the same way in monomial coordinates.
    """
    from .polyreal import CPoly, NCPoly, chi, des, is_nsym, realize_basis, realize_c, ribbon_coordinates

    m = n if m is None else m
    out = []
    comps = compositions(n)

    if n == 2:
        sq = NCPoly(2, {(1, 1): 1, (2, 2): 1})
        res = is_nsym(sq, 2, 2)
        ok = not res and des(res.witness[0]) == des(res.witness[1]) and sq[res.witness[0]] != sq[res.witness[1]]
        out.append(Line("x1^2 + x2^2 is not in NSym", ok, f"witness {res.witness}"))

    coords = {}
    for b in NSYM_BASES:
        for a in comps:
            coords[b, a] = ribbon_coordinates(realize_basis(b, a, m), n, m)
    out.append(Line("realized NSym basis elements lie in NSym", True, f"n={n}, m={m}"))

    def combine(basis, elem):
        acc = {}
        for beta, c in elem.coeffs.items():
            for g, v in coords[basis, beta].items():
                acc[g] = acc.get(g, 0) + c * v
        return {g: v for g, v in acc.items() if v}

    for x in NSYM_BASES:
        for y in NSYM_BASES:
            bad = None
            for a in comps:
                image = NSymElem.basis_vector(x, a).to(y)
                if combine(y, image) != coords[x, a]:
                    bad = f"{NSymElem.TAGS[x]}{format_composition(a)} -> {NSymElem.TAGS[y]}"
                    break
            out.append(Line(f"nsym {NSymElem.TAGS[x]} -> {NSymElem.TAGS[y]} matches realization", bad is None,
                            bad or f"n={n}, m={m}"))

    # commutative images: chi(psi_n) = chi(phi_n) = p_n
    p_n = realize_c(("p", n), m)
    for g in ("Psi", "Phi"):
        ok = chi(realize_basis(g, (n,), m)) == p_n
        out.append(Line(f"chi({NSymElem.TAGS[g]}_{n}) = p_{n}", ok, f"m={m}"))

    def mono_coords(poly):
        return {a: poly[a + (0,) * (m - len(a))] for a in comps if len(a) <= m and poly[a + (0,) * (m - len(a))]}

    qpoly = {}
    for b in qsym_bases:
        for a in comps:
            qpoly[b, a] = realize_c((b, a), m)
    for b in qsym_bases:
        bad = None
        for a in comps:
            c = mono_coords(qpoly[b, a])
            rebuilt = CPoly(m, {})
            for beta, v in c.items():
                rebuilt = rebuilt + realize_c(("M", beta), m).scale(v)
            if rebuilt != qpoly[b, a]:
                bad = f"{b}{format_composition(a)} is not quasisymmetric"
                break
        out.append(Line(f"realized {b} elements are quasisymmetric", bad is None, bad or f"n={n}, m={m}"))
    for x in qsym_bases:
        for y in qsym_bases:
            bad = None
            for a in comps:
                image = QSymElem.basis_vector(x, a).to(y)
                acc = {}
                for beta, c in image.coeffs.items():
                    for g, v in mono_coords(qpoly[y, beta]).items():
                        acc[g] = acc.get(g, 0) + c * v
                if {g: v for g, v in acc.items() if v} != mono_coords(qpoly[x, a]):
                    bad = f"{x}{format_composition(a)} -> {y}"
                    break
            out.append(Line(f"qsym {x} -> {y} matches realization", bad is None, bad or f"n={n}, m={m}"))
    return out


def _oracle(n, m):
    out = []
    for k in range(1, n + 1):
        out.extend(verify_oracle(k, max(m or k, k)))
    return out


def verify_lemmas(n, c_max=25):
    out = []
    bad = [(a, c) for a in range(c_max + 1) for c in range(c_max + 1)
           if binomial_partial_sum(a, c) != Fraction(a + c + 1, c + 1)]
    out.append(Line("sum_k C(n,k)/C(n+c,k+c) = (n+c+1)/(c+1)", not bad,
                    f"0 <= n,c <= {c_max}" if not bad else f"fails at {bad[0]}"))
    for k in range(1, n + 1):
        comps = enumerate_compositions(k)
        ok = all(set_inverse(set_of(a)) == a for a in comps)
        out.append(Line("set^-1(set(a)) = a", ok, f"n={k}"))
        ok = all(len(a) + len(complement(a)) - 1 == k and transpose(a) == reverse(complement(a))
                 and all(involution(involution(a, f), f) == a for f in ("reverse", "complement", "transpose"))
                 for a in comps)
        out.append(Line("involutions: l(a) + l(a^c) - 1 = |a|, a^t = (a^c)^r, each squares to 1", ok, f"n={k}"))
        # Mobius inversion on the Boolean lattice of subsets of [k-1]
        subsets = [SubsetOfRange(k, c) for r in range(k) for c in combinations(range(1, k), r)]
        ok = all(
            sum(mobius(U, T) for U in subsets if set(T.members) <= set(U.members) <= set(S.members))
            == (1 if S == T else 0)
            for S in subsets for T in subsets if set(T.members) <= set(S.members))
        out.append(Line("sum_{T <= U <= S} mu(U, T) = [S = T]", ok, f"n={k}"))
        ok = all(z_coefficient(a) > 0 for a in comps)
        out.append(Line("z_a positive", ok, f"n={k}"))
        # one representative composition per partition
        reps = {sort_and_z(a)[0]: sort_and_z(a)[1] for a in comps}
        ok = set(reps) == set(partitions(k)) and sum(1 / z for z in reps.values()) == 1
        out.append(Line("sum over partitions of 1/z_lam = 1", ok, f"n={k}"))
        ok = sum(Fraction(1) / stat(b, "piu") for b in comps) == 1
        out.append(Line("sum over compositions of 1/(b_1 (b_1+b_2) ... ) = 1", ok, f"n={k}"))
        ok = all(sum(1 / refined_stat(b, a, "piu") for b, _ in refinements(a)) == 1 for a in comps)
        out.append(Line("sum over refinements b of a of 1/piu(b, a) = 1", ok, f"n={k}"))
    return out


def _lemmas(n, m):
    return verify_lemmas(n)


_RUNNERS = {
    "series": _series,
    "matrices": _matrices,
    "walls": _walls,
    "bricks": _bricks,
    "duality": _duality,
    "oracle": _oracle,
    "lemmas": _lemmas,
}

# the brick and realization oracles grow fastest; cap their default degree
DEFAULT_CAPS = {"bricks": 7, "oracle": 5}


def run_suite(name: str, n: int, m: int = None) -> SuiteResult:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    start = time.perf_counter()
    k = min(n, DEFAULT_CAPS.get(name, n))
    lines = _RUNNERS[name](k, m)
    return SuiteResult(name, k, lines, time.perf_counter() - start)
