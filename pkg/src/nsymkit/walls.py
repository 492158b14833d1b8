"""Walls, indexed walls and brick tabloids, with coefficient-level checks of
the change-of-basis equations they encode.

A wall of shape alpha and type beta (beta refining alpha) lays the bricks
beta_1, beta_2, ... left to right, one course per part of alpha, bottom
course first.  Brick tabloids are the partition-shaped analogue used for
the classical symmetric functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Callable, Optional

from .compositions import (
    complement,
    compositions,
    coarsenings,
    format_composition,
    is_refinement,
    multiplicities,
    partitions,
    refinements,
    sort_partition,
    z_coefficient,
)
from .graded import fmt_rational
from .nsym import NSymElem
from .qsym import QSymElem


class WallError(ValueError):
    pass


# -- walls ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class Wall:
    shape: tuple
    type: tuple
    blocks: tuple  # one tuple of brick lengths per course, bottom course first

    @property
    def size(self):
        return sum(self.shape)

    def render(self) -> str:
        return "\n".join("".join(f"[{b}]" for b in course) for course in reversed(self.blocks))

    def to_json(self):
        return {
            "shape": list(self.shape),
            "type": list(self.type),
            "courses": [list(c) for c in self.blocks],
            "stats": {k: fmt_rational(wall_stat(self, k)) for k in WALL_STATS},
        }


@dataclass(frozen=True)
class IndexedWall:
    wall: Wall
    labels: tuple  # labels[j] indexes brick j of the type, in laying order

    def render(self) -> str:
        lines, j = [], 0
        for course in self.wall.blocks:
            cells = []
            for b in course:
                cells.append(f"[{b}:{self.labels[j]}]")
                j += 1
            lines.append("".join(cells))
        return "\n".join(reversed(lines))


def make_wall(alpha, beta) -> Wall:
    """The unique wall of shape alpha and type beta."""
    alpha, beta = tuple(alpha), tuple(beta)
    if sum(alpha) != sum(beta):
        raise WallError(f"shape {format_composition(alpha)} and type {format_composition(beta)} differ in size")
    courses, j = [], 0
    for i, a in enumerate(alpha, 1):
        course, filled = [], 0
        while filled < a:
            b = beta[j]
            j += 1
            course.append(b)
            filled += b
        if filled != a:
            raise WallError(
                f"course {i} of length {a} cannot be filled: bricks {format_composition(course)} overshoot to {filled}")
        courses.append(tuple(course))
    return Wall(alpha, beta, tuple(courses))


def enumerate_walls(*, of_shape=None, of_type=None) -> list:
    """Walls of a given shape (one per refinement) or of a given type (one per coarsening)."""
    if (of_shape is None) == (of_type is None):
        raise ValueError("give exactly one of of_shape, of_type")
    if of_shape is not None:
        alpha = tuple(of_shape)
        return [Wall(alpha, beta, tuple(blocks)) for beta, blocks in refinements(alpha)]
    beta = tuple(of_type)
    return [make_wall(alpha, beta) for alpha in coarsenings(beta)]


WALL_STATS = ("lp", "fp", "pb", "fb")


def wall_stat(W: Wall, kind: str) -> Fraction:
    per_course = {
        "lp": lambda c: c[-1],
        "fp": lambda c: c[0],
        "pb": len,
        "fb": lambda c: factorial(len(c)),
    }
    try:
        f = per_course[kind]
    except KeyError:
        raise ValueError(f"unknown wall statistic {kind!r}") from None
    return Fraction(prod(f(c) for c in W.blocks))


def indexed_wall_count(alpha, beta) -> int:
    if not is_refinement(tuple(beta), tuple(alpha)):
        make_wall(alpha, beta)  # raises with the failing course
    return prod(factorial(k) for k in multiplicities(tuple(beta)).values())


def enumerate_indexed_walls(alpha, beta) -> list:
    """All labelings of the bricks by 1..l(beta) increasing with brick size."""
    W = make_wall(alpha, beta)
    beta = W.type
    sizes = sorted(set(beta))
    groups, start = [], 1
    for s in sizes:
        pos = [j for j, b in enumerate(beta) if b == s]
        groups.append((pos, range(start, start + len(pos))))
        start += len(pos)
    out = []
    for choice in product(*(permutations(labels) for _, labels in groups)):
        labels = [0] * len(beta)
        for (pos, _), perm in zip(groups, choice):
            for p, lab in zip(pos, perm):
                labels[p] = lab
        out.append(IndexedWall(W, tuple(labels)))
    return out


# -- brick tabloids ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BrickTabloid:
    shape: tuple
    type: tuple
    rows: tuple  # per row, the ordered brick lengths

    def weight(self) -> int:
        return prod(r[-1] for r in self.rows)

    def render(self) -> str:
        return "\n".join("".join(f"[{b}]" for b in row) for row in self.rows)


def _check_sizes(lam, mu):
    if sum(lam) != sum(mu):
        raise ValueError(f"|{format_composition(lam)}| != |{format_composition(mu)}|")


@lru_cache(maxsize=None)
def _tabloid_rows(lam, mu):
    """Distinct tuples of rows, bricks of equal size indistinguishable."""
    def fill_row(target, pool):
        # ordered sequences of bricks drawn from the multiset pool summing to target
        if target == 0:
            yield (), pool
            return
        for s in sorted(pool):
            if pool[s] and s <= target:
                rest = dict(pool)
                rest[s] -= 1
                for tail, left in fill_row(target - s, rest):
                    yield (s,) + tail, left

    def rec(i, pool):
        if i == len(lam):
            yield ()
            return
        for row, left in fill_row(lam[i], pool):
            for others in rec(i + 1, left):
                yield (row,) + others

    return tuple(rec(0, multiplicities(mu)))


def brick_tabloids(lam, mu) -> list:
    lam, mu = sort_partition(lam), sort_partition(mu)
    _check_sizes(lam, mu)
    return [BrickTabloid(lam, mu, rows) for rows in _tabloid_rows(lam, mu)]


def weight(T) -> int:
    """Weight of one tabloid, or the total weight of a list of them."""
    if isinstance(T, BrickTabloid):
        return T.weight()
    return sum(t.weight() for t in T)


@lru_cache(maxsize=None)
def ordered_count(lam, mu) -> int:
    """|OB_lam^mu|: labeled bricks (smallest gets 1) placed in rows with increasing labels.

    Labels fix the order inside a row, so this counts maps from bricks to rows
    whose row sums match lam.
    """
    lam, mu = sort_partition(lam), sort_partition(mu)
    _check_sizes(lam, mu)
    bricks = sorted(mu)

    def rec(j, room):
        if j == len(bricks):
            return 1
        total = 0
        b = bricks[j]
        for i, r in enumerate(room):
            if r >= b:
                total += rec(j + 1, room[:i] + (r - b,) + room[i + 1:])
        return total

    return rec(0, tuple(lam))


@lru_cache(maxsize=None)
def tabloid_count(lam, mu) -> int:
    return len(_tabloid_rows(sort_partition(lam), sort_partition(mu)))


@lru_cache(maxsize=None)
def tabloid_weight(lam, mu) -> int:
    return sum(prod(r[-1] for r in rows) for rows in _tabloid_rows(sort_partition(lam), sort_partition(mu)))


# -- reports --------------------------------------------------------------------------------------

@dataclass
class TheoremResult:
    name: str
    statement: str
    passed: bool
    status: str = "printed"  # printed | corrected | misprint
    counterexample: Optional[str] = None

    def line(self):
        tag = "" if self.status == "printed" else f" [{self.status}]"
        tail = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.statement}{tag}{tail}"


@dataclass
class TheoremReport:
    n: int
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures()

    def failures(self):
        return [r for r in self.results if not r.passed and r.status != "misprint"]

    def misprints(self):
        return [r for r in self.results if r.status == "misprint"]

    def misprints_refuted(self):
        return [r for r in self.misprints() if not r.passed]


def _sign(k):
    return 1 if k % 2 == 0 else -1


# -- wall equations ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class WallEquation:
    name: str
    statement: str
    space: str  # nsym | qsym
    lhs: str  # basis of the left side
    rhs: str  # basis of the right side
    walls: str  # shape | type | shape_c | type_c | ishape | itype
    term: Callable  # (alpha, W) -> (index, coefficient)
    status: str = "printed"


def _l(x):
    return len(x)


def _wall_equations():
    E = WallEquation
    n_ = lambda W: W.size  # noqa: E731
    sh = lambda W: W.shape  # noqa: E731
    ty = lambda W: W.type  # noqa: E731

    def st(W, k):
        return wall_stat(W, k)

    yield E("W1", "e_a = sum_{W of shape a} (-1)^(l(type)-|W|) h_type", "nsym", "E", "H", "shape",
            lambda a, W: (ty(W), _sign(_l(ty(W)) - n_(W))))
    yield E("W2", "h_a = sum_{W of shape a} (-1)^(l(type)-|W|) e_type", "nsym", "H", "E", "shape",
            lambda a, W: (ty(W), _sign(_l(ty(W)) - n_(W))))
    yield E("W3", "For_a = sum_{W of type a} (-1)^(l(type)-|W|) M_sh", "qsym", "For", "M", "type",
            lambda a, W: (sh(W), _sign(_l(ty(W)) - n_(W))))
    yield E("W4", "M_a = sum_{W of type a} (-1)^(l(type)-|W|) For_sh", "qsym", "M", "For", "type",
            lambda a, W: (sh(W), _sign(_l(ty(W)) - n_(W))))

    yield E("R1", "h_a = sum_{W of type a} r_sh", "nsym", "H", "R", "type", lambda a, W: (sh(W), 1))
    yield E("R2", "r_a = sum_{W of type a} (-1)^(l(sh)-l(type)) h_sh", "nsym", "R", "H", "type",
            lambda a, W: (sh(W), _sign(_l(sh(W)) - _l(ty(W)))))
    yield E("R3", "e_a = sum_{W of type a} r_(sh^c)", "nsym", "E", "R", "type",
            lambda a, W: (complement(sh(W)), 1))
    yield E("R4", "r_a = sum_{W of type a^c} (-1)^(l(sh)-l(type)) e_sh", "nsym", "R", "E", "type_c",
            lambda a, W: (sh(W), _sign(_l(sh(W)) - _l(ty(W)))))
    yield E("R5", "F_a = sum_{W of shape a} M_type", "qsym", "F", "M", "shape", lambda a, W: (ty(W), 1))
    yield E("R6", "M_a = sum_{W of shape a} (-1)^(l(type)-l(sh)) F_type", "qsym", "M", "F", "shape",
            lambda a, W: (ty(W), _sign(_l(ty(W)) - _l(sh(W)))))
    yield E("R7", "F_a = sum_{W of shape a^c} For_type", "qsym", "F", "For", "shape_c", lambda a, W: (ty(W), 1))
    yield E("R8", "For_a = sum_{W of shape a} (-1)^(l(type)-l(sh)) F_(type^c)", "qsym", "For", "F", "shape",
            lambda a, W: (complement(ty(W)), _sign(_l(ty(W)) - _l(sh(W)))))

    def sgn_lt(W):
        return _sign(_l(ty(W)) - _l(sh(W)))

    def sgn_nt(W):
        return _sign(n_(W) - _l(ty(W)))

    def z(x):
        return Fraction(1, z_coefficient(x))

    yield E("P1", "psi_a = sum_{W of shape a} (-1)^(l(type)-l(sh)) lp(W) h_type", "nsym", "Psi", "H", "shape",
            lambda a, W: (ty(W), sgn_lt(W) * st(W, "lp")))
    yield E("P2", "psi_a = sum_{W of shape a} (-1)^(l(type)-l(sh)) fp(W) e_type", "nsym", "Psi", "E", "shape",
            lambda a, W: (ty(W), sgn_lt(W) * st(W, "fp")), "misprint")
    yield E("P2", "psi_a = sum_{W of shape a} (-1)^(|W|-l(type)) fp(W) e_type", "nsym", "Psi", "E", "shape",
            lambda a, W: (ty(W), sgn_nt(W) * st(W, "fp")), "corrected")
    yield E("P3", "M_a = sum_{W of type a} (-1)^(l(type)-l(sh)) lp(W) psi_sh / z_sh", "qsym", "M", "Psi", "type",
            lambda a, W: (sh(W), sgn_lt(W) * st(W, "lp") * z(sh(W))))
    yield E("P4", "For_a = sum_{W of type a} (-1)^(l(type)-l(sh)) fp(W) psi_sh / z_sh", "qsym", "For", "Psi",
            "type", lambda a, W: (sh(W), sgn_lt(W) * st(W, "fp") * z(sh(W))), "misprint")
    yield E("P4", "For_a = sum_{W of type a} (-1)^(|W|-l(type)) fp(W) psi_sh / z_sh", "qsym", "For", "Psi",
            "type", lambda a, W: (sh(W), sgn_nt(W) * st(W, "fp") * z(sh(W))), "corrected")

    def ratio(W):
        return Fraction(prod(sh(W))) / st(W, "pb")

    yield E("P5", "phi_a = sum_{W of shape a} (-1)^(l(type)-l(sh)) prod(sh)/pb(W) h_type", "nsym", "Phi", "H",
            "shape", lambda a, W: (ty(W), sgn_lt(W) * ratio(W)))
    yield E("P6", "phi_a = sum_{W of shape a} (-1)^(|sh|-l(type)) prod(sh)/pb(W) e_type", "nsym", "Phi", "E",
            "shape", lambda a, W: (ty(W), sgn_nt(W) * ratio(W)))
    yield E("P7", "M_a = sum_{W of type a} (-1)^(l(type)-l(sh)) prod(sh)/pb(W) phi_sh / z_sh", "qsym", "M", "Phi",
            "type", lambda a, W: (sh(W), sgn_lt(W) * ratio(W) * z(sh(W))))
    yield E("P8", "For_a = sum_{W of type a} (-1)^(|sh|-l(type)) prod(sh)/pb(W) phi_sh / z_sh", "qsym", "For",
            "Phi", "type", lambda a, W: (sh(W), sgn_nt(W) * ratio(W) * z(sh(W))))

    yield E("I1", "h_a = sum_{indexed W of shape a} 1/fb(W) phi_type / z_type", "nsym", "H", "Phi", "ishape",
            lambda a, W: (ty(W), 1 / st(W, "fb") * z(ty(W))))
    yield E("I2", "e_a = sum_{indexed W of shape a} (-1)^(|sh|-l(type))/fb(W) phi_type / z_type", "nsym", "E",
            "Phi", "ishape", lambda a, W: (ty(W), sgn_nt(W) / st(W, "fb") * z(ty(W))))
    yield E("I3", "phi_a = sum_{indexed W of type a} 1/fb(W) M_sh", "qsym", "Phi", "M", "itype",
            lambda a, W: (sh(W), 1 / st(W, "fb")))
    yield E("I4", "phi_a = sum_{indexed W of type a} (-1)^(|sh|-l(type))/fb(W) For_sh", "qsym", "Phi", "For",
            "itype", lambda a, W: (sh(W), sgn_nt(W) / st(W, "fb")))


WALL_EQUATIONS = tuple(_wall_equations())


def _walls_for(mode, alpha, explicit_indexed):
    """(wall, multiplicity) pairs for the sum on the right side."""
    if mode == "shape":
        return ((W, 1) for W in enumerate_walls(of_shape=alpha))
    if mode == "type":
        return ((W, 1) for W in enumerate_walls(of_type=alpha))
    if mode == "shape_c":
        return ((W, 1) for W in enumerate_walls(of_shape=complement(alpha)))
    if mode == "type_c":
        return ((W, 1) for W in enumerate_walls(of_type=complement(alpha)))
    base = enumerate_walls(of_shape=alpha) if mode == "ishape" else enumerate_walls(of_type=alpha)
    if explicit_indexed:
        return ((IW.wall, 1) for W in base for IW in enumerate_indexed_walls(W.shape, W.type))
    return ((W, indexed_wall_count(W.shape, W.type)) for W in base)


def wall_rhs(eq: WallEquation, alpha, explicit_indexed=True) -> dict:
    out = {}
    for W, mult in _walls_for(eq.walls, tuple(alpha), explicit_indexed):
        idx, c = eq.term(alpha, W)
        out[idx] = out.get(idx, 0) + mult * Fraction(c)
    return {k: v for k, v in out.items() if v}


def verify_wall_theorems(n: int, explicit_indexed: bool = None) -> TheoremReport:
    """Check every wall equation coefficientwise for all alpha of size n.

    Indexed walls are listed one by one when ``explicit_indexed`` (default
    for n <= 6); otherwise each wall is weighted by its indexed count.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if explicit_indexed is None:
        explicit_indexed = n <= 6
    report = TheoremReport(n)
    for eq in WALL_EQUATIONS:
        cls = NSymElem if eq.space == "nsym" else QSymElem
        bad = None
        for alpha in compositions(n):
            want = cls.basis_vector(eq.lhs, alpha).to(eq.rhs).coeffs
            got = wall_rhs(eq, alpha, explicit_indexed)
            if want != got:
                key = next(k for k in sorted(set(want) | set(got)) if want.get(k, 0) != got.get(k, 0))
                tag = cls.TAGS[eq.rhs]
                bad = (f"alpha={format_composition(alpha)}, coefficient of {tag}{format_composition(key)}: "
                       f"walls give {fmt_rational(Fraction(got.get(key, 0)))}, "
                       f"expansion gives {fmt_rational(Fraction(want.get(key, 0)))}")
                break
        report.results.append(TheoremResult(eq.name, eq.statement, bad is None, eq.status, bad))
    return report


# -- brick tabloid equations (classical symmetric functions) ----------------------------------------------

@dataclass(frozen=True)
class BrickEquation:
    name: str
    statement: str
    lhs: str  # e h m f p
    rhs: str
    coeff: Callable  # (lam, mu, n) -> coefficient of rhs_mu in lhs_lam
    status: str = "printed"


def _brick_equations():
    B = BrickEquation
    cnt, wt, ob = tabloid_count, tabloid_weight, ordered_count

    def zi(mu):
        return Fraction(1, z_coefficient(mu))

    yield B("B1", "e_lam = sum_{T in B_lam} (-1)^(|lam|-l(type)) h_type", "e", "h",
            lambda lam, mu, n: _sign(n - len(mu)) * cnt(lam, mu))
    yield B("B2", "h_lam = sum_{T in B_lam} (-1)^(|lam|-l(type)) e_type", "h", "e",
            lambda lam, mu, n: _sign(n - len(mu)) * cnt(lam, mu))
    yield B("B3", "m_lam = sum_{T in B^lam} (-1)^(|shape|-l(lam)) f_shape", "m", "f",
            lambda lam, mu, n: _sign(n - len(lam)) * cnt(mu, lam))
    yield B("B4", "f_lam = sum_{T in B^lam} (-1)^(|shape|-l(lam)) m_shape", "f", "m",
            lambda lam, mu, n: _sign(n - len(lam)) * cnt(mu, lam))
    yield B("B5", "p_lam = sum_type (-1)^(|lam|-l(type)) w(B_lam^type) e_type", "p", "e",
            lambda lam, mu, n: _sign(n - len(mu)) * wt(lam, mu))
    yield B("B6", "p_lam = sum_type (-1)^(l(lam)-l(type)) w(B_lam^type) h_type", "p", "h",
            lambda lam, mu, n: _sign(len(lam) - len(mu)) * wt(lam, mu))
    yield B("B7", "f_lam = sum_shape (-1)^(|lam|-l(lam)) w(B_shape^lam)/z_shape p_shape", "f", "p",
            lambda lam, mu, n: _sign(n - len(lam)) * wt(mu, lam) * zi(mu))
    yield B("B8", "m_lam = sum_type (-1)^(l(lam)-l(type)) w(B_lam^type)/z_type p_type", "m", "p",
            lambda lam, mu, n: _sign(len(lam) - len(mu)) * wt(lam, mu) * zi(mu), "misprint")
    yield B("B8", "m_lam = sum_mu (-1)^(l(mu)-l(lam)) w(B_mu^lam)/z_mu p_mu", "m", "p",
            lambda lam, mu, n: _sign(len(mu) - len(lam)) * wt(mu, lam) * zi(mu), "corrected")
    yield B("B9", "p_lam = sum_shape |OB_shape^lam| m_shape", "p", "m",
            lambda lam, mu, n: ob(mu, lam))
    yield B("B10", "p_lam = sum_shape (-1)^(|lam|-l(lam)) |OB_shape^lam| f_shape", "p", "f",
            lambda lam, mu, n: _sign(n - len(lam)) * ob(mu, lam))
    yield B("B11", "h_lam = sum_type |OB_lam^type|/z_type p_type", "h", "p",
            lambda lam, mu, n: ob(lam, mu) * zi(mu))
    yield B("B12", "e_lam = sum_type (-1)^(|lam|-l(type)) |OB_lam^type|/z_type p_type", "e", "p",
            lambda lam, mu, n: _sign(n - len(mu)) * ob(lam, mu) * zi(mu))


BRICK_EQUATIONS = tuple(_brick_equations())


def _realize_lhs(family, lam, m):
    from .polyreal import realize_c, realize_family

    if family in ("e", "h", "p"):
        return realize_family(family, lam, m)
    return realize_c((family, lam), m)


def verify_brick_theorems(n: int) -> TheoremReport:
    """Check the brick tabloid equations against exact expansions of realized polynomials."""
    from .polyreal import sym_expand

    if n < 1:
        raise ValueError("n must be at least 1")
    lams = partitions(n)
    oracle = {}
    report = TheoremReport(n)
    for eq in BRICK_EQUATIONS:
        bad = None
        for lam in lams:
            key = (eq.lhs, eq.rhs, lam)
            if key not in oracle:
                oracle[key] = sym_expand(_realize_lhs(eq.lhs, lam, n), eq.rhs, n)
            want = oracle[key]
            got = {mu: Fraction(eq.coeff(lam, mu, n)) for mu in lams}
            got = {mu: c for mu, c in got.items() if c}
            if want != got:
                mu = next(m for m in lams if want.get(m, 0) != got.get(m, 0))
                bad = (f"lam={format_composition(lam)}, coefficient of {eq.rhs}{format_composition(mu)}: "
                       f"tabloids give {fmt_rational(got.get(mu, Fraction(0)))}, "
                       f"oracle gives {fmt_rational(Fraction(want.get(mu, 0)))}")
                break
        report.results.append(TheoremResult(eq.name, eq.statement, bad is None, eq.status, bad))
    return report
