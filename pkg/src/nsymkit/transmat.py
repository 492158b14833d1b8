"""Transition matrices indexed by compositions, and the matrix identities
relating them.

Convention: row alpha of M(a, b) holds the coefficients of a_alpha in the
b basis, rows and columns in the canonical composition order.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .compositions import (
    complement,
    compositions,
    format_composition,
    index_of,
    reverse,
    transpose,
    z_coefficient,
)
from .graded import fmt_rational
from .linalg import Matrix
from .nsym import NSymElem
from .qsym import QSymElem

SPACES = {"nsym": NSymElem, "qsym": QSymElem}
NAMED = ("K", "eps", "z", "J_psi", "J_rho", "J_omega", "L_psi", "L_phi")


@dataclass(frozen=True)
class MatrixConfig:
    max_degree: int = 12

    @classmethod
    def from_env(cls):
        raw = os.environ.get("NSYMKIT_MAX_DEGREE")
        return cls(int(raw)) if raw else cls()


class DegreeCapError(ValueError):
    pass


@dataclass(frozen=True)
class TransitionMatrix:
    n: int
    matrix: Matrix
    name: str = ""

    @property
    def index(self):
        return compositions(self.n)

    def __eq__(self, other):
        return isinstance(other, TransitionMatrix) and self.n == other.n and self.matrix == other.matrix

    def __getitem__(self, ab):
        a, b = ab
        idx = index_of(self.n)
        return self.matrix[idx[tuple(a)], idx[tuple(b)]]

    def rows(self):
        return self.matrix.rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        labels = [format_composition(a) for a in self.index]
        w.writerow([""] + labels)
        for label, row in zip(labels, self.matrix.rows):
            w.writerow([label] + [fmt_rational(x) for x in row])
        return buf.getvalue()

    def to_json(self):
        labels = [list(a) for a in self.index]
        return {
            "name": self.name,
            "n": self.n,
            "rows": labels,
            "cols": labels,
            "entries": [[fmt_rational(x) for x in row] for row in self.matrix.rows],
        }

    def pretty(self) -> str:
        labels = [format_composition(a) for a in self.index]
        cells = [[fmt_rational(x) for x in row] for row in self.matrix.rows]
        width = max([len(s) for s in labels] + [len(c) for row in cells for c in row])
        lw = max(len(s) for s in labels)
        out = [" " * lw + " " + " ".join(s.rjust(width) for s in labels)]
        for label, row in zip(labels, cells):
            out.append(label.rjust(lw) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(out)


def _check_n(n, config):
    if n < 1:
        raise ValueError("n must be at least 1")
    cap = (config or MatrixConfig.from_env()).max_degree
    if n > cap:
        raise DegreeCapError(f"n={n} exceeds the degree cap {cap}")


def cob_matrix(space: str, frm: str, to: str, n: int, config: MatrixConfig = None) -> TransitionMatrix:
    """M(frm, to) in the given space, built from conversions of basis vectors."""
    _check_n(n, config)
    try:
        cls = SPACES[space.lower()]
    except KeyError:
        raise ValueError(f"unknown space {space!r}; use nsym or qsym") from None
    frm, to = cls.normalize_basis(frm), cls.normalize_basis(to)
    comps = compositions(n)
    rows = []
    for a in comps:
        image = cls.basis_vector(frm, a).to(to)
        rows.append([image[b] for b in comps])
    return TransitionMatrix(n, Matrix(rows), f"M({frm},{to})")


def _perm(n, f):
    comps = compositions(n)
    return Matrix([[1 if f(a) == b else 0 for b in comps] for a in comps])


def named_matrix(name: str, n: int, config: MatrixConfig = None) -> TransitionMatrix:
    _check_n(n, config)
    comps = compositions(n)
    if name == "K":
        return TransitionMatrix(n, cob_matrix("qsym", "F", "M", n, config).matrix, "K")
    if name == "eps":
        m = Matrix.diagonal([(-1) ** (n - len(a)) for a in comps])
    elif name == "z":
        m = Matrix.diagonal([z_coefficient(a) for a in comps])
    elif name == "J_psi":
        m = _perm(n, complement)
    elif name == "J_rho":
        m = _perm(n, reverse)
    elif name == "J_omega":
        m = _perm(n, transpose)
    elif name == "L_psi":
        m = cob_matrix("qsym", "Psi", "M", n, config).matrix
    elif name == "L_phi":
        m = cob_matrix("qsym", "Phi", "M", n, config).matrix
    else:
        raise ValueError(f"unknown named matrix {name!r}; choose from {', '.join(NAMED)}")
    return TransitionMatrix(n, m, name)


# -- identities ------------------------------------------------------------------------------

@dataclass
class IdentityResult:
    name: str
    statement: str
    passed: bool
    status: str = "printed"  # printed | corrected | misprint
    offending: Optional[tuple] = None  # (row alpha, col beta, lhs, rhs)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        tag = "" if self.status == "printed" else f" [{self.status}]"
        detail = ""
        if self.offending:
            a, b, x, y = self.offending
            detail = f"  first mismatch at ({format_composition(a)},{format_composition(b)}): {fmt_rational(x)} != {fmt_rational(y)}"
        return f"{status} {self.name}: {self.statement}{tag}{detail}"


@dataclass
class IdentityReport:
    n: int
    results: list = field(default_factory=list)

    @property
    def passed(self):
        """Every identity that should hold does; misprints are reported, not counted."""
        return not self.failures()

    def failures(self):
        return [r for r in self.results if not r.passed and r.status != "misprint"]

    def misprints(self):
        return [r for r in self.results if r.status == "misprint"]

    def misprints_refuted(self):
        return [r for r in self.misprints() if not r.passed]


class _Env:
    """Lazy cache of the matrices an identity refers to."""

    def __init__(self, n):
        self.n = n
        self._cache = {}

    def get(self, key):
        if key not in self._cache:
            if key in NAMED:
                m = named_matrix(key, self.n).matrix
            elif key == "I":
                m = Matrix.identity(len(compositions(self.n)))
            elif key == "z^-1":
                m = Matrix.diagonal([Fraction(1, z_coefficient(a)) for a in compositions(self.n)])
            else:
                space, frm, to = key
                m = cob_matrix(space, frm, to, self.n).matrix
            self._cache[key] = m
        return self._cache[key]

    def __call__(self, *keys):
        out = self.get(keys[0])
        for k in keys[1:]:
            out = out @ self.get(k)
        return out


def _q(a, b):
    return ("qsym", a, b)


def _ns(a, b):
    return ("nsym", a, b)


def _identities(E: _Env):
    """(name, statement, lhs thunk, rhs thunk, status).

    status is "printed" for identities as stated, "misprint" for a stated
    form with z, eps or J_rho misplaced, and "corrected" for its repair.
    """
    n = E.n
    K, eps = E.get("K"), E.get("eps")
    Kt = K.T
    Jp, Jr = E.get("J_psi"), E.get("J_rho")
    zi = E.get("z^-1")
    Lf, Lp = E.get("L_phi"), E.get("L_psi")

    yield "K^-1", "K^-1 = M(M,F) = eps K eps", lambda: K.inverse(), lambda: eps @ K @ eps, "printed"
    yield "M(M,F)", "M(M,F) = eps K eps", lambda: E(_q("M", "F")), lambda: eps @ K @ eps, "printed"
    yield "M(r,h)", "M(r,h) = eps K^t eps", lambda: E(_ns("R", "H")), lambda: eps @ Kt @ eps, "printed"
    yield "M(h,r)", "M(h,r) = K^t", lambda: E(_ns("H", "R")), lambda: Kt, "printed"
    yield "(i)", "M(M,For) = eps K eps J_psi K", lambda: E(_q("M", "For")), lambda: eps @ K @ eps @ Jp @ K, "printed"
    yield "(i')", "M(For,M) = eps K eps J_psi K", lambda: E(_q("For", "M")), lambda: eps @ K @ eps @ Jp @ K, "printed"
    yield "(ii)", "M(For,F) = eps K eps J_psi", lambda: E(_q("For", "F")), lambda: eps @ K @ eps @ Jp, "printed"
    yield "(iii)", "M(F,For) = J_psi K", lambda: E(_q("F", "For")), lambda: Jp @ K, "printed"
    yield "(iv)", "M(h,e) = K^t J_psi eps K^t eps", lambda: E(_ns("H", "E")), lambda: Kt @ Jp @ eps @ Kt @ eps, "printed"
    yield "(iv')", "M(e,h) = K^t J_psi eps K^t eps", lambda: E(_ns("E", "H")), lambda: Kt @ Jp @ eps @ Kt @ eps, "printed"
    yield "(v)", "M(e,r) = K^t J_psi", lambda: E(_ns("E", "R")), lambda: Kt @ Jp, "printed"
    yield "(vi)", "M(r,e) = J_psi eps K^t eps", lambda: E(_ns("R", "E")), lambda: Jp @ eps @ Kt @ eps, "printed"

    yield "M(phi,For)", "M(phi,For) = eps L_phi", lambda: E(_q("Phi", "For")), lambda: eps @ Lf, "printed"
    yield ("M(psi,For)", "M(psi,For) = eps L_psi J_rho", lambda: E(_q("Psi", "For")),
           lambda: eps @ Lp @ Jr, "misprint")
    yield ("M(psi,For)", "M(psi,For) = J_rho eps L_psi J_rho", lambda: E(_q("Psi", "For")),
           lambda: Jr @ eps @ Lp @ Jr, "corrected")
    yield "M(phi,F)", "M(phi,F) = L_phi eps K eps", lambda: E(_q("Phi", "F")), lambda: Lf @ eps @ K @ eps, "printed"
    yield "M(psi,F)", "M(psi,F) = L_psi eps K eps", lambda: E(_q("Psi", "F")), lambda: Lp @ eps @ K @ eps, "printed"

    for kind, L in (("phi", Lf), ("psi", Lp)):
        b = kind.capitalize()
        yield (f"M(h,{kind})", f"M(h,{kind}) = z^-1 L_{kind}^t", lambda b=b: E(_ns("H", b)),
               lambda L=L: zi @ L.T, "misprint")
        yield (f"M(h,{kind})", f"M(h,{kind}) = L_{kind}^t z^-1", lambda b=b: E(_ns("H", b)),
               lambda L=L: L.T @ zi, "corrected")
    yield "M(e,phi)", "M(e,phi) = eps z^-1 L_phi^t", lambda: E(_ns("E", "Phi")), lambda: eps @ zi @ Lf.T, "misprint"
    yield "M(e,phi)", "M(e,phi) = L_phi^t eps z^-1", lambda: E(_ns("E", "Phi")), lambda: Lf.T @ eps @ zi, "corrected"
    yield ("M(e,psi)", "M(e,psi) = eps z^-1 J_rho L_psi^t", lambda: E(_ns("E", "Psi")),
           lambda: eps @ zi @ Jr @ Lp.T, "misprint")
    yield ("M(e,psi)", "M(e,psi) = J_rho L_psi^t J_rho eps z^-1", lambda: E(_ns("E", "Psi")),
           lambda: Jr @ Lp.T @ Jr @ eps @ zi, "corrected")
    for kind, L in (("phi", Lf), ("psi", Lp)):
        b = kind.capitalize()
        yield (f"M(r,{kind})", f"M(r,{kind}) = z^-1 L_{kind} eps K eps", lambda b=b: E(_ns("R", b)),
               lambda L=L: zi @ L @ eps @ K @ eps, "misprint")
        yield (f"M(r,{kind})", f"M(r,{kind}) = z^-1 eps K^t eps L_{kind}^t", lambda b=b: E(_ns("R", b)),
               lambda L=L: zi @ eps @ Kt @ eps @ L.T, "misprint")
        yield (f"M(r,{kind})", f"M(r,{kind}) = eps K^t eps L_{kind}^t z^-1", lambda b=b: E(_ns("R", b)),
               lambda L=L: eps @ Kt @ eps @ L.T @ zi, "corrected")

    # duality: M(A,B) = M(b,a)^t for the dual pairs (F,r), (M,h), (For,e)
    dual = {"F": "R", "M": "H", "For": "E"}
    for A in dual:
        for B in dual:
            if A != B:
                yield (f"dual {A},{B}", f"M({A},{B}) = M({dual[B].lower()},{dual[A].lower()})^t",
                       lambda A=A, B=B: E(_q(A, B)), lambda A=A, B=B: E(_ns(dual[B], dual[A])).T, "printed")
    # power sums pair up to z: <Psi_a, psi_b> = z_a delta
    for kind in ("Psi", "Phi"):
        yield (f"dual {kind},M", f"M({kind},M) = z M(h,{kind.lower()})^t",
               lambda k=kind: E(_q(k, "M")), lambda k=kind: E("z") @ E(_ns("H", k)).T, "printed")

    for f in ("J_psi", "J_rho", "J_omega"):
        J = E.get(f)
        yield f"{f}^2", f"{f}^2 = I", lambda J=J: J @ J, lambda: E.get("I"), "printed"
        yield f"{f}^t", f"{f}^t = {f}", lambda J=J: J.T, lambda J=J: J, "printed"
    size = len(compositions(n))
    anti = Matrix([[1 if i + j == size - 1 else 0 for j in range(size)] for i in range(size)])
    yield "J_psi antidiagonal", "J_psi = antidiagonal permutation", lambda: Jp, lambda: anti, "printed"
    yield "M(phi,psi)", "M(phi,psi) = L_phi L_psi^-1", lambda: E(_q("Phi", "Psi")), lambda: Lf @ Lp.inverse(), "printed"


def check_identities(n: int) -> IdentityReport:
    """Evaluate every identity exactly at degree n.

    Stated forms that misplace z, eps or J_rho are reported next to their
    corrected forms and do not affect ``passed``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    E = _Env(n)
    comps = compositions(n)
    report = IdentityReport(n)
    for name, statement, lhs, rhs, status in _identities(E):
        a, b = lhs(), rhs()
        diff = a.first_difference(b)
        offending = None if diff is None else (comps[diff[0]], comps[diff[1]], diff[2], diff[3])
        report.results.append(IdentityResult(name, statement, diff is None, status, offending))
    return report
