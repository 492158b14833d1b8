"""Dense exact-rational matrices.

Entries are ``Fraction``.  Products skip zero entries, which matters here:
most transition matrices are triangular and sparse.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class SingularMatrixError(ArithmeticError):
    pass


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        if any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values):
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n, m=None):
        return cls([[ZERO] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @property
    def T(self):
        return Matrix([list(c) for c in zip(*self.rows)])

    def __matmul__(self, other):
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        orows = other.rows
        out = []
        for row in self.rows:
            acc = [ZERO] * m
            for t, a in enumerate(row):
                if a:
                    orow = orows[t]
                    for j in range(m):
                        b = orow[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return Matrix(out)

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c):
        c = Fraction(c)
        return Matrix([[c * a for a in r] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def first_difference(self, other):
        """(i, j, self[i,j], other[i,j]) for the first mismatch, or None."""
        for i, (r, s) in enumerate(zip(self.rows, other.rows)):
            for j, (a, b) in enumerate(zip(r, s)):
                if a != b:
                    return i, j, a, b
        return None

    def inverse(self):
        return Matrix(solve(self.rows, Matrix.identity(len(self.rows)).rows))

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"


def solve(a, b):
    """Solve A X = B exactly by Gauss-Jordan elimination over the rationals.

    ``a`` is n x n, ``b`` is n x m (lists of rows).  Returns X as rows.
    """
    n = len(a)
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]] for i in range(n)]
    width = len(aug[0]) if aug else 0
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(f"singular at column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        p = prow[col]
        if p != 1:
            inv = 1 / p
            prow = aug[col] = [x * inv for x in prow]
        for r in range(n):
            if r != col:
                f = aug[r][col]
                if f:
                    row = aug[r]
                    for j in range(col, width):
                        if prow[j]:
                            row[j] -= f * prow[j]
    return [row[n:] for row in aug]
