"""Exact integer/rational linear algebra and lattice residue systems.

Everything in this module is exact: arbitrary-precision integers and
``fractions.Fraction``.  No floating point anywhere; coset canonicalization
and the rewriting engine built on top of it are exact-equality algorithms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


class ConfigurationError(ValueError):
    """Invalid group datum: singular matrix, bad dimension, zero parameter."""


IntVector = tuple  # tuple[int, ...]
QVector = tuple    # tuple[Fraction, ...]
QMatrix = tuple    # tuple[tuple[Fraction, ...], ...]


def zero_vector(n: int) -> IntVector:
    return (0,) * n


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


@dataclass(frozen=True)
class IntMatrix:
    """A square integer matrix, stored as a tuple of row tuples."""

    rows: tuple

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ConfigurationError(f"matrix is not square: {rows!r}")
        return IntMatrix(rows)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n))
                               for i in range(n)))

    @staticmethod
    def scalar(m: int) -> "IntMatrix":
        return IntMatrix(((int(m),),))

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def det(self) -> int:
        # Bareiss fraction-free elimination; exact for any size.
        a = [list(r) for r in self.rows]
        n = len(a)
        sign = 1
        prev = 1
        for i in range(n - 1):
            if a[i][i] == 0:
                for j in range(i + 1, n):
                    if a[j][i]:
                        a[i], a[j] = a[j], a[i]
                        sign = -sign
                        break
                else:
                    return 0
            for j in range(i + 1, n):
                for k in range(i + 1, n):
                    a[j][k] = (a[j][k] * a[i][i] - a[j][i] * a[i][k]) // prev
                a[j][i] = 0
            prev = a[i][i]
        return sign * a[n - 1][n - 1]

    def apply(self, z: IntVector) -> IntVector:
        if len(z) != self.n:
            raise ConfigurationError(
                f"dimension mismatch: matrix is {self.n}x{self.n}, "
                f"vector has {len(z)} coordinates")
        return tuple(sum(r[j] * z[j] for j in range(self.n)) for r in self.rows)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ConfigurationError("dimension mismatch in matrix product")
        n = self.n
        return IntMatrix(tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n))
                  for j in range(n))
            for i in range(n)))

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]"
                               for r in self.rows) + "]"


# ---------------------------------------------------------------------------
# Rational matrices (tuples of Fraction rows)

def rat_rows(M: IntMatrix) -> QMatrix:
    return tuple(tuple(Fraction(x) for x in r) for r in M.rows)


def rat_identity(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n))
                 for i in range(n))


def rat_mul(P: QMatrix, Q: QMatrix) -> QMatrix:
    n = len(P)
    return tuple(tuple(sum(P[i][k] * Q[k][j] for k in range(n))
                       for j in range(n))
                 for i in range(n))


def rat_apply(P: QMatrix, a) -> QVector:
    if len(a) != len(P):
        raise ConfigurationError("dimension mismatch in rational apply")
    return tuple(sum(r[j] * a[j] for j in range(len(r))) for r in P)


def rat_inverse(M: IntMatrix) -> QMatrix:
    """Exact inverse of a nonsingular integer matrix, by Gauss-Jordan."""
    n = M.n
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(M.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ConfigurationError(f"singular matrix: {M}")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def solve_exact(M: IntMatrix, b) -> QVector:
    """The exact rational solution h of M h = b."""
    return rat_apply(rat_inverse(M), b)


def mat_apply(M: IntMatrix, z: IntVector) -> IntVector:
    return M.apply(z)


def mat_apply_rational(P: QMatrix, a) -> QVector:
    return rat_apply(P, a)


# ---------------------------------------------------------------------------
# Hermite normal form and residue systems

def column_hnf(M: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form of a nonsingular integer matrix.

    Returns a lower-triangular H with positive diagonal, the entries left
    of each pivot reduced into [0, pivot), and H Z^n = M Z^n (only
    unimodular column operations are used).
    """
    if M.det == 0:
        raise ConfigurationError(f"singular matrix: {M}")
    n = M.n
    cols = [[M.rows[r][c] for r in range(n)] for c in range(n)]
    for i in range(n):
        while True:
            j_min = min((j for j in range(i, n) if cols[j][i] != 0),
                        key=lambda j: abs(cols[j][i]))
            cols[i], cols[j_min] = cols[j_min], cols[i]
            done = True
            for j in range(i + 1, n):
                if cols[j][i]:
                    q = cols[j][i] // cols[i][i]
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
                    if cols[j][i]:
                        done = False
            if done:
                break
        if cols[i][i] < 0:
            cols[i] = [-a for a in cols[i]]
    for i in range(n):
        for j in range(i):
            q = cols[j][i] // cols[i][i]
            if q:
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
    return IntMatrix(tuple(tuple(cols[c][r] for c in range(n))
                           for r in range(n)))


@dataclass(frozen=True)
class ResidueSystem:
    """Canonical coset representatives of M Z^n in Z^n, zero first."""

    matrix: IntMatrix
    representatives: tuple


class Lattice:
    """The sublattice M Z^n of Z^n with its canonical transversal.

    The canonical representative of z is obtained by reducing z against
    the column Hermite form of M, pivot by pivot, into the half-open
    box [0, pivot).  Immutable after construction.
    """

    def __init__(self, M: IntMatrix):
        if M.det == 0:
            raise ConfigurationError(f"singular matrix: {M}")
        self.matrix = M
        self.n = M.n
        self.hnf = column_hnf(M)
        self.index = abs(M.det)
        self._inv = rat_inverse(M)
        # fast scalar path
        self._m1 = M.rows[0][0] if M.n == 1 else None

    def reduce(self, z: IntVector) -> IntVector:
        """Canonical representative of z modulo M Z^n."""
        if self._m1 is not None:
            return (z[0] % abs(self._m1),)
        H = self.hnf.rows
        r = list(z)
        for i in range(self.n):
            k = r[i] // H[i][i]
            if k:
                for j in range(i, self.n):
                    r[j] -= k * H[j][i]
        return tuple(r)

    def solve(self, z: IntVector):
        """Integer h with M h = z, or None if z is outside the lattice."""
        if self._m1 is not None:
            q, rem = divmod(z[0], self._m1)
            return (q,) if rem == 0 else None
        h = rat_apply(self._inv, z)
        if all(x.denominator == 1 for x in h):
            return tuple(int(x) for x in h)
        return None

    def contains(self, z: IntVector) -> bool:
        return self.solve(z) is not None

    def decompose(self, z: IntVector):
        """The unique (r, h) with z = M h + r and r canonical."""
        r = self.reduce(z)
        h = self.solve(vec_sub(z, r))
        assert h is not None, "HNF reduction left a non-lattice remainder"
        return r, h

    def residues(self) -> ResidueSystem:
        H = self.hnf.rows
        reps = tuple(itertools.product(*(range(H[i][i])
                                         for i in range(self.n))))
        return ResidueSystem(self.matrix, reps)


def lattice_decompose(z: IntVector, M: IntMatrix):
    """Split z = M h + r with r the canonical residue of z mod M Z^n."""
    return Lattice(M).decompose(z)


def in_lattice(z: IntVector, M: IntMatrix) -> bool:
    """Whether M h = z has an integer solution."""
    return Lattice(M).contains(z)


def residues(M: IntMatrix) -> ResidueSystem:
    """All canonical residues of Z^n mod M Z^n; |det M| of them, zero first."""
    return Lattice(M).residues()
