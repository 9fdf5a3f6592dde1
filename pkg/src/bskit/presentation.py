"""The HNN datum defining a generalized Baumslag-Solitar group over Z^n.

Convention, fixed once for every module: the stable relation is

    t x^{B z} t^{-1} = x^{A z}        (for all z in Z^n)

so that for n = 1 the classical group BS(p, q) = <x, t | x^p = t x^q t^-1>
is the datum A = (p), B = (q).
"""

from __future__ import annotations

from fractions import Fraction

from .arith import (ConfigurationError, IntMatrix, Lattice, rat_identity,
                    rat_inverse, rat_mul, rat_rows)


class GroupSpec:
    """Validated HNN datum (n, A, B) and its derived constants.

    Immutable after construction (the power cache is internal memoization
    only); safe to share between tasks.
    """

    def __init__(self, A: IntMatrix, B: IntMatrix):
        if A.n != B.n:
            raise ConfigurationError(
                f"dimension mismatch: A is {A.n}x{A.n}, B is {B.n}x{B.n}")
        if A.det == 0 or B.det == 0:
            raise ConfigurationError(
                f"HNN matrices must be nonsingular: det A = {A.det}, "
                f"det B = {B.det}")
        self.n = A.n
        self.A = A
        self.B = B
        self.det_a = abs(A.det)
        self.det_b = abs(B.det)
        self.lattice_a = Lattice(A)
        self.lattice_b = Lattice(B)
        self.residues_a = self.lattice_a.residues()
        self.residues_b = self.lattice_b.residues()
        # Lambda = A B^-1 generates the Z-action on the rational span.
        self.lam = rat_mul(rat_rows(A), rat_inverse(B))
        self.lam_inv = rat_mul(rat_rows(B), rat_inverse(A))
        self._lam_pows = {0: rat_identity(self.n),
                          1: self.lam, -1: self.lam_inv}

    def lam_pow(self, k: int):
        """Exact rational matrix Lambda^k, memoized per exponent."""
        cached = self._lam_pows.get(k)
        if cached is None:
            step = self.lam if k > 0 else self.lam_inv
            cached = rat_mul(self.lam_pow(k - (1 if k > 0 else -1)), step)
            self._lam_pows[k] = cached
        return cached

    @property
    def lam_scalar(self) -> Fraction:
        """Lambda as a fraction; only meaningful for n = 1."""
        if self.n != 1:
            raise ConfigurationError("lam_scalar requires n = 1")
        return self.lam[0][0]

    def tree_degree(self) -> int:
        """Vertex degree of the Bass-Serre tree: |det A| + |det B|."""
        return self.det_a + self.det_b

    def __repr__(self) -> str:
        return f"GroupSpec(n={self.n}, A={self.A}, B={self.B})"


def make_bs(p: int, q: int) -> GroupSpec:
    """BS(p, q) = <x, t | x^p = t x^q t^-1> as a 1-dimensional datum."""
    if p == 0 or q == 0:
        raise ConfigurationError(f"BS parameters must be nonzero: ({p}, {q})")
    return GroupSpec(IntMatrix.scalar(p), IntMatrix.scalar(q))


def make_matrix_group(A, B) -> GroupSpec:
    """General datum from two nonsingular integer matrices of equal size."""
    if not isinstance(A, IntMatrix):
        A = IntMatrix.from_rows(A)
    if not isinstance(B, IntMatrix):
        B = IntMatrix.from_rows(B)
    return GroupSpec(A, B)


def spec_from_dict(data: dict) -> GroupSpec:
    """Build a GroupSpec from the {"n": ..., "A": ..., "B": ...} schema."""
    try:
        n = int(data["n"])
        A = IntMatrix.from_rows(data["A"])
        B = IntMatrix.from_rows(data["B"])
    except (KeyError, TypeError) as exc:
        raise ConfigurationError(f"bad group file: {exc}") from exc
    if A.n != n:
        raise ConfigurationError(
            f"declared dimension n={n} does not match matrix size {A.n}")
    return make_matrix_group(A, B)
