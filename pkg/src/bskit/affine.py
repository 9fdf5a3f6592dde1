"""The affine image Z x Q^n of the group, and the homomorphism into it.

An AffineElement is a pair (k, a): k the height (t-exponent sum) and a
the rational translation part.  Composition is the semidirect-product law

    (k, a) * (k', a') = (k + k', a + Lambda^k a'),   Lambda = A B^-1.

All coordinates stay exact; floats enter only in the haagerup module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import QVector, rat_apply
from .presentation import GroupSpec
from .words import NormalForm, X


@dataclass(frozen=True)
class AffineElement:
    """Element (k, a) of the semidirect product Z x Q^n."""

    k: int
    a: QVector  # tuple[Fraction, ...]

    @property
    def is_identity(self) -> bool:
        return self.k == 0 and not any(self.a)

    def __str__(self) -> str:
        coords = ", ".join(str(x) for x in self.a)
        return f"({self.k}; {coords})"


def aff_identity(n: int) -> AffineElement:
    return AffineElement(0, (Fraction(0),) * n)


def aff_compose(e1: AffineElement, e2: AffineElement,
                spec: GroupSpec) -> AffineElement:
    return AffineElement(e1.k + e2.k,
                         tuple(x + y for x, y in
                               zip(e1.a, rat_apply(spec.lam_pow(e1.k), e2.a))))


def aff_invert(e: AffineElement, spec: GroupSpec) -> AffineElement:
    neg = rat_apply(spec.lam_pow(-e.k), e.a)
    return AffineElement(-e.k, tuple(-x for x in neg))


def j_affine(w, spec: GroupSpec) -> AffineElement:
    """Image of a word: identity on x-letters' lattice, t to the Z-generator.

    Folds x^z -> (0, z) and t^eps -> (eps, 0) through the composition law,
    left to right, tracking the running height so each letter costs one
    memoized Lambda-power application.
    """
    letters = w.letters() if isinstance(w, NormalForm) else w
    k = 0
    a = [Fraction(0)] * spec.n
    for letter in letters:
        if isinstance(letter, X):
            lam_k = spec.lam_pow(k)
            shift = rat_apply(lam_k, letter.z)
            for i in range(spec.n):
                a[i] += shift[i]
        else:
            k += letter.eps
    return AffineElement(k, tuple(a))
