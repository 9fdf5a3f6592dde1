"""Tree cocycles, kernel positivity certificates, and proper witnesses.

The edge cocycle b(gamma) is the signed indicator of the geodesic from
the base vertex to gamma v; its squared norm is exactly the tree
distance, which makes exp(-s d) a Schoenberg kernel.  For n = 1 with
positive ratio p/q an explicit affine witness lives on the hyperbolic
upper half-plane, where (k, a) acts by z -> lambda^k z + a.

Floating point enters only here, in Gram matrices and hyperbolic
distances; every input to those is exact up to the final evaluation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .affine import AffineElement, j_affine
from .presentation import GroupSpec
from .tree import BASE, Vertex, act, distance, geodesic
from .words import NormalForm, britton_reduce


class UnsupportedWitnessError(RuntimeError):
    """No explicit affine witness in this regime; profile-only evidence."""


# ---------------------------------------------------------------------------
# The tree cocycle

@dataclass(frozen=True)
class CocycleVector:
    """Finite signed edge set, keyed by canonical parent-to-child edges.

    Reversing an edge negates its coefficient; the canonical orientation
    is parent -> child in the rooted tree, so a map comparison decides
    equality of cocycle values.
    """

    coefficients: tuple  # sorted tuple of ((parent, child), coeff)

    @staticmethod
    def from_dict(d: dict) -> "CocycleVector":
        items = tuple(sorted(((e, c) for e, c in d.items() if c != 0),
                             key=lambda item: (len(item[0][1]), str(item[0][1]),
                                               str(item[0][0]))))
        return CocycleVector(items)

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def norm_sq(self) -> int:
        return sum(c * c for _, c in self.coefficients)

    def __add__(self, other: "CocycleVector") -> "CocycleVector":
        d = self.as_dict()
        for e, c in other.coefficients:
            d[e] = d.get(e, 0) + c
        return CocycleVector.from_dict(d)

    def __neg__(self) -> "CocycleVector":
        return CocycleVector.from_dict({e: -c for e, c in self.coefficients})


def _canonical_edge(u: Vertex, w: Vertex):
    """Orient an adjacent pair as (parent, child), returning the sign."""
    if len(w) == len(u) + 1:
        return (u, w), 1
    if len(u) == len(w) + 1:
        return (w, u), -1
    raise ValueError(f"vertices are not adjacent: {u} / {w}")


def cocycle(gamma, spec: GroupSpec) -> CocycleVector:
    """b(gamma): signed indicator of the geodesic from v to gamma v."""
    path = geodesic(BASE, act(gamma, BASE, spec))
    d: dict = {}
    for u, w in zip(path, path[1:]):
        edge, sign = _canonical_edge(u, w)
        d[edge] = d.get(edge, 0) + sign
    return CocycleVector.from_dict(d)


def translate_cocycle(gamma, cv: CocycleVector,
                      spec: GroupSpec) -> CocycleVector:
    """gamma . b: relabel each edge (u, w) to (gamma u, gamma w)."""
    gamma_nf = britton_reduce(gamma, spec)
    d: dict = {}
    for (u, w), c in cv.coefficients:
        edge, sign = _canonical_edge(act(gamma_nf, u, spec),
                                     act(gamma_nf, w, spec))
        d[edge] = d.get(edge, 0) + sign * c
    return CocycleVector.from_dict(d)


def cocycle_identity_check(gamma, delta, spec: GroupSpec) -> bool:
    """Exact check of the 1-cocycle law b(gd) = b(g) + g.b(d)."""
    from .words import nf_multiply
    g = britton_reduce(gamma, spec)
    d = britton_reduce(delta, spec)
    lhs = cocycle(nf_multiply(g, d, spec), spec)
    rhs = cocycle(g, spec) + translate_cocycle(g, cocycle(d, spec), spec)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Gram certificates

@dataclass
class GramReport:
    """Kernel matrix over a finite element sample with its PSD verdict."""

    kernel: str
    s: float
    element_names: list
    matrix: np.ndarray
    min_eigenvalue: float
    tolerance: float

    @property
    def psd(self) -> bool:
        return self.min_eigenvalue >= -self.tolerance

    def to_json(self) -> str:
        return json.dumps({
            "kernel": self.kernel,
            "s": self.s,
            "elements": self.element_names,
            "dimension": len(self.element_names),
            "min_eigenvalue": self.min_eigenvalue,
            "tolerance": self.tolerance,
            "psd": self.psd,
        }, indent=2)


def _gram_report(kernel: str, s: float, elements, dist_matrix) -> GramReport:
    m = np.exp(-s * np.asarray(dist_matrix, dtype=float))
    min_eig = float(np.linalg.eigvalsh(m)[0])
    tol = 1e-8 * len(elements)
    return GramReport(kernel, s, [str(nf) for nf in elements], m, min_eig, tol)


def _require_distinct(elements) -> list:
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise ValueError("duplicate elements make the Gram report ill-posed")
    return elements


def tree_gram(elements, s: float, spec: GroupSpec) -> GramReport:
    """PSD certificate for K_ij = exp(-s d(g_i v, g_j v)) on the tree."""
    if s <= 0:
        raise ValueError("kernel parameter s must be positive")
    elements = _require_distinct(elements)
    verts = [act(nf, BASE, spec) for nf in elements]
    dm = [[distance(u, w) for w in verts] for u in verts]
    return _gram_report("tree", s, elements, dm)


# ---------------------------------------------------------------------------
# Hyperbolic witness (n = 1, lambda > 0)

@dataclass(frozen=True)
class HyperbolicPoint:
    """Upper half-plane point; y > 0."""

    x: float
    y: float

    def __post_init__(self):
        if not self.y > 0:
            raise ValueError(f"not in the upper half-plane: y = {self.y}")


HYPERBOLIC = "hyperbolic"
ISOMETRIC = "isometric"
PROFILE_ONLY = "profile-only"


def witness_regime(spec: GroupSpec) -> str:
    """Which explicit affine witness (if any) this datum supports.

    n = 1 with lambda > 0: half-plane orbit.  n = 1 with lambda = -1:
    the linear part is isometric, use |k| + |a|.  Anything else is
    profile-only (tree kernels and properness profiles still apply).
    """
    if spec.n == 1:
        lam = spec.lam_scalar
        if lam > 0:
            return HYPERBOLIC
        if lam == -1:
            return ISOMETRIC
    return PROFILE_ONLY


def hyperbolic_orbit(e: AffineElement, spec: GroupSpec) -> HyperbolicPoint:
    """Orbit of the base point (0, 1) under z -> lambda^k z + a."""
    if spec.n != 1 or spec.lam_scalar <= 0:
        raise UnsupportedWitnessError(
            "half-plane orbit needs n = 1 and lambda > 0; "
            "use the profile-only tools instead")
    lam = spec.lam_scalar
    return HyperbolicPoint(float(e.a[0]), float(lam ** e.k))


def hyperbolic_distance(p: HyperbolicPoint, q: HyperbolicPoint) -> float:
    arg = 1.0 + ((q.x - p.x) ** 2 + (q.y - p.y) ** 2) / (2.0 * p.y * q.y)
    return math.acosh(max(arg, 1.0))


# ---------------------------------------------------------------------------
# Combined witness

def affine_displacement(e: AffineElement, spec: GroupSpec) -> float:
    """Displacement of the affine coordinate under the active regime."""
    regime = witness_regime(spec)
    if regime == HYPERBOLIC:
        return hyperbolic_distance(HyperbolicPoint(0.0, 1.0),
                                   hyperbolic_orbit(e, spec))
    if regime == ISOMETRIC:
        return float(abs(e.k) + sum(abs(x) for x in e.a))
    raise UnsupportedWitnessError(
        f"no explicit affine witness for this datum ({spec!r}); "
        "tree_gram and properness profiles remain available")


def witness(gamma, s: float, spec: GroupSpec) -> float:
    """psi_s(gamma) = exp(-s (d_T(v, gamma v) + affine displacement))."""
    nf = britton_reduce(gamma, spec)
    d_tree = nf.t_length
    return math.exp(-s * (d_tree + affine_displacement(j_affine(nf, spec),
                                                       spec)))


def _pairwise_displacement(elements, spec: GroupSpec):
    regime = witness_regime(spec)
    affs = [j_affine(nf, spec) for nf in elements]
    if regime == HYPERBOLIC:
        pts = [hyperbolic_orbit(e, spec) for e in affs]
        return [[hyperbolic_distance(p, q) for q in pts] for p in pts]
    if regime == ISOMETRIC:
        return [[float(abs(e.k - f.k)
                       + sum(abs(x - y) for x, y in zip(e.a, f.a)))
                 for f in affs] for e in affs]
    raise UnsupportedWitnessError(
        "no explicit affine witness for this datum; profile-only")


def witness_gram(elements, s: float, spec: GroupSpec) -> GramReport:
    """PSD certificate for the product kernel tree x affine displacement."""
    if s <= 0:
        raise ValueError("kernel parameter s must be positive")
    elements = _require_distinct(elements)
    verts = [act(nf, BASE, spec) for nf in elements]
    aff = _pairwise_displacement(elements, spec)
    dm = [[distance(verts[i], verts[j]) + aff[i][j]
           for j in range(len(elements))] for i in range(len(elements))]
    return _gram_report("witness", s, elements, dm)


def c0_profile(lmax: int, s: float, spec: GroupSpec, *, ball=None) -> list:
    """Rows (L, max psi_s over the sphere, argmax element rendering).

    The maxima trending to zero is the desk-scale shadow of the witness
    being a C0 function.
    """
    from .embedding import enumerate_ball
    if ball is None:
        ball = enumerate_ball(lmax, spec)
    rows = []
    for L, sphere in enumerate(ball.spheres):
        best, best_nf = None, None
        for nf in sphere:
            val = witness(nf, s, spec)
            if best is None or val > best:
                best, best_nf = val, nf
        rows.append((L, best, str(best_nf) if best_nf is not None else ""))
    return rows


def c0_profile_csv(rows) -> str:
    lines = ["L,max_witness,argmax"]
    for L, val, name in rows:
        v = "" if val is None else format(val, ".12g")
        lines.append(f'{L},{v},"{name}"')
    return "\n".join(lines) + "\n"
