"""The Bass-Serre tree of the HNN splitting.

Vertices are left cosets w G named intrinsically by canonical transversal
words x^{r1} t^{e1} x^{r2} t^{e2} ... x^{rm} t^{em}, with r_i drawn from
the residue system of A when e_i = +1 and of B when e_i = -1.  The base
vertex (empty word) is the coset G itself.  The tree is never stored
globally; balls are materialized lazily by radius.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .arith import IntVector
from .presentation import GroupSpec
from .words import NormalForm, T, Word, X, britton_reduce


class ResourceBoundError(RuntimeError):
    """Requested radius exceeds the configured resource bound."""


DEFAULT_MAX_RADIUS = 12


def max_ball_bound(default: int = DEFAULT_MAX_RADIUS) -> int:
    """Resource bound for ball enumeration; BSK_MAX_BALL overrides."""
    env = os.environ.get("BSK_MAX_BALL")
    return int(env) if env else default


@dataclass(frozen=True)
class Vertex:
    """Canonical coset name: tuple of syllables (eps, residue)."""

    syllables: tuple  # tuple[(eps, IntVector), ...]

    def __len__(self) -> int:
        return len(self.syllables)

    def coset_word(self) -> Word:
        word: Word = []
        for eps, r in self.syllables:
            if any(r):
                word.append(X(r))
            word.append(T(eps))
        return word

    def prefix(self, length: int) -> "Vertex":
        return Vertex(self.syllables[:length])

    def __str__(self) -> str:
        if not self.syllables:
            return "G"
        parts = []
        for eps, r in self.syllables:
            t = "t" if eps == 1 else "t^-1"
            parts.append(f"{_render_r(r)}·{t}" if any(r) else t)
        return " | ".join(parts)


def _render_r(r: IntVector) -> str:
    if len(r) == 1:
        return f"x^{r[0]}"
    return "v[" + ",".join(map(str, r)) + "]"


BASE = Vertex(())

EdgePath = list  # list[Vertex], consecutive entries adjacent


def vertex_of(w, spec: GroupSpec) -> Vertex:
    """Canonical vertex naming the coset w G.

    The canonical Britton form already carries each x-power rewritten as
    x^g t = x^r t x^{Bh} (g = A h + r) or x^g t^-1 = x^r t^-1 x^{Ah}
    (g = B h + r) with the carry pushed rightward; dropping the final
    x-power (absorbed into G) reads the vertex name straight off.
    """
    nf = britton_reduce(w, spec)
    if not nf.syllables:
        return BASE
    # the canonical form is x^{r1} t^{e1} x^{r2} t^{e2} ... x^{rm} t^{em} x^z,
    # so the residues r_i sit in head and in the z of the preceding syllable
    residues = [nf.head] + [z for _, z in nf.syllables[:-1]]
    return Vertex(tuple((eps, r) for (eps, _), r
                        in zip(nf.syllables, residues)))


def act(gamma, u: Vertex, spec: GroupSpec) -> Vertex:
    """The tree action: canonical vertex of (gamma * u-word) G."""
    gamma_nf = britton_reduce(gamma, spec)
    return vertex_of(gamma_nf.letters() + u.coset_word(), spec)


def neighbors(u: Vertex, spec: GroupSpec) -> list:
    """The |det A| + |det B| adjacent vertices, up-edges first.

    Up-neighbors are u x^r t G for r in the A-residues, down-neighbors
    u x^r t^-1 G for r in the B-residues; exactly one of them is the
    parent of u (reached by the pinch in vertex_of).
    """
    base = u.coset_word()
    out = []
    for r in spec.residues_a.representatives:
        tail: Word = [X(r)] if any(r) else []
        out.append(vertex_of(base + tail + [T(1)], spec))
    for r in spec.residues_b.representatives:
        tail = [X(r)] if any(r) else []
        out.append(vertex_of(base + tail + [T(-1)], spec))
    return out


def lcp_length(u: Vertex, w: Vertex) -> int:
    k = 0
    for a, b in zip(u.syllables, w.syllables):
        if a != b:
            break
        k += 1
    return k


def distance(u: Vertex, w: Vertex) -> int:
    """Tree distance |u| + |w| - 2 lcp(u, w) on canonical names."""
    return len(u) + len(w) - 2 * lcp_length(u, w)


def geodesic(u: Vertex, w: Vertex) -> EdgePath:
    """The unique embedded path from u to w (list of vertices)."""
    k = lcp_length(u, w)
    path = [u.prefix(m) for m in range(len(u), k, -1)]
    path.extend(w.prefix(m) for m in range(k, len(w) + 1))
    return path


def ball(center: Vertex, radius: int, spec: GroupSpec, *,
         max_radius: int | None = None) -> list:
    """All vertices within the given radius, BFS order, sorted per level."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    bound = max_radius if max_radius is not None else max_ball_bound()
    if radius > bound:
        raise ResourceBoundError(
            f"radius {radius} exceeds bound {bound} (set BSK_MAX_BALL)")
    seen = {center}
    frontier = [center]
    out = [center]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for w in neighbors(u, spec):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        nxt.sort(key=str)
        out.extend(nxt)
        frontier = nxt
    return out


def tree_edges(vertices) -> list:
    """Parent-child pairs among the given vertices (canonical orientation)."""
    vset = set(vertices)
    edges = []
    for w in vertices:
        if len(w) >= 1:
            parent = w.prefix(len(w) - 1)
            if parent in vset:
                edges.append((parent, w))
    return edges


def to_dot(vertices, edges) -> str:
    """DOT text for a finite tree window."""
    ids = {u: i for i, u in enumerate(sorted(vertices, key=lambda v: (len(v), str(v))))}
    lines = ["graph bass_serre_tree {", "  node [shape=box];"]
    for u, i in ids.items():
        lines.append(f'  n{i} [label="{u}"];')
    for a, b in sorted(edges, key=lambda e: (ids[e[0]], ids[e[1]])):
        eps = b.syllables[len(a)][0] if len(b) == len(a) + 1 else 0
        style = "" if eps >= 0 else " [style=dashed]"
        lines.append(f"  n{ids[a]} -- n{ids[b]}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edges_csv(edges) -> str:
    """CSV rows (parent, child, direction, residue) for parent-child edges."""
    lines = ["parent,child,direction,residue"]
    for a, b in edges:
        eps, r = b.syllables[-1]
        res = ";".join(map(str, r))
        lines.append(f'"{a}","{b}",{eps},{res}')
    return "\n".join(lines) + "\n"
