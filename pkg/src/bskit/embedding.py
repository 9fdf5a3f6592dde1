"""Ball enumeration of the group and finite shadows of the embedding.

The combined map j = (tree action, affine image) is injective; over a
finite ball this becomes two elementwise checks (injectivity and the
stabilizer identity) plus sublevel-set stabilization profiles standing
in for metric properness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .affine import j_affine
from .presentation import GroupSpec
from .tree import BASE, ResourceBoundError, act, max_ball_bound
from .words import NormalForm, T, X, nf_append
from .arith import zero_vector


def default_max_length(spec: GroupSpec) -> int:
    return 12 if spec.n == 1 else 8


def generator_letters(spec: GroupSpec) -> list:
    """The letter set {x^{+-e_i}, t, t^-1} used for word-length balls."""
    letters = []
    for i in range(spec.n):
        e = tuple(int(j == i) for j in range(spec.n))
        letters.append(X(e))
        letters.append(X(tuple(-c for c in e)))
    letters.append(T(1))
    letters.append(T(-1))
    return letters


@dataclass
class GroupBall:
    """All group elements of word length <= radius, deduped by normal form.

    ``spheres[L]`` holds the elements whose minimal word length is exactly
    L; ``elements`` is the concatenation; ``index`` maps the rendered
    normal form back to the element.
    """

    radius: int
    spheres: list = field(default_factory=list)

    @property
    def elements(self) -> list:
        return [nf for sphere in self.spheres for nf in sphere]

    @property
    def index(self) -> dict:
        return {str(nf): nf for nf in self.elements}

    def __len__(self) -> int:
        return sum(len(s) for s in self.spheres)


def enumerate_ball(L: int, spec: GroupSpec, *,
                   max_length: int | None = None) -> GroupBall:
    """BFS over generator letters with normal-form deduplication."""
    if L < 0:
        raise ValueError("ball radius must be nonnegative")
    bound = (max_length if max_length is not None
             else max_ball_bound(default_max_length(spec)))
    if L > bound:
        raise ResourceBoundError(
            f"ball radius {L} exceeds bound {bound} (set BSK_MAX_BALL)")
    letters = generator_letters(spec)
    identity = NormalForm(zero_vector(spec.n), ())
    seen = {identity}
    spheres = [[identity]]
    frontier = [identity]
    for _ in range(L):
        nxt = []
        for nf in frontier:
            for letter in letters:
                ext = nf_append(nf, letter, spec)
                if ext not in seen:
                    seen.add(ext)
                    nxt.append(ext)
        nxt.sort(key=str)
        spheres.append(nxt)
        frontier = nxt
    return GroupBall(L, spheres)


@dataclass
class CheckReport:
    """Outcome of an elementwise ball check."""

    name: str
    checked: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "OK" if self.ok else "FAIL"
        return (f"{status}: {len(self.violations)} violations / "
                f"{self.checked} elements [{self.name}]")

    def to_json_dict(self) -> dict:
        return {"check": self.name, "checked": self.checked,
                "ok": self.ok, "violations": self.violations}


def check_injectivity(ball: GroupBall, spec: GroupSpec) -> CheckReport:
    """Every nontrivial element either moves the base vertex or has a
    nontrivial affine image (and fixing elements must be pure x-powers)."""
    report = CheckReport("injectivity", len(ball))
    for nf in ball.elements:
        if nf.is_identity:
            continue
        if act(nf, BASE, spec) != BASE:
            continue
        if nf.t_length != 0:
            report.violations.append(
                f"{nf}: fixes the base vertex but has t-length {nf.t_length}")
        elif j_affine(nf, spec).is_identity:
            report.violations.append(
                f"{nf}: nontrivial but invisible to both coordinates")
    return report


def check_stabilizer(ball: GroupBall, spec: GroupSpec) -> CheckReport:
    """{gamma : gamma v = v} must equal {gamma : t-length 0}, elementwise."""
    report = CheckReport("stabilizer", len(ball))
    for nf in ball.elements:
        fixes = act(nf, BASE, spec) == BASE
        in_g = nf.t_length == 0
        if fixes != in_g:
            report.violations.append(
                f"{nf}: fixes base = {fixes}, t-length = {nf.t_length}")
    return report


@dataclass
class PropernessProfile:
    """Sublevel-set counts #{d_T <= R, |k| <= R, ||a||_inf <= R} per (L, R).

    ``counts[R]`` lists the count over each ball radius 0..Lmax;
    ``stabilized[R]`` is True when the count is constant over the last
    two L increments.  Evidence for metric properness, not a proof.
    """

    lmax: int
    r_grid: list
    counts: dict
    stabilized: dict

    def rows(self):
        for r in self.r_grid:
            for L, c in enumerate(self.counts[r]):
                yield L, r, c, self.stabilized[r]

    def to_csv(self) -> str:
        lines = ["L,R,count,stabilized"]
        for L, r, c, stab in self.rows():
            lines.append(f"{L},{r},{c},{str(stab).lower()}")
        return "\n".join(lines) + "\n"


def properness_profile(lmax: int, r_grid, spec: GroupSpec, *,
                       ball: GroupBall | None = None) -> PropernessProfile:
    """Tabulate sublevel counts over growing balls for each threshold R.

    d_T(v, gamma v) equals the t-length of the normal form (distance
    consistency is itself a tested invariant); the sup-norm of the affine
    part is compared exactly as rationals against R.
    """
    if ball is None:
        ball = enumerate_ball(lmax, spec)
    r_grid = list(r_grid)
    counts = {r: [] for r in r_grid}
    running = {r: 0 for r in r_grid}
    for sphere in ball.spheres:
        for nf in sphere:
            d_tree = nf.t_length
            aff = j_affine(nf, spec)
            sup = max((abs(x) for x in aff.a), default=Fraction(0))
            for r in r_grid:
                if d_tree <= r and abs(aff.k) <= r and sup <= Fraction(r):
                    running[r] += 1
        for r in r_grid:
            counts[r].append(running[r])
    stabilized = {
        r: len(counts[r]) >= 3 and counts[r][-1] == counts[r][-3]
        for r in r_grid}
    return PropernessProfile(ball.radius, r_grid, counts, stabilized)
