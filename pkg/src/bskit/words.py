"""Generator words, Britton reduction, and the word problem.

A word is a list of letters: X(z) for the vertex-group element x^z
(z in Z^n) and T(+1) / T(-1) for the stable letter.  Britton reduction
rewrites with the stable relation read in both directions,

    t x^{B h} t^{-1}  ->  x^{A h}        t^{-1} x^{A h} t  ->  x^{B h}

merging adjacent X letters eagerly; the result is the unique pinch-free
normal form  x^{z0} t^{e1} x^{z1} ... t^{em} x^{zm}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arith import IntVector, vec_add, vec_neg, zero_vector
from .presentation import GroupSpec


class ParseError(ValueError):
    """Word syntax error; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


@dataclass(frozen=True)
class X:
    """The letter x^z for z in Z^n."""
    z: IntVector


@dataclass(frozen=True)
class T:
    """The stable letter t^eps, eps = +1 or -1."""
    eps: int


Letter = object  # X | T
Word = list      # list of letters


# ---------------------------------------------------------------------------
# Parsing

_ATOM = re.compile(r"(t|x(\d+)?|v\[(-?\d+(?:\s*,\s*-?\d+)*)\])(?:\^(-?\d+))?$")


def parse_word(text: str, spec: GroupSpec) -> Word:
    """Parse the whitespace-separated atom grammar into a raw word.

    Atoms: ``t``, ``x`` (n = 1 only), ``x2`` (generator index), ``v[1,-2]``
    (full vector), each optionally followed by ``^`` and a signed integer
    exponent of unbounded size.  No reduction is performed, except that
    trivial letters x^0 and t^0 are dropped.
    """
    word: Word = []
    pos = 0
    for token in text.split():
        pos = text.index(token, pos)
        m = _ATOM.match(token)
        if m is None:
            raise ParseError(f"bad atom {token!r}", pos)
        base, idx, vec, exp = m.groups()
        e = int(exp) if exp is not None else 1
        if base == "t":
            word.extend([T(1 if e > 0 else -1)] * abs(e))
        elif vec is not None:
            z = tuple(int(c) for c in vec.split(","))
            if len(z) != spec.n:
                raise ParseError(
                    f"vector atom has {len(z)} coordinates, expected {spec.n}",
                    pos)
            if e != 0 and any(z):
                word.append(X(tuple(e * c for c in z)))
        else:
            i = int(idx) if idx is not None else None
            if i is None and spec.n != 1:
                raise ParseError(
                    "bare 'x' is only legal when n = 1; use an index or v[...]",
                    pos)
            if i is not None and not 1 <= i <= spec.n:
                raise ParseError(
                    f"generator index {i} out of range 1..{spec.n}", pos)
            if e != 0:
                z = [0] * spec.n
                z[(i or 1) - 1] = e
                word.append(X(tuple(z)))
        pos += len(token)
    return word


# ---------------------------------------------------------------------------
# Normal forms

@dataclass(frozen=True)
class NormalForm:
    """Canonical Britton form x^{head} t^{e1} x^{z1} ... t^{em} x^{zm}.

    ``syllables`` holds the pairs (e_i, z_i).  Beyond pinch-freeness, the
    form is fully canonical: the x-power in front of each t is a canonical
    lattice residue (of A before t, of B before t^-1), every carry having
    been pushed to the rightmost x-part, which alone is unconstrained.
    Two words are equal in the group iff they reduce to the identical
    NormalForm, so instances serve as dedup keys.
    """

    head: IntVector
    syllables: tuple  # tuple[(eps, IntVector), ...]

    @property
    def t_length(self) -> int:
        return len(self.syllables)

    @property
    def is_identity(self) -> bool:
        return not self.syllables and not any(self.head)

    @property
    def t_exponent_sum(self) -> int:
        return sum(e for e, _ in self.syllables)

    def letters(self) -> Word:
        out: Word = []
        if any(self.head):
            out.append(X(self.head))
        for e, z in self.syllables:
            out.append(T(e))
            if any(z):
                out.append(X(z))
        return out

    def __str__(self) -> str:
        parts = [_render_x(self.head)] if any(self.head) else []
        for e, z in self.syllables:
            parts.append("t" if e == 1 else "t^-1")
            if any(z):
                parts.append(_render_x(z))
        return " ".join(parts) if parts else "1"


def _render_x(z: IntVector) -> str:
    if len(z) == 1:
        return f"x^{z[0]}"
    return "v[" + ",".join(map(str, z)) + "]"


class _Builder:
    """Mutable Britton-reduction stack; push letters, read off the form."""

    __slots__ = ("spec", "head", "syl")

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.head = zero_vector(spec.n)
        self.syl = []  # list of [eps, z]

    @classmethod
    def from_nf(cls, nf: NormalForm, spec: GroupSpec) -> "_Builder":
        b = cls(spec)
        b.head = nf.head
        b.syl = [[e, z] for e, z in nf.syllables]
        return b

    def push_x(self, z: IntVector) -> None:
        if self.syl:
            self.syl[-1][1] = vec_add(self.syl[-1][1], z)
        else:
            self.head = vec_add(self.head, z)

    def push_t(self, eps: int) -> None:
        if self.syl:
            last_eps, last_z = self.syl[-1]
            if last_eps == 1 and eps == -1:
                h = self.spec.lattice_b.solve(last_z)
                if h is not None:  # t x^{Bh} t^-1 -> x^{Ah}
                    self.syl.pop()
                    self.push_x(self.spec.A.apply(h))
                    return
            elif last_eps == -1 and eps == 1:
                h = self.spec.lattice_a.solve(last_z)
                if h is not None:  # t^-1 x^{Ah} t -> x^{Bh}
                    self.syl.pop()
                    self.push_x(self.spec.B.apply(h))
                    return
        # no pinch: split the tail x-power around the new t,
        # x^g t = x^r t x^{Bh} (g = Ah + r), x^g t^-1 = x^r t^-1 x^{Ah}
        tail = self.syl[-1][1] if self.syl else self.head
        if eps == 1:
            r, h = self.spec.lattice_a.decompose(tail)
            carry = self.spec.B.apply(h)
        else:
            r, h = self.spec.lattice_b.decompose(tail)
            carry = self.spec.A.apply(h)
        if self.syl:
            self.syl[-1][1] = r
        else:
            self.head = r
        self.syl.append([eps, carry])

    def push_letter(self, letter) -> None:
        if isinstance(letter, X):
            self.push_x(letter.z)
        else:
            self.push_t(letter.eps)

    def normal_form(self) -> NormalForm:
        return NormalForm(self.head, tuple((e, z) for e, z in self.syl))


def britton_reduce(w, spec: GroupSpec) -> NormalForm:
    """Britton normal form of a word (or of an already-reduced form)."""
    if isinstance(w, NormalForm):
        return w
    b = _Builder(spec)
    for letter in w:
        b.push_letter(letter)
    return b.normal_form()


def nf_append(nf: NormalForm, letter, spec: GroupSpec) -> NormalForm:
    """The normal form of nf * letter; touches only the tail syllable."""
    b = _Builder.from_nf(nf, spec)
    b.push_letter(letter)
    return b.normal_form()


def word_problem(w, spec: GroupSpec) -> bool:
    """True iff the word represents the identity of the group."""
    return britton_reduce(w, spec).is_identity


def nf_multiply(u: NormalForm, w: NormalForm, spec: GroupSpec) -> NormalForm:
    b = _Builder.from_nf(u, spec)
    for letter in w.letters():
        b.push_letter(letter)
    return b.normal_form()


def nf_invert(u: NormalForm, spec: GroupSpec) -> NormalForm:
    b = _Builder(spec)
    for letter in reversed(u.letters()):
        if isinstance(letter, X):
            b.push_x(vec_neg(letter.z))
        else:
            b.push_t(-letter.eps)
    return b.normal_form()


def invert_letters(w: Word) -> Word:
    """Formal inverse of a raw word."""
    return [X(vec_neg(l.z)) if isinstance(l, X) else T(-l.eps)
            for l in reversed(w)]


# ---------------------------------------------------------------------------
# Strategy oracle: naive rewriting with an explicit pinch-selection rule.
# Independent of the stack reducer above; used to probe uniqueness of the
# normal form under different rewriting orders.

def reduce_with_strategy(w, spec: GroupSpec, strategy: str = "leftmost"
                         ) -> NormalForm:
    """Britton-reduce by repeatedly applying one pinch at a time.

    ``strategy`` selects which applicable pinch fires: "leftmost" or
    "rightmost".  Termination: every pinch removes two t letters.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    letters = _merge_x(list(w), spec)
    while True:
        sites = _pinch_sites(letters, spec)
        if not sites:
            break
        i = sites[0] if strategy == "leftmost" else sites[-1]
        letters = _apply_pinch(letters, i, spec)
        letters = _merge_x(letters, spec)
    return _letters_to_nf(letters, spec)


def _merge_x(letters: Word, spec: GroupSpec) -> Word:
    out: Word = []
    for l in letters:
        if isinstance(l, X) and out and isinstance(out[-1], X):
            out[-1] = X(vec_add(out[-1].z, l.z))
        else:
            out.append(l)
    return out


def _pinch_sites(letters: Word, spec: GroupSpec) -> list:
    """Indices i where a pinch starts: t^e [x^z] t^-e with z in the lattice."""
    sites = []
    for i, l in enumerate(letters):
        if not isinstance(l, T):
            continue
        # adjacent t^e t^-e (possibly with an intervening X)
        if i + 1 < len(letters) and isinstance(letters[i + 1], T):
            if letters[i + 1].eps == -l.eps:
                sites.append(i)
            continue
        if (i + 2 < len(letters) and isinstance(letters[i + 1], X)
                and isinstance(letters[i + 2], T)
                and letters[i + 2].eps == -l.eps):
            lat = spec.lattice_b if l.eps == 1 else spec.lattice_a
            if lat.contains(letters[i + 1].z):
                sites.append(i)
    return sites


def _apply_pinch(letters: Word, i: int, spec: GroupSpec) -> Word:
    l = letters[i]
    if isinstance(letters[i + 1], T):
        mid = zero_vector(spec.n)
        end = i + 2
    else:
        mid = letters[i + 1].z
        end = i + 3
    if l.eps == 1:
        h = spec.lattice_b.solve(mid)
        repl = spec.A.apply(h)
    else:
        h = spec.lattice_a.solve(mid)
        repl = spec.B.apply(h)
    return letters[:i] + [X(repl)] + letters[end:]


def _letters_to_nf(letters: Word, spec: GroupSpec) -> NormalForm:
    # canonicalize the pinch-free word; the builder must find no pinch left
    t_count = sum(1 for l in letters if isinstance(l, T))
    nf = britton_reduce(letters, spec)
    assert nf.t_length == t_count, "strategy oracle left an unapplied pinch"
    return nf
