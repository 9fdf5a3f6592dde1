"""Command-line front end; every operation as a reproducible one-liner.

Exit codes: 0 success, 1 a check ran and found violations, 2 usage or
resource errors.  Output is byte-stable: sorted orders and 12-significant-
digit floats.
"""

from __future__ import annotations

import json
import random
import sys

import click

from .affine import j_affine
from .arith import ConfigurationError
from .embedding import (GroupBall, check_injectivity, check_stabilizer,
                        enumerate_ball, properness_profile)
from .haagerup import (UnsupportedWitnessError, c0_profile, c0_profile_csv,
                       cocycle, cocycle_identity_check, tree_gram, witness,
                       witness_gram)
from .presentation import GroupSpec, make_bs, spec_from_dict
from .tree import (BASE, ResourceBoundError, act, ball, distance, edges_csv,
                   neighbors, to_dot, tree_edges, vertex_of)
from .words import (ParseError, britton_reduce, nf_multiply, parse_word,
                    word_problem)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _load_spec(bs, spec_file) -> GroupSpec:
    if bs is not None and spec_file is not None:
        raise click.UsageError("give exactly one of --bs and --spec")
    if bs is not None:
        return make_bs(bs[0], bs[1])
    if spec_file is not None:
        with open(spec_file) as fh:
            return spec_from_dict(json.load(fh))
    raise click.UsageError("a group is required: --bs P Q or --spec FILE")


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text.rstrip("\n"))


class _Ctx:
    def __init__(self, spec: GroupSpec):
        self.spec = spec

    def word(self, text: str):
        return parse_word(text, self.spec)


@click.group()
@click.option("--bs", nargs=2, type=int, default=None,
              help="BS(P, Q) datum for n = 1.")
@click.option("--spec", "spec_file", type=click.Path(exists=True),
              default=None, help='Group file {"n":..,"A":..,"B":..}.')
@click.pass_context
def main(ctx, bs, spec_file):
    """Toolkit for generalized Baumslag-Solitar groups over Z^n."""
    try:
        ctx.obj = _Ctx(_load_spec(bs, spec_file))
    except (ConfigurationError, json.JSONDecodeError) as exc:
        raise click.UsageError(str(exc))


def _run(ctx, fn):
    try:
        fn(ctx.obj)
    except (ParseError, ConfigurationError, ValueError) as exc:
        raise click.UsageError(str(exc))
    except ResourceBoundError as exc:
        click.echo(f"resource bound exceeded: {exc}", err=True)
        sys.exit(2)
    except UnsupportedWitnessError as exc:
        click.echo(f"unsupported witness regime: {exc}", err=True)
        sys.exit(2)


@main.command()
@click.argument("word")
@click.pass_context
def reduce(ctx, word):
    """Britton normal form of WORD."""
    _run(ctx, lambda o: click.echo(str(britton_reduce(o.word(word), o.spec))))


@main.command()
@click.argument("word")
@click.pass_context
def wp(ctx, word):
    """Word problem: trivial / nontrivial."""
    _run(ctx, lambda o: click.echo(
        "trivial" if word_problem(o.word(word), o.spec) else "nontrivial"))


@main.command()
@click.argument("word")
@click.pass_context
def vertex(ctx, word):
    """Canonical Bass-Serre vertex of WORD * G."""
    _run(ctx, lambda o: click.echo(str(vertex_of(o.word(word), o.spec))))


@main.command()
@click.argument("word")
@click.argument("word2", required=False)
@click.pass_context
def dist(ctx, word, word2):
    """Tree distance d(v, WORD v), or between two coset vertices."""
    def go(o):
        u = vertex_of(o.word(word), o.spec)
        w = vertex_of(o.word(word2), o.spec) if word2 else BASE
        click.echo(str(distance(w, u)))
    _run(ctx, go)


@main.command("neighbors")
@click.argument("word", required=False)
@click.pass_context
def neighbors_cmd(ctx, word):
    """Neighbors of the vertex of WORD (default: base vertex)."""
    def go(o):
        u = vertex_of(o.word(word), o.spec) if word else BASE
        for w in neighbors(u, o.spec):
            click.echo(str(w))
    _run(ctx, go)


@main.command("ball")
@click.option("-R", "--radius", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "dot", "csv"]),
              default="text")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def ball_cmd(ctx, radius, fmt, out):
    """Tree ball around the base vertex."""
    def go(o):
        vs = ball(BASE, radius, o.spec)
        if fmt == "text":
            _emit("\n".join(str(v) for v in vs), out)
        elif fmt == "dot":
            _emit(to_dot(vs, tree_edges(vs)), out)
        else:
            _emit(edges_csv(tree_edges(vs)), out)
    _run(ctx, go)


@main.command()
@click.option("-R", "--radius", type=int, required=True)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def dot(ctx, radius, out):
    """DOT export of the tree ball (shorthand for ball --format dot)."""
    def go(o):
        vs = ball(BASE, radius, o.spec)
        _emit(to_dot(vs, tree_edges(vs)), out)
    _run(ctx, go)


@main.command()
@click.argument("word")
@click.option("-k", "--steps", type=int, default=5)
@click.pass_context
def orbit(ctx, word, steps):
    """Vertices gamma^j v for j = 0..STEPS."""
    def go(o):
        g = britton_reduce(o.word(word), o.spec)
        acc = britton_reduce([], o.spec)
        for _ in range(steps + 1):
            click.echo(str(act(acc, BASE, o.spec)))
            acc = nf_multiply(acc, g, o.spec)
    _run(ctx, go)


@main.command()
@click.argument("word")
@click.pass_context
def affine(ctx, word):
    """Affine image (k; a) of WORD, exact rationals."""
    _run(ctx, lambda o: click.echo(str(j_affine(o.word(word), o.spec))))


def _check_command(ctx, length, checker):
    failed = False

    def go(o):
        nonlocal failed
        b = enumerate_ball(length, o.spec)
        report = checker(b, o.spec)
        click.echo(report.summary())
        for v in report.violations:
            click.echo(f"  {v}")
        failed = not report.ok
    _run(ctx, go)
    if failed:
        sys.exit(1)


@main.command("inject-check")
@click.option("-L", "--length", type=int, default=4)
@click.pass_context
def inject_check(ctx, length):
    """Injectivity shadow of the embedding over the word-length ball."""
    _check_command(ctx, length, check_injectivity)


@main.command("stab-check")
@click.option("-L", "--length", type=int, default=4)
@click.pass_context
def stab_check(ctx, length):
    """Stabilizer identity over the word-length ball."""
    _check_command(ctx, length, check_stabilizer)


@main.command()
@click.option("--lmax", "-L", type=int, default=8)
@click.option("-R", "--thresholds", default="1,2,4",
              help="Comma-separated R grid.")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def proper(ctx, lmax, thresholds, out):
    """Properness profile: sublevel counts and stabilization flags."""
    def go(o):
        grid = [int(r) for r in thresholds.split(",")]
        profile = properness_profile(lmax, grid, o.spec)
        _emit(profile.to_csv(), out)
    _run(ctx, go)


@main.command("cocycle")
@click.argument("word")
@click.pass_context
def cocycle_cmd(ctx, word):
    """Signed geodesic edge set b(WORD); one edge per line."""
    def go(o):
        cv = cocycle(britton_reduce(o.word(word), o.spec), o.spec)
        click.echo(f"norm_sq {cv.norm_sq()}")
        for (u, w), c in cv.coefficients:
            click.echo(f"{c:+d} [{u}] -> [{w}]")
    _run(ctx, go)


@main.command("cocycle-check")
@click.option("-L", "--length", type=int, default=4)
@click.option("--pairs", type=int, default=200)
@click.option("--seed", type=int, default=0)
@click.pass_context
def cocycle_check(ctx, length, pairs, seed):
    """Random-pair check of the 1-cocycle law over the ball."""
    failed = False

    def go(o):
        nonlocal failed
        elements = enumerate_ball(length, o.spec).elements
        rng = random.Random(seed)
        bad = 0
        for _ in range(pairs):
            g = rng.choice(elements)
            d = rng.choice(elements)
            if not cocycle_identity_check(g, d, o.spec):
                bad += 1
        status = "OK" if bad == 0 else "FAIL"
        click.echo(f"{status}: {bad} violations / {pairs} pairs")
        failed = bad > 0
    _run(ctx, go)
    if failed:
        sys.exit(1)


@main.command()
@click.option("-L", "--length", type=int, default=5)
@click.option("-s", "--scale", type=float, default=1.0)
@click.option("--size", type=int, default=40)
@click.option("--seed", type=int, default=0)
@click.option("--kernel", type=click.Choice(["tree", "witness"]),
              default="tree")
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def gram(ctx, length, scale, size, seed, kernel, out):
    """Kernel PSD certificate on a random sample from the ball (JSON)."""
    def go(o):
        elements = enumerate_ball(length, o.spec).elements
        rng = random.Random(seed)
        sample = rng.sample(elements, min(size, len(elements)))
        fn = tree_gram if kernel == "tree" else witness_gram
        _emit(fn(sample, scale, o.spec).to_json(), out)
    _run(ctx, go)


@main.command("witness")
@click.argument("word")
@click.option("-s", "--scale", type=float, default=1.0)
@click.pass_context
def witness_cmd(ctx, word, scale):
    """Witness value psi_s(WORD)."""
    _run(ctx, lambda o: click.echo(
        _fmt(witness(britton_reduce(o.word(word), o.spec), scale, o.spec))))


@main.command()
@click.option("--lmax", "-L", type=int, default=8)
@click.option("-s", "--scale", type=float, default=1.0)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def c0(ctx, lmax, scale, out):
    """C0 decay profile: max witness value per word-length sphere (CSV)."""
    _run(ctx, lambda o: _emit(
        c0_profile_csv(c0_profile(lmax, scale, o.spec)), out))


if __name__ == "__main__":
    main()
