import itertools

import pytest

from bskit.embedding import (check_injectivity, check_stabilizer,
                             enumerate_ball, generator_letters,
                             properness_profile)
from bskit.tree import ResourceBoundError
from bskit.words import britton_reduce, nf_invert, nf_multiply, parse_word


def test_ball_radius_zero(bs23):
    b = enumerate_ball(0, bs23)
    assert len(b) == 1 and b.elements[0].is_identity


def test_ball_radius_one(bs23):
    b = enumerate_ball(1, bs23)
    assert len(b) == 5
    names = {str(nf) for nf in b.elements}
    assert names == {"1", "x^1", "x^-1", "t", "t^-1"}


def pairwise_ball_oracle(L, spec):
    """Oracle: enumerate raw words, dedupe by pairwise word-problem calls."""
    reps = []
    alphabet = generator_letters(spec)
    for k in range(L + 1):
        for word in itertools.product(alphabet, repeat=k):
            nf = britton_reduce(list(word), spec)
            if not any(nf_multiply(nf_invert(r, spec), nf, spec).is_identity
                       for r in reps):
                reps.append(nf)
    return reps


def test_ball_matches_pairwise_oracle_small(bs23):
    for L in range(4):
        assert len(enumerate_ball(L, bs23)) == len(pairwise_ball_oracle(L, bs23))


def test_ball_strictly_increasing(bs23, bs12):
    for spec in (bs23, bs12):
        sizes = [len(enumerate_ball(L, spec)) for L in range(6)]
        assert all(a < b for a, b in zip(sizes, sizes[1:]))


def test_ball_closed_under_inversion(bs23):
    b = enumerate_ball(4, bs23)
    elems = set(b.elements)
    for nf in elems:
        assert nf_invert(nf, bs23) in elems


def test_ball_resource_bound(bs23):
    with pytest.raises(ResourceBoundError):
        enumerate_ball(5, bs23, max_length=4)


def test_ball_index(bs23):
    b = enumerate_ball(2, bs23)
    idx = b.index
    assert len(idx) == len(b)
    for name, nf in idx.items():
        assert str(nf) == name


def test_injectivity_examples(bs23):
    b = enumerate_ball(3, bs23)
    report = check_injectivity(b, bs23)
    assert report.ok and report.checked == len(b)


def test_injectivity_full_ball(bs23, bs23_ball6):
    assert check_injectivity(bs23_ball6, bs23).ok


def test_stabilizer_examples(bs23):
    from bskit.tree import BASE, act
    w = parse_word("t x t^-1", bs23)
    nf = britton_reduce(w, bs23)
    assert nf.t_length == 2 and act(nf, BASE, bs23) != BASE
    w2 = parse_word("t x^3 t^-1", bs23)
    nf2 = britton_reduce(w2, bs23)
    assert nf2.t_length == 0 and act(nf2, BASE, bs23) == BASE


def test_stabilizer_full_ball(bs23, bs23_ball6):
    assert check_stabilizer(bs23_ball6, bs23).ok


def test_profile_r_zero_counts_identity_only(bs23):
    profile = properness_profile(4, [0], bs23)
    assert profile.counts[0] == [1, 1, 1, 1, 1]
    assert profile.stabilized[0]


def test_profile_monotone_in_l_and_r(bs12, bs12_ball10):
    profile = properness_profile(10, [1, 2, 4], bs12, ball=bs12_ball10)
    for r in (1, 2, 4):
        counts = profile.counts[r]
        assert all(a <= b for a, b in zip(counts, counts[1:]))
    for L in range(11):
        assert (profile.counts[1][L] <= profile.counts[2][L]
                <= profile.counts[4][L])


def test_profile_bs12_r3_stabilizes(bs12, bs12_ball10):
    profile = properness_profile(10, [3], bs12, ball=bs12_ball10)
    assert profile.stabilized[3]


def test_profile_csv_shape(bs12, bs12_ball10):
    profile = properness_profile(10, [1, 2], bs12, ball=bs12_ball10)
    lines = profile.to_csv().strip().splitlines()
    assert lines[0] == "L,R,count,stabilized"
    assert len(lines) == 1 + 2 * 11


def test_profile_late_stabilization_r4(bs12):
    # R = 4 sublevel counts keep growing through L = 10 (elements such as
    # t^4 x^59 first appear at word length 10); the flag turns true at 12
    ball = enumerate_ball(12, bs12, max_length=12)
    profile = properness_profile(12, [4], bs12, ball=ball)
    assert profile.counts[4][10] == profile.counts[4][11] == profile.counts[4][12]
    assert profile.stabilized[4]
