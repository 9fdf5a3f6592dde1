import random
from fractions import Fraction

from bskit.affine import (AffineElement, aff_compose, aff_identity,
                          aff_invert, j_affine)
from bskit.words import (T, X, britton_reduce, invert_letters, parse_word)


def w(text, spec):
    return parse_word(text, spec)


def j_affine_right_fold(word, spec):
    """Oracle: fold letters right-to-left instead of left-to-right."""
    acc = aff_identity(spec.n)
    for letter in reversed(word):
        if isinstance(letter, X):
            e = AffineElement(0, tuple(Fraction(c) for c in letter.z))
        else:
            e = AffineElement(letter.eps, (Fraction(0),) * spec.n)
        acc = aff_compose(e, acc, spec)
    return acc


def test_defining_relation_maps_to_identity(bs23):
    word = w("x^2", bs23) + invert_letters(w("t x^3 t^-1", bs23))
    assert j_affine(word, bs23).is_identity


def test_identity_word(bs23):
    assert j_affine([], bs23) == AffineElement(0, (Fraction(0),))


def test_txt_example(bs23):
    aff = j_affine(w("t x t", bs23), bs23)
    assert aff == AffineElement(2, (Fraction(2, 3),))
    assert aff == j_affine_right_fold(w("t x t", bs23), bs23)


def test_compose_examples(bs23):
    one_up = AffineElement(1, (Fraction(0),))
    xq = AffineElement(0, (Fraction(3),))
    assert aff_compose(one_up, xq, bs23) == AffineElement(1, (Fraction(2),))
    a = AffineElement(0, (Fraction(5, 3),))
    assert aff_invert(a, bs23) == AffineElement(0, (Fraction(-5, 3),))


def test_compose_invert_roundtrip(bs23):
    rng = random.Random(2)
    for _ in range(300):
        e = AffineElement(rng.randrange(-5, 6),
                          (Fraction(rng.randrange(-40, 40), 6),))
        assert aff_compose(e, aff_invert(e, bs23), bs23).is_identity


def test_associativity_random(bs23):
    rng = random.Random(4)
    def rand():
        return AffineElement(rng.randrange(-4, 5),
                             (Fraction(rng.randrange(-30, 30),
                                       6 ** rng.randrange(0, 3)),))
    for _ in range(2000):
        a, b, c = rand(), rand(), rand()
        assert (aff_compose(aff_compose(a, b, bs23), c, bs23)
                == aff_compose(a, aff_compose(b, c, bs23), bs23))


def test_homomorphism_and_britton_invariance(bs23):
    rng = random.Random(6)
    letters = [X((1,)), X((-1,)), X((3,)), T(1), T(-1)]
    for _ in range(500):
        u = [rng.choice(letters) for _ in range(rng.randrange(0, 8))]
        v = [rng.choice(letters) for _ in range(rng.randrange(0, 8))]
        assert j_affine(u + v, bs23) == aff_compose(
            j_affine(u, bs23), j_affine(v, bs23), bs23)
        assert j_affine(u, bs23) == j_affine(britton_reduce(u, bs23), bs23)


def test_height_equals_t_exponent_sum(bs23):
    rng = random.Random(8)
    letters = [X((1,)), T(1), T(-1)]
    for _ in range(200):
        word = [rng.choice(letters) for _ in range(rng.randrange(0, 10))]
        raw = sum(l.eps for l in word if isinstance(l, T))
        assert j_affine(word, bs23).k == raw


def test_relation_check_100_random_z(asc2):
    rng = random.Random(10)
    for _ in range(100):
        z = (rng.randrange(-50, 51), rng.randrange(-50, 51))
        lhs = [X(asc2.A.apply(z))]
        rhs = [T(1), X(asc2.B.apply(z)), T(-1)]
        assert j_affine(lhs, asc2) == j_affine(rhs, asc2)


def test_restriction_to_g_injective(bs23):
    for z in (-9, -1, 1, 14):
        aff = j_affine([X((z,))], bs23)
        assert aff == AffineElement(0, (Fraction(z),))
        assert not aff.is_identity


def test_denominators_divide_det_power(bs23, bs23_ball6):
    # images of the ball have denominators dividing a power of det A * det B
    for nf in bs23_ball6.elements:
        aff = j_affine(nf, bs23)
        for coord in aff.a:
            d = coord.denominator
            while d % 2 == 0:
                d //= 2
            while d % 3 == 0:
                d //= 3
            assert d == 1


def test_rendering(bs23):
    assert str(j_affine(w("t x t", bs23), bs23)) == "(2; 2/3)"
