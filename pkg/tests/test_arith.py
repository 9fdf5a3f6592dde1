import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bskit.arith import (ConfigurationError, IntMatrix, Lattice, column_hnf,
                         in_lattice, lattice_decompose, mat_apply,
                         mat_apply_rational, rat_inverse, residues, vec_sub)

M22 = IntMatrix.from_rows([[2, 1], [0, 2]])


def brute_force_decompose(z, M, box=12):
    """Oracle: search all h in a box for z - M h among the canonical reps."""
    reps = set(residues(M).representatives)
    hits = []
    for h in itertools.product(range(-box, box + 1), repeat=M.n):
        r = vec_sub(z, M.apply(h))
        if r in reps:
            hits.append((r, h))
    return hits


def test_decompose_zero_scalar():
    assert lattice_decompose((0,), IntMatrix.scalar(2)) == ((0,), (0,))


def test_decompose_four_mod_two():
    assert lattice_decompose((4,), IntMatrix.scalar(2)) == ((0,), (2,))


def test_decompose_2d_matches_brute_force():
    z = (5, 3)
    r, h = lattice_decompose(z, M22)
    hits = brute_force_decompose(z, M22)
    assert hits == [(r, h)]  # unique and identical
    # z = M h + r componentwise: 5 - r1 = 2 h1 + h2, 3 - r2 = 2 h2
    assert 5 - r[0] == 2 * h[0] + h[1]
    assert 3 - r[1] == 2 * h[1]


def test_in_lattice_examples():
    assert in_lattice((4, 0), M22)
    assert Lattice(M22).solve((4, 0)) == (2, 0)
    assert not in_lattice((1,), IntMatrix.scalar(3))
    assert in_lattice((0, 0), M22)


def test_residues_scalar():
    assert residues(IntMatrix.scalar(3)).representatives == ((0,), (1,), (2,))
    assert residues(IntMatrix.scalar(2)).representatives == ((0,), (1,))
    # negative entry: the lattice mZ = |m|Z
    assert residues(IntMatrix.scalar(-3)).representatives == ((0,), (1,), (2,))


def test_residues_2d_count_and_distinctness():
    reps = residues(M22).representatives
    assert len(reps) == 4 == abs(M22.det)
    assert reps[0] == (0, 0)
    lat = Lattice(M22)
    for a, b in itertools.combinations(reps, 2):
        assert not lat.contains(vec_sub(a, b))


def test_mat_apply_examples():
    assert mat_apply(IntMatrix.scalar(2), (3,)) == (6,)
    assert mat_apply(M22, (1, 1)) == (3, 2)
    inv3 = rat_inverse(IntMatrix.scalar(3))
    assert mat_apply_rational(inv3, (2,)) == (Fraction(2, 3),)


def test_singular_matrix_rejected():
    sing = IntMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(ConfigurationError):
        lattice_decompose((1, 1), sing)
    with pytest.raises(ConfigurationError):
        rat_inverse(sing)


def test_dimension_mismatch_rejected():
    with pytest.raises(ConfigurationError):
        mat_apply(M22, (1,))
    with pytest.raises(ConfigurationError):
        IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])


def test_hnf_is_lower_triangular_with_positive_pivots():
    for rows in ([[2, 1], [0, 2]], [[3, 5], [1, 2]], [[-2, 7], [4, 1]]):
        M = IntMatrix.from_rows(rows)
        H = column_hnf(M)
        for i in range(2):
            assert H.rows[i][i] > 0
            for j in range(i + 1, 2):
                assert H.rows[i][j] == 0
        assert abs(H.det) == abs(M.det)


small_int = st.integers(min_value=-30, max_value=30)
entry = st.integers(min_value=-5, max_value=5)


def nonsingular_2x2():
    return (st.tuples(entry, entry, entry, entry)
            .filter(lambda e: e[0] * e[3] - e[1] * e[2] != 0)
            .map(lambda e: IntMatrix.from_rows([[e[0], e[1]],
                                                [e[2], e[3]]])))


@given(st.tuples(small_int, small_int), nonsingular_2x2())
@settings(max_examples=120, deadline=None)
def test_decompose_reconstructs_exactly(z, M):
    r, h = lattice_decompose(z, M)
    assert vec_sub(z, M.apply(h)) == r
    # r is among the canonical representatives and is idempotent
    assert r in residues(M).representatives
    assert lattice_decompose(r, M) == (r, (0, 0))


@given(st.tuples(small_int, small_int), nonsingular_2x2())
@settings(max_examples=60, deadline=None)
def test_rational_inverse_roundtrip(z, M):
    back = mat_apply_rational(rat_inverse(M), M.apply(z))
    assert back == tuple(Fraction(c) for c in z)
