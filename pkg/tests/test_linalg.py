import random

import pytest
from hypothesis import given, settings, strategies as st

from deltamut import (
    DimensionError,
    IntMatrix,
    NotSkewError,
    PermutationMatrix,
    SkewMatrix,
    conjugate,
    det_exact,
    elementary,
    smith_report,
)
from deltamut.congruence import RngConfig, random_unimodular
from deltamut.mutation import permute

from conftest import random_skew
from oracles import cofactor_det, column_gcds, smith_by_minors

small_ints = st.integers(-9, 9)


def square(n_min=1, n_max=5, elements=small_ints):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_det_identity():
    assert det_exact(IntMatrix.identity(3)) == 1


def test_det_published_x(pair5):
    assert det_exact(pair5[2]) == 1


def test_det_random_4x4_matches_cofactor():
    rng = random.Random(4)
    for _ in range(50):
        rows = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        assert det_exact(IntMatrix(rows)) == cofactor_det(rows)


@settings(max_examples=300, deadline=None)
@given(square())
def test_det_matches_cofactor_up_to_5(rows):
    assert det_exact(IntMatrix(rows)) == cofactor_det(rows)


def test_det_handles_pivoting_and_singular():
    assert det_exact(IntMatrix([[0, 1], [1, 0]])) == -1
    assert det_exact(IntMatrix([[0, 0, 1], [0, 2, 0], [3, 0, 0]])) == -6
    assert det_exact(IntMatrix([[1, 2], [2, 4]])) == 0


def test_det_big_entries_exact():
    big = 10**40
    m = IntMatrix([[big, 1], [1, big]])
    assert det_exact(m) == big * big - 1


def test_det_non_square():
    with pytest.raises(DimensionError):
        det_exact(IntMatrix([[1, 2, 3], [4, 5, 6]]))


@settings(max_examples=100, deadline=None)
@given(square(2, 4), square(2, 4))
def test_det_of_congruence_multiplies(xr, br):
    n = min(len(xr), len(br))
    x = IntMatrix([r[:n] for r in xr[:n]])
    b = IntMatrix([r[:n] for r in br[:n]])
    assert det_exact(conjugate(x, b)) == det_exact(x) ** 2 * det_exact(b)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_odd_skew_det_vanishes(n):
    rng = random.Random(n)
    for _ in range(10):
        assert det_exact(random_skew(rng, n, 50)) == 0


def test_smith_published_b(pair5):
    rep = smith_report(pair5[0])
    assert rep.invariant_factors == (1, 1, 1, 1, 0)
    assert rep.rank == 4
    assert rep.column_gcds == (1, 1, 1, 1, 1)


def test_smith_identity_and_zero():
    rep = smith_report(IntMatrix.identity(4))
    assert rep.invariant_factors == (1, 1, 1, 1) and rep.rank == 4
    rep = smith_report(IntMatrix.zeros(3))
    assert rep.invariant_factors == (0, 0, 0)
    assert rep.rank == 0
    assert rep.column_gcds == (0, 0, 0)


def test_smith_known_example():
    m = IntMatrix([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
    assert smith_report(m).invariant_factors == (1, 10, 30, 0)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda m: st.integers(1, 4).flatmap(
            lambda n: st.lists(st.lists(st.integers(-12, 12), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )
)
def test_smith_matches_determinantal_divisors(rows):
    rep = smith_report(IntMatrix(rows))
    assert rep.invariant_factors == smith_by_minors(rows)
    assert rep.column_gcds == column_gcds(rows)
    nonzero = [f for f in rep.invariant_factors if f]
    assert rep.rank == len(nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert rep.invariant_factors[len(nonzero):] == (0,) * (len(rep.invariant_factors) - len(nonzero))


def test_smith_invariant_under_unimodular_congruence():
    rng = random.Random(11)
    for trial in range(20):
        n = rng.randint(2, 6)
        b = random_skew(rng, n, 15)
        x = random_unimodular(RngConfig(trial, 20), n)
        before, after = smith_report(b), smith_report(conjugate(x, b))
        assert before.invariant_factors == after.invariant_factors
        assert before.rank == after.rank


def test_conjugate_identity_and_published(pair5):
    b, bp, x = pair5
    assert conjugate(IntMatrix.identity(5), b) == b
    out = conjugate(x, b)
    assert out == bp
    assert isinstance(out, SkewMatrix)


def test_conjugate_by_permutation_matches_relabel():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 6)
        b = random_skew(rng, n)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        p = PermutationMatrix(tuple(perm))
        assert conjugate(p.matrix, b) == permute(b, p)


def test_conjugate_dimension_mismatch():
    with pytest.raises(DimensionError):
        conjugate(IntMatrix.identity(3), SkewMatrix.zeros(2))


def test_elementary():
    assert elementary(1, 2, 2) == IntMatrix([[0, 1], [0, 0]])
    s = elementary(1, 2, 2) + elementary(2, 1, 2)
    assert s.is_symmetric() and s.rows[0][0] == s.rows[1][1] == 0
    with pytest.raises(IndexError):
        elementary(3, 1, 2)


def test_elementary_sum_builds_chain():
    n = 6
    a = IntMatrix.zeros(n)
    for i in range(1, n):
        a = a + elementary(i, i + 1, n) - elementary(i + 1, i, n)
    assert a == SkewMatrix.from_upper(n, {(i, i + 1): 1 for i in range(1, n)})


def test_skew_validation():
    with pytest.raises(NotSkewError):
        SkewMatrix([[0, 1], [1, 0]])
    with pytest.raises(NotSkewError):
        SkewMatrix([[1, 0], [0, -1]])
    with pytest.raises(NotSkewError):
        SkewMatrix([[0, 1, 2]])


def test_matrix_basics():
    m = IntMatrix([[1, 2], [3, 4]])
    assert m.entry(1, 2) == 2
    assert m.T == IntMatrix([[1, 3], [2, 4]])
    assert 2 * m == m + m
    assert (m @ IntMatrix.identity(2)) == m
    assert hash(m) == hash(IntMatrix([[1, 2], [3, 4]]))
    with pytest.raises(DimensionError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[True]])


def test_permutation_matrix():
    p = PermutationMatrix((2, 3, 1))
    assert p.matrix @ p.inverse().matrix == IntMatrix.identity(3)
    assert sum(map(sum, p.matrix.rows)) == 3
    with pytest.raises(ValueError):
        PermutationMatrix((1, 1, 2))
