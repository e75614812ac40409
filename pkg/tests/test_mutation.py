import random

import pytest
from hypothesis import given, settings, strategies as st

from deltamut import (
    IntMatrix,
    MutationSequence,
    PermutationMatrix,
    SkewMatrix,
    det_exact,
    mutate,
    mutate_entrywise,
    mutate_sequence,
    permute,
    replicating_matrix,
    smith_report,
)
from deltamut.congruence import chain_matrix
from deltamut.linalg import DimensionError

from conftest import random_skew


@st.composite
def skew_matrices(draw, n_min=2, n_max=7, bound=10):
    n = draw(st.integers(n_min, n_max))
    vals = draw(st.lists(st.integers(-bound, bound), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    pos = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return SkewMatrix.from_upper(n, dict(zip(pos, vals)))


def test_replicating_zero_matrix():
    m = replicating_matrix(SkewMatrix.zeros(3), 2).mat
    assert m == IntMatrix([[1, 0, 0], [0, -1, 0], [0, 0, 1]])


def test_replicating_2x2_by_hand():
    b = SkewMatrix([[0, 1], [-1, 0]])
    assert replicating_matrix(b, 1).mat == IntMatrix([[-1, 0], [1, 1]])


def test_replicating_shape_and_det(rng):
    for _ in range(100):
        n = rng.randint(1, 7)
        b = random_skew(rng, n)
        k = rng.randint(1, n)
        r = replicating_matrix(b, k)
        m = r.mat
        assert det_exact(m) == -1
        for i in range(n):
            for j in range(n):
                x = m.rows[i][j]
                if i == j:
                    assert x == (-1 if i == k - 1 else 1)
                elif j == k - 1:
                    assert x == max(0, -b.rows[i][k - 1])
                else:
                    assert x == 0


def test_replicating_depends_only_on_column_k(rng):
    b = random_skew(rng, 5)
    rows = b.tolist()
    rows[0][1], rows[1][0] = rows[0][1] + 7, rows[1][0] - 7
    assert replicating_matrix(SkewMatrix(rows), 4) == replicating_matrix(b, 4)


def test_out_of_range():
    b = SkewMatrix.zeros(3)
    for fn in (mutate, mutate_entrywise, replicating_matrix):
        with pytest.raises(IndexError):
            fn(b, 0)
        with pytest.raises(IndexError):
            fn(b, 4)
    with pytest.raises(IndexError):
        mutate_sequence(b, [1, 5])


@pytest.mark.parametrize("k", [1, 2])
def test_size_two_negates(rng, k):
    for _ in range(20):
        b = random_skew(rng, 2, 50)
        assert mutate(b, k) == -b
        assert mutate_entrywise(b, k) == -b


@pytest.mark.parametrize("k", range(1, 6))
def test_involution_on_published_b(pair5, k):
    b = pair5[0]
    assert mutate(mutate(b, k), k) == b


def test_mutate_zero():
    z = SkewMatrix.zeros(4)
    assert all(mutate(z, k) == z for k in range(1, 5))


@pytest.mark.parametrize("k", range(1, 6))
def test_entrywise_matches_on_published_b(pair5, k):
    assert mutate_entrywise(pair5[0], k) == mutate(pair5[0], k)


def test_entrywise_matches_500_random():
    rng = random.Random(500)
    for _ in range(500):
        n = rng.randint(1, 8)
        b = random_skew(rng, n)
        k = rng.randint(1, n)
        assert mutate_entrywise(b, k) == mutate(b, k)


@settings(max_examples=200, deadline=None)
@given(skew_matrices(), st.data())
def test_mutation_properties(b, data):
    k = data.draw(st.integers(1, b.n))
    mu = mutate(b, k)
    assert mu.is_skew()
    assert mutate(mu, k) == b
    assert mu == mutate_entrywise(b, k)
    assert det_exact(mu) == det_exact(b)
    s0, s1 = smith_report(b), smith_report(mu)
    assert s0.invariant_factors == s1.invariant_factors and s0.rank == s1.rank


def test_sequence_basics(rng):
    b = random_skew(rng, 4)
    assert mutate_sequence(b, MutationSequence()) == b
    assert mutate_sequence(b, MutationSequence((3, 3))) == b
    assert mutate_sequence(b, [1, 2]) == mutate(mutate(b, 1), 2)


def test_sequence_order_matters():
    # generic 3x3 input: mu_2 mu_1 differs from mu_1 mu_2
    b = SkewMatrix.from_upper(3, {(1, 2): 2, (1, 3): -1, (2, 3): 3})
    assert mutate_sequence(b, [1, 2]) != mutate_sequence(b, [2, 1])
    assert mutate_sequence(b, [1, 2]) != b


def test_sequence_parse():
    assert MutationSequence.parse("3,1,4").steps == (3, 1, 4)
    assert MutationSequence.parse(" ").steps == ()
    assert str(MutationSequence((2, 5))) == "2,5"
    with pytest.raises(ValueError):
        MutationSequence.parse("1,a")


def test_permute_identity_and_transposition():
    a3 = chain_matrix(3)
    assert permute(a3, PermutationMatrix.identity(3)) == a3
    out = permute(a3, PermutationMatrix.transposition(3, 1, 2))
    assert (out.entry(1, 2), out.entry(1, 3), out.entry(2, 3)) == (-1, 1, 0)


def test_permute_preserves_classical_invariants(rng):
    for _ in range(30):
        n = rng.randint(2, 6)
        b = random_skew(rng, n)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        pb = permute(b, PermutationMatrix(tuple(perm)))
        assert smith_report(pb).invariant_factors == smith_report(b).invariant_factors
        assert smith_report(pb).rank == smith_report(b).rank


def test_permute_dimension_mismatch():
    with pytest.raises(DimensionError):
        permute(SkewMatrix.zeros(3), PermutationMatrix.identity(2))
