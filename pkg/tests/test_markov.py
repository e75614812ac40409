import itertools
import random

import pytest

from deltamut import SkewMatrix, chain_matrix, mutate
from deltamut.markov import (
    Rank3Params,
    c_invariant,
    companion_det_formula,
    is_cyclic_3,
    markov_constant,
    markov_delta_identity,
)


def has_directed_cycle(b):
    n = b.n
    arcs = {(i, j) for i in range(n) for j in range(n) if b.rows[i][j] > 0}
    for length in range(2, n + 1):
        for cyc in itertools.permutations(range(n), length):
            if cyc[0] == min(cyc) and all((cyc[t], cyc[(t + 1) % length]) in arcs for t in range(length)):
                return True
    return False


@pytest.mark.parametrize("pqr,c", [((0, 0, 0), 0), ((3, 3, 3), 0), ((1, 0, -1), 2), ((2, -2, 2), 20)])
def test_markov_constant(pqr, c):
    assert markov_constant(*pqr) == c


def test_params_round_trip():
    for pqr in itertools.product(range(-3, 4), repeat=3):
        x = Rank3Params(*pqr)
        assert Rank3Params.from_matrix(x.to_matrix()) == x
    assert Rank3Params.from_matrix(chain_matrix(3)) == Rank3Params(1, 0, 1)


def test_cyclicity_examples():
    assert is_cyclic_3(Rank3Params(2, -2, 2).to_matrix())
    assert not is_cyclic_3(chain_matrix(3))
    assert not is_cyclic_3(SkewMatrix.zeros(3))


def test_cyclicity_against_graph_search():
    for pqr in itertools.product(range(-2, 3), repeat=3):
        b = Rank3Params(*pqr).to_matrix()
        assert is_cyclic_3(b) == has_directed_cycle(b)


def test_c_invariant_examples():
    assert c_invariant(chain_matrix(3)) == 2
    assert c_invariant(Rank3Params(2, -2, 2).to_matrix()) == 20
    assert c_invariant(SkewMatrix.zeros(3)) == 0


def test_wrong_size():
    for f in (is_cyclic_3, c_invariant, markov_delta_identity):
        with pytest.raises(ValueError):
            f(chain_matrix(4))


@pytest.mark.parametrize(
    "b,det",
    [(SkewMatrix.zeros(3), 8), (chain_matrix(3), 4), (Rank3Params(2, -2, 2).to_matrix(), -32)],
)
def test_identity_examples(b, det):
    rep = markov_delta_identity(b)
    assert rep.det == rep.det_formula == det
    assert rep.delta == 0 and rep.passed


def test_identity_small_sweep():
    for pqr in itertools.product(range(-6, 7), repeat=3):
        rep = markov_delta_identity(Rank3Params(*pqr).to_matrix())
        assert rep.passed, pqr
    assert companion_det_formula(1, 1, 1) == 4


def test_c_parity_along_orbits():
    # the residue of C mod 2 is what the delta identity pins down
    rng = random.Random(5)
    for _ in range(200):
        b = Rank3Params(*(rng.randint(-4, 4) for _ in range(3))).to_matrix()
        c = c_invariant(b) % 2
        for _ in range(5):
            b = mutate(b, rng.randint(1, 3))
            assert c_invariant(b) % 2 == c


def test_c_exact_value_drifts():
    # taken literally the branch rule is not stable under mutation:
    # weights (3,3,3) around a cycle go to (3,3,6)
    b = Rank3Params(3, -3, 3).to_matrix()
    b2 = mutate(b, 2)
    assert is_cyclic_3(b) and is_cyclic_3(b2)
    assert (c_invariant(b), c_invariant(b2)) == (54, 0)
