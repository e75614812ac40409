import pytest

from deltamut import (
    CongruenceWitness,
    IntMatrix,
    RngConfig,
    SkewMatrix,
    chain_matrix,
    conjugate,
    counterexample_pair,
    delta,
    det_exact,
    elementary,
    random_skew,
    random_unimodular,
    search_delta_discrepancy,
    shear_matrix,
    upper_part,
    verify_witness,
)
from deltamut import fixtures


def test_chain_matrix():
    assert chain_matrix(3) == IntMatrix([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
    assert chain_matrix(1) == SkewMatrix.zeros(1)


@pytest.mark.parametrize("n", [3, 7, 11, 15])
def test_chain_delta_three_mod_four(n):
    assert delta(chain_matrix(n)) == 0


@pytest.mark.parametrize("n", [5, 9, 13, 17])
def test_chain_delta_one_mod_four(n):
    assert delta(chain_matrix(n)) == 2


def test_shear_matrix():
    assert shear_matrix(3) == IntMatrix([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    assert all(det_exact(shear_matrix(n)) == 1 for n in range(2, 12))
    with pytest.raises(ValueError):
        shear_matrix(1)


@pytest.mark.parametrize("n", [5, 7, 9, 21])
def test_shear_conjugate_shifts_corner(n):
    a = chain_matrix(n)
    expected = a + elementary(n - 1, 1, n) - elementary(1, n - 1, n)
    assert conjugate(shear_matrix(n), a) == expected


@pytest.mark.parametrize("n,pair", [(3, (0, 2)), (5, (2, 0)), (7, (0, 2))])
def test_counterexample_pair(n, pair):
    w = counterexample_pair(n)
    assert w.report.delta_pair == pair
    assert w.report.passed
    # at n = 3 the conjugate has a zero column, so only larger n agree here
    assert w.report.checks["column gcd multiset"] == (n >= 5)


@pytest.mark.parametrize("n", [1, 2, 4, 10])
def test_counterexample_pair_rejects(n):
    with pytest.raises(ValueError):
        counterexample_pair(n)


def test_random_unimodular_contract():
    for seed in range(30):
        cfg = RngConfig(seed, 500)
        x = random_unimodular(cfg, 5)
        assert abs(det_exact(x)) == 1
        assert x.max_abs() <= 500
        assert random_unimodular(cfg, 5) == x


def test_random_unimodular_varies():
    samples = {random_unimodular(RngConfig(s), 5) for s in range(100)}
    assert len(samples) >= 2


def test_random_unimodular_small_sizes():
    for seed in range(10):
        assert abs(det_exact(random_unimodular(RngConfig(seed), 1))) == 1
        assert abs(det_exact(random_unimodular(RngConfig(seed), 2))) == 1


def test_random_skew_construction():
    cfg = RngConfig(7, 1000)
    b = random_skew(cfg, 6)
    assert b.is_skew()
    n_mat = random_unimodular(cfg, 6)
    expected_v = IntMatrix(
        [[n_mat.rows[i][j] if j > i else int(i == j) for j in range(6)] for i in range(6)]
    )
    assert upper_part(b) == expected_v


def test_random_skew_odd_delta():
    for seed in range(200):
        assert delta(random_skew(RngConfig(seed), 5)) in (0, 2)


def test_derived_seeds_stable():
    cfg = RngConfig(123)
    assert cfg.derive(4, "B") == cfg.derive(4, "B")
    assert cfg.derive(4, "B").seed != cfg.derive(4, "X").seed
    assert RngConfig(-1).seed == 2**64 - 1


def test_search_finds_witness_and_replays():
    w = search_delta_discrepancy(RngConfig(0), 5, 1000)
    assert w is not None
    assert conjugate(w.x, w.b) == w.b_conj
    assert abs(delta(w.b) - delta(w.b_conj)) == 2
    assert verify_witness(w).passed
    again = search_delta_discrepancy(RngConfig(0), 5, 1000)
    assert again == w


def test_search_forced_first_trial():
    w = search_delta_discrepancy(
        RngConfig(0), 3, 1, forced=[(chain_matrix(3), shear_matrix(3))]
    )
    assert w is not None and w.trial == 0
    assert w.b == chain_matrix(3)
    assert w.report.delta_pair == (0, 2)


def test_search_may_come_back_empty():
    # even size: no discrepancy is known, and a single trial will not find one
    assert search_delta_discrepancy(RngConfig(0), 4, 1) is None


def test_search_parallel_matches_serial():
    serial = search_delta_discrepancy(RngConfig(9), 5, 200)
    parallel = search_delta_discrepancy(RngConfig(9), 5, 200, workers=3)
    assert serial == parallel


def test_verify_witness_published_pair(pair5):
    b, bp, x = pair5
    rep = CongruenceWitness(b, bp, x).report
    assert rep.passed
    assert all(rep.checks[k] for k in ("congruence", "unimodular", "rank", "smith", "det", "column gcd multiset"))
    assert rep.delta_pair == (0, 2)


@pytest.mark.parametrize("stem", ["app9", "app13"])
def test_verify_witness_appendix(stem):
    b = SkewMatrix.from_matrix(fixtures.load(stem + "_b"))
    x = fixtures.load(stem + "_x")
    rep = CongruenceWitness(b, conjugate(x, b), x).report
    assert rep.passed and rep.delta_differs


def test_verify_witness_reports_failures(pair5):
    b, bp, x = pair5
    rep = CongruenceWitness(b, bp, 2 * x).report
    assert not rep.checks["congruence"] and not rep.checks["unimodular"]
    assert not rep.passed
    rep = CongruenceWitness(b, b, IntMatrix.identity(5)).report
    assert rep.congruent and not rep.checks["delta differs"] and not rep.passed
