"""Named check batteries behind the ``check-lemmas`` and ``verify-paper`` commands."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from . import fixtures
from .arf import arf_invariant, rank_mod2
from .congruence import CongruenceWitness, counterexample_pair
from .delta import delta, upper_part
from .linalg import (
    IntMatrix,
    SkewMatrix,
    conjugate,
    det_exact,
    elementary,
    smith_report,
)
from .lemmas import (
    lemma1_check,
    lemma2_det_shift,
    lemma2_trace_parity,
    lemma3_profile,
    mutation_companion_diff,
    perm_companion_diff,
)
from .markov import markov_delta_identity, Rank3Params
from .mutation import mutate, replicating_matrix


@dataclass(frozen=True)
class CheckResult:
    group: str
    name: str
    passed: bool
    cases: int
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{status}  {self.group}/{self.name}  cases={self.cases}  {self.seconds:.2f}s{extra}"


def _run(group: str, name: str, fn: Callable[[], tuple[bool, int, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, cases, detail = fn()
    except Exception as exc:  # a check that raises is a failed check
        ok, cases, detail = False, 0, f"{type(exc).__name__}: {exc}"
    return CheckResult(group, name, ok, cases, detail, time.perf_counter() - t0)


# -- case generators ---------------------------------------------------------

def all_skew(n: int, lo: int, hi: int) -> Iterator[SkewMatrix]:
    pos = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for vals in itertools.product(range(lo, hi + 1), repeat=len(pos)):
        yield SkewMatrix.from_upper(n, dict(zip(pos, vals)))


def _symmetric(n: int, vals, zero_diag: bool) -> IntMatrix:
    rows = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i if not zero_diag else i + 1, n):
            rows[i][j] = rows[j][i] = next(it)
    return IntMatrix._trusted(tuple(map(tuple, rows)))


def all_symmetric(n: int, lo: int, hi: int, zero_diag: bool = False) -> Iterator[IntMatrix]:
    count = n * (n - 1) // 2 + (0 if zero_diag else n)
    for vals in itertools.product(range(lo, hi + 1), repeat=count):
        yield _symmetric(n, vals, zero_diag)


def random_skew_uniform(rng: random.Random, n: int, bound: int) -> SkewMatrix:
    return SkewMatrix.from_upper(
        n, {(i, j): rng.randint(-bound, bound) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    )


def random_symmetric(rng: random.Random, n: int, bound: int, zero_diag: bool = False) -> IntMatrix:
    count = n * (n - 1) // 2 + (0 if zero_diag else n)
    return _symmetric(n, [rng.randint(-bound, bound) for _ in range(count)], zero_diag)


def _random_cases(seed: int, count: int, tag: str):
    rng = random.Random(f"{seed}:{tag}")
    for _ in range(count):
        yield rng, rng.randint(2, 8)


# -- the lemma battery -------------------------------------------------------

def _lemma1_exhaustive():
    cases = 0
    # every v with entries in [-2, 2] whose skew part also stays in [-2, 2],
    # compared with the canonical decomposition V(z)
    pair_vals = [(a, b) for a in range(-2, 3) for b in range(-2, 3) if abs(a - b) <= 2]
    for diag in itertools.product(range(-2, 3), repeat=3):
        for (a, a2), (b, b2), (c, c2) in itertools.product(pair_vals, repeat=3):
            v = IntMatrix._trusted(((diag[0], a, b), (a2, diag[1], c), (b2, c2, diag[2])))
            z = SkewMatrix.from_matrix(v - v.T)
            if not lemma1_check(z, v, upper_part(z)):
                return False, cases, f"v={v.tolist()}"
            cases += 1
    for b in all_skew(3, -2, 2):
        for k in (1, 2, 3):
            m = replicating_matrix(b, k).mat
            mu = mutate(b, k)
            if not lemma1_check(mu, conjugate(m, upper_part(b)), upper_part(mu)):
                return False, cases, f"b={b.tolist()} k={k}"
            cases += 1
    return True, cases, ""


def _lemma1_random(seed: int, count: int):
    for idx, (rng, n) in enumerate(_random_cases(seed, count, "lemma1")):
        b = random_skew_uniform(rng, n, 10)
        k = rng.randint(1, n)
        m = replicating_matrix(b, k).mat
        mu = mutate(b, k)
        if not lemma1_check(mu, conjugate(m, upper_part(b)), upper_part(mu)):
            return False, idx, f"b={b.tolist()} k={k}"
        v = upper_part(b)
        if not lemma1_check(b, v, v + random_symmetric(rng, n, 20)):
            return False, idx, f"b={b.tolist()} shifted"
    return True, count, ""


def _per_skew_exhaustive(fn, ks):
    cases = 0
    for b in all_skew(3, -2, 2):
        for k in ks(b):
            fn(b, k)
            cases += 1
    return True, cases, ""


def _per_skew_random(fn, seed, count, tag, ks):
    for rng, n in _random_cases(seed, count, tag):
        b = random_skew_uniform(rng, n, 10)
        for k in ks(b):
            fn(b, k)
    return True, count, ""


def _all_k(b):
    return range(1, b.n + 1)


def _adjacent_k(b):
    return range(1, b.n)


def _trace_exhaustive():
    ys = list(all_symmetric(3, -2, 2, zero_diag=True))
    cases = 0
    for x in all_symmetric(3, -2, 2):
        for y in ys:
            if lemma2_trace_parity(x, y):
                return False, cases, f"x={x.tolist()} y={y.tolist()}"
            cases += 1
    return True, cases, ""


def _trace_random(seed, count):
    for idx, (rng, n) in enumerate(_random_cases(seed, count, "trace")):
        x = random_symmetric(rng, n, 20)
        y = random_symmetric(rng, n, 20, zero_diag=True)
        if lemma2_trace_parity(x, y):
            return False, idx, f"x={x.tolist()} y={y.tolist()}"
    return True, count, ""


def _det_shift_exhaustive():
    ys = list(all_symmetric(3, -2, 2, zero_diag=True))
    cases = 0
    for r in all_symmetric(3, -2, 2):
        for y in ys:
            a, b = lemma2_det_shift(r, y)
            if a != b:
                return False, cases, f"r={r.tolist()} y={y.tolist()}"
            cases += 1
    return True, cases, ""


def _det_shift_random(seed, count):
    for idx, (rng, n) in enumerate(_random_cases(seed, count, "detshift")):
        r = random_symmetric(rng, n, 20)
        if rng.random() < 0.5:
            i, j = rng.sample(range(1, n + 1), 2)
            y = elementary(i, j, n) + elementary(j, i, n)
        else:
            y = random_symmetric(rng, n, 20, zero_diag=True)
        a, b = lemma2_det_shift(r, y)
        if a != b:
            return False, idx, f"r={r.tolist()} y={y.tolist()}"
    return True, count, ""


def lemma_battery(seed: int = 0, n_random: int = 500, exhaustive: bool = True) -> list[CheckResult]:
    """Every lemma oracle, exhaustively at n=3 (entries in [-2, 2]) and on seeded random inputs."""
    jobs: list[tuple[str, Callable]] = []
    if exhaustive:
        jobs += [
            ("lemma1 exhaustive n=3", _lemma1_exhaustive),
            ("lemma3 exhaustive n=3", lambda: _per_skew_exhaustive(lemma3_profile, _all_k)),
            ("lemma2 trace exhaustive n=3", _trace_exhaustive),
            ("lemma2 det shift exhaustive n=3", _det_shift_exhaustive),
            ("perm companion exhaustive n=3", lambda: _per_skew_exhaustive(perm_companion_diff, _adjacent_k)),
            ("mutation companion exhaustive n=3", lambda: _per_skew_exhaustive(mutation_companion_diff, _all_k)),
        ]
    jobs += [
        ("lemma1 random", lambda: _lemma1_random(seed, n_random)),
        ("lemma3 random", lambda: _per_skew_random(lemma3_profile, seed, n_random, "lemma3", _all_k)),
        ("lemma2 trace random", lambda: _trace_random(seed, n_random)),
        ("lemma2 det shift random", lambda: _det_shift_random(seed, n_random)),
        ("perm companion random", lambda: _per_skew_random(perm_companion_diff, seed, n_random, "perm", _adjacent_k)),
        ("mutation companion random", lambda: _per_skew_random(mutation_companion_diff, seed, n_random, "mut", _all_k)),
    ]
    return [_run("lemmas", name, fn) for name, fn in jobs]


# -- published examples --------------------------------------------------------

def _pair5(directory):
    b = SkewMatrix.from_matrix(fixtures.load("b_31", directory))
    bp = SkewMatrix.from_matrix(fixtures.load("bp_31", directory))
    x = fixtures.load("x_31", directory)
    problems = []
    if conjugate(x, b) != bp:
        problems.append("B' != X B X^t")
    if det_exact(x) != 1:
        problems.append("det X != 1")
    for name, m in (("B", b), ("B'", bp)):
        s = smith_report(m)
        if s.invariant_factors != (1, 1, 1, 1, 0) or s.rank != 4 or set(s.column_gcds) != {1}:
            problems.append(f"classical invariants of {name}")
    if (delta(b), delta(bp)) != (0, 2):
        problems.append(f"delta pair {(delta(b), delta(bp))} != (0, 2)")
    return not problems, 1, "; ".join(problems)


def _chain(n_values: Iterable[int]):
    def run():
        cases = 0
        for n in n_values:
            w = counterexample_pair(n)
            want = (0, 2) if n % 4 == 3 else (2, 0)
            if w.report.delta_pair != want or not w.report.passed:
                return False, cases, f"n={n}: delta pair {w.report.delta_pair}"
            if n >= 5:
                shifted = w.b + elementary(n - 1, 1, n) - elementary(1, n - 1, n)
                if w.b_conj != shifted:
                    return False, cases, f"n={n}: conjugate is not A_n + e(n-1,1) - e(1,n-1)"
            cases += 1
        return True, cases, ""

    return run


def _markov_sweep(bound: int):
    def run():
        cases = 0
        for p, q, r in itertools.product(range(-bound, bound + 1), repeat=3):
            rep = markov_delta_identity(Rank3Params(p, q, r).to_matrix())
            if not rep.passed:
                return False, cases, f"(p,q,r)=({p},{q},{r})"
            cases += 1
        return True, cases, ""

    return run


def _rows(m: IntMatrix):
    return [list(r) for r in m.rows]


def _arf(directory):
    problems = []
    for stem, want in (("arf_b", (2, 1)), ("arf_bp", (0, 1))):
        b = SkewMatrix.from_matrix(fixtures.load(stem, directory))
        if rank_mod2(b) != 4:
            problems.append(f"{stem}: rank mod 2 = {rank_mod2(b)}")
        got = (delta(b), arf_invariant(b))
        if got != want:
            problems.append(f"{stem}: (delta, Arf) = {got}, expected {want}")
        vecs = _rows(fixtures.load(stem + "_pairs", directory))
        pairs = [(vecs[i], vecs[i + 1]) for i in range(0, len(vecs), 2)]
        basis = _rows(fixtures.load(stem + "_basis", directory))
        explicit = arf_invariant(b, basis=basis, pairs=pairs)
        if explicit != want[1]:
            problems.append(f"{stem}: Arf with explicit basis = {explicit}")
    return not problems, 2, "; ".join(problems)


def _appendix(stem):
    def run(directory):
        b = SkewMatrix.from_matrix(fixtures.load(stem + "_b", directory))
        x = fixtures.load(stem + "_x", directory)
        w = CongruenceWitness(b, conjugate(x, b), x)
        if not w.report.passed:
            failed = [k for k, ok in w.report.checks.items() if not ok]
            return False, 1, "failed: " + ", ".join(failed)
        return True, 1, f"delta {w.report.delta_pair[0]} vs {w.report.delta_pair[1]}"

    return run


GROUPS = ("pair5", "chain", "markov", "arf", "appendix", "lemmas")


def verify_published(
    only: Optional[Iterable[str]] = None,
    fixtures_dir: Optional[Path] = None,
    seed: int = 0,
) -> list[CheckResult]:
    """Run every published example; ``only`` restricts to the named groups."""
    selected = set(GROUPS if only is None else only)
    unknown = selected - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown check groups: {sorted(unknown)}")
    d = fixtures_dir
    out = []
    if "pair5" in selected:
        out.append(_run("pair5", "5x5 congruent pair", lambda: _pair5(d)))
    if "chain" in selected:
        out.append(_run("chain", "A_n / X_n family n=3..13", _chain(range(3, 14, 2))))
    if "markov" in selected:
        out.append(_run("markov", "rank-3 identity sweep [-20,20]^3", _markov_sweep(20)))
    if "arf" in selected:
        out.append(_run("arf", "Arf comparison pair", lambda: _arf(d)))
    if "appendix" in selected:
        out.append(_run("appendix", "appendix n=9", lambda: _appendix("app9")(d)))
        out.append(_run("appendix", "appendix n=13", lambda: _appendix("app13")(d)))
    if "lemmas" in selected:
        out.extend(lemma_battery(seed=seed))
    return out
