"""Congruent pairs of skew matrices whose delta invariants differ.

Randomness comes from :class:`random.Random` (MT19937) seeded with the
64-bit ``RngConfig.seed``; per-trial seeds in the search are derived with
SHA-256 so every trial is reproducible on its own.
"""

from __future__ import annotations

import hashlib
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .delta import delta
from .linalg import (
    IntMatrix,
    InvariantViolation,
    SkewMatrix,
    conjugate,
    det_exact,
    elementary,
    smith_report,
)

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RngConfig:
    seed: int = 0
    entry_bound: int = 50000

    def __post_init__(self):
        if self.entry_bound < 1:
            raise ValueError("entry_bound must be positive")
        object.__setattr__(self, "seed", int(self.seed) & _MASK64)

    def derive(self, *labels) -> "RngConfig":
        """Child config whose seed depends only on this seed and ``labels``."""
        key = ":".join(map(str, (self.seed,) + labels)).encode()
        sub = int.from_bytes(hashlib.sha256(key).digest()[:8], "big")
        return RngConfig(sub, self.entry_bound)


def chain_matrix(n: int) -> SkewMatrix:
    """The linear quiver: ``b_{i,i+1} = 1``, ``b_{i+1,i} = -1``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return SkewMatrix.from_upper(n, {(i, i + 1): 1 for i in range(1, n)})


def shear_matrix(n: int) -> IntMatrix:
    """Identity plus a 1 in the top-right corner."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return IntMatrix.identity(n) + elementary(1, n, n)


def random_unimodular(cfg: RngConfig, n: int, steps: int | None = None) -> IntMatrix:
    """Random integer matrix of determinant +1 or -1 with entries bounded by ``cfg.entry_bound``.

    Starts from the identity and applies random row operations: additions of
    a multiple of one row to another (rejected if an entry would exceed the
    bound), swaps and sign flips. The determinant sign is tracked exactly.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(cfg.seed)
    bound = cfg.entry_bound
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    sign = 1
    if steps is None:
        steps = 8 * n * n
    for _ in range(steps):
        op = rng.random()
        if n == 1 or op < 0.1:
            i = rng.randrange(n)
            rows[i] = [-x for x in rows[i]]
            sign = -sign
        elif op < 0.2:
            i, j = rng.sample(range(n), 2)
            rows[i], rows[j] = rows[j], rows[i]
            sign = -sign
        else:
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-3, -2, -1, 1, 2, 3))
            new = [x + c * y for x, y in zip(rows[i], rows[j])]
            if max(map(abs, new)) <= bound:
                rows[i] = new
    x = IntMatrix(rows)
    if det_exact(x) != sign:
        raise InvariantViolation("determinant sign tracking drifted")
    return x


def random_skew(cfg: RngConfig, n: int) -> SkewMatrix:
    """``V - V^t`` where ``V`` is the strict upper part of a random unimodular matrix plus the identity."""
    u = random_unimodular(cfg, n)
    upper = {
        (i + 1, j + 1): u.rows[i][j] for i in range(n) for j in range(i + 1, n)
    }
    return SkewMatrix.from_upper(n, upper)


@dataclass(frozen=True)
class WitnessReport:
    """Recomputed facts about a claimed congruence ``b_conj = x b x^t``."""

    checks: dict[str, bool]
    delta_pair: tuple[int, int]
    rank_pair: tuple[int, int]
    smith_pair: tuple[tuple[int, ...], tuple[int, ...]]
    det_pair: tuple[int, int]
    column_gcds: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def congruent(self) -> bool:
        return self.checks["congruence"] and self.checks["unimodular"]

    @property
    def baselines_equal(self) -> bool:
        return all(self.checks[k] for k in ("rank", "smith", "det"))

    @property
    def delta_differs(self) -> bool:
        return self.delta_pair[0] != self.delta_pair[1]

    @property
    def passed(self) -> bool:
        """A valid congruence, equal classical invariants, different delta."""
        return self.congruent and self.baselines_equal and self.checks["delta differs"]

    def lines(self) -> list[str]:
        out = [f"{name}: {'pass' if ok else 'fail'}" for name, ok in self.checks.items()]
        out.append(f"delta: {self.delta_pair[0]} vs {self.delta_pair[1]}")
        out.append(f"rank: {self.rank_pair[0]} vs {self.rank_pair[1]}")
        out.append(f"smith: {list(self.smith_pair[0])} vs {list(self.smith_pair[1])}")
        out.append(f"column gcds: {list(self.column_gcds[0])} vs {list(self.column_gcds[1])}")
        return out


@dataclass(frozen=True)
class CongruenceWitness:
    b: SkewMatrix
    b_conj: SkewMatrix
    x: IntMatrix
    trial: Optional[int] = None
    report: WitnessReport = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "report", verify_witness(self))


def verify_witness(w: CongruenceWitness) -> WitnessReport:
    """Recompute every field of ``w``; failures are recorded, not raised."""
    b, bc, x = w.b, w.b_conj, w.x
    try:
        congruent = conjugate(x, b) == bc
    except ValueError:
        congruent = False
    dx = det_exact(x) if x.is_square else 0
    sb, sc = smith_report(b), smith_report(bc)
    db, dc = delta(b), delta(bc)
    detb, detc = det_exact(b), det_exact(bc)
    checks = {
        "congruence": congruent,
        "unimodular": dx in (1, -1),
        "skew": b.is_skew() and bc.is_skew(),
        "rank": sb.rank == sc.rank,
        "smith": sb.invariant_factors == sc.invariant_factors,
        "det": detb == detc,
        "column gcd multiset": sorted(sb.column_gcds) == sorted(sc.column_gcds),
        "delta differs": db != dc,
    }
    return WitnessReport(
        checks=checks,
        delta_pair=(db, dc),
        rank_pair=(sb.rank, sc.rank),
        smith_pair=(sb.invariant_factors, sc.invariant_factors),
        det_pair=(detb, detc),
        column_gcds=(sb.column_gcds, sc.column_gcds),
    )


def counterexample_pair(n: int) -> CongruenceWitness:
    """The chain matrix and its congruence by :func:`shear_matrix`, for odd ``n >= 3``."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"counterexample_pair needs odd n >= 3, got {n}")
    a = chain_matrix(n)
    x = shear_matrix(n)
    return CongruenceWitness(a, conjugate(x, a), x)


def _trial(cfg: RngConfig, n: int, index: int):
    b = random_skew(cfg.derive(index, "B"), n)
    x = random_unimodular(cfg.derive(index, "X"), n)
    bc = conjugate(x, b)
    return index, b, x, bc, delta(b) != delta(bc)


def _trial_star(args):
    return _trial(*args)


def search_delta_discrepancy(
    cfg: RngConfig,
    n: int,
    max_trials: int,
    forced: Iterable[tuple[SkewMatrix, IntMatrix]] = (),
    workers: int = 1,
) -> Optional[CongruenceWitness]:
    """Draw congruent pairs ``(B, X B X^t)`` until their deltas differ.

    ``forced`` pairs ``(B, X)`` occupy the first trial indices and count
    against ``max_trials``. Random trial ``i`` depends only on ``cfg`` and
    ``i``; with several workers the smallest discrepant index still wins.
    """
    if max_trials < 1:
        raise ValueError("max_trials must be at least 1")
    forced = list(forced)[:max_trials]
    for index, (b, x) in enumerate(forced):
        bc = conjugate(x, b)
        if delta(b) != delta(bc):
            return CongruenceWitness(b, bc, x, trial=index)
    first = len(forced)

    if workers <= 1:
        for i in range(first, max_trials):
            index, b, x, bc, hit = _trial(cfg, n, i)
            if hit:
                return CongruenceWitness(b, bc, x, trial=index)
        return None

    chunk = 4 * workers
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for start in range(first, max_trials, chunk):
            stop = min(start + chunk, max_trials)
            args = [(cfg, n, i) for i in range(start, stop)]
            # map() yields in submission order, so the first hit is the smallest index
            for index, b, x, bc, hit in pool.map(_trial_star, args):
                if hit:
                    return CongruenceWitness(b, bc, x, trial=index)
    return None
