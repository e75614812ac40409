"""Bounded breadth-first exploration of mutation classes.

Nodes are deduplicated by a canonical form under simultaneous row/column
permutation. For ``n <= 8`` that form is the lexicographically least
row-major matrix over all ``n!`` relabelings; larger matrices fall back to
exact-match deduplication (flagged on the report).
"""

from __future__ import annotations

import hashlib
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .delta import delta, delta_parity_class
from .linalg import DimensionError, PermutationMatrix, SkewMatrix, det_exact, smith_report
from .matio import format_text
from .mutation import MutationSequence, mutate, mutate_sequence, permute, relabel

log = logging.getLogger(__name__)

CANONICAL_MAX_N = 8
_INT64_SAFE = 1 << 62


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp)


def _canonical_perm(b: SkewMatrix) -> tuple[int, ...]:
    """0-based relabeling that sends ``b`` to its canonical form."""
    n = b.n
    if n > CANONICAL_MAX_N:
        return tuple(range(n))
    if n == 1:
        return (0,)
    perms = _perm_table(n)
    if b.max_abs() < _INT64_SAFE:
        arr = np.array(b.rows, dtype=np.int64)
        stacked = arr[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
        # lexsort treats the last key as primary
        best = np.lexsort(stacked.T[::-1])[0]
        return tuple(int(x) for x in perms[best])
    rows = b.rows
    best_key, best_perm = None, None
    for p in itertools.permutations(range(n)):
        key = tuple(rows[i][j] for i in p for j in p)
        if best_key is None or key < best_key:
            best_key, best_perm = key, p
    return best_perm


def canonical_form(b: SkewMatrix) -> SkewMatrix:
    """Least ``P b P^t`` in row-major lexicographic order (identity for ``n > 8``)."""
    return relabel(b, _canonical_perm(b))


def digest(b: SkewMatrix) -> str:
    return hashlib.sha256(format_text(b).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class InvariantReport:
    n: int
    delta: int
    parity: str
    rank: int
    smith: tuple[int, ...]
    column_gcds: tuple[int, ...]
    det: int

    def lines(self) -> list[str]:
        return [
            f"delta={self.delta} n={self.n} parity={self.parity}",
            f"rank={self.rank}",
            "smith=" + ",".join(map(str, self.smith)),
            "column_gcds=" + ",".join(map(str, self.column_gcds)),
            f"det={self.det}",
        ]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "parity": self.parity,
            "rank": self.rank,
            "smith": list(self.smith),
            "column_gcds": list(self.column_gcds),
            "det": self.det,
        }


def invariant_report(b: SkewMatrix) -> InvariantReport:
    d = delta(b)
    s = smith_report(b)
    return InvariantReport(
        n=b.n,
        delta=d,
        parity=delta_parity_class(b.n, d),
        rank=s.rank,
        smith=s.invariant_factors,
        column_gcds=s.column_gcds,
        det=det_exact(b),
    )


@dataclass(frozen=True)
class OrbitReport:
    seed_matrix: SkewMatrix
    visited: int
    depth_reached: int
    delta_constant: bool
    max_abs_entry: int
    truncated: bool
    delta: int
    nodes: tuple[SkewMatrix, ...]
    depths: tuple[int, ...]
    canonical_exact: bool

    def lines(self) -> list[str]:
        out = [
            f"n={self.seed_matrix.n}",
            f"visited={self.visited}",
            f"depth_reached={self.depth_reached}",
            f"delta={self.delta}",
            f"delta_constant={str(self.delta_constant).lower()}",
            f"max_abs_entry={self.max_abs_entry}",
            f"truncated={str(self.truncated).lower()}",
            f"canonical_exact={str(self.canonical_exact).lower()}",
        ]
        out.extend(
            f"node {i} depth={d} {digest(m)}"
            for i, (m, d) in enumerate(zip(self.nodes, self.depths))
        )
        return out


def _children(b: SkewMatrix):
    """Mutations in direction order, each paired with its canonical form."""
    out = []
    for k in range(1, b.n + 1):
        child = mutate(b, k)
        out.append((k, child, canonical_form(child)))
    return out


def _expand_level(frontier, pool, workers):
    if pool is None or len(frontier) < 2:
        return [_children(b) for b in frontier]
    chunks = max(1, len(frontier) // (4 * workers))
    return list(pool.map(_children, frontier, chunksize=chunks))


def orbit_bfs(
    b: SkewMatrix,
    max_depth: int,
    max_nodes: int,
    max_entry: int,
    workers: int = 1,
) -> OrbitReport:
    """Breadth-first walk of the mutation class of ``b`` within the given budgets.

    Children are generated for ``k = 1..n`` and merged level by level in
    frontier order, so the visited set does not depend on ``workers``.
    Children with an entry larger than ``max_entry`` are pruned. ``truncated``
    is set when any budget cut off an unseen class.
    """
    if max_depth < 0 or max_nodes < 1 or max_entry < 1:
        raise ValueError("budgets must be positive")
    start = canonical_form(b)
    d0 = delta(b)
    seen = {start}
    nodes, depths = [start], [0]
    delta_ok = True
    truncated = False
    frontier = [start]
    depth = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier and depth < max_depth:
            nxt = []
            for kids in _expand_level(frontier, pool, workers):
                for _, child, c in kids:
                    if c in seen:
                        continue
                    if c.max_abs() > max_entry or len(nodes) >= max_nodes:
                        truncated = True
                        continue
                    seen.add(c)
                    nodes.append(c)
                    depths.append(depth + 1)
                    nxt.append(c)
                    if delta(child) != d0 or delta(c) != d0:
                        delta_ok = False
                        log.error("delta changed along the orbit at %s", digest(c))
            frontier = nxt
            if nxt:
                depth += 1
        if frontier and not truncated:
            # the depth budget only matters if the next level holds a new class
            truncated = any(
                c not in seen and c.max_abs() <= max_entry
                for kids in _expand_level(frontier, pool, workers)
                for _, _, c in kids
            )
    finally:
        if pool is not None:
            pool.shutdown()
    return OrbitReport(
        seed_matrix=b,
        visited=len(nodes),
        depth_reached=max(depths),
        delta_constant=delta_ok,
        max_abs_entry=max(m.max_abs() for m in nodes),
        truncated=truncated,
        delta=d0,
        nodes=tuple(nodes),
        depths=tuple(depths),
        canonical_exact=b.n <= CANONICAL_MAX_N,
    )


@dataclass(frozen=True)
class EquivalenceVerdict:
    """``Equivalent`` carries a replayable witness; ``Unknown`` claims nothing."""

    status: str
    sequence: Optional[MutationSequence] = None
    permutation: Optional[PermutationMatrix] = None
    explored: int = 0

    @property
    def equivalent(self) -> bool:
        return self.status == "Equivalent"

    def replay(self, b: SkewMatrix) -> SkewMatrix:
        if not self.equivalent:
            raise ValueError("no witness to replay")
        return permute(mutate_sequence(b, self.sequence), self.permutation)


def bounded_equivalence(
    b: SkewMatrix,
    b2: SkewMatrix,
    max_depth: int,
    max_nodes: int,
    max_entry: int = 10**12,
) -> EquivalenceVerdict:
    """Search for a mutation sequence and permutation taking ``b`` to ``b2``."""
    if b.shape != b2.shape:
        raise DimensionError(f"size mismatch {b.shape} vs {b2.shape}")
    target_perm = _canonical_perm(b2)
    target = relabel(b2, target_perm)

    def witness(m: SkewMatrix, path: tuple[int, ...]):
        sigma = _canonical_perm(m)
        if relabel(m, sigma) != target:
            return None
        # sigma takes m to the target and target_perm takes b2 there, so
        # b2 is m relabeled by sigma composed with the inverse of target_perm
        inv = [0] * len(target_perm)
        for i, p in enumerate(target_perm):
            inv[p] = i
        rho = PermutationMatrix(tuple(sigma[inv[i]] + 1 for i in range(len(inv))))
        verdict = EquivalenceVerdict("Equivalent", MutationSequence(path), rho)
        if verdict.replay(b) != b2:
            log.error("witness failed to replay; treating as unknown")
            return None
        return verdict

    found = witness(b, ())
    if found:
        return EquivalenceVerdict(found.status, found.sequence, found.permutation, 1)
    seen = {canonical_form(b)}
    frontier = [(b, ())]
    for _ in range(max_depth):
        nxt = []
        for m, path in frontier:
            for k in range(1, b.n + 1):
                child = mutate(m, k)
                c = canonical_form(child)
                if c in seen or child.max_abs() > max_entry:
                    continue
                seen.add(c)
                if c == target:
                    found = witness(child, path + (k,))
                    if found:
                        return EquivalenceVerdict(
                            found.status, found.sequence, found.permutation, len(seen)
                        )
                if len(seen) >= max_nodes:
                    return EquivalenceVerdict("Unknown", explored=len(seen))
                nxt.append((child, path + (k,)))
        if not nxt:
            break
        frontier = nxt
    return EquivalenceVerdict("Unknown", explored=len(seen))
