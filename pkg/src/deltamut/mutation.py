"""Matrix mutation through replicating matrices, plus an entrywise oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .linalg import (
    IntMatrix,
    PermutationMatrix,
    SkewMatrix,
    DimensionError,
    conjugate,
)


def _check_index(b: IntMatrix, k: int) -> None:
    if not 1 <= k <= b.n_rows:
        raise IndexError(f"mutation index {k} out of range 1..{b.n_rows}")


@dataclass(frozen=True)
class MutationSequence:
    """Mutation directions (1-based), applied left to right."""

    steps: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(k) for k in self.steps))

    @classmethod
    def parse(cls, text: str) -> "MutationSequence":
        """Parse ``"3,1,4"``; an empty or blank string is the empty sequence."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError:
            raise ValueError(f"bad mutation sequence {text!r}") from None

    def validate(self, n: int) -> None:
        for k in self.steps:
            if not 1 <= k <= n:
                raise IndexError(f"mutation index {k} out of range 1..{n}")

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self):
        return ",".join(map(str, self.steps))


@dataclass(frozen=True)
class ReplicatingMatrix:
    """``J_k + E_k``: identity with -1 at (k, k) and ``max(0, -b_ik)`` down column k."""

    k: int
    mat: IntMatrix


def replicating_matrix(b: SkewMatrix, k: int) -> ReplicatingMatrix:
    _check_index(b, k)
    n = b.n
    col = k - 1
    rows = []
    for i in range(n):
        row = [0] * n
        if i == col:
            row[i] = -1
        else:
            row[i] = 1
            row[col] = max(0, -b.rows[i][col])
        rows.append(tuple(row))
    return ReplicatingMatrix(k, IntMatrix._trusted(tuple(rows)))


def mutate(b: SkewMatrix, k: int) -> SkewMatrix:
    """Mutation at ``k``: ``M_k B M_k^t``."""
    m = replicating_matrix(b, k).mat
    # conjugate() raises InvariantViolation if the result is not skew
    return conjugate(m, b)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate_entrywise(b: SkewMatrix, k: int) -> SkewMatrix:
    """Classical entrywise mutation rule; used to cross-check :func:`mutate`."""
    _check_index(b, k)
    c = k - 1
    rows = b.rows
    rk = rows[c]
    out = []
    for i, row in enumerate(rows):
        bik = row[c]
        if i == c:
            out.append(tuple(-x for x in row))
            continue
        s = _sign(bik)
        out.append(
            tuple(
                -x if j == c else x + s * max(0, bik * rk[j])
                for j, x in enumerate(row)
            )
        )
    return SkewMatrix._trusted(tuple(out))


def mutate_sequence(b: SkewMatrix, seq: MutationSequence | Iterable[int]) -> SkewMatrix:
    if not isinstance(seq, MutationSequence):
        seq = MutationSequence(tuple(seq))
    seq.validate(b.n)
    for k in seq:
        b = mutate(b, k)
    return b


def relabel(b: IntMatrix, perm: tuple[int, ...]) -> IntMatrix:
    """``b'[i][j] = b[perm[i]][perm[j]]`` with a 0-based ``perm``."""
    rows = b.rows
    data = tuple(tuple(rows[p][q] for q in perm) for p in perm)
    if isinstance(b, SkewMatrix):
        return SkewMatrix._trusted(data)
    return IntMatrix._trusted(data)


def permute(b: SkewMatrix, p: PermutationMatrix) -> SkewMatrix:
    """Simultaneous row/column permutation ``P B P^t``."""
    if p.n != b.n_rows:
        raise DimensionError(f"permutation of size {p.n} applied to a {b.n_rows}x{b.n_cols} matrix")
    return relabel(b, tuple(x - 1 for x in p.perm))
