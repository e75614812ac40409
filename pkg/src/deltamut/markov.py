"""Rank-3 comparison between delta and the Markov constant.

Quiver convention: an arc ``i -> j`` whenever ``b_ij > 0``. Zero entries
give no arc.
"""

from __future__ import annotations

from dataclasses import dataclass

from .delta import companion, delta
from .linalg import SkewMatrix, det_exact


@dataclass(frozen=True)
class Rank3Params:
    """``p = b_12``, ``q = b_13``, ``r = b_23``."""

    p: int
    q: int
    r: int

    @classmethod
    def from_matrix(cls, b: SkewMatrix) -> "Rank3Params":
        _require_3x3(b)
        return cls(b.entry(1, 2), b.entry(1, 3), b.entry(2, 3))

    def to_matrix(self) -> SkewMatrix:
        return SkewMatrix.from_upper(3, {(1, 2): self.p, (1, 3): self.q, (2, 3): self.r})


def _require_3x3(b: SkewMatrix) -> None:
    if b.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got {b.n_rows}x{b.n_cols}")


def markov_constant(p: int, q: int, r: int) -> int:
    return p * p + q * q + r * r - p * q * r


def is_cyclic_3(b: SkewMatrix) -> bool:
    """Whether the quiver of a 3x3 ``b`` is an oriented 3-cycle."""
    x = Rank3Params.from_matrix(b)
    # 1->2->3->1 or its reverse
    return (x.p > 0 and x.r > 0 and x.q < 0) or (x.p < 0 and x.r < 0 and x.q > 0)


def c_invariant(b: SkewMatrix) -> int:
    x = Rank3Params.from_matrix(b)
    if is_cyclic_3(b):
        return markov_constant(x.p, x.q, x.r)
    return markov_constant(x.p, x.q, -x.r)


def companion_det_formula(p: int, q: int, r: int) -> int:
    return 2 * p * q * r - 2 * p * p - 2 * q * q - 2 * r * r + 8


@dataclass(frozen=True)
class MarkovIdentityReport:
    params: Rank3Params
    cyclic: bool
    c: int
    det: int
    det_formula: int
    delta: int

    @property
    def det_matches(self) -> bool:
        return self.det == self.det_formula

    @property
    def delta_matches(self) -> bool:
        return self.delta == (2 * self.c) % 4

    @property
    def passed(self) -> bool:
        return self.det_matches and self.delta_matches


def markov_delta_identity(b: SkewMatrix) -> MarkovIdentityReport:
    x = Rank3Params.from_matrix(b)
    return MarkovIdentityReport(
        params=x,
        cyclic=is_cyclic_3(b),
        c=c_invariant(b),
        det=det_exact(companion(b).s),
        det_formula=companion_det_formula(x.p, x.q, x.r),
        delta=delta(b),
    )
