"""The unipotent part, the quasi-Cartan companion and the delta invariant."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .linalg import IntMatrix, InvariantViolation, SkewMatrix, det_exact

log = logging.getLogger(__name__)

EXPECTED = "expected"
UNEXPECTED = "unexpected"


def upper_part(b: SkewMatrix) -> IntMatrix:
    """``V(B)``: strict upper triangle of ``b``, ones on the diagonal, zero below.

    Satisfies ``b == V - V.T`` exactly.
    """
    n = b.n_rows
    v = IntMatrix._trusted(
        tuple(
            tuple(x if j > i else (1 if i == j else 0) for j, x in enumerate(row))
            for i, row in enumerate(b.rows)
        )
    )
    if v - v.T != b:
        raise InvariantViolation(f"b != V - V^t for a {n}x{n} input")
    return v


@dataclass(frozen=True)
class Companion:
    source: SkewMatrix
    s: IntMatrix


def _companion_rows(b: IntMatrix):
    return tuple(
        tuple(2 if i == j else (row[j] if j > i else b.rows[j][i]) for j in range(len(row)))
        for i, row in enumerate(b.rows)
    )


def companion(b: SkewMatrix) -> Companion:
    """``S(B) = V(B) + V(B)^t``: symmetric, 2 on the diagonal, ``b_ij`` above it."""
    v = upper_part(b)
    return Companion(b, v + v.T)


def delta(b: SkewMatrix) -> int:
    """``det(S(B)) mod 4`` as the least non-negative residue.

    For odd ``n`` the value is always 0 or 2; anything else raises.
    """
    if not b.is_square:
        raise ValueError("delta needs a square matrix")
    d = det_exact(IntMatrix._trusted(_companion_rows(b))) % 4
    if b.n_rows % 2 == 1 and d not in (0, 2):
        raise InvariantViolation(f"odd size {b.n_rows} gave delta={d}")
    return d


def delta_parity_class(n: int, d: int) -> str:
    """Classify ``d`` against the residues observed for size ``n``.

    Odd sizes allow {0, 2}; ``n % 4 == 0`` allows {0, 1}; ``n % 4 == 2``
    allows {0, 3}. The even cases are empirical, so a miss is logged and
    reported, never raised.
    """
    if n % 2 == 1:
        allowed = (0, 2)
    elif n % 4 == 0:
        allowed = (0, 1)
    else:
        allowed = (0, 3)
    if d % 4 in allowed:
        return EXPECTED
    log.warning("delta=%d at n=%d falls outside the usual residues %s", d, n, allowed)
    return UNEXPECTED


def delta_line(b: SkewMatrix) -> str:
    d = delta(b)
    return f"delta={d} n={b.n_rows} parity={delta_parity_class(b.n_rows, d)}"
