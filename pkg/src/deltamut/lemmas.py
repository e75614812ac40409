"""Executable forms of the identities behind mutation invariance of delta.

Each oracle validates its preconditions and raises ``PreconditionError``
when they fail. Identities that are theorems raise ``InvariantViolation``
when a computed value contradicts them; parity/residue oracles return the
values so a caller can tabulate them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .delta import companion, upper_part
from .linalg import (
    IntMatrix,
    InvariantViolation,
    PermutationMatrix,
    SkewMatrix,
    conjugate,
    det_exact,
    elementary,
)
from .mutation import mutate, permute, replicating_matrix


class PreconditionError(ValueError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def lemma1_check(z: SkewMatrix, v: IntMatrix, w: IntMatrix) -> bool:
    """Whether ``v - w`` is symmetric, given ``z == v - v^t == w - w^t``."""
    _require(z.is_skew(), "z must be skew-symmetric")
    _require(v - v.T == z, "z != v - v^t")
    _require(w - w.T == z, "z != w - w^t")
    return (v - w).is_symmetric()


@dataclass(frozen=True)
class DiagonalProfile:
    t: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self):
        if any(b != 2 * a for a, b in zip(self.t, self.tau)) or len(self.t) != len(self.tau):
            raise InvariantViolation("tau must equal 2 t")
        if any(a % 2 for a in self.t):
            raise InvariantViolation(f"odd diagonal entry in t={self.t}")


def lemma3_closed_form(b: SkewMatrix, k: int) -> tuple[int, ...]:
    """Diagonal of ``M_k V(B) M_k^t - V(mu_k(B))`` by cases on ``i`` versus ``k``.

    Row ``i < k`` gives ``(b_ik + max(0, -b_ik)) max(0, -b_ik)``, which is
    always 0; row ``i > k`` gives ``(b_ki + max(0, b_ki)) max(0, b_ki)``,
    i.e. ``2 b_ki^2`` when ``b_ki > 0``; row ``k`` gives 0.
    """
    if not 1 <= k <= b.n:
        raise IndexError(f"k={k} out of range 1..{b.n}")
    c = k - 1
    t = []
    for i in range(b.n):
        if i < c:
            e = max(0, -b.rows[i][c])
            t.append((b.rows[i][c] + e) * e)
        elif i == c:
            t.append(0)
        else:
            p = max(0, b.rows[c][i])
            t.append((b.rows[c][i] + p) * p)
    return tuple(t)


def lemma3_profile(b: SkewMatrix, k: int) -> DiagonalProfile:
    t = lemma3_closed_form(b, k)
    m = replicating_matrix(b, k).mat
    diff = conjugate(m, companion(b).s) - companion(mutate(b, k)).s
    tau = tuple(diff.rows[i][i] for i in range(b.n))
    if tau != tuple(2 * x for x in t):
        raise InvariantViolation(f"closed form 2t={[2 * x for x in t]} but diagonal is {list(tau)}")
    if any(x % 4 for x in tau):
        raise InvariantViolation(f"diagonal {tau} not divisible by 4")
    return DiagonalProfile(t, tau)


def _check_pair(x: IntMatrix, y: IntMatrix, xname: str) -> None:
    _require(x.is_square and x.shape == y.shape, "operands must be square of equal size")
    _require(x.is_symmetric(), f"{xname} must be symmetric")
    _require(y.is_symmetric(), "y must be symmetric")
    _require(all(y.rows[i][i] == 0 for i in range(y.n_rows)), "y must have zero diagonal")


def lemma2_trace_parity(x: IntMatrix, y: IntMatrix) -> int:
    """``tr(x y) mod 2`` for symmetric ``x`` and zero-diagonal symmetric ``y``; always 0."""
    _check_pair(x, y, "x")
    # tr(xy) = sum_ij x_ij y_ji
    return sum(a * b for rx, ry in zip(x.rows, y.rows) for a, b in zip(rx, ry)) % 2


def lemma2_det_shift(r: IntMatrix, y: IntMatrix) -> tuple[int, int]:
    """``(det(r) mod 4, det(r + 2y) mod 4)``; the two residues always agree."""
    _check_pair(r, y, "r")
    return det_exact(r) % 4, det_exact(r + 2 * y) % 4


def perm_companion_diff(b: SkewMatrix, k: int) -> IntMatrix:
    """``P S(B) P^t - S(P B P^t)`` for the adjacent transposition ``P = s_k``.

    Raises unless it equals ``2 b_{k,k+1} (e_{k,k+1} + e_{k+1,k})``.
    """
    n = b.n
    if not 1 <= k <= n - 1:
        raise IndexError(f"k={k} out of range 1..{n - 1}")
    p = PermutationMatrix.transposition(n, k, k + 1)
    diff = conjugate(p.matrix, companion(b).s) - companion(permute(b, p)).s
    expected = 2 * b.entry(k, k + 1) * (elementary(k, k + 1, n) + elementary(k + 1, k, n))
    if diff != expected:
        raise InvariantViolation(f"permutation difference at k={k} is not 2 b_k,k+1 (e + e^t)")
    return diff


def mutation_companion_diff(b: SkewMatrix, k: int) -> IntMatrix:
    """``M_k S(B) M_k^t - S(mu_k(B))``, verified to be ``2T`` with ``T`` symmetric, even diagonal."""
    m = replicating_matrix(b, k).mat
    mu = mutate(b, k)
    diff = conjugate(m, companion(b).s) - companion(mu).s
    t = conjugate(m, upper_part(b)) - upper_part(mu)
    if diff != 2 * t:
        raise InvariantViolation("difference of companions is not 2T")
    if not t.is_symmetric():
        raise InvariantViolation("T is not symmetric")
    if any(t.rows[i][i] % 2 for i in range(b.n)):
        raise InvariantViolation("T has an odd diagonal entry")
    # 0/1 reduction of T: 2T and 2T° agree mod 4
    t01 = t.mod(2)
    if (2 * t - 2 * t01).mod(4) != IntMatrix.zeros(b.n):
        raise InvariantViolation("2T differs from its 0/1 reduction mod 4")
    return diff
