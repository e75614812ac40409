"""Skew forms over GF(2): rank, symplectic bases, quadratic refinements, Arf.

Bit vectors are tuples of 0/1 of length ``n``. The default subspace ``N``
on which ``B`` is non-degenerate is spanned by the unit vectors at the
lowest-index pivot columns of ``B mod 2``; the default refinement takes
the value 1 on each of those unit vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import IntMatrix, SkewMatrix

BitVector = tuple[int, ...]


def reduce_mod2(b: IntMatrix) -> tuple[BitVector, ...]:
    return tuple(tuple(x & 1 for x in row) for row in b.rows)


def _vec(v: Sequence[int]) -> BitVector:
    return tuple(int(x) & 1 for x in v)


def pairing(b: IntMatrix, u: Sequence[int], v: Sequence[int]) -> int:
    """``u^t B v mod 2``."""
    return sum(ui * x * vj for ui, row in zip(u, b.rows) if ui for x, vj in zip(row, v)) & 1


def _rref(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    n_cols = len(rows[0]) if rows else 0
    for c in range(n_cols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank_mod2(b: IntMatrix) -> int:
    return len(_rref([list(r) for r in reduce_mod2(b)])[1])


def pivot_columns(b: IntMatrix) -> list[int]:
    """0-based lowest-index pivot columns of ``B mod 2``."""
    return _rref([list(r) for r in reduce_mod2(b)])[1]


def kernel_mod2(b: IntMatrix) -> list[BitVector]:
    """Basis of ``{v : B v = 0 mod 2}``, one vector per free column."""
    n = b.n_cols
    reduced, pivots = _rref([list(r) for r in reduce_mod2(b)])
    out = []
    for f in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[f] = 1
        for row, p in zip(reduced, pivots):
            v[p] = row[f]
        out.append(tuple(v))
    return out


@dataclass(frozen=True)
class SymplecticBasis:
    pairs: tuple[tuple[BitVector, BitVector], ...]
    radical: tuple[BitVector, ...] = ()

    def pairs_valid(self, b: IntMatrix) -> bool:
        """``e_i B f_j = delta_ij`` and ``e_i B e_j = f_i B f_j = 0``."""
        for i, (ei, fi) in enumerate(self.pairs):
            for j, (ej, fj) in enumerate(self.pairs):
                if pairing(b, ei, fj) != (i == j):
                    return False
                if pairing(b, ei, ej) or pairing(b, fi, fj):
                    return False
        return True

    def is_valid(self, b: IntMatrix) -> bool:
        """Pairing identities, a radical orthogonal to everything, and the right counts."""
        if not self.pairs_valid(b):
            return False
        n = b.n_rows
        units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        if any(pairing(b, r, u) for r in self.radical for u in units):
            return False
        rk = rank_mod2(b)
        return 2 * len(self.pairs) == rk and len(self.radical) == n - rk


def _symplectify(b: IntMatrix, basis: Sequence[BitVector]):
    """Greedy pairing within ``span(basis)``; raises if the form is degenerate there."""
    rest = [_vec(v) for v in basis]
    pairs = []
    while rest:
        e = rest.pop(0)
        idx = next((i for i, w in enumerate(rest) if pairing(b, e, w)), None)
        if idx is None:
            raise ValueError("form is degenerate on the span of the given basis")
        f = rest.pop(idx)
        cleaned = []
        for w in rest:
            a, c = pairing(b, w, f), pairing(b, w, e)
            if a:
                w = tuple(x ^ y for x, y in zip(w, e))
            if c:
                w = tuple(x ^ y for x, y in zip(w, f))
            cleaned.append(w)
        rest = cleaned
        pairs.append((e, f))
    return tuple(pairs)


def default_subspace_basis(b: IntMatrix) -> tuple[BitVector, ...]:
    n = b.n_cols
    return tuple(tuple(int(i == p) for i in range(n)) for p in pivot_columns(b))


def symplectic_basis(b: SkewMatrix) -> SymplecticBasis:
    pairs = _symplectify(b, default_subspace_basis(b))
    return SymplecticBasis(pairs, tuple(kernel_mod2(b)))


@dataclass(frozen=True)
class QuadraticRefinement:
    """The refinement equal to 1 on each vector of ``basis`` (which spans ``N``)."""

    basis: tuple[BitVector, ...]

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of ``v`` in ``basis``; raises if ``v`` is outside the span."""
        v = _vec(v)
        k = len(self.basis)
        n = len(v)
        # solve sum c_i basis_i = v over GF(2) on the augmented columns
        rows = [[self.basis[i][r] for i in range(k)] + [v[r]] for r in range(n)]
        reduced, pivots = _rref(rows)
        if k in pivots:
            raise ValueError(f"{v} is not in the span of the refinement basis")
        if len(pivots) != k:
            raise ValueError("refinement basis is linearly dependent")
        coeffs = [0] * k
        for row, p in zip(reduced, pivots):
            coeffs[p] = row[k]
        return tuple(coeffs)


def refinement(b: SkewMatrix, basis: Optional[Sequence[Sequence[int]]] = None) -> QuadraticRefinement:
    if basis is None:
        return QuadraticRefinement(default_subspace_basis(b))
    return QuadraticRefinement(tuple(_vec(v) for v in basis))


def q_value(q: QuadraticRefinement, b: IntMatrix, v: Sequence[int]) -> int:
    """``q(v)`` from ``q(v_i) = 1`` and ``q(v + w) = q(v) + q(w) + v^t B w``."""
    coeffs = q.coordinates(v)
    used = [q.basis[i] for i, c in enumerate(coeffs) if c]
    total = len(used)
    for i in range(len(used)):
        for j in range(i + 1, len(used)):
            total += pairing(b, used[i], used[j])
    return total & 1


def arf_invariant(
    b: SkewMatrix,
    basis: Optional[Sequence[Sequence[int]]] = None,
    pairs: Optional[Sequence[tuple[Sequence[int], Sequence[int]]]] = None,
) -> int:
    """``sum q(e_i) q(f_i) mod 2`` over a symplectic basis of ``N``.

    ``basis`` overrides the vectors on which the refinement is 1 and
    ``pairs`` overrides the symplectic basis; both default to the
    deterministic choices described in the module docstring.
    """
    q = refinement(b, basis)
    if pairs is None:
        sym = _symplectify(b, q.basis)
    else:
        sym = tuple((_vec(e), _vec(f)) for e, f in pairs)
        if not SymplecticBasis(sym).pairs_valid(b):
            raise ValueError("supplied pairs are not a symplectic system for B mod 2")
        if 2 * len(sym) != len(q.basis):
            raise ValueError("supplied pairs do not span the refinement's subspace")
    return sum(q_value(q, b, e) * q_value(q, b, f) for e, f in sym) & 1
