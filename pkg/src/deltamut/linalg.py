"""Dense exact integer matrices and the classical congruence invariants.

All entries are Python ints, so there is no magnitude cap. Matrices are
immutable; every operation returns a new object. Indices passed to the
public helpers (``elementary``, ``IntMatrix.entry``) are 1-based.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class NotSkewError(ValueError):
    """A matrix that must be skew-symmetric is not."""


class InvariantViolation(AssertionError):
    """An algebraic guarantee failed to hold on a computed value."""


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, str):
        return int(x.strip())
    return operator.index(x)


class IntMatrix:
    """Dense ``n_rows x n_cols`` integer matrix, stored row-major as tuples."""

    __slots__ = ("rows", "n_rows", "n_cols", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrices must have at least one row and column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("ragged rows")
        self._set(data)

    def _set(self, data):
        self.rows = data
        self.n_rows = len(data)
        self.n_cols = len(data[0])
        self._hash = None

    @classmethod
    def _trusted(cls, data):
        # internal constructor: data is already a well-formed tuple of int tuples
        obj = object.__new__(cls)
        obj._set(data)
        return obj

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return IntMatrix._trusted(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> "IntMatrix":
        n_cols = n_rows if n_cols is None else n_cols
        return IntMatrix._trusted(tuple((0,) * n_cols for _ in range(n_rows)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position ``(i, j)``."""
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise IndexError(f"entry ({i}, {j}) outside a {self.n_rows}x{self.n_cols} matrix")
        return self.rows[i - 1][j - 1]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> tuple[int, ...]:
        """1-based column ``j``."""
        return tuple(r[j - 1] for r in self.rows)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix._trusted(tuple(zip(*self.rows)))

    def max_abs(self) -> int:
        return max(abs(x) for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self.rows == tuple(zip(*self.rows))

    def is_skew(self) -> bool:
        if not self.is_square:
            return False
        cols = tuple(zip(*self.rows))
        return all(x == -y for r, c in zip(self.rows, cols) for x, y in zip(r, c))

    def mod(self, m: int) -> "IntMatrix":
        return IntMatrix._trusted(tuple(tuple(x % m for x in r) for r in self.rows))

    def _check_same_shape(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return None

    def __add__(self, other):
        if self._check_same_shape(other) is NotImplemented:
            return NotImplemented
        return IntMatrix._trusted(
            tuple(tuple(map(operator.add, a, b)) for a, b in zip(self.rows, other.rows))
        )

    def __sub__(self, other):
        if self._check_same_shape(other) is NotImplemented:
            return NotImplemented
        return IntMatrix._trusted(
            tuple(tuple(map(operator.sub, a, b)) for a, b in zip(self.rows, other.rows))
        )

    def __neg__(self):
        return IntMatrix._trusted(tuple(tuple(-x for x in r) for r in self.rows))

    def __mul__(self, c):
        if isinstance(c, IntMatrix):
            raise TypeError("use @ for matrix products")
        c = operator.index(c)
        return IntMatrix._trusted(tuple(tuple(c * x for x in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = tuple(zip(*other.rows))
        return IntMatrix._trusted(
            tuple(tuple(sum(map(operator.mul, r, c)) for c in cols) for r in self.rows)
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self.tolist()!r})"

    def __str__(self):
        width = max(len(str(x)) for r in self.rows for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


class SkewMatrix(IntMatrix):
    """Square integer matrix with ``b_ij == -b_ji`` (so zero diagonal)."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable[int]]):
        super().__init__(rows)
        if not self.is_square:
            raise NotSkewError(f"skew-symmetric matrices are square, got {self.shape}")
        if not self.is_skew():
            raise NotSkewError("matrix is not skew-symmetric")

    @classmethod
    def from_matrix(cls, m: IntMatrix) -> "SkewMatrix":
        if isinstance(m, SkewMatrix):
            return m
        if not m.is_skew():
            raise NotSkewError("matrix is not skew-symmetric")
        return cls._trusted(m.rows)

    @classmethod
    def from_upper(cls, n: int, upper: dict[tuple[int, int], int]) -> "SkewMatrix":
        """Build from 1-based strictly-upper entries ``{(i, j): b_ij}``."""
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in upper.items():
            if not 1 <= i < j <= n:
                raise IndexError(f"({i}, {j}) is not a strictly upper position for n={n}")
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = -v
        return cls(rows)

    @classmethod
    def zeros(cls, n: int) -> "SkewMatrix":
        return cls._trusted(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return self.n_rows

    def __neg__(self):
        return SkewMatrix._trusted(tuple(tuple(-x for x in r) for r in self.rows))


@dataclass(frozen=True)
class PermutationMatrix:
    """Permutation in 1-based one-line notation.

    The matrix has its single 1 of row ``i`` in column ``perm[i-1]``, so that
    ``(P B P^t)[i][j] == B[perm[i]][perm[j]]``.
    """

    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(operator.index(x) for x in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{len(perm)}")
        object.__setattr__(self, "perm", perm)

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "PermutationMatrix":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "PermutationMatrix":
        perm = list(range(1, n + 1))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return cls(tuple(perm))

    @property
    def matrix(self) -> IntMatrix:
        n = self.n
        return IntMatrix._trusted(
            tuple(tuple(1 if j + 1 == p else 0 for j in range(n)) for p in self.perm)
        )

    def inverse(self) -> "PermutationMatrix":
        inv = [0] * self.n
        for i, p in enumerate(self.perm, start=1):
            inv[p - 1] = i
        return PermutationMatrix(tuple(inv))

    def __str__(self):
        return ",".join(map(str, self.perm))


@dataclass(frozen=True)
class SmithReport:
    invariant_factors: tuple[int, ...]
    rank: int
    column_gcds: tuple[int, ...]


def _bareiss(a: list[list[int]]) -> int:
    # fraction-free elimination in place; every division below is exact
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for s in range(k + 1, n):
                if a[s][k] != 0:
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = a[k]
        akk = pivot_row[k]
        for i in range(k + 1, n):
            row = a[i]
            aik = row[k]
            if aik == 0 and akk == prev:
                continue
            for j in range(k + 1, n):
                row[j] = (row[j] * akk - aik * pivot_row[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.n_rows}x{m.n_cols} matrix")
    return _bareiss([list(r) for r in m.rows])


def _smith_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    a = [list(r) for r in rows]
    m, n = len(a), len(a[0])
    diag = []
    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return diag + [0] * (min(m, n) - len(diag))
            _, pi, pj = best
            a[t], a[pi] = a[pi], a[t]
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if dirty:
                continue
            # row and column t are clear; force p to divide the rest
            bad = next(
                (i for i in range(t + 1, m) if any(a[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                diag.append(abs(p))
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return diag


def smith_report(m: IntMatrix) -> SmithReport:
    """Smith invariant factors (zeros last), rank over Q and per-column gcds."""
    factors = tuple(_smith_diagonal(m.rows))
    gcds = tuple(reduce(math.gcd, col, 0) for col in zip(*m.rows))
    return SmithReport(factors, sum(1 for f in factors if f), gcds)


def conjugate(x: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Return ``x @ b @ x.T``; stays a SkewMatrix when ``b`` is one."""
    if not (x.is_square and b.is_square and x.n_rows == b.n_rows):
        raise DimensionError(f"cannot conjugate {b.shape} by {x.shape}")
    out = x @ b @ x.T
    if isinstance(b, SkewMatrix):
        if not out.is_skew():
            raise InvariantViolation("congruence of a skew matrix lost skew-symmetry")
        return SkewMatrix._trusted(out.rows)
    return out


def elementary(i: int, j: int, n: int) -> IntMatrix:
    """The ``n x n`` matrix with a single 1 at 1-based position ``(i, j)``."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"({i}, {j}) out of range for n={n}")
    return IntMatrix._trusted(
        tuple(tuple(1 if (r, c) == (i - 1, j - 1) else 0 for c in range(n)) for r in range(n))
    )


def is_unimodular(x: IntMatrix) -> bool:
    return x.is_square and det_exact(x) in (1, -1)
