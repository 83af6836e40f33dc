"""Dense matrices of exact Python integers."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

_INT64_SAFE = 2**62


class IntMatrix:
    """Immutable rectangular matrix of Python ints.

    Products are exact.  numpy int64 is used under the hood only when a bound
    on the result guarantees no overflow; otherwise arithmetic stays in Python.
    """

    __slots__ = ("rows", "shape", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.shape = (len(rows), width)
        self._hash = None

    @classmethod
    def identity(cls, m: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def from_array(cls, arr) -> "IntMatrix":
        return cls(arr.tolist())

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntMatrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def max_abs(self) -> int:
        return max((abs(x) for r in self.rows for x in r), default=0)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows)) if self.rows else self

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return IntMatrix([a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([-x for x in r] for r in self.rows)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        k = self.shape[1]
        if self.max_abs() * other.max_abs() * max(k, 1) < _INT64_SAFE:
            a = np.array(self.rows, dtype=np.int64).reshape(self.shape)
            b = np.array(other.rows, dtype=np.int64).reshape(other.shape)
            return IntMatrix.from_array(a @ b)
        cols = list(zip(*other.rows))
        return IntMatrix([sum(x * y for x, y in zip(r, c)) for c in cols] for r in self.rows)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix([k * x for x in r] for r in self.rows)

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(min(self.shape)))

    def entries(self) -> set[int]:
        return {x for r in self.rows for x in r}

    def is_reduced(self) -> bool:
        """All entries in {-1, 0, +1}."""
        return self.entries() <= {-1, 0, 1}

    def is_lower_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.shape[0]) for j in range(i + 1, self.shape[1]))

    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.shape[0])
            for j in range(self.shape[1])
            if i != j
        )

    def unit_lower_inverse(self) -> "IntMatrix":
        """Inverse of a unit lower-triangular matrix by forward substitution (always integral)."""
        m = self.shape[0]
        if self.shape != (m, m) or not self.is_lower_triangular() or any(self.rows[i][i] != 1 for i in range(m)):
            raise ValueError("matrix is not unit lower triangular")
        inv = [[0] * m for _ in range(m)]
        for i in range(m):
            inv[i][i] = 1
            for j in range(i):
                inv[i][j] = -sum(self.rows[i][k] * inv[k][j] for k in range(j, i))
        return IntMatrix(inv)

    def determinant(self) -> int:
        """Exact determinant via fraction-free Bareiss elimination."""
        m = self.shape[0]
        if self.shape != (m, m):
            raise ValueError("determinant of a non-square matrix")
        if m == 0:
            return 1
        a = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(m - 1):
            if a[k][k] == 0:
                for r in range(k + 1, m):
                    if a[r][k] != 0:
                        a[k], a[r] = a[r], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, m):
                for j in range(k + 1, m):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[m - 1][m - 1]


def rational_matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact product of two matrices with int/Fraction entries."""
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in a]
