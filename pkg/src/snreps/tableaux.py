"""Partitions, Young tableaux and the row/column subgroups they define."""
from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Sequence

from .perm import AlgebraElement, Permutation, SizeMismatchError, subgroup_sum


class Partition(tuple):
    """Weakly decreasing positive integers; text form ``"3,2,2"``."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if not parts or any(x < 1 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip().strip("()[]")
        return cls(int(tok) for tok in text.replace(" ", "").split(",") if tok)

    @property
    def n(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for part in self if part > c) for c in range(self[0]))

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def dashed(self) -> str:
        return "-".join(map(str, self))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + [part])

    rec(n, n, [])
    return tuple(out)


def dimension(shape: Sequence[int]) -> int:
    """Number of standard tableaux of the given shape (hook length formula)."""
    shape = Partition(shape)
    conj = shape.conjugate()
    hooks = 1
    for r, length in enumerate(shape):
        for c in range(length):
            hooks *= (length - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(shape.n) // hooks


class TableauFilling:
    """A Young frame filled with 1..n, one symbol per cell, in any arrangement."""

    __slots__ = ("shape", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        self.shape = Partition(len(r) for r in rows)
        symbols = sorted(x for r in rows for x in r)
        if symbols != list(range(1, self.shape.n + 1)):
            raise ValueError(f"filling must use each of 1..{self.shape.n} once: {rows}")
        self.rows = rows
        self._hash = None

    @classmethod
    def parse(cls, text: str):
        return cls([int(x) for x in row.split()] for row in text.split("/"))

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(len(self.rows[0]))
        )

    def reading_sequence(self) -> tuple[int, ...]:
        """Rows concatenated top to bottom."""
        return tuple(x for row in self.rows for x in row)

    def row_index(self) -> dict[int, int]:
        return {x: r for r, row in enumerate(self.rows) for x in row}

    def column_index(self) -> dict[int, int]:
        return {x: c for row in self.rows for c, x in enumerate(row)}

    def act(self, s: Permutation) -> "TableauFilling":
        """Right action T -> T s: every symbol x is replaced by s(x)."""
        if len(s) != self.n:
            raise SizeMismatchError(f"permutation of {len(s)} symbols acting on a tableau of {self.n}")
        return TableauFilling([s[x - 1] for x in row] for row in self.rows)

    def is_standard(self) -> bool:
        rows_ok = all(all(a < b for a, b in zip(r, r[1:])) for r in self.rows)
        cols_ok = all(all(a < b for a, b in zip(c, c[1:])) for c in self.columns)
        return rows_ok and cols_ok

    def __eq__(self, other) -> bool:
        return isinstance(other, TableauFilling) and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __lt__(self, other: "TableauFilling") -> bool:
        return (self.shape, self.reading_sequence()) < (other.shape, other.reading_sequence())

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class StandardTableau(TableauFilling):
    """A filling whose rows and columns strictly increase."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if not self.is_standard():
            raise ValueError(f"not a standard tableau: {self}")


@lru_cache(maxsize=None)
def standard_tableaux(shape: Sequence[int]) -> tuple[StandardTableau, ...]:
    """Standard tableaux of a shape, sorted by reading sequence."""
    shape = Partition(shape)
    n = shape.n
    found = []

    # place 1..n one at a time at the end of a row, keeping a valid frame
    def rec(k, rows):
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for r in range(len(shape)):
            if len(rows[r]) < shape[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(k)
                rec(k + 1, rows)
                rows[r].pop()

    rec(1, [[] for _ in shape])
    tabs = [StandardTableau(rows) for rows in found]
    tabs.sort(key=lambda t: t.reading_sequence())
    return tuple(tabs)


def intertwiner(ti: TableauFilling, tj: TableauFilling) -> Permutation:
    """The permutation sigma with ``ti.act(sigma) == tj``.

    It sends the symbol in each cell of ``ti`` to the symbol in the same cell
    of ``tj``, so sigma_ij * sigma_jk = sigma_ik.
    """
    if ti.shape != tj.shape:
        raise ValueError(f"shapes differ: {ti.shape} vs {tj.shape}")
    image = [0] * ti.n
    for a, b in zip(ti.reading_sequence(), tj.reading_sequence()):
        image[a - 1] = b
    return Permutation._raw(image)


def _block_group(blocks: Sequence[Sequence[int]], n: int) -> list[Permutation]:
    """Direct product of the symmetric groups on disjoint blocks of symbols."""
    per_block = [list(itertools.permutations(b)) for b in blocks]
    out = []
    for choice in itertools.product(*per_block):
        image = list(range(1, n + 1))
        for block, images in zip(blocks, choice):
            for x, y in zip(block, images):
                image[x - 1] = y
        out.append(Permutation._raw(image))
    out.sort()
    return out


def row_group(t: TableauFilling) -> list[Permutation]:
    return _block_group(t.rows, t.n)


def column_group(t: TableauFilling) -> list[Permutation]:
    return _block_group(t.columns, t.n)


def row_symmetrizer(t: TableauFilling) -> AlgebraElement:
    """P_T: the sum of all permutations preserving each row."""
    return subgroup_sum(row_group(t))


def column_antisymmetrizer(t: TableauFilling) -> AlgebraElement:
    """N_T: the parity-signed sum of all permutations preserving each column."""
    return subgroup_sum(column_group(t), signed=True)
