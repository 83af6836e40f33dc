"""Exact permutation arithmetic and the sparse group algebra of S_n.

Permutations are stored in one-line image notation: ``Permutation((2, 1, 3))``
sends 1 -> 2, 2 -> 1, 3 -> 3 and prints as ``[2 1 3]``.  Products are read
left to right: ``a * b`` applies ``a`` first, then ``b``.
"""
from __future__ import annotations

import itertools
import json
import math
import re
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

import numpy as np


class SizeMismatchError(ValueError):
    """Raised when combining objects that live on different symbol sets."""


class Permutation(tuple):
    """A bijection of ``{1..n}`` stored as its image sequence.

    Being a tuple, it is hashable, immutable and totally ordered
    (lexicographically on the image), and ``p[k - 1]`` is the image of ``k``.
    """

    __slots__ = ()

    def __new__(cls, image: Iterable[int] = ()):
        image = tuple(int(x) for x in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {image}")
        return tuple.__new__(cls, image)

    @classmethod
    def _raw(cls, image) -> "Permutation":
        # trusted constructor for hot loops
        return tuple.__new__(cls, image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(range(1, n + 1))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse ``"[2 1 3]"``, ``"2 1 3"``, ``"2,1,3"`` or the compact ``"213"``.

        The compact form is only accepted for n <= 9.
        """
        body = text.strip().strip("[]()").strip()
        if re.fullmatch(r"\d+", body) and len(body) > 1 and (n is None or n <= 9):
            parts = [int(ch) for ch in body]
        else:
            parts = [int(tok) for tok in re.split(r"[\s,]+", body) if tok]
        p = cls(parts)
        if n is not None and len(p) != n:
            raise SizeMismatchError(f"expected a permutation of {n} symbols, got {text!r}")
        return p

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return compose(self, other)
        return NotImplemented

    __rmul__ = None  # type: ignore[assignment]

    def __add__(self, other):
        return NotImplemented

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Permutation({str(self)})"

    def inverse(self) -> "Permutation":
        return inverse(self)

    def parity(self) -> int:
        return parity(self)

    def cycle_type(self) -> "CycleType":
        return cycle_type(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest symbol, fixed points included."""
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self[start - 1]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self[k - 1]
            out.append(tuple(cyc))
        return out


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    if len(a) != len(b):
        raise SizeMismatchError(f"cannot compose permutations of {len(a)} and {len(b)} symbols")
    return Permutation._raw([b[x - 1] for x in a])


def inverse(a: Permutation) -> Permutation:
    out = [0] * len(a)
    for k, v in enumerate(a, start=1):
        out[v - 1] = k
    return Permutation._raw(out)


def parity(a: Permutation) -> int:
    """+1 for even permutations, -1 for odd ones."""
    n = len(a)
    seen = [False] * n
    swaps = 0
    for start in range(n):
        if seen[start]:
            continue
        k = start
        length = 0
        while not seen[k]:
            seen[k] = True
            k = a[k] - 1
            length += 1
        swaps += length - 1
    return -1 if swaps % 2 else 1


class CycleType(tuple):
    """Cycle lengths of a permutation, sorted in descending order."""

    __slots__ = ()

    def __new__(cls, lengths: Iterable[int]):
        lengths = tuple(sorted((int(x) for x in lengths), reverse=True))
        if any(x < 1 for x in lengths):
            raise ValueError(f"cycle lengths must be positive: {lengths}")
        return tuple.__new__(cls, lengths)

    @property
    def n(self) -> int:
        return sum(self)

    def class_size(self) -> int:
        """Number of permutations with this cycle type."""
        denom = 1
        for length, mult in _multiplicities(self).items():
            denom *= length**mult * math.factorial(mult)
        return math.factorial(self.n) // denom

    def representative(self) -> Permutation:
        """The permutation whose cycles are consecutive runs (1..l1)(l1+1..)..."""
        image = []
        start = 1
        for length in self:
            image.extend(range(start + 1, start + length))
            image.append(start)
            start += length
        return Permutation._raw(image)

    def __str__(self) -> str:
        return ",".join(map(str, self))


def _multiplicities(lengths: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for x in lengths:
        out[x] += 1
    return out


def cycle_type(a: Permutation) -> CycleType:
    return CycleType(len(c) for c in a.cycles())


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """All n! permutations in lexicographic order of their images."""
    return tuple(Permutation._raw(p) for p in itertools.permutations(range(1, n + 1)))


class AlgebraElement(Mapping):
    """A finite linear combination of permutations with exact coefficients.

    Coefficients are Python ints; ``Fraction`` appears only after an explicit
    division.  Zero coefficients are never stored.  Elements are immutable and
    behave as read-only mappings ``Permutation -> coefficient``.
    """

    __slots__ = ("_terms", "_n", "_hash")

    def __init__(self, terms: Mapping[Permutation, int] | Iterable[tuple[Permutation, int]] = (), n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Permutation, int] = defaultdict(int)
        for perm, coeff in items:
            if not isinstance(perm, Permutation):
                perm = Permutation(perm)
            acc[perm] += coeff
        self._terms = {p: c for p, c in acc.items() if c != 0}
        sizes = {len(p) for p in self._terms}
        if n is not None:
            sizes.add(n)
        if len(sizes) > 1:
            raise SizeMismatchError(f"mixed permutation sizes {sorted(sizes)}")
        self._n = sizes.pop() if sizes else None
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict, n: int | None) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._n = n
        obj._hash = None
        return obj

    @classmethod
    def of(cls, perm: Permutation, coeff: int = 1) -> "AlgebraElement":
        return cls._trusted({perm: coeff} if coeff else {}, len(perm))

    @classmethod
    def identity(cls, n: int) -> "AlgebraElement":
        return cls.of(Permutation.identity(n))

    @property
    def n(self) -> int | None:
        """Number of symbols, or None for the zero element built without a size."""
        return self._n

    def __getitem__(self, perm):
        return self._terms[perm]

    def coeff(self, perm: Permutation) -> int:
        return self._terms.get(perm, 0)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _check(self, other: "AlgebraElement") -> int | None:
        if self._n is not None and other._n is not None and self._n != other._n:
            raise SizeMismatchError(f"elements of S_{self._n} and S_{other._n}")
        return self._n if self._n is not None else other._n

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        n = self._check(other)
        acc = dict(self._terms)
        for p, c in other._terms.items():
            acc[p] = acc.get(p, 0) + c
        return AlgebraElement._trusted({p: c for p, c in acc.items() if c != 0}, n)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._trusted({p: -c for p, c in self._terms.items()}, self._n)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, k) -> "AlgebraElement":
        if k == 0:
            return AlgebraElement._trusted({}, self._n)
        return AlgebraElement._trusted({p: c * k for p, c in self._terms.items()}, self._n)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return algebra_multiply(self, other)
        if isinstance(other, Permutation):
            return algebra_multiply(self, AlgebraElement.of(other))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Permutation):
            return algebra_multiply(AlgebraElement.of(other), self)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, k) -> "AlgebraElement":
        return self.scale(Fraction(1, 1) / k)

    def involution(self) -> "AlgebraElement":
        """Linear extension of s -> s^-1 (an anti-automorphism of the algebra)."""
        return AlgebraElement._trusted({inverse(p): c for p, c in self._terms.items()}, self._n)

    def sorted_terms(self) -> list[tuple[Permutation, int]]:
        return sorted(self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "AlgebraElement(0)"
        return "AlgebraElement(" + format_element(self) + ")"

    def to_json(self) -> str:
        return json.dumps(
            [{"perm": str(p), "coeff": str(c)} for p, c in self.sorted_terms()]
        )

    @classmethod
    def from_json(cls, text: str) -> "AlgebraElement":
        data = json.loads(text)
        terms = []
        for item in data:
            raw = item["coeff"]
            coeff = Fraction(raw) if "/" in raw else int(raw)
            terms.append((Permutation.parse(item["perm"]), coeff))
        return cls(terms)


def format_element(x: AlgebraElement) -> str:
    parts = []
    for p, c in x.sorted_terms():
        if c == 1:
            parts.append(f"+{p}")
        elif c == -1:
            parts.append(f"-{p}")
        else:
            parts.append(f"{c:+}{p}" if isinstance(c, int) else f"+({c}){p}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


# Products with at least this many term pairs go through numpy when exact.
_DENSE_MIN_PAIRS = 512
_DENSE_MAX_N = 8
_FLOAT_EXACT = 2**53


_LOOKUP_MAX = 4_000_000


@lru_cache(maxsize=None)
def _perm_codes(n: int):
    """Place values for base-(n+1) image codes, and a code -> lexicographic rank map.

    The map is a dense table when (n+1)^n is small, otherwise the sorted codes
    (ranked with searchsorted).
    """
    weights = (n + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)
    codes = np.array(all_permutations(n), dtype=np.int64) @ weights
    if (n + 1) ** n <= _LOOKUP_MAX:
        table = np.full((n + 1) ** n, -1, dtype=np.int64)
        table[codes] = np.arange(len(codes))
        return weights, lambda c: table[c]
    return weights, lambda c: np.searchsorted(codes, c)


@lru_cache(maxsize=None)
def permutation_images(n: int) -> np.ndarray:
    """0-based images of all of S_n as an (n!, n) array, in lexicographic order."""
    return np.array(all_permutations(n), dtype=np.int64) - 1


def _dense_multiply(x: "AlgebraElement", y: "AlgebraElement", n: int) -> "AlgebraElement | None":
    xs, ys = list(x._terms.items()), list(y._terms.items())
    xc = [c for _, c in xs]
    yc = [c for _, c in ys]
    if not all(type(c) is int for c in xc) or not all(type(c) is int for c in yc):
        return None
    bound = max(map(abs, xc)) * max(map(abs, yc)) * min(len(xs), len(ys))
    if bound >= _FLOAT_EXACT:
        return None
    weights, rank = _perm_codes(n)
    size = math.factorial(n)
    a = np.array([p for p, _ in xs], dtype=np.int64) - 1
    b = np.array([p for p, _ in ys], dtype=np.int64) - 1
    ca = np.array(xc, dtype=np.float64)
    cb = np.array(yc, dtype=np.float64)
    total = np.zeros(size, dtype=np.float64)
    # a is applied first, so (a*b)(k) = b(a(k)); chunk rows of a to bound memory
    step = max(1, 2_000_000 // (len(ys) * n))
    for lo in range(0, len(xs), step):
        block = b[:, a[lo:lo + step]]  # (|y|, chunk, n)
        idx = rank((block + 1) @ weights)
        w = np.outer(cb, ca[lo:lo + step])
        total += np.bincount(idx.ravel(), weights=w.ravel(), minlength=size)
    nz = np.nonzero(total)[0]
    all_p = all_permutations(n)
    return AlgebraElement._trusted({all_p[k]: int(total[k]) for k in nz}, n)


def algebra_multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Convolution product: coeff of s in xy sums x(a)y(b) over all s = a*b."""
    n = x._check(y)
    if n is not None and n <= _DENSE_MAX_N and len(x) * len(y) >= _DENSE_MIN_PAIRS:
        out = _dense_multiply(x, y, n)
        if out is not None:
            return out
    acc: dict[tuple, int] = defaultdict(int)
    ys = [(tuple(b[i] - 1 for i in range(len(b))), c) for b, c in y._terms.items()]
    for a, ca in x._terms.items():
        for b0, cb in ys:
            acc[tuple([b0[i - 1] + 1 for i in a])] += ca * cb
    return AlgebraElement._trusted(
        {Permutation._raw(p): c for p, c in acc.items() if c != 0}, n
    )


def subgroup_sum(perms: Iterable[Permutation], signed: bool = False) -> AlgebraElement:
    """Sum of the given permutations, optionally weighted by parity."""
    terms = {}
    n = None
    for p in perms:
        terms[p] = parity(p) if signed else 1
        n = len(p)
    return AlgebraElement._trusted(terms, n)


def conjugacy_classes(n: int) -> list[tuple[CycleType, AlgebraElement]]:
    """Class sums C_rho, ordered by ascending cycle type (identity class first)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    buckets: dict[CycleType, dict] = defaultdict(dict)
    for p in all_permutations(n):
        buckets[cycle_type(p)][p] = 1
    return [
        (ct, AlgebraElement._trusted(buckets[ct], n)) for ct in sorted(buckets)
    ]


def class_types(n: int) -> list[CycleType]:
    """Cycle types of S_n in the same order as :func:`conjugacy_classes`, without enumerating S_n."""
    from .tableaux import partitions

    return sorted(CycleType(p) for p in partitions(n))
