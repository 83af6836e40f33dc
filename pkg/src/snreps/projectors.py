"""Young-tableau projectors p_ij and their constant g matrices.

For standard tableaux T_i, T_j of one shape the projector is

    p_ij = N_i * sigma_ij * P_j

with products read left to right (apply the left factor first).  Written as
composition of maps, this is P_j o sigma_ij o N_i.  Every coefficient is
-1, 0 or +1, and

    p_ij * p_kl = f * g'_jk * p_il,        f = n! / m,

where g' is unit lower triangular with entries in {-1, 0, +1}.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .intmatrix import IntMatrix
from .perm import (
    AlgebraElement,
    Permutation,
    algebra_multiply,
    all_permutations,
    permutation_images,
)
from .report import CostGuardError, Report, describe_failures
from .tableaux import (
    Partition,
    StandardTableau,
    column_antisymmetrizer,
    intertwiner,
    partitions,
    row_symmetrizer,
    standard_tableaux,
)

MAX_EXPAND_N = 7
MAX_FULL_N = 5
MAX_SAMPLE_N = 6


@dataclass(frozen=True, eq=False)
class IrrepBundle:
    """Everything needed to work with one irreducible representation."""

    shape: Partition
    tableaux: tuple[StandardTableau, ...]
    sigma: tuple[tuple[Permutation, ...], ...]
    g_reduced: IntMatrix
    g_reduced_inverse: IntMatrix
    dim: int
    scale: int
    # arrays for the vectorised coordinate routine
    _columns: tuple = field(repr=False, default=())
    _row_of: np.ndarray | None = field(repr=False, default=None)

    @property
    def n(self) -> int:
        return self.shape.n

    def g_unnormalized(self) -> IntMatrix:
        """The structure matrix of the p_ij themselves: f * g'."""
        return self.g_reduced.scale(self.scale)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "partition": str(self.shape),
            "dim": self.dim,
            "scale": self.scale,
            "gPrime": self.g_reduced.tolist(),
            "gPrimeInverse": self.g_reduced_inverse.tolist(),
        }


def _check_index(bundle: IrrepBundle, *idx: int) -> None:
    for k in idx:
        if not 0 <= k < bundle.dim:
            raise IndexError(f"tableau index {k} out of range for shape {bundle.shape} (dim {bundle.dim})")


@lru_cache(maxsize=None)
def irrep_bundle(shape: Sequence[int]) -> IrrepBundle:
    shape = Partition(shape)
    tabs = standard_tableaux(shape)
    m = len(tabs)
    n = shape.n
    sigma = tuple(tuple(intertwiner(a, b) for b in tabs) for a in tabs)
    columns = tuple(
        np.array([t.columns[c] for t in tabs], dtype=np.intp) - 1
        for c in range(shape[0])
        if shape.conjugate()[c] > 1
    )
    row_of = np.zeros((m, n), dtype=np.int8)
    for j, t in enumerate(tabs):
        for x, r in t.row_index().items():
            row_of[j, x - 1] = r
    # g'_jk is the coefficient of e in p_kj
    e = Permutation.identity(n)
    g = IntMatrix(
        [[_coordinate(tabs[k], tabs[j], e) for k in range(m)] for j in range(m)]
    )
    return IrrepBundle(
        shape=shape,
        tableaux=tabs,
        sigma=sigma,
        g_reduced=g,
        g_reduced_inverse=g.unit_lower_inverse(),
        dim=m,
        scale=math.factorial(n) // m,
        _columns=columns,
        _row_of=row_of,
    )


def all_bundles(n: int) -> list[IrrepBundle]:
    return [irrep_bundle(shape) for shape in partitions(n)]


def _cycle_parity_count(rows: Sequence[int]) -> int:
    """Sum of (length - 1) over the cycles of a permutation of range(len(rows))."""
    seen = [False] * len(rows)
    k = 0
    for start in range(len(rows)):
        if seen[start]:
            continue
        x = start
        length = 0
        while not seen[x]:
            seen[x] = True
            x = rows[x]
            length += 1
        k += length - 1
    return k


def _coordinate(ti: StandardTableau, tj: StandardTableau, s: Permutation) -> int:
    ts_columns = ti.act(s).columns
    row_in_j = tj.row_index()
    k = 0
    for col in ts_columns:
        rows = [row_in_j[x] for x in col]
        if len(set(rows)) < len(rows):
            return 0
        k += _cycle_parity_count(rows)
    return 1 - 2 * (k % 2)


def projector_coordinate(bundle: IrrepBundle, i: int, j: int, s: Permutation) -> int:
    """Coefficient of ``s`` in p_ij, without expanding the projector.

    Move the symbols of T_i by ``s``, then read each column of the result
    against the rows of T_j.  A column with two symbols from one row of T_j
    gives 0.  Otherwise each column defines a permutation of row indices,
    and the answer is the parity of all of them together.
    """
    _check_index(bundle, i, j)
    if len(s) != bundle.n:
        raise ValueError(f"permutation of {len(s)} symbols for shape {bundle.shape}")
    return _coordinate(bundle.tableaux[i], bundle.tableaux[j], s)


def coordinate_block(bundle: IrrepBundle, s: Permutation) -> np.ndarray:
    """All coefficients of ``s`` at once: entry (i, j) is the coefficient in p_ij.

    Same rule as :func:`projector_coordinate`, with each column's parity
    obtained by counting inversions instead of cycles.
    """
    m = bundle.dim
    image = np.asarray(s, dtype=np.intp) - 1
    out = np.ones((m, m), dtype=np.int64)
    for cols in bundle._columns:
        syms = image[cols]  # (i, L)
        rows = bundle._row_of[:, syms].transpose(1, 0, 2)  # (i, j, L)
        length = rows.shape[2]
        clash = np.zeros((m, m), dtype=bool)
        odd = np.zeros((m, m), dtype=bool)
        for a, b in itertools.combinations(range(length), 2):
            ra = rows[:, :, a]
            rb = rows[:, :, b]
            clash |= ra == rb
            odd ^= ra > rb
        out *= np.where(clash, 0, np.where(odd, -1, 1))
    return out


def expansion_vector(bundle: IrrepBundle, i: int, j: int) -> np.ndarray:
    """Coefficients of p_ij on every permutation, in :func:`all_permutations` order.

    The column rule of :func:`projector_coordinate`, run on all of S_n at once.
    """
    _check_index(bundle, i, j)
    images = permutation_images(bundle.n)
    rows_j = bundle._row_of[j].astype(np.int64)
    out = np.ones(len(images), dtype=np.int64)
    for cols in bundle._columns:
        rows = rows_j[images[:, cols[i]]]  # (n!, L)
        length = rows.shape[1]
        clash = np.zeros(len(images), dtype=bool)
        odd = np.zeros(len(images), dtype=bool)
        for a, b in itertools.combinations(range(length), 2):
            clash |= rows[:, a] == rows[:, b]
            odd ^= rows[:, a] > rows[:, b]
        out *= np.where(clash, 0, np.where(odd, -1, 1))
    return out


def projector_expand(bundle: IrrepBundle, i: int, j: int, force: bool = False) -> AlgebraElement:
    """p_ij as a combination of permutations, from its coordinates."""
    _check_index(bundle, i, j)
    if bundle.n > MAX_EXPAND_N and not force:
        raise CostGuardError(f"expanding over {bundle.n}! permutations exceeds n <= {MAX_EXPAND_N}")
    coeffs = expansion_vector(bundle, i, j)
    perms = all_permutations(bundle.n)
    return AlgebraElement._trusted({perms[k]: int(coeffs[k]) for k in np.nonzero(coeffs)[0]}, bundle.n)


@lru_cache(maxsize=4096)
def _expansion(shape: Partition, i: int, j: int) -> AlgebraElement:
    return projector_expand(irrep_bundle(shape), i, j)


def brute_force_projector(bundle: IrrepBundle, i: int, j: int) -> AlgebraElement:
    """N_i * sigma_ij * P_j multiplied out in the group algebra."""
    _check_index(bundle, i, j)
    ti, tj = bundle.tableaux[i], bundle.tableaux[j]
    left = algebra_multiply(column_antisymmetrizer(ti), AlgebraElement.of(bundle.sigma[i][j]))
    return algebra_multiply(left, row_symmetrizer(tj))


def dual_projector(bundle: IrrepBundle, i: int, j: int) -> AlgebraElement:
    """P_i * sigma_ij * N_j, the family obtained from p_ji by s -> s^-1."""
    ti, tj = bundle.tableaux[i], bundle.tableaux[j]
    left = algebra_multiply(row_symmetrizer(ti), AlgebraElement.of(bundle.sigma[i][j]))
    return algebra_multiply(left, column_antisymmetrizer(tj))


def g_matrix(bundle: IrrepBundle) -> IntMatrix:
    """The reduced matrix g' (entries in {-1,0,1}, unit lower triangular)."""
    return bundle.g_reduced


def g_matrix_bruteforce(bundle: IrrepBundle) -> IntMatrix:
    """g' read off the products p_0j * p_k0 = f g'_jk p_00 in the group algebra."""
    m, f = bundle.dim, bundle.scale
    ps = {(i, j): brute_force_projector(bundle, i, j) for i in range(m) for j in range(m) if i == 0 or j == 0}
    p00 = ps[(0, 0)]
    key, ref = next(iter(p00.items()))
    rows = []
    for j in range(m):
        row = []
        for k in range(m):
            prod = algebra_multiply(ps[(0, j)], ps[(k, 0)])
            c = prod.coeff(key) // ref
            if prod != p00.scale(c):
                raise ArithmeticError(f"p_0{j} p_{k}0 is not a multiple of p_00")
            if c % f:
                raise ArithmeticError(f"structure constant {c} not divisible by f={f}")
            row.append(c // f)
        rows.append(row)
    return IntMatrix(rows)


def _relation_holds(n, lam, i, j, mu, k, l) -> bool:
    a = _expansion(lam.shape, i, j)
    b = _expansion(mu.shape, k, l)
    prod = algebra_multiply(a, b)
    if lam.shape != mu.shape:
        return not prod
    return prod == _expansion(lam.shape, i, l).scale(lam.scale * lam.g_reduced[j, k])


def verify_projector_relations(n: int, level: str = "full", trials: int = 20, seed: int = 0, force: bool = False) -> Report:
    """Check p_lij p_mkl = delta_lm f g'_jk p_lil by multiplying in the group algebra."""
    if level not in ("full", "sample"):
        raise ValueError("level must be 'full' or 'sample'")
    limit = MAX_FULL_N if level == "full" else MAX_SAMPLE_N
    if n > limit and not force:
        raise CostGuardError(f"{level} projector-relation check limited to n <= {limit}")
    report = Report(f"projector relations, n={n}, {level}")
    bundles = all_bundles(n)
    for lam in bundles:
        for mu in bundles:
            if level == "full":
                combos = itertools.product(range(lam.dim), range(lam.dim), range(mu.dim), range(mu.dim))
            else:
                rng = random.Random(f"{seed}-relations-{lam.shape}-{mu.shape}")
                combos = [
                    (rng.randrange(lam.dim), rng.randrange(lam.dim), rng.randrange(mu.dim), rng.randrange(mu.dim))
                    for _ in range(trials)
                ]
            bad = []
            count = 0
            for i, j, k, l in combos:
                count += 1
                if not _relation_holds(n, lam, i, j, mu, k, l):
                    bad.append((i, j, k, l))
            report.add(
                f"p[{lam.shape}] * p[{mu.shape}] ({count} products)",
                not bad,
                describe_failures(bad),
            )
    return report


def coordinate_agreement(bundle: IrrepBundle, samples: int | None = None, seed: int = 0) -> list:
    """Compare :func:`projector_coordinate` with brute-force projector coefficients.

    Exhaustive when ``samples`` is None, otherwise random (i, j, s) triples.
    Returns the list of mismatches.
    """
    m, n = bundle.dim, bundle.n
    bad = []
    if samples is None:
        perms = all_permutations(n)
        for i in range(m):
            for j in range(m):
                oracle = brute_force_projector(bundle, i, j)
                ti, tj = bundle.tableaux[i], bundle.tableaux[j]
                for s in perms:
                    if _coordinate(ti, tj, s) != oracle.coeff(s):
                        bad.append((i, j, str(s)))
        return bad
    rng = random.Random(f"{seed}-agreement-{bundle.shape}")
    cache = {}
    for _ in range(samples):
        i, j = rng.randrange(m), rng.randrange(m)
        image = list(range(1, n + 1))
        rng.shuffle(image)
        s = Permutation._raw(image)
        if (i, j) not in cache:
            cache[(i, j)] = brute_force_projector(bundle, i, j)
        if projector_coordinate(bundle, i, j, s) != cache[(i, j)].coeff(s):
            bad.append((i, j, str(s)))
    return bad


def structure_scan(nmax: int) -> list[dict]:
    """Diagonality of g' and reducedness of g'^-1 for every partition up to nmax."""
    rows = []
    for n in range(1, nmax + 1):
        for b in all_bundles(n):
            rows.append(
                {
                    "n": n,
                    "partition": str(b.shape),
                    "dim": b.dim,
                    "gDiagonal": b.g_reduced.is_diagonal(),
                    "gInverseReduced": b.g_reduced_inverse.is_reduced(),
                    "gInverseMaxAbs": b.g_reduced_inverse.max_abs(),
                }
            )
    return rows


def first_where(scan: list[dict], predicate) -> dict | None:
    return next((row for row in scan if predicate(row)), None)


__all__ = [
    "IrrepBundle",
    "irrep_bundle",
    "all_bundles",
    "projector_coordinate",
    "coordinate_block",
    "projector_expand",
    "expansion_vector",
    "brute_force_projector",
    "dual_projector",
    "g_matrix",
    "g_matrix_bruteforce",
    "verify_projector_relations",
    "coordinate_agreement",
    "structure_scan",
]
