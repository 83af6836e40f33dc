"""Reduced-entry representation matrices.

The coordinates x'(b) of a permutation in the basis p'_ij = p_ij / f come
straight from the projector coefficients, without inverting anything of
size n!:

    x'(b) = g'^-1 . y(b^-1)^T . g'^-1

where y(b)_ij is the coefficient of b in p_ij.  They multiply with g'
interspersed, x'(a) g' x'(b) = x'(ab), so M(b) = x'(b) g' is an ordinary
matrix representation.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .intmatrix import IntMatrix
from .perm import Permutation, all_permutations, compose, inverse
from .projectors import (
    IrrepBundle,
    all_bundles,
    coordinate_block,
    g_matrix_bruteforce,
    projector_expand,
)
from .report import CostGuardError, Report, describe_failures
from .tableaux import Partition

MAX_DUALITY_N = 5


@dataclass(frozen=True)
class RepMatrix:
    shape: Partition
    perm: Permutation
    x_reduced: IntMatrix
    g_reduced: IntMatrix

    @property
    def conventional(self) -> IntMatrix:
        """M(b) = x'(b) g', a homomorphism under ordinary matrix product."""
        return self.x_reduced @ self.g_reduced

    def is_reduced(self) -> bool:
        return self.x_reduced.is_reduced()


def _as_array(mat: IntMatrix) -> np.ndarray:
    return np.array(mat.rows, dtype=np.int64).reshape(mat.shape)


def y_matrix(bundle: IrrepBundle, b: Permutation) -> IntMatrix:
    """Entry (i, j) is the coefficient of ``b`` in p_ij."""
    return IntMatrix.from_array(coordinate_block(bundle, b))


def _x_array(bundle: IrrepBundle, b: Permutation) -> np.ndarray:
    ginv = bundle.g_reduced_inverse
    # |x'| <= m^2 max|g'^-1|^2; stay in int64 only while that is safe
    if bundle.dim**2 * max(ginv.max_abs(), 1) ** 2 >= 2**62:
        return np.array((ginv @ y_matrix(bundle, inverse(b)).T @ ginv).rows, dtype=object)
    gi = _as_array(ginv)
    return gi @ coordinate_block(bundle, inverse(b)).T @ gi


def rep_matrix(bundle: IrrepBundle, b: Permutation) -> RepMatrix:
    """Coordinates x'(b) of ``b`` in the renormalised projector basis."""
    if len(b) != bundle.n:
        raise ValueError(f"permutation of {len(b)} symbols for shape {bundle.shape}")
    return RepMatrix(bundle.shape, b, IntMatrix.from_array(_x_array(bundle, b)), bundle.g_reduced)


def _random_perm(rng: random.Random, n: int) -> Permutation:
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation._raw(image)


def verify_homomorphism(bundle: IrrepBundle, trials: int | None = None, seed: int = 0) -> Report:
    """x'(a) g' x'(b) = x'(ab), plus the dual law for g' x' g' with g'^-1 interspersed.

    Exhaustive over all pairs when ``trials`` is None and n <= 5.
    """
    n = bundle.n
    g = _as_array(bundle.g_reduced)
    gi = _as_array(bundle.g_reduced_inverse)
    cache: dict[Permutation, np.ndarray] = {}

    def x(p):
        if p not in cache:
            cache[p] = _x_array(bundle, p)
        return cache[p]

    if trials is None:
        if n > 5:
            raise CostGuardError("exhaustive homomorphism check limited to n <= 5")
        pairs = itertools.product(all_permutations(n), repeat=2)
    else:
        rng = random.Random(f"{seed}-homomorphism-{bundle.shape}")
        pairs = [(_random_perm(rng, n), _random_perm(rng, n)) for _ in range(trials)]

    bad, bad_dual, count = [], [], 0
    for a, b in pairs:
        count += 1
        ab = compose(a, b)
        if not np.array_equal(x(a) @ g @ x(b), x(ab)):
            bad.append((str(a), str(b)))
        da, db, dab = g @ x(a) @ g, g @ x(b) @ g, g @ x(ab) @ g
        if not np.array_equal(da @ gi @ db, dab):
            bad_dual.append((str(a), str(b)))
    # the neutral element is x'(e) = g'^-1, so that M(e) = x'(e) g' = I
    x_e = x(Permutation.identity(n))
    ident = np.array_equal(x_e, gi) and np.array_equal(x_e @ g, np.eye(bundle.dim, dtype=np.int64))
    report = Report(f"homomorphism, shape {bundle.shape}")
    report.add(f"x'(a) g' x'(b) = x'(ab) over {count} pairs", not bad, describe_failures(bad))
    report.add(f"g'x'g' composes with g'^-1 over {count} pairs", not bad_dual, describe_failures(bad_dual))
    report.add("x'(e) = g'^-1 and M(e) = I", ident)
    return report


def reduced_entry_scan(bundle: IrrepBundle, samples: int | None = None, seed: int = 0) -> dict:
    """Which of y(b), x'(b) and M(b) = x'(b) g' have entries outside {-1,0,1}.

    Scans every b, or a seeded random sample of ``samples`` permutations.
    g' x'(b) g' equals y(b^-1)^T, so the y check covers it.
    """
    n = bundle.n
    if samples is None:
        perms = all_permutations(n)
    else:
        rng = random.Random(f"{seed}-reduced-{bundle.shape}")
        perms = [_random_perm(rng, n) for _ in range(samples)]
    g = _as_array(bundle.g_reduced)
    bad_y, bad_x, bad_m = [], [], []
    for b in perms:
        if np.abs(coordinate_block(bundle, b)).max() > 1:
            bad_y.append(str(b))
        x = _x_array(bundle, b)
        if np.abs(x).max() > 1:
            bad_x.append(str(b))
        if np.abs(x @ g).max() > 1:
            bad_m.append(str(b))
    return {"checked": len(perms), "y_violations": bad_y, "x_violations": bad_x, "m_violations": bad_m}


def coordinate_tables(n: int):
    """The full coordinate systems of S_n, labels included.

    Returns (labels, perms, Y, X) where Y[row (lam,i,j)][perm] is the coefficient
    of the permutation in p_lam,ij and X[perm][(lam,i,j)] = x'/f is the coordinate
    of the permutation along p_lam,ij (exact Fractions).
    """
    if n > MAX_DUALITY_N:
        raise CostGuardError(f"assembling {n}! x {n}! coordinate matrices limited to n <= {MAX_DUALITY_N}")
    perms = all_permutations(n)
    labels, y_rows, x_blocks = [], [], []
    for bundle in all_bundles(n):
        for i in range(bundle.dim):
            for j in range(bundle.dim):
                labels.append((bundle.shape, i, j))
                p = projector_expand(bundle, i, j)
                y_rows.append([p.coeff(s) for s in perms])
        x_blocks.append((bundle, {s: _x_array(bundle, s) for s in perms}))
    x_rows = []
    for s in perms:
        row = []
        for bundle, xs in x_blocks:
            f = bundle.scale
            row.extend(Fraction(int(v), f) for v in xs[s].reshape(-1))
        x_rows.append(row)
    return labels, perms, y_rows, x_rows


def verify_duality(n: int, eq8_trials: int = 100, seed: int = 0) -> Report:
    """(x) and (y) are mutual inverses, and y(cb^-1) = y(c) (g' x'(b))^T for all b, c."""
    labels, perms, y_rows, x_rows = coordinate_tables(n)
    size = len(perms)
    fact = math.factorial(n)
    # n! X is integral (each f divides n!), so both products stay exact in int64
    Y = np.array(y_rows, dtype=np.int64)
    X = np.array([[int(v * fact) for v in row] for row in x_rows], dtype=np.int64)
    scaled_ident = fact * np.eye(size, dtype=np.int64)
    report = Report(f"coordinate duality, n={n}")
    report.add(f"(x)(y) = I ({size}x{size})", np.array_equal(X @ Y, scaled_ident))
    report.add(f"(y)(x) = I ({size}x{size})", np.array_equal(Y @ X, scaled_ident))

    for bundle in all_bundles(n):
        g_oracle = _as_array(g_matrix_bruteforce(bundle))
        g_full = bundle.scale * g_oracle
        xs = {s: _x_array(bundle, s) for s in perms}
        ys = {s: coordinate_block(bundle, s) for s in perms}

        # summing the c = b case over b: n! y^e_ij = m g_ji
        total = sum(ys[b] @ (g_oracle @ xs[b]).T for b in perms)
        e = Permutation.identity(n)
        report.add(
            f"sum_b identity, shape {bundle.shape}",
            np.array_equal(total, fact * ys[e]) and np.array_equal(fact * ys[e], bundle.dim * g_full.T),
        )

        rng = random.Random(f"{seed}-eq8-{bundle.shape}")
        bad = []
        for _ in range(eq8_trials):
            b, c = rng.choice(perms), rng.choice(perms)
            lhs = ys[compose(c, inverse(b))]
            if not np.array_equal(lhs, ys[c] @ (g_oracle @ xs[b]).T):
                bad.append((str(b), str(c)))
        report.add(f"y(cb^-1) = y(c) (g'x'(b))^T on {eq8_trials} (b, c) pairs, shape {bundle.shape}", not bad, describe_failures(bad))
    return report
