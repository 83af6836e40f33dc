"""Central units, class sums and integer character tables of S_n."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .perm import (
    AlgebraElement,
    CycleType,
    Permutation,
    algebra_multiply,
    all_permutations,
    class_types,
    cycle_type,
)
from .projectors import MAX_EXPAND_N, IrrepBundle, all_bundles, coordinate_block, projector_expand
from .report import CostGuardError, Report
from .tableaux import Partition, partitions

MAX_UNITS_N = 5


def _unit_weights(bundle: IrrepBundle) -> np.ndarray:
    return np.array(bundle.g_reduced_inverse.rows, dtype=np.int64).reshape(bundle.dim, bundle.dim)


def scaled_unit(bundle: IrrepBundle, force: bool = False) -> AlgebraElement:
    """V = sum_ij (g'^-1)_ij p_ij, which is f times the central idempotent of the block.

    Its coefficients are constant on conjugacy classes and equal the
    character values, so V * V = f * V.
    """
    if bundle.n > MAX_EXPAND_N and not force:
        raise CostGuardError(f"full expansion over {bundle.n}! permutations exceeds n <= {MAX_EXPAND_N}")
    w = _unit_weights(bundle)
    terms = {}
    for s in all_permutations(bundle.n):
        c = int((w * coordinate_block(bundle, s)).sum())
        if c:
            terms[s] = c
    return AlgebraElement._trusted(terms, bundle.n)


def unit_coefficient(bundle: IrrepBundle, s: Permutation) -> int:
    """Coefficient of ``s`` in :func:`scaled_unit`, computed for that one permutation."""
    return int((_unit_weights(bundle) * coordinate_block(bundle, s)).sum())


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    classes: tuple[CycleType, ...]
    sizes: tuple[int, ...]
    chi: tuple[tuple[int, ...], ...]

    def row(self, shape: Sequence[int]) -> tuple[int, ...]:
        return self.chi[self.partitions.index(Partition(shape))]

    def value(self, shape: Sequence[int], rho: Sequence[int]) -> int:
        return self.row(shape)[self.classes.index(CycleType(rho))]

    def rows_orthogonal(self) -> bool:
        fact = math.factorial(self.n)
        for a, ra in enumerate(self.chi):
            for b, rb in enumerate(self.chi):
                total = sum(s * x * y for s, x, y in zip(self.sizes, ra, rb))
                if total != (fact if a == b else 0):
                    return False
        return True

    def columns_orthogonal(self) -> bool:
        fact = math.factorial(self.n)
        k = len(self.classes)
        for a in range(k):
            for b in range(k):
                total = sum(r[a] * r[b] for r in self.chi)
                if total != (fact // self.sizes[a] if a == b else 0):
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "classes": [{"cycleType": str(c), "size": s} for c, s in zip(self.classes, self.sizes)],
            "rows": [{"partition": str(p), "chi": list(r)} for p, r in zip(self.partitions, self.chi)],
        }

    def to_text(self) -> str:
        head = ["lambda \\ rho"] + [str(c) for c in self.classes]
        body = [[str(p)] + [str(v) for v in r] for p, r in zip(self.partitions, self.chi)]
        sizes = ["|class|"] + [str(s) for s in self.sizes]
        table = [head, sizes] + body
        widths = [max(len(row[c]) for row in table) for c in range(len(head))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
        return "\n".join(lines)


def character_table(n: int, force: bool = False) -> CharacterTable:
    """Characters read off as class coefficients of the scaled units."""
    if n > MAX_EXPAND_N and not force:
        raise CostGuardError(f"character table limited to n <= {MAX_EXPAND_N}")
    classes = tuple(class_types(n))
    chi = []
    for bundle in all_bundles(n):
        chi.append(tuple(unit_coefficient(bundle, rho.representative()) for rho in classes))
    return CharacterTable(
        n=n,
        partitions=tuple(partitions(n)),
        classes=classes,
        sizes=tuple(c.class_size() for c in classes),
        chi=tuple(chi),
    )


def class_constancy_violations(bundle: IrrepBundle) -> list[str]:
    """Permutations whose coefficient in V differs from their class representative's."""
    v = scaled_unit(bundle)
    ref = {ct: v.coeff(ct.representative()) for ct in class_types(bundle.n)}
    return [str(s) for s in all_permutations(bundle.n) if v.coeff(s) != ref[cycle_type(s)]]


# Murnaghan-Nakayama rule on beta-sets (first-column hook lengths).


def _beta_set(shape: Sequence[int]) -> tuple[int, ...]:
    k = len(shape)
    return tuple(part + k - 1 - i for i, part in enumerate(shape))


def _from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return tuple(p for p in (b - (k - 1 - i) for i, b in enumerate(beta)) if p > 0)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not shape else 0
    r, rest = rho[0], rho[1:]
    beta = _beta_set(shape)
    members = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in members:
            continue
        # removing an r-rim hook; its height is the number of beads jumped over
        height = sum(1 for x in beta if c < x < b)
        new_beta = [x for x in beta if x != b] + [c]
        total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def mn_character(shape: Sequence[int], rho: Sequence[int]) -> int:
    """chi_shape on the class of cycle type ``rho``."""
    shape = tuple(Partition(shape))
    rho = tuple(sorted((int(x) for x in rho), reverse=True))
    if sum(shape) != sum(rho):
        raise ValueError(f"|{shape}| != |{rho}|")
    return _mn(shape, rho)


def mn_table(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(mn_character(lam, rho) for rho in class_types(n)) for lam in partitions(n))


def verify_units(n: int, force: bool = False) -> Report:
    """The idempotents e = V / f: units of their block, zero on the others, central, summing to e."""
    if n > MAX_UNITS_N and not force:
        raise CostGuardError(f"unit checks limited to n <= {MAX_UNITS_N}")
    report = Report(f"units, n={n}")
    bundles = all_bundles(n)
    idem = {b.shape: scaled_unit(b) / b.scale for b in bundles}
    ident = AlgebraElement.identity(n)
    generators = []
    for k in range(1, n):
        image = list(range(1, n + 1))
        image[k - 1], image[k] = image[k], image[k - 1]
        generators.append(AlgebraElement.of(Permutation(image)))

    projectors = [
        (mu, projector_expand(mu, k, l)) for mu in bundles for k in range(mu.dim) for l in range(mu.dim)
    ]
    for lam in bundles:
        e = idem[lam.shape]
        v = scaled_unit(lam)
        bad = []
        for mu, p in projectors:
            # e p = p  <=>  V p = f p, kept in integers
            want = p.scale(lam.scale) if mu.shape == lam.shape else AlgebraElement((), n)
            if algebra_multiply(v, p) != want or algebra_multiply(p, v) != want:
                bad.append(str(mu.shape))
        report.add(f"e[{lam.shape}] p = p e = delta p", not bad, f"{len(bad)} failures" if bad else "")
        report.add(f"e[{lam.shape}]^2 = e[{lam.shape}]", algebra_multiply(e, e) == e)
        cross = all(not algebra_multiply(e, idem[mu.shape]) for mu in bundles if mu.shape != lam.shape)
        report.add(f"e[{lam.shape}] e[mu] = 0 for mu != lambda", cross)
        central = all(algebra_multiply(e, s) == algebra_multiply(s, e) for s in generators)
        report.add(f"e[{lam.shape}] commutes with adjacent transpositions", central)

    total = AlgebraElement((), n)
    for e in idem.values():
        total = total + e
    report.add("sum of idempotents is the identity", total == ident)
    return report


def verify_characters(n: int) -> Report:
    table = character_table(n)
    report = Report(f"characters, n={n}")
    oracle = mn_table(n)
    mismatches = [
        (str(table.partitions[a]), str(table.classes[b]), table.chi[a][b], oracle[a][b])
        for a in range(len(oracle))
        for b in range(len(oracle[a]))
        if table.chi[a][b] != oracle[a][b]
    ]
    report.add("matches Murnaghan-Nakayama oracle", not mismatches, str(mismatches[:3]) if mismatches else "")
    dims = [b.dim for b in all_bundles(n)]
    report.add("identity column equals dimensions", [r[0] for r in table.chi] == dims)
    report.add("row orthogonality", table.rows_orthogonal())
    report.add("column orthogonality", table.columns_orthogonal())
    return report
