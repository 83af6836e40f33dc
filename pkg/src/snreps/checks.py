"""Verification suites and structural claim checks, as deterministic reports.

Per-partition work can run in a process pool; results are always gathered
in canonical partition order and every random sample is seeded from
(seed, suite, partition), so the report does not depend on the schedule.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from .characters import MAX_UNITS_N, class_constancy_violations, verify_characters, verify_units
from .projectors import (
    MAX_FULL_N,
    MAX_SAMPLE_N,
    coordinate_agreement,
    first_where,
    irrep_bundle,
    structure_scan,
    verify_projector_relations,
)
from .report import CostGuardError, Report, describe_failures
from .representations import MAX_DUALITY_N, reduced_entry_scan, verify_duality, verify_homomorphism
from .tableaux import partitions

HOMOMORPHISM_TRIALS = 500
AGREEMENT_SAMPLES = 10_000
REDUCED_SAMPLES = 1000


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _agreement_task(args):
    shape, samples, seed = args
    return coordinate_agreement(irrep_bundle(shape), samples=samples, seed=seed)


def _homomorphism_task(args):
    shape, trials, seed = args
    return verify_homomorphism(irrep_bundle(shape), trials=trials, seed=seed)


def _reduced_task(args):
    shape, samples, seed = args
    return reduced_entry_scan(irrep_bundle(shape), samples=samples, seed=seed)


def _constancy_task(shape):
    return class_constancy_violations(irrep_bundle(shape))


def reduced_entry_checks(n: int, samples: int | None, seed: int = 0, jobs: int = 1) -> Report:
    """y must be reduced (a verification check); x' and M are measured as claims."""
    shapes = partitions(n)
    scans = _pmap(_reduced_task, [(s, samples, seed) for s in shapes], jobs)
    how = "all" if samples is None else f"{samples} sampled"
    report = Report(f"reduced entries, n={n}")
    for shape, scan in zip(shapes, scans):
        report.add(f"y(b) in {{-1,0,1}}, shape {shape}, {how} b", not scan["y_violations"], describe_failures(scan["y_violations"]))
        report.add(
            f"M(b) = x'(b)g' in {{-1,0,1}}, shape {shape}, {how} b",
            not scan["m_violations"],
            describe_failures(scan["m_violations"]),
            kind="claim",
        )
        report.add(
            f"x'(b) in {{-1,0,1}}, shape {shape}, {how} b",
            not scan["x_violations"],
            describe_failures(scan["x_violations"]),
            kind="claim",
        )
    return report


def structural_claims(nmax: int) -> Report:
    """First non-diagonal g' and first non-reduced g'^-1 up to ``nmax``."""
    scan = structure_scan(nmax)
    report = Report(f"structural claims, n <= {nmax}")
    for row in scan:
        if row["n"] <= 4:
            report.add(
                f"g' diagonal, n={row['n']} ({row['partition']})",
                row["gDiagonal"],
                "" if row["gDiagonal"] else "non-diagonal",
                kind="claim",
            )
    if nmax >= 5:
        first = first_where(scan, lambda r: not r["gDiagonal"])
        where = f"n={first['n']} ({first['partition']})" if first else "none"
        report.add(
            "first non-diagonal g' is n=5 (3,2)",
            bool(first) and first["n"] == 5 and first["partition"] == "3,2",
            f"measured: {where}",
            kind="claim",
        )
    if nmax >= 7:
        small = [r for r in scan if r["n"] <= 6 and not r["gInverseReduced"]]
        report.add(
            "g'^-1 reduced for every partition with n <= 6",
            not small,
            describe_failures([f"n={r['n']} ({r['partition']})" for r in small]),
            kind="claim",
        )
        target = next(r for r in scan if r["n"] == 7 and r["partition"] == "3,2,2")
        first = first_where(scan, lambda r: not r["gInverseReduced"])
        where = f"n={first['n']} ({first['partition']})" if first else f"none for n <= {nmax}"
        report.add(
            "g'^-1 for n=7 (3,2,2) has an entry outside {-1,0,1}",
            not target["gInverseReduced"],
            f"max |entry| = {target['gInverseMaxAbs']}; first non-reduced g'^-1 measured: {where}",
            kind="claim",
        )
    return report


def verify(n: int, level: str = "full", seed: int = 0, jobs: int = 1, force: bool = False) -> Report:
    """Run every suite that fits the cost budget for (n, level)."""
    if level not in ("full", "sample"):
        raise ValueError("level must be 'full' or 'sample'")
    limit = MAX_FULL_N if level == "full" else MAX_SAMPLE_N
    if n > limit and not force:
        raise CostGuardError(f"verify at level {level!r} is limited to n <= {limit} (use --force)")
    exhaustive = level == "full"
    shapes = partitions(n)
    report = Report(f"verify n={n} level={level} seed={seed}")

    from .tableaux import dimension

    total = sum(dimension(s) ** 2 for s in shapes)
    report.add("sum of squared dimensions = n!", total == math.factorial(n), f"{total} vs {math.factorial(n)}")

    report.extend(verify_projector_relations(n, level=level, seed=seed, force=force))

    per_shape = None if exhaustive else max(1, -(-AGREEMENT_SAMPLES // len(shapes)))
    agreements = _pmap(_agreement_task, [(s, per_shape, seed) for s in shapes], jobs)
    for shape, bad in zip(shapes, agreements):
        how = "exhaustive" if exhaustive else f"{per_shape} samples"
        report.add(f"coordinates vs brute force, shape {shape}, {how}", not bad, describe_failures(bad))

    trials = None if exhaustive else HOMOMORPHISM_TRIALS
    for sub in _pmap(_homomorphism_task, [(s, trials, seed) for s in shapes], jobs):
        report.extend(sub)

    if n <= (MAX_DUALITY_N if exhaustive else MAX_DUALITY_N - 1):
        report.extend(verify_duality(n, seed=seed))
    if n <= MAX_UNITS_N:
        report.extend(verify_units(n))

    report.extend(verify_characters(n))
    for shape, bad in zip(shapes, _pmap(_constancy_task, shapes, jobs)):
        report.add(f"unit coefficients constant on classes, shape {shape}", not bad, describe_failures(bad))

    report.extend(reduced_entry_checks(n, None if exhaustive else REDUCED_SAMPLES, seed, jobs))
    if n >= 5:
        report.extend(structural_claims(n))
    return report


def claims(nmax: int = 7, seed: int = 0, jobs: int = 1) -> Report:
    """Structural g' claims up to nmax plus reduced-entry claims (exhaustive to 6, sampled at 7)."""
    report = structural_claims(nmax)
    for n in range(1, min(nmax, 7) + 1):
        report.extend(reduced_entry_checks(n, None if n <= 6 else REDUCED_SAMPLES, seed, jobs))
    return report
