"""Command-line interface: ``snreps <command> ...`` or ``python -m snreps``.

Exit codes: 0 success, 1 verification failure, 2 cost guard, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .characters import CharacterTable, character_table
from .perm import Permutation, all_permutations
from .projectors import MAX_EXPAND_N, irrep_bundle
from .report import CostGuardError, Report
from .representations import rep_matrix
from .tableaux import Partition, dimension, partitions, standard_tableaux

EXIT_OK, EXIT_FAIL, EXIT_COST, EXIT_USAGE = 0, 1, 2, 64
CACHE_ENV = "SNREPS_CACHE_DIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-dir", default=None, help=f"result cache (default ${CACHE_ENV} or ~/.cache/snreps)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--force", action="store_true", help="override cost guards")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="snreps", description="Reduced-entry irreducible representations of S_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("tableaux", help="standard tableaux of a shape, or dimensions of all shapes")
    p.add_argument("n", type=int)
    p.add_argument("partition", nargs="?")
    _common(p)

    p = sub.add_parser("gmatrix", help="g' and its inverse for one shape")
    p.add_argument("n", type=int)
    p.add_argument("partition")
    _common(p)

    p = sub.add_parser("rep", help="representation matrices x'(b)")
    p.add_argument("n", type=int)
    p.add_argument("partition")
    p.add_argument("perm", nargs="?", help='e.g. "[2 1 3]" or 213; omit for the whole group')
    p.add_argument("--conventional", action="store_true", help="also emit M(b) = x'(b) g'")
    _common(p)

    p = sub.add_parser("chartable", help="integer character table")
    p.add_argument("n", type=int)
    _common(p)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("n", type=int)
    p.add_argument("level", nargs="?", choices=("full", "sample"), default="full")
    _common(p)

    p = sub.add_parser("claims", help="structural and reduced-entry claim checks")
    p.add_argument("--nmax", type=int, default=7)
    _common(p)
    return parser


def _partition(n: int, text: str) -> Partition:
    try:
        lam = Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if lam.n != n:
        raise UsageError(f"partition {lam} does not sum to {n}")
    return lam


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError("n must be >= 1")


class Cache:
    def __init__(self, directory: str | None, enabled: bool = True):
        root = directory or os.environ.get(CACHE_ENV) or str(Path.home() / ".cache" / "snreps")
        self.root = Path(root)
        self.enabled = enabled

    def path(self, name: str) -> Path:
        return self.root / name

    def get(self, name: str):
        if not self.enabled:
            return None
        path = self.path(name)
        if path.is_file():
            return json.loads(path.read_text())
        return None

    def put(self, name: str, payload) -> None:
        if not self.enabled:
            return
        self.root.mkdir(parents=True, exist_ok=True)
        tmp = self.path(name + ".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True))
        tmp.replace(self.path(name))


def _cached(cache: Cache, name: str, compute):
    payload = cache.get(name)
    if payload is None:
        payload = compute()
        cache.put(name, payload)
    return payload


def _matrix_text(rows) -> str:
    if not rows:
        return "[]"
    width = max(len(str(x)) for r in rows for x in r)
    return "\n".join("  ".join(str(x).rjust(width) for x in r) for r in rows)


def _tableaux_payload(n: int, lam: Partition | None) -> dict:
    if lam is None:
        dims = [{"partition": str(p), "dim": dimension(p)} for p in partitions(n)]
        total = sum(d["dim"] ** 2 for d in dims)
        return {"n": n, "partitions": dims, "sumOfSquares": total, "factorial": math.factorial(n)}
    tabs = standard_tableaux(lam)
    return {
        "n": n,
        "partition": str(lam),
        "tableaux": [
            {"index": k + 1, "tableau": str(t), "sequence": " ".join(map(str, t.reading_sequence()))}
            for k, t in enumerate(tabs)
        ],
    }


def _tableaux_text(payload: dict) -> str:
    if "tableaux" not in payload:
        lines = [f"{d['partition']:>16}  dim {d['dim']}" for d in payload["partitions"]]
        ok = payload["sumOfSquares"] == payload["factorial"]
        lines.append(f"sum of dim^2 = {payload['sumOfSquares']} {'=' if ok else '!='} {payload['n']}! = {payload['factorial']}")
        return "\n".join(lines)
    lines = [f"shape {payload['partition']}: {len(payload['tableaux'])} standard tableaux"]
    for t in payload["tableaux"]:
        lines.append(f"T{t['index']}: {t['tableau']}   [{t['sequence']}]")
    return "\n".join(lines)


def _gmatrix_payload(lam: Partition) -> dict:
    return irrep_bundle(lam).to_dict()


def _gmatrix_text(payload: dict) -> str:
    return (
        f"n={payload['n']} partition={payload['partition']} dim={payload['dim']} scale={payload['scale']}\n"
        f"g' =\n{_matrix_text(payload['gPrime'])}\n"
        f"g'^-1 =\n{_matrix_text(payload['gPrimeInverse'])}"
    )


def _rep_payload(lam: Partition, perms, conventional: bool) -> dict:
    bundle = irrep_bundle(lam)
    mats = []
    for b in perms:
        r = rep_matrix(bundle, b)
        entry = {"perm": str(b), "x": r.x_reduced.tolist()}
        if conventional:
            entry["m"] = r.conventional.tolist()
        mats.append(entry)
    return {"n": bundle.n, "partition": str(lam), "gPrime": bundle.g_reduced.tolist(), "matrices": mats}


def _rep_text(payload: dict) -> str:
    lines = [f"n={payload['n']} partition={payload['partition']}"]
    for m in payload["matrices"]:
        lines.append(f"x'{m['perm']} =")
        lines.append(_matrix_text(m["x"]))
        if "m" in m:
            lines.append(f"M{m['perm']} =")
            lines.append(_matrix_text(m["m"]))
    return "\n".join(lines)


def _chartable_text(payload: dict) -> str:
    from .perm import CycleType

    table = CharacterTable(
        n=payload["n"],
        partitions=tuple(Partition.parse(r["partition"]) for r in payload["rows"]),
        classes=tuple(CycleType(int(x) for x in c["cycleType"].split(",")) for c in payload["classes"]),
        sizes=tuple(c["size"] for c in payload["classes"]),
        chi=tuple(tuple(r["chi"]) for r in payload["rows"]),
    )
    return table.to_text()


def _emit(args, payload, text_fn) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text_fn(payload))


def _run(args) -> int:
    cache = Cache(args.cache_dir, enabled=not args.no_cache)
    cmd = args.command

    if cmd == "claims":
        from .checks import claims

        if args.nmax > 8 and not args.force:
            raise CostGuardError("claims scan limited to n <= 8 (use --force)")
        report = claims(args.nmax, seed=args.seed, jobs=args.jobs)
        _emit(args, report.to_dict(), lambda _: report.summary())
        return EXIT_OK if report.passed else EXIT_FAIL

    _check_n(args.n)
    n = args.n

    if cmd == "tableaux":
        lam = _partition(n, args.partition) if args.partition else None
        name = f"tableaux_{n}" + (f"_{lam.dashed()}" if lam else "") + ".json"
        payload = _cached(cache, name, lambda: _tableaux_payload(n, lam))
        _emit(args, payload, _tableaux_text)
        return EXIT_OK

    if cmd == "gmatrix":
        lam = _partition(n, args.partition)
        payload = _cached(cache, f"g_{n}_{lam.dashed()}.json", lambda: _gmatrix_payload(lam))
        _emit(args, payload, _gmatrix_text)
        return EXIT_OK

    if cmd == "rep":
        lam = _partition(n, args.partition)
        suffix = "_m" if args.conventional else ""
        if args.perm:
            try:
                b = Permutation.parse(args.perm, n)
            except ValueError as exc:
                raise UsageError(f"invalid permutation {args.perm!r}: {exc}") from None
            name = f"rep_{n}_{lam.dashed()}_{'-'.join(map(str, b))}{suffix}.json"
            perms = [b]
        else:
            if n > MAX_EXPAND_N and not args.force:
                raise CostGuardError(f"listing all {n}! matrices is limited to n <= {MAX_EXPAND_N}")
            name = f"rep_{n}_{lam.dashed()}_all{suffix}.json"
            perms = all_permutations(n)
        payload = _cached(cache, name, lambda: _rep_payload(lam, perms, args.conventional))
        _emit(args, payload, _rep_text)
        return EXIT_OK

    if cmd == "chartable":
        payload = _cached(cache, f"chartable_{n}.json", lambda: character_table(n, force=args.force).to_dict())
        _emit(args, payload, _chartable_text)
        return EXIT_OK

    if cmd == "verify":
        from .checks import verify

        report: Report = verify(n, args.level, seed=args.seed, jobs=args.jobs, force=args.force)
        _emit(args, report.to_dict(), lambda _: report.summary())
        return EXIT_OK if report.passed else EXIT_FAIL

    raise UsageError(f"unknown command {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return _run(args)
    except UsageError as exc:
        print(f"snreps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CostGuardError as exc:
        print(f"snreps: cost guard: {exc}", file=sys.stderr)
        return EXIT_COST


if __name__ == "__main__":
    sys.exit(main())
