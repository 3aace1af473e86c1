"""Command-line front end.

Commands: ``mine-mii``, ``mine-mlms``, ``check``, ``bench``, ``gen``.

Exit codes: 0 success, 1 check disagreement (or bench cross-check mismatch),
2 usage error, 3 I/O or input-format failure, 4 oracle guard violation.
"""

from __future__ import annotations

import argparse
import multiprocessing
import queue
import sys
import time
from dataclasses import dataclass, field

from .data import (
    FimiParseError,
    SupportThreshold,
    TransactionDatabase,
    read_fimi,
    to_fimi,
)
from .miners import MIIResult, MiningStats, mine_mii
from .mlms import MLMSResult, ThresholdVector, mine_mlms
from .oracle import OracleGuardError, SynthConfig, gen_synthetic

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_GUARD = 4

BENCH_CSV_HEADER = "dataset,algorithm,threshold,elapsed_ms,itemsets,peak_nodes"

MII_ALGORITHMS = ("ifp", "apriori", "oracle")


@dataclass
class RunSpec:
    """One fully-specified CLI invocation."""

    command: str
    input: str | None = None
    inputs: list[str] = field(default_factory=list)
    algorithm: str = "ifp"
    algorithms: list[str] = field(default_factory=list)
    min_sup: str | None = None
    thresholds: str | None = None
    fmt: str = "text"
    out: str | None = None
    jobs: int = 1
    timeout: float = 60.0
    items: int = 0
    transactions: int = 0
    density: float = 0.0
    seed: int = 0


@dataclass(frozen=True)
class BenchRecord:
    dataset: str
    algorithm: str
    threshold: str
    elapsed_ms: float
    itemsets: int
    peak_nodes: int

    def csv_row(self) -> str:
        return (
            f"{self.dataset},{self.algorithm},{self.threshold},"
            f"{self.elapsed_ms},{self.itemsets},{self.peak_nodes}"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifpmine",
        description="Minimally infrequent itemset mining and multi-level "
        "minimum support mining over FIMI transaction files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mii = sub.add_parser("mine-mii", help="mine minimally infrequent itemsets")
    mii.add_argument("--input", required=True, help="FIMI transaction file")
    mii.add_argument("--min-sup", required=True, help="threshold: count or percentage like 5%%")
    mii.add_argument("--algo", default="ifp", choices=MII_ALGORITHMS)
    mii.add_argument("--format", dest="fmt", default="text", choices=("text", "json"))
    mii.add_argument("--out", default=None, help="output file (default: stdout)")

    mlms = sub.add_parser("mine-mlms", help="mine frequent itemsets with per-length thresholds")
    mlms.add_argument("--input", required=True)
    mlms.add_argument("--thresholds", required=True, help='comma list, e.g. "4,4,3,2,1" or "10%%,8%%,5%%"')
    mlms.add_argument("--format", dest="fmt", default="text", choices=("text", "json"))
    mlms.add_argument("--out", default=None)

    check = sub.add_parser("check", help="cross-check ifp, apriori and the brute-force oracle")
    check.add_argument("--input", required=True)
    check.add_argument("--min-sup", required=True)

    bench = sub.add_parser("bench", help="threshold sweep, CSV on stdout")
    bench.add_argument("--inputs", required=True, nargs="+")
    bench.add_argument("--algos", default="ifp,apriori", help="comma list of ifp|apriori|oracle")
    bench.add_argument("--thresholds", required=True, help="comma list of counts or percentages")
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("--timeout", type=float, default=60.0, help="seconds per cell")

    gen = sub.add_parser("gen", help="write a synthetic FIMI dataset")
    gen.add_argument("--items", type=int, required=True)
    gen.add_argument("--transactions", type=int, required=True)
    gen.add_argument("--density", type=float, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True)

    return parser


def spec_from_args(ns: argparse.Namespace) -> RunSpec:
    return RunSpec(
        command=ns.command,
        input=getattr(ns, "input", None),
        inputs=list(getattr(ns, "inputs", [])),
        algorithm=getattr(ns, "algo", "ifp"),
        algorithms=[a for a in getattr(ns, "algos", "").split(",") if a.strip()],
        min_sup=getattr(ns, "min_sup", None),
        thresholds=getattr(ns, "thresholds", None),
        fmt=getattr(ns, "fmt", "text"),
        out=getattr(ns, "out", None),
        jobs=getattr(ns, "jobs", 1),
        timeout=getattr(ns, "timeout", 60.0),
        items=getattr(ns, "items", 0),
        transactions=getattr(ns, "transactions", 0),
        density=getattr(ns, "density", 0.0),
        seed=getattr(ns, "seed", 0),
    )


def _load_db(path: str) -> TransactionDatabase:
    return read_fimi(path)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _render(result: MIIResult | MLMSResult, fmt: str) -> str:
    return result.to_json() if fmt == "json" else result.to_text()


def _resolve_sigma(text: str, db: TransactionDatabase) -> int:
    return SupportThreshold.parse(text).resolve(len(db))


def _run_mine_mii(spec: RunSpec) -> int:
    db = _load_db(spec.input)
    sigma = _resolve_sigma(spec.min_sup, db)
    result = mine_mii(db, sigma, algorithm=spec.algorithm)
    _emit(_render(result, spec.fmt), spec.out)
    return EXIT_OK


def _run_mine_mlms(spec: RunSpec) -> int:
    db = _load_db(spec.input)
    tv = ThresholdVector.from_text(spec.thresholds, len(db))
    result = mine_mlms(db, tv)
    _emit(_render(result, spec.fmt), spec.out)
    return EXIT_OK


def _run_check(spec: RunSpec) -> int:
    db = _load_db(spec.input)
    sigma = _resolve_sigma(spec.min_sup, db)
    results = {algo: set(mine_mii(db, sigma, algorithm=algo).miis) for algo in MII_ALGORITHMS}
    reference = results["oracle"]
    ok = True
    for algo in ("ifp", "apriori"):
        diff = results[algo] ^ reference
        if diff:
            ok = False
            for s in sorted(diff):
                where = algo if s in results[algo] else "oracle"
                print(f"DISAGREE {algo} vs oracle: {' '.join(map(str, s))} only in {where}")
    if not ok:
        return EXIT_DISAGREEMENT
    print(f"OK: ifp, apriori and oracle agree on {len(reference)} itemsets at sigma={sigma}")
    return EXIT_OK


def _bench_worker(path: str, algo: str, threshold: str, out_queue) -> None:
    """Runs one bench cell in a child process so timeouts can be enforced."""
    try:
        db = read_fimi(path)
        sigma = SupportThreshold.parse(threshold).resolve(len(db))
        stats = MiningStats()
        t0 = time.perf_counter()
        result = mine_mii(db, sigma, algorithm=algo, stats=stats)
        elapsed_ms = (time.perf_counter() - t0) * 1000.0
        out_queue.put(("ok", round(elapsed_ms, 3), len(result.miis), stats.peak_nodes))
    except Exception as exc:  # reported by the parent, sweep continues
        out_queue.put(("error", f"{type(exc).__name__}: {exc}"))


def bench_sweep(
    datasets: list[str],
    algorithms: list[str],
    thresholds: list[str],
    jobs: int = 1,
    timeout: float = 60.0,
):
    """Run the full (dataset, algorithm, threshold) cross product and yield
    one record per cell in that deterministic order.

    Each cell runs in its own process; a cell that exceeds the timeout or
    fails is recorded with -1 in every measured column instead of aborting
    the sweep. Up to ``jobs`` cells run concurrently.
    """
    cells = [(d, a, t) for d in datasets for a in algorithms for t in thresholds]
    ctx = multiprocessing.get_context()
    running: list[tuple[int, multiprocessing.Process, object, float]] = []
    next_cell = 0

    def launch() -> None:
        nonlocal next_cell
        while next_cell < len(cells) and len(running) < max(1, jobs):
            q = ctx.Queue()
            p = ctx.Process(target=_bench_worker, args=(*cells[next_cell], q), daemon=True)
            p.start()
            running.append((next_cell, p, q, time.monotonic()))
            next_cell += 1

    launch()
    while running:
        idx, proc, q, started = running.pop(0)
        remaining = timeout - (time.monotonic() - started)
        msg = None
        try:
            msg = q.get(timeout=max(0.0, remaining))
        except queue.Empty:
            proc.terminate()
        proc.join()
        dataset, algo, threshold = cells[idx]
        if msg is not None and msg[0] == "ok":
            record = BenchRecord(dataset, algo, threshold, msg[1], msg[2], msg[3])
        else:
            if msg is not None and msg[0] == "error":
                print(f"bench cell failed ({dataset}, {algo}, {threshold}): {msg[1]}", file=sys.stderr)
            record = BenchRecord(dataset, algo, threshold, -1, -1, -1)
        launch()
        yield record


def cross_check_counts(records: list[BenchRecord]) -> list[tuple[str, str, list[int]]]:
    """Completed cells for the same (dataset, threshold) must agree on the
    itemset count regardless of algorithm; timed-out cells are skipped.
    Returns the offending (dataset, threshold, counts) groups."""
    counts: dict[tuple[str, str], set[int]] = {}
    for r in records:
        if r.itemsets >= 0:
            counts.setdefault((r.dataset, r.threshold), set()).add(r.itemsets)
    return [
        (dataset, threshold, sorted(seen))
        for (dataset, threshold), seen in counts.items()
        if len(seen) > 1
    ]


def _run_bench(spec: RunSpec) -> int:
    for algo in spec.algorithms:
        if algo not in MII_ALGORITHMS:
            print(f"unknown algorithm: {algo}", file=sys.stderr)
            return EXIT_USAGE
    for path in spec.inputs:
        # Fail fast before spending time on the sweep.
        with open(path, "r", encoding="ascii"):
            pass
    thresholds = [t for t in spec.thresholds.split(",") if t.strip()]
    records = []
    print(BENCH_CSV_HEADER)
    for record in bench_sweep(
        spec.inputs, spec.algorithms, thresholds, jobs=spec.jobs, timeout=spec.timeout
    ):
        records.append(record)
        print(record.csv_row())
        sys.stdout.flush()

    mismatches = cross_check_counts(records)
    for dataset, threshold, seen in mismatches:
        print(
            f"MISMATCH: itemset counts {seen} for {dataset} at {threshold}",
            file=sys.stderr,
        )
    return EXIT_DISAGREEMENT if mismatches else EXIT_OK


def _run_gen(spec: RunSpec) -> int:
    cfg = SynthConfig(
        num_items=spec.items,
        num_transactions=spec.transactions,
        density=spec.density,
        seed=spec.seed,
    )
    db = gen_synthetic(cfg)
    _emit(to_fimi(db), spec.out)
    return EXIT_OK


def run(spec: RunSpec) -> int:
    """Execute one command; returns the process exit code."""
    handlers = {
        "mine-mii": _run_mine_mii,
        "mine-mlms": _run_mine_mlms,
        "check": _run_check,
        "bench": _run_bench,
        "gen": _run_gen,
    }
    if spec.command not in handlers:
        print(f"unknown command: {spec.command}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return handlers[spec.command](spec)
    except OracleGuardError as exc:
        print(f"oracle guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except FimiParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"invalid arguments: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(spec_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
