"""Threshold sweep over synthetic databases of varying density.

Generates three reproducible Bernoulli databases, sweeps the miners across
thresholds, and prints the same CSV the ``ifpmine bench`` command emits.
Timed-out or failed cells are recorded as -1 rather than aborting the sweep.

    python3 demos/04_synthetic_benchmark.py
"""

import tempfile
from pathlib import Path

from ifpmine import SynthConfig, gen_synthetic, to_fimi
from ifpmine.cli import BENCH_CSV_HEADER, bench_sweep

with tempfile.TemporaryDirectory() as workdir:
    paths = []
    for density in (0.1, 0.3, 0.5):
        cfg = SynthConfig(num_items=20, num_transactions=800, density=density, seed=42)
        path = Path(workdir) / f"synth_d{int(density * 100):02d}.fimi"
        path.write_text(to_fimi(gen_synthetic(cfg)))
        paths.append(str(path))

    print(BENCH_CSV_HEADER)
    for record in bench_sweep(
        datasets=paths,
        algorithms=["ifp", "apriori"],
        thresholds=["10%", "25%", "50%"],
        jobs=2,
        timeout=60.0,
    ):
        print(record.csv_row())
