#!/usr/bin/env python3
"""Exhaustive oracle-agreement sweep; writes a JSON report and prints a summary table."""
from __future__ import annotations

import argparse
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from toric_schubert.sweep import DEFAULT_TYPES, sweep


@dataclass
class SweepConfig:
    types: list[str] = field(default_factory=lambda: list(DEFAULT_TYPES))
    workers: int = 1
    boolean: bool = True
    table: bool = False
    out: str = "results/sweep.json"


def main() -> None:
    cfg = SweepConfig()
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--types", default=",".join(cfg.types))
    parser.add_argument("--workers", type=int, default=cfg.workers)
    parser.add_argument("--no-boolean", action="store_true")
    parser.add_argument("--table", action="store_true")
    parser.add_argument("--out", default=cfg.out)
    args = parser.parse_args()
    cfg = SweepConfig([t for t in args.types.split(",") if t], args.workers, not args.no_boolean, args.table, args.out)
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    started = time.perf_counter()
    reports = sweep(cfg.types, workers=cfg.workers, boolean=cfg.boolean)
    elapsed = time.perf_counter() - started

    rows = [r.to_dict(table=cfg.table) for r in reports]
    out = Path(cfg.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"config": asdict(cfg), "seconds": round(elapsed, 2), "types": rows}, indent=2))

    print(f"{'type':<5} {'elements':>8} {'instances':>9} {'smooth':>7} {'singular':>8} {'failures':>8}")
    for r in rows:
        print(f"{r['type']:<5} {r['elements']:>8} {r['instances']:>9} {r['smooth']:>7} {r['singular']:>8} {r['failures']:>8}")
    print(f"{sum(r['failures'] for r in rows)} failures in {elapsed:.1f}s; report at {out}")


if __name__ == "__main__":
    main()
