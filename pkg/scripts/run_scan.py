"""Tabulate exp against dim over the catalog and flag divisibility failures.

    python3 scripts/run_scan.py [--family groups|twists|all] [--max-dim D] [--csv out.csv]
"""
import argparse
import csv
import sys
from dataclasses import dataclass

from hopfexp.cli import SCAN_FAMILIES, scan_rows
from hopfexp.exponent import ExponentConfig

COLUMNS = ["name", "family", "dim", "exp", "exp_divides_dim", "exp_divides_dim3", "semisimple_cosemisimple"]


@dataclass(frozen=True)
class ScanConfig:
    family: str = "all"
    max_dim: int | None = None
    csv_path: str | None = None


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--family", choices=sorted(SCAN_FAMILIES), default="all")
    p.add_argument("--max-dim", type=int)
    p.add_argument("--csv", dest="csv_path")
    cfg = ScanConfig(**vars(p.parse_args(argv)))

    rows = scan_rows(cfg.family, cfg.max_dim, ExponentConfig())
    writer = csv.DictWriter(open(cfg.csv_path, "w", newline="") if cfg.csv_path else sys.stdout,
                            fieldnames=COLUMNS, extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    bad = [r for r in rows if r["violations"]]
    for r in bad:
        print(f"violation: {r['name']}: {'; '.join(r['violations'])}", file=sys.stderr)
    print(f"{len(rows)} rows, {len(bad)} violations", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
