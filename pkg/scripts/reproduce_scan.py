#!/usr/bin/env python3
"""
Regenerate the sign-scan data: CSV and SVG for odd r in [17, 301].

This script:
1. Computes (1 - A^4) I_r(M) exactly for every odd r in range
2. Cross-checks each value against the Gauss-sum route
3. Writes scan.csv and scan.svg into the output directory (default: out/)

Usage:
    python scripts/reproduce_scan.py [OUTPUT_DIR]
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(project_root))

from app.core.config import PRECISION_BITS
from app.gauss import render_svg, sign_pattern_threshold, sign_scan, write_csv


def reproduce_scan(out_dir: Path, r_min: int = 17, r_max: int = 301) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    print(f"Scanning odd r in [{r_min}, {r_max}] at {PRECISION_BITS} bits...", flush=True)
    rows = sign_scan(r_min, r_max, PRECISION_BITS)

    with (out_dir / "scan.csv").open("w", encoding="utf-8", newline="") as fh:
        count = write_csv(rows, fh)
    (out_dir / "scan.svg").write_text(render_svg(rows), encoding="utf-8")

    worst_gap = max(row.route_gap for row in rows)
    threshold = sign_pattern_threshold(rows)
    print(f"Wrote {count} rows to {out_dir}/scan.csv and {out_dir}/scan.svg", flush=True)
    print(f"Largest gap between routes: {worst_gap:.3g}", flush=True)
    print(f"Sign pattern for r = 1, 9 mod 16 holds from r = {threshold}", flush=True)
    return 0 if threshold is not None else 1


if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else project_root / "out"
    sys.exit(reproduce_scan(target))
