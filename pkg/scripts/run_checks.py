#!/usr/bin/env python3
"""Run the bundled verification suite and print one line per check.

Usage:
    python scripts/run_checks.py [--level quick|full] [--only SUBSTR]
"""

import argparse
import sys
import time

from irrbase.verify import run_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", choices=["quick", "full"], default="quick")
    ap.add_argument("--only", default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    results = run_checks(level=args.level, only=args.only)
    for r in results:
        print(f"[{'PASS' if r['ok'] else 'FAIL'}] {r['name']}: {r['detail']}")
    ok = all(r["ok"] for r in results)
    print(
        f"{sum(r['ok'] for r in results)}/{len(results)} checks passed "
        f"in {time.perf_counter() - t0:.1f}s"
    )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
