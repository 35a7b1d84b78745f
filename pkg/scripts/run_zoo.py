#!/usr/bin/env python3
"""Run every shipped scenario config and print a one-line summary per task.

Usage: python3 scripts/run_zoo.py [--out OUTDIR]
"""

import argparse
import sys
from pathlib import Path

from chaingeom.cli import load_config, run

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default="out", help="report output directory")
    args = parser.parse_args()
    failures = 0
    for cfg_path in sorted(CONFIG_DIR.glob("*.json")):
        config = load_config(str(cfg_path))
        report, all_pass = run(config, out_dir=args.out)
        wall = report["timing"]["wall_time_s"]
        print(f"== {cfg_path.stem}: {'PASS' if all_pass else 'FAIL'} ==")
        for task in report["tasks"]:
            print(f"   {task['name']:<18} {task['status']:<5} "
                  f"{wall.get(task['name'], 0):7.2f}s")
        failures += 0 if all_pass else 1
    print(f"\nreports written to {args.out}/")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
