#!/usr/bin/env python3
"""Regenerate golden/<command>/<case>.json from golden/cases.json.

Usage: tools/update_golden.py [path/to/sipot] [case ...]
"""

import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "golden"


def main(argv):
    binary = argv[1] if len(argv) > 1 else str(ROOT / "build" / "tools" / "sipot")
    wanted = set(argv[2:])
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for case, args in cases.items():
        if wanted and case not in wanted:
            continue
        proc = subprocess.run([binary, *args, "--output", "json"], capture_output=True, text=True)
        # compare/morse-printed-remainder documents a verification failure (exit 1)
        if proc.returncode not in (0, 1):
            sys.exit(f"{case}: exit {proc.returncode}\n{proc.stderr}")
        target = GOLDEN / f"{case}.json"
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(proc.stdout)
        print(f"{case}: exit {proc.returncode}")


if __name__ == "__main__":
    main(sys.argv)
