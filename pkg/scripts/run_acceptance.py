#!/usr/bin/env python3
"""Run the acceptance checklist and stream its PASS/FAIL lines."""

import pathlib
import subprocess
import sys


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    cmd = [
        sys.executable, "-m", "pytest",
        str(root / "tests" / "test_acceptance.py"), "-s", "-q",
    ]
    return subprocess.call(cmd)


if __name__ == "__main__":
    sys.exit(main())
