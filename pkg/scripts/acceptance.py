#!/usr/bin/env python3
"""Run the acceptance suite and print only the per-criterion verdict lines."""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

proc = subprocess.run(
    [sys.executable, "-m", "pytest", "-q", "-s", str(ROOT / "tests" / "test_acceptance.py")],
    capture_output=True, text=True, cwd=ROOT,
)
lines = [ln for ln in proc.stdout.splitlines() if ln.startswith(("PASS criterion", "FAIL criterion"))]
print("\n".join(lines) or proc.stdout)
sys.exit(proc.returncode)
