#!/usr/bin/env python3
"""Run the acceptance suite, printing one verdict line per criterion."""
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    sys.exit(
        subprocess.call(
            [sys.executable, "-m", "pytest", "-v", "-s", str(ROOT / "tests" / "test_acceptance.py")]
        )
    )
