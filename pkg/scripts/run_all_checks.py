#!/usr/bin/env python3
"""Run the full verification suite and save the JSON report.

Usage:
    python scripts/run_all_checks.py [report_path]

Exit status mirrors the CLI: 0 when every check passes.
"""

import sys

from susyqm.cli import main

if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "verify_all.json"
    code = main(["verify", "all", "--output", target])
    print(f"report written to {target} (exit {code})")
    raise SystemExit(code)
